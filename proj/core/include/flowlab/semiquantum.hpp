// Copyright 2026 The flowlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLOWLAB_SEMIQUANTUM_HPP_
#define FLOWLAB_SEMIQUANTUM_HPP_

// Two-level semi-quantum Hamiltonians H = d(t, x) . sigma over the plane or a
// sphere: eigenvalues, "up"/"down" eigenvector gauges, winding numbers of
// gauge exceptional points, local delta-Chern invariants, and a lattice Chern
// number (link-variable method) on the sphere.

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace flowlab::semiquantum {

using Point = std::array<double, 3>;    // (p1, p2, 0) on the plane, (Jx, Jy, Jz) on the sphere
using DVector = std::array<double, 3>;  // (d1, d2, d3)
using Spinor = std::array<std::complex<double>, 2>;

enum class Manifold { plane, sphere };
enum class Band { upper, lower };  // E+ and E-
enum class Gauge { up, down };
enum class Orientation { clockwise, counterclockwise };

// A control-parameter family of traceless Hermitian 2x2 matrices
//   [[d3, d1 - i d2], [d1 + i d2, -d3]]
// over a parameter manifold.
class DVectorField {
 public:
  using Function = std::function<DVector(double t, const Point& x)>;

  DVectorField(Function f, Manifold manifold, double sphere_radius = 0.0);

  // d = (p1, p2, t): off-diagonal element p1 - i p2, diagonal +-t.
  static DVectorField local_model();

  // d = (Jx, -Jy, t + Jz - J) on the sphere of radius J; degenerate only at
  // t = 0 (north pole) and t = 2J (south pole).
  static DVectorField sphere_model(double J);

  DVector operator()(double t, const Point& x) const { return f_(t, x); }
  Manifold manifold() const { return manifold_; }
  double sphere_radius() const { return sphere_radius_; }

  // Throws DomainError unless x lies on the manifold.
  void check_point(const Point& x) const;

 private:
  Function f_;
  Manifold manifold_;
  double sphere_radius_;
};

struct Energies {
  double lower = 0.0;  // E- = -|d|
  double upper = 0.0;  // E+ = +|d|
};

Energies eigenvalues(const DVectorField& field, double t, const Point& x);

struct EigVec2 {
  Spinor components{};
  Gauge gauge = Gauge::up;
  Band band = Band::upper;
  double energy = 0.0;
  double norm_residual = 0.0;  // ||(d.sigma) v - E v||
};

// up gauge: (d1 - i d2, E - d3) / N_up; down gauge: (E + d3, d1 + i d2) / N_down.
// Throws GaugeSingularError when the chosen normalization is below 1e-14.
EigVec2 eigenvector(const DVectorField& field, double t, const Point& x, Band band, Gauge gauge);

struct WindingResult {
  int winding = 0;
  double circle_radius = 0.0;
  Orientation orientation = Orientation::clockwise;
  int samples = 0;
  double accumulated_turns = 0.0;  // total phase / 2 pi before rounding
  Gauge reference_gauge = Gauge::up;
};

// Winding of the gauge section around a plane circle traversed clockwise.
// The phase tracked is that of <u_ref | u_gauge>, where u_ref is whichever of
// the two gauges is regular at the circle center. Near an exceptional point
// of the chosen gauge this is the phase of its first component (up) or second
// component (down); when the chosen gauge is itself regular the winding is 0.
// Throws SingularSampleError for samples within 1e-12 of a degeneracy and
// NonIntegerWindingError if the total phase is more than 1e-4 turns off an
// integer.
WindingResult winding_number(const DVectorField& field, double t, const Point& center,
                             double radius, Band band, Gauge gauge, int samples = 256);

struct DeltaChernOptions {
  Point center{0.0, 0.0, 0.0};
  double radius = 0.1;
  int samples = 256;
};

// -(W(t_plus) - W(t_minus)); requires t_minus < 0 < t_plus.
int delta_chern(const DVectorField& field, Band band, Gauge gauge, double t_minus, double t_plus,
                const DeltaChernOptions& options = {});

struct SphereGrid {
  int n_theta = 64;
  int n_phi = 64;
};

struct ChernResult {
  Band band = Band::upper;
  int chern = 0;
  double plaquette_flux_max = 0.0;
};

// Link-variable lattice Chern number of the chosen eigen-line bundle on a
// regular (theta, phi) grid, plaquettes positively oriented with respect to
// the outward normal and pole plaquettes closed into triangles. The sum of
// plaquette phases arg(U12 U23 U34 U41), U_ab = <u_a|u_b>, divided by 2 pi.
// Throws DegeneracyError if min |d| < 1e-10 and UnreliableGridError if some
// plaquette flux exceeds pi/2.
ChernResult chern_sphere(const DVectorField& field, double t, Band band, SphereGrid grid = {});

// Vertex coordinates of the grid used by chern_sphere, exposed for
// independent checks: index 0 is the north pole, then rings of n_phi points
// for theta_i = pi i / n_theta (i = 1 .. n_theta - 1), then the south pole.
std::vector<Point> sphere_grid_vertices(double radius, SphereGrid grid);

}  // namespace flowlab::semiquantum

#endif  // FLOWLAB_SEMIQUANTUM_HPP_
