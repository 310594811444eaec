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

#include "flowlab/semiquantum.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "flowlab/errors.hpp"

namespace flowlab::semiquantum {
namespace {

using cd = std::complex<double>;

constexpr double kGaugeSingularThreshold = 1e-14;
constexpr double kSampleDegeneracyThreshold = 1e-12;
constexpr double kChernDegeneracyThreshold = 1e-10;
constexpr double kIntegerTolerance = 1e-4;
constexpr int kMinWindingSamples = 64;
constexpr int kMinSphereGrid = 24;

double norm3(const DVector& d) { return std::hypot(d[0], d[1], d[2]); }

double band_energy(const DVector& d, Band band) {
  const double e = norm3(d);
  return band == Band::upper ? e : -e;
}

// Unnormalized gauge vector and its norm.
std::pair<Spinor, double> raw_gauge_vector(const DVector& d, double energy, Gauge gauge) {
  Spinor v{};
  if (gauge == Gauge::up) {
    v = {cd(d[0], -d[1]), cd(energy - d[2], 0.0)};
  } else {
    v = {cd(energy + d[2], 0.0), cd(d[0], d[1])};
  }
  const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  return {v, n};
}

Spinor apply_hamiltonian(const DVector& d, const Spinor& v) {
  return {d[2] * v[0] + cd(d[0], -d[1]) * v[1], cd(d[0], d[1]) * v[0] - d[2] * v[1]};
}

cd inner(const Spinor& a, const Spinor& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

// Normalized eigenvector in whichever gauge is better conditioned at d.
Spinor regular_eigenvector(const DVector& d, Band band) {
  const double e = band_energy(d, band);
  auto [up, n_up] = raw_gauge_vector(d, e, Gauge::up);
  auto [down, n_down] = raw_gauge_vector(d, e, Gauge::down);
  if (n_up >= n_down) return {up[0] / n_up, up[1] / n_up};
  return {down[0] / n_down, down[1] / n_down};
}

const char* band_name(Band b) { return b == Band::upper ? "E+" : "E-"; }

}  // namespace

DVectorField::DVectorField(Function f, Manifold manifold, double sphere_radius)
    : f_(std::move(f)), manifold_(manifold), sphere_radius_(sphere_radius) {
  if (!f_) throw DomainError("DVectorField: empty evaluation function");
  if (manifold_ == Manifold::sphere && !(sphere_radius_ > 0.0)) {
    throw DomainError("DVectorField: sphere radius must be positive");
  }
}

DVectorField DVectorField::local_model() {
  return DVectorField([](double t, const Point& p) { return DVector{p[0], p[1], t}; },
                      Manifold::plane);
}

DVectorField DVectorField::sphere_model(double J) {
  return DVectorField(
      [J](double t, const Point& x) { return DVector{x[0], -x[1], t + x[2] - J}; },
      Manifold::sphere, J);
}

void DVectorField::check_point(const Point& x) const {
  if (manifold_ == Manifold::plane) {
    if (x[2] != 0.0) throw DomainError("plane point must have zero third coordinate");
    return;
  }
  const double r = norm3(x);
  if (std::fabs(r - sphere_radius_) > 1e-9 * sphere_radius_) {
    throw DomainError("point is not on the sphere of radius " + std::to_string(sphere_radius_));
  }
}

Energies eigenvalues(const DVectorField& field, double t, const Point& x) {
  field.check_point(x);
  const double e = norm3(field(t, x));
  return {-e, e};
}

EigVec2 eigenvector(const DVectorField& field, double t, const Point& x, Band band, Gauge gauge) {
  field.check_point(x);
  const DVector d = field(t, x);
  const double e = band_energy(d, band);
  auto [v, n] = raw_gauge_vector(d, e, gauge);
  if (n < kGaugeSingularThreshold) {
    throw GaugeSingularError(std::string("eigenvector: ") + (gauge == Gauge::up ? "up" : "down") +
                             " gauge is singular for band " + band_name(band) +
                             " at this point (exceptional point)");
  }
  EigVec2 out;
  out.components = {v[0] / n, v[1] / n};
  out.gauge = gauge;
  out.band = band;
  out.energy = e;
  const Spinor hv = apply_hamiltonian(d, out.components);
  out.norm_residual = std::sqrt(std::norm(hv[0] - e * out.components[0]) +
                                std::norm(hv[1] - e * out.components[1]));
  return out;
}

WindingResult winding_number(const DVectorField& field, double t, const Point& center,
                             double radius, Band band, Gauge gauge, int samples) {
  if (field.manifold() != Manifold::plane) {
    throw DomainError("winding_number: only plane fields are supported");
  }
  if (samples < kMinWindingSamples) {
    throw DomainError("winding_number: need at least 64 samples");
  }
  if (!(radius > 0.0)) throw DomainError("winding_number: radius must be positive");
  field.check_point(center);

  const DVector d0 = field(t, center);
  if (norm3(d0) < kSampleDegeneracyThreshold) {
    throw DomainError("winding_number: circle center is a degeneracy point; winding undefined");
  }
  const Gauge other = gauge == Gauge::up ? Gauge::down : Gauge::up;
  const double n_self = raw_gauge_vector(d0, band_energy(d0, band), gauge).second;
  const double n_other = raw_gauge_vector(d0, band_energy(d0, band), other).second;
  const Gauge reference = n_self >= n_other ? gauge : other;

  auto overlap_at = [&](int k) {
    const double angle = -2.0 * std::numbers::pi * k / samples;  // clockwise
    const Point p{center[0] + radius * std::cos(angle), center[1] + radius * std::sin(angle), 0.0};
    const DVector d = field(t, p);
    if (norm3(d) < kSampleDegeneracyThreshold) {
      throw SingularSampleError("winding_number: sample within 1e-12 of a degeneracy");
    }
    const double e = band_energy(d, band);
    auto [u, nu] = raw_gauge_vector(d, e, gauge);
    auto [r, nr] = raw_gauge_vector(d, e, reference);
    if (nu < kGaugeSingularThreshold || nr < kGaugeSingularThreshold) {
      throw SingularSampleError("winding_number: gauge singular on the sampling circle");
    }
    return inner(r, u) / (nu * nr);
  };

  double total = 0.0;
  cd previous = overlap_at(0);
  const cd first = previous;
  for (int k = 1; k <= samples; ++k) {
    const cd current = k == samples ? first : overlap_at(k);
    total += std::arg(current / previous);
    previous = current;
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::fabs(turns - rounded) > kIntegerTolerance) {
    throw NonIntegerWindingError("winding_number: accumulated phase is " + std::to_string(turns) +
                                 " turns, not an integer");
  }
  WindingResult out;
  out.winding = static_cast<int>(rounded);
  out.circle_radius = radius;
  out.orientation = Orientation::clockwise;
  out.samples = samples;
  out.accumulated_turns = turns;
  out.reference_gauge = reference;
  return out;
}

int delta_chern(const DVectorField& field, Band band, Gauge gauge, double t_minus, double t_plus,
                const DeltaChernOptions& options) {
  if (!(t_minus < 0.0 && t_plus > 0.0)) {
    throw DomainError("delta_chern: need t_minus < 0 < t_plus");
  }
  const int w_minus =
      winding_number(field, t_minus, options.center, options.radius, band, gauge, options.samples)
          .winding;
  const int w_plus =
      winding_number(field, t_plus, options.center, options.radius, band, gauge, options.samples)
          .winding;
  return -(w_plus - w_minus);
}

std::vector<Point> sphere_grid_vertices(double radius, SphereGrid grid) {
  std::vector<Point> v;
  v.reserve(2 + static_cast<std::size_t>(grid.n_theta - 1) * grid.n_phi);
  v.push_back({0.0, 0.0, radius});
  for (int i = 1; i < grid.n_theta; ++i) {
    const double theta = std::numbers::pi * i / grid.n_theta;
    for (int k = 0; k < grid.n_phi; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / grid.n_phi;
      v.push_back({radius * std::sin(theta) * std::cos(phi),
                   radius * std::sin(theta) * std::sin(phi), radius * std::cos(theta)});
    }
  }
  v.push_back({0.0, 0.0, -radius});
  return v;
}

ChernResult chern_sphere(const DVectorField& field, double t, Band band, SphereGrid grid) {
  if (field.manifold() != Manifold::sphere) {
    throw DomainError("chern_sphere: field must live on a sphere");
  }
  if (grid.n_theta < kMinSphereGrid || grid.n_phi < kMinSphereGrid) {
    throw DomainError("chern_sphere: grid must be at least 24x24");
  }
  const std::vector<Point> vertices = sphere_grid_vertices(field.sphere_radius(), grid);
  std::vector<Spinor> states;
  states.reserve(vertices.size());
  double min_gap = std::numeric_limits<double>::infinity();
  for (const Point& x : vertices) {
    const DVector d = field(t, x);
    min_gap = std::min(min_gap, norm3(d));
    states.push_back(regular_eigenvector(d, band));
  }
  if (min_gap < kChernDegeneracyThreshold) {
    throw DegeneracyError("chern_sphere: field is degenerate on the grid at t = " +
                          std::to_string(t));
  }

  const int north = 0;
  const int south = static_cast<int>(vertices.size()) - 1;
  auto ring = [&](int i, int k) { return 1 + (i - 1) * grid.n_phi + (k % grid.n_phi); };

  double total = 0.0;
  double flux_max = 0.0;
  auto add_loop = [&](std::initializer_list<int> loop) {
    cd product(1.0, 0.0);
    const int* ids = loop.begin();
    const std::size_t n = loop.size();
    for (std::size_t a = 0; a < n; ++a) {
      const cd link = inner(states[ids[a]], states[ids[(a + 1) % n]]);
      product *= link / std::abs(link);
    }
    const double flux = std::arg(product);
    total += flux;
    flux_max = std::max(flux_max, std::fabs(flux));
  };

  for (int k = 0; k < grid.n_phi; ++k) {
    add_loop({north, ring(1, k), ring(1, k + 1)});
    for (int i = 1; i + 1 < grid.n_theta; ++i) {
      add_loop({ring(i, k), ring(i + 1, k), ring(i + 1, k + 1), ring(i, k + 1)});
    }
    add_loop({ring(grid.n_theta - 1, k), south, ring(grid.n_theta - 1, k + 1)});
  }

  if (flux_max > std::numbers::pi / 2) {
    throw UnreliableGridError("chern_sphere: plaquette flux " + std::to_string(flux_max) +
                              " exceeds pi/2; refine the grid");
  }
  ChernResult out;
  out.band = band;
  out.chern = static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
  out.plaquette_flux_max = flux_max;
  return out;
}

}  // namespace flowlab::semiquantum
