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

#ifndef FLOWLAB_DIRACDISK_HPP_
#define FLOWLAB_DIRACDISK_HPP_

// The massive Dirac operator
//
//   H_t = -i sigma_r d/dr - (i/r) sigma_theta d/dtheta + t sigma_3
//
// on the disk of radius R with spectral (APS) boundary conditions defined by
// the boundary operator K_t. Angular momentum J = sigma_3/2 - i d/dtheta is
// conserved; each half-integer channel j reduces to a radial problem whose
// solutions are Bessel J (|E| > |t|, regular states), modified Bessel I
// (|E| < |t|, edge states) or powers of r (E = t = 0, zero modes).
//
// Boundary data in channel j are pairs (b_j, a_j) standing for the spinor
// (b_j e^{i(j-1/2)theta}, a_j e^{i(j+1/2)theta}).

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flowlab::diracdisk {

using Spinor = std::array<std::complex<double>, 2>;

// Angular channel: j = two_j / 2 (odd, nonzero), mass t, radius R > 0.
class Channel {
 public:
  Channel(int two_j, double t, double R);

  int two_j() const { return two_j_; }
  double j() const { return 0.5 * two_j_; }
  double t() const { return t_; }
  double R() const { return R_; }

  // Bessel orders j - 1/2 and j + 1/2.
  int lower_order() const { return (two_j_ - 1) / 2; }
  int upper_order() const { return (two_j_ + 1) / 2; }

  Channel with_t(double t) const { return Channel(two_j_, t, R_); }

 private:
  int two_j_;
  double t_;
  double R_;
};

// Boundary subspaces. minus/plus are the negative/positive spectral subspaces
// of K_t (t != 0); zero_plus/zero_minus are the lower-/upper-component
// subspaces used at t = 0.
enum class Sector { minus, plus, zero_plus, zero_minus };

const char* to_string(Sector s);

struct BoundaryEigenpair {
  double kappa = 0.0;   // eigenvalue of K_t
  double lambda = 0.0;  // eigenvalue of K_t - 1/(2R)
  Spinor vec{};         // normalized (b_j, a_j)
  Sector sector = Sector::minus;
};

struct KSpectrum {
  BoundaryEigenpair minus;
  BoundaryEigenpair plus;
};

// lambda = -+sqrt(j^2/R^2 + t^2), kappa = lambda + 1/(2R). For t != 0 the
// vectors are proportional to (-i t, j/R + lambda); for t = 0 they are the
// single-component eigenvectors of K_0.
KSpectrum k_spectrum(const Channel& channel);

// K_t restricted to channel j, acting on (b_j, a_j):
//   [[-(j - 1/2)/R, -i t], [i t, (j + 1/2)/R]].
std::array<Spinor, 2> boundary_operator(const Channel& channel);

// Normalized direction (b_j, a_j) of the boundary subspace selected by
// `sector` in this channel. For minus/plus this is continuous through t = 0,
// where it reduces to the zero-sector vector that the t -> 0 limit selects.
Spinor boundary_direction(const Channel& channel, Sector sector);

// Zero-mode boundary choice reached by the t -> 0 limit of `sector`
// (minus: zero_minus for j > 0, zero_plus for j < 0; plus: the opposite).
Sector zero_limit(Sector sector, int two_j);

enum class StateClass { edge, regular, zero_mode };
enum class RadialKind { bessel_j, bessel_i, power };

const char* to_string(StateClass c);

struct EigenState {
  Channel channel{1, 0.0, 1.0};
  double energy = 0.0;
  StateClass state_class = StateClass::regular;
  Sector sector = Sector::minus;
  RadialKind radial_kind = RadialKind::bessel_j;
  double normalization = 1.0;  // real positive constant giving unit disk L2 norm
};

// Pole-free edge-state residual for |E| < |t|, eps = sqrt(t^2 - E^2):
//   minus: |t| sqrt|t+E| I_{j-1/2}(eps R) - (j/R + h) sqrt|t-E| I_{j+1/2}(eps R)
//   plus:  |t| sqrt|t+E| I_{j-1/2}(eps R) + (h - j/R) sqrt|t-E| I_{j+1/2}(eps R)
// with h = sqrt(j^2/R^2 + t^2). Throws DomainError if |E| >= |t| or t = 0.
double edge_residual(double energy, const Channel& channel, Sector sector);

// Edge state of the channel, if any. Scans the open interval
// (-|t| + delta, |t| - delta) and refines a bracketed sign change by bisection
// to |dE| < 1e-12. Throws MultipleRootError on more than one sign change and
// DomainError for t = 0.
std::optional<EigenState> edge_solve(const Channel& channel, Sector sector);

// Pole-free regular-state residual for |E| > |t|, beta = sqrt(E^2 - t^2):
//   a sqrt|E+t| J_{j-1/2}(beta R) - sgn(E) b sqrt|E-t| J_{j+1/2}(beta R)
// where (-i b, a) spans the sector's boundary direction. For the minus sector
// with j > 0 this is
//   -t sqrt(E+t) J_{j-1/2}(beta R) - (j/R + h) sqrt(E-t) J_{j+1/2}(beta R)  (E > 0).
// Throws DomainError if |E| <= |t|.
double regular_residual(double energy, const Channel& channel, Sector sector);

struct RegularSolveResult {
  std::vector<EigenState> states;
  std::vector<std::string> warnings;
  double scan_step = 0.0;
};

// All regular states with E in [e_min, e_max]; the window must not meet
// [-|t|, |t|]. Uniform scan (width / 2048, halved up to 4 times when two roots
// fall within two steps) plus bisection.
RegularSolveResult regular_solve(const Channel& channel, Sector sector, double e_min, double e_max);

// Zero mode at t = 0: (0, c r^{-(j+1/2)} e^{i(j+1/2)theta}) for j < 0 with
// zero_plus, (c r^{j-1/2} e^{i(j-1/2)theta}, 0) for j > 0 with zero_minus;
// none for the mismatched choices. Throws DomainError unless t == 0 and the
// choice is a zero sector.
std::optional<EigenState> zero_mode(const Channel& channel, Sector boundary_choice);

// Radial profile (phi^-(r), phi^+(r)) including the normalization. No domain
// check on r, so callers may evaluate slightly outside [0, R].
Spinor radial_profile(const EigenState& state, double r);

// Phi(r, theta). Throws DomainError for r outside [0, R].
Spinor wavefunction(const EigenState& state, double r, double theta);

// Residuals of the two coupled radial equations at r, with derivatives taken
// by a fourth-order central difference of step h, divided by
// |phi^-(r)| + |phi^+(r)|. Returns the larger of the two.
double radial_ode_residual(const EigenState& state, double r, double h);

// |A a - B b| / (|(A, B)| |(b, a)|) between the boundary value (A, B) of the
// state at r = R and the boundary direction (b, a) of its sector. Zero means
// the state satisfies its boundary condition exactly.
double boundary_misalignment(const EigenState& state);

struct Observables {
  double sigma_r_avg = 0.0;
  double sigma_theta_avg = 0.0;
  double orbital_avg = 0.0;  // <-i d/dtheta>
};

// Expectation values on the boundary circle r = R, normalized by the boundary
// norm of the state.
Observables observables(const EigenState& state);

struct BranchPoint {
  double t = 0.0;
  double energy = 0.0;
  StateClass state_class = StateClass::regular;
};

struct Crossing {
  double t_star = 0.0;
  int direction = 0;  // +1: E increases through 0 as t increases
};

struct SpectrumBranch {
  int two_j = 1;
  Sector sector = Sector::minus;
  std::vector<BranchPoint> points;
  std::vector<Crossing> crossing_record;
  std::vector<double> touches;  // t where the branch touches E = 0 without crossing
};

struct SweepResult {
  std::vector<SpectrumBranch> branches;
  std::vector<std::string> warnings;
};

struct EnergyWindow {
  double min = -12.0;
  double max = 12.0;
};

// Edge, zero-mode and regular states on every t of the grid, joined into
// branches by nearest-neighbour continuation. At t = 0 the zero mode of the
// limiting boundary choice stands in for the edge state.
SweepResult spectrum_sweep(int two_j, double R, std::span<const double> t_grid,
                           EnergyWindow window, Sector sector);

// Net number of branches crossing E = 0 upwards as t increases. Throws
// AmbiguousCrossingError if any branch touches zero without crossing.
int spectral_flow(std::span<const SpectrumBranch> branches);

// Tolerance used to decide that a branch point sits on E = 0.
inline constexpr double kZeroCrossingTolerance = 1e-9;

}  // namespace flowlab::diracdisk

#endif  // FLOWLAB_DIRACDISK_HPP_
