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

#include "flowlab/diracdisk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "flowlab/errors.hpp"
#include "flowlab/specfun.hpp"
#include "numerics.hpp"

namespace flowlab::diracdisk {
namespace {

using cd = std::complex<double>;
using specfun::BesselOrder;

constexpr int kEdgeScanIntervals = 2048;
constexpr int kRegularScanIntervals = 2048;
constexpr int kMaxScanHalvings = 4;
constexpr int kObservableSamples = 64;

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// cp = j/R + h and cm = h - j/R with h = sqrt(j^2/R^2 + t^2); cp * cm = t^2.
// The smaller of the two is formed as t^2 / larger.
struct Coefficients {
  double jr = 0.0;
  double h = 0.0;
  double cp = 0.0;
  double cm = 0.0;
};

Coefficients coefficients(const Channel& ch) {
  Coefficients c;
  c.jr = ch.j() / ch.R();
  c.h = std::hypot(c.jr, ch.t());
  const double t2 = ch.t() * ch.t();
  if (c.jr > 0.0) {
    c.cp = c.jr + c.h;
    c.cm = t2 / c.cp;
  } else {
    c.cm = c.h - c.jr;
    c.cp = t2 / c.cm;
  }
  return c;
}

// Real pair (beta, a) with the boundary direction (-i beta, a).
struct RealDirection {
  double beta = 0.0;
  double a = 0.0;
};

RealDirection real_direction(const Channel& ch, Sector sector) {
  const Coefficients c = coefficients(ch);
  const double t = ch.t();
  const bool positive_j = ch.two_j() > 0;
  switch (sector) {
    case Sector::minus:
      return positive_j ? RealDirection{c.cp, -t} : RealDirection{t, -c.cm};
    case Sector::plus:
      return positive_j ? RealDirection{t, c.cp} : RealDirection{c.cm, t};
    case Sector::zero_minus:
      return {1.0, 0.0};
    case Sector::zero_plus:
      return {0.0, 1.0};
  }
  return {};
}

Spinor normalized(Spinor v) {
  const double n = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  return {v[0] / n, v[1] / n};
}

double endpoint_guard(double t) { return 1e-9 * std::max(1.0, std::fabs(t)); }

void require_nonzero_sector(Sector sector, const char* where) {
  if (sector == Sector::zero_minus || sector == Sector::zero_plus) {
    throw DomainError(std::string(where) + ": zero sectors apply only to t = 0 zero modes");
  }
}

void check_radial_kind(const EigenState& s) {
  if (s.radial_kind == RadialKind::power && s.channel.t() != 0.0) {
    throw DomainError("power-law profile requires t = 0");
  }
}

// Radial profile with unit prefactor.
Spinor raw_profile(const EigenState& s, double r) {
  const Channel& ch = s.channel;
  const double t = ch.t();
  const double e = s.energy;
  const BesselOrder lo(ch.lower_order());
  switch (s.radial_kind) {
    case RadialKind::bessel_j: {
      const double beta = std::sqrt((e - t) * (e + t));
      const specfun::BesselPair p = specfun::bessel_j_pair(lo, beta * std::fabs(r));
      const double up = std::sqrt(std::fabs(e + t)) * p.lower;
      const double dn = std::sqrt(std::fabs(e - t)) * p.upper;
      return {cd(up, 0.0), cd(0.0, e > 0.0 ? dn : -dn)};
    }
    case RadialKind::bessel_i: {
      const double eps = std::sqrt((t - e) * (t + e));
      const specfun::BesselPair p = specfun::bessel_i_pair(lo, eps * std::fabs(r));
      const double up = std::sqrt(std::fabs(t + e)) * p.lower;
      const double dn = std::sqrt(std::fabs(t - e)) * p.upper;
      return {cd(up, 0.0), cd(0.0, t > 0.0 ? -dn : dn)};
    }
    case RadialKind::power: {
      if (ch.two_j() > 0) return {cd(std::pow(r, ch.lower_order()), 0.0), cd(0.0, 0.0)};
      return {cd(0.0, 0.0), cd(std::pow(r, -ch.upper_order()), 0.0)};
    }
  }
  return {};
}

double normalization_for(const EigenState& s) {
  EigenState unit = s;
  unit.normalization = 1.0;
  const double integral = detail::integrate(
      [&](double r) {
        const Spinor v = raw_profile(unit, r);
        return (std::norm(v[0]) + std::norm(v[1])) * r;
      },
      0.0, s.channel.R());
  const double total = 2.0 * std::numbers::pi * integral;
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw DomainError("state has vanishing or non-finite disk norm");
  }
  return 1.0 / std::sqrt(total);
}

EigenState make_state(const Channel& ch, double energy, StateClass cls, Sector sector, RadialKind kind) {
  EigenState s;
  s.channel = ch;
  s.energy = energy;
  s.state_class = cls;
  s.sector = sector;
  s.radial_kind = kind;
  s.normalization = normalization_for(s);
  return s;
}

struct ScanOutcome {
  std::vector<double> roots;
  bool collision = false;
};

template <class F>
ScanOutcome scan_roots(F&& f, double lo, double hi, int intervals) {
  std::vector<double> x(intervals + 1);
  std::vector<double> fx(intervals + 1);
  const double step = (hi - lo) / intervals;
  for (int k = 0; k <= intervals; ++k) {
    x[k] = k == intervals ? hi : lo + k * step;
    fx[k] = f(x[k]);
  }
  ScanOutcome out;
  for (const detail::Bracket& b : detail::sign_changes(x, fx)) {
    out.roots.push_back(b.lo == b.hi ? b.lo : detail::bisect(f, b.lo, b.hi, b.f_lo, b.f_hi, 0.0));
  }
  for (std::size_t k = 1; k < out.roots.size(); ++k) {
    if (out.roots[k] - out.roots[k - 1] < 2.0 * step) out.collision = true;
  }
  return out;
}

}  // namespace

Channel::Channel(int two_j, double t, double R) : two_j_(two_j), t_(t), R_(R) {
  if (two_j % 2 == 0) {
    throw DomainError("channel: 2j must be odd (j half-integer), got " + std::to_string(two_j));
  }
  if (!std::isfinite(t)) throw DomainError("channel: t must be finite");
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("channel: R must be positive and finite");
}

const char* to_string(Sector s) {
  switch (s) {
    case Sector::minus:
      return "H-";
    case Sector::plus:
      return "H+";
    case Sector::zero_plus:
      return "H0+";
    case Sector::zero_minus:
      return "H0-";
  }
  return "?";
}

const char* to_string(StateClass c) {
  switch (c) {
    case StateClass::edge:
      return "edge";
    case StateClass::regular:
      return "regular";
    case StateClass::zero_mode:
      return "zero_mode";
  }
  return "?";
}

Sector zero_limit(Sector sector, int two_j) {
  switch (sector) {
    case Sector::minus:
      return two_j > 0 ? Sector::zero_minus : Sector::zero_plus;
    case Sector::plus:
      return two_j > 0 ? Sector::zero_plus : Sector::zero_minus;
    default:
      return sector;
  }
}

KSpectrum k_spectrum(const Channel& ch) {
  const Coefficients c = coefficients(ch);
  const double half = 0.5 / ch.R();
  const double t = ch.t();
  KSpectrum k;
  k.minus.lambda = -c.h;
  k.minus.kappa = half - c.h;
  k.plus.lambda = c.h;
  k.plus.kappa = half + c.h;
  if (t == 0.0) {
    const Spinor upper{cd(1.0, 0.0), cd(0.0, 0.0)};
    const Spinor lower{cd(0.0, 0.0), cd(1.0, 0.0)};
    k.minus.sector = zero_limit(Sector::minus, ch.two_j());
    k.plus.sector = zero_limit(Sector::plus, ch.two_j());
    k.minus.vec = k.minus.sector == Sector::zero_minus ? upper : lower;
    k.plus.vec = k.plus.sector == Sector::zero_minus ? upper : lower;
    return k;
  }
  // (-i t, j/R + lambda) rescaled by a positive factor where j/R + lambda is small.
  const double s = sgn(t);
  const double at = std::fabs(t);
  k.minus.sector = Sector::minus;
  k.plus.sector = Sector::plus;
  if (ch.two_j() > 0) {
    k.minus.vec = normalized({cd(0.0, -s * c.cp), cd(-at, 0.0)});
    k.plus.vec = normalized({cd(0.0, -t), cd(c.cp, 0.0)});
  } else {
    k.minus.vec = normalized({cd(0.0, -t), cd(-c.cm, 0.0)});
    k.plus.vec = normalized({cd(0.0, -s * c.cm), cd(at, 0.0)});
  }
  return k;
}

std::array<Spinor, 2> boundary_operator(const Channel& ch) {
  const double j = ch.j();
  const double R = ch.R();
  const double t = ch.t();
  return {Spinor{cd(-(j - 0.5) / R, 0.0), cd(0.0, -t)}, Spinor{cd(0.0, t), cd((j + 0.5) / R, 0.0)}};
}

Spinor boundary_direction(const Channel& ch, Sector sector) {
  const RealDirection d = real_direction(ch, sector);
  return normalized({cd(0.0, -d.beta), cd(d.a, 0.0)});
}

double edge_residual(double energy, const Channel& ch, Sector sector) {
  const double t = ch.t();
  if (t == 0.0) throw DomainError("edge_residual: t = 0 has no edge states");
  if (!(std::fabs(energy) < std::fabs(t))) {
    throw DomainError("edge_residual: requires |E| < |t|");
  }
  require_nonzero_sector(sector, "edge_residual");
  const Coefficients c = coefficients(ch);
  const double eps = std::sqrt((t - energy) * (t + energy));
  const specfun::BesselPair p = specfun::bessel_i_pair(BesselOrder(ch.lower_order()), eps * ch.R());
  const double first = std::fabs(t) * std::sqrt(std::fabs(t + energy)) * p.lower;
  const double second = std::sqrt(std::fabs(t - energy)) * p.upper;
  return sector == Sector::minus ? first - c.cp * second : first + c.cm * second;
}

std::optional<EigenState> edge_solve(const Channel& ch, Sector sector) {
  const double t = ch.t();
  if (t == 0.0) throw DomainError("edge_solve: t = 0 has no edge states");
  require_nonzero_sector(sector, "edge_solve");
  const double delta = endpoint_guard(t);
  const double bound = std::fabs(t) - delta;
  if (!(bound > -bound)) return std::nullopt;
  const auto f = [&](double e) { return edge_residual(e, ch, sector); };
  const ScanOutcome scan = scan_roots(f, -bound, bound, kEdgeScanIntervals);
  if (scan.roots.empty()) return std::nullopt;
  if (scan.roots.size() > 1) {
    std::ostringstream msg;
    msg << "edge_solve: " << scan.roots.size() << " sign changes for 2j=" << ch.two_j()
        << " t=" << t << " R=" << ch.R();
    throw MultipleRootError(msg.str());
  }
  return make_state(ch, scan.roots.front(), StateClass::edge, sector, RadialKind::bessel_i);
}

double regular_residual(double energy, const Channel& ch, Sector sector) {
  const double t = ch.t();
  if (!(std::fabs(energy) > std::fabs(t))) {
    throw DomainError("regular_residual: requires |E| > |t|");
  }
  const RealDirection d = real_direction(ch, sector);
  const double beta = std::sqrt((energy - t) * (energy + t));
  const specfun::BesselPair p = specfun::bessel_j_pair(BesselOrder(ch.lower_order()), beta * ch.R());
  return d.a * std::sqrt(std::fabs(energy + t)) * p.lower -
         sgn(energy) * d.beta * std::sqrt(std::fabs(energy - t)) * p.upper;
}

RegularSolveResult regular_solve(const Channel& ch, Sector sector, double e_min, double e_max) {
  const double t = ch.t();
  const double at = std::fabs(t);
  if (!std::isfinite(e_min) || !std::isfinite(e_max) || !(e_min < e_max)) {
    throw DomainError("regular_solve: window must be finite with e_min < e_max");
  }
  if (e_max >= -at && e_min <= at) {
    throw DomainError("regular_solve: window meets the gap [-|t|, |t|]");
  }
  const double delta = endpoint_guard(t);
  double lo = e_min;
  double hi = e_max;
  if (lo > 0.0) lo = std::max(lo, at + delta);
  if (hi < 0.0) hi = std::min(hi, -at - delta);

  RegularSolveResult result;
  if (!(lo < hi)) return result;
  const auto f = [&](double e) { return regular_residual(e, ch, sector); };
  int intervals = kRegularScanIntervals;
  ScanOutcome scan;
  for (int attempt = 0;; ++attempt) {
    scan = scan_roots(f, lo, hi, intervals);
    result.scan_step = (hi - lo) / intervals;
    if (!scan.collision) break;
    std::ostringstream msg;
    msg << "scan resolution: roots closer than two steps (step " << result.scan_step << ", 2j=" << ch.two_j()
        << ", t=" << t << ")";
    result.warnings.push_back(msg.str());
    if (attempt == kMaxScanHalvings) break;
    intervals *= 2;
  }
  result.states.reserve(scan.roots.size());
  for (double e : scan.roots) {
    result.states.push_back(make_state(ch, e, StateClass::regular, sector, RadialKind::bessel_j));
  }
  return result;
}

std::optional<EigenState> zero_mode(const Channel& ch, Sector boundary_choice) {
  if (ch.t() != 0.0) throw DomainError("zero_mode: requires t = 0");
  if (boundary_choice != Sector::zero_minus && boundary_choice != Sector::zero_plus) {
    throw DomainError("zero_mode: boundary choice must be H0+ or H0-");
  }
  const bool matched = ch.two_j() > 0 ? boundary_choice == Sector::zero_minus : boundary_choice == Sector::zero_plus;
  if (!matched) return std::nullopt;
  return make_state(ch, 0.0, StateClass::zero_mode, boundary_choice, RadialKind::power);
}

Spinor radial_profile(const EigenState& state, double r) {
  check_radial_kind(state);
  Spinor v = raw_profile(state, r);
  v[0] *= state.normalization;
  v[1] *= state.normalization;
  return v;
}

Spinor wavefunction(const EigenState& state, double r, double theta) {
  if (!(r >= 0.0 && r <= state.channel.R())) {
    throw DomainError("wavefunction: r outside [0, R]");
  }
  const Spinor v = radial_profile(state, r);
  const double lo = state.channel.lower_order();
  const double hi = state.channel.upper_order();
  return {v[0] * std::polar(1.0, lo * theta), v[1] * std::polar(1.0, hi * theta)};
}

double radial_ode_residual(const EigenState& state, double r, double h) {
  const auto d = [&](int k) {
    const Spinor a = radial_profile(state, r + h);
    const Spinor b = radial_profile(state, r - h);
    const Spinor a2 = radial_profile(state, r + 2 * h);
    const Spinor b2 = radial_profile(state, r - 2 * h);
    return (-a2[k] + 8.0 * a[k] - 8.0 * b[k] + b2[k]) / (12.0 * h);
  };
  const Spinor v = radial_profile(state, r);
  const cd dm = d(0);
  const cd dp = d(1);
  const cd i(0.0, 1.0);
  const double j = state.channel.j();
  const double t = state.channel.t();
  const double e = state.energy;
  const cd eq1 = -i * dp - (i / r) * (j + 0.5) * v[1] + t * v[0] - e * v[0];
  const cd eq2 = -i * dm + (i / r) * (j - 0.5) * v[0] - t * v[1] - e * v[1];
  const double scale = std::abs(v[0]) + std::abs(v[1]);
  return std::max(std::abs(eq1), std::abs(eq2)) / scale;
}

double boundary_misalignment(const EigenState& state) {
  const Spinor v = radial_profile(state, state.channel.R());
  const Spinor d = boundary_direction(state.channel, state.sector);
  const double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
  const double nd = std::sqrt(std::norm(d[0]) + std::norm(d[1]));
  return std::abs(v[0] * d[1] - v[1] * d[0]) / (nv * nd);
}

Observables observables(const EigenState& state) {
  const double R = state.channel.R();
  const double lo = state.channel.lower_order();
  const double hi = state.channel.upper_order();
  double norm = 0.0;
  double sr = 0.0;
  double st = 0.0;
  double orb = 0.0;
  for (int k = 0; k < kObservableSamples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / kObservableSamples;
    const Spinor p = wavefunction(state, R, theta);
    const cd ep = std::polar(1.0, theta);
    // sigma_r = [[0, e^{-i theta}], [e^{i theta}, 0]], sigma_theta = [[0, -i e^{-i theta}], [i e^{i theta}, 0]]
    const cd cross = std::conj(p[0]) * std::conj(ep) * p[1];
    norm += std::norm(p[0]) + std::norm(p[1]);
    sr += 2.0 * cross.real();
    st += 2.0 * cross.imag();
    orb += lo * std::norm(p[0]) + hi * std::norm(p[1]);
  }
  return {sr / norm, st / norm, orb / norm};
}

}  // namespace flowlab::diracdisk
