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

#include "flowlab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "flowlab/errors.hpp"

namespace flowlab::specfun {
namespace {

using Wide = long double;

constexpr int kMaxSeriesTerms = 1000;
constexpr Wide kSeriesTolerance = 1e-21L;
constexpr Wide kRescaleThreshold = 1e1000L;
constexpr Wide kRescaleFactor = 1e-1000L;

void check_argument(double x, const char* who) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError(std::string(who) + ": argument must be finite and >= 0, got " +
                      std::to_string(x));
  }
}

// Ascending series for order n >= 0. sign = -1 gives J, +1 gives I.
Wide ascending_series(int n, Wide x, int sign) {
  const Wide half = x / 2;
  Wide term = 1;
  for (int k = 1; k <= n; ++k) term *= half / k;
  if (term == 0) return 0;
  const Wide q = half * half * sign;
  Wide sum = term;
  for (int k = 1; k < kMaxSeriesTerms; ++k) {
    term *= q / (static_cast<Wide>(k) * static_cast<Wide>(n + k));
    sum += term;
    if (std::fabs(term) < kSeriesTolerance * std::fabs(sum)) break;
  }
  return sum;
}

// Miller start order: even, and far enough above both n and x that the
// neglected tail is below long-double precision.
int miller_start(int n, Wide x) {
  const Wide top = std::max<Wide>(n + 1, std::ceil(x));
  const int m = static_cast<int>(top + 20 + std::ceil(std::sqrt(50 * top)));
  return 2 * ((m + 1) / 2);
}

// Downward recurrence returning (order n, order n+1), both n >= 0, x > 0.
// modified = false recurs J_{k-1} = (2k/x) J_k - J_{k+1} normalized by
// J_0 + 2 sum J_2k = 1; modified = true recurs I_{k-1} = (2k/x) I_k + I_{k+1}
// normalized by I_0 + 2 sum I_k = e^x.
std::pair<Wide, Wide> miller(int n, Wide x, bool modified) {
  const int start = miller_start(n + 1, x);
  const Wide two_over_x = 2 / x;
  Wide above = 0;  // order k + 1
  Wide here = 1e-30L;  // order k
  Wide norm = 0;
  Wide at_n = 0;
  Wide at_n1 = 0;
  for (int k = start; k >= 1; --k) {
    const Wide below = modified ? k * two_over_x * here + above : k * two_over_x * here - above;
    above = here;
    here = below;  // order k - 1
    const int order = k - 1;
    if (order == n) at_n = here;
    if (order == n + 1) at_n1 = here;
    if (order > 0) {
      if (modified) {
        norm += 2 * here;
      } else if (order % 2 == 0) {
        norm += 2 * here;
      }
    }
    if (std::fabs(here) > kRescaleThreshold) {
      here *= kRescaleFactor;
      above *= kRescaleFactor;
      norm *= kRescaleFactor;
      at_n *= kRescaleFactor;
      at_n1 *= kRescaleFactor;
    }
  }
  norm += here;  // order 0
  const Wide scale = modified ? std::exp(x) / norm : 1 / norm;
  return {at_n * scale, at_n1 * scale};
}

bool use_series_j(int n, Wide x) { return x < 10 || x * x < n + 1; }

bool use_series_i(int n, Wide x) { return x < 10 || x * x < n + 1; }

Wide eval_nonneg(int n, Wide x, BesselKind kind) {
  if (x == 0) return n == 0 ? 1 : 0;
  if (kind == BesselKind::J) {
    return use_series_j(n, x) ? ascending_series(n, x, -1) : miller(n, x, false).first;
  }
  return use_series_i(n, x) ? ascending_series(n, x, +1) : miller(n, x, true).first;
}

Wide reflect(int n, Wide value, BesselKind kind) {
  if (n >= 0 || kind == BesselKind::I) return value;
  return (-n) % 2 == 0 ? value : -value;
}

Wide eval(int n, Wide x, BesselKind kind) {
  return reflect(n, eval_nonneg(std::abs(n), x, kind), kind);
}

BesselPair eval_pair(int n, Wide x, BesselKind kind) {
  // Orders n, n+1 with both >= 0 share one recurrence pass; otherwise fall back
  // to independent evaluations.
  if (n < 0 || x == 0) {
    return {static_cast<double>(eval(n, x, kind)), static_cast<double>(eval(n + 1, x, kind))};
  }
  const bool series = kind == BesselKind::J ? use_series_j(n, x) : use_series_i(n, x);
  if (series) {
    const int sign = kind == BesselKind::J ? -1 : 1;
    return {static_cast<double>(ascending_series(n, x, sign)),
            static_cast<double>(ascending_series(n + 1, x, sign))};
  }
  const auto [lo, hi] = miller(n, x, kind == BesselKind::I);
  return {static_cast<double>(lo), static_cast<double>(hi)};
}

}  // namespace

double bessel_j(BesselOrder n, double x) {
  check_argument(x, "bessel_j");
  return static_cast<double>(eval(n.value, x, BesselKind::J));
}

double bessel_i(BesselOrder n, double x) {
  check_argument(x, "bessel_i");
  if (x > kBesselIOverflowGuard) {
    throw OverflowError("bessel_i: argument " + std::to_string(x) + " exceeds overflow guard " +
                        std::to_string(kBesselIOverflowGuard));
  }
  return static_cast<double>(eval(n.value, x, BesselKind::I));
}

BesselPair bessel_j_pair(BesselOrder n, double x) {
  check_argument(x, "bessel_j_pair");
  return eval_pair(n.value, x, BesselKind::J);
}

BesselPair bessel_i_pair(BesselOrder n, double x) {
  check_argument(x, "bessel_i_pair");
  if (x > kBesselIOverflowGuard) {
    throw OverflowError("bessel_i_pair: argument " + std::to_string(x) +
                        " exceeds overflow guard " + std::to_string(kBesselIOverflowGuard));
  }
  return eval_pair(n.value, x, BesselKind::I);
}

double bessel_series_oracle(BesselKind kind, BesselOrder order, double x, int terms) {
  using Big = boost::multiprecision::cpp_bin_float_50;
  if (!std::isfinite(x)) throw DomainError("bessel_series_oracle: non-finite argument");
  if (terms < 1) throw ConvergenceError("bessel_series_oracle: terms must be >= 1");

  const int n = std::abs(order.value);
  const Big half = Big(x) / 2;
  const Big q = kind == BesselKind::J ? Big(-(half * half)) : Big(half * half);

  Big term = 1;
  for (int k = 1; k <= n; ++k) term *= half / k;
  Big sum = 0;
  for (int k = 0; k < terms; ++k) {
    sum += term;
    term *= q / (Big(k + 1) * Big(n + k + 1));
  }
  // `term` is now the first omitted term.
  const Big omitted = abs(term);
  if (omitted != 0 && !(omitted < Big("1e-18") * abs(sum))) {
    throw ConvergenceError("bessel_series_oracle: " + std::to_string(terms) +
                           " terms do not converge for n=" + std::to_string(order.value) +
                           ", x=" + std::to_string(x));
  }
  double value = sum.convert_to<double>();
  if (order.value < 0 && kind == BesselKind::J && n % 2 == 1) value = -value;
  return value;
}

}  // namespace flowlab::specfun
