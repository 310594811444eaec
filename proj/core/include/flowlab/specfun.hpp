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

#ifndef FLOWLAB_SPECFUN_HPP_
#define FLOWLAB_SPECFUN_HPP_

// Integer-order Bessel functions of the first kind J_n and modified Bessel
// functions I_n.
//
// Production evaluators use the ascending series for small arguments and
// Miller's downward recurrence (normalized with J_0 + 2 sum J_2k = 1, or
// I_0 + 2 sum I_k = e^x) otherwise. Internal arithmetic is long double.
// bessel_series_oracle() sums the ascending series in 50-digit arithmetic and
// exists to check the production paths.

namespace flowlab::specfun {

// Signed integer order. Negative orders are resolved by reflection:
// J_{-n} = (-1)^n J_n and I_{-n} = I_n.
struct BesselOrder {
  int value = 0;

  constexpr BesselOrder() = default;
  constexpr explicit BesselOrder(int n) : value(n) {}

  friend constexpr bool operator==(BesselOrder, BesselOrder) = default;
};

enum class BesselKind { J, I };

// Arguments above this raise OverflowError in bessel_i.
inline constexpr double kBesselIOverflowGuard = 500.0;

// Adjacent orders (n, n+1) evaluated in a single recurrence pass.
struct BesselPair {
  double lower = 0.0;  // order n
  double upper = 0.0;  // order n + 1
};

// J_n(x) for x >= 0. Throws DomainError for negative or non-finite x.
double bessel_j(BesselOrder n, double x);

// I_n(x) for x >= 0. Throws DomainError for negative or non-finite x and
// OverflowError for x > kBesselIOverflowGuard.
double bessel_i(BesselOrder n, double x);

// (J_n(x), J_{n+1}(x)) and (I_n(x), I_{n+1}(x)); same contracts as above.
BesselPair bessel_j_pair(BesselOrder n, double x);
BesselPair bessel_i_pair(BesselOrder n, double x);

// Ascending series with `terms` terms, summed in 50-digit arithmetic.
// Throws ConvergenceError unless the first omitted term is below 1e-18 of the
// partial sum (or the partial sum and omitted term are both zero).
double bessel_series_oracle(BesselKind kind, BesselOrder n, double x, int terms);

}  // namespace flowlab::specfun

#endif  // FLOWLAB_SPECFUN_HPP_
