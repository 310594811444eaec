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

#ifndef FLOWLAB_SRC_NUMERICS_HPP_
#define FLOWLAB_SRC_NUMERICS_HPP_

// Small numerical helpers shared by the solver translation units.

#include <cmath>
#include <span>
#include <utility>
#include <vector>

namespace flowlab::detail {

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point rule via Newton iteration on P_n; cached for n = 200.
const GaussLegendre& gauss_legendre(int n);

// Integral of f over [a, b] with the n-point rule.
template <class F>
double integrate(F&& f, double a, double b, int n = 200) {
  const GaussLegendre& rule = gauss_legendre(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

// Bisection on a bracket [a, b] with f(a), f(b) of opposite sign (or zero).
// Stops when b - a <= tol or after 200 halvings.
template <class F>
double bisect(F&& f, double a, double b, double fa, double fb, double tol) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  for (int it = 0; it < 200 && (b - a) > tol; ++it) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }
  return 0.5 * (a + b);
}

struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;
};

// Sign changes of sampled values f(x_k); a sample that is exactly zero is
// reported as a degenerate bracket [x_k, x_k].
inline std::vector<Bracket> sign_changes(std::span<const double> x, std::span<const double> fx) {
  std::vector<Bracket> out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (fx[k] == 0.0) {
      out.push_back({x[k], x[k], 0.0, 0.0});
      continue;
    }
    if (k + 1 < x.size() && fx[k + 1] != 0.0 && ((fx[k] < 0.0) != (fx[k + 1] < 0.0))) {
      out.push_back({x[k], x[k + 1], fx[k], fx[k + 1]});
    }
  }
  return out;
}

}  // namespace flowlab::detail

#endif  // FLOWLAB_SRC_NUMERICS_HPP_
