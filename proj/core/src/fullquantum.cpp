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

#include "flowlab/fullquantum.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "flowlab/errors.hpp"

namespace flowlab::fullquantum {
namespace {

void check_spec(const ModelSpec& spec) {
  if (spec.N < 1) throw DomainError("model: N must be >= 1, got " + std::to_string(spec.N));
  if (!std::isfinite(spec.alpha)) throw DomainError("model: alpha must be finite");
}

}  // namespace

const char* to_string(Spin s) { return s == Spin::up ? "up" : "down"; }

BlockMatrix block_matrix(const ModelSpec& spec, int two_m_j) {
  check_spec(spec);
  if (two_m_j % 2 == 0) throw DomainError("block_matrix: 2m_j must be odd");
  if (std::abs(two_m_j) > 2 * spec.N + 1) {
    std::ostringstream msg;
    msg << "block_matrix: |m_j| = " << std::abs(two_m_j) << "/2 exceeds N + 1/2 = " << spec.N << "+1/2";
    throw DomainError(msg.str());
  }
  const double mj = 0.5 * two_m_j;
  const double N = spec.N;
  const double a = spec.alpha;
  const double up = 0.5 + 0.5 * a * (mj - 0.5);
  const double down = -0.5 - 0.5 * a * (mj + 0.5);
  BlockMatrix b;
  if (two_m_j == 2 * spec.N + 1) {
    b.size = 1;
    b.m[0][0] = up;
  } else if (two_m_j == -(2 * spec.N + 1)) {
    b.size = 1;
    b.m[0][0] = down;
  } else {
    const double off = 0.5 * a * std::sqrt((N - mj + 0.5) * (N + mj + 0.5));
    b.m = {{{up, off}, {off, down}}};
  }
  return b;
}

std::vector<BlockSpectrum> spectrum(const ModelSpec& spec) {
  check_spec(spec);
  std::vector<BlockSpectrum> out;
  out.reserve(2 * spec.N + 2);
  for (int two_m = -(2 * spec.N + 1); two_m <= 2 * spec.N + 1; two_m += 2) {
    const BlockMatrix b = block_matrix(spec, two_m);
    BlockSpectrum s;
    s.two_m_j = two_m;
    s.size = b.size;
    if (b.size == 1) {
      s.eigenvalues = {b.m[0][0]};
      s.dominant_spin = {two_m > 0 ? Spin::up : Spin::down};
    } else {
      const double mean = 0.5 * (b.m[0][0] + b.m[1][1]);
      const double half_diff = 0.5 * (b.m[0][0] - b.m[1][1]);
      const double off = b.m[0][1];
      const double r = std::hypot(half_diff, off);
      // Upper eigenvector is proportional to (half_diff + r, off).
      const double w = half_diff >= 0.0 ? half_diff + r : off * off / (r - half_diff);
      const bool upper_is_up = std::fabs(w) >= std::fabs(off);
      s.eigenvalues = {mean - r, mean + r};
      s.dominant_spin = {upper_is_up ? Spin::down : Spin::up, upper_is_up ? Spin::up : Spin::down};
    }
    out.push_back(std::move(s));
  }
  return out;
}

BandCount band_count(const ModelSpec& spec, double split_energy) {
  BandCount c;
  for (const BlockSpectrum& b : spectrum(spec)) {
    for (double e : b.eigenvalues) {
      if (std::fabs(e - split_energy) <= kOnGapTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "band_count: level " << e << " in block 2m_j=" << b.two_m_j << " lies on the split energy "
            << split_energy << " (N=" << spec.N << ", alpha=" << spec.alpha << ")";
        throw OnGapError(msg.str());
      }
      if (e < split_energy) {
        ++c.below;
      } else {
        ++c.above;
      }
    }
  }
  return c;
}

double extremal_level(const ModelSpec& spec) {
  return block_matrix(spec, -(2 * spec.N + 1)).m[0][0];
}

TransferResult level_transfer(double alpha, int n_first, int n_last, double split_energy) {
  if (n_first < 1 || n_last <= n_first) throw DomainError("level_transfer: need 1 <= N_first < N_last");
  TransferResult r;
  bool have_previous = false;
  int previous = 0;
  for (int n = n_first; n <= n_last; ++n) {
    BandCount c;
    try {
      c = band_count({n, alpha}, split_energy);
    } catch (const OnGapError&) {
      r.on_gap_n.push_back(n);
      continue;
    }
    const int imbalance = c.above - c.below;
    if (have_previous) r.transfer += (imbalance - previous) / 2;
    previous = imbalance;
    have_previous = true;
    r.counted_n.push_back(n);
  }
  return r;
}

}  // namespace flowlab::fullquantum
