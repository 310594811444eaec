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

#ifndef FLOWLAB_FULLQUANTUM_HPP_
#define FLOWLAB_FULLQUANTUM_HPP_

// Global molecular model H = S_z + alpha S.N for spin 1/2 coupled to a rotor
// of angular momentum N. The projection m_j = m_s + m_N is conserved, so the
// 2(2N+1)-dimensional problem splits into blocks of size at most two.
//
// Block basis: {|m_s = +1/2, m_N = m_j - 1/2>, |m_s = -1/2, m_N = m_j + 1/2>},
// dropping vectors with |m_N| > N. Matrix elements follow from
//   S.N = S_z N_z + (S_+ N_- + S_- N_+) / 2,
//   N_+- |m> = sqrt(N(N+1) - m(m+-1)) |m+-1>:
//   <1| H |1> =  1/2 + (alpha/2)(m_j - 1/2)
//   <2| H |2> = -1/2 - (alpha/2)(m_j + 1/2)
//   <1| H |2> = (alpha/2) sqrt((N - m_j + 1/2)(N + m_j + 1/2)).

#include <array>
#include <vector>

namespace flowlab::fullquantum {

struct ModelSpec {
  int N = 1;
  double alpha = 0.0;
};

enum class Spin { up, down };

const char* to_string(Spin s);

struct BlockMatrix {
  int size = 2;
  std::array<std::array<double, 2>, 2> m{};
};

struct BlockSpectrum {
  int two_m_j = 1;
  int size = 2;
  std::vector<double> eigenvalues;  // ascending
  std::vector<Spin> dominant_spin;  // per eigenvalue
};

struct BandCount {
  int below = 0;
  int above = 0;
};

// Eigenvalues closer than this to the split energy are treated as on the gap.
inline constexpr double kOnGapTolerance = 1e-9;

// Throws DomainError for N < 1, even two_m_j or |m_j| > N + 1/2.
BlockMatrix block_matrix(const ModelSpec& spec, int two_m_j);

// All blocks m_j = -N-1/2, ..., N+1/2 in increasing order.
std::vector<BlockSpectrum> spectrum(const ModelSpec& spec);

// Counts of eigenvalues strictly below and above split_energy. Throws
// OnGapError when an eigenvalue lies within kOnGapTolerance of it.
BandCount band_count(const ModelSpec& spec, double split_energy = 0.0);

// The level of the m_j = -(N+1/2) block, -1/2 + alpha N / 2.
double extremal_level(const ModelSpec& spec);

struct TransferResult {
  int transfer = 0;             // net levels moved from below to above the split
  std::vector<int> counted_n;   // N values that contributed
  std::vector<int> on_gap_n;    // N values skipped because a level sat on the split
};

// Sum over consecutive counted N of the change in (above - below) / 2.
TransferResult level_transfer(double alpha, int n_first, int n_last, double split_energy = 0.0);

}  // namespace flowlab::fullquantum

#endif  // FLOWLAB_FULLQUANTUM_HPP_
