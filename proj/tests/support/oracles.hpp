//
// Copyright 2026 the quboflow authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Independent oracles used by the unit and acceptance suites. Everything in
// here recomputes results from first principles (dense elimination, direct
// residual sums, its own fixed-point decode) and deliberately shares no code
// with the implementation paths it checks.

#pragma once

#include <cstdint>
#include <vector>

#include "quboflow/matrix.hpp"

namespace oracles {

/// Dense Gaussian elimination with partial pivoting.
std::vector<double> dense_solve(quboflow::Matrix a, std::vector<double> b);

/// Fixed-point value of block `block` of a packed state (bit c*n+j carries
/// weight 2^(radix_pos-1-j)).
double decode_block(std::uint64_t state, int block, int precision, int radix_pos);

/// ||Ad q - b||^2 by direct row sums over the set bits of `state`.
double residual_sq(const quboflow::Matrix& ad, const std::vector<double>& b,
                   std::uint64_t state);

struct BlsResult {
  std::uint64_t state = 0;
  double residual_sq = 0.0;
};

/// Best representable least-squares solution of the implicit-Euler
/// tridiagonal system (diagonal 1+2*alpha, off-diagonals -alpha) over all
/// 2^((grid_points-2)*precision) states. Ties resolve to the
/// lexicographically least bit sequence. Uses direct evaluation up to 20
/// bits and a Gray-code walk with incremental residual components above.
BlsResult brute_force_bls(int grid_points, double alpha, const std::vector<double>& rhs,
                          int precision, int radix_pos);

}  // namespace oracles
