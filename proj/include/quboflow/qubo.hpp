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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "quboflow/fixed_point.hpp"
#include "quboflow/matrix.hpp"

namespace quboflow {

/// One quadratic coupling w * q_j * q_k with j < k (0-based indices).
struct QuboTerm {
  int j = 0;
  int k = 0;
  double weight = 0.0;
};

/// Energy landscape f(q) = sum_i v_i q_i + sum_{j<k} w_jk q_j q_k.
///
/// The constant offset ||b||^2 dropped by the least-squares expansion is kept
/// so that f(q) + constant_offset recovers the squared residual exactly.
/// Couplings are stored strictly upper-triangular, sorted by (j, k); values
/// below 1e-15 in magnitude are pruned at construction.
struct Qubo {
  int num_vars = 0;
  std::vector<double> linear;      // v, length num_vars
  std::vector<QuboTerm> couplings; // sorted by (j, k), j < k
  double constant_offset = 0.0;

  /// Coupling weight for the unordered pair {j, k}, if present.
  std::optional<double> coupling(int j, int k) const;

  /// Largest coefficient magnitude over v and w (0 for an empty landscape).
  double max_abs_coefficient() const;
};

/// Least-squares QUBO for min_q ||Ad*q - b||^2:
///   v_j  = sum_i Ad(i,j) * (Ad(i,j) - 2 b_i)
///   w_jk = 2 * sum_i Ad(i,j) * Ad(i,k)
/// with constant_offset = sum_i b_i^2.
Qubo build_qubo(const Matrix& ad, const std::vector<double>& b);

/// f(q) for one state. The arithmetic is pinned: terms accumulate with
/// fma(coeff, mask, acc) in canonical order (linear terms by ascending index,
/// then couplings by ascending (j, k)); sampler backends reproduce this
/// bit-for-bit.
double eval_energy(const Qubo& qubo, const BitVector& q);

/// Number of binary variables for a grid with `grid_points` points (both
/// boundaries included) at `precision` bits per unknown: (grid_points-2)*n.
int logical_problem_size(int grid_points, int precision);

/// Size-threshold stand-in for hardware embeddability: size <= budget.
/// The default budget of 54 separates the largest embeddable problem (42)
/// from the smallest that failed to embed (56).
bool embeddable_hint(int size, int budget = 54);

/// Plain-text triplet format: header "M offset", then one line per linear
/// term ("j j v_j") and per coupling ("j k w_jk"), 1-based indices, values as
/// shortest round-trip decimals. Round trip is bit-exact.
void write_qubo(std::ostream& os, const Qubo& qubo);
void write_qubo_file(const std::string& path, const Qubo& qubo);
Qubo read_qubo(std::istream& is);
Qubo read_qubo_file(const std::string& path);

}  // namespace quboflow
