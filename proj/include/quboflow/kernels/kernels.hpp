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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "quboflow/qubo.hpp"

namespace quboflow::kernels {

// The two inner loops worth vectorizing are batched energy evaluation
// (exhaustive enumeration) and independent annealing chains. Both are
// vectorized ACROSS states/chains only — each lane performs the exact
// operation sequence of the scalar reference — so the scalar and AVX2
// variants produce bitwise identical results and the runtime choice
// never changes any output.

/// Flattened term list for batched energy evaluation, valid for up to 64
/// variables. Terms appear in the canonical order of eval_energy: linear
/// terms by ascending index (single-bit mask), then couplings by ascending
/// (j, k) (two-bit mask). A term contributes coeff when state & mask == mask.
struct TermList {
  int num_vars = 0;
  std::vector<std::uint64_t> masks;
  std::vector<double> coeffs;

  /// Requires qubo.num_vars <= 64.
  static TermList compile(const Qubo& qubo);
};

/// Annealing problem in kernel form: linear coefficients, symmetric
/// adjacency in CSR layout (each coupling listed under both endpoints,
/// neighbors ascending), and the per-sweep values of -1/T.
struct SaProblem {
  int num_vars = 0;
  std::vector<double> linear;
  std::vector<std::int32_t> adj_offsets;  // size num_vars + 1
  std::vector<std::int32_t> adj_index;
  std::vector<double> adj_weight;
  std::vector<double> neg_inv_temp;       // one entry per sweep

  static SaProblem compile(const Qubo& qubo, const std::vector<double>& temperatures);

  std::size_t sweeps() const { return neg_inv_temp.size(); }
  std::size_t words_per_state() const {
    return (static_cast<std::size_t>(num_vars) + 63) / 64;
  }
};

/// Evaluates f(state) for `count` packed single-word states.
using BatchEnergyFn = void (*)(const TermList& terms, const std::uint64_t* states,
                               std::size_t count, double* out);

/// Runs `count` independent annealing chains with global read indices
/// [first_read, first_read + count). Chain r depends only on (seed, r), so
/// any partition of the index range yields the same per-read states. Final
/// states are packed LSB-first, words_per_state() words per read.
using RunReadsFn = void (*)(const SaProblem& problem, std::uint64_t seed,
                            std::uint64_t first_read, std::uint64_t count,
                            std::uint64_t* out_states);

struct KernelOps {
  const char* name;
  BatchEnergyFn batch_energy;
  RunReadsFn run_reads;
};

enum class KernelKind { kScalar, kAvx2 };

/// Portable reference kernels; always available.
const KernelOps& scalar_kernels();

/// AVX2+FMA kernels, or nullptr when the CPU lacks them.
const KernelOps* avx2_kernels();

/// Best available kernels, honoring set_kernel_override.
const KernelOps& active_kernels();

/// Pins the dispatch choice (testing hook). kAvx2 on an unsupported CPU
/// falls back to scalar. nullopt restores automatic selection.
void set_kernel_override(std::optional<KernelKind> kind);

}  // namespace quboflow::kernels
