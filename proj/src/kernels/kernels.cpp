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

#include "quboflow/kernels/kernels.hpp"

#include <atomic>
#include <string>

#include "quboflow/errors.hpp"
#include "kernel_impls.hpp"

namespace quboflow::kernels {

TermList TermList::compile(const Qubo& qubo) {
  if (qubo.num_vars > 64)
    throw CapacityError("TermList: batched evaluation supports at most 64 variables, got " +
                        std::to_string(qubo.num_vars));
  TermList t;
  t.num_vars = qubo.num_vars;
  t.masks.reserve(qubo.linear.size() + qubo.couplings.size());
  t.coeffs.reserve(qubo.linear.size() + qubo.couplings.size());
  for (int j = 0; j < qubo.num_vars; ++j) {
    t.masks.push_back(1ull << j);
    t.coeffs.push_back(qubo.linear[static_cast<std::size_t>(j)]);
  }
  for (const QuboTerm& c : qubo.couplings) {
    t.masks.push_back((1ull << c.j) | (1ull << c.k));
    t.coeffs.push_back(c.weight);
  }
  return t;
}

SaProblem SaProblem::compile(const Qubo& qubo, const std::vector<double>& temperatures) {
  if (qubo.num_vars < 1) throw ConfigError("SaProblem: empty landscape");
  if (temperatures.empty()) throw ConfigError("SaProblem: need at least one sweep");

  SaProblem p;
  p.num_vars = qubo.num_vars;
  p.linear = qubo.linear;

  const std::size_t m = static_cast<std::size_t>(qubo.num_vars);
  std::vector<std::int32_t> degree(m, 0);
  for (const QuboTerm& c : qubo.couplings) {
    ++degree[static_cast<std::size_t>(c.j)];
    ++degree[static_cast<std::size_t>(c.k)];
  }
  p.adj_offsets.assign(m + 1, 0);
  for (std::size_t j = 0; j < m; ++j) p.adj_offsets[j + 1] = p.adj_offsets[j] + degree[j];
  p.adj_index.resize(static_cast<std::size_t>(p.adj_offsets[m]));
  p.adj_weight.resize(static_cast<std::size_t>(p.adj_offsets[m]));

  // A pass over the (j, k)-sorted couplings appends each row's neighbors in
  // ascending order.
  std::vector<std::int32_t> cursor(p.adj_offsets.begin(), p.adj_offsets.end() - 1);
  for (const QuboTerm& c : qubo.couplings) {
    p.adj_index[static_cast<std::size_t>(cursor[static_cast<std::size_t>(c.j)])] = c.k;
    p.adj_weight[static_cast<std::size_t>(cursor[static_cast<std::size_t>(c.j)]++)] = c.weight;
    p.adj_index[static_cast<std::size_t>(cursor[static_cast<std::size_t>(c.k)])] = c.j;
    p.adj_weight[static_cast<std::size_t>(cursor[static_cast<std::size_t>(c.k)]++)] = c.weight;
  }

  p.neg_inv_temp.reserve(temperatures.size());
  for (double t : temperatures) {
    if (!(t > 0.0)) throw ConfigError("SaProblem: temperatures must be positive");
    p.neg_inv_temp.push_back(-1.0 / t);
  }
  return p;
}

namespace {

std::atomic<int> g_override{-1};  // -1 auto, else KernelKind

bool cpu_has_avx2_fma() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace

const KernelOps& scalar_kernels() {
  static const KernelOps ops{"scalar", &impl::batch_energy_scalar, &impl::run_reads_scalar};
  return ops;
}

const KernelOps* avx2_kernels() {
#ifdef QUBOFLOW_HAVE_AVX2_TU
  static const bool supported = cpu_has_avx2_fma();
  if (supported) {
    static const KernelOps ops{"avx2", &impl::batch_energy_avx2, &impl::run_reads_avx2};
    return &ops;
  }
#endif
  return nullptr;
}

const KernelOps& active_kernels() {
  const int ov = g_override.load(std::memory_order_relaxed);
  if (ov == static_cast<int>(KernelKind::kScalar)) return scalar_kernels();
  const KernelOps* avx2 = avx2_kernels();
  return avx2 ? *avx2 : scalar_kernels();
}

void set_kernel_override(std::optional<KernelKind> kind) {
  g_override.store(kind ? static_cast<int>(*kind) : -1, std::memory_order_relaxed);
}

}  // namespace quboflow::kernels
