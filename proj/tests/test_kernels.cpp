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

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "kernels/chain_math.hpp"
#include "quboflow/channel_flow.hpp"
#include "quboflow/fixed_point.hpp"
#include "quboflow/kernels/kernels.hpp"
#include "quboflow/qubo.hpp"
#include "quboflow/samplers.hpp"

using namespace quboflow;
using kernels::KernelOps;
using kernels::SaProblem;
using kernels::TermList;

namespace {

Qubo random_qubo(std::mt19937_64& rng, int m, double coupling_density = 0.4) {
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Qubo q;
  q.num_vars = m;
  q.linear.resize(static_cast<std::size_t>(m));
  for (double& v : q.linear) v = coeff(rng);
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k)
      if (unit(rng) < coupling_density) q.couplings.push_back({j, k, coeff(rng)});
  return q;
}

Qubo flow_qubo(int grid_points, int precision) {
  FlowParams p;
  p.grid_points = grid_points;
  const LinearSystem sys = assemble_system(p, initial_profile(p));
  const Matrix ad = expand_matrix(sys.to_dense(), FixedPointFormat(precision, 1));
  return build_qubo(ad, sys.rhs);
}

}  // namespace

TEST_CASE("term list mirrors eval_energy exactly") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 14);
    const Qubo qubo = random_qubo(rng, m);
    const TermList terms = TermList::compile(qubo);

    std::vector<std::uint64_t> states(64);
    for (auto& s : states) s = rng() & ((m == 64) ? ~0ull : ((1ull << m) - 1));
    std::vector<double> out(states.size());
    kernels::scalar_kernels().batch_energy(terms, states.data(), states.size(), out.data());

    for (std::size_t i = 0; i < states.size(); ++i) {
      BitVector q(static_cast<std::size_t>(m));
      for (int b = 0; b < m; ++b) q[static_cast<std::size_t>(b)] = (states[i] >> b) & 1ull;
      CHECK(out[i] == eval_energy(qubo, q));  // bitwise
    }
  }
}

TEST_CASE("avx2 batch energies are bitwise identical to scalar") {
  const KernelOps* avx2 = kernels::avx2_kernels();
  if (!avx2) {
    MESSAGE("AVX2 not available; skipping");
    return;
  }
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 24);
    const Qubo qubo = random_qubo(rng, m);
    const TermList terms = TermList::compile(qubo);

    const std::size_t count = 1 + (rng() % 1000);  // exercise the tail path
    std::vector<std::uint64_t> states(count);
    for (auto& s : states) s = rng() & ((1ull << m) - 1);

    std::vector<double> ref(count), vec(count);
    kernels::scalar_kernels().batch_energy(terms, states.data(), count, ref.data());
    avx2->batch_energy(terms, states.data(), count, vec.data());
    CHECK(std::memcmp(ref.data(), vec.data(), count * sizeof(double)) == 0);
  }
}

TEST_CASE("avx2 annealing chains land on bitwise identical states") {
  const KernelOps* avx2 = kernels::avx2_kernels();
  if (!avx2) {
    MESSAGE("AVX2 not available; skipping");
    return;
  }
  std::mt19937_64 rng(47);
  SUBCASE("random landscapes") {
    for (int trial = 0; trial < 6; ++trial) {
      const int m = 1 + static_cast<int>(rng() % 40);
      const Qubo qubo = random_qubo(rng, m);
      SamplerConfig cfg;
      cfg.sweeps = 60;
      const SaProblem problem =
          SaProblem::compile(qubo, annealing_temperatures(qubo, cfg));
      const std::size_t wps = problem.words_per_state();
      const std::uint64_t reads = 37;  // not a multiple of the lane width

      std::vector<std::uint64_t> ref(reads * wps), vec(reads * wps);
      kernels::scalar_kernels().run_reads(problem, 123 + trial, 0, reads, ref.data());
      avx2->run_reads(problem, 123 + trial, 0, reads, vec.data());
      CHECK(ref == vec);
    }
  }
  SUBCASE("flow landscape, offset batch") {
    const Qubo qubo = flow_qubo(7, 4);
    SamplerConfig cfg;
    cfg.sweeps = 100;
    const SaProblem problem = SaProblem::compile(qubo, annealing_temperatures(qubo, cfg));
    const std::size_t wps = problem.words_per_state();

    std::vector<std::uint64_t> ref(50 * wps), vec(50 * wps);
    kernels::scalar_kernels().run_reads(problem, 999, 17, 50, ref.data());
    avx2->run_reads(problem, 999, 17, 50, vec.data());
    CHECK(ref == vec);
  }
  SUBCASE("states wider than one word") {
    const Qubo qubo = random_qubo(rng, 80, 0.1);
    SamplerConfig cfg;
    cfg.sweeps = 40;
    const SaProblem problem = SaProblem::compile(qubo, annealing_temperatures(qubo, cfg));
    REQUIRE(problem.words_per_state() == 2);

    std::vector<std::uint64_t> ref(30 * 2), vec(30 * 2);
    kernels::scalar_kernels().run_reads(problem, 31337, 0, 30, ref.data());
    avx2->run_reads(problem, 31337, 0, 30, vec.data());
    CHECK(ref == vec);
  }
}

TEST_CASE("chains depend only on (seed, read index), not on batch splits") {
  const Qubo qubo = flow_qubo(5, 3);
  SamplerConfig cfg;
  cfg.sweeps = 50;
  const SaProblem problem = SaProblem::compile(qubo, annealing_temperatures(qubo, cfg));
  const std::size_t wps = problem.words_per_state();
  const std::uint64_t total = 20;

  std::vector<std::uint64_t> whole(total * wps);
  kernels::scalar_kernels().run_reads(problem, 7, 0, total, whole.data());

  std::vector<std::uint64_t> parts(total * wps);
  kernels::scalar_kernels().run_reads(problem, 7, 0, 8, parts.data());
  kernels::scalar_kernels().run_reads(problem, 7, 8, total - 8, parts.data() + 8 * wps);
  CHECK(whole == parts);

  if (const KernelOps* avx2 = kernels::avx2_kernels()) {
    std::vector<std::uint64_t> vec_parts(total * wps);
    avx2->run_reads(problem, 7, 0, 13, vec_parts.data());
    avx2->run_reads(problem, 7, 13, total - 13, vec_parts.data() + 13 * wps);
    CHECK(whole == vec_parts);
  }
}

TEST_CASE("kernel override pins the dispatch choice") {
  kernels::set_kernel_override(kernels::KernelKind::kScalar);
  CHECK(std::string(kernels::active_kernels().name) == "scalar");
  kernels::set_kernel_override(std::nullopt);
  if (kernels::avx2_kernels())
    CHECK(std::string(kernels::active_kernels().name) == "avx2");
}

TEST_CASE("term list compilation caps at 64 variables") {
  Qubo q;
  q.num_vars = 65;
  q.linear.assign(65, 0.0);
  CHECK_THROWS_AS(TermList::compile(q), CapacityError);
}

TEST_CASE("acceptance exponential tracks libm over the clamped range") {
  using kernels::detail::exp_clamped;
  // Above zero the probability saturates at >= 1 (always accept).
  CHECK(exp_clamped(0.0) == 1.0);
  CHECK(exp_clamped(5.0) == 1.0);
  // Below the clamp everything freezes at exp(-708), still accept-never
  // against uniforms in [0, 1).
  CHECK(exp_clamped(-1e9) == exp_clamped(-708.0));
  CHECK(exp_clamped(-708.0) > 0.0);

  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> arg(-708.0, 0.0);
  for (int i = 0; i < 20000; ++i) {
    const double x = arg(rng);
    const double got = exp_clamped(x);
    const double want = std::exp(x);
    CHECK(std::abs(got - want) <= 1e-13 * want);
  }
}
