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

// Reference kernels. The AVX2 variants in kernels_avx2.cpp mirror every
// floating-point operation here one lane at a time; keep the two files in
// sync when touching either.

#include <cmath>
#include <vector>

#include "chain_math.hpp"
#include "kernel_impls.hpp"

namespace quboflow::kernels::impl {

void batch_energy_scalar(const TermList& terms, const std::uint64_t* states,
                         std::size_t count, double* out) {
  const std::size_t nt = terms.masks.size();
  const std::uint64_t* masks = terms.masks.data();
  const double* coeffs = terms.coeffs.data();
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = states[i];
    double e = 0.0;
    for (std::size_t t = 0; t < nt; ++t) {
      const std::uint64_t msk = masks[t];
      const double m = ((s & msk) == msk) ? 1.0 : 0.0;
      e = std::fma(coeffs[t], m, e);
    }
    out[i] = e;
  }
}

void run_reads_scalar(const SaProblem& p, std::uint64_t seed, std::uint64_t first_read,
                      std::uint64_t count, std::uint64_t* out_states) {
  const int m = p.num_vars;
  const std::size_t wps = p.words_per_state();
  std::vector<double> sigma(static_cast<std::size_t>(m));
  std::vector<double> field(static_cast<std::size_t>(m));

  for (std::uint64_t i = 0; i < count; ++i) {
    detail::Xoshiro256pp rng = detail::chain_rng(seed, first_read + i);

    // Random initial state; sigma = +1 for bit 0, -1 for bit 1.
    std::uint64_t w = 0;
    for (int b = 0; b < m; ++b) {
      if ((b & 63) == 0) w = rng.next();
      sigma[static_cast<std::size_t>(b)] = ((w >> (b & 63)) & 1ull) ? -1.0 : 1.0;
    }

    // Local fields f_j = v_j + sum over set neighbors of w_jk, accumulated
    // in CSR order.
    for (int j = 0; j < m; ++j) {
      double f = p.linear[static_cast<std::size_t>(j)];
      for (std::int32_t e = p.adj_offsets[static_cast<std::size_t>(j)];
           e < p.adj_offsets[static_cast<std::size_t>(j) + 1]; ++e) {
        const double fadd = f + p.adj_weight[static_cast<std::size_t>(e)];
        const bool set = sigma[static_cast<std::size_t>(p.adj_index[static_cast<std::size_t>(e)])] < 0.0;
        f = set ? fadd : f;
      }
      field[static_cast<std::size_t>(j)] = f;
    }

    // Metropolis sweeps over variables in index order; one uniform draw per
    // proposal whether or not it is accepted.
    const std::size_t sweeps = p.sweeps();
    for (std::size_t s = 0; s < sweeps; ++s) {
      const double nit = p.neg_inv_temp[s];
      for (int j = 0; j < m; ++j) {
        const double u = detail::uniform_from_bits(rng.next());
        const double sj = sigma[static_cast<std::size_t>(j)];
        const double delta = sj * field[static_cast<std::size_t>(j)];
        const double prob = detail::exp_clamped(delta * nit);
        if (u < prob) {
          for (std::int32_t e = p.adj_offsets[static_cast<std::size_t>(j)];
               e < p.adj_offsets[static_cast<std::size_t>(j) + 1]; ++e) {
            const double t = p.adj_weight[static_cast<std::size_t>(e)] * sj;
            field[static_cast<std::size_t>(p.adj_index[static_cast<std::size_t>(e)])] += t;
          }
          sigma[static_cast<std::size_t>(j)] = -sj;
        }
      }
    }

    std::uint64_t* ow = out_states + i * wps;
    for (std::size_t wi = 0; wi < wps; ++wi) ow[wi] = 0;
    for (int b = 0; b < m; ++b)
      if (sigma[static_cast<std::size_t>(b)] < 0.0) ow[b >> 6] |= (1ull << (b & 63));
  }
}

}  // namespace quboflow::kernels::impl
