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

// AVX2+FMA kernels. Vectorization is across states/chains: lane l performs
// exactly the operation sequence of kernels_scalar.cpp for its state/chain,
// so results are bitwise identical to the scalar path. Masked state updates
// use blends, never multiply-by-zero, to keep that guarantee airtight.

#ifdef QUBOFLOW_HAVE_AVX2_TU

#include <immintrin.h>

#include <cstring>
#include <vector>

#include "chain_math.hpp"
#include "kernel_impls.hpp"

namespace quboflow::kernels::impl {

namespace {

constexpr int kLanes = 4;

inline __m256i rotl64(__m256i x, int k) {
  return _mm256_or_si256(_mm256_slli_epi64(x, k), _mm256_srli_epi64(x, 64 - k));
}

// Four xoshiro256++ generators side by side.
struct XoshiroX4 {
  __m256i s0, s1, s2, s3;

  static XoshiroX4 seeded(std::uint64_t master, std::uint64_t first_read) {
    detail::Xoshiro256pp lane[kLanes];
    for (int l = 0; l < kLanes; ++l) lane[l] = detail::chain_rng(master, first_read + l);
    XoshiroX4 r;
    r.s0 = _mm256_set_epi64x(static_cast<long long>(lane[3].s0), static_cast<long long>(lane[2].s0),
                             static_cast<long long>(lane[1].s0), static_cast<long long>(lane[0].s0));
    r.s1 = _mm256_set_epi64x(static_cast<long long>(lane[3].s1), static_cast<long long>(lane[2].s1),
                             static_cast<long long>(lane[1].s1), static_cast<long long>(lane[0].s1));
    r.s2 = _mm256_set_epi64x(static_cast<long long>(lane[3].s2), static_cast<long long>(lane[2].s2),
                             static_cast<long long>(lane[1].s2), static_cast<long long>(lane[0].s2));
    r.s3 = _mm256_set_epi64x(static_cast<long long>(lane[3].s3), static_cast<long long>(lane[2].s3),
                             static_cast<long long>(lane[1].s3), static_cast<long long>(lane[0].s3));
    return r;
  }

  __m256i next() {
    const __m256i result = _mm256_add_epi64(rotl64(_mm256_add_epi64(s0, s3), 23), s0);
    const __m256i t = _mm256_slli_epi64(s1, 17);
    s2 = _mm256_xor_si256(s2, s0);
    s3 = _mm256_xor_si256(s3, s1);
    s1 = _mm256_xor_si256(s1, s2);
    s0 = _mm256_xor_si256(s0, s3);
    s2 = _mm256_xor_si256(s2, t);
    s3 = rotl64(s3, 45);
    return result;
  }
};

// (x >> 12) * 2^-52, matching uniform_from_bits lane-wise. The shifted value
// is below 2^52, so the magic-number integer-to-double conversion is exact.
inline __m256d uniform_x4(__m256i x) {
  const __m256i magic = _mm256_set1_epi64x(0x4330000000000000ll);
  const __m256i mant = _mm256_or_si256(_mm256_srli_epi64(x, 12), magic);
  const __m256d d = _mm256_sub_pd(_mm256_castsi256_pd(mant), _mm256_set1_pd(0x1.0p52));
  return _mm256_mul_pd(d, _mm256_set1_pd(detail::kUniformScale));
}

// exp_clamped lane-wise; see chain_math.hpp for the scalar reference.
inline __m256d exp_clamped_x4(__m256d x) {
  x = _mm256_min_pd(x, _mm256_setzero_pd());
  x = _mm256_max_pd(x, _mm256_set1_pd(detail::kExpClampLo));

  const __m256d t = _mm256_mul_pd(x, _mm256_set1_pd(detail::kExpLog2e));
  const __m256d nd = _mm256_round_pd(t, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(nd, _mm256_set1_pd(detail::kExpLn2Hi), x);
  r = _mm256_fnmadd_pd(nd, _mm256_set1_pd(detail::kExpLn2Lo), r);

  __m256d p = _mm256_set1_pd(detail::kExpPoly[0]);
  for (int i = 1; i < detail::kExpPolyCount; ++i)
    p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(detail::kExpPoly[i]));
  const __m256d pr = _mm256_mul_pd(p, r);
  p = _mm256_add_pd(_mm256_fmadd_pd(pr, r, r), _mm256_set1_pd(1.0));

  const __m128i n32 = _mm256_cvtpd_epi32(nd);
  const __m256i n64 = _mm256_cvtepi32_epi64(n32);
  const __m256i bits = _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
}

inline __m256d negate(__m256d x) {
  return _mm256_xor_pd(x, _mm256_set1_pd(-0.0));
}

// Four chains in lockstep. Layout: sigma/field are var-major with 4 lanes
// per variable.
void run_chain_group(const SaProblem& p, std::uint64_t seed, std::uint64_t first_read,
                     double* sigma, double* field, std::uint64_t* out_states,
                     std::size_t wps) {
  const int m = p.num_vars;
  XoshiroX4 rng = XoshiroX4::seeded(seed, first_read);

  const __m256i one64 = _mm256_set1_epi64x(1);
  const __m256d plus1 = _mm256_set1_pd(1.0);
  const __m256d minus1 = _mm256_set1_pd(-1.0);

  __m256i w = _mm256_setzero_si256();
  for (int b = 0; b < m; ++b) {
    if ((b & 63) == 0) w = rng.next();
    const __m256i bit = _mm256_and_si256(_mm256_srli_epi64(w, b & 63), one64);
    const __m256d set = _mm256_castsi256_pd(_mm256_cmpeq_epi64(bit, one64));
    _mm256_storeu_pd(sigma + 4 * b, _mm256_blendv_pd(plus1, minus1, set));
  }

  for (int j = 0; j < m; ++j) {
    __m256d f = _mm256_set1_pd(p.linear[static_cast<std::size_t>(j)]);
    for (std::int32_t e = p.adj_offsets[static_cast<std::size_t>(j)];
         e < p.adj_offsets[static_cast<std::size_t>(j) + 1]; ++e) {
      const __m256d fadd = _mm256_add_pd(f, _mm256_set1_pd(p.adj_weight[static_cast<std::size_t>(e)]));
      const __m256d sk = _mm256_loadu_pd(sigma + 4 * p.adj_index[static_cast<std::size_t>(e)]);
      const __m256d set = _mm256_cmp_pd(sk, _mm256_setzero_pd(), _CMP_LT_OQ);
      f = _mm256_blendv_pd(f, fadd, set);
    }
    _mm256_storeu_pd(field + 4 * j, f);
  }

  const std::size_t sweeps = p.sweeps();
  for (std::size_t s = 0; s < sweeps; ++s) {
    const __m256d nit = _mm256_set1_pd(p.neg_inv_temp[s]);
    for (int j = 0; j < m; ++j) {
      const __m256d u = uniform_x4(rng.next());
      const __m256d sj = _mm256_loadu_pd(sigma + 4 * j);
      const __m256d delta = _mm256_mul_pd(sj, _mm256_loadu_pd(field + 4 * j));
      const __m256d prob = exp_clamped_x4(_mm256_mul_pd(delta, nit));
      const __m256d accept = _mm256_cmp_pd(u, prob, _CMP_LT_OQ);
      if (_mm256_movemask_pd(accept) == 0) continue;
      for (std::int32_t e = p.adj_offsets[static_cast<std::size_t>(j)];
           e < p.adj_offsets[static_cast<std::size_t>(j) + 1]; ++e) {
        const std::int32_t k = p.adj_index[static_cast<std::size_t>(e)];
        const __m256d t = _mm256_mul_pd(_mm256_set1_pd(p.adj_weight[static_cast<std::size_t>(e)]), sj);
        const __m256d fk = _mm256_loadu_pd(field + 4 * k);
        _mm256_storeu_pd(field + 4 * k, _mm256_blendv_pd(fk, _mm256_add_pd(fk, t), accept));
      }
      _mm256_storeu_pd(sigma + 4 * j, _mm256_blendv_pd(sj, negate(sj), accept));
    }
  }

  for (int l = 0; l < kLanes; ++l) {
    std::uint64_t* ow = out_states + static_cast<std::size_t>(l) * wps;
    for (std::size_t wi = 0; wi < wps; ++wi) ow[wi] = 0;
    for (int b = 0; b < m; ++b)
      if (sigma[4 * b + l] < 0.0) ow[b >> 6] |= (1ull << (b & 63));
  }
}

}  // namespace

void batch_energy_avx2(const TermList& terms, const std::uint64_t* states,
                       std::size_t count, double* out) {
  const std::size_t nt = terms.masks.size();
  const std::uint64_t* masks = terms.masks.data();
  const double* coeffs = terms.coeffs.data();
  const __m256d one = _mm256_set1_pd(1.0);

  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(states + i));
    __m256d e = _mm256_setzero_pd();
    for (std::size_t t = 0; t < nt; ++t) {
      const __m256i msk = _mm256_set1_epi64x(static_cast<long long>(masks[t]));
      const __m256i hit = _mm256_cmpeq_epi64(_mm256_and_si256(s, msk), msk);
      const __m256d m = _mm256_and_pd(one, _mm256_castsi256_pd(hit));
      e = _mm256_fmadd_pd(_mm256_set1_pd(coeffs[t]), m, e);
    }
    _mm256_storeu_pd(out + i, e);
  }
  if (i < count) batch_energy_scalar(terms, states + i, count - i, out + i);
}

void run_reads_avx2(const SaProblem& p, std::uint64_t seed, std::uint64_t first_read,
                    std::uint64_t count, std::uint64_t* out_states) {
  const std::size_t wps = p.words_per_state();
  std::vector<double> sigma(4 * static_cast<std::size_t>(p.num_vars));
  std::vector<double> field(4 * static_cast<std::size_t>(p.num_vars));

  std::uint64_t i = 0;
  for (; i + kLanes <= count; i += kLanes)
    run_chain_group(p, seed, first_read + i, sigma.data(), field.data(),
                    out_states + i * wps, wps);
  if (i < count)
    run_reads_scalar(p, seed, first_read + i, count - i, out_states + i * wps);
}

}  // namespace quboflow::kernels::impl

#endif  // QUBOFLOW_HAVE_AVX2_TU
