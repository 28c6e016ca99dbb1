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

// Arithmetic shared by the scalar and AVX2 chain kernels. Both compile
// against these constants and mirror the exact operation order, which is
// what makes the two paths bitwise interchangeable. Any change here must
// keep the scalar and vector implementations in lockstep.

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

namespace quboflow::kernels::detail {

// splitmix64; used only for seeding.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// xoshiro256++. One generator per chain; the vector kernel runs four of
// these side by side, one per lane.
struct Xoshiro256pp {
  std::uint64_t s0 = 0, s1 = 0, s2 = 0, s3 = 0;

  static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s0 + s3, 23) + s0;
    const std::uint64_t t = s1 << 17;
    s2 ^= s0;
    s3 ^= s1;
    s1 ^= s2;
    s0 ^= s3;
    s2 ^= t;
    s3 = rotl(s3, 45);
    return result;
  }
};

// Chain r of a batch depends only on (master_seed, r): splitting a batch of
// reads across calls or lanes cannot change any chain's trajectory.
inline Xoshiro256pp chain_rng(std::uint64_t master_seed, std::uint64_t read_index) {
  std::uint64_t sm = master_seed ^ (0xD1B54A32D192ED03ull * (read_index + 1));
  Xoshiro256pp rng;
  rng.s0 = splitmix64_next(sm);
  rng.s1 = splitmix64_next(sm);
  rng.s2 = splitmix64_next(sm);
  rng.s3 = splitmix64_next(sm);
  if ((rng.s0 | rng.s1 | rng.s2 | rng.s3) == 0) rng.s3 = 1;  // xoshiro forbids all-zero
  return rng;
}

// Uniform in [0, 1) with 52 random bits; the integer fits a double exactly.
constexpr double kUniformScale = 0x1.0p-52;

inline double uniform_from_bits(std::uint64_t x) {
  return static_cast<double>(x >> 12) * kUniformScale;
}

// exp(x) clamped for Metropolis acceptance: inputs are forced into
// [-708, 0], so x >= 0 yields exactly 1.0 (always accept) and the result is
// never subnormal. Cody-Waite reduction, degree-13 Taylor for e^r on
// [-ln2/2, ln2/2], 2^n applied through the exponent bits.
constexpr double kExpClampLo = -708.0;
constexpr double kExpLog2e = 0x1.71547652b82fep+0;
constexpr double kExpLn2Hi = 0x1.62e42fee00000p-1;
constexpr double kExpLn2Lo = 0x1.a39ef35793c76p-33;

// 1/k! for k = 13 down to 2 (Horner order); the trailing 1 + r is applied
// explicitly.
constexpr double kExpPoly[] = {
    1.0 / 6227020800.0,  // 1/13!
    1.0 / 479001600.0,   // 1/12!
    1.0 / 39916800.0,    // 1/11!
    1.0 / 3628800.0,     // 1/10!
    1.0 / 362880.0,      // 1/9!
    1.0 / 40320.0,       // 1/8!
    1.0 / 5040.0,        // 1/7!
    1.0 / 720.0,         // 1/6!
    1.0 / 120.0,         // 1/5!
    1.0 / 24.0,          // 1/4!
    1.0 / 6.0,           // 1/3!
    1.0 / 2.0,           // 1/2!
};
constexpr int kExpPolyCount = static_cast<int>(sizeof(kExpPoly) / sizeof(kExpPoly[0]));

// Scalar reference; the AVX2 kernel repeats exactly these operations per lane.
inline double exp_clamped(double x) {
  x = (x < 0.0) ? x : 0.0;
  x = (x > kExpClampLo) ? x : kExpClampLo;

  const double t = x * kExpLog2e;
  const double nd = std::nearbyint(t);  // ties to even, matches vroundpd
  double r = std::fma(nd, -kExpLn2Hi, x);
  r = std::fma(nd, -kExpLn2Lo, r);

  double p = kExpPoly[0];
  for (int i = 1; i < kExpPolyCount; ++i) p = std::fma(p, r, kExpPoly[i]);
  // e^r = 1 + r + r^2 * (poly)
  p = std::fma(p * r, r, r) + 1.0;

  const auto n = static_cast<std::int64_t>(nd);
  const double scale =
      std::bit_cast<double>(static_cast<std::uint64_t>(n + 1023) << 52);
  return p * scale;
}

}  // namespace quboflow::kernels::detail
