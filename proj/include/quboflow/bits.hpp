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
#include <span>

#include "quboflow/fixed_point.hpp"

namespace quboflow {

/// Packing convention used everywhere states are stored in words: logical
/// bit i lives in word i/64 at bit position i%64.
inline std::size_t words_for_bits(std::size_t num_bits) { return (num_bits + 63) / 64; }

std::vector<std::uint64_t> pack_bits(const BitVector& bits);
BitVector unpack_bits(std::span<const std::uint64_t> words, std::size_t num_bits);

inline std::uint64_t bit_reverse64(std::uint64_t x) {
  x = ((x >> 1) & 0x5555555555555555ull) | ((x & 0x5555555555555555ull) << 1);
  x = ((x >> 2) & 0x3333333333333333ull) | ((x & 0x3333333333333333ull) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0Full) | ((x & 0x0F0F0F0F0F0F0F0Full) << 4);
  return __builtin_bswap64(x);
}

/// Lexicographic order on the logical bit sequence (bit 0 compared first).
inline bool lex_less(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t ra = bit_reverse64(a[i]);
    const std::uint64_t rb = bit_reverse64(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

}  // namespace quboflow
