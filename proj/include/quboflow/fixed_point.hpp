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
#include <vector>

#include "quboflow/matrix.hpp"

namespace quboflow {

/// Ordered sequence of binary values. When a vector of reals is encoded,
/// the length is an exact multiple of the format precision and each block
/// of `precision` bits holds one coordinate, most significant bit first.
using BitVector = std::vector<std::uint8_t>;

/// Unsigned fixed-point binary format: a real is represented by `precision`
/// bits q_1..q_n with weights 2^(radix_position - j), so the value is
/// sum_j 2^(radix_position - j) * q_j. All weights are positive, hence the
/// representable range is [0, 2^radix_position * (1 - 2^-precision)].
struct FixedPointFormat {
  int precision = 1;       // bits per real variable, n >= 1
  int radix_position = 1;  // fixed-point position j0

  FixedPointFormat() = default;
  FixedPointFormat(int precision_, int radix_position_);

  /// Weight of bit j (1-based): 2^(radix_position - j).
  double weight(int j) const;

  /// Largest representable value: 2^radix_position * (1 - 2^-precision).
  double max_value() const;

  /// Smallest positive step: 2^(radix_position - precision).
  double resolution() const;
};

enum class Rounding {
  kTruncate,  // largest representable value <= x
  kNearest,   // nearest representable value, ties away from zero
};

/// Value of one encoded block. `bits.size()` must equal `fmt.precision`.
double decode_scalar(const BitVector& bits, const FixedPointFormat& fmt);

/// Encode a non-negative in-range real. Truncation by default: the result
/// decodes to the largest representable value <= x, so
/// 0 <= x - decode(encode(x)) < fmt.resolution().
BitVector encode_scalar(double x, const FixedPointFormat& fmt,
                        Rounding rounding = Rounding::kTruncate);

/// Blockwise decode of `count` coordinates; q.size() must be count * precision.
std::vector<double> decode_vector(const BitVector& q, const FixedPointFormat& fmt,
                                  std::size_t count);

/// Blockwise encode; throws RangeError on the first out-of-range coordinate.
BitVector encode_vector(const std::vector<double>& values, const FixedPointFormat& fmt,
                        Rounding rounding = Rounding::kTruncate);

/// Expand each column c of A into `precision` weighted copies so that for any
/// real vector u with exact per-coordinate encodings q, A*u equals Ad*q.
/// Column block layout: expanded column c*n + (j-1) carries A(:,c) * weight(j).
Matrix expand_matrix(const Matrix& a, const FixedPointFormat& fmt);

}  // namespace quboflow
