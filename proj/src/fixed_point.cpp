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

#include "quboflow/fixed_point.hpp"

#include <cmath>
#include <string>

#include "quboflow/errors.hpp"

namespace quboflow {

namespace {

// Largest precision for which every representable value and every partial sum
// stays exact in a double (and the block fits an unsigned 64-bit integer).
constexpr int kMaxPrecision = 52;
constexpr int kMaxRadixMagnitude = 500;

void check_block_length(std::size_t got, int precision, const char* where) {
  if (got != static_cast<std::size_t>(precision))
    throw FormatError(std::string(where) + ": bit count " + std::to_string(got) +
                      " does not match precision " + std::to_string(precision));
}

}  // namespace

FixedPointFormat::FixedPointFormat(int precision_, int radix_position_)
    : precision(precision_), radix_position(radix_position_) {
  if (precision < 1 || precision > kMaxPrecision)
    throw FormatError("FixedPointFormat: precision must be in [1, " +
                      std::to_string(kMaxPrecision) + "], got " + std::to_string(precision));
  if (radix_position < -kMaxRadixMagnitude || radix_position > kMaxRadixMagnitude)
    throw FormatError("FixedPointFormat: radix position out of range: " +
                      std::to_string(radix_position));
}

double FixedPointFormat::weight(int j) const { return std::ldexp(1.0, radix_position - j); }

double FixedPointFormat::max_value() const {
  // 2^j0 - 2^(j0-n); both terms and the difference are exact dyadics.
  return std::ldexp(1.0, radix_position) - std::ldexp(1.0, radix_position - precision);
}

double FixedPointFormat::resolution() const { return weight(precision); }

double decode_scalar(const BitVector& bits, const FixedPointFormat& fmt) {
  check_block_length(bits.size(), fmt.precision, "decode_scalar");
  // Assemble the block as an integer (MSB first) and scale once; every step
  // is exact since precision <= 52.
  std::uint64_t k = 0;
  for (int j = 0; j < fmt.precision; ++j) {
    const std::uint8_t b = bits[static_cast<std::size_t>(j)];
    if (b > 1) throw FormatError("decode_scalar: bit value must be 0 or 1");
    k = (k << 1) | b;
  }
  return std::ldexp(static_cast<double>(k), fmt.radix_position - fmt.precision);
}

BitVector encode_scalar(double x, const FixedPointFormat& fmt, Rounding rounding) {
  if (!(x >= 0.0))
    throw RangeError("encode_scalar: value " + std::to_string(x) + " is negative or NaN");
  if (x > fmt.max_value())
    throw RangeError("encode_scalar: value " + std::to_string(x) +
                     " exceeds representable maximum " + std::to_string(fmt.max_value()));

  // Scale by the LSB weight (exact, power of two) and reduce to an integer.
  const double scaled = std::ldexp(x, fmt.precision - fmt.radix_position);
  std::uint64_t k;
  if (rounding == Rounding::kTruncate) {
    k = static_cast<std::uint64_t>(std::floor(scaled));
  } else {
    k = static_cast<std::uint64_t>(std::llround(scaled));
  }
  const std::uint64_t kmax = (fmt.precision >= 64) ? ~0ull : ((1ull << fmt.precision) - 1ull);
  if (k > kmax) k = kmax;  // nearest rounding may land one step above the top code

  BitVector bits(static_cast<std::size_t>(fmt.precision));
  for (int j = 0; j < fmt.precision; ++j)
    bits[static_cast<std::size_t>(j)] =
        static_cast<std::uint8_t>((k >> (fmt.precision - 1 - j)) & 1ull);
  return bits;
}

std::vector<double> decode_vector(const BitVector& q, const FixedPointFormat& fmt,
                                  std::size_t count) {
  const std::size_t n = static_cast<std::size_t>(fmt.precision);
  if (q.size() != count * n)
    throw FormatError("decode_vector: bit count " + std::to_string(q.size()) +
                      " does not equal count*precision = " + std::to_string(count * n));
  std::vector<double> out(count);
  for (std::size_t c = 0; c < count; ++c) {
    BitVector block(q.begin() + static_cast<std::ptrdiff_t>(c * n),
                    q.begin() + static_cast<std::ptrdiff_t>((c + 1) * n));
    out[c] = decode_scalar(block, fmt);
  }
  return out;
}

BitVector encode_vector(const std::vector<double>& values, const FixedPointFormat& fmt,
                        Rounding rounding) {
  BitVector q;
  q.reserve(values.size() * static_cast<std::size_t>(fmt.precision));
  for (double v : values) {
    const BitVector block = encode_scalar(v, fmt, rounding);
    q.insert(q.end(), block.begin(), block.end());
  }
  return q;
}

Matrix expand_matrix(const Matrix& a, const FixedPointFormat& fmt) {
  const std::size_t n = static_cast<std::size_t>(fmt.precision);
  Matrix ad(a.rows(), a.cols() * n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const double v = a(i, c);
      for (std::size_t j = 0; j < n; ++j)
        ad(i, c * n + j) = std::ldexp(v, fmt.radix_position - static_cast<int>(j) - 1);
    }
  return ad;
}

}  // namespace quboflow
