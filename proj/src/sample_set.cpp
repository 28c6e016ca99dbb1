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

#include "quboflow/sample_set.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "quboflow/errors.hpp"
#include "quboflow/kernels/kernels.hpp"
#include "quboflow/text.hpp"

namespace quboflow {

std::vector<std::uint64_t> pack_bits(const BitVector& bits) {
  std::vector<std::uint64_t> words(words_for_bits(bits.size()), 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) words[i >> 6] |= (1ull << (i & 63));
  return words;
}

BitVector unpack_bits(std::span<const std::uint64_t> words, std::size_t num_bits) {
  BitVector bits(num_bits);
  for (std::size_t i = 0; i < num_bits; ++i)
    bits[i] = static_cast<std::uint8_t>((words[i >> 6] >> (i & 63)) & 1ull);
  return bits;
}

std::string SampleSet::state_string(std::size_t i) const {
  std::string s(static_cast<std::size_t>(num_vars), '0');
  const auto w = state_words(i);
  for (std::size_t b = 0; b < s.size(); ++b)
    if ((w[b >> 6] >> (b & 63)) & 1ull) s[b] = '1';
  return s;
}

void SampleSet::sort_entries() {
  const std::size_t n = size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [this](std::uint32_t a, std::uint32_t b) {
    if (energies[a] != energies[b]) return energies[a] < energies[b];
    return lex_less(state_words(a), state_words(b));
  });

  std::vector<double> e2(n);
  std::vector<std::uint64_t> o2(n), w2(n * words_per_state);
  for (std::size_t i = 0; i < n; ++i) {
    e2[i] = energies[order[i]];
    o2[i] = occurrences[order[i]];
    const auto src = state_words(order[i]);
    std::copy(src.begin(), src.end(), w2.begin() + static_cast<std::ptrdiff_t>(i * words_per_state));
  }
  energies = std::move(e2);
  occurrences = std::move(o2);
  words = std::move(w2);
}

void SampleSet::validate(const Qubo& qubo) const {
  if (qubo.num_vars != num_vars)
    throw DimensionError("SampleSet::validate: variable count mismatch");
  if (occurrences.size() != size() || words.size() != size() * words_per_state)
    throw DimensionError("SampleSet::validate: ragged columns");

  std::uint64_t total = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (occurrences[i] == 0) throw ConfigError("SampleSet::validate: zero occurrence count");
    total += occurrences[i];
    if (i > 0) {
      if (energies[i] < energies[i - 1])
        throw ConfigError("SampleSet::validate: entries not sorted by energy");
      if (energies[i] == energies[i - 1] &&
          !lex_less(state_words(i - 1), state_words(i)))
        throw ConfigError("SampleSet::validate: duplicate state or broken tie order");
    }
  }
  if (total != num_reads)
    throw ConfigError("SampleSet::validate: occurrences sum to " + std::to_string(total) +
                      ", expected " + std::to_string(num_reads));

  if (num_vars >= 1 && num_vars <= 64) {
    const kernels::TermList terms = kernels::TermList::compile(qubo);
    constexpr std::size_t kChunk = 4096;
    std::vector<double> expect(kChunk);
    for (std::size_t i = 0; i < size(); i += kChunk) {
      const std::size_t n = std::min(kChunk, size() - i);
      kernels::scalar_kernels().batch_energy(terms, words.data() + i, n, expect.data());
      for (std::size_t j = 0; j < n; ++j)
        if (expect[j] != energies[i + j])
          throw ConfigError("SampleSet::validate: stored energy differs from eval_energy");
    }
  } else {
    for (std::size_t i = 0; i < size(); ++i)
      if (eval_energy(qubo, state(i)) != energies[i])
        throw ConfigError("SampleSet::validate: stored energy differs from eval_energy");
  }
}

void SampleSet::write_csv(std::ostream& os, std::size_t max_rows) const {
  os << "energy,occurrences,state\n";
  const std::size_t n = (max_rows == 0) ? size() : std::min(max_rows, size());
  for (std::size_t i = 0; i < n; ++i)
    os << format_double(energies[i]) << ',' << occurrences[i] << ',' << state_string(i)
       << '\n';
}

}  // namespace quboflow
