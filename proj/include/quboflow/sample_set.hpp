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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "quboflow/bits.hpp"
#include "quboflow/qubo.hpp"

namespace quboflow {

/// Distinct binary states with occurrence counts, as one batch of annealer
/// reads. Entries are kept sorted by ascending energy, ties broken by
/// lexicographic state order; occurrences sum to num_reads; every stored
/// energy equals eval_energy(state) bit-for-bit.
///
/// States are packed in column layout (words_per_state words per entry) so a
/// full exhaustive enumeration of 2^24 states stays affordable.
struct SampleSet {
  int num_vars = 0;
  std::size_t words_per_state = 0;
  std::uint64_t num_reads = 0;
  std::vector<double> energies;
  std::vector<std::uint64_t> occurrences;
  std::vector<std::uint64_t> words;

  static SampleSet empty(int num_vars_) {
    SampleSet s;
    s.num_vars = num_vars_;
    s.words_per_state = words_for_bits(static_cast<std::size_t>(num_vars_));
    return s;
  }

  std::size_t size() const { return energies.size(); }

  std::span<const std::uint64_t> state_words(std::size_t i) const {
    return {words.data() + i * words_per_state, words_per_state};
  }
  BitVector state(std::size_t i) const {
    return unpack_bits(state_words(i), static_cast<std::size_t>(num_vars));
  }
  /// Bits in logical order, e.g. "0110".
  std::string state_string(std::size_t i) const;

  /// Re-checks every invariant against the generating QUBO (distinctness,
  /// ordering, occurrence conservation, exact energies). Throws on violation.
  void validate(const Qubo& qubo) const;

  /// Sorts parallel columns by (energy, lexicographic state). Assumes
  /// distinct states.
  void sort_entries();

  /// CSV with header "energy,occurrences,state", rows in stored order.
  /// max_rows truncates large dumps (0 = no limit).
  void write_csv(std::ostream& os, std::size_t max_rows = 0) const;
};

}  // namespace quboflow
