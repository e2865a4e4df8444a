/*
 * Copyright 2026 The limsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Bit-serial maximum/minimum search. Each step places a one-hot mask on the
// bitlines (MSB first), reads the per-row AND results and discards the
// candidates holding the losing bit value, until one candidate remains or
// the word width is exhausted.

#ifndef LIMSIM_MAXMIN_SEARCH_HPP
#define LIMSIM_MAXMIN_SEARCH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "limsim/array_engine.hpp"
#include "limsim/core_model.hpp"

namespace limsim {

enum class SearchMode { kMax, kMin };
enum class Encoding { kUnsigned, kTwosComplement };

/// Row membership bitmap.
class CandidateSet {
 public:
  CandidateSet() = default;
  /// All `rows` rows present.
  static CandidateSet all(std::size_t rows);
  static CandidateSet none(std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }
  bool contains(std::size_t row) const;
  void insert(std::size_t row);
  void erase(std::size_t row);
  std::vector<std::size_t> members() const;
  /// Lowest member, or rows() when empty.
  std::size_t first() const noexcept;
  bool subset_of(const CandidateSet& other) const;

  /// One character per row, row 0 first.
  std::string to_string() const;

  friend bool operator==(const CandidateSet&, const CandidateSet&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::uint64_t> words_;
};

struct StepTrace {
  std::size_t bit_position = 0;
  Mask mask = Mask::zeros(1);
  // Bit value that survives this step (1 for Max on magnitude bits, flipped
  // for Min and for the sign bit of two's complement words).
  Bit keep = Bit::kOne;
  std::vector<Bit> and_results;
  CandidateSet candidates_before;
  CandidateSet candidates_after;
  SensingEvent event;
};

struct ExtremeResult {
  std::size_t row = 0;
  Word value = Word::zeros(1);
  CandidateSet final_candidates;
  std::vector<StepTrace> steps;
};

/// Keeps candidates whose result equals `keep`, unless none does, in which
/// case the set is returned unchanged.
CandidateSet step_keeping(const CandidateSet& candidates,
                          std::span<const Bit> and_results, Bit keep);

/// Max keeps ones, Min keeps zeros (unsigned magnitude bits).
CandidateSet step(const CandidateSet& candidates,
                  std::span<const Bit> and_results, SearchMode mode);

/// Surviving bit value at `bit_position` for the given mode and encoding.
Bit kept_value(SearchMode mode, Encoding encoding, std::size_t bit_position);

/// Lowest row index; kEmptySet on an empty set.
std::size_t priority_select(const CandidateSet& candidates);

/// Runs the search on a LiM array. kUnsupportedOperation otherwise.
ExtremeResult find_extreme(MemoryArray& array, SearchMode mode,
                           Encoding encoding);

}  // namespace limsim

#endif  // LIMSIM_MAXMIN_SEARCH_HPP
