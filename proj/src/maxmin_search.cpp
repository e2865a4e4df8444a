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

#include "limsim/maxmin_search.hpp"

#include <bit>

namespace limsim {

CandidateSet CandidateSet::all(std::size_t rows) {
  CandidateSet s = none(rows);
  for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~0ull;
  if (const std::size_t tail = rows % 64; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

CandidateSet CandidateSet::none(std::size_t rows) {
  CandidateSet s;
  s.rows_ = rows;
  s.words_.assign((rows + 63) / 64, 0);
  return s;
}

std::size_t CandidateSet::count() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool CandidateSet::contains(std::size_t row) const {
  if (row >= rows_) return false;
  return (words_[row / 64] >> (row % 64)) & 1u;
}

void CandidateSet::insert(std::size_t row) {
  if (row >= rows_) {
    throw Error(ErrorCode::kIndexOutOfRange, "candidate row out of range");
  }
  words_[row / 64] |= std::uint64_t{1} << (row % 64);
}

void CandidateSet::erase(std::size_t row) {
  if (row < rows_) words_[row / 64] &= ~(std::uint64_t{1} << (row % 64));
}

std::vector<std::size_t> CandidateSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t CandidateSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
  }
  return rows_;
}

bool CandidateSet::subset_of(const CandidateSet& other) const {
  if (rows_ != other.rows_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::string CandidateSet::to_string() const {
  std::string s(rows_, '0');
  for (std::size_t r = 0; r < rows_; ++r) {
    if (contains(r)) s[r] = '1';
  }
  return s;
}

CandidateSet step_keeping(const CandidateSet& candidates,
                          std::span<const Bit> and_results, Bit keep) {
  if (and_results.size() != candidates.rows()) {
    throw Error(ErrorCode::kWidthMismatch,
                "AND results do not cover every candidate row");
  }
  CandidateSet next = CandidateSet::none(candidates.rows());
  for (std::size_t r : candidates.members()) {
    if (and_results[r] == keep) next.insert(r);
  }
  // All-discard guard: a column with no winning bit says nothing.
  return next.empty() ? candidates : next;
}

CandidateSet step(const CandidateSet& candidates,
                  std::span<const Bit> and_results, SearchMode mode) {
  return step_keeping(candidates, and_results,
                      mode == SearchMode::kMax ? Bit::kOne : Bit::kZero);
}

Bit kept_value(SearchMode mode, Encoding encoding, std::size_t bit_position) {
  Bit keep = mode == SearchMode::kMax ? Bit::kOne : Bit::kZero;
  // A clear sign bit is the larger value.
  if (encoding == Encoding::kTwosComplement && bit_position == 0) {
    keep = complement(keep);
  }
  return keep;
}

std::size_t priority_select(const CandidateSet& candidates) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kEmptySet, "priority select on an empty set");
  }
  return candidates.first();
}

ExtremeResult find_extreme(MemoryArray& array, SearchMode mode,
                           Encoding encoding) {
  require_support(array.variant(), OperationKind::kAnd);
  const std::size_t rows = array.geometry().rows;
  const std::size_t width = array.geometry().cols;

  ExtremeResult result;
  CandidateSet candidates = CandidateSet::all(rows);
  for (std::size_t pos = 0; pos < width && candidates.count() > 1; ++pos) {
    StepTrace t;
    t.bit_position = pos;
    t.mask = one_hot_mask(width, pos);
    t.keep = kept_value(mode, encoding, pos);
    auto and_out = array.and_op(t.mask);
    t.and_results = std::move(and_out.per_row);
    t.event = std::move(and_out.event);
    t.candidates_before = candidates;
    candidates = step_keeping(candidates, t.and_results, t.keep);
    t.candidates_after = candidates;
    result.steps.push_back(std::move(t));
  }
  result.row = priority_select(candidates);
  result.value = array.read_word(result.row).first;
  result.final_candidates = std::move(candidates);
  return result;
}

}  // namespace limsim
