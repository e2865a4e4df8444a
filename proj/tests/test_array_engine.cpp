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


#include <gtest/gtest.h>

#include <algorithm>

#include "limsim/array_engine.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace limsim;

namespace {

std::vector<oracle::Row> fill(MemoryArray& a, oracle::Gen& gen) {
  std::vector<oracle::Row> rows;
  for (std::size_t r = 0; r < a.geometry().rows; ++r) {
    rows.push_back(gen.bits(a.geometry().cols));
    a.write_word(r, oracle::to_word(rows.back()));
  }
  return rows;
}

std::size_t count_ones(const std::vector<Bit>& v) {
  return static_cast<std::size_t>(std::count(v.begin(), v.end(), Bit::kOne));
}

}  // namespace

TEST(MemoryArray, StartsZeroed) {
  MemoryArray a({3, 5}, CellVariant::kSram6T);
  for (std::size_t r = 0; r < 3; ++r) {
    EXPECT_EQ(a.read_word(r).first, Word::zeros(5));
  }
}

TEST(MemoryArray, WriteReadRoundTrip) {
  oracle::Gen gen(31);
  for (CellVariant v : kAllVariants) {
    for (int t = 0; t < 20; ++t) {
      MemoryArray a({gen.range(1, 40), gen.range(1, 70)}, v);
      const auto rows = fill(a, gen);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        EXPECT_EQ(a.read_word(r).first, oracle::to_word(rows[r]));
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
          EXPECT_EQ(a.cell(r, c), to_bit(rows[r][c]));
        }
      }
    }
  }
}

TEST(MemoryArray, ReadWriteEvents) {
  MemoryArray a({8, 16}, CellVariant::kCamNor);
  const auto w = a.write_word(2, Word::zeros(16));
  EXPECT_EQ(w.operation, OperationKind::kWrite);
  EXPECT_EQ(w.lines_charged, 16u);
  EXPECT_EQ(w.dummy_window_units, 0u);
  EXPECT_EQ(w.bitline_pairs, 16u);
  EXPECT_EQ(w.cells_per_bitline, 8u);
  const auto r = a.read_word(2).second;
  EXPECT_EQ(r.operation, OperationKind::kRead);
  EXPECT_EQ(r.lines_discharged, 16u);
  EXPECT_EQ(r.lines_charged, 0u);
}

TEST(MemoryArray, Errors) {
  EXPECT_LIM_ERROR(MemoryArray({0, 4}, CellVariant::kSram6T), ErrorCode::kInvalidWidth);
  MemoryArray a({4, 4}, CellVariant::kSram6T);
  EXPECT_LIM_ERROR(a.write_word(4, Word::zeros(4)), ErrorCode::kIndexOutOfRange);
  EXPECT_LIM_ERROR(a.write_word(0, Word::zeros(3)), ErrorCode::kWidthMismatch);
  EXPECT_LIM_ERROR(a.read_word(9), ErrorCode::kIndexOutOfRange);
  EXPECT_LIM_ERROR(a.cell(0, 4), ErrorCode::kIndexOutOfRange);
  EXPECT_LIM_ERROR(a.search(Word::zeros(4)), ErrorCode::kUnsupportedOperation);
  EXPECT_LIM_ERROR(a.and_op(Mask::zeros(4)), ErrorCode::kUnsupportedOperation);
  MemoryArray cam({4, 4}, CellVariant::kCamNor);
  EXPECT_LIM_ERROR(cam.and_op(Mask::zeros(4)), ErrorCode::kUnsupportedOperation);
  EXPECT_LIM_ERROR(cam.search(Word::zeros(5)), ErrorCode::kWidthMismatch);
}

TEST(Search, MatchesRowEquality) {
  oracle::Gen gen(32);
  const CellVariant variants[] = {CellVariant::kCamNor, CellVariant::kLimDynamic,
                                  CellVariant::kLimStatic, CellVariant::kLimSpecial};
  for (CellVariant v : variants) {
    for (int t = 0; t < 30; ++t) {
      const std::size_t cols = gen.range(1, 6);  // narrow so matches happen
      MemoryArray a({gen.range(1, 40), cols}, v);
      const auto rows = fill(a, gen);
      const auto key = gen.bits(cols);
      const auto res = a.search(oracle::to_word(key));
      ASSERT_EQ(res.per_row.size(), rows.size());
      std::size_t matches = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const bool eq = rows[r] == key;
        EXPECT_EQ(res.per_row[r], to_bit(eq));
        matches += eq;
      }
      EXPECT_EQ(res.event.lines_charged, matches);
      EXPECT_EQ(res.event.lines_discharged, rows.size() - matches);
      EXPECT_EQ(res.event.dummy_window_units, 1u);
      EXPECT_EQ(res.event.per_row_result, res.per_row);
    }
  }
}

TEST(And, MatchesOracleAndCountsLines) {
  oracle::Gen gen(33);
  for (CellVariant v : kLimVariants) {
    for (int t = 0; t < 40; ++t) {
      MemoryArray a({gen.range(1, 50), gen.range(1, 40)}, v);
      const auto rows = fill(a, gen);
      const auto m = gen.bits(a.geometry().cols);
      const auto res = a.and_op(oracle::to_mask(m));
      for (std::size_t r = 0; r < rows.size(); ++r) {
        EXPECT_EQ(res.per_row[r], to_bit(oracle::and_line(v, rows[r], m)));
      }
      const std::size_t ones = count_ones(res.per_row);
      // Dynamic/static lines carry the complement; special carries the result.
      const std::size_t charged =
          v == CellVariant::kLimSpecial ? ones : rows.size() - ones;
      EXPECT_EQ(res.event.lines_charged, charged);
      EXPECT_EQ(res.event.lines_charged + res.event.lines_discharged, rows.size());
    }
  }
}

TEST(And, OneHotOnWideRows) {
  oracle::Gen gen(34);
  for (CellVariant v : kLimVariants) {
    for (int t = 0; t < 300; ++t) {
      MemoryArray a({1, 64}, v);
      const auto rows = fill(a, gen);
      const std::size_t j = gen.range(0, 63);
      EXPECT_EQ(a.and_op(one_hot_mask(64, j)).per_row[0], to_bit(rows[0][j]));
    }
  }
}

TEST(And, GateCommutations) {
  oracle::Gen gen(35);
  MemoryArray dyn({16, 16}, CellVariant::kLimDynamic);
  MemoryArray st({16, 16}, CellVariant::kLimStatic);
  MemoryArray sp({16, 16}, CellVariant::kLimSpecial);
  const auto rows = fill(dyn, gen);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    st.write_word(r, oracle::to_word(rows[r]));
    sp.write_word(r, oracle::to_word(rows[r]));
  }
  oracle::Row prev_gate(16 * 16, 0);
  for (int t = 0; t < 10; ++t) {
    const auto m = gen.bits(16);
    std::uint64_t high = 0, toggles = 0;
    for (std::size_t r = 0; r < 16; ++r) {
      for (std::size_t c = 0; c < 16; ++c) {
        const int g = rows[r][c] & m[c];
        high += g;
        toggles += g != prev_gate[r * 16 + c];
        prev_gate[r * 16 + c] = g;
      }
    }
    EXPECT_EQ(dyn.and_op(oracle::to_mask(m)).event.gate_commutations, 256 - high);
    EXPECT_EQ(st.and_op(oracle::to_mask(m)).event.gate_commutations, toggles);
    EXPECT_EQ(sp.and_op(oracle::to_mask(m)).event.gate_commutations, 0u);
  }
}

TEST(And, RepeatedMaskLeavesStaticGatesQuiet) {
  MemoryArray st({4, 4}, CellVariant::kLimStatic);
  st.write_word(1, Word::parse("1111"));
  const Mask m = Mask::parse("1100");
  EXPECT_EQ(st.and_op(m).event.gate_commutations, 2u);
  EXPECT_EQ(st.and_op(m).event.gate_commutations, 0u);
}

TEST(Phases, SequencesPerOperation) {
  using P = Phase;
  const auto read = phase_sequence(OperationKind::kRead, CellVariant::kSram6T);
  EXPECT_EQ(read.size(), 3u);
  EXPECT_EQ(phase_sequence(OperationKind::kWrite, CellVariant::kCamNor).size(), 2u);
  const auto dyn = phase_sequence(OperationKind::kAnd, CellVariant::kLimDynamic);
  ASSERT_EQ(dyn.size(), 4u);
  EXPECT_NE(std::find(dyn[0].begin(), dyn[0].end(), P::kGatePrecharge), dyn[0].end());
  const auto st = phase_sequence(OperationKind::kAnd, CellVariant::kLimStatic);
  ASSERT_EQ(st.size(), 4u);
  EXPECT_NE(std::find(st[0].begin(), st[0].end(), P::kMaskLoad), st[0].end());
  EXPECT_EQ(std::find(st[0].begin(), st[0].end(), P::kGatePrecharge), st[0].end());
  EXPECT_LIM_ERROR(phase_sequence(OperationKind::kSearch, CellVariant::kSram6T),
                   ErrorCode::kUnsupportedOperation);
}
