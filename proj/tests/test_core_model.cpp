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

#include "limsim/core_model.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace limsim;

TEST(Word, ParseRendersMsbFirst) {
  const Word w = Word::parse("1011");
  EXPECT_EQ(w.width(), 4u);
  EXPECT_EQ(w[0], Bit::kOne);
  EXPECT_EQ(w[1], Bit::kZero);
  EXPECT_EQ(w.to_string(), "1011");
  EXPECT_EQ(w.to_unsigned(), 11u);
  EXPECT_EQ(w.popcount(), 3u);
}

TEST(Word, EmptyIsInvalidWidth) {
  EXPECT_LIM_ERROR(Word(std::vector<Bit>{}), ErrorCode::kInvalidWidth);
  EXPECT_LIM_ERROR(Word::parse(""), ErrorCode::kInvalidWidth);
  EXPECT_LIM_ERROR(Mask::zeros(0), ErrorCode::kInvalidWidth);
}

TEST(Word, RejectsNonBinaryText) {
  EXPECT_LIM_ERROR(Word::parse("10x1"), ErrorCode::kInvalidArgument);
}

TEST(Word, AtChecksBounds) {
  const Word w = Word::zeros(3);
  EXPECT_LIM_ERROR(w.at(3), ErrorCode::kIndexOutOfRange);
}

TEST(Word, FromUnsignedRoundTrip) {
  oracle::Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    const std::size_t width = gen.range(1, 64);
    const oracle::Row r = gen.bits(width);
    const std::uint64_t v = oracle::as_unsigned(r);
    const Word w = Word::from_unsigned(v, width);
    EXPECT_EQ(w, oracle::to_word(r));
    EXPECT_EQ(w.to_unsigned(), v);
  }
  EXPECT_LIM_ERROR(Word::from_unsigned(1, 65), ErrorCode::kInvalidWidth);
}

TEST(Word, SignedViewMatchesTwosComplement) {
  EXPECT_EQ(Word::parse("1000").to_signed(), -8);
  EXPECT_EQ(Word::parse("1111").to_signed(), -1);
  EXPECT_EQ(Word::parse("0111").to_signed(), 7);
  EXPECT_EQ(Word::parse("1").to_signed(), -1);
  oracle::Gen gen(12);
  for (int i = 0; i < 500; ++i) {
    const oracle::Row r = gen.bits(gen.range(1, 64));
    EXPECT_EQ(oracle::to_word(r).to_signed(), oracle::as_signed(r));
  }
}

TEST(Word, IntegerViewNeedsAtMost64Bits) {
  EXPECT_LIM_ERROR(Word::zeros(65).to_unsigned(), ErrorCode::kInvalidWidth);
}

TEST(Mask, OneHotSelectsSingleColumn) {
  const Mask m = one_hot_mask(5, 2);
  EXPECT_EQ(m.to_string(), "00100");
  EXPECT_TRUE(m.selected(2));
  EXPECT_FALSE(m.selected(0));
  EXPECT_LIM_ERROR(one_hot_mask(5, 5), ErrorCode::kIndexOutOfRange);
  EXPECT_LIM_ERROR(one_hot_mask(0, 0), ErrorCode::kInvalidWidth);
}

TEST(Bit, Operators) {
  EXPECT_EQ(Bit::kOne & Bit::kZero, Bit::kZero);
  EXPECT_EQ(Bit::kOne | Bit::kZero, Bit::kOne);
  EXPECT_EQ(complement(Bit::kZero), Bit::kOne);
}

TEST(Variant, SupportMatrix) {
  for (CellVariant v : kAllVariants) {
    EXPECT_TRUE(supports(v, OperationKind::kRead));
    EXPECT_TRUE(supports(v, OperationKind::kWrite));
  }
  EXPECT_FALSE(supports(CellVariant::kSram6T, OperationKind::kSearch));
  EXPECT_TRUE(supports(CellVariant::kCamNor, OperationKind::kSearch));
  EXPECT_FALSE(supports(CellVariant::kCamNor, OperationKind::kAnd));
  for (CellVariant v : kLimVariants) {
    EXPECT_TRUE(supports(v, OperationKind::kSearch));
    EXPECT_TRUE(supports(v, OperationKind::kAnd));
  }
  EXPECT_LIM_ERROR(require_support(CellVariant::kSram6T, OperationKind::kSearch),
                   ErrorCode::kUnsupportedOperation);
}

TEST(Variant, IdsAndLabelsParseBack) {
  for (CellVariant v : kAllVariants) {
    EXPECT_EQ(parse_variant(id(v)), v);
    EXPECT_EQ(parse_variant(label(v)), v);
  }
  for (OperationKind op : kAllOperations) {
    EXPECT_EQ(parse_operation(id(op)), op);
  }
  EXPECT_EQ(label(CellVariant::kLimStatic), "AND ST");
  EXPECT_FALSE(parse_variant("dram").has_value());
}

TEST(Geometry, Validation) {
  EXPECT_LIM_ERROR((ArrayGeometry{0, 4}.validate()), ErrorCode::kInvalidWidth);
  EXPECT_LIM_ERROR((ArrayGeometry{4, 0}.validate()), ErrorCode::kInvalidWidth);
  EXPECT_TRUE((ArrayGeometry{64, 32}.block_aligned()));
  EXPECT_FALSE((ArrayGeometry{48, 32}.block_aligned()));
}

TEST(SimulationParams, RejectsNonPositive) {
  EXPECT_LIM_ERROR((SimulationParams{0.0, 1.0}.validate()),
                   ErrorCode::kInvalidArgument);
  EXPECT_LIM_ERROR((SimulationParams{1.0, -1.0}.validate()),
                   ErrorCode::kInvalidArgument);
  EXPECT_NO_THROW((SimulationParams{}.validate()));
}
