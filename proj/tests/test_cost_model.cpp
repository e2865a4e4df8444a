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

#include <cmath>
#include <map>
#include <sstream>

#include "limsim/array_engine.hpp"
#include "limsim/cost_model.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace limsim;
using namespace limsim::cost;

namespace {

using V = CellVariant;
using Op = OperationKind;

// Published 256x256 energy-delay products, pJ·ps.
const std::map<std::pair<V, Op>, double>& published_edp() {
  static const std::map<std::pair<V, Op>, double> table = {
      {{V::kSram6T, Op::kWrite}, 134},     {{V::kSram6T, Op::kRead}, 118},
      {{V::kCamNor, Op::kWrite}, 275},     {{V::kCamNor, Op::kRead}, 230},
      {{V::kCamNor, Op::kSearch}, 236},    {{V::kLimSpecial, Op::kWrite}, 309},
      {{V::kLimSpecial, Op::kRead}, 260},  {{V::kLimSpecial, Op::kSearch}, 717},
      {{V::kLimSpecial, Op::kAnd}, 98},    {{V::kLimDynamic, Op::kWrite}, 596},
      {{V::kLimDynamic, Op::kRead}, 451},  {{V::kLimDynamic, Op::kSearch}, 1152},
      {{V::kLimDynamic, Op::kAnd}, 2008},  {{V::kLimStatic, Op::kWrite}, 961},
      {{V::kLimStatic, Op::kRead}, 641},   {{V::kLimStatic, Op::kSearch}, 601},
      {{V::kLimStatic, Op::kAnd}, 76},
  };
  return table;
}

std::string cell_text(const std::string& csv, const std::string& row,
                      std::size_t col) {
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(row + ",", 0) != 0) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string x; std::getline(ss, x, ',');) f.push_back(x);
    while (f.size() < col + 1) f.push_back("");
    return f[col];
  }
  return "<missing row>";
}

SensingEvent and_event(V v, std::size_t n, std::uint64_t seed, const Mask& mask) {
  oracle::Gen gen(seed);
  MemoryArray a({n, n}, v);
  for (std::size_t r = 0; r < n; ++r) a.write_word(r, oracle::to_word(gen.bits(n)));
  return a.and_op(mask).event;
}

double estimate(const SensingEvent& ev, V v) {
  return structural_estimate(ev, cell::default_bitline_load(v), {}).estimate;
}

}  // namespace

TEST(Calibration, SeededHoldsPublishedValues) {
  const auto cal = CalibrationTable::seeded();
  EXPECT_EQ(cal.size(), 17u);
  for (const auto& [key, value] : published_edp()) {
    EXPECT_EQ(edp_lookup(cal, key.first, key.second, 256), value);
  }
}

TEST(Calibration, UndefinedCellsAreRejected) {
  const auto cal = CalibrationTable::seeded();
  EXPECT_LIM_ERROR(edp_lookup(cal, V::kSram6T, Op::kSearch, 256),
                   ErrorCode::kUnsupportedOperation);
  EXPECT_LIM_ERROR(edp_lookup(cal, V::kSram6T, Op::kAnd, 256),
                   ErrorCode::kUnsupportedOperation);
  EXPECT_LIM_ERROR(edp_lookup(cal, V::kCamNor, Op::kAnd, 256),
                   ErrorCode::kUnsupportedOperation);
}

TEST(Calibration, OtherSizesAreUncalibrated) {
  const auto cal = CalibrationTable::seeded();
  for (std::size_t n : {64u, 128u, 192u}) {
    EXPECT_FALSE(cal.calibrated_at(n));
    EXPECT_LIM_ERROR(edp_lookup(cal, V::kSram6T, Op::kRead, n),
                     ErrorCode::kUncalibratedPoint);
  }
  EXPECT_TRUE(cal.calibrated_at(256));
}

TEST(Calibration, TextRoundTrip) {
  const auto cal = CalibrationTable::seeded();
  const auto back = CalibrationTable::parse(cal.to_text());
  EXPECT_EQ(back.to_text(), cal.to_text());
  for (const auto& [key, value] : published_edp()) {
    EXPECT_EQ(back.lookup(key.first, key.second, 256), value);
  }
}

TEST(Calibration, ParseErrors) {
  EXPECT_LIM_ERROR(CalibrationTable::parse("sram6t,read,256"), ErrorCode::kInvalidConfig);
  EXPECT_LIM_ERROR(CalibrationTable::parse("dram,read,256,1"), ErrorCode::kInvalidConfig);
  EXPECT_LIM_ERROR(CalibrationTable::parse("sram6t,read,256,abc"),
                   ErrorCode::kInvalidConfig);
  EXPECT_LIM_ERROR(CalibrationTable::parse("sram6t,read,256,-3"),
                   ErrorCode::kNonPositiveEdp);
  EXPECT_LIM_ERROR(CalibrationTable::parse("sram6t,search,256,3"),
                   ErrorCode::kUnsupportedOperation);
  EXPECT_LIM_ERROR(CalibrationTable::load("/nonexistent/cal.csv"), ErrorCode::kIoError);
  const auto t = CalibrationTable::parse("# comment\nmemory,op,size,edp_pj_ps\n\nsram6t,read,64,12.5\n");
  EXPECT_EQ(t.lookup(V::kSram6T, Op::kRead, 64), 12.5);
}

TEST(Calibration, ScalingHookMustBeMonotone) {
  auto cal = CalibrationTable::seeded();
  cal.set_scaling_hook([](V, Op, std::size_t n) { return static_cast<double>(n) / 16.0; });
  EXPECT_DOUBLE_EQ(cal.lookup(V::kSram6T, Op::kRead, 128), 8.0);
  EXPECT_LIM_ERROR(cal.lookup(V::kSram6T, Op::kRead, 1024), ErrorCode::kInvalidArgument);
  cal.set_scaling_hook([](V, Op, std::size_t) { return 0.0; });
  EXPECT_LIM_ERROR(cal.lookup(V::kSram6T, Op::kRead, 128), ErrorCode::kNonPositiveEdp);
}

TEST(RelativeVariation, MatchesRatioForm) {
  oracle::Gen gen(51);
  for (int i = 0; i < 2000; ++i) {
    const double a = 1.0 + static_cast<double>(gen.range(0, 100000)) / 7.0;
    const double b = 1.0 + static_cast<double>(gen.range(0, 100000)) / 11.0;
    EXPECT_NEAR(relative_variation(a, b), oracle::relative_variation(a, b), 1e-9);
    // Antisymmetric under swapping.
    EXPECT_NEAR(relative_variation(a, b), -relative_variation(b, a), 1e-9);
  }
}

TEST(RelativeVariation, PublishedAnchors) {
  EXPECT_NEAR(relative_variation(230, 118), 94.91, 0.01);
  EXPECT_NEAR(relative_variation(260, 230), 13.04, 0.005);
  EXPECT_NEAR(relative_variation(76, 118), -55.26, 0.005);
  EXPECT_NEAR(relative_variation(76, 601), -690.79, 0.005);
  EXPECT_NEAR(relative_variation(2008, 98), 1948.98, 0.005);
  EXPECT_EQ(relative_variation(5, 5), 0.0);
  EXPECT_LIM_ERROR(relative_variation(0, 5), ErrorCode::kNonPositiveEdp);
  EXPECT_LIM_ERROR(relative_variation(5, -1), ErrorCode::kNonPositiveEdp);
}

TEST(Format, SignedTwoDecimals) {
  EXPECT_EQ(format_percent(94.915), "+94.92");
  EXPECT_EQ(format_percent(-55.2631), "-55.26");
  EXPECT_EQ(format_percent(0.0), "+0.00");
}

TEST(Tables, SameOperationIsStrictlyLowerTriangular) {
  const auto cal = CalibrationTable::seeded();
  const auto t = comparison_table(cal, ComparisonKind::kRead, 256);
  ASSERT_EQ(t.row_memories.size(), 5u);
  EXPECT_EQ(t.row_memories, t.column_memories);
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      EXPECT_EQ(t.cells[r][c].has_value(), c < r) << r << "," << c;
    }
  }
  const auto s = comparison_table(cal, ComparisonKind::kSearch, 256);
  EXPECT_EQ(s.row_memories.size(), 4u);
  const auto a = comparison_table(cal, ComparisonKind::kAnd, 256);
  EXPECT_EQ(a.row_memories.size(), 3u);
}

TEST(Tables, WriteVsReadIsDiagonal) {
  const auto t = comparison_table(CalibrationTable::seeded(), ComparisonKind::kWriteVsRead, 256);
  ASSERT_EQ(t.row_memories.size(), 5u);
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      EXPECT_EQ(t.cells[r][c].has_value(), r == c);
    }
  }
  EXPECT_EQ(t.row_memories[3], V::kLimStatic);
  EXPECT_EQ(t.row_memories[4], V::kLimDynamic);
}

TEST(Tables, EveryCellMatchesOracle) {
  const auto cal = CalibrationTable::seeded();
  for (ComparisonKind k : kAllComparisons) {
    const auto t = comparison_table(cal, k, 256);
    for (std::size_t r = 0; r < t.row_memories.size(); ++r) {
      for (std::size_t c = 0; c < t.column_memories.size(); ++c) {
        if (!t.cells[r][c]) continue;
        const double row = published_edp().at({t.row_memories[r], row_operation(k)});
        const double col = published_edp().at({t.column_memories[c], column_operation(k)});
        EXPECT_NEAR(*t.cells[r][c], oracle::relative_variation(row, col), 1e-9);
      }
    }
  }
}

TEST(Tables, StemsParseBack) {
  for (ComparisonKind k : kAllComparisons) {
    EXPECT_EQ(parse_comparison(file_stem(k)), k);
  }
  EXPECT_EQ(file_stem(ComparisonKind::kAndVsRead), "and_vs_read");
  EXPECT_FALSE(parse_comparison("read_vs_and").has_value());
}

TEST(Tables, CsvAnchors) {
  const auto cal = CalibrationTable::seeded();
  const auto csv = [&](ComparisonKind k) { return to_csv(comparison_table(cal, k, 256)); };
  const auto read = csv(ComparisonKind::kRead);
  EXPECT_EQ(read.substr(0, read.find('\n')), "read/read,SRAM,CAM,AND SP,AND DYN,AND ST");
  EXPECT_EQ(cell_text(read, "AND SP", 2), "+13.04");
  EXPECT_EQ(cell_text(csv(ComparisonKind::kAndVsRead), "AND ST", 1), "-55.26");
  EXPECT_EQ(cell_text(csv(ComparisonKind::kAndVsSearch), "AND ST", 4), "-690.79");
  EXPECT_EQ(cell_text(csv(ComparisonKind::kAnd), "AND DYN", 1), "+1948.98");
  EXPECT_NEAR(std::stod(cell_text(read, "CAM", 1)), 94.91, 0.5);
}

TEST(Tables, UncalibratedSizeFails) {
  EXPECT_LIM_ERROR(comparison_table(CalibrationTable::seeded(), ComparisonKind::kRead, 128),
                   ErrorCode::kUncalibratedPoint);
  EXPECT_LIM_ERROR(edp_csv(CalibrationTable::seeded(), 128), ErrorCode::kUncalibratedPoint);
}

TEST(Audit, ClassifiesEveryReferenceCell) {
  const auto report = audit(CalibrationTable::seeded());
  EXPECT_EQ(report.entries.size(), 95u);
  EXPECT_EQ(report.count(AuditStatus::kMatch), 91u);
  EXPECT_EQ(report.count(AuditStatus::kTruncatedPrint), 1u);
  EXPECT_EQ(report.count(AuditStatus::kDuplicatedCell), 2u);
  EXPECT_EQ(report.count(AuditStatus::kDigitTranscription), 1u);
  EXPECT_EQ(report.unexplained(), 0u);
  for (const auto& e : report.entries) {
    if (e.status == AuditStatus::kMatch) {
      EXPECT_LE(std::fabs(e.delta), kAuditTolerancePp);
    } else {
      EXPECT_GT(std::fabs(e.delta), kAuditTolerancePp);
      EXPECT_FALSE(e.explanation.empty());
    }
  }
  const auto text = summary_text(report);
  EXPECT_NE(text.find("PASS"), std::string::npos);
}

TEST(Audit, ReferenceCellsCoverEveryPrintedPosition) {
  const auto cal = CalibrationTable::seeded();
  std::size_t layout_cells = 0;
  for (ComparisonKind k : kAllComparisons) {
    const auto t = comparison_table(cal, k, 256);
    for (const auto& row : t.cells) {
      for (const auto& c : row) layout_cells += c.has_value();
    }
  }
  EXPECT_EQ(layout_cells, reference_cells().size());
  for (const auto& ref : reference_cells()) {
    EXPECT_TRUE(comparison_table(cal, ref.kind, 256).at(ref.row, ref.col).has_value());
  }
}

TEST(Audit, PerturbedCalibrationIsUnexplained) {
  auto cal = CalibrationTable::seeded();
  cal.set(V::kSram6T, Op::kRead, 256, 150);
  const auto report = audit(cal);
  EXPECT_GT(report.unexplained(), 0u);
  EXPECT_NE(summary_text(report).find("FAIL"), std::string::npos);
}

TEST(Estimate, FormulaTerms) {
  SensingEvent ev;
  ev.operation = Op::kSearch;
  ev.lines_charged = 3;
  ev.lines_discharged = 5;
  ev.dummy_window_units = 1;
  ev.gate_commutations = 7;
  ev.bitline_pairs = 4;
  ev.cells_per_bitline = 8;
  const auto s = structural_estimate(ev, {V::kCamNor, 4}, {2.0, 1.0});
  EXPECT_EQ(s.bitline_load_units, 128u);
  EXPECT_DOUBLE_EQ(s.estimate, (10.0 * 3 + 1.0 * 5 + 5.0 * 7 + 2.0 * 128) * 4.0);
  EXPECT_LIM_ERROR(structural_estimate(ev, {V::kCamNor, 0}, {}), ErrorCode::kInvalidArgument);
  EXPECT_LIM_ERROR(structural_estimate(ev, {V::kCamNor, 4}, {}, {0, 1, 1, 1}),
                   ErrorCode::kInvalidArgument);
  EXPECT_LIM_ERROR(structural_estimate(ev, {V::kCamNor, 4}, {-1.0, 1.0}),
                   ErrorCode::kInvalidArgument);
}

TEST(Estimate, DynamicAndCostsMoreThanStatic) {
  for (std::size_t j : {0u, 17u, 63u}) {
    const Mask m = one_hot_mask(64, j);
    EXPECT_GT(estimate(and_event(V::kLimDynamic, 64, 5, m), V::kLimDynamic),
              estimate(and_event(V::kLimStatic, 64, 5, m), V::kLimStatic));
  }
}

TEST(Estimate, MismatchingSearchIsCheaper) {
  for (V v : {V::kCamNor, V::kLimSpecial, V::kLimDynamic, V::kLimStatic}) {
    MemoryArray a({64, 64}, v);
    const Word w = Word::parse(std::string(32, '1') + std::string(32, '0'));
    for (std::size_t r = 0; r < 64; ++r) a.write_word(r, w);
    Word other = Word::parse(std::string(32, '0') + std::string(32, '1'));
    const double match = estimate(a.search(w).event, v);
    const double miss = estimate(a.search(other).event, v);
    EXPECT_LT(miss, match) << id(v);
  }
}

TEST(Estimate, BitlineLoadOrdering) {
  for (Op op : {Op::kRead, Op::kWrite}) {
    std::map<V, double> e;
    for (V v : kAllVariants) {
      MemoryArray a({64, 64}, v);
      const auto ev = op == Op::kRead ? a.read_word(3).second
                                      : a.write_word(3, Word::zeros(64));
      e[v] = estimate(ev, v);
    }
    EXPECT_LT(e[V::kSram6T], e[V::kCamNor]);
    EXPECT_LT(e[V::kCamNor], e[V::kLimSpecial]);
    EXPECT_EQ(e[V::kLimSpecial], e[V::kLimDynamic]);
    EXPECT_LT(e[V::kLimDynamic], e[V::kLimStatic]);
  }
}
