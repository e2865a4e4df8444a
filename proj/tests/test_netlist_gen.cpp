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

#include "golden.hpp"
#include "limsim/netlist_gen.hpp"
#include "test_support.hpp"

using namespace limsim;
using namespace limsim::netlist;

namespace {

std::string emit(CellVariant v, std::size_t rows, std::size_t cols) {
  return emit_netlist(build_reduced_model({rows, cols}, v),
                      PrimitiveLibrary::placeholder(v));
}

const Waveform& wave(const std::vector<Waveform>& waves, const std::string& name) {
  const auto it = std::find_if(waves.begin(), waves.end(),
                               [&](const Waveform& w) { return w.signal == name; });
  if (it == waves.end()) throw std::runtime_error("no waveform " + name);
  return *it;
}

}  // namespace

TEST(ReducedModel, CountsPerGeometry) {
  for (CellVariant v : kAllVariants) {
    for (std::size_t rows : {32u, 64u, 128u, 256u}) {
      for (std::size_t cols : {32u, 64u, 128u, 256u}) {
        const auto m = build_reduced_model({rows, cols}, v);
        EXPECT_EQ(m.cell_instances(), rows + cols - 1);
        EXPECT_EQ(m.dummy_row_cells, cols - 2);
        EXPECT_EQ(m.dummy_col_cells, rows - 1);
        EXPECT_EQ(m.dummy_loads, v == CellVariant::kSram6T ? 0u : rows);
        EXPECT_EQ(m.dummy_line, v != CellVariant::kSram6T);
        EXPECT_EQ(m.read_write_cell, (CellPosition{0, cols - 1}));
        EXPECT_EQ(m.search_and_cell, (CellPosition{0, 0}));
      }
    }
  }
}

TEST(ReducedModel, NeedsBlockAlignedGeometry) {
  EXPECT_LIM_ERROR(build_reduced_model({48, 32}, CellVariant::kCamNor),
                   ErrorCode::kGeometryNotBlockAligned);
  EXPECT_LIM_ERROR(build_reduced_model({32, 16}, CellVariant::kCamNor),
                   ErrorCode::kGeometryNotBlockAligned);
}

TEST(Netlist, ParseBackAndLint) {
  const std::string prims = placeholder_primitives();
  for (CellVariant v : kAllVariants) {
    for (std::size_t n : {32u, 64u, 128u, 256u}) {
      const std::string text = emit(v, n, n);
      const auto s = parse_netlist(text);
      EXPECT_EQ(s.cell_instances, 2 * n - 1);
      EXPECT_EQ(s.real_cells, 2u);
      EXPECT_EQ(s.dummy_loads, v == CellVariant::kSram6T ? 0u : n);
      EXPECT_EQ(s.has_matchline, supports(v, OperationKind::kSearch));
      EXPECT_EQ(s.has_and_line, is_lim(v));
      EXPECT_EQ(s.has_precharge_row, v == CellVariant::kLimDynamic);
      EXPECT_EQ(s.has_dummy_line, v != CellVariant::kSram6T);
      EXPECT_TRUE(lint_netlist(text).empty());
      const auto problems = lint_netlist(text, prims);
      EXPECT_TRUE(problems.empty()) << problems.front();
    }
  }
}

TEST(Netlist, RectangularCamCount) {
  const auto s = parse_netlist(emit(CellVariant::kCamNor, 64, 64));
  EXPECT_EQ(s.cell_instances, 127u);
  const auto r = parse_netlist(emit(CellVariant::kLimStatic, 32, 256));
  EXPECT_EQ(r.cell_instances, 287u);
  EXPECT_EQ(r.dummy_loads, 32u);
}

TEST(Netlist, Deterministic) {
  for (CellVariant v : kAllVariants) {
    EXPECT_EQ(emit(v, 64, 32), emit(v, 64, 32));
  }
}

TEST(Netlist, MissingPrimitive) {
  auto lib = PrimitiveLibrary::placeholder(CellVariant::kLimStatic);
  lib.names.erase(PrimitiveRole::kAndSenseAmp);
  EXPECT_LIM_ERROR(emit_netlist(build_reduced_model({32, 32}, CellVariant::kLimStatic), lib),
                   ErrorCode::kMissingPrimitive);
}

TEST(Netlist, LintFindsUndeclaredNodeAndBadPins) {
  std::string text = emit(CellVariant::kCamNor, 32, 32);
  const auto pos = text.find("XCELL_0_0 WL0");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 13, "XCELL_0_0 WLX");
  EXPECT_FALSE(lint_netlist(text).empty());

  std::string prims = placeholder_primitives();
  const auto p = prims.find(".SUBCKT cam_nor_cell WL BL BLB ML");
  ASSERT_NE(p, std::string::npos);
  prims.replace(p, 33, ".SUBCKT cam_nor_cell WL BL BLB");
  EXPECT_FALSE(lint_netlist(emit(CellVariant::kCamNor, 32, 32), prims).empty());
}

TEST(PrimitiveLibrary, ParseCustomNames) {
  const auto lib = PrimitiveLibrary::parse(
      "# extracted cells\ninclude = cells.sp\ncell = my_cell\nsa = my_sa\n");
  EXPECT_EQ(lib.includes, std::vector<std::string>{"cells.sp"});
  EXPECT_EQ(lib.name(PrimitiveRole::kCell), "my_cell");
  EXPECT_FALSE(lib.name(PrimitiveRole::kMatchlineSenseAmp).has_value());
  EXPECT_LIM_ERROR(PrimitiveLibrary::parse("bogus = x\n"), ErrorCode::kInvalidConfig);
  EXPECT_LIM_ERROR(PrimitiveLibrary::parse("cell my_cell\n"), ErrorCode::kInvalidConfig);
  for (PrimitiveRole r : kAllRoles) EXPECT_EQ(parse_role(id(r)), r);
}

TEST(Golden, Netlists32x32) {
  for (CellVariant v : kAllVariants) {
    const std::string actual = emit(v, 32, 32);
    const std::string path =
        golden::dir() + "/netlist_" + std::string(limsim::id(v)) + "_32x32.sp";
    EXPECT_EQ(actual, golden::check(path, actual)) << path;
  }
}

TEST(Golden, Stimuli) {
  const std::string actual =
      emit_stimuli(golden::sample_program(32, 32), CellVariant::kLimDynamic);
  const std::string path = golden::dir() + "/stimuli_lim_dynamic_32x32.sp";
  EXPECT_EQ(actual, golden::check(path, actual));
}

TEST(Golden, PlaceholderPrimitivesShipped) {
  const std::string actual = placeholder_primitives();
  EXPECT_EQ(actual, golden::check(LIMSIM_PRIMITIVES_FILE, actual, false));
}

TEST(Stimuli, CycleLayout) {
  const auto p = golden::sample_program(32, 32);
  EXPECT_EQ(op_start_cycles(p), (std::vector<std::size_t>{1, 2, 3, 5}));
  EXPECT_EQ(total_cycles(p), 8u);
}

TEST(Stimuli, WaveformsFollowOperations) {
  auto p = golden::sample_program(32, 32);
  p.t_clk_ns = 2.0;
  const auto waves = build_waveforms(p, CellVariant::kLimDynamic);
  const double T = 2.0;
  const auto at = [&](const std::string& s, double cycle, double frac) {
    return wave(waves, s).level_at((cycle + frac) * T);
  };
  // Write in cycle 1, read in cycle 2: WL0 high after the first quarter.
  EXPECT_EQ(at("WL0", 1, 0.1), 0.0);
  EXPECT_EQ(at("WL0", 1, 0.5), 1.0);
  EXPECT_EQ(at("WE", 1, 0.5), 1.0);
  EXPECT_EQ(at("DIN", 1, 0.5), 1.0);
  EXPECT_EQ(at("PCH", 2, 0.1), 1.0);
  EXPECT_EQ(at("PCH", 2, 0.5), 0.0);
  EXPECT_EQ(at("EN", 2, 0.5), 1.0);
  EXPECT_EQ(at("WL1", 2, 0.5), 0.0);
  // Search: key on BL0 for both cycles, evaluation in the second.
  EXPECT_EQ(at("BL0", 3, 0.5), 1.0);
  EXPECT_EQ(at("BLB0", 3, 0.5), 0.0);
  EXPECT_EQ(at("EN", 3, 0.5), 0.0);
  EXPECT_EQ(at("EN", 4, 0.5), 1.0);
  EXPECT_EQ(at("WL0", 4, 0.5), 0.0);
  // AND: PRE low while the gates precharge, mask bit 0 selected.
  EXPECT_EQ(at("PRE0", 5, 0.5), 0.0);
  EXPECT_EQ(at("PRE0", 6, 0.5), 1.0);
  EXPECT_EQ(at("BL0", 6, 0.5), 1.0);
  // Sense enable waits for the configured delay.
  EXPECT_EQ(at("SAEN", 2, 0.4), 0.0);
  EXPECT_EQ(at("SAEN", 2, 0.6), 1.0);
  EXPECT_EQ(at("SAEN", 6, 0.6), 1.0);
  EXPECT_EQ(at("SAEN", 7, 0.6), 0.0);
}

TEST(Stimuli, SpecialCellSelectsThroughBlb) {
  const auto waves = build_waveforms(golden::sample_program(32, 32), CellVariant::kLimSpecial);
  EXPECT_EQ(wave(waves, "BL0").level_at(6.5), 0.0);
  EXPECT_EQ(wave(waves, "BLB0").level_at(6.5), 1.0);
}

TEST(Stimuli, SaDelayAndSupplies) {
  auto p = golden::sample_program(32, 32);
  p.ops.pop_back();  // CAM has no AND
  p.sa_delay_ns = 0.25;
  const std::string text = emit_stimuli(p, CellVariant::kCamNor);
  EXPECT_NE(text.find(".param vdd=1 tclk=1n sa_delay=0.25n"), std::string::npos);
  EXPECT_NE(text.find("VSUPPLY VDD 0"), std::string::npos);
  EXPECT_EQ(text.find("PRE0"), std::string::npos);
  const std::string netlist = emit(CellVariant::kCamNor, 32, 32);
  EXPECT_TRUE(lint_stimuli(netlist, text).empty());
  p.sa_delay_ns = 1.0;
  EXPECT_LIM_ERROR(emit_stimuli(p, CellVariant::kCamNor), ErrorCode::kInvalidArgument);
}

TEST(Stimuli, Validation) {
  StimulusProgram p;
  p.geometry = {32, 32};
  p.ops.push_back(StimulusOp::read(32));
  EXPECT_LIM_ERROR(emit_stimuli(p, CellVariant::kSram6T), ErrorCode::kIndexOutOfRange);
  p.ops = {StimulusOp::search(Word::zeros(32))};
  EXPECT_LIM_ERROR(emit_stimuli(p, CellVariant::kSram6T), ErrorCode::kUnsupportedOperation);
  p.ops = {StimulusOp::write(0, Word::zeros(8))};
  EXPECT_LIM_ERROR(emit_stimuli(p, CellVariant::kSram6T), ErrorCode::kWidthMismatch);
}

TEST(Stimuli, LintFlagsForeignNodes) {
  const std::string netlist = emit(CellVariant::kSram6T, 32, 32);
  EXPECT_FALSE(lint_stimuli(netlist, "VX ML0 0 PWL(0n 0)\n").empty());
}
