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

// Combinational behavior of a single memory cell under the current-saving
// line scheme: every shared row line (matchline, AND line) is
// pre-discharged and charges during evaluation only if none of the cells on
// it has a conducting pull-down.

#ifndef LIMSIM_CELL_LOGIC_HPP
#define LIMSIM_CELL_LOGIC_HPP

#include <span>

#include "limsim/core_model.hpp"

namespace limsim::cell {

enum class PullDownState { kOff, kConducting };
enum class LineLevel { kDischarged, kCharged };

/// Physical levels on one column's complementary bitlines.
struct BitlinePair {
  Bit bl = Bit::kZero;
  Bit blb = Bit::kZero;
  friend bool operator==(const BitlinePair&, const BitlinePair&) = default;
};

/// Bitline encoding of a logical mask bit. Dynamic and static cells select
/// with BL=1; the special-purpose cell puts its footer on BLB, so its active
/// mask value is BL=0 / BLB=1.
BitlinePair mask_bitlines(CellVariant variant, Bit m);

/// Search keys use the plain encoding BL=key, BLB=~key on every variant.
BitlinePair key_bitlines(Bit key_bit);

/// Logical output of the in-cell AND (D·M). Throws kUnsupportedOperation
/// for non-LiM variants.
Bit and_gate_output(CellVariant variant, Bit d, Bit m);

/// Pull-down on the AND line as a function of the physical bitline levels.
///   dynamic/static: gate = NOR(~D, ~BL) = D·BL drives the pull-down.
///   special:        pull-down gated by ~D, footer gated by BLB.
PullDownState pulldown_from_bitlines(CellVariant variant, Bit d,
                                     BitlinePair lines);

/// Same, from the logical mask bit.
PullDownState pulldown_state(CellVariant variant, Bit d, Bit m);

/// Wired line: Charged iff no pull-down conducts. Empty input is
/// kInvalidWidth.
LineLevel resolve_line(std::span<const PullDownState> states);

/// Converts the sensed AND-line level to the AND result. Dynamic/static
/// lines carry the inverted OR so the ANDSA inverts; the special-purpose
/// line carries the result directly.
Bit sensed_and(CellVariant variant, LineLevel level);

/// NOR-CAM bit: a mismatch opens a path to ground on the matchline.
constexpr PullDownState cam_bit_mismatch(Bit d, Bit key_bit) noexcept {
  return d != key_bit ? PullDownState::kConducting : PullDownState::kOff;
}

/// Evaluate-phase transition of one LiM cell driving its own line.
/// For the dynamic gate `gate_before` is the precharged value (1); for the
/// static gate it equals the settled output; the special-purpose cell has
/// no gate node and reports both as its pull-down control (~D·BLB).
struct CellTransition {
  Bit gate_before;
  Bit gate_after;
  PullDownState pulldown;
  LineLevel line_before;  // always Discharged under current saving
  LineLevel line_after;
};

CellTransition evaluate_cell(CellVariant variant, Bit d, BitlinePair lines);

/// Number of cell transistors attached to the bitline pair.
struct BitlineLoad {
  CellVariant variant;
  int transistors_on_bitlines;
};

/// Defaults: SRAM 2, CAM 4, special 5, dynamic 5, static 6. Only the
/// ordering is meaningful.
BitlineLoad default_bitline_load(CellVariant variant);

}  // namespace limsim::cell

#endif  // LIMSIM_CELL_LOGIC_HPP
