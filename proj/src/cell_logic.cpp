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

#include "limsim/cell_logic.hpp"

#include <algorithm>

namespace limsim::cell {

namespace {

void require_lim(CellVariant variant) {
  if (!is_lim(variant)) {
    throw Error(ErrorCode::kUnsupportedOperation,
                std::string(id(variant)) + " has no in-cell AND gate");
  }
}

}  // namespace

BitlinePair mask_bitlines(CellVariant variant, Bit m) {
  require_lim(variant);
  if (variant == CellVariant::kLimSpecial) {
    return {complement(m), m};
  }
  return {m, complement(m)};
}

BitlinePair key_bitlines(Bit key_bit) { return {key_bit, complement(key_bit)}; }

Bit and_gate_output(CellVariant variant, Bit d, Bit m) {
  require_lim(variant);
  return d & m;
}

PullDownState pulldown_from_bitlines(CellVariant variant, Bit d,
                                     BitlinePair lines) {
  require_lim(variant);
  if (variant == CellVariant::kLimSpecial) {
    const bool on = is_set(complement(d)) && is_set(lines.blb);
    return on ? PullDownState::kConducting : PullDownState::kOff;
  }
  // NOR of the complemented inputs.
  const Bit gate = complement(complement(d) | complement(lines.bl));
  return is_set(gate) ? PullDownState::kConducting : PullDownState::kOff;
}

PullDownState pulldown_state(CellVariant variant, Bit d, Bit m) {
  require_lim(variant);
  return pulldown_from_bitlines(variant, d, mask_bitlines(variant, m));
}

LineLevel resolve_line(std::span<const PullDownState> states) {
  if (states.empty()) {
    throw Error(ErrorCode::kInvalidWidth, "a line needs at least one cell");
  }
  const bool any_on =
      std::any_of(states.begin(), states.end(), [](PullDownState s) {
        return s == PullDownState::kConducting;
      });
  return any_on ? LineLevel::kDischarged : LineLevel::kCharged;
}

Bit sensed_and(CellVariant variant, LineLevel level) {
  require_lim(variant);
  if (variant == CellVariant::kLimSpecial) {
    return to_bit(level == LineLevel::kCharged);
  }
  return to_bit(level == LineLevel::kDischarged);
}

CellTransition evaluate_cell(CellVariant variant, Bit d, BitlinePair lines) {
  const PullDownState pd = pulldown_from_bitlines(variant, d, lines);
  const Bit control = to_bit(pd == PullDownState::kConducting);
  CellTransition t{};
  t.pulldown = pd;
  t.line_before = LineLevel::kDischarged;
  t.line_after = pd == PullDownState::kConducting ? LineLevel::kDischarged
                                                   : LineLevel::kCharged;
  t.gate_after = control;
  t.gate_before = variant == CellVariant::kLimDynamic ? Bit::kOne : control;
  return t;
}

BitlineLoad default_bitline_load(CellVariant variant) {
  switch (variant) {
    case CellVariant::kSram6T: return {variant, 2};
    case CellVariant::kCamNor: return {variant, 4};
    case CellVariant::kLimSpecial: return {variant, 5};
    case CellVariant::kLimDynamic: return {variant, 5};
    case CellVariant::kLimStatic: return {variant, 6};
  }
  return {variant, 1};
}

}  // namespace limsim::cell
