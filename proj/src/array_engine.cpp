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

#include "limsim/array_engine.hpp"

#include <algorithm>

namespace limsim {

using cell::LineLevel;
using cell::PullDownState;

PhaseSequence phase_sequence(OperationKind op, CellVariant variant) {
  require_support(variant, op);
  switch (op) {
    case OperationKind::kRead:
      return {{Phase::kPrechargeBitlines}, {Phase::kEvaluate}, {Phase::kSense}};
    case OperationKind::kWrite:
      return {{Phase::kDrive}, {Phase::kSettle}};
    case OperationKind::kSearch:
    case OperationKind::kAnd: {
      std::vector<Phase> first{Phase::kPreDischarge, Phase::kMaskLoad};
      if (op == OperationKind::kAnd && variant == CellVariant::kLimDynamic) {
        first.push_back(Phase::kGatePrecharge);
      }
      return {first, {Phase::kEvaluate}, {Phase::kSense}, {Phase::kDummyDisable}};
    }
  }
  return {};
}

MemoryArray::MemoryArray(ArrayGeometry geometry, CellVariant variant)
    : geometry_(geometry), variant_(variant) {
  geometry_.validate();
  cells_.assign(geometry_.rows * geometry_.cols, Bit::kZero);
  if (variant_ == CellVariant::kLimStatic) {
    static_gate_outputs_.assign(cells_.size(), Bit::kZero);
  }
}

void MemoryArray::check_row(std::size_t row) const {
  if (row >= geometry_.rows) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "row " + std::to_string(row) + " outside array of " +
                    std::to_string(geometry_.rows) + " rows");
  }
}

Bit MemoryArray::cell(std::size_t row, std::size_t col) const {
  check_row(row);
  if (col >= geometry_.cols) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "column " + std::to_string(col) + " outside array");
  }
  return row_ptr(row)[col];
}

namespace {

void check_width(std::size_t got, std::size_t cols, const char* what) {
  if (got != cols) {
    throw Error(ErrorCode::kWidthMismatch,
                std::string(what) + " width " + std::to_string(got) +
                    " does not match " + std::to_string(cols) + " columns");
  }
}

SensingEvent base_event(OperationKind op, const ArrayGeometry& g) {
  SensingEvent ev;
  ev.operation = op;
  ev.bitline_pairs = g.cols;
  ev.cells_per_bitline = g.rows;
  return ev;
}

}  // namespace

SensingEvent MemoryArray::write_word(std::size_t row, const Word& word) {
  check_row(row);
  check_width(word.width(), geometry_.cols, "word");
  std::copy(word.bits().begin(), word.bits().end(),
            cells_.begin() + static_cast<std::ptrdiff_t>(row * geometry_.cols));
  SensingEvent ev = base_event(OperationKind::kWrite, geometry_);
  ev.lines_charged = geometry_.cols;
  return ev;
}

std::pair<Word, SensingEvent> MemoryArray::read_word(std::size_t row) const {
  check_row(row);
  const Bit* p = row_ptr(row);
  Word w(std::vector<Bit>(p, p + geometry_.cols));
  SensingEvent ev = base_event(OperationKind::kRead, geometry_);
  ev.lines_discharged = geometry_.cols;
  return {std::move(w), std::move(ev)};
}

MemoryArray::RowResults MemoryArray::search(const Word& key) const {
  require_support(variant_, OperationKind::kSearch);
  check_width(key.width(), geometry_.cols, "search key");

  RowResults out;
  out.event = base_event(OperationKind::kSearch, geometry_);
  out.per_row.reserve(geometry_.rows);
  std::vector<PullDownState> states(geometry_.cols);
  for (std::size_t r = 0; r < geometry_.rows; ++r) {
    const Bit* p = row_ptr(r);
    for (std::size_t c = 0; c < geometry_.cols; ++c) {
      states[c] = cell::cam_bit_mismatch(p[c], key[c]);
    }
    const bool charged = cell::resolve_line(states) == LineLevel::kCharged;
    out.per_row.push_back(to_bit(charged));
    ++(charged ? out.event.lines_charged : out.event.lines_discharged);
  }
  out.event.dummy_window_units = 1;
  out.event.per_row_result = out.per_row;
  return out;
}

MemoryArray::RowResults MemoryArray::and_op(const Mask& mask) {
  require_support(variant_, OperationKind::kAnd);
  check_width(mask.width(), geometry_.cols, "mask");

  const std::size_t cols = geometry_.cols;
  std::vector<cell::BitlinePair> lines(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    lines[c] = cell::mask_bitlines(variant_, mask[c]);
  }

  RowResults out;
  out.event = base_event(OperationKind::kAnd, geometry_);
  out.per_row.reserve(geometry_.rows);
  std::vector<PullDownState> states(cols);
  std::uint64_t gate_high = 0;
  std::uint64_t static_toggles = 0;

  for (std::size_t r = 0; r < geometry_.rows; ++r) {
    const Bit* p = row_ptr(r);
    for (std::size_t c = 0; c < cols; ++c) {
      states[c] = cell::pulldown_from_bitlines(variant_, p[c], lines[c]);
      if (variant_ == CellVariant::kLimSpecial) continue;
      const Bit gate = to_bit(states[c] == PullDownState::kConducting);
      gate_high += is_set(gate) ? 1 : 0;
      if (variant_ == CellVariant::kLimStatic) {
        Bit& last = static_gate_outputs_[r * cols + c];
        if (last != gate) {
          ++static_toggles;
          last = gate;
        }
      }
    }
    const LineLevel level = cell::resolve_line(states);
    out.per_row.push_back(cell::sensed_and(variant_, level));
    ++(level == LineLevel::kCharged ? out.event.lines_charged
                                    : out.event.lines_discharged);
  }

  switch (variant_) {
    case CellVariant::kLimDynamic:
      // Every precharged gate whose D·M is 0 discharges during evaluation.
      out.event.gate_commutations =
          static_cast<std::uint64_t>(geometry_.rows) * cols - gate_high;
      break;
    case CellVariant::kLimStatic:
      out.event.gate_commutations = static_toggles;
      break;
    default:
      out.event.gate_commutations = 0;
  }
  out.event.dummy_window_units = 1;
  out.event.per_row_result = out.per_row;
  return out;
}

}  // namespace limsim
