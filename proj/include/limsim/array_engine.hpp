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

#ifndef LIMSIM_ARRAY_ENGINE_HPP
#define LIMSIM_ARRAY_ENGINE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "limsim/cell_logic.hpp"
#include "limsim/core_model.hpp"

namespace limsim {

/// What one array operation did to the shared lines. Consumed by the
/// structural cost estimator.
struct SensingEvent {
  OperationKind operation = OperationKind::kRead;
  // Search/And: row lines that charged / stayed discharged.
  // Write: bitlines fully commuted (one per column); Read: bitlines partially
  // discharged (one per column).
  std::size_t lines_charged = 0;
  std::size_t lines_discharged = 0;
  std::vector<Bit> per_row_result;
  // Sense window in units of the dummy line's match time; 0 when no dummy
  // line takes part (Read/Write).
  std::size_t dummy_window_units = 0;
  std::uint64_t gate_commutations = 0;
  std::size_t bitline_pairs = 0;       // columns whose bitlines are driven
  std::size_t cells_per_bitline = 0;   // rows
};

enum class Phase {
  kPreDischarge,
  kMaskLoad,
  kGatePrecharge,  // dynamic AND cell only (PRE asserted)
  kEvaluate,
  kSense,
  kDummyDisable,
  kPrechargeBitlines,
  kDrive,
  kSettle,
};

/// Ordered time slots; phases sharing a slot overlap.
using PhaseSequence = std::vector<std::vector<Phase>>;

/// Throws kUnsupportedOperation when `op` is not valid on `variant`.
PhaseSequence phase_sequence(OperationKind op, CellVariant variant);

/// Row-major memory array of one cell variant. All operations are serialized
/// by the caller; the object is single-writer.
class MemoryArray {
 public:
  /// Zero-initialized array. Throws kInvalidWidth on an empty geometry.
  MemoryArray(ArrayGeometry geometry, CellVariant variant);

  const ArrayGeometry& geometry() const noexcept { return geometry_; }
  CellVariant variant() const noexcept { return variant_; }
  Bit cell(std::size_t row, std::size_t col) const;

  SensingEvent write_word(std::size_t row, const Word& word);
  std::pair<Word, SensingEvent> read_word(std::size_t row) const;

  struct RowResults {
    std::vector<Bit> per_row;
    SensingEvent event;
  };

  /// Exact-match search; row i matches iff its content equals `key`.
  RowResults search(const Word& key) const;

  /// In-memory AND against `mask`, evaluated on every row.
  ///   dynamic/static: OR over columns of D·M
  ///   special:        AND over selected columns of D
  /// Non-const only because the static gate outputs are remembered between
  /// calls to count commutations; cell contents are never modified.
  RowResults and_op(const Mask& mask);

 private:
  void check_row(std::size_t row) const;
  const Bit* row_ptr(std::size_t row) const {
    return cells_.data() + row * geometry_.cols;
  }

  ArrayGeometry geometry_;
  CellVariant variant_;
  std::vector<Bit> cells_;
  std::vector<Bit> static_gate_outputs_;  // LimStatic only
};

}  // namespace limsim

#endif  // LIMSIM_ARRAY_ENGINE_HPP
