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

#ifndef LIMSIM_COST_MODEL_HPP
#define LIMSIM_COST_MODEL_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "limsim/array_engine.hpp"
#include "limsim/cell_logic.hpp"
#include "limsim/core_model.hpp"

namespace limsim::cost {

/// Square array edge used for the shipped calibration.
inline constexpr std::size_t kCalibratedSize = 256;

/// Energy-delay products in pJ·ps keyed by (variant, operation, size) where
/// size is rows = cols.
class CalibrationTable {
 public:
  /// Returns a value for an uncalibrated point. Must be non-decreasing in
  /// size; lookups verify this against the calibrated neighbours.
  using ScalingHook =
      std::function<double(CellVariant, OperationKind, std::size_t size)>;

  CalibrationTable() = default;

  /// The 256x256 characterization values.
  static CalibrationTable seeded();

  /// Parses `memory,op,size,edp_pj_ps` records. Blank lines and lines
  /// starting with '#' are ignored; a leading header record is accepted.
  static CalibrationTable parse(std::string_view text);
  static CalibrationTable load(const std::string& path);
  std::string to_text() const;

  void set(CellVariant v, OperationKind op, std::size_t size, double edp);
  std::optional<double> find(CellVariant v, OperationKind op,
                             std::size_t size) const;
  bool calibrated_at(std::size_t size) const;
  std::size_t size() const noexcept { return entries_.size(); }

  /// Exact value at calibrated points. kUnsupportedOperation for operations
  /// the variant lacks; kUncalibratedPoint when missing and no hook is set.
  double lookup(CellVariant v, OperationKind op, std::size_t size) const;

  void set_scaling_hook(ScalingHook hook) { hook_ = std::move(hook); }

 private:
  using Key = std::tuple<CellVariant, OperationKind, std::size_t>;
  std::map<Key, double> entries_;
  ScalingHook hook_;
};

double edp_lookup(const CalibrationTable& table, CellVariant v,
                  OperationKind op, std::size_t size);

/// Percent increase of `edp_row` over `edp_col`. Increases are relative to
/// the column value; decreases are relative to the row value, so e.g.
/// (76, 118) gives -55.26 rather than -35.59. kNonPositiveEdp unless both
/// inputs are > 0.
double relative_variation(double edp_row, double edp_col);

enum class ComparisonKind {
  kRead,
  kWrite,
  kSearch,
  kAnd,
  kWriteVsRead,
  kSearchVsWrite,
  kSearchVsRead,
  kAndVsSearch,
  kAndVsWrite,
  kAndVsRead,
};

inline constexpr ComparisonKind kAllComparisons[] = {
    ComparisonKind::kRead,         ComparisonKind::kWrite,
    ComparisonKind::kSearch,       ComparisonKind::kAnd,
    ComparisonKind::kWriteVsRead,  ComparisonKind::kSearchVsWrite,
    ComparisonKind::kSearchVsRead, ComparisonKind::kAndVsSearch,
    ComparisonKind::kAndVsWrite,   ComparisonKind::kAndVsRead};

OperationKind row_operation(ComparisonKind kind);
OperationKind column_operation(ComparisonKind kind);
/// "read_vs_read", "and_vs_search", ...
std::string file_stem(ComparisonKind kind);
std::optional<ComparisonKind> parse_comparison(std::string_view stem);

struct ComparisonTable {
  ComparisonKind kind;
  std::vector<CellVariant> row_memories;
  std::vector<CellVariant> column_memories;
  // cells[r][c]; empty where the layout omits the comparison.
  std::vector<std::vector<std::optional<double>>> cells;

  std::optional<double> at(CellVariant row, CellVariant col) const;
};

/// Regenerates a comparison table in the published row/column order and
/// lower-triangular layout.
ComparisonTable comparison_table(const CalibrationTable& table,
                                 ComparisonKind kind, std::size_t size);

/// Signed, two decimals: "+94.91", "-55.26".
std::string format_percent(double percent);

/// Header row then one row per memory; omitted cells are empty fields.
std::string to_csv(const ComparisonTable& table);

/// edp.csv: memory,write,read,search,and with two-decimal values.
std::string edp_csv(const CalibrationTable& table, std::size_t size);

// --- Reference audit -------------------------------------------------------

/// One printed cell of the reference comparison tables at 256x256.
struct ReferenceCell {
  ComparisonKind kind;
  CellVariant row;
  CellVariant col;
  std::string printed;  // as typeset, sign included when present

  double value() const;
  int decimals() const;
};

const std::vector<ReferenceCell>& reference_cells();

enum class AuditStatus {
  kMatch,               // within the rounding tolerance
  kTruncatedPrint,      // integer print of the truncated value
  kDuplicatedCell,      // equals the regenerated value of another cell
  kDigitTranscription,  // differs from the regenerated value in one digit
  kUnexplained,
};

std::string_view to_string(AuditStatus status);

struct AuditEntry {
  ReferenceCell reference;
  double regenerated = 0.0;
  double delta = 0.0;  // regenerated - printed
  AuditStatus status = AuditStatus::kUnexplained;
  std::string explanation;
};

struct AuditReport {
  double tolerance_pp = 0.5;
  std::vector<AuditEntry> entries;

  std::size_t count(AuditStatus status) const;
  std::size_t unexplained() const { return count(AuditStatus::kUnexplained); }
};

inline constexpr double kAuditTolerancePp = 0.5;

/// Re-derives every reference cell from `table` at `size` and classifies
/// each disagreement by a mechanically checked rule.
AuditReport audit(const CalibrationTable& table,
                  std::size_t size = kCalibratedSize,
                  double tolerance_pp = kAuditTolerancePp);

std::string to_csv(const AuditReport& report);
std::string summary_text(const AuditReport& report);

// --- Structural estimate ---------------------------------------------------

struct EstimateCoefficients {
  double charge = 10.0;
  double leak = 1.0;
  double gate = 5.0;
  double load = 2.0;
};

struct StructuralEstimate {
  std::uint64_t charge_events = 0;
  std::uint64_t leak_window_units = 0;
  std::uint64_t lines_discharged = 0;
  std::uint64_t gate_commutations = 0;
  std::uint64_t bitline_load_units = 0;
  double estimate = 0.0;
};

/// Abstract energy·delay units, only ordering is meaningful:
///   (a·charge + b·window·discharged + c·gate + d·load) · vdd²
/// with load = transistors on bitlines × driven bitline pairs × rows.
StructuralEstimate structural_estimate(const SensingEvent& event,
                                       const cell::BitlineLoad& loads,
                                       const SimulationParams& params,
                                       const EstimateCoefficients& k = {});

}  // namespace limsim::cost

#endif  // LIMSIM_COST_MODEL_HPP
