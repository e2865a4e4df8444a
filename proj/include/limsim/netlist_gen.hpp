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

// Reduced worst-case array netlists and testbench stimuli.
//
// Only two real cells are instantiated: the read/write critical cell (first
// row, last column: farthest from wordline driver, bitline drivers and SA)
// and the search/AND critical cell (first row, first column: farthest from
// the MLSA/ANDSA). The rest of the first row is made of dummy row cells and
// the rest of the last column of dummy column cells, so an R x C array has
// R + C - 1 cell instances.

#ifndef LIMSIM_NETLIST_GEN_HPP
#define LIMSIM_NETLIST_GEN_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "limsim/core_model.hpp"

namespace limsim::netlist {

enum class PrimitiveRole {
  kCell,
  kDummyRowCell,
  kDummyColCell,
  kSenseAmp,
  kMatchlineSenseAmp,
  kAndSenseAmp,
  kDummyLoad,
  kPrecharge,
  kDelaySenseAmp,
  kBitlineDriver,
  kDummyLine,
  kDummySenseAmp,
};

inline constexpr PrimitiveRole kAllRoles[] = {
    PrimitiveRole::kCell,           PrimitiveRole::kDummyRowCell,
    PrimitiveRole::kDummyColCell,   PrimitiveRole::kSenseAmp,
    PrimitiveRole::kMatchlineSenseAmp, PrimitiveRole::kAndSenseAmp,
    PrimitiveRole::kDummyLoad,      PrimitiveRole::kPrecharge,
    PrimitiveRole::kDelaySenseAmp,  PrimitiveRole::kBitlineDriver,
    PrimitiveRole::kDummyLine,      PrimitiveRole::kDummySenseAmp};

std::string_view id(PrimitiveRole role);
std::optional<PrimitiveRole> parse_role(std::string_view text);

/// Roles a netlist for `variant` instantiates.
std::vector<PrimitiveRole> required_roles(CellVariant variant);

/// Pin order of each primitive. Cell pins depend on which row signals the
/// variant has (ML for search, ANDL for AND, PRE for the dynamic cell).
std::vector<std::string> pin_names(PrimitiveRole role, CellVariant variant);

/// Subcircuit names per role plus the files that define them.
struct PrimitiveLibrary {
  std::vector<std::string> includes;
  std::map<PrimitiveRole, std::string> names;

  std::optional<std::string> name(PrimitiveRole role) const;

  /// Names "<variant>_<role>" from the shipped placeholder file.
  static PrimitiveLibrary placeholder(CellVariant variant,
                                      std::string include = "primitives.sp");

  /// key = value lines: "include = <path>" (repeatable) or "<role> = <name>".
  static PrimitiveLibrary parse(std::string_view text);
};

/// Syntactically valid stand-in subcircuits for every variant and role.
std::string placeholder_primitives();

struct CellPosition {
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const CellPosition&, const CellPosition&) = default;
};

struct ReducedArrayModel {
  ArrayGeometry geometry;
  CellVariant variant = CellVariant::kSram6T;
  CellPosition read_write_cell;  // first row, last column
  CellPosition search_and_cell;  // first row, first column
  std::size_t dummy_row_cells = 0;
  std::size_t dummy_col_cells = 0;
  std::size_t dummy_loads = 0;
  bool dummy_line = false;
  std::vector<PrimitiveRole> peripherals;

  static constexpr std::size_t kRealCells = 2;
  std::size_t cell_instances() const {
    return kRealCells + dummy_row_cells + dummy_col_cells;
  }
  bool has_matchline() const { return supports(variant, OperationKind::kSearch); }
  bool has_and_line() const { return is_lim(variant); }
  bool has_precharge_row() const { return variant == CellVariant::kLimDynamic; }
};

/// kGeometryNotBlockAligned unless rows and cols are multiples of 32.
ReducedArrayModel build_reduced_model(ArrayGeometry geometry,
                                      CellVariant variant);

/// Deterministic SPICE text. kMissingPrimitive when the library lacks a
/// role the model needs.
std::string emit_netlist(const ReducedArrayModel& model,
                         const PrimitiveLibrary& library);

// --- Stimuli -----------------------------------------------------------------

struct StimulusOp {
  OperationKind kind = OperationKind::kRead;
  std::size_t row = 0;             // read / write
  std::optional<Word> data;        // write data or search key
  std::optional<Mask> mask;        // and

  static StimulusOp write(std::size_t row, Word data);
  static StimulusOp read(std::size_t row);
  static StimulusOp search(Word key);
  static StimulusOp and_mask(Mask mask);
  std::string describe() const;
};

inline constexpr double kDefaultNetlistClockNs = 1.0;

struct StimulusProgram {
  ArrayGeometry geometry;
  std::vector<StimulusOp> ops;
  double t_clk_ns = kDefaultNetlistClockNs;
  double vdd = 1.0;
  std::optional<double> sa_delay_ns;  // default: half a clock period

  double sa_delay() const { return sa_delay_ns.value_or(t_clk_ns / 2.0); }
};

/// Piecewise-constant waveform: each (time_ns, level) holds until the next.
struct Waveform {
  std::string signal;
  std::vector<std::pair<double, double>> points;

  double level_at(double t_ns) const;
};

/// First clock cycle occupied by each op; cycle 0 is idle. Read and write
/// take one cycle, search and AND take two (pre-discharge with the operand
/// already on the bitlines, then evaluate/sense).
std::vector<std::size_t> op_start_cycles(const StimulusProgram& program);
std::size_t total_cycles(const StimulusProgram& program);

std::vector<Waveform> build_waveforms(const StimulusProgram& program,
                                      CellVariant variant);

std::string emit_stimuli(const StimulusProgram& program, CellVariant variant);

// --- Parse-back and lint -----------------------------------------------------

struct NetlistSummary {
  std::string array_subckt;
  std::vector<std::string> ports;
  std::size_t cell_instances = 0;
  std::size_t real_cells = 0;
  std::size_t dummy_row_cells = 0;
  std::size_t dummy_col_cells = 0;
  std::size_t dummy_loads = 0;
  std::size_t instances = 0;  // every X line inside the array subcircuit
  bool has_matchline = false;
  bool has_and_line = false;
  bool has_precharge_row = false;
  bool has_dummy_line = false;
};

NetlistSummary parse_netlist(std::string_view text);

/// Node-closure problems: instance nodes that are neither array ports nor
/// supplies. With `primitives`, also checks that every referenced subcircuit
/// exists with a matching pin count. Empty result means clean.
std::vector<std::string> lint_netlist(std::string_view netlist,
                                      std::optional<std::string_view> primitives = {});

/// Stimulus sources whose node is not an array port.
std::vector<std::string> lint_stimuli(std::string_view netlist,
                                      std::string_view stimuli);

}  // namespace limsim::netlist

#endif  // LIMSIM_NETLIST_GEN_HPP
