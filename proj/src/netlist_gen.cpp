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

#include "limsim/netlist_gen.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "limsim/cell_logic.hpp"

namespace limsim::netlist {

namespace {

using R = PrimitiveRole;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// Joins '+' continuation lines and drops comments and blank lines.
std::vector<std::string> logical_lines(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '*') continue;
    if (line.front() == '+' && !out.empty()) {
      out.back() += ' ' + trim(std::string_view(line).substr(1));
    } else {
      out.push_back(line);
    }
  }
  return out;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void write_wrapped(std::ostream& out, const std::vector<std::string>& names,
                   std::size_t per_line = 12) {
  for (std::size_t i = 0; i < names.size(); i += per_line) {
    out << '+';
    for (std::size_t j = i; j < std::min(names.size(), i + per_line); ++j) {
      out << ' ' << names[j];
    }
    out << '\n';
  }
}

std::string bl(std::size_t c) { return "BL" + std::to_string(c); }
std::string blb(std::size_t c) { return "BLB" + std::to_string(c); }
std::string wl(std::size_t r) { return "WL" + std::to_string(r); }

}  // namespace

std::string_view id(PrimitiveRole role) {
  switch (role) {
    case R::kCell: return "cell";
    case R::kDummyRowCell: return "dummy_row_cell";
    case R::kDummyColCell: return "dummy_col_cell";
    case R::kSenseAmp: return "sa";
    case R::kMatchlineSenseAmp: return "mlsa";
    case R::kAndSenseAmp: return "andsa";
    case R::kDummyLoad: return "dummy_load";
    case R::kPrecharge: return "precharge";
    case R::kDelaySenseAmp: return "delay_sa";
    case R::kBitlineDriver: return "bitline_driver";
    case R::kDummyLine: return "dummy_line";
    case R::kDummySenseAmp: return "dummy_sa";
  }
  return "?";
}

std::optional<PrimitiveRole> parse_role(std::string_view text) {
  for (PrimitiveRole r : kAllRoles) {
    if (id(r) == text) return r;
  }
  return std::nullopt;
}

std::vector<PrimitiveRole> required_roles(CellVariant variant) {
  std::vector<PrimitiveRole> roles{R::kCell,          R::kDummyRowCell,
                                   R::kDummyColCell,  R::kBitlineDriver,
                                   R::kPrecharge,     R::kDelaySenseAmp,
                                   R::kSenseAmp};
  if (supports(variant, OperationKind::kSearch)) {
    roles.push_back(R::kMatchlineSenseAmp);
  }
  if (is_lim(variant)) roles.push_back(R::kAndSenseAmp);
  if (variant != CellVariant::kSram6T) {
    roles.push_back(R::kDummyLine);
    roles.push_back(R::kDummySenseAmp);
    roles.push_back(R::kDummyLoad);
  }
  return roles;
}

std::vector<std::string> pin_names(PrimitiveRole role, CellVariant variant) {
  std::vector<std::string> row_signals;
  if (supports(variant, OperationKind::kSearch)) row_signals.push_back("ML");
  if (is_lim(variant)) row_signals.push_back("ANDL");
  if (variant == CellVariant::kLimDynamic) row_signals.push_back("PRE");

  std::vector<std::string> pins;
  switch (role) {
    case R::kCell:
      pins = {"WL", "BL", "BLB"};
      pins.insert(pins.end(), row_signals.begin(), row_signals.end());
      break;
    case R::kDummyRowCell:
      pins = {"WL"};
      pins.insert(pins.end(), row_signals.begin(), row_signals.end());
      break;
    case R::kDummyColCell: pins = {"WL", "BL", "BLB"}; break;
    case R::kSenseAmp: pins = {"BL", "BLB", "EN", "OUT"}; break;
    case R::kMatchlineSenseAmp: pins = {"ML", "EN", "DIS", "OUT"}; break;
    case R::kAndSenseAmp: pins = {"ANDL", "EN", "DIS", "OUT"}; break;
    case R::kDummyLoad: pins = {"IN"}; break;
    case R::kPrecharge: pins = {"PCH", "BL", "BLB"}; break;
    case R::kDelaySenseAmp: pins = {"IN", "OUT"}; break;
    case R::kBitlineDriver: pins = {"DIN", "WE", "BL", "BLB"}; break;
    case R::kDummyLine:
      pins = {"DML"};
      if (variant == CellVariant::kLimDynamic) pins.push_back("PRE");
      break;
    case R::kDummySenseAmp: pins = {"DML", "EN", "OUT"}; break;
  }
  return pins;
}

std::optional<std::string> PrimitiveLibrary::name(PrimitiveRole role) const {
  const auto it = names.find(role);
  if (it == names.end() || it->second.empty()) return std::nullopt;
  return it->second;
}

PrimitiveLibrary PrimitiveLibrary::placeholder(CellVariant variant,
                                               std::string include) {
  PrimitiveLibrary lib;
  lib.includes.push_back(std::move(include));
  for (PrimitiveRole r : required_roles(variant)) {
    lib.names[r] = std::string(limsim::id(variant)) + "_" + std::string(id(r));
  }
  return lib;
}

PrimitiveLibrary PrimitiveLibrary::parse(std::string_view text) {
  PrimitiveLibrary lib;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidConfig,
                  "primitive library line " + std::to_string(line_no) +
                      ": expected key = value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "include") {
      lib.includes.push_back(value);
    } else if (auto role = parse_role(key)) {
      lib.names[*role] = value;
    } else {
      throw Error(ErrorCode::kInvalidConfig,
                  "primitive library line " + std::to_string(line_no) +
                      ": unknown role '" + key + "'");
    }
  }
  return lib;
}

std::string placeholder_primitives() {
  std::ostringstream out;
  out << R"(* Copyright 2026 The limsim Authors
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
*
)";
  out << "* limsim placeholder primitives\n"
      << "* Each subcircuit only ties its pins to ground through 1T resistors so\n"
      << "* generated netlists parse standalone. Replace with extracted cells.\n";
  for (CellVariant v : kAllVariants) {
    for (PrimitiveRole r : required_roles(v)) {
      const auto pins = pin_names(r, v);
      out << "\n.SUBCKT " << limsim::id(v) << '_' << id(r);
      for (const auto& p : pins) out << ' ' << p;
      out << '\n';
      for (std::size_t i = 0; i < pins.size(); ++i) {
        out << "R" << i << ' ' << pins[i] << " 0 1T\n";
      }
      out << ".ENDS\n";
    }
  }
  return out.str();
}

ReducedArrayModel build_reduced_model(ArrayGeometry geometry,
                                      CellVariant variant) {
  geometry.validate();
  if (!geometry.block_aligned()) {
    throw Error(ErrorCode::kGeometryNotBlockAligned,
                "rows and cols must be multiples of 32, got " +
                    std::to_string(geometry.rows) + "x" +
                    std::to_string(geometry.cols));
  }
  ReducedArrayModel m;
  m.geometry = geometry;
  m.variant = variant;
  m.read_write_cell = {0, geometry.cols - 1};
  m.search_and_cell = {0, 0};
  m.dummy_row_cells = geometry.cols - 2;
  m.dummy_col_cells = geometry.rows - 1;
  m.dummy_line = variant != CellVariant::kSram6T;
  m.dummy_loads = m.dummy_line ? geometry.rows : 0;
  for (PrimitiveRole r : required_roles(variant)) {
    if (r != R::kCell && r != R::kDummyRowCell && r != R::kDummyColCell) {
      m.peripherals.push_back(r);
    }
  }
  return m;
}

namespace {

struct ArrayNets {
  std::vector<std::string> ports;
  std::vector<std::string> row0_signals;  // ML0 ANDL0 PRE0 as present
};

ArrayNets array_nets(const ReducedArrayModel& m) {
  ArrayNets n;
  for (std::size_t r = 0; r < m.geometry.rows; ++r) n.ports.push_back(wl(r));
  const std::size_t last = m.geometry.cols - 1;
  for (auto s : {bl(0), blb(0), bl(last), blb(last)}) n.ports.push_back(s);
  if (m.has_matchline()) n.row0_signals.push_back("ML0");
  if (m.has_and_line()) n.row0_signals.push_back("ANDL0");
  if (m.has_precharge_row()) n.row0_signals.push_back("PRE0");
  n.ports.insert(n.ports.end(), n.row0_signals.begin(), n.row0_signals.end());
  if (m.dummy_line) n.ports.push_back("DML");
  for (auto s : {"EN", "PCH", "DIN", "WE", "SAEN", "SA_OUT"}) n.ports.push_back(s);
  if (m.has_matchline()) n.ports.push_back("MLSA_OUT");
  if (m.has_and_line()) n.ports.push_back("ANDSA_OUT");
  if (m.dummy_line) n.ports.push_back("DSA_OUT");
  return n;
}

std::string array_subckt_name(const ReducedArrayModel& m) {
  return "limsim_array_" + std::string(limsim::id(m.variant)) + "_" +
         std::to_string(m.geometry.rows) + "x" + std::to_string(m.geometry.cols);
}

}  // namespace

std::string emit_netlist(const ReducedArrayModel& model,
                         const PrimitiveLibrary& library) {
  std::map<PrimitiveRole, std::string> names;
  for (PrimitiveRole r : required_roles(model.variant)) {
    auto n = library.name(r);
    if (!n) {
      throw Error(ErrorCode::kMissingPrimitive,
                  "primitive library has no '" + std::string(id(r)) +
                      "' subcircuit required by " +
                      std::string(limsim::id(model.variant)));
    }
    names[r] = *n;
  }

  const ArrayNets nets = array_nets(model);
  const std::size_t rows = model.geometry.rows;
  const std::size_t last = model.geometry.cols - 1;
  const std::string subckt = array_subckt_name(model);

  std::ostringstream out;
  auto instance = [&](const std::string& inst, PrimitiveRole role,
                      const std::vector<std::string>& nodes) {
    out << inst;
    for (const auto& n : nodes) out << ' ' << n;
    out << ' ' << names.at(role) << '\n';
  };
  auto with_row0 = [&](std::vector<std::string> nodes) {
    nodes.insert(nodes.end(), nets.row0_signals.begin(), nets.row0_signals.end());
    return nodes;
  };

  out << "* limsim reduced worst-case array\n"
      << "* variant: " << limsim::id(model.variant) << '\n'
      << "* geometry: " << rows << 'x' << model.geometry.cols << '\n'
      << "* cell instances: " << model.cell_instances() << " ("
      << ReducedArrayModel::kRealCells << " real, " << model.dummy_row_cells
      << " dummy row, " << model.dummy_col_cells << " dummy column)\n"
      << "* dummy loads: " << model.dummy_loads << '\n';
  for (const auto& inc : library.includes) out << ".include \"" << inc << "\"\n";
  out << ".global VDD VSS\n\n";

  out << ".SUBCKT " << subckt << '\n';
  write_wrapped(out, nets.ports);

  out << "* critical cells\n";
  instance("XCELL_0_" + std::to_string(last), R::kCell,
           with_row0({wl(0), bl(last), blb(last)}));
  instance("XCELL_0_0", R::kCell, with_row0({wl(0), bl(0), blb(0)}));

  out << "* dummy row cells (row signals only)\n";
  for (std::size_t c = 1; c < last; ++c) {
    instance("XDROW_0_" + std::to_string(c), R::kDummyRowCell, with_row0({wl(0)}));
  }
  out << "* dummy column cells (bitline transistors only)\n";
  for (std::size_t r = 1; r < rows; ++r) {
    instance("XDCOL_" + std::to_string(r) + "_" + std::to_string(last),
             R::kDummyColCell, {wl(r), bl(last), blb(last)});
  }

  out << "* periphery\n";
  instance("XBLDRV", R::kBitlineDriver, {"DIN", "WE", bl(last), blb(last)});
  instance("XPCH", R::kPrecharge, {"PCH", bl(last), blb(last)});
  instance("XDELAYSA", R::kDelaySenseAmp, {"EN", "SAEN"});
  instance("XSA", R::kSenseAmp, {bl(last), blb(last), "SAEN", "SA_OUT"});
  const std::string disable = model.dummy_line ? "DSA_OUT" : "VSS";
  if (model.has_matchline()) {
    instance("XMLSA", R::kMatchlineSenseAmp, {"ML0", "EN", disable, "MLSA_OUT"});
  }
  if (model.has_and_line()) {
    instance("XANDSA", R::kAndSenseAmp, {"ANDL0", "EN", disable, "ANDSA_OUT"});
  }
  if (model.dummy_line) {
    out << "* dummy line, dummy sense amplifier and its OR-input loads\n";
    std::vector<std::string> dml{"DML"};
    if (model.has_precharge_row()) dml.push_back("PRE0");
    instance("XDML", R::kDummyLine, dml);
    instance("XDSA", R::kDummySenseAmp, {"DML", "EN", "DSA_OUT"});
    for (std::size_t r = 0; r < model.dummy_loads; ++r) {
      instance("XDLOAD_" + std::to_string(r), R::kDummyLoad, {"DSA_OUT"});
    }
  }
  out << ".ENDS " << subckt << "\n\n";

  out << "XARRAY\n";
  write_wrapped(out, nets.ports);
  out << "+ " << subckt << '\n';
  return out.str();
}

// --- Stimuli -----------------------------------------------------------------

StimulusOp StimulusOp::write(std::size_t row, Word data) {
  StimulusOp op;
  op.kind = OperationKind::kWrite;
  op.row = row;
  op.data = std::move(data);
  return op;
}

StimulusOp StimulusOp::read(std::size_t row) {
  StimulusOp op;
  op.kind = OperationKind::kRead;
  op.row = row;
  return op;
}

StimulusOp StimulusOp::search(Word key) {
  StimulusOp op;
  op.kind = OperationKind::kSearch;
  op.data = std::move(key);
  return op;
}

StimulusOp StimulusOp::and_mask(Mask mask) {
  StimulusOp op;
  op.kind = OperationKind::kAnd;
  op.mask = std::move(mask);
  return op;
}

std::string StimulusOp::describe() const {
  switch (kind) {
    case OperationKind::kWrite:
      return "write row " + std::to_string(row) + " " +
             (data ? data->to_string() : "?");
    case OperationKind::kRead:
      return "read row " + std::to_string(row);
    case OperationKind::kSearch:
      return "search " + (data ? data->to_string() : "?");
    case OperationKind::kAnd:
      return "and " + (mask ? mask->to_string() : "?");
  }
  return "?";
}

namespace {

std::size_t cycles_of(OperationKind k) {
  return (k == OperationKind::kSearch || k == OperationKind::kAnd) ? 2 : 1;
}

void validate_program(const StimulusProgram& p, CellVariant variant) {
  p.geometry.validate();
  SimulationParams{p.vdd, p.t_clk_ns}.validate();
  if (p.sa_delay_ns && !(*p.sa_delay_ns >= 0.0 && *p.sa_delay_ns < p.t_clk_ns)) {
    throw Error(ErrorCode::kInvalidArgument,
                "sense amplifier delay must lie within one clock period");
  }
  const std::size_t cols = p.geometry.cols;
  for (const auto& op : p.ops) {
    require_support(variant, op.kind);
    switch (op.kind) {
      case OperationKind::kWrite:
      case OperationKind::kRead:
        if (op.row >= p.geometry.rows) {
          throw Error(ErrorCode::kIndexOutOfRange,
                      "stimulus row " + std::to_string(op.row) + " out of range");
        }
        if (op.kind == OperationKind::kRead) break;
        [[fallthrough]];
      case OperationKind::kSearch:
        if (!op.data || op.data->width() != cols) {
          throw Error(ErrorCode::kWidthMismatch,
                      "stimulus operand must have " + std::to_string(cols) + " bits");
        }
        break;
      case OperationKind::kAnd:
        if (!op.mask || op.mask->width() != cols) {
          throw Error(ErrorCode::kWidthMismatch,
                      "stimulus mask must have " + std::to_string(cols) + " bits");
        }
        break;
    }
  }
}

// Builds a waveform from per-interval levels; merges equal neighbours.
class WaveBuilder {
 public:
  explicit WaveBuilder(std::string name) { wave_.signal = std::move(name); }
  void set(double t, double level) {
    if (!wave_.points.empty() && wave_.points.back().first == t) {
      wave_.points.back().second = level;
    } else {
      wave_.points.emplace_back(t, level);
    }
    if (wave_.points.size() >= 2 &&
        wave_.points[wave_.points.size() - 2].second == wave_.points.back().second) {
      wave_.points.pop_back();
    }
  }
  Waveform take() { return std::move(wave_); }

 private:
  Waveform wave_;
};

}  // namespace

double Waveform::level_at(double t_ns) const {
  double level = points.empty() ? 0.0 : points.front().second;
  for (const auto& [t, v] : points) {
    if (t <= t_ns) level = v;
    else break;
  }
  return level;
}

std::vector<std::size_t> op_start_cycles(const StimulusProgram& program) {
  std::vector<std::size_t> starts;
  std::size_t cycle = 1;
  for (const auto& op : program.ops) {
    starts.push_back(cycle);
    cycle += cycles_of(op.kind);
  }
  return starts;
}

std::size_t total_cycles(const StimulusProgram& program) {
  std::size_t n = 2;  // leading and trailing idle cycles
  for (const auto& op : program.ops) n += cycles_of(op.kind);
  return n;
}

std::vector<Waveform> build_waveforms(const StimulusProgram& program,
                                      CellVariant variant) {
  validate_program(program, variant);
  const double T = program.t_clk_ns;
  const double hi = program.vdd;
  const std::size_t n_cycles = total_cycles(program);
  const std::size_t rows = program.geometry.rows;
  const std::size_t last = program.geometry.cols - 1;

  // Per-cycle level tables, sampled on quarter-cycle slots.
  constexpr int kSlots = 4;
  const std::size_t n_slots = n_cycles * kSlots;
  std::map<std::string, std::vector<double>> level;
  auto signal = [&](const std::string& s) -> std::vector<double>& {
    auto& v = level[s];
    if (v.empty()) v.assign(n_slots, 0.0);
    return v;
  };
  auto fill = [&](const std::string& s, std::size_t cycle, int from, int to,
                  double value) {
    auto& v = signal(s);
    for (int k = from; k < to; ++k) v[cycle * kSlots + static_cast<std::size_t>(k)] = value;
  };

  std::vector<std::string> order{"CLK", "EN", "PCH", "WE", "DIN", bl(0), blb(0)};
  const bool dynamic = variant == CellVariant::kLimDynamic;
  if (dynamic) order.push_back("PRE0");
  for (std::size_t r = 0; r < rows; ++r) order.push_back(wl(r));
  for (const auto& s : order) signal(s);

  for (std::size_t c = 0; c < n_cycles; ++c) fill("CLK", c, 0, 2, hi);
  if (dynamic) {
    for (std::size_t c = 0; c < n_cycles; ++c) fill("PRE0", c, 0, kSlots, hi);
  }

  const auto starts = op_start_cycles(program);
  for (std::size_t i = 0; i < program.ops.size(); ++i) {
    const StimulusOp& op = program.ops[i];
    const std::size_t c0 = starts[i];
    switch (op.kind) {
      case OperationKind::kWrite:
        fill("WE", c0, 0, kSlots, hi);
        fill("DIN", c0, 0, kSlots, is_set((*op.data)[last]) ? hi : 0.0);
        fill(wl(op.row), c0, 1, kSlots, hi);
        break;
      case OperationKind::kRead:
        fill("PCH", c0, 0, 1, hi);
        fill(wl(op.row), c0, 1, kSlots, hi);
        fill("EN", c0, 1, kSlots, hi);
        break;
      case OperationKind::kSearch:
      case OperationKind::kAnd: {
        cell::BitlinePair first, far;
        if (op.kind == OperationKind::kSearch) {
          first = cell::key_bitlines((*op.data)[0]);
          far = cell::key_bitlines((*op.data)[last]);
        } else {
          first = cell::mask_bitlines(variant, (*op.mask)[0]);
          far = cell::mask_bitlines(variant, (*op.mask)[last]);
        }
        // Operand stays on the bitlines through pre-discharge and evaluate.
        for (std::size_t c : {c0, c0 + 1}) {
          fill(bl(0), c, 0, kSlots, is_set(first.bl) ? hi : 0.0);
          fill(blb(0), c, 0, kSlots, is_set(first.blb) ? hi : 0.0);
          fill("WE", c, 0, kSlots, hi);
          fill("DIN", c, 0, kSlots, is_set(far.bl) ? hi : 0.0);
        }
        if (dynamic && op.kind == OperationKind::kAnd) {
          fill("PRE0", c0, 0, kSlots, 0.0);
        }
        fill("EN", c0 + 1, 0, kSlots, hi);
        break;
      }
    }
  }

  std::vector<Waveform> waves;
  for (const auto& name : order) {
    WaveBuilder b(name);
    const auto& v = level.at(name);
    for (std::size_t k = 0; k < n_slots; ++k) {
      b.set(static_cast<double>(k) * T / kSlots, v[k]);
    }
    waves.push_back(b.take());
  }

  // Sense enable fires sa_delay into each sensing cycle.
  WaveBuilder saen("SAEN");
  saen.set(0.0, 0.0);
  for (std::size_t i = 0; i < program.ops.size(); ++i) {
    if (program.ops[i].kind == OperationKind::kWrite) continue;
    const std::size_t c = starts[i] + (program.ops[i].kind == OperationKind::kRead ? 0 : 1);
    saen.set(static_cast<double>(c) * T + program.sa_delay(), hi);
    saen.set(static_cast<double>(c + 1) * T, 0.0);
  }
  waves.push_back(saen.take());
  return waves;
}

std::string emit_stimuli(const StimulusProgram& program, CellVariant variant) {
  const auto waves = build_waveforms(program, variant);
  const double T = program.t_clk_ns;
  const double edge = T / 100.0;
  const auto starts = op_start_cycles(program);

  std::ostringstream out;
  out << "* limsim stimuli\n"
      << "* variant: " << limsim::id(variant) << '\n'
      << "* geometry: " << program.geometry.rows << 'x' << program.geometry.cols
      << '\n'
      << "* clock period: " << num(T) << "ns\n"
      << "* cycles: " << total_cycles(program) << '\n';
  for (std::size_t i = 0; i < program.ops.size(); ++i) {
    out << "* cycle " << starts[i] << ": " << program.ops[i].describe() << '\n';
  }
  out << ".param vdd=" << num(program.vdd) << " tclk=" << num(T)
      << "n sa_delay=" << num(program.sa_delay()) << "n\n";
  out << "VSUPPLY VDD 0 DC {vdd}\n"
      << "VGROUND VSS 0 DC 0\n";

  for (const auto& w : waves) {
    out << 'V' << w.signal << ' ' << w.signal << " 0 PWL(";
    double prev = w.points.front().second;
    out << "0n " << num(prev);
    for (std::size_t i = 1; i < w.points.size(); ++i) {
      const auto& [t, v] = w.points[i];
      out << ' ' << num(t) << "n " << num(prev) << ' ' << num(t + edge) << "n "
          << num(v);
      prev = v;
    }
    out << ")\n";
  }
  return out.str();
}

// --- Parse-back and lint -----------------------------------------------------

NetlistSummary parse_netlist(std::string_view text) {
  NetlistSummary s;
  bool inside = false;
  for (const auto& line : logical_lines(text)) {
    const auto t = tokens(line);
    if (t.empty()) continue;
    const std::string head = lower(t[0]);
    if (head == ".subckt") {
      inside = true;
      s.array_subckt = t.size() > 1 ? t[1] : "";
      s.ports.assign(t.begin() + std::min<std::ptrdiff_t>(2, static_cast<std::ptrdiff_t>(t.size())), t.end());
      continue;
    }
    if (head == ".ends") {
      inside = false;
      continue;
    }
    if (!inside || (t[0][0] != 'X' && t[0][0] != 'x')) continue;
    ++s.instances;
    const std::string& name = t[0];
    if (name.rfind("XCELL_", 0) == 0) ++s.real_cells;
    else if (name.rfind("XDROW_", 0) == 0) ++s.dummy_row_cells;
    else if (name.rfind("XDCOL_", 0) == 0) ++s.dummy_col_cells;
    else if (name.rfind("XDLOAD_", 0) == 0) ++s.dummy_loads;
    else if (name == "XDML") s.has_dummy_line = true;
  }
  s.cell_instances = s.real_cells + s.dummy_row_cells + s.dummy_col_cells;
  for (const auto& p : s.ports) {
    if (p.rfind("ML", 0) == 0) s.has_matchline = true;
    if (p.rfind("ANDL", 0) == 0) s.has_and_line = true;
    if (p.rfind("PRE", 0) == 0) s.has_precharge_row = true;
  }
  return s;
}

std::vector<std::string> lint_netlist(std::string_view netlist,
                                      std::optional<std::string_view> primitives) {
  std::vector<std::string> problems;
  std::set<std::string> supplies{"0", "VDD", "VSS"};
  std::map<std::string, std::size_t> subckt_pins;
  if (primitives) {
    for (const auto& line : logical_lines(*primitives)) {
      const auto t = tokens(line);
      if (t.size() >= 2 && lower(t[0]) == ".subckt") subckt_pins[t[1]] = t.size() - 2;
    }
  }

  std::set<std::string> ports;
  std::string current;
  for (const auto& line : logical_lines(netlist)) {
    const auto t = tokens(line);
    if (t.empty()) continue;
    const std::string head = lower(t[0]);
    if (head == ".global") {
      supplies.insert(t.begin() + 1, t.end());
      continue;
    }
    if (head == ".subckt") {
      current = t.size() > 1 ? t[1] : "";
      ports = std::set<std::string>(t.begin() + std::min<std::ptrdiff_t>(2, static_cast<std::ptrdiff_t>(t.size())), t.end());
      subckt_pins[current] = t.size() >= 2 ? t.size() - 2 : 0;
      continue;
    }
    if (head == ".ends") {
      current.clear();
      continue;
    }
    if (t[0][0] != 'X' && t[0][0] != 'x') continue;
    if (t.size() < 2) {
      problems.push_back(t[0] + ": instance without subcircuit");
      continue;
    }
    const std::string& ref = t.back();
    const std::size_t n_nodes = t.size() - 2;
    if (!current.empty()) {
      for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        if (!ports.count(t[i]) && !supplies.count(t[i])) {
          problems.push_back(t[0] + ": node " + t[i] + " is not declared");
        }
      }
    }
    const bool checkable = primitives.has_value() || ref.rfind("limsim_array_", 0) == 0;
    if (checkable) {
      const auto it = subckt_pins.find(ref);
      if (it == subckt_pins.end()) {
        problems.push_back(t[0] + ": subcircuit " + ref + " is not defined");
      } else if (it->second != n_nodes) {
        problems.push_back(t[0] + ": " + std::to_string(n_nodes) +
                           " nodes for " + std::to_string(it->second) + " pins");
      }
    }
  }
  return problems;
}

std::vector<std::string> lint_stimuli(std::string_view netlist,
                                      std::string_view stimuli) {
  const NetlistSummary s = parse_netlist(netlist);
  const std::set<std::string> ports(s.ports.begin(), s.ports.end());
  std::vector<std::string> problems;
  for (const auto& line : logical_lines(stimuli)) {
    const auto t = tokens(line);
    if (t.size() < 3 || (t[0][0] != 'V' && t[0][0] != 'v')) continue;
    if (t[1] != "CLK" && t[1] != "VDD" && t[1] != "VSS" && !ports.count(t[1])) {
      problems.push_back(t[0] + ": drives " + t[1] + " which is not an array port");
    }
  }
  return problems;
}

}  // namespace limsim::netlist
