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

#include "limsim/limsim.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "limsim/array_engine.hpp"
#include "limsim/cost_model.hpp"
#include "limsim/maxmin_search.hpp"
#include "limsim/netlist_gen.hpp"

struct lim_array {
  limsim::MemoryArray impl;
};
struct lim_extreme {
  limsim::ExtremeResult impl;
  std::size_t cols;
};
struct lim_calibration {
  limsim::cost::CalibrationTable impl;
};
struct lim_primitives {
  limsim::netlist::PrimitiveLibrary impl;
};

namespace {

thread_local std::string g_last_error;

lim_status to_status(limsim::ErrorCode code) {
  // ErrorCode values are numbered to match lim_status.
  return static_cast<lim_status>(static_cast<int>(code));
}

template <typename F>
lim_status guarded(F&& f) noexcept {
  try {
    f();
    g_last_error.clear();
    return LIM_OK;
  } catch (const limsim::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LIM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LIM_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw limsim::Error(limsim::ErrorCode::kInvalidArgument, what);
}

limsim::CellVariant variant_of(lim_variant v) {
  switch (v) {
    case LIM_SRAM_6T: return limsim::CellVariant::kSram6T;
    case LIM_CAM_NOR: return limsim::CellVariant::kCamNor;
    case LIM_AND_DYNAMIC: return limsim::CellVariant::kLimDynamic;
    case LIM_AND_STATIC: return limsim::CellVariant::kLimStatic;
    case LIM_AND_SPECIAL: return limsim::CellVariant::kLimSpecial;
  }
  throw limsim::Error(limsim::ErrorCode::kInvalidArgument, "unknown variant");
}

lim_variant variant_to_c(limsim::CellVariant v) {
  switch (v) {
    case limsim::CellVariant::kSram6T: return LIM_SRAM_6T;
    case limsim::CellVariant::kCamNor: return LIM_CAM_NOR;
    case limsim::CellVariant::kLimDynamic: return LIM_AND_DYNAMIC;
    case limsim::CellVariant::kLimStatic: return LIM_AND_STATIC;
    case limsim::CellVariant::kLimSpecial: return LIM_AND_SPECIAL;
  }
  return LIM_SRAM_6T;
}

limsim::OperationKind op_of(lim_op op) {
  switch (op) {
    case LIM_OP_READ: return limsim::OperationKind::kRead;
    case LIM_OP_WRITE: return limsim::OperationKind::kWrite;
    case LIM_OP_SEARCH: return limsim::OperationKind::kSearch;
    case LIM_OP_AND: return limsim::OperationKind::kAnd;
  }
  throw limsim::Error(limsim::ErrorCode::kInvalidArgument, "unknown operation");
}

lim_op op_to_c(limsim::OperationKind op) {
  switch (op) {
    case limsim::OperationKind::kRead: return LIM_OP_READ;
    case limsim::OperationKind::kWrite: return LIM_OP_WRITE;
    case limsim::OperationKind::kSearch: return LIM_OP_SEARCH;
    case limsim::OperationKind::kAnd: return LIM_OP_AND;
  }
  return LIM_OP_READ;
}

limsim::cost::ComparisonKind comparison_of(lim_comparison k) {
  const int i = static_cast<int>(k);
  if (i < 0 || i >= LIM_CMP_COUNT) {
    throw limsim::Error(limsim::ErrorCode::kInvalidArgument,
                        "unknown comparison table");
  }
  return limsim::cost::kAllComparisons[i];
}

std::vector<limsim::Bit> bits_in(const uint8_t* bits, size_t n) {
  require(bits != nullptr || n == 0, "bit buffer is NULL");
  std::vector<limsim::Bit> out(n);
  for (size_t i = 0; i < n; ++i) {
    require(bits[i] <= 1, "bit buffers hold 0 or 1");
    out[i] = limsim::to_bit(bits[i] != 0);
  }
  return out;
}

void bits_out(std::span<const limsim::Bit> bits, uint8_t* out, size_t n) {
  if (n != bits.size()) {
    throw limsim::Error(limsim::ErrorCode::kWidthMismatch,
                        "output buffer has " + std::to_string(n) +
                            " entries, need " + std::to_string(bits.size()));
  }
  for (size_t i = 0; i < n; ++i) out[i] = limsim::is_set(bits[i]) ? 1 : 0;
}

void event_out(const limsim::SensingEvent& ev, lim_event* out) {
  if (out == nullptr) return;
  out->op = op_to_c(ev.operation);
  out->lines_charged = ev.lines_charged;
  out->lines_discharged = ev.lines_discharged;
  out->dummy_window_units = ev.dummy_window_units;
  out->gate_commutations = ev.gate_commutations;
  out->bitline_pairs = ev.bitline_pairs;
  out->cells_per_bitline = ev.cells_per_bitline;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void set_string(char** out, const std::string& s) {
  require(out != nullptr, "output pointer is NULL");
  *out = dup_string(s);
}

void candidates_out(const limsim::CandidateSet& set, uint8_t* out) {
  if (out == nullptr) return;
  for (std::size_t r = 0; r < set.rows(); ++r) out[r] = set.contains(r) ? 1 : 0;
}

}  // namespace

extern "C" {

const char* lim_last_error(void) { return g_last_error.c_str(); }

const char* lim_status_name(lim_status status) {
  if (status == LIM_OK) return "OK";
  if (status == LIM_ERR_INTERNAL) return "Internal";
  const auto code = static_cast<limsim::ErrorCode>(static_cast<int>(status));
  return limsim::to_string(code).data();
}

void lim_string_free(char* s) { std::free(s); }

const char* lim_variant_id(lim_variant v) {
  try {
    return limsim::id(variant_of(v)).data();
  } catch (...) {
    return "?";
  }
}

const char* lim_variant_label(lim_variant v) {
  try {
    return limsim::label(variant_of(v)).data();
  } catch (...) {
    return "?";
  }
}

lim_status lim_variant_parse(const char* text, lim_variant* out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "NULL argument");
    const auto v = limsim::parse_variant(text);
    if (!v) {
      throw limsim::Error(limsim::ErrorCode::kInvalidConfig,
                          std::string("unknown variant '") + text + "'");
    }
    *out = variant_to_c(*v);
  });
}

const char* lim_op_id(lim_op op) {
  try {
    return limsim::id(op_of(op)).data();
  } catch (...) {
    return "?";
  }
}

int lim_supports(lim_variant v, lim_op op) {
  try {
    return limsim::supports(variant_of(v), op_of(op)) ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

lim_status lim_array_create(lim_variant variant, uint32_t rows, uint32_t cols,
                            lim_array** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is NULL");
    *out = new lim_array{limsim::MemoryArray({rows, cols}, variant_of(variant))};
  });
}

void lim_array_destroy(lim_array* array) { delete array; }

uint32_t lim_array_rows(const lim_array* array) {
  return array ? static_cast<uint32_t>(array->impl.geometry().rows) : 0;
}

uint32_t lim_array_cols(const lim_array* array) {
  return array ? static_cast<uint32_t>(array->impl.geometry().cols) : 0;
}

lim_status lim_array_write(lim_array* array, uint32_t row, const uint8_t* bits,
                           size_t nbits, lim_event* event) {
  return guarded([&] {
    require(array != nullptr, "array handle is NULL");
    const auto ev = array->impl.write_word(row, limsim::Word(bits_in(bits, nbits)));
    event_out(ev, event);
  });
}

lim_status lim_array_read(const lim_array* array, uint32_t row,
                          uint8_t* out_bits, size_t nbits, lim_event* event) {
  return guarded([&] {
    require(array != nullptr && out_bits != nullptr, "NULL argument");
    const auto [word, ev] = array->impl.read_word(row);
    bits_out(word.bits(), out_bits, nbits);
    event_out(ev, event);
  });
}

lim_status lim_array_search(const lim_array* array, const uint8_t* key,
                            size_t nbits, uint8_t* out_rows, size_t nrows,
                            lim_event* event) {
  return guarded([&] {
    require(array != nullptr && out_rows != nullptr, "NULL argument");
    const auto res = array->impl.search(limsim::Word(bits_in(key, nbits)));
    bits_out(res.per_row, out_rows, nrows);
    event_out(res.event, event);
  });
}

lim_status lim_array_and(lim_array* array, const uint8_t* mask, size_t nbits,
                         uint8_t* out_rows, size_t nrows, lim_event* event) {
  return guarded([&] {
    require(array != nullptr && out_rows != nullptr, "NULL argument");
    require(nrows == array->impl.geometry().rows, "row buffer size mismatch");
    const auto res = array->impl.and_op(limsim::Mask(bits_in(mask, nbits)));
    bits_out(res.per_row, out_rows, nrows);
    event_out(res.event, event);
  });
}

lim_status lim_structural_estimate(const lim_event* event, lim_variant variant,
                                   int bitline_transistors, double vdd,
                                   double t_clk_ns,
                                   const lim_estimate_coefficients* coefficients,
                                   lim_estimate* out) {
  return guarded([&] {
    require(event != nullptr && out != nullptr, "NULL argument");
    limsim::SensingEvent ev;
    ev.operation = op_of(event->op);
    ev.lines_charged = event->lines_charged;
    ev.lines_discharged = event->lines_discharged;
    ev.dummy_window_units = event->dummy_window_units;
    ev.gate_commutations = event->gate_commutations;
    ev.bitline_pairs = event->bitline_pairs;
    ev.cells_per_bitline = event->cells_per_bitline;
    limsim::cost::EstimateCoefficients k;
    if (coefficients != nullptr) {
      k = {coefficients->charge, coefficients->leak, coefficients->gate,
           coefficients->load};
    }
    auto loads = limsim::cell::default_bitline_load(variant_of(variant));
    if (bitline_transistors > 0) loads.transistors_on_bitlines = bitline_transistors;
    const auto s = limsim::cost::structural_estimate(ev, loads, {vdd, t_clk_ns}, k);
    *out = {s.charge_events,     s.leak_window_units,  s.lines_discharged,
            s.gate_commutations, s.bitline_load_units, s.estimate};
  });
}

int lim_default_bitline_load(lim_variant variant) {
  try {
    return limsim::cell::default_bitline_load(variant_of(variant))
        .transistors_on_bitlines;
  } catch (...) {
    return 0;
  }
}

lim_status lim_find_extreme(lim_array* array, lim_mode mode,
                            lim_encoding encoding, lim_extreme** out) {
  return guarded([&] {
    require(array != nullptr && out != nullptr, "NULL argument");
    const auto m = mode == LIM_MIN ? limsim::SearchMode::kMin : limsim::SearchMode::kMax;
    const auto e = encoding == LIM_TWOS_COMPLEMENT ? limsim::Encoding::kTwosComplement
                                                   : limsim::Encoding::kUnsigned;
    auto result = limsim::find_extreme(array->impl, m, e);
    *out = new lim_extreme{std::move(result), array->impl.geometry().cols};
  });
}

void lim_extreme_destroy(lim_extreme* result) { delete result; }

uint32_t lim_extreme_row(const lim_extreme* result) {
  return result ? static_cast<uint32_t>(result->impl.row) : 0;
}

lim_status lim_extreme_value(const lim_extreme* result, uint8_t* out_bits,
                             size_t nbits) {
  return guarded([&] {
    require(result != nullptr && out_bits != nullptr, "NULL argument");
    bits_out(result->impl.value.bits(), out_bits, nbits);
  });
}

size_t lim_extreme_step_count(const lim_extreme* result) {
  return result ? result->impl.steps.size() : 0;
}

lim_status lim_extreme_step(const lim_extreme* result, size_t index,
                            lim_step_info* info, uint8_t* mask,
                            uint8_t* and_results, uint8_t* candidates_before,
                            uint8_t* candidates_after) {
  return guarded([&] {
    require(result != nullptr, "result handle is NULL");
    if (index >= result->impl.steps.size()) {
      throw limsim::Error(limsim::ErrorCode::kIndexOutOfRange,
                          "step index out of range");
    }
    const auto& s = result->impl.steps[index];
    if (info != nullptr) {
      info->bit_position = s.bit_position;
      info->keep = limsim::is_set(s.keep) ? 1 : 0;
      info->candidates_before = s.candidates_before.count();
      info->candidates_after = s.candidates_after.count();
      event_out(s.event, &info->event);
    }
    if (mask != nullptr) bits_out(s.mask.bits(), mask, result->cols);
    if (and_results != nullptr) {
      bits_out(s.and_results, and_results, s.and_results.size());
    }
    candidates_out(s.candidates_before, candidates_before);
    candidates_out(s.candidates_after, candidates_after);
  });
}

lim_status lim_calibration_create_seeded(lim_calibration** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is NULL");
    *out = new lim_calibration{limsim::cost::CalibrationTable::seeded()};
  });
}

lim_status lim_calibration_load(const char* path, lim_calibration** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "NULL argument");
    *out = new lim_calibration{limsim::cost::CalibrationTable::load(path)};
  });
}

void lim_calibration_destroy(lim_calibration* cal) { delete cal; }

lim_status lim_calibration_text(const lim_calibration* cal, char** out) {
  return guarded([&] {
    require(cal != nullptr, "calibration handle is NULL");
    set_string(out, cal->impl.to_text());
  });
}

lim_status lim_edp_lookup(const lim_calibration* cal, lim_variant v, lim_op op,
                          uint32_t size, double* out) {
  return guarded([&] {
    require(cal != nullptr && out != nullptr, "NULL argument");
    *out = limsim::cost::edp_lookup(cal->impl, variant_of(v), op_of(op), size);
  });
}

lim_status lim_relative_variation(double edp_row, double edp_col, double* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is NULL");
    *out = limsim::cost::relative_variation(edp_row, edp_col);
  });
}

const char* lim_comparison_stem(lim_comparison kind) {
  static thread_local std::string stem;
  try {
    stem = limsim::cost::file_stem(comparison_of(kind));
  } catch (...) {
    stem = "?";
  }
  return stem.c_str();
}

lim_status lim_comparison_csv(const lim_calibration* cal, lim_comparison kind,
                              uint32_t size, char** out) {
  return guarded([&] {
    require(cal != nullptr, "calibration handle is NULL");
    set_string(out, limsim::cost::to_csv(limsim::cost::comparison_table(
                        cal->impl, comparison_of(kind), size)));
  });
}

lim_status lim_edp_csv(const lim_calibration* cal, uint32_t size, char** out) {
  return guarded([&] {
    require(cal != nullptr, "calibration handle is NULL");
    set_string(out, limsim::cost::edp_csv(cal->impl, size));
  });
}

lim_status lim_audit(const lim_calibration* cal, char** csv, char** summary,
                     uint32_t* total, uint32_t* unexplained) {
  return guarded([&] {
    require(cal != nullptr, "calibration handle is NULL");
    const auto report = limsim::cost::audit(cal->impl);
    if (csv != nullptr) *csv = dup_string(limsim::cost::to_csv(report));
    if (summary != nullptr) *summary = dup_string(limsim::cost::summary_text(report));
    if (total != nullptr) *total = static_cast<uint32_t>(report.entries.size());
    if (unexplained != nullptr) {
      *unexplained = static_cast<uint32_t>(report.unexplained());
    }
  });
}

lim_status lim_primitives_create_placeholder(lim_variant variant,
                                             const char* include_path,
                                             lim_primitives** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is NULL");
    *out = new lim_primitives{limsim::netlist::PrimitiveLibrary::placeholder(
        variant_of(variant), include_path ? include_path : "primitives.sp")};
  });
}

lim_status lim_primitives_parse(const char* text, lim_primitives** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "NULL argument");
    *out = new lim_primitives{limsim::netlist::PrimitiveLibrary::parse(text)};
  });
}

void lim_primitives_destroy(lim_primitives* lib) { delete lib; }

lim_status lim_placeholder_primitives_text(char** out) {
  return guarded([&] { set_string(out, limsim::netlist::placeholder_primitives()); });
}

lim_status lim_netlist_emit(lim_variant variant, uint32_t rows, uint32_t cols,
                            const lim_primitives* lib, char** out) {
  return guarded([&] {
    const auto v = variant_of(variant);
    const auto model = limsim::netlist::build_reduced_model({rows, cols}, v);
    const auto library =
        lib ? lib->impl : limsim::netlist::PrimitiveLibrary::placeholder(v);
    set_string(out, limsim::netlist::emit_netlist(model, library));
  });
}

lim_status lim_stimuli_emit(lim_variant variant, uint32_t rows, uint32_t cols,
                            const lim_stimulus_op* ops, size_t nops,
                            double t_clk_ns, double vdd, double sa_delay_ns,
                            char** out) {
  return guarded([&] {
    require(ops != nullptr || nops == 0, "ops is NULL");
    limsim::netlist::StimulusProgram program;
    program.geometry = {rows, cols};
    program.t_clk_ns = t_clk_ns;
    program.vdd = vdd;
    if (sa_delay_ns >= 0.0) program.sa_delay_ns = sa_delay_ns;
    for (size_t i = 0; i < nops; ++i) {
      const lim_stimulus_op& op = ops[i];
      switch (op.op) {
        case LIM_OP_READ:
          program.ops.push_back(limsim::netlist::StimulusOp::read(op.row));
          break;
        case LIM_OP_WRITE:
          program.ops.push_back(limsim::netlist::StimulusOp::write(
              op.row, limsim::Word(bits_in(op.bits, op.nbits))));
          break;
        case LIM_OP_SEARCH:
          program.ops.push_back(limsim::netlist::StimulusOp::search(
              limsim::Word(bits_in(op.bits, op.nbits))));
          break;
        case LIM_OP_AND:
          program.ops.push_back(limsim::netlist::StimulusOp::and_mask(
              limsim::Mask(bits_in(op.bits, op.nbits))));
          break;
        default:
          require(false, "unknown operation");
      }
    }
    set_string(out, limsim::netlist::emit_stimuli(program, variant_of(variant)));
  });
}

lim_status lim_netlist_lint(const char* netlist, const char* primitives,
                            uint32_t* problems, char** report) {
  return guarded([&] {
    require(netlist != nullptr && problems != nullptr, "NULL argument");
    std::optional<std::string_view> prims;
    if (primitives != nullptr) prims = primitives;
    const auto found = limsim::netlist::lint_netlist(netlist, prims);
    *problems = static_cast<uint32_t>(found.size());
    if (report != nullptr) {
      std::string text;
      for (const auto& p : found) text += p + '\n';
      *report = dup_string(text);
    }
  });
}

lim_status lim_stimuli_lint(const char* netlist, const char* stimuli,
                            uint32_t* problems, char** report) {
  return guarded([&] {
    require(netlist != nullptr && stimuli != nullptr && problems != nullptr,
            "NULL argument");
    const auto found = limsim::netlist::lint_stimuli(netlist, stimuli);
    *problems = static_cast<uint32_t>(found.size());
    if (report != nullptr) {
      std::string text;
      for (const auto& p : found) text += p + '\n';
      *report = dup_string(text);
    }
  });
}

lim_status lim_netlist_cell_count(const char* netlist, uint32_t* cells,
                                  uint32_t* dummy_loads) {
  return guarded([&] {
    require(netlist != nullptr, "netlist is NULL");
    const auto s = limsim::netlist::parse_netlist(netlist);
    if (cells != nullptr) *cells = static_cast<uint32_t>(s.cell_instances);
    if (dummy_loads != nullptr) *dummy_loads = static_cast<uint32_t>(s.dummy_loads);
  });
}

}  // extern "C"
