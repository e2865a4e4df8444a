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

// limsim command line: maxmin, compare, netlist, simulate, audit.

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "limsim/limsim.h"
#include "run_config.hpp"
#include "splitmix64.hpp"

namespace fs = std::filesystem;
using limsim::tools::Bits;
using limsim::tools::ConfigError;
using limsim::tools::RunConfig;
using limsim::tools::format_bits;

namespace {

constexpr int kExitError = 1;
constexpr int kExitConfig = 2;

class LimError : public std::runtime_error {
 public:
  LimError(lim_status s, const std::string& what)
      : std::runtime_error(what + ": " + lim_status_name(s) + ": " +
                           lim_last_error()) {}
};

void check(lim_status s, const char* what) {
  if (s != LIM_OK) throw LimError(s, what);
}

struct ArrayDeleter {
  void operator()(lim_array* a) const { lim_array_destroy(a); }
};
struct ExtremeDeleter {
  void operator()(lim_extreme* e) const { lim_extreme_destroy(e); }
};
struct CalibrationDeleter {
  void operator()(lim_calibration* c) const { lim_calibration_destroy(c); }
};
struct PrimitivesDeleter {
  void operator()(lim_primitives* p) const { lim_primitives_destroy(p); }
};
using ArrayPtr = std::unique_ptr<lim_array, ArrayDeleter>;
using CalibrationPtr = std::unique_ptr<lim_calibration, CalibrationDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  lim_string_free(s);
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) { row(header); }
  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) text_ += ',';
      text_ += csv_field(fields[i]);
    }
    text_ += '\n';
  }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
}

fs::path prepare_out(const std::string& flag, const RunConfig* cfg) {
  fs::path dir = !flag.empty() ? fs::path(flag)
                 : (cfg && !cfg->out_dir.empty()) ? fs::path(cfg->out_dir)
                                                   : fs::path(".");
  fs::create_directories(dir);
  return dir;
}

RunConfig load(const std::string& path, std::optional<std::uint64_t> seed) {
  if (path.empty()) throw ConfigError("--config is required");
  RunConfig cfg = limsim::tools::load_config(path);
  if (seed) cfg.seed = *seed;
  return cfg;
}

std::string u64(std::uint64_t v) { return std::to_string(v); }

ArrayPtr build_array(const RunConfig& cfg) {
  lim_array* raw = nullptr;
  check(lim_array_create(*cfg.variant, cfg.rows, cfg.cols, &raw), "create array");
  ArrayPtr array(raw);
  if (cfg.contents == limsim::tools::Contents::kRandom) {
    limsim::tools::SplitMix64 rng(cfg.seed);
    for (std::uint32_t r = 0; r < cfg.rows; ++r) {
      const Bits bits = rng.bits(cfg.cols);
      check(lim_array_write(raw, r, bits.data(), bits.size(), nullptr), "write");
    }
  }
  for (const auto& [r, bits] : cfg.explicit_rows) {
    check(lim_array_write(raw, r, bits.data(), bits.size(), nullptr), "write");
  }
  return array;
}

Bits read_row(const lim_array* array, std::uint32_t row, std::uint32_t cols) {
  Bits bits(cols);
  check(lim_array_read(array, row, bits.data(), bits.size(), nullptr), "read");
  return bits;
}

// Direct-scan reference: lexicographic comparison of bit strings, with the
// sign bit inverted for two's complement.
bool better(const Bits& a, const Bits& b, lim_mode mode, lim_encoding enc) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    bool a_greater = a[i] > b[i];
    if (i == 0 && enc == LIM_TWOS_COMPLEMENT) a_greater = !a_greater;
    return mode == LIM_MAX ? a_greater : !a_greater;
  }
  return false;
}

std::string row_bits(const std::vector<std::uint8_t>& v) { return format_bits(v); }

int cmd_maxmin(const RunConfig& cfg, const fs::path& out) {
  limsim::tools::require_array(cfg);
  if (!lim_supports(*cfg.variant, LIM_OP_AND)) {
    throw ConfigError(std::string("maxmin needs a logic-in-memory variant, got ") +
                      lim_variant_id(*cfg.variant));
  }
  ArrayPtr array = build_array(cfg);

  lim_extreme* raw = nullptr;
  check(lim_find_extreme(array.get(), cfg.mode, cfg.encoding, &raw), "maxmin");
  std::unique_ptr<lim_extreme, ExtremeDeleter> result(raw);

  std::uint32_t oracle_row = 0;
  Bits oracle_value = read_row(array.get(), 0, cfg.cols);
  for (std::uint32_t r = 1; r < cfg.rows; ++r) {
    Bits v = read_row(array.get(), r, cfg.cols);
    if (better(v, oracle_value, cfg.mode, cfg.encoding)) {
      oracle_row = r;
      oracle_value = std::move(v);
    }
  }

  Bits value(cfg.cols);
  check(lim_extreme_value(raw, value.data(), value.size()), "maxmin value");
  const std::uint32_t row = lim_extreme_row(raw);
  const std::size_t steps = lim_extreme_step_count(raw);
  const bool agrees = row == oracle_row && value == oracle_value;

  CsvWriter res({"row", "value", "steps", "oracle_row", "oracle_value", "agrees"});
  res.row({std::to_string(row), format_bits(value), u64(steps),
           std::to_string(oracle_row), format_bits(oracle_value),
           agrees ? "true" : "false"});

  CsvWriter trace({"step", "bit_position", "mask", "keep", "and_results",
                   "candidates_before", "candidates_after", "lines_charged",
                   "lines_discharged", "gate_commutations"});
  Bits mask(cfg.cols), and_results(cfg.rows), before(cfg.rows), after(cfg.rows);
  for (std::size_t i = 0; i < steps; ++i) {
    lim_step_info info{};
    check(lim_extreme_step(raw, i, &info, mask.data(), and_results.data(),
                           before.data(), after.data()),
          "maxmin step");
    trace.row({u64(i), u64(info.bit_position), row_bits(mask),
               std::to_string(info.keep), row_bits(and_results),
               row_bits(before), row_bits(after), u64(info.event.lines_charged),
               u64(info.event.lines_discharged),
               u64(info.event.gate_commutations)});
  }

  write_file(out / "result.csv", res.text());
  write_file(out / "trace.csv", trace.text());
  std::cout << "row " << row << " value " << format_bits(value) << " steps "
            << steps << (agrees ? " (agrees with direct scan)\n"
                                : " (DISAGREES with direct scan)\n");
  return agrees ? 0 : kExitError;
}

CalibrationPtr calibration(const std::string& path) {
  lim_calibration* raw = nullptr;
  if (path.empty()) {
    check(lim_calibration_create_seeded(&raw), "calibration");
  } else {
    check(lim_calibration_load(path.c_str(), &raw), "calibration");
  }
  return CalibrationPtr(raw);
}

int cmd_compare(std::uint32_t size, const std::string& cal_path, const fs::path& out) {
  CalibrationPtr cal = calibration(cal_path);
  std::vector<std::pair<std::string, std::string>> files;
  char* text = nullptr;
  check(lim_edp_csv(cal.get(), size, &text), "edp table");
  files.emplace_back("edp.csv", take(text));
  for (int k = 0; k < LIM_CMP_COUNT; ++k) {
    const auto kind = static_cast<lim_comparison>(k);
    check(lim_comparison_csv(cal.get(), kind, size, &text), "comparison table");
    files.emplace_back(std::string(lim_comparison_stem(kind)) + ".csv", take(text));
  }
  for (const auto& [name, body] : files) write_file(out / name, body);
  std::cout << "wrote " << files.size() << " tables for size " << size << " to "
            << out.string() << '\n';
  return 0;
}

std::vector<lim_stimulus_op> stimulus_ops(const RunConfig& cfg) {
  std::vector<lim_stimulus_op> ops;
  for (const auto& s : cfg.script) {
    ops.push_back({s.op, s.row, s.bits.empty() ? nullptr : s.bits.data(),
                   s.bits.size()});
  }
  return ops;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int cmd_netlist(const RunConfig& cfg, const fs::path& out) {
  limsim::tools::require_array(cfg);
  lim_primitives* raw = nullptr;
  if (cfg.library_path.empty()) {
    check(lim_primitives_create_placeholder(*cfg.variant, cfg.include_path.c_str(),
                                            &raw),
          "primitive library");
  } else {
    check(lim_primitives_parse(read_text(cfg.library_path).c_str(), &raw),
          "primitive library");
  }
  std::unique_ptr<lim_primitives, PrimitivesDeleter> lib(raw);

  char* text = nullptr;
  check(lim_netlist_emit(*cfg.variant, cfg.rows, cfg.cols, raw, &text), "netlist");
  const std::string netlist = take(text);

  const auto ops = stimulus_ops(cfg);
  check(lim_stimuli_emit(*cfg.variant, cfg.rows, cfg.cols, ops.data(), ops.size(),
                         cfg.t_clk_ns.value_or(1.0), cfg.vdd,
                         cfg.sa_delay_ns.value_or(-1.0), &text),
        "stimuli");
  const std::string stimuli = take(text);

  std::uint32_t problems = 0;
  check(lim_netlist_lint(netlist.c_str(), nullptr, &problems, &text), "lint");
  const std::string report = take(text);
  if (problems != 0) {
    std::cerr << "netlist lint failed:\n" << report;
    return kExitError;
  }
  check(lim_stimuli_lint(netlist.c_str(), stimuli.c_str(), &problems, &text),
        "stimuli lint");
  const std::string stimuli_report = take(text);
  if (problems != 0) {
    std::cerr << "stimuli lint failed:\n" << stimuli_report;
    return kExitError;
  }
  std::uint32_t cells = 0, loads = 0;
  check(lim_netlist_cell_count(netlist.c_str(), &cells, &loads), "parse-back");

  write_file(out / "netlist.sp", netlist);
  write_file(out / "stimuli.sp", stimuli);
  std::cout << lim_variant_id(*cfg.variant) << ' ' << cfg.rows << 'x' << cfg.cols
            << ": " << cells << " cell instances, " << loads << " dummy loads\n";
  return 0;
}

int cmd_simulate(const RunConfig& cfg, const fs::path& out) {
  limsim::tools::require_array(cfg);
  ArrayPtr array = build_array(cfg);
  const double t_clk = cfg.t_clk_ns.value_or(1.0);

  CsvWriter events({"index", "label", "op", "row", "operand", "result",
                    "lines_charged", "lines_discharged", "dummy_window_units",
                    "gate_commutations", "bitline_pairs", "cells_per_bitline"});
  CsvWriter estimates({"index", "label", "op", "charge_events",
                       "leak_window_units", "lines_discharged",
                       "gate_commutations", "bitline_load_units", "estimate"});

  for (std::size_t i = 0; i < cfg.script.size(); ++i) {
    const auto& s = cfg.script[i];
    lim_event ev{};
    std::string row = "", operand = format_bits(s.bits), result;
    Bits buf;
    switch (s.op) {
      case LIM_OP_WRITE:
        check(lim_array_write(array.get(), s.row, s.bits.data(), s.bits.size(), &ev),
              s.label.c_str());
        row = std::to_string(s.row);
        break;
      case LIM_OP_READ:
        buf.resize(cfg.cols);
        check(lim_array_read(array.get(), s.row, buf.data(), buf.size(), &ev),
              s.label.c_str());
        row = std::to_string(s.row);
        result = format_bits(buf);
        break;
      case LIM_OP_SEARCH:
        buf.resize(cfg.rows);
        check(lim_array_search(array.get(), s.bits.data(), s.bits.size(),
                               buf.data(), buf.size(), &ev),
              s.label.c_str());
        result = format_bits(buf);
        break;
      case LIM_OP_AND:
        buf.resize(cfg.rows);
        check(lim_array_and(array.get(), s.bits.data(), s.bits.size(), buf.data(),
                            buf.size(), &ev),
              s.label.c_str());
        result = format_bits(buf);
        break;
    }
    lim_estimate est{};
    check(lim_structural_estimate(&ev, *cfg.variant, cfg.bitline_transistors,
                                  cfg.vdd, t_clk, &cfg.coefficients, &est),
          "estimate");
    events.row({u64(i), s.label, lim_op_id(s.op), row, operand, result,
                u64(ev.lines_charged), u64(ev.lines_discharged),
                u64(ev.dummy_window_units), u64(ev.gate_commutations),
                u64(ev.bitline_pairs), u64(ev.cells_per_bitline)});
    char value[64];
    std::snprintf(value, sizeof value, "%.6g", est.estimate);
    estimates.row({u64(i), s.label, lim_op_id(s.op), u64(est.charge_events),
                   u64(est.leak_window_units), u64(est.lines_discharged),
                   u64(est.gate_commutations), u64(est.bitline_load_units), value});
  }
  write_file(out / "events.csv", events.text());
  write_file(out / "estimates.csv", estimates.text());
  std::cout << cfg.script.size() << " operations simulated\n";
  return 0;
}

int cmd_audit(const std::string& cal_path, const fs::path& out) {
  CalibrationPtr cal = calibration(cal_path);
  char* csv = nullptr;
  char* summary = nullptr;
  std::uint32_t total = 0, unexplained = 0;
  check(lim_audit(cal.get(), &csv, &summary, &total, &unexplained), "audit");
  const std::string text = take(summary);
  write_file(out / "audit.csv", take(csv));
  write_file(out / "audit.txt", text);
  std::cout << text;
  return unexplained == 0 ? 0 : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"limsim: logic-in-memory array simulator"};
  app.require_subcommand(1);

  std::string config_path, out_flag, cal_path;
  std::optional<std::uint64_t> seed;
  std::uint32_t size = 256;

  auto add_common = [&](CLI::App* sub, bool wants_config) {
    if (wants_config) {
      sub->add_option("--config", config_path, "run configuration file")
          ->required();
      sub->add_option("--seed", seed, "override [sim] seed");
    }
    sub->add_option("--out", out_flag, "output directory");
  };

  auto* maxmin = app.add_subcommand("maxmin", "maximum/minimum search");
  add_common(maxmin, true);
  auto* compare = app.add_subcommand("compare", "energy-delay comparison tables");
  add_common(compare, false);
  compare->add_option("--size", size, "array size (rows = cols)");
  compare->add_option("--calibration", cal_path, "calibration CSV");
  auto* netlist = app.add_subcommand("netlist", "reduced array netlist and stimuli");
  add_common(netlist, true);
  auto* simulate = app.add_subcommand("simulate", "run an operation script");
  add_common(simulate, true);
  auto* audit = app.add_subcommand("audit", "check the reference comparison tables");
  add_common(audit, false);
  audit->add_option("--calibration", cal_path, "calibration CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compare) return cmd_compare(size, cal_path, prepare_out(out_flag, nullptr));
    if (*audit) return cmd_audit(cal_path, prepare_out(out_flag, nullptr));
    const RunConfig cfg = load(config_path, seed);
    const fs::path out = prepare_out(out_flag, &cfg);
    if (*maxmin) return cmd_maxmin(cfg, out);
    if (*netlist) return cmd_netlist(cfg, out);
    return cmd_simulate(cfg, out);
  } catch (const ConfigError& e) {
    std::cerr << "limsim: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "limsim: " << e.what() << '\n';
    return kExitError;
  }
}
