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

// Run configuration for the limsim command line. The file is INI-style:
//
//   [array]   variant, rows, cols, contents = zero | random
//   [contents] <row> = <bits>        explicit rows, applied after `contents`
//   [sim]     seed, t_clk_ns, vdd, sa_delay_ns
//   [maxmin]  mode = max | min, encoding = unsigned | twos_complement
//   [script]  <label> = write <row> <bits> | read <row> | search <bits> |
//             and <bits>             (run in file order)
//   [estimate] charge, leak, gate, load, bitline_transistors
//   [netlist] library = <path>, include = <path>
//   [output]  dir
//
// Unknown sections and keys are rejected.

#ifndef LIMSIM_TOOLS_RUN_CONFIG_HPP
#define LIMSIM_TOOLS_RUN_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "limsim/limsim.h"

namespace limsim::tools {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Bits = std::vector<std::uint8_t>;

enum class Contents { kZero, kRandom };

struct ScriptStep {
  std::string label;
  lim_op op = LIM_OP_READ;
  std::uint32_t row = 0;
  Bits bits;  // write data, search key or AND mask
};

struct RunConfig {
  std::optional<lim_variant> variant;
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  Contents contents = Contents::kZero;
  std::map<std::uint32_t, Bits> explicit_rows;

  std::uint64_t seed = 1;
  std::optional<double> t_clk_ns;
  double vdd = 1.0;
  std::optional<double> sa_delay_ns;

  lim_mode mode = LIM_MAX;
  lim_encoding encoding = LIM_UNSIGNED;

  std::vector<ScriptStep> script;

  lim_estimate_coefficients coefficients{10.0, 1.0, 5.0, 2.0};
  int bitline_transistors = 0;

  std::string library_path;
  std::string include_path = "primitives.sp";

  std::string out_dir;
};

Bits parse_bits(const std::string& text);
std::string format_bits(const Bits& bits);

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

/// Requires variant, rows and cols, and checks every operand width against
/// the geometry.
void require_array(const RunConfig& config);

}  // namespace limsim::tools

#endif  // LIMSIM_TOOLS_RUN_CONFIG_HPP
