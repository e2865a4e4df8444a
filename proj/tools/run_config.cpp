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

#include "run_config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace limsim::tools {
namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& known_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"array", {"variant", "rows", "cols", "contents"}},
      {"sim", {"seed", "t_clk_ns", "vdd", "sa_delay_ns"}},
      {"maxmin", {"mode", "encoding"}},
      {"estimate", {"charge", "leak", "gate", "load", "bitline_transistors"}},
      {"netlist", {"library", "include"}},
      {"output", {"dir"}},
  };
  return keys;
}

std::string where(const std::string& section, const std::string& key) {
  return "[" + section + "] " + key;
}

template <typename T>
T parse_integer(const std::string& text, const std::string& ctx) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ConfigError(ctx + ": expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

double parse_positive(const std::string& text, const std::string& ctx) {
  double value = 0.0;
  std::istringstream in(text);
  in >> value;
  if (!in || !in.eof() || !std::isfinite(value) || value <= 0.0) {
    throw ConfigError(ctx + ": expected a positive number, got '" + text + "'");
  }
  return value;
}

ScriptStep parse_step(const std::string& label, const std::string& text) {
  const std::string ctx = where("script", label);
  std::istringstream in(text);
  std::string verb;
  std::vector<std::string> args;
  in >> verb;
  for (std::string a; in >> a;) args.push_back(a);

  ScriptStep step;
  step.label = label;
  auto expect = [&](std::size_t n) {
    if (args.size() != n) {
      throw ConfigError(ctx + ": '" + verb + "' takes " + std::to_string(n) +
                        " operand(s)");
    }
  };
  if (verb == "write") {
    expect(2);
    step.op = LIM_OP_WRITE;
    step.row = parse_integer<std::uint32_t>(args[0], ctx);
    step.bits = parse_bits(args[1]);
  } else if (verb == "read") {
    expect(1);
    step.op = LIM_OP_READ;
    step.row = parse_integer<std::uint32_t>(args[0], ctx);
  } else if (verb == "search") {
    expect(1);
    step.op = LIM_OP_SEARCH;
    step.bits = parse_bits(args[0]);
  } else if (verb == "and") {
    expect(1);
    step.op = LIM_OP_AND;
    step.bits = parse_bits(args[0]);
  } else {
    throw ConfigError(ctx + ": unknown operation '" + verb + "'");
  }
  return step;
}

void apply(RunConfig& cfg, const std::string& section, const std::string& key,
           const std::string& value) {
  const std::string ctx = where(section, key);
  if (section == "array") {
    if (key == "variant") {
      lim_variant v;
      if (lim_variant_parse(value.c_str(), &v) != LIM_OK) {
        throw ConfigError(ctx + ": unknown variant '" + value + "'");
      }
      cfg.variant = v;
    } else if (key == "rows") {
      cfg.rows = parse_integer<std::uint32_t>(value, ctx);
    } else if (key == "cols") {
      cfg.cols = parse_integer<std::uint32_t>(value, ctx);
    } else if (key == "contents") {
      if (value == "zero") {
        cfg.contents = Contents::kZero;
      } else if (value == "random") {
        cfg.contents = Contents::kRandom;
      } else {
        throw ConfigError(ctx + ": expected zero or random");
      }
    }
  } else if (section == "sim") {
    if (key == "seed") cfg.seed = parse_integer<std::uint64_t>(value, ctx);
    if (key == "t_clk_ns") cfg.t_clk_ns = parse_positive(value, ctx);
    if (key == "vdd") cfg.vdd = parse_positive(value, ctx);
    if (key == "sa_delay_ns") cfg.sa_delay_ns = parse_positive(value, ctx);
  } else if (section == "maxmin") {
    if (key == "mode") {
      if (value == "max") {
        cfg.mode = LIM_MAX;
      } else if (value == "min") {
        cfg.mode = LIM_MIN;
      } else {
        throw ConfigError(ctx + ": expected max or min");
      }
    } else {
      if (value == "unsigned") {
        cfg.encoding = LIM_UNSIGNED;
      } else if (value == "twos_complement") {
        cfg.encoding = LIM_TWOS_COMPLEMENT;
      } else {
        throw ConfigError(ctx + ": expected unsigned or twos_complement");
      }
    }
  } else if (section == "estimate") {
    if (key == "bitline_transistors") {
      cfg.bitline_transistors = parse_integer<int>(value, ctx);
      if (cfg.bitline_transistors <= 0) throw ConfigError(ctx + ": must be positive");
    } else {
      const double k = parse_positive(value, ctx);
      if (key == "charge") cfg.coefficients.charge = k;
      if (key == "leak") cfg.coefficients.leak = k;
      if (key == "gate") cfg.coefficients.gate = k;
      if (key == "load") cfg.coefficients.load = k;
    }
  } else if (section == "netlist") {
    if (key == "library") cfg.library_path = value;
    if (key == "include") cfg.include_path = value;
  } else if (section == "output") {
    cfg.out_dir = value;
  }
}

}  // namespace

Bits parse_bits(const std::string& text) {
  if (text.empty()) throw ConfigError("empty bit string");
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ConfigError("bit string '" + text + "' may only hold 0 and 1");
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return bits;
}

std::string format_bits(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

RunConfig parse_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("line " + std::to_string(e.line()) + ": " + e.message());
  }

  RunConfig cfg;
  for (const auto& [section, body] : tree) {
    if (!body.data().empty()) {
      throw ConfigError("key '" + section + "' outside of any section");
    }
    if (section == "script") {
      for (const auto& [label, v] : body) {
        cfg.script.push_back(parse_step(label, v.data()));
      }
      continue;
    }
    if (section == "contents") {
      for (const auto& [row, v] : body) {
        const auto r = parse_integer<std::uint32_t>(row, where(section, row));
        try {
          cfg.explicit_rows[r] = parse_bits(v.data());
        } catch (const ConfigError& e) {
          throw ConfigError(where(section, row) + ": " + e.what());
        }
      }
      continue;
    }
    const auto known = known_keys().find(section);
    if (known == known_keys().end()) {
      throw ConfigError("unknown section [" + section + "]");
    }
    for (const auto& [key, v] : body) {
      if (!known->second.count(key)) {
        throw ConfigError("unknown key " + where(section, key));
      }
      apply(cfg, section, key, v.data());
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

void require_array(const RunConfig& cfg) {
  if (!cfg.variant) throw ConfigError("[array] variant is required");
  if (cfg.rows == 0) throw ConfigError("[array] rows must be positive");
  if (cfg.cols == 0) throw ConfigError("[array] cols must be positive");
  for (const auto& [row, bits] : cfg.explicit_rows) {
    if (row >= cfg.rows) {
      throw ConfigError("[contents] row " + std::to_string(row) + " out of range");
    }
    if (bits.size() != cfg.cols) {
      throw ConfigError("[contents] row " + std::to_string(row) + " has " +
                        std::to_string(bits.size()) + " bits, array has " +
                        std::to_string(cfg.cols) + " columns");
    }
  }
  for (const auto& step : cfg.script) {
    if ((step.op == LIM_OP_READ || step.op == LIM_OP_WRITE) && step.row >= cfg.rows) {
      throw ConfigError(where("script", step.label) + ": row out of range");
    }
    if (step.op != LIM_OP_READ && step.bits.size() != cfg.cols) {
      throw ConfigError(where("script", step.label) + ": operand has " +
                        std::to_string(step.bits.size()) + " bits, array has " +
                        std::to_string(cfg.cols) + " columns");
    }
  }
}

}  // namespace limsim::tools
