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

#include "limsim/cost_model.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace limsim::cost {

namespace {

using V = CellVariant;
using Op = OperationKind;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

// --- CalibrationTable --------------------------------------------------------

CalibrationTable CalibrationTable::seeded() {
  CalibrationTable t;
  const std::size_t n = kCalibratedSize;
  t.set(V::kSram6T, Op::kWrite, n, 134);
  t.set(V::kSram6T, Op::kRead, n, 118);
  t.set(V::kCamNor, Op::kWrite, n, 275);
  t.set(V::kCamNor, Op::kRead, n, 230);
  t.set(V::kCamNor, Op::kSearch, n, 236);
  t.set(V::kLimSpecial, Op::kWrite, n, 309);
  t.set(V::kLimSpecial, Op::kRead, n, 260);
  t.set(V::kLimSpecial, Op::kSearch, n, 717);
  t.set(V::kLimSpecial, Op::kAnd, n, 98);
  t.set(V::kLimDynamic, Op::kWrite, n, 596);
  t.set(V::kLimDynamic, Op::kRead, n, 451);
  t.set(V::kLimDynamic, Op::kSearch, n, 1152);
  t.set(V::kLimDynamic, Op::kAnd, n, 2008);
  t.set(V::kLimStatic, Op::kWrite, n, 961);
  t.set(V::kLimStatic, Op::kRead, n, 641);
  t.set(V::kLimStatic, Op::kSearch, n, 601);
  t.set(V::kLimStatic, Op::kAnd, n, 76);
  return t;
}

CalibrationTable CalibrationTable::parse(std::string_view text) {
  CalibrationTable t;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const std::string line =
        trim(text.substr(start, end == std::string_view::npos ? end : end - start));
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, ',');
    if (fields.size() != 4) {
      throw Error(ErrorCode::kInvalidConfig,
                  "calibration line " + std::to_string(line_no) +
                      ": expected memory,op,size,edp_pj_ps");
    }
    if (fields[0] == "memory" && fields[1] == "op") continue;
    const auto v = parse_variant(fields[0]);
    const auto op = parse_operation(fields[1]);
    if (!v || !op) {
      throw Error(ErrorCode::kInvalidConfig,
                  "calibration line " + std::to_string(line_no) +
                      ": unknown memory or operation");
    }
    std::size_t size = 0;
    double edp = 0.0;
    try {
      std::size_t used = 0;
      const unsigned long long s = std::stoull(fields[2], &used);
      if (used != fields[2].size()) throw std::invalid_argument("size");
      size = static_cast<std::size_t>(s);
      edp = std::stod(fields[3], &used);
      if (used != fields[3].size()) throw std::invalid_argument("edp");
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kInvalidConfig,
                  "calibration line " + std::to_string(line_no) +
                      ": malformed number");
    }
    t.set(*v, *op, size, edp);
  }
  return t;
}

CalibrationTable CalibrationTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string CalibrationTable::to_text() const {
  std::ostringstream out;
  out << "memory,op,size,edp_pj_ps\n";
  for (const auto& [key, edp] : entries_) {
    const auto& [v, op, size] = key;
    out << id(v) << ',' << id(op) << ',' << size << ',' << fixed2(edp) << '\n';
  }
  return out.str();
}

void CalibrationTable::set(CellVariant v, OperationKind op, std::size_t size,
                           double edp) {
  require_support(v, op);
  if (!(edp > 0.0) || !std::isfinite(edp)) {
    throw Error(ErrorCode::kNonPositiveEdp, "energy-delay product must be > 0");
  }
  if (size == 0) {
    throw Error(ErrorCode::kInvalidWidth, "calibration size must be >= 1");
  }
  entries_[{v, op, size}] = edp;
}

std::optional<double> CalibrationTable::find(CellVariant v, OperationKind op,
                                             std::size_t size) const {
  const auto it = entries_.find({v, op, size});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool CalibrationTable::calibrated_at(std::size_t size) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) {
    return std::get<2>(e.first) == size;
  });
}

double CalibrationTable::lookup(CellVariant v, OperationKind op,
                                std::size_t size) const {
  require_support(v, op);
  if (auto hit = find(v, op, size)) return *hit;
  if (!hook_) {
    throw Error(ErrorCode::kUncalibratedPoint,
                "no calibration for " + std::string(id(v)) + "/" +
                    std::string(id(op)) + " at size " + std::to_string(size));
  }
  const double edp = hook_(v, op, size);
  if (!(edp > 0.0) || !std::isfinite(edp)) {
    throw Error(ErrorCode::kNonPositiveEdp, "scaling hook returned EDP <= 0");
  }
  for (const auto& [key, calibrated] : entries_) {
    const auto& [kv, kop, ksize] = key;
    if (kv != v || kop != op) continue;
    if ((ksize < size && calibrated > edp) || (ksize > size && calibrated < edp)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "scaling hook is not monotone in size for " +
                      std::string(id(v)) + "/" + std::string(id(op)));
    }
  }
  return edp;
}

double edp_lookup(const CalibrationTable& table, CellVariant v,
                  OperationKind op, std::size_t size) {
  return table.lookup(v, op, size);
}

double relative_variation(double edp_row, double edp_col) {
  if (!(edp_row > 0.0) || !(edp_col > 0.0)) {
    throw Error(ErrorCode::kNonPositiveEdp,
                "relative variation needs positive energy-delay products");
  }
  const double diff = edp_row - edp_col;
  return 100.0 * diff / (edp_row >= edp_col ? edp_col : edp_row);
}

// --- Comparison tables -------------------------------------------------------

OperationKind row_operation(ComparisonKind kind) {
  switch (kind) {
    case ComparisonKind::kRead: return Op::kRead;
    case ComparisonKind::kWrite:
    case ComparisonKind::kWriteVsRead: return Op::kWrite;
    case ComparisonKind::kSearch:
    case ComparisonKind::kSearchVsWrite:
    case ComparisonKind::kSearchVsRead: return Op::kSearch;
    case ComparisonKind::kAnd:
    case ComparisonKind::kAndVsSearch:
    case ComparisonKind::kAndVsWrite:
    case ComparisonKind::kAndVsRead: return Op::kAnd;
  }
  return Op::kRead;
}

OperationKind column_operation(ComparisonKind kind) {
  switch (kind) {
    case ComparisonKind::kRead:
    case ComparisonKind::kWriteVsRead:
    case ComparisonKind::kSearchVsRead:
    case ComparisonKind::kAndVsRead: return Op::kRead;
    case ComparisonKind::kWrite:
    case ComparisonKind::kSearchVsWrite:
    case ComparisonKind::kAndVsWrite: return Op::kWrite;
    case ComparisonKind::kSearch:
    case ComparisonKind::kAndVsSearch: return Op::kSearch;
    case ComparisonKind::kAnd: return Op::kAnd;
  }
  return Op::kRead;
}

std::string file_stem(ComparisonKind kind) {
  return std::string(id(row_operation(kind))) + "_vs_" +
         std::string(id(column_operation(kind)));
}

std::optional<ComparisonKind> parse_comparison(std::string_view stem) {
  for (ComparisonKind k : kAllComparisons) {
    if (file_stem(k) == stem) return k;
  }
  return std::nullopt;
}

namespace {

// Memory order of the published tables; the write/read diagonal table lists
// the static cell before the dynamic one.
std::vector<CellVariant> memory_order(ComparisonKind kind, OperationKind op) {
  std::vector<CellVariant> order;
  if (kind == ComparisonKind::kWriteVsRead) {
    order = {V::kSram6T, V::kCamNor, V::kLimSpecial, V::kLimStatic,
             V::kLimDynamic};
  } else {
    order.assign(std::begin(kAllVariants), std::end(kAllVariants));
  }
  std::erase_if(order, [op](CellVariant v) { return !supports(v, op); });
  return order;
}

int rank(CellVariant v) {
  for (int i = 0; i < 5; ++i) {
    if (kAllVariants[i] == v) return i;
  }
  return 5;
}

bool cell_present(ComparisonKind kind, CellVariant row, CellVariant col) {
  if (kind == ComparisonKind::kWriteVsRead) return row == col;
  if (row_operation(kind) == column_operation(kind)) {
    return rank(col) < rank(row);
  }
  return rank(col) <= rank(row);
}

}  // namespace

std::optional<double> ComparisonTable::at(CellVariant row,
                                          CellVariant col) const {
  for (std::size_t r = 0; r < row_memories.size(); ++r) {
    if (row_memories[r] != row) continue;
    for (std::size_t c = 0; c < column_memories.size(); ++c) {
      if (column_memories[c] == col) return cells[r][c];
    }
  }
  return std::nullopt;
}

ComparisonTable comparison_table(const CalibrationTable& table,
                                 ComparisonKind kind, std::size_t size) {
  ComparisonTable out{kind, {}, {}, {}};
  const Op row_op = row_operation(kind);
  const Op col_op = column_operation(kind);
  out.row_memories = memory_order(kind, row_op);
  out.column_memories = memory_order(kind, col_op);
  for (CellVariant r : out.row_memories) {
    auto& row = out.cells.emplace_back();
    for (CellVariant c : out.column_memories) {
      if (!cell_present(kind, r, c)) {
        row.emplace_back();
        continue;
      }
      row.emplace_back(relative_variation(table.lookup(r, row_op, size),
                                          table.lookup(c, col_op, size)));
    }
  }
  return out;
}

std::string format_percent(double percent) {
  // Avoid "-0.00" for values that round to zero.
  if (std::fabs(percent) < 0.005) percent = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.2f", percent);
  return buf;
}

std::string to_csv(const ComparisonTable& table) {
  std::ostringstream out;
  out << id(row_operation(table.kind)) << '/' << id(column_operation(table.kind));
  for (CellVariant c : table.column_memories) out << ',' << csv_field(label(c));
  out << '\n';
  for (std::size_t r = 0; r < table.row_memories.size(); ++r) {
    out << csv_field(label(table.row_memories[r]));
    for (const auto& cell : table.cells[r]) {
      out << ',';
      if (cell) out << format_percent(*cell);
    }
    out << '\n';
  }
  return out.str();
}

std::string edp_csv(const CalibrationTable& table, std::size_t size) {
  std::ostringstream out;
  out << "memory,write,read,search,and\n";
  for (CellVariant v : kAllVariants) {
    out << csv_field(label(v));
    for (Op op : kAllOperations) {
      out << ',';
      if (supports(v, op)) out << fixed2(table.lookup(v, op, size));
    }
    out << '\n';
  }
  return out.str();
}

// --- Reference audit ---------------------------------------------------------

double ReferenceCell::value() const { return std::stod(printed); }

int ReferenceCell::decimals() const {
  const auto dot = printed.find('.');
  return dot == std::string::npos ? 0
                                  : static_cast<int>(printed.size() - dot - 1);
}

const std::vector<ReferenceCell>& reference_cells() {
  using K = ComparisonKind;
  const V S = V::kSram6T, C = V::kCamNor, P = V::kLimSpecial,
          D = V::kLimDynamic, T = V::kLimStatic;
  // Printed text as typeset. One cell typeset as "--6.65" is stored as
  // "-6.65"; "249.45" and "+1398"/"-1164" keep their printed precision.
  static const std::vector<ReferenceCell> cells = {
      {K::kRead, C, S, "+94.91"},    {K::kRead, P, S, "+120.34"},
      {K::kRead, P, C, "+13.04"},    {K::kRead, D, S, "+282.2"},
      {K::kRead, D, C, "+96.08"},    {K::kRead, D, P, "+73.46"},
      {K::kRead, T, S, "+443.22"},   {K::kRead, T, C, "+178.69"},
      {K::kRead, T, P, "+146.54"},   {K::kRead, T, D, "+42.13"},

      {K::kWrite, C, S, "+105"},     {K::kWrite, P, S, "+130.6"},
      {K::kWrite, P, C, "+12.36"},   {K::kWrite, D, S, "+344.78"},
      {K::kWrite, D, C, "+116.72"},  {K::kWrite, D, P, "+92.88"},
      {K::kWrite, T, S, "+617"},     {K::kWrite, T, C, "249.45"},
      {K::kWrite, T, P, "+211"},     {K::kWrite, T, D, "+61.24"},

      {K::kSearch, P, C, "+203.81"}, {K::kSearch, D, C, "+388.13"},
      {K::kSearch, D, P, "+60.67"},  {K::kSearch, T, C, "+154.66"},
      {K::kSearch, T, P, "-19.30"},  {K::kSearch, T, D, "-91.68"},

      {K::kAnd, D, P, "+1948.98"},   {K::kAnd, T, P, "-28.95"},
      {K::kAnd, T, D, "-2542.1"},

      {K::kWriteVsRead, S, S, "+13.56"}, {K::kWriteVsRead, C, C, "+19.56"},
      {K::kWriteVsRead, P, P, "+18.85"}, {K::kWriteVsRead, T, T, "+49.92"},
      {K::kWriteVsRead, D, D, "+32.15"},

      {K::kSearchVsWrite, C, S, "+76.12"},  {K::kSearchVsWrite, C, C, "-16.52"},
      {K::kSearchVsWrite, P, S, "+435.07"}, {K::kSearchVsWrite, P, C, "+160.72"},
      {K::kSearchVsWrite, P, P, "+132.04"}, {K::kSearchVsWrite, D, S, "+759.7"},
      {K::kSearchVsWrite, D, C, "+318.91"}, {K::kSearchVsWrite, D, P, "+272.81"},
      {K::kSearchVsWrite, D, D, "+93.29"},  {K::kSearchVsWrite, T, S, "+348.51"},
      {K::kSearchVsWrite, T, C, "+118.54"}, {K::kSearchVsWrite, T, P, "+94.5"},
      {K::kSearchVsWrite, T, D, "-91.68"},  {K::kSearchVsWrite, T, T, "-59.9"},

      {K::kSearchVsRead, C, S, "+100"},     {K::kSearchVsRead, C, C, "+2.61"},
      {K::kSearchVsRead, P, S, "+507.63"},  {K::kSearchVsRead, P, C, "+211.74"},
      {K::kSearchVsRead, P, P, "+175.77"},  {K::kSearchVsRead, D, S, "+876.27"},
      {K::kSearchVsRead, D, C, "+400.86"},  {K::kSearchVsRead, D, P, "+343.08"},
      {K::kSearchVsRead, D, D, "+115.43"},  {K::kSearchVsRead, T, S, "+409.32"},
      {K::kSearchVsRead, T, C, "+161.3"},   {K::kSearchVsRead, T, P, "+131.15"},
      {K::kSearchVsRead, T, D, "+33.26"},   {K::kSearchVsRead, T, T, "-6.65"},

      {K::kAndVsSearch, P, C, "-140.81"},   {K::kAndVsSearch, P, P, "-631.63"},
      {K::kAndVsSearch, D, C, "+750.85"},   {K::kAndVsSearch, D, P, "+180.05"},
      {K::kAndVsSearch, D, D, "+74.3"},     {K::kAndVsSearch, T, C, "-210.52"},
      {K::kAndVsSearch, T, P, "-843.42"},   {K::kAndVsSearch, T, D, "-1415.79"},
      {K::kAndVsSearch, T, T, "-690.79"},

      {K::kAndVsWrite, P, S, "-36.7"},      {K::kAndVsWrite, P, C, "-180.61"},
      {K::kAndVsWrite, P, P, "-215"},       {K::kAndVsWrite, D, S, "+1398"},
      {K::kAndVsWrite, D, C, "+630.2"},     {K::kAndVsWrite, D, P, "+549.84"},
      {K::kAndVsWrite, D, D, "+236.91"},    {K::kAndVsWrite, T, S, "-76.31"},
      {K::kAndVsWrite, T, C, "-261.84"},    {K::kAndVsWrite, T, P, "-306.57"},
      {K::kAndVsWrite, T, D, "-684.21"},    {K::kAndVsWrite, T, T, "-1164"},

      {K::kAndVsRead, P, S, "-20.41"},      {K::kAndVsRead, P, C, "-134.69"},
      {K::kAndVsRead, P, P, "-165.31"},     {K::kAndVsRead, D, S, "+1601.7"},
      {K::kAndVsRead, D, C, "+773.04"},     {K::kAndVsRead, D, P, "+672.31"},
      {K::kAndVsRead, D, D, "+345.23"},     {K::kAndVsRead, T, S, "-55.26"},
      {K::kAndVsRead, T, C, "-202.63"},     {K::kAndVsRead, T, P, "-242.1"},
      {K::kAndVsRead, T, D, "-1164.47"},    {K::kAndVsRead, T, T, "-743.2"},
  };
  return cells;
}

std::string_view to_string(AuditStatus status) {
  switch (status) {
    case AuditStatus::kMatch: return "match";
    case AuditStatus::kTruncatedPrint: return "truncated_print";
    case AuditStatus::kDuplicatedCell: return "duplicated_cell";
    case AuditStatus::kDigitTranscription: return "digit_transcription";
    case AuditStatus::kUnexplained: return "unexplained";
  }
  return "?";
}

std::size_t AuditReport::count(AuditStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(),
                    [status](const AuditEntry& e) { return e.status == status; }));
}

namespace {

std::string cell_name(const ReferenceCell& c) {
  return file_stem(c.kind) + " (" + std::string(label(c.row)) + ", " +
         std::string(label(c.col)) + ")";
}

// Both magnitudes rendered at the printed precision differ in exactly one
// character position.
bool one_digit_apart(double regenerated, const ReferenceCell& ref) {
  if ((regenerated < 0) != (ref.value() < 0)) return false;
  char a[64], b[64];
  std::snprintf(a, sizeof a, "%.*f", ref.decimals(), std::fabs(regenerated));
  std::snprintf(b, sizeof b, "%.*f", ref.decimals(), std::fabs(ref.value()));
  const std::string sa(a), sb(b);
  if (sa.size() != sb.size()) return false;
  std::size_t diffs = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) diffs += sa[i] != sb[i];
  return diffs == 1;
}

}  // namespace

AuditReport audit(const CalibrationTable& table, std::size_t size,
                  double tolerance_pp) {
  AuditReport report;
  report.tolerance_pp = tolerance_pp;
  const auto& refs = reference_cells();

  std::vector<double> regenerated;
  regenerated.reserve(refs.size());
  for (const auto& ref : refs) {
    regenerated.push_back(relative_variation(
        table.lookup(ref.row, row_operation(ref.kind), size),
        table.lookup(ref.col, column_operation(ref.kind), size)));
  }

  for (std::size_t i = 0; i < refs.size(); ++i) {
    const auto& ref = refs[i];
    AuditEntry e;
    e.reference = ref;
    e.regenerated = regenerated[i];
    e.delta = regenerated[i] - ref.value();
    const double half_ulp = 0.5 * std::pow(10.0, -ref.decimals()) + 1e-9;

    if (std::fabs(e.delta) <= tolerance_pp) {
      e.status = AuditStatus::kMatch;
    } else if (ref.decimals() == 0 && std::fabs(e.delta) < 1.0 &&
               std::trunc(regenerated[i]) == ref.value()) {
      e.status = AuditStatus::kTruncatedPrint;
      e.explanation = "printed as the integer part of " + fixed2(regenerated[i]);
    } else {
      for (std::size_t j = 0; j < refs.size(); ++j) {
        if (j != i && std::fabs(regenerated[j] - ref.value()) <= half_ulp) {
          e.status = AuditStatus::kDuplicatedCell;
          e.explanation = "printed value is the regenerated value of " +
                          cell_name(refs[j]) + "; expected " +
                          format_percent(regenerated[i]);
          break;
        }
      }
      if (e.status == AuditStatus::kUnexplained && one_digit_apart(regenerated[i], ref)) {
        e.status = AuditStatus::kDigitTranscription;
        e.explanation = "one digit differs from regenerated " +
                        format_percent(regenerated[i]);
      }
      if (e.status == AuditStatus::kUnexplained) {
        e.explanation = "no rule reproduces the printed value";
      }
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::string to_csv(const AuditReport& report) {
  std::ostringstream out;
  out << "table,row_memory,column_memory,printed,regenerated,delta,status,"
         "explanation\n";
  for (const auto& e : report.entries) {
    out << file_stem(e.reference.kind) << ',' << csv_field(label(e.reference.row))
        << ',' << csv_field(label(e.reference.col)) << ',' << e.reference.printed
        << ',' << format_percent(e.regenerated) << ',' << format_percent(e.delta)
        << ',' << to_string(e.status) << ',' << csv_field(e.explanation) << '\n';
  }
  return out.str();
}

std::string summary_text(const AuditReport& report) {
  std::ostringstream out;
  out << "cells: " << report.entries.size() << '\n'
      << "tolerance_pp: " << fixed2(report.tolerance_pp) << '\n';
  for (AuditStatus s :
       {AuditStatus::kMatch, AuditStatus::kTruncatedPrint,
        AuditStatus::kDuplicatedCell, AuditStatus::kDigitTranscription,
        AuditStatus::kUnexplained}) {
    out << to_string(s) << ": " << report.count(s) << '\n';
  }
  for (const auto& e : report.entries) {
    if (e.status == AuditStatus::kMatch) continue;
    out << "  " << cell_name(e.reference) << " printed " << e.reference.printed
        << ": " << to_string(e.status) << " - " << e.explanation << '\n';
  }
  out << (report.unexplained() == 0 ? "PASS" : "FAIL") << '\n';
  return out.str();
}

// --- Structural estimate -----------------------------------------------------

StructuralEstimate structural_estimate(const SensingEvent& event,
                                       const cell::BitlineLoad& loads,
                                       const SimulationParams& params,
                                       const EstimateCoefficients& k) {
  params.validate();
  if (loads.transistors_on_bitlines <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "bitline load must be a positive transistor count");
  }
  if (!(k.charge > 0 && k.leak > 0 && k.gate > 0 && k.load > 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "estimate coefficients must be positive");
  }
  StructuralEstimate s;
  s.charge_events = event.lines_charged;
  s.leak_window_units = event.dummy_window_units;
  s.lines_discharged = event.lines_discharged;
  s.gate_commutations = event.gate_commutations;
  s.bitline_load_units = static_cast<std::uint64_t>(loads.transistors_on_bitlines) *
                         event.bitline_pairs * event.cells_per_bitline;
  const double raw =
      k.charge * static_cast<double>(s.charge_events) +
      k.leak * static_cast<double>(s.leak_window_units) *
          static_cast<double>(s.lines_discharged) +
      k.gate * static_cast<double>(s.gate_commutations) +
      k.load * static_cast<double>(s.bitline_load_units);
  s.estimate = raw * params.vdd * params.vdd;
  return s;
}

}  // namespace limsim::cost
