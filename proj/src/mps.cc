// Copyright 2026 The fohorse Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fohorse/mps.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "fohorse/status.h"

namespace fohorse {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Bound values at or beyond this magnitude mean "no bound".
constexpr double kInfiniteBound = 1e30;

enum class Section { kNone, kName, kObjSense, kRows, kColumns, kRhs, kRanges,
                     kBounds, kEnd };

struct RowInfo {
  std::string name;
  char type;  // 'E', 'G' or 'L'
  std::vector<std::pair<Index, double>> entries;  // (column, value)
  double rhs = 0.0;
  std::optional<double> range;
};

struct ColumnInfo {
  std::string name;
  double objective = 0.0;
  double lower = 0.0;
  double upper = kInf;
  bool lower_set = false;
  bool integer = false;
};

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Fixed-format fields occupy columns 2-3, 5-12, 15-22, 25-36, 40-47 and
// 50-61. Missing fields come back empty.
std::vector<std::string_view> SplitFixed(std::string_view line) {
  static constexpr std::pair<size_t, size_t> kFields[] = {
      {1, 2}, {4, 8}, {14, 8}, {24, 12}, {39, 8}, {49, 12}};
  std::vector<std::string_view> fields;
  for (auto [start, length] : kFields) {
    fields.push_back(start < line.size() ? Trim(line.substr(start, length))
                                         : std::string_view{});
  }
  return fields;
}

class Parser {
 public:
  explicit Parser(MpsDialect dialect) : dialect_(dialect) {}

  MpsParseResult Parse(std::string_view text);

 private:
  [[noreturn]] void Fail(ErrorCode code, const std::string& message) const {
    throw Error(code, "line " + std::to_string(line_number_) + ": " + message,
                line_number_);
  }

  double Number(std::string_view token) const;
  bool IsNumber(std::string_view token) const;
  Index RowIndex(std::string_view name) const;  // -1 for the objective
  Index ColumnIndex(std::string_view name) const;

  void Header(std::string_view line);
  void Data(std::string_view line);
  void RowLine(const std::vector<std::string_view>& f);
  void ColumnLine(const std::vector<std::string_view>& f);
  void RhsOrRangeLine(const std::vector<std::string_view>& f, bool is_range);
  void BoundLine(const std::vector<std::string_view>& f);
  void ObjSense(std::string_view token);
  MpsParseResult Assemble();

  // Field list in the free-format shape: fixed-format lines drop blank set
  // names so that both dialects share one interpretation.
  std::vector<std::string_view> Fields(std::string_view line) const;

  MpsDialect dialect_;
  Index line_number_ = 0;
  Section section_ = Section::kNone;
  bool seen_rows_ = false;
  bool seen_columns_ = false;

  std::string name_;
  bool maximize_ = false;
  std::optional<std::string> objective_row_;
  double objective_rhs_ = 0.0;
  std::vector<RowInfo> rows_;
  std::unordered_map<std::string, Index> row_index_;
  std::vector<ColumnInfo> columns_;
  std::unordered_map<std::string, Index> column_index_;
  std::unordered_set<Index> entry_rows_of_current_column_;
  bool in_integer_block_ = false;
  std::optional<std::string> rhs_set_;
  std::optional<std::string> range_set_;
  std::optional<std::string> bound_set_;
  std::vector<std::string> warnings_;
  bool ignored_set_warning_ = false;
};

double Parser::Number(std::string_view token) const {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || std::isnan(value)) {
    Fail(ErrorCode::kSyntaxError,
         "expected a number, got '" + std::string(token) + "'");
  }
  return value;
}

bool Parser::IsNumber(std::string_view token) const {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

Index Parser::RowIndex(std::string_view name) const {
  if (objective_row_ && name == *objective_row_) return -1;
  auto it = row_index_.find(std::string(name));
  if (it == row_index_.end()) {
    Fail(ErrorCode::kUnknownRowReference,
         "unknown row '" + std::string(name) + "'");
  }
  return it->second;
}

Index Parser::ColumnIndex(std::string_view name) const {
  auto it = column_index_.find(std::string(name));
  if (it == column_index_.end()) {
    Fail(ErrorCode::kSyntaxError, "unknown column '" + std::string(name) + "'");
  }
  return it->second;
}

std::vector<std::string_view> Parser::Fields(std::string_view line) const {
  if (dialect_ == MpsDialect::kFree) return SplitWhitespace(line);
  std::vector<std::string_view> fixed = SplitFixed(line);
  std::vector<std::string_view> out;
  switch (section_) {
    case Section::kRows:
      // type, name
      for (int i : {0, 1}) {
        if (!fixed[i].empty()) out.push_back(fixed[i]);
      }
      break;
    case Section::kColumns:
    case Section::kRhs:
    case Section::kRanges:
      for (int i = 1; i < 6; ++i) {
        if (!fixed[i].empty()) out.push_back(fixed[i]);
      }
      break;
    case Section::kBounds:
      for (int i = 0; i < 4; ++i) {
        if (!fixed[i].empty()) out.push_back(fixed[i]);
      }
      break;
    default:
      out = SplitWhitespace(line);
      break;
  }
  return out;
}

void Parser::ObjSense(std::string_view token) {
  if (token == "MAX" || token == "MAXIMIZE") {
    maximize_ = true;
  } else if (token == "MIN" || token == "MINIMIZE") {
    maximize_ = false;
  } else {
    Fail(ErrorCode::kSyntaxError,
         "unknown objective sense '" + std::string(token) + "'");
  }
}

void Parser::Header(std::string_view line) {
  const auto tokens = SplitWhitespace(line);
  const std::string_view key = tokens.front();
  if (section_ == Section::kEnd) {
    Fail(ErrorCode::kSyntaxError, "content after ENDATA");
  }
  if (key == "NAME") {
    const size_t pos = line.find("NAME") + 4;
    name_ = std::string(Trim(line.substr(pos)));
    section_ = Section::kName;
  } else if (key == "OBJSENSE") {
    section_ = Section::kObjSense;
    if (tokens.size() >= 2) ObjSense(tokens[1]);
  } else if (key == "ROWS") {
    section_ = Section::kRows;
    seen_rows_ = true;
  } else if (key == "COLUMNS") {
    if (!seen_rows_) Fail(ErrorCode::kSyntaxError, "COLUMNS before ROWS");
    section_ = Section::kColumns;
    seen_columns_ = true;
  } else if (key == "RHS" || key == "RANGES" || key == "BOUNDS") {
    if (!seen_columns_) {
      Fail(ErrorCode::kSyntaxError, std::string(key) + " before COLUMNS");
    }
    section_ = key == "RHS"      ? Section::kRhs
               : key == "RANGES" ? Section::kRanges
                                 : Section::kBounds;
  } else if (key == "ENDATA") {
    section_ = Section::kEnd;
  } else {
    Fail(ErrorCode::kSyntaxError, "unknown section '" + std::string(key) + "'");
  }
  if (section_ != Section::kName && section_ != Section::kObjSense &&
      tokens.size() > 1) {
    Fail(ErrorCode::kSyntaxError,
         "unexpected token '" + std::string(tokens[1]) + "' after " +
             std::string(key));
  }
}

void Parser::RowLine(const std::vector<std::string_view>& f) {
  if (f.size() != 2) Fail(ErrorCode::kSyntaxError, "ROWS lines need a type and a name");
  const std::string_view type = f[0];
  const std::string name(f[1]);
  if (row_index_.count(name) || (objective_row_ && *objective_row_ == name)) {
    Fail(ErrorCode::kDuplicateRow, "duplicate row '" + name + "'");
  }
  if (type == "N") {
    if (objective_row_) {
      Fail(ErrorCode::kMultipleObjectiveRows,
           "second objective row '" + name + "'");
    }
    objective_row_ = name;
  } else if (type == "E" || type == "G" || type == "L") {
    row_index_.emplace(name, static_cast<Index>(rows_.size()));
    rows_.push_back({name, type[0], {}, 0.0, std::nullopt});
  } else {
    Fail(ErrorCode::kSyntaxError, "unknown row type '" + std::string(type) + "'");
  }
}

void Parser::ColumnLine(const std::vector<std::string_view>& f) {
  if (f.size() >= 2 && f[1] == "'MARKER'") {
    std::string_view kind;
    for (size_t i = 2; i < f.size(); ++i) {
      if (f[i] == "'INTORG'" || f[i] == "'INTEND'") kind = f[i];
    }
    if (kind.empty()) Fail(ErrorCode::kSyntaxError, "malformed MARKER line");
    in_integer_block_ = kind == "'INTORG'";
    return;
  }
  if (f.size() != 3 && f.size() != 5) {
    Fail(ErrorCode::kSyntaxError,
         "COLUMNS lines need a column and one or two (row, value) pairs");
  }
  const std::string name(f[0]);
  Index col;
  if (!columns_.empty() && columns_.back().name == name) {
    col = static_cast<Index>(columns_.size()) - 1;
  } else {
    if (column_index_.count(name)) {
      Fail(ErrorCode::kDuplicateColumn, "column '" + name + "' is not contiguous");
    }
    col = static_cast<Index>(columns_.size());
    column_index_.emplace(name, col);
    columns_.push_back({name});
    entry_rows_of_current_column_.clear();
  }
  if (in_integer_block_) columns_.back().integer = true;
  for (size_t i = 1; i + 1 < f.size(); i += 2) {
    const Index row = RowIndex(f[i]);
    const double value = Number(f[i + 1]);
    if (!std::isfinite(value)) Fail(ErrorCode::kSyntaxError, "infinite coefficient");
    if (!entry_rows_of_current_column_.insert(row).second) {
      Fail(ErrorCode::kSyntaxError, "repeated entry for row '" +
                                        std::string(f[i]) + "' in column '" +
                                        name + "'");
    }
    if (row < 0) {
      columns_.back().objective = value;
    } else if (value != 0.0) {
      rows_[static_cast<size_t>(row)].entries.emplace_back(col, value);
    }
  }
}

void Parser::RhsOrRangeLine(const std::vector<std::string_view>& f,
                            bool is_range) {
  size_t first = 0;
  if (f.size() == 3 || f.size() == 5) {
    first = 1;
  } else if (f.size() != 2 && f.size() != 4) {
    Fail(ErrorCode::kSyntaxError, std::string(is_range ? "RANGES" : "RHS") +
                                      " lines need one or two (row, value) pairs");
  }
  std::optional<std::string>& active = is_range ? range_set_ : rhs_set_;
  const std::string set = first == 1 ? std::string(f[0]) : std::string();
  if (!active) active = set;
  if (*active != set) {
    if (!ignored_set_warning_) {
      warnings_.push_back("line " + std::to_string(line_number_) +
                          ": ignoring entries of secondary set '" + set + "'");
      ignored_set_warning_ = true;
    }
    return;
  }
  for (size_t i = first; i + 1 < f.size(); i += 2) {
    const Index row = RowIndex(f[i]);
    const double value = Number(f[i + 1]);
    if (!std::isfinite(value)) {
      Fail(ErrorCode::kSyntaxError, "infinite value in RHS or RANGES");
    }
    if (is_range) {
      if (row < 0) Fail(ErrorCode::kSyntaxError, "RANGES entry on the objective row");
      rows_[static_cast<size_t>(row)].range = value;
    } else if (row < 0) {
      objective_rhs_ = value;
    } else {
      rows_[static_cast<size_t>(row)].rhs = value;
    }
  }
}

void Parser::BoundLine(const std::vector<std::string_view>& f) {
  if (f.size() < 2 || f.size() > 4) Fail(ErrorCode::kSyntaxError, "malformed BOUNDS line");
  const std::string_view type = f[0];
  const bool needs_value = type == "LO" || type == "UP" || type == "FX" ||
                           type == "LI" || type == "UI";
  const bool no_value = type == "FR" || type == "MI" || type == "PL" ||
                        type == "BV";
  if (!needs_value && !no_value) {
    Fail(ErrorCode::kSyntaxError, "unknown bound type '" + std::string(type) + "'");
  }
  // Work out whether a set name is present.
  std::string_view set, column, value_token;
  if (needs_value) {
    if (f.size() == 3) {
      column = f[1];
      value_token = f[2];
    } else if (f.size() == 4) {
      set = f[1];
      column = f[2];
      value_token = f[3];
    } else {
      Fail(ErrorCode::kSyntaxError, "bound type " + std::string(type) + " needs a value");
    }
  } else if (f.size() == 2) {
    column = f[1];
  } else if (f.size() == 3) {
    if (column_index_.count(std::string(f[1])) && IsNumber(f[2])) {
      column = f[1];
      value_token = f[2];
    } else {
      set = f[1];
      column = f[2];
    }
  } else {
    set = f[1];
    column = f[2];
    value_token = f[3];
  }
  if (!bound_set_) bound_set_ = std::string(set);
  if (*bound_set_ != set) {
    if (!ignored_set_warning_) {
      warnings_.push_back("line " + std::to_string(line_number_) +
                          ": ignoring entries of secondary set '" +
                          std::string(set) + "'");
      ignored_set_warning_ = true;
    }
    return;
  }
  ColumnInfo& c = columns_[static_cast<size_t>(ColumnIndex(column))];
  double value = value_token.empty() ? 0.0 : Number(value_token);
  if (value >= kInfiniteBound) value = kInf;
  if (value <= -kInfiniteBound) value = -kInf;

  if (type == "LO" || type == "LI") {
    c.lower = value;
    c.lower_set = true;
  } else if (type == "UP" || type == "UI") {
    c.upper = value;
    if (value < 0.0 && !c.lower_set && c.lower == 0.0) {
      c.lower = -kInf;
      warnings_.push_back("line " + std::to_string(line_number_) +
                          ": negative upper bound on '" + c.name +
                          "' with default lower bound; lower bound set to -inf");
    }
  } else if (type == "FX") {
    c.lower = c.upper = value;
    c.lower_set = true;
  } else if (type == "FR") {
    c.lower = -kInf;
    c.upper = kInf;
    c.lower_set = true;
  } else if (type == "MI") {
    c.lower = -kInf;
    c.lower_set = true;
  } else if (type == "PL") {
    c.upper = kInf;
  } else {  // BV
    c.lower = 0.0;
    c.upper = 1.0;
    c.lower_set = true;
  }
  if (type == "BV" || type == "LI" || type == "UI") c.integer = true;
}

void Parser::Data(std::string_view line) {
  switch (section_) {
    case Section::kNone:
      Fail(ErrorCode::kSyntaxError, "data line before any section");
    case Section::kName:
      Fail(ErrorCode::kSyntaxError, "unexpected data after NAME");
    case Section::kObjSense: {
      const auto tokens = SplitWhitespace(line);
      if (tokens.size() != 1) Fail(ErrorCode::kSyntaxError, "malformed OBJSENSE");
      ObjSense(tokens[0]);
      break;
    }
    case Section::kRows:
      RowLine(Fields(line));
      break;
    case Section::kColumns:
      ColumnLine(Fields(line));
      break;
    case Section::kRhs:
      RhsOrRangeLine(Fields(line), false);
      break;
    case Section::kRanges:
      RhsOrRangeLine(Fields(line), true);
      break;
    case Section::kBounds:
      BoundLine(Fields(line));
      break;
    case Section::kEnd:
      Fail(ErrorCode::kSyntaxError, "content after ENDATA");
  }
}

MpsParseResult Parser::Parse(std::string_view text) {
  size_t pos = 0;
  while (pos <= text.size() && section_ != Section::kEnd) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number_;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty() || line.front() == '*') continue;
    if (line.front() != ' ' && line.front() != '\t') {
      Header(line);
    } else {
      Data(line);
    }
  }
  if (section_ != Section::kEnd) Fail(ErrorCode::kSyntaxError, "missing ENDATA");
  // Anything but blank lines and comments after ENDATA is an error.
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_number_;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!Trim(line).empty() && line.front() != '*') {
      Fail(ErrorCode::kSyntaxError, "content after ENDATA");
    }
  }
  return Assemble();
}

MpsParseResult Parser::Assemble() {
  if (columns_.empty()) Fail(ErrorCode::kEmptyProblem, "problem has no columns");
  const Index n = static_cast<Index>(columns_.size());

  std::vector<Triplet> g_entries, a_entries;
  Vector h, b;
  auto add_row = [](std::vector<Triplet>& out, Vector& rhs, const RowInfo& row,
                    double sign, double value) {
    const Index r = static_cast<Index>(rhs.size());
    for (auto [col, v] : row.entries) out.push_back({r, col, sign * v});
    rhs.push_back(sign * value);
  };
  for (const RowInfo& row : rows_) {
    const double r = row.rhs;
    if (!row.range || (row.type == 'E' && *row.range == 0.0)) {
      switch (row.type) {
        case 'E': add_row(a_entries, b, row, 1.0, r); break;
        case 'G': add_row(g_entries, h, row, 1.0, r); break;
        default: add_row(g_entries, h, row, -1.0, r); break;
      }
      continue;
    }
    const double range = *row.range;
    double lo, hi;
    if (row.type == 'E') {
      lo = range > 0.0 ? r : r + range;
      hi = range > 0.0 ? r + range : r;
    } else if (row.type == 'G') {
      lo = r;
      hi = r + std::abs(range);
    } else {
      lo = r - std::abs(range);
      hi = r;
    }
    add_row(g_entries, h, row, 1.0, lo);
    add_row(g_entries, h, row, -1.0, hi);
  }

  MpsParseResult result;
  LpProblem& p = result.problem;
  const double sign = maximize_ ? -1.0 : 1.0;
  p.objective.reserve(columns_.size());
  Index relaxed = 0;
  for (const ColumnInfo& c : columns_) {
    p.objective.push_back(sign * c.objective);
    p.lower.push_back(c.lower);
    p.upper.push_back(c.upper);
    if (c.integer) ++relaxed;
  }
  p.objective_constant = -sign * objective_rhs_;
  p.ineq_matrix = SparseMatrix::FromTriplets(static_cast<Index>(h.size()), n,
                                             g_entries);
  p.ineq_rhs = std::move(h);
  p.eq_matrix = SparseMatrix::FromTriplets(static_cast<Index>(b.size()), n,
                                           a_entries);
  p.eq_rhs = std::move(b);
  p.name = name_;
  try {
    validate(p);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kCrossedBounds) {
      Fail(ErrorCode::kSyntaxError,
           "column '" + columns_[static_cast<size_t>(e.index())].name +
               "' has crossed bounds");
    }
    throw;
  }

  result.maximize = maximize_;
  result.relaxed_integrality = relaxed > 0;
  if (relaxed > 0) {
    warnings_.push_back("relaxed integrality of " + std::to_string(relaxed) +
                        " column(s) to continuous");
  }
  result.warnings = std::move(warnings_);
  return result;
}

void AppendNumber(std::string& out, double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  out += buffer;
}

}  // namespace

MpsParseResult parse_mps(std::string_view text, MpsDialect dialect) {
  return Parser(dialect).Parse(text);
}

MpsParseResult parse_mps(std::istream& in, MpsDialect dialect) {
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  return parse_mps(text, dialect);
}

MpsParseResult read_mps_file(const std::string& path, MpsDialect dialect) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "'");
  return parse_mps(in, dialect);
}

std::string write_mps(const LpProblem& p) {
  validate(p);
  const Index n = p.num_variables();
  const Index m1 = p.num_ineq_rows();
  const Index m2 = p.num_eq_rows();
  auto col_name = [](Index j) { return "x" + std::to_string(j); };
  auto g_name = [](Index i) { return "G" + std::to_string(i); };
  auto e_name = [](Index i) { return "E" + std::to_string(i); };

  std::string out;
  out += "NAME " + (p.name.empty() ? std::string("fohorse") : p.name) + "\n";
  out += "ROWS\n N obj\n";
  for (Index i = 0; i < m1; ++i) out += " G " + g_name(i) + "\n";
  for (Index i = 0; i < m2; ++i) out += " E " + e_name(i) + "\n";

  out += "COLUMNS\n";
  for (Index j = 0; j < n; ++j) {
    const std::string name = col_name(j);
    const SparseSlice g_col = p.ineq_matrix.col(j);
    const SparseSlice a_col = p.eq_matrix.col(j);
    const double c = p.objective[static_cast<size_t>(j)];
    if (c != 0.0 || (g_col.size() == 0 && a_col.size() == 0)) {
      out += " " + name + " obj ";
      AppendNumber(out, c);
      out += "\n";
    }
    for (size_t e = 0; e < g_col.indices.size(); ++e) {
      out += " " + name + " " + g_name(g_col.indices[e]) + " ";
      AppendNumber(out, g_col.values[e]);
      out += "\n";
    }
    for (size_t e = 0; e < a_col.indices.size(); ++e) {
      out += " " + name + " " + e_name(a_col.indices[e]) + " ";
      AppendNumber(out, a_col.values[e]);
      out += "\n";
    }
  }

  out += "RHS\n";
  if (p.objective_constant != 0.0) {
    out += " RHS obj ";
    AppendNumber(out, -p.objective_constant);
    out += "\n";
  }
  for (Index i = 0; i < m1; ++i) {
    if (p.ineq_rhs[static_cast<size_t>(i)] == 0.0) continue;
    out += " RHS " + g_name(i) + " ";
    AppendNumber(out, p.ineq_rhs[static_cast<size_t>(i)]);
    out += "\n";
  }
  for (Index i = 0; i < m2; ++i) {
    if (p.eq_rhs[static_cast<size_t>(i)] == 0.0) continue;
    out += " RHS " + e_name(i) + " ";
    AppendNumber(out, p.eq_rhs[static_cast<size_t>(i)]);
    out += "\n";
  }

  std::string bounds;
  auto bound_line = [&](const char* type, Index j, std::optional<double> value) {
    bounds += std::string(" ") + type + " BND " + col_name(j);
    if (value) {
      bounds += " ";
      AppendNumber(bounds, *value);
    }
    bounds += "\n";
  };
  for (Index j = 0; j < n; ++j) {
    const double l = p.lower[static_cast<size_t>(j)];
    const double u = p.upper[static_cast<size_t>(j)];
    const bool l_finite = std::isfinite(l);
    const bool u_finite = std::isfinite(u);
    if (!l_finite && !u_finite) {
      bound_line("FR", j, std::nullopt);
    } else if (!l_finite) {
      bound_line("MI", j, std::nullopt);
      bound_line("UP", j, u);
    } else if (u_finite && l == u) {
      bound_line("FX", j, l);
    } else if (u_finite) {
      bound_line("LO", j, l);
      bound_line("UP", j, u);
    } else if (l != 0.0) {
      bound_line("LO", j, l);
    }
  }
  if (!bounds.empty()) out += "BOUNDS\n" + bounds;
  out += "ENDATA\n";
  return out;
}

}  // namespace fohorse
