// Copyright 2026 The realqm Authors
//
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


// Deterministic JSON / CSV rendering for the command-line tool. Reports are
// built as ordered JSON trees (field order is insertion order) and rendered
// here, so every double goes out with 17 significant digits regardless of
// how the JSON library would print it.

#ifndef REALQM_TOOLS_REPORT_HPP_
#define REALQM_TOOLS_REPORT_HPP_

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace realqm::cli {

using Json = nlohmann::ordered_json;

inline std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_json(std::ostream& os, const Json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << inner << Json(it.key()).dump() << ": ";
        write_json(os, it.value(), indent + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const Json& e : j) flat = flat && !e.is_structured();
      if (j.empty()) {
        os << "[]";
      } else if (flat) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write_json(os, j[i], indent + 1);
        }
        os << "]";
      } else {
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ",\n";
          os << inner;
          write_json(os, j[i], indent + 1);
        }
        os << "\n" << pad << "]";
      }
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
      return;
  }
}

inline std::string csv_cell(const Json& v) {
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

/// One header line from the keys of the first row, then one line per row.
/// Nested values (arrays, objects) are skipped; they only appear in json.
inline void write_csv(std::ostream& os, const Json& rows) {
  if (rows.empty()) return;
  std::vector<std::string> cols;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it)
    if (!it.value().is_structured()) cols.push_back(it.key());
  for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
  os << "\n";
  for (const Json& row : rows) {
    for (std::size_t c = 0; c < cols.size(); ++c)
      os << (c ? "," : "") << (row.contains(cols[c]) ? csv_cell(row[cols[c]]) : "");
    os << "\n";
  }
}

}  // namespace realqm::cli

#endif  // REALQM_TOOLS_REPORT_HPP_
