// Copyright 2026 The Revbomb Authors.
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


#include "revbomb/table.h"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "revbomb/corpus.h"
#include "revbomb/errors.h"

namespace revbomb {

void Table::AddRow(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::logic_error("table " + name + ": row has " +
                           std::to_string(row.size()) + " cells, expected " +
                           std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

std::string FormatReal(double v) {
  if (std::isnan(v)) return "";
  if (v == 0) return "0";  // folds -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::string CellText(const Cell &c, int decimals) {
  if (std::holds_alternative<std::int64_t>(c)) {
    return std::to_string(std::get<std::int64_t>(c));
  }
  if (std::holds_alternative<double>(c)) {
    const double v = std::get<double>(c);
    if (std::isnan(v)) return "";
    if (decimals < 0) return FormatReal(v);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    std::string s = buf;
    if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) {
      s.erase(0, 1);
    }
    return s;
  }
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return "";
}

}  // namespace

std::string ToCsv(const Table &t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += QuoteField(t.columns[i]);
  }
  out += '\n';
  for (const auto &row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += QuoteField(CellText(row[i], -1));
    }
    out += '\n';
  }
  return out;
}

std::string ToJson(const Table &t) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["name"] = t.name;
  if (!t.title.empty()) j["title"] = t.title;
  j["columns"] = t.columns;
  ordered_json rows = ordered_json::array();
  for (const auto &row : t.rows) {
    ordered_json r = ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell &c = row[i];
      if (std::holds_alternative<std::int64_t>(c)) {
        r[t.columns[i]] = std::get<std::int64_t>(c);
      } else if (std::holds_alternative<double>(c) &&
                 !std::isnan(std::get<double>(c))) {
        r[t.columns[i]] = std::get<double>(c);
      } else if (std::holds_alternative<std::string>(c)) {
        r[t.columns[i]] = std::get<std::string>(c);
      } else {
        r[t.columns[i]] = nullptr;
      }
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["notes"] = t.notes;
  return j.dump(2) + "\n";
}

std::string ToMarkdown(const Table &t, int decimals) {
  std::string out;
  if (!t.title.empty()) out += "**" + t.title + "**\n\n";
  out += "|";
  for (const auto &c : t.columns) out += " " + c + " |";
  out += "\n|";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto &row : t.rows) {
    out += "|";
    for (const auto &c : row) out += " " + CellText(c, decimals) + " |";
    out += "\n";
  }
  for (const auto &note : t.notes) out += "\n" + note + "\n";
  return out;
}

}  // namespace revbomb
