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


// A named, typed table with delimited, structured and rendered forms.
// Delimited and structured output carry full precision (shortest round-trip
// form); rendered output rounds reals to a fixed number of decimals.

#ifndef REVBOMB_TABLE_H_
#define REVBOMB_TABLE_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace revbomb {

// Blank (monostate) renders empty in delimited/rendered form and null in
// structured form; so does a NaN real.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::string name;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> notes;

  void AddRow(std::vector<Cell> row);
};

std::string FormatReal(double v);  // shortest round-trip; "" for NaN

std::string ToCsv(const Table &t);
// {"name":..., "columns":[...], "rows":[{col: value}...], "notes":[...]}
std::string ToJson(const Table &t);
std::string ToMarkdown(const Table &t, int decimals = 2);

}  // namespace revbomb

#endif  // REVBOMB_TABLE_H_
