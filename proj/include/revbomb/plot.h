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


// Minimal static SVG charts for the figure tables.

#ifndef REVBOMB_PLOT_H_
#define REVBOMB_PLOT_H_

#include <string>
#include <vector>

namespace revbomb {

struct Series {
  std::string name;
  std::vector<double> values;  // one per category; NaN draws nothing
};

// Bars stacked per category, series in order from the bottom up.
std::string StackedBarChart(const std::string &title,
                            const std::vector<std::string> &categories,
                            const std::vector<Series> &series);

// One row per label with an "early" and a "late" dot joined by a line.
std::string DumbbellChart(const std::string &title,
                          const std::vector<std::string> &rows,
                          const std::vector<double> &early,
                          const std::vector<double> &late);

}  // namespace revbomb

#endif  // REVBOMB_PLOT_H_
