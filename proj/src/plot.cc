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


#include "revbomb/plot.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace revbomb {

namespace {

constexpr const char *kPalette[] = {"#c0392b", "#e67e22", "#f1c40f",
                                    "#7fb36a", "#1e8449", "#5d6d7e",
                                    "#8e44ad", "#2e86c1"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

std::string Escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string Header(double w, double h, const std::string &title) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + Num(w) +
         "\" height=\"" + Num(h) + "\" font-family=\"sans-serif\" " +
         "font-size=\"11\">\n<rect width=\"100%\" height=\"100%\" "
         "fill=\"white\"/>\n<text x=\"" +
         Num(w / 2) + "\" y=\"18\" text-anchor=\"middle\" font-size=\"14\">" +
         Escape(title) + "</text>\n";
}

}  // namespace

std::string StackedBarChart(const std::string &title,
                            const std::vector<std::string> &categories,
                            const std::vector<Series> &series) {
  const double left = 50, top = 30, plot_h = 260, bottom = 90;
  const double bar_w = std::max(4.0, std::min(40.0, 700.0 / std::max<std::size_t>(categories.size(), 1)));
  const double plot_w = bar_w * categories.size();
  const double legend_w = 150;
  const double w = left + plot_w + 20 + legend_w, h = top + plot_h + bottom;
  double max_total = 0;
  for (std::size_t c = 0; c < categories.size(); ++c) {
    double total = 0;
    for (const auto &s : series) {
      if (c < s.values.size() && !std::isnan(s.values[c])) total += s.values[c];
    }
    max_total = std::max(max_total, total);
  }
  if (max_total <= 0) max_total = 1;
  std::string svg = Header(w, h, title);
  svg += "<line x1=\"" + Num(left) + "\" y1=\"" + Num(top + plot_h) +
         "\" x2=\"" + Num(left + plot_w) + "\" y2=\"" + Num(top + plot_h) +
         "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + Num(left - 4) + "\" y=\"" + Num(top + 4) +
         "\" text-anchor=\"end\">" + Num(max_total) + "</text>\n";
  for (std::size_t c = 0; c < categories.size(); ++c) {
    double y = top + plot_h;
    const double x = left + c * bar_w;
    for (std::size_t s = 0; s < series.size(); ++s) {
      if (c >= series[s].values.size() || std::isnan(series[s].values[c])) {
        continue;
      }
      const double hgt = series[s].values[c] / max_total * plot_h;
      y -= hgt;
      svg += "<rect x=\"" + Num(x + 1) + "\" y=\"" + Num(y) + "\" width=\"" +
             Num(bar_w - 2) + "\" height=\"" + Num(hgt) + "\" fill=\"" +
             kPalette[s % 8] + "\"/>\n";
    }
    svg += "<text transform=\"translate(" + Num(x + bar_w / 2) + "," +
           Num(top + plot_h + 8) +
           ") rotate(60)\" font-size=\"9\">" + Escape(categories[c]) +
           "</text>\n";
  }
  for (std::size_t s = 0; s < series.size(); ++s) {
    const double ly = top + 10 + 16 * s;
    const double lx = left + plot_w + 20;
    svg += "<rect x=\"" + Num(lx) + "\" y=\"" + Num(ly - 9) +
           "\" width=\"10\" height=\"10\" fill=\"" + kPalette[s % 8] +
           "\"/>\n<text x=\"" + Num(lx + 14) + "\" y=\"" + Num(ly) + "\">" +
           Escape(series[s].name) + "</text>\n";
  }
  return svg + "</svg>\n";
}

std::string DumbbellChart(const std::string &title,
                          const std::vector<std::string> &rows,
                          const std::vector<double> &early,
                          const std::vector<double> &late) {
  const double left = 160, top = 40, row_h = 18, plot_w = 400;
  const double w = left + plot_w + 40, h = top + row_h * rows.size() + 40;
  double lo = 0, hi = 0;
  bool any = false;
  for (const auto *v : {&early, &late}) {
    for (double x : *v) {
      if (std::isnan(x)) continue;
      lo = any ? std::min(lo, x) : x;
      hi = any ? std::max(hi, x) : x;
      any = true;
    }
  }
  if (!any || hi <= lo) {
    lo = any ? lo - 1 : 0;
    hi = any ? hi + 1 : 1;
  }
  auto px = [&](double v) { return left + (v - lo) / (hi - lo) * plot_w; };
  std::string svg = Header(w, h, title);
  svg += "<text x=\"" + Num(left) + "\" y=\"" + Num(top - 8) + "\">" +
         Num(lo) + "</text><text x=\"" + Num(left + plot_w) + "\" y=\"" +
         Num(top - 8) + "\" text-anchor=\"end\">" + Num(hi) + "</text>\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const double y = top + r * row_h + row_h / 2;
    svg += "<text x=\"" + Num(left - 8) + "\" y=\"" + Num(y + 4) +
           "\" text-anchor=\"end\">" + Escape(rows[r]) + "</text>\n";
    const double e = r < early.size() ? early[r] : NAN;
    const double l = r < late.size() ? late[r] : NAN;
    if (!std::isnan(e) && !std::isnan(l)) {
      svg += "<line x1=\"" + Num(px(e)) + "\" y1=\"" + Num(y) + "\" x2=\"" +
             Num(px(l)) + "\" y2=\"" + Num(y) +
             "\" stroke=\"#8e44ad\" stroke-width=\"2\"/>\n";
    }
    if (!std::isnan(e)) {
      svg += "<circle cx=\"" + Num(px(e)) + "\" cy=\"" + Num(y) +
             "\" r=\"4\" fill=\"#f1c40f\"/>\n";
    }
    if (!std::isnan(l)) {
      svg += "<circle cx=\"" + Num(px(l)) + "\" cy=\"" + Num(y) +
             "\" r=\"4\" fill=\"#8e44ad\"/>\n";
    }
  }
  svg += "<text x=\"" + Num(left) + "\" y=\"" + Num(h - 12) +
         "\">yellow: Early, purple: Late</text>\n";
  return svg + "</svg>\n";
}

}  // namespace revbomb
