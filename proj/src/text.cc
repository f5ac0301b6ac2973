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

#include "revbomb/text.h"

#include <cmath>
#include <limits>
#include <unordered_set>

#include "revbomb/data.h"
#include "revbomb/unicode.h"

namespace revbomb {

NormText Normalize(std::string_view body) {
  NormText out;
  out.lowered.reserve(body.size());
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < body.size()) {
    const char32_t c = NextCodePoint(body, pos);
    ++out.original_length;
    if (IsSpace(c)) {
      pending_space = !out.lowered.empty();
      continue;
    }
    if (pending_space) {
      out.lowered.push_back(' ');
      pending_space = false;
    }
    AppendUtf8(ToLower(c), &out.lowered);
  }
  return out;
}

TokenSeq Tokenize(std::string_view lowered) {
  TokenSeq tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < lowered.size()) {
    const char32_t c = NextCodePoint(lowered, pos);
    if (IsWordChar(c)) {
      AppendUtf8(c, &current);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

TokenSeq Tokenize(const NormText &text) { return Tokenize(text.lowered); }

std::size_t LexicalDiversity(std::string_view body) {
  const TokenSeq tokens = Tokenize(Normalize(body));
  std::unordered_set<std::string_view> types(tokens.begin(), tokens.end());
  return types.size();
}

TokenSeq RemoveStopwords(const TokenSeq &tokens, const StopList &stoplist) {
  TokenSeq out;
  out.reserve(tokens.size());
  for (const auto &t : tokens) {
    if (!stoplist.contains(t)) out.push_back(t);
  }
  return out;
}

StopList ParseStopList(std::string_view contents) {
  StopList list;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = contents.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const std::string word = Normalize(line).lowered;
    if (!word.empty()) list.insert(word);
    start = end + 1;
  }
  return list;
}

StopList LoadStopList(const std::string &path) {
  return ParseStopList(ReadFile(path));
}

const StopList &DefaultStopList() {
  static const StopList list =
      ParseStopList(EmbeddedData("stopwords_en.txt"));
  return list;
}

double PearsonCorrelation(const std::vector<double> &x,
                          const std::vector<double> &y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return std::numeric_limits<double>::quiet_NaN();
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return std::numeric_limits<double>::quiet_NaN();
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace revbomb
