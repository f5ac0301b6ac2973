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

// Text normalization, tokenization, stop words and lexical diversity.
//
// Lexical diversity D is the number of distinct tokens (the type count) of
// the normalized body, stop words included. D tracks text length closely on
// natural text, which is what the per-score and per-cell medians rely on.

#ifndef REVBOMB_TEXT_H_
#define REVBOMB_TEXT_H_

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace revbomb {

struct NormText {
  // Lowercased, whitespace runs collapsed to one space, trimmed.
  std::string lowered;
  // Code points in the raw body.
  std::size_t original_length = 0;
};

using TokenSeq = std::vector<std::string>;
using StopList = std::set<std::string, std::less<>>;

NormText Normalize(std::string_view body);

// Maximal runs of letters and digits; everything else separates.
TokenSeq Tokenize(const NormText &text);
TokenSeq Tokenize(std::string_view lowered);

std::size_t LexicalDiversity(std::string_view body);

TokenSeq RemoveStopwords(const TokenSeq &tokens, const StopList &stoplist);

// Stop-word list format: one token per line, '#' starts a comment.
StopList ParseStopList(std::string_view contents);
StopList LoadStopList(const std::string &path);

// The shipped English list (data/stopwords_en.txt).
const StopList &DefaultStopList();

// Pearson correlation; NaN when either side has zero variance.
double PearsonCorrelation(const std::vector<double> &x,
                          const std::vector<double> &y);

}  // namespace revbomb

#endif  // REVBOMB_TEXT_H_
