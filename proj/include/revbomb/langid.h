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

// Language tagging and grouping.
//
// Detection screens the dominant script first. Non-Latin scripts map straight
// to a language code; Latin-script text is scored by the share of its tokens
// that are function words of each candidate language. Hard cases are routed
// to a manual override file.

#ifndef REVBOMB_LANGID_H_
#define REVBOMB_LANGID_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "revbomb/corpus.h"

namespace revbomb {

// Code for text with no letters at all (emoji, punctuation, empty).
inline constexpr std::string_view kSymbolsOnlyCode = "zxx";
// Code for letter text no profile recognised.
inline constexpr std::string_view kUndeterminedCode = "und";
inline constexpr double kReviewConfidence = 0.5;

class LanguageDetector {
 public:
  // Loads the shipped function-word profiles.
  LanguageDetector();
  // Profile format: "code: word word ..." lines, '#' comments.
  explicit LanguageDetector(std::string_view profiles);

  LanguageTag Detect(std::string_view body) const;

 private:
  std::vector<std::string> codes_;
  std::map<std::string, std::vector<int>, std::less<>> word_langs_;
};

class GroupingScheme {
 public:
  // The shipped ten-bucket scheme.
  GroupingScheme();
  // "code=Group Name" lines; "*=Name" sets the default group.
  static GroupingScheme Parse(std::string_view contents);
  static GroupingScheme Load(const std::string &path);

  const std::string &GroupOf(std::string_view code) const;
  // Groups in declaration order, default group last.
  const std::vector<std::string> &groups() const { return groups_; }
  bool Knows(std::string_view code) const;

 private:
  struct Empty {};
  explicit GroupingScheme(Empty) {}

  std::map<std::string, std::string, std::less<>> code_to_group_;
  std::vector<std::string> groups_;
  std::string default_group_;
};

// Tags every review. Existing overridden tags are kept.
Corpus TagLanguages(const Corpus &corpus, const LanguageDetector &detector);

struct OverrideResult {
  Corpus corpus;
  std::size_t applied = 0;
};

// Manual overrides win over detection. Throws DataError naming the first
// unknown review id.
OverrideResult ApplyOverrides(const Corpus &corpus,
                              const std::map<std::string, std::string> &overrides);

// `id,code` delimited table.
std::map<std::string, std::string> LoadOverrides(const std::string &path);

struct LanguageRow {
  std::string group;
  std::size_t n = 0;
  double mean_score = 0;
};

// One row per non-empty group in scheme order. Throws DataError if any review
// is untagged.
std::vector<LanguageRow> LanguageSummary(const Corpus &corpus,
                                         const GroupingScheme &scheme);

// Reviews below the confidence threshold, for manual checking.
Corpus NeedsReview(const Corpus &corpus,
                   double threshold = kReviewConfidence);

}  // namespace revbomb

#endif  // REVBOMB_LANGID_H_
