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

// Fake-review cues: numeric usernames, near-duplicate usernames or bodies,
// runs of a repeated token, runs of a repeated letter.
//
// Near duplicates are found with a similarity join over normalized edit
// distance, sim(a, b) = 1 - lev(a, b) / max(|a|, |b|) on code points. The
// join is exact: it returns precisely the pairs an all-pairs scan would.
//
// Why blocking loses nothing. With threshold t, a qualifying pair whose
// longer member has length M is within d <= dmax(M) = floor((1 - t) M)
// edits, so the lengths differ by at most dmax(M). Each pair is probed from
// its longer member x, which picks dmax + k pairwise non-overlapping q-grams
// (the cheapest such set by posting-list length). One edit touches at most
// one of them, so at least k come through untouched, and an untouched gram
// reappears in the partner shifted by at most d positions. Candidates must
// therefore hit k distinct chosen grams of an index over every gram of the
// shorter items, each within the shift bound. When x is too short for
// dmax + k disjoint grams, k is lowered; below k = 1 the whole length band is
// scanned. Survivors pass a q-gram count filter (M - q + 1 - q dmax shared
// grams) and a banded edit distance that stops once dmax is exceeded.

#ifndef REVBOMB_FAKES_H_
#define REVBOMB_FAKES_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "revbomb/corpus.h"

namespace revbomb {

bool CueNumericUsername(std::string_view username);
// >= 3 identical tokens in a row.
bool CueRepeatedToken(std::string_view body);
// >= 4 identical letters in a row (digits and punctuation do not count).
bool CueRepeatedChar(std::string_view body);

std::size_t Levenshtein(std::u32string_view a, std::u32string_view b);
std::size_t Levenshtein(std::string_view a, std::string_view b);

// Exact distance when it is <= max_distance, otherwise max_distance + 1.
std::size_t BoundedLevenshtein(std::u32string_view a, std::u32string_view b,
                               std::size_t max_distance);

// 1 - lev / max length; 1 for two empty strings.
double NormalizedSimilarity(std::u32string_view a, std::u32string_view b);
double NormalizedSimilarity(std::string_view a, std::string_view b);

struct SimilarityItem {
  std::string id;
  std::string text;
};

struct SimilarPair {
  std::string first;   // first < second
  std::string second;
  double similarity = 0;

  bool operator==(const SimilarPair &) const = default;
};

struct JoinOptions {
  double threshold = 0.85;
  int qgram = 4;
  // Turns the q-gram prefix filter off; only the length band remains.
  bool prefilter = true;
  int threads = 0;  // 0: hardware concurrency
};

// Pairs with similarity >= threshold, deduplicated, sorted by (first,
// second). Throws ConfigError for thresholds outside (0, 1] or qgram < 1.
std::vector<SimilarPair> SimilarityPairs(
    const std::vector<SimilarityItem> &items, const JoinOptions &options);

struct SimilarityConfig {
  double username_threshold = 0.90;
  double body_threshold = 0.85;
  std::size_t min_username_len = 6;
  std::size_t min_body_len = kMinBodyChars;
  int username_qgram = 3;
  int body_qgram = 4;
  int threads = 0;
};

struct FakeFlag {
  std::string review_id;
  CueSet cues = 0;
  std::vector<std::string> partner_ids;  // sorted; non-empty iff near dup

  bool operator==(const FakeFlag &) const = default;
};

// "NumericUsername|NearDuplicate|..." in bit order.
std::string CueNames(CueSet cues);

// Flags in corpus order. Usernames are compared lowercased, bodies
// normalized; near-duplicate partners are other reviews.
std::vector<FakeFlag> FlagFakes(const Corpus &corpus,
                                const SimilarityConfig &config);

// Copy of the corpus with Review::cues filled (0 for unflagged reviews).
Corpus AnnotateCues(const Corpus &corpus, const std::vector<FakeFlag> &flags);

}  // namespace revbomb

#endif  // REVBOMB_FAKES_H_
