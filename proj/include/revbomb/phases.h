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


// Sentiment buckets, Early/Mid/Late periods and equal-count phases.

#ifndef REVBOMB_PHASES_H_
#define REVBOMB_PHASES_H_

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "revbomb/corpus.h"

namespace revbomb {

// Very Bad [0,1], Bad [2,4], Neutral [5,7], Good [8,9], Very Good 10.
enum class SentimentBucket { kVeryBad, kBad, kNeutral, kGood, kVeryGood };
inline constexpr int kBucketCount = 5;
inline constexpr std::array<SentimentBucket, kBucketCount> kAllBuckets = {
    SentimentBucket::kVeryBad, SentimentBucket::kBad, SentimentBucket::kNeutral,
    SentimentBucket::kGood, SentimentBucket::kVeryGood};

// Throws DataError outside [0, 10].
SentimentBucket SentimentBucketOf(int score);
std::string_view BucketName(SentimentBucket b);

// x < 6 Negative, x > 6 Positive; 6 falls between the two.
enum class BinarySentiment { kNegative, kBoundary, kPositive };
BinarySentiment BinarySentimentOf(int score);
std::string_view BinarySentimentName(BinarySentiment s);

// Early = phases 1-2, Late = the last two, Mid = the rest. Early wins when
// the two overlap (fewer than four phases).
enum class PeriodTag { kEarly, kMid, kLate };
PeriodTag PeriodOfPhase(int phase, int phase_count);
std::string_view PeriodName(PeriodTag p);

enum class PhaseMode { kDayAligned, kExactCount };
// "day-aligned" or "exact-count"; ConfigError otherwise.
PhaseMode ParsePhaseMode(std::string_view name);
std::string_view PhaseModeName(PhaseMode m);

struct Phase {
  int index = 0;  // 1-based
  Day first_day{};
  Day last_day{};
  // Reviews [begin, end) in corpus order.
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const Phase &) const = default;
};

struct PhasePartition {
  PhaseMode mode = PhaseMode::kDayAligned;
  std::vector<Phase> phases;

  int count() const { return static_cast<int>(phases.size()); }
  // 1-based phase of the review at corpus position i.
  int PhaseOf(std::size_t i) const;
  PeriodTag PeriodOf(std::size_t i) const {
    return PeriodOfPhase(PhaseOf(i), count());
  }
};

// Splits the corpus into p phases of (near) equal review counts.
//
// Day-aligned: whole days only. Among all placements of the p - 1 day
// boundaries, picks the one minimizing the largest |phase count - N/p|, then
// the sum of squared deviations, then the earliest boundaries. Phases tile
// the full date range: a phase ends the day before the next one starts.
// Throws DataError when p exceeds the number of days with reviews.
//
// Exact-count: phase k holds positions [floor((k-1)N/p), floor(kN/p)), so
// sizes differ by at most one. Throws DataError when p > N.
PhasePartition PartitionEqualCount(const Corpus &corpus, int p,
                                   PhaseMode mode = PhaseMode::kDayAligned);

struct DayRow {
  Day day{};
  std::array<std::size_t, kBucketCount> counts{};
  std::size_t total() const;
};

struct PhaseScoreRow {
  int phase = 0;
  std::array<std::size_t, kMaxScore + 1> counts{};
  std::size_t n = 0;
  double RelFreq(int score) const;
};

struct TrendTable {
  // Every day from the first to the last review, empty days included.
  std::vector<DayRow> days;
  std::vector<PhaseScoreRow> phases;
};

TrendTable BuildTrendTable(const Corpus &corpus, const PhasePartition &part);

}  // namespace revbomb

#endif  // REVBOMB_PHASES_H_
