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


#include "revbomb/phases.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "revbomb/errors.h"

namespace revbomb {

SentimentBucket SentimentBucketOf(int score) {
  if (score < kMinScore || score > kMaxScore) {
    throw DataError("score " + std::to_string(score) + " out of range");
  }
  if (score <= 1) return SentimentBucket::kVeryBad;
  if (score <= 4) return SentimentBucket::kBad;
  if (score <= 7) return SentimentBucket::kNeutral;
  if (score <= 9) return SentimentBucket::kGood;
  return SentimentBucket::kVeryGood;
}

std::string_view BucketName(SentimentBucket b) {
  switch (b) {
    case SentimentBucket::kVeryBad:
      return "VeryBad";
    case SentimentBucket::kBad:
      return "Bad";
    case SentimentBucket::kNeutral:
      return "Neutral";
    case SentimentBucket::kGood:
      return "Good";
    case SentimentBucket::kVeryGood:
      return "VeryGood";
  }
  return "";
}

BinarySentiment BinarySentimentOf(int score) {
  if (score < 6) return BinarySentiment::kNegative;
  if (score > 6) return BinarySentiment::kPositive;
  return BinarySentiment::kBoundary;
}

std::string_view BinarySentimentName(BinarySentiment s) {
  switch (s) {
    case BinarySentiment::kNegative:
      return "Negative";
    case BinarySentiment::kBoundary:
      return "Boundary";
    case BinarySentiment::kPositive:
      return "Positive";
  }
  return "";
}

PeriodTag PeriodOfPhase(int phase, int phase_count) {
  if (phase <= 2) return PeriodTag::kEarly;
  if (phase >= phase_count - 1) return PeriodTag::kLate;
  return PeriodTag::kMid;
}

std::string_view PeriodName(PeriodTag p) {
  switch (p) {
    case PeriodTag::kEarly:
      return "Early";
    case PeriodTag::kMid:
      return "Mid";
    case PeriodTag::kLate:
      return "Late";
  }
  return "";
}

PhaseMode ParsePhaseMode(std::string_view name) {
  if (name == "day-aligned") return PhaseMode::kDayAligned;
  if (name == "exact-count") return PhaseMode::kExactCount;
  throw ConfigError("unknown phase mode '" + std::string(name) + "'");
}

std::string_view PhaseModeName(PhaseMode m) {
  return m == PhaseMode::kDayAligned ? "day-aligned" : "exact-count";
}

int PhasePartition::PhaseOf(std::size_t i) const {
  auto it = std::upper_bound(
      phases.begin(), phases.end(), i,
      [](std::size_t v, const Phase &ph) { return v < ph.end; });
  if (it == phases.end()) {
    throw DataError("position " + std::to_string(i) + " outside partition");
  }
  return it->index;
}

namespace {

PhasePartition DayAligned(const Corpus &corpus, int p) {
  std::vector<Day> days;
  std::vector<std::int64_t> prefix{0};
  for (const Review &r : corpus) {
    if (days.empty() || days.back() != r.day) {
      days.push_back(r.day);
      prefix.push_back(prefix.back());
    }
    ++prefix.back();
  }
  const int d = static_cast<int>(days.size());
  if (p > d) {
    throw DataError("cannot place " + std::to_string(p) +
                    " day-aligned phases over " + std::to_string(d) +
                    " distinct days");
  }
  const std::int64_t n = prefix.back();
  // |p * count - N| is p times the deviation from N/p, kept integral.
  auto dev = [&](int i, int j) {
    const std::int64_t v = p * (prefix[j] - prefix[i]) - n;
    return v < 0 ? -v : v;
  };
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  // worst[k][i]: smallest achievable max deviation splitting days [i, d)
  // into k phases.
  std::vector<std::vector<std::int64_t>> worst(
      p + 1, std::vector<std::int64_t>(d + 1, kInf));
  worst[0][d] = 0;
  for (int k = 1; k <= p; ++k) {
    for (int i = 0; i + k <= d; ++i) {
      for (int j = i + 1; j + (k - 1) <= d; ++j) {
        if (worst[k - 1][j] >= kInf) continue;
        worst[k][i] = std::min(worst[k][i], std::max(dev(i, j), worst[k - 1][j]));
      }
    }
  }
  const std::int64_t bound = worst[p][0];

  // spread[k][i]: smallest sum of squared deviations within that bound.
  std::vector<std::vector<std::int64_t>> spread(
      p + 1, std::vector<std::int64_t>(d + 1, kInf));
  spread[0][d] = 0;
  for (int k = 1; k <= p; ++k) {
    for (int i = 0; i + k <= d; ++i) {
      for (int j = i + 1; j + (k - 1) <= d; ++j) {
        const std::int64_t e = dev(i, j);
        if (e > bound || spread[k - 1][j] >= kInf) continue;
        spread[k][i] = std::min(spread[k][i], e * e + spread[k - 1][j]);
      }
    }
  }

  PhasePartition part;
  part.mode = PhaseMode::kDayAligned;
  int i = 0;
  for (int k = p; k >= 1; --k) {
    int cut = -1;
    for (int j = i + 1; j + (k - 1) <= d; ++j) {
      const std::int64_t e = dev(i, j);
      if (e <= bound && spread[k - 1][j] < kInf &&
          e * e + spread[k - 1][j] == spread[k][i]) {
        cut = j;  // earliest boundary among optima
        break;
      }
    }
    Phase ph;
    ph.index = p - k + 1;
    ph.first_day = days[i];
    ph.last_day = cut < d ? days[cut] - std::chrono::days{1} : days[d - 1];
    ph.begin = static_cast<std::size_t>(prefix[i]);
    ph.end = static_cast<std::size_t>(prefix[cut]);
    part.phases.push_back(ph);
    i = cut;
  }
  return part;
}

PhasePartition ExactCount(const Corpus &corpus, int p) {
  const std::size_t n = corpus.size();
  if (static_cast<std::size_t>(p) > n) {
    throw DataError("cannot split " + std::to_string(n) + " reviews into " +
                    std::to_string(p) + " phases");
  }
  PhasePartition part;
  part.mode = PhaseMode::kExactCount;
  for (int k = 1; k <= p; ++k) {
    Phase ph;
    ph.index = k;
    ph.begin = (k - 1) * n / p;
    ph.end = k * n / p;
    ph.first_day = corpus[ph.begin].day;
    ph.last_day = corpus[ph.end - 1].day;
    part.phases.push_back(ph);
  }
  return part;
}

}  // namespace

PhasePartition PartitionEqualCount(const Corpus &corpus, int p,
                                   PhaseMode mode) {
  if (p < 1) throw ConfigError("phase count must be >= 1");
  if (corpus.empty()) throw DataError("cannot partition an empty corpus");
  return mode == PhaseMode::kDayAligned ? DayAligned(corpus, p)
                                        : ExactCount(corpus, p);
}

std::size_t DayRow::total() const {
  std::size_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

double PhaseScoreRow::RelFreq(int score) const {
  return n == 0 ? 0.0 : static_cast<double>(counts.at(score)) / n;
}

TrendTable BuildTrendTable(const Corpus &corpus, const PhasePartition &part) {
  TrendTable t;
  if (corpus.empty()) return t;
  const Day first = corpus[0].day;
  const Day last = corpus[corpus.size() - 1].day;
  for (Day d = first; d <= last; d += std::chrono::days{1}) {
    t.days.push_back({d, {}});
  }
  for (const Review &r : corpus) {
    t.days[(r.day - first).count()]
        .counts[static_cast<int>(SentimentBucketOf(r.score))]++;
  }
  for (const Phase &ph : part.phases) {
    if (ph.end > corpus.size()) {
      throw DataError("partition does not match the corpus");
    }
    PhaseScoreRow row;
    row.phase = ph.index;
    for (std::size_t i = ph.begin; i < ph.end; ++i) {
      ++row.counts[corpus[i].score];
      ++row.n;
    }
    t.phases.push_back(row);
  }
  return t;
}

}  // namespace revbomb
