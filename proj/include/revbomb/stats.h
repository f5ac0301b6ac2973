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


// Clusters of rhetorical objectivity and every aggregate table of the
// analysis.
//
// Medians are lower medians (the smaller middle value for even counts), so
// Med(D) is always an integer. Frequencies are over exactly the keyed
// subset; an empty subset yields NaN means and medians, rendered blank.

#ifndef REVBOMB_STATS_H_
#define REVBOMB_STATS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revbomb/corpus.h"
#include "revbomb/fakes.h"
#include "revbomb/langid.h"
#include "revbomb/phases.h"
#include "revbomb/table.h"
#include "revbomb/vocab.h"

namespace revbomb {

// 1: no label; 2: P, Q or M without T; 3: P, Q or M with T; 4: T alone.
enum class ClusterId { kNoLabel = 1, kValueOnly = 2, kMixed = 3, kTechOnly = 4 };
inline constexpr std::array<ClusterId, 4> kAllClusters = {
    ClusterId::kNoLabel, ClusterId::kValueOnly, ClusterId::kMixed,
    ClusterId::kTechOnly};

ClusterId ClusterOf(bool p, bool q, bool m, bool t);
// Missing labels count as absent.
ClusterId ClusterOf(const LabelAssignment &a);
std::string_view ClusterName(ClusterId c);

// Score bands used by the cluster figures.
enum class ScoreBand { kBelow2, k2To5, k6To9, k10 };
inline constexpr std::array<ScoreBand, 4> kAllBands = {
    ScoreBand::kBelow2, ScoreBand::k2To5, ScoreBand::k6To9, ScoreBand::k10};
ScoreBand BandOf(int score);
std::string_view BandName(ScoreBand b);

// Classes within value-laden reviews (P, Q or M; T ignored).
enum class ValueClass { kIdeological, kMetaOnly, kIdeologicalAndMeta };
inline constexpr std::array<ValueClass, 3> kAllValueClasses = {
    ValueClass::kIdeological, ValueClass::kMetaOnly,
    ValueClass::kIdeologicalAndMeta};
std::optional<ValueClass> ValueClassOf(bool p, bool q, bool m);
std::string_view ValueClassName(ValueClass c);

// Per-review values every table draws on.
struct ReviewFacts {
  int score = 0;
  std::size_t diversity = 0;  // D
  bool experienced = false;   // K = 1
  // Bit i set iff the review carries label i of AnalysisFrame::labels.
  std::uint32_t labels = 0;
  int phase = 0;  // 0 when no partition was given
  bool fake = false;
};

struct AnalysisFrame {
  std::vector<std::string> labels;
  std::vector<ReviewFacts> rows;  // corpus order
  int phase_count = 0;

  bool Has(std::size_t row, std::string_view label) const;
  // (P, Q, M, T) bits of a row; absent labels read as 0.
  std::array<bool, 4> Pqmt(std::size_t row) const;
  ClusterId Cluster(std::size_t row) const;
  std::optional<PeriodTag> Period(std::size_t row) const;
};

// `assignments` must follow corpus order. `partition` and `flags` are
// optional.
AnalysisFrame BuildFrame(const Corpus &corpus,
                         const std::vector<LabelAssignment> &assignments,
                         const PhasePartition *partition = nullptr,
                         const std::vector<FakeFlag> *flags = nullptr,
                         int threads = 0);

struct StatRow {
  std::vector<std::string> key;
  std::size_t n = 0;
  double mean_x = 0;
  double f_x10 = 0;
  double f_xlt2 = 0;
  double med_d = 0;  // lower median of D; NaN when n = 0
  double f_k1 = 0;
};

// Statistics over the rows of `frame` at the given indices.
StatRow Summarize(const AnalysisFrame &frame,
                  const std::vector<std::size_t> &indices,
                  std::vector<std::string> key = {});

std::size_t LowerMedian(std::vector<std::size_t> values);

// One row per label; non-exclusive.
std::vector<StatRow> LabelStats(const AnalysisFrame &frame);
// Rows for scores 0..10; key {score}.
std::vector<StatRow> ScoreTableRows(const AnalysisFrame &frame);

enum class CellDim { kSentiment, kPeriod };

struct CellStatsResult {
  // key {P, Q, M, T, dim value}; 16 cells x dim values, in cell order.
  std::vector<StatRow> rows;
  // Reviews left out: score 6 for sentiment, Mid phases for period.
  std::size_t excluded = 0;
};
CellStatsResult CellStats(const AnalysisFrame &frame, CellDim dim);

enum class ShiftMetric { kExperiencedShare, kMedianDiversity };

struct ShiftRow {
  ClusterId cluster{};
  ScoreBand band{};
  std::size_t n_early = 0;
  std::size_t n_late = 0;
  double early = 0;
  double late = 0;
  double delta = 0;  // late - early
  bool low_n = false;
};

inline constexpr std::size_t kLowN = 30;

// Early vs Late per cluster and score band. Throws ConfigError unless the
// frame has a partition of at least four phases.
std::vector<ShiftRow> ShiftReport(const AnalysisFrame &frame,
                                  ShiftMetric metric);

// Named tables.
Table Table1(const Corpus &tagged, const GroupingScheme &scheme);
Table Table3(const AnalysisFrame &frame);
Table TableA1(const AnalysisFrame &frame);
Table TableC1(const AnalysisFrame &frame);
Table TableC2(const AnalysisFrame &frame);
Table TableD1(const AnalysisFrame &frame);
Table Fig2(const TrendTable &trend);
Table Fig2Phases(const TrendTable &trend);
Table Fig4(const AnalysisFrame &frame);
Table Fig5(const AnalysisFrame &frame);
Table Fig6(const AnalysisFrame &frame);
Table FigC1(const AnalysisFrame &frame);

}  // namespace revbomb

#endif  // REVBOMB_STATS_H_
