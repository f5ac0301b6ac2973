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


#include "revbomb/stats.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include "revbomb/errors.h"
#include "revbomb/parallel.h"
#include "revbomb/text.h"

namespace revbomb {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::array<std::string_view, 4> kPqmt = {"P", "Q", "M", "T"};

Cell Int(std::size_t v) { return static_cast<std::int64_t>(v); }
Cell Str(std::string_view s) { return std::string(s); }

void RequirePartition(const AnalysisFrame &frame, int min_phases,
                      std::string_view what) {
  if (frame.phase_count < min_phases) {
    throw ConfigError(std::string(what) + " needs a partition of at least " +
                      std::to_string(min_phases) + " phases");
  }
}

}  // namespace

ClusterId ClusterOf(bool p, bool q, bool m, bool t) {
  const bool value = p || q || m;
  if (value) return t ? ClusterId::kMixed : ClusterId::kValueOnly;
  return t ? ClusterId::kTechOnly : ClusterId::kNoLabel;
}

ClusterId ClusterOf(const LabelAssignment &a) {
  return ClusterOf(a.Has("P"), a.Has("Q"), a.Has("M"), a.Has("T"));
}

std::string_view ClusterName(ClusterId c) {
  switch (c) {
    case ClusterId::kNoLabel:
      return "NoLabel";
    case ClusterId::kValueOnly:
      return "ValueOnly";
    case ClusterId::kMixed:
      return "Mixed";
    case ClusterId::kTechOnly:
      return "TechOnly";
  }
  return "";
}

ScoreBand BandOf(int score) {
  if (score < 2) return ScoreBand::kBelow2;
  if (score <= 5) return ScoreBand::k2To5;
  if (score <= 9) return ScoreBand::k6To9;
  return ScoreBand::k10;
}

std::string_view BandName(ScoreBand b) {
  switch (b) {
    case ScoreBand::kBelow2:
      return "x<2";
    case ScoreBand::k2To5:
      return "2-5";
    case ScoreBand::k6To9:
      return "6-9";
    case ScoreBand::k10:
      return "x=10";
  }
  return "";
}

std::optional<ValueClass> ValueClassOf(bool p, bool q, bool m) {
  const bool ideological = p || q;
  if (ideological && m) return ValueClass::kIdeologicalAndMeta;
  if (ideological) return ValueClass::kIdeological;
  if (m) return ValueClass::kMetaOnly;
  return std::nullopt;
}

std::string_view ValueClassName(ValueClass c) {
  switch (c) {
    case ValueClass::kIdeological:
      return "PoliticsOrLGBTQ";
    case ValueClass::kMetaOnly:
      return "MetaOnly";
    case ValueClass::kIdeologicalAndMeta:
      return "IdeologicalAndMeta";
  }
  return "";
}

bool AnalysisFrame::Has(std::size_t row, std::string_view label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return (rows[row].labels >> i) & 1u;
  }
  return false;
}

std::array<bool, 4> AnalysisFrame::Pqmt(std::size_t row) const {
  return {Has(row, "P"), Has(row, "Q"), Has(row, "M"), Has(row, "T")};
}

ClusterId AnalysisFrame::Cluster(std::size_t row) const {
  const auto b = Pqmt(row);
  return ClusterOf(b[0], b[1], b[2], b[3]);
}

std::optional<PeriodTag> AnalysisFrame::Period(std::size_t row) const {
  if (phase_count == 0) return std::nullopt;
  return PeriodOfPhase(rows[row].phase, phase_count);
}

AnalysisFrame BuildFrame(const Corpus &corpus,
                         const std::vector<LabelAssignment> &assignments,
                         const PhasePartition *partition,
                         const std::vector<FakeFlag> *flags, int threads) {
  if (assignments.size() != corpus.size()) {
    throw DataError("label assignments do not cover the corpus");
  }
  AnalysisFrame frame;
  if (!assignments.empty()) {
    for (const auto &[label, _] : assignments[0].labels) {
      frame.labels.push_back(label);
    }
  }
  // Keep P, Q, M, T first, in that order, when present.
  std::stable_sort(frame.labels.begin(), frame.labels.end(),
                   [](const std::string &a, const std::string &b) {
                     auto rank = [](const std::string &s) {
                       auto it = std::find(kPqmt.begin(), kPqmt.end(), s);
                       return static_cast<int>(it - kPqmt.begin());
                     };
                     return rank(a) < rank(b);
                   });
  if (frame.labels.size() > 32) throw ConfigError("at most 32 labels");
  std::unordered_map<std::string, bool> fake;
  if (flags) {
    for (const auto &f : *flags) fake[f.review_id] = f.cues != 0;
  }
  frame.phase_count = partition ? partition->count() : 0;
  frame.rows.resize(corpus.size());
  ParallelChunks(corpus.size(), threads, [&](int, std::size_t begin,
                                             std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Review &r = corpus[i];
      const LabelAssignment &a = assignments[i];
      if (a.review_id != r.id) {
        throw DataError("label assignment for '" + a.review_id +
                        "' out of corpus order");
      }
      ReviewFacts &f = frame.rows[i];
      f.score = r.score;
      f.diversity = LexicalDiversity(r.body);
      f.experienced = IsExperienced(r);
      for (std::size_t l = 0; l < frame.labels.size(); ++l) {
        if (a.Has(frame.labels[l])) f.labels |= 1u << l;
      }
      f.phase = partition ? partition->PhaseOf(i) : 0;
      if (auto it = fake.find(r.id); it != fake.end()) f.fake = it->second;
    }
  });
  return frame;
}

std::size_t LowerMedian(std::vector<std::size_t> values) {
  if (values.empty()) throw std::logic_error("median of nothing");
  const std::size_t mid = (values.size() - 1) / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  return values[mid];
}

StatRow Summarize(const AnalysisFrame &frame,
                  const std::vector<std::size_t> &indices,
                  std::vector<std::string> key) {
  StatRow row;
  row.key = std::move(key);
  row.n = indices.size();
  if (indices.empty()) {
    row.mean_x = row.f_x10 = row.f_xlt2 = row.med_d = row.f_k1 = kNaN;
    return row;
  }
  long long sum = 0;
  std::size_t tens = 0, low = 0, experienced = 0;
  std::vector<std::size_t> d;
  d.reserve(indices.size());
  for (std::size_t i : indices) {
    const ReviewFacts &f = frame.rows[i];
    sum += f.score;
    tens += f.score == 10;
    low += f.score < 2;
    experienced += f.experienced;
    d.push_back(f.diversity);
  }
  const double n = static_cast<double>(indices.size());
  row.mean_x = static_cast<double>(sum) / n;
  row.f_x10 = static_cast<double>(tens) / n;
  row.f_xlt2 = static_cast<double>(low) / n;
  row.f_k1 = static_cast<double>(experienced) / n;
  row.med_d = static_cast<double>(LowerMedian(std::move(d)));
  return row;
}

std::vector<StatRow> LabelStats(const AnalysisFrame &frame) {
  std::vector<StatRow> out;
  for (const auto &label : frame.labels) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < frame.rows.size(); ++i) {
      if (frame.Has(i, label)) idx.push_back(i);
    }
    out.push_back(Summarize(frame, idx, {label}));
  }
  return out;
}

std::vector<StatRow> ScoreTableRows(const AnalysisFrame &frame) {
  std::array<std::vector<std::size_t>, kMaxScore + 1> by_score;
  for (std::size_t i = 0; i < frame.rows.size(); ++i) {
    by_score.at(frame.rows[i].score).push_back(i);
  }
  std::vector<StatRow> out;
  for (int x = kMinScore; x <= kMaxScore; ++x) {
    out.push_back(Summarize(frame, by_score[x], {std::to_string(x)}));
  }
  return out;
}

CellStatsResult CellStats(const AnalysisFrame &frame, CellDim dim) {
  if (dim == CellDim::kPeriod) RequirePartition(frame, 1, "period cells");
  const std::vector<std::string> values =
      dim == CellDim::kSentiment
          ? std::vector<std::string>{"Negative", "Positive"}
          : std::vector<std::string>{"Early", "Late"};
  // cell index = P + 2Q + 4M + 8T; value index 0/1.
  std::array<std::array<std::vector<std::size_t>, 2>, 16> groups;
  CellStatsResult result;
  for (std::size_t i = 0; i < frame.rows.size(); ++i) {
    int v = -1;
    if (dim == CellDim::kSentiment) {
      const auto s = BinarySentimentOf(frame.rows[i].score);
      if (s != BinarySentiment::kBoundary) {
        v = s == BinarySentiment::kNegative ? 0 : 1;
      }
    } else {
      const auto p = *frame.Period(i);
      if (p != PeriodTag::kMid) v = p == PeriodTag::kEarly ? 0 : 1;
    }
    if (v < 0) {
      ++result.excluded;
      continue;
    }
    const auto b = frame.Pqmt(i);
    groups[b[0] + 2 * b[1] + 4 * b[2] + 8 * b[3]][v].push_back(i);
  }
  // Rows ordered by number of labels carried, then P, Q, M, T precedence.
  std::vector<int> cells(16);
  for (int c = 0; c < 16; ++c) cells[c] = c;
  std::stable_sort(cells.begin(), cells.end(), [](int a, int b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    auto weight = [](int c) {
      return ((c & 1) << 3) | ((c & 2) << 1) | ((c & 4) >> 1) | ((c & 8) >> 3);
    };
    return weight(a) > weight(b);
  });
  for (int c : cells) {
    for (int v = 0; v < 2; ++v) {
      result.rows.push_back(Summarize(
          frame, groups[c][v],
          {std::to_string(c & 1), std::to_string((c >> 1) & 1),
           std::to_string((c >> 2) & 1), std::to_string((c >> 3) & 1),
           values[v]}));
    }
  }
  return result;
}

std::vector<ShiftRow> ShiftReport(const AnalysisFrame &frame,
                                  ShiftMetric metric) {
  RequirePartition(frame, 4, "shift report");
  std::map<std::pair<int, int>, std::array<std::vector<std::size_t>, 2>>
      groups;
  for (std::size_t i = 0; i < frame.rows.size(); ++i) {
    const PeriodTag p = *frame.Period(i);
    if (p == PeriodTag::kMid) continue;
    groups[{static_cast<int>(frame.Cluster(i)),
            static_cast<int>(BandOf(frame.rows[i].score))}]
          [p == PeriodTag::kEarly ? 0 : 1]
              .push_back(i);
  }
  std::vector<ShiftRow> out;
  for (ClusterId c : kAllClusters) {
    for (ScoreBand b : kAllBands) {
      const auto &g = groups[{static_cast<int>(c), static_cast<int>(b)}];
      const StatRow early = Summarize(frame, g[0]);
      const StatRow late = Summarize(frame, g[1]);
      ShiftRow row;
      row.cluster = c;
      row.band = b;
      row.n_early = early.n;
      row.n_late = late.n;
      row.early =
          metric == ShiftMetric::kExperiencedShare ? early.f_k1 : early.med_d;
      row.late =
          metric == ShiftMetric::kExperiencedShare ? late.f_k1 : late.med_d;
      row.delta = row.late - row.early;
      row.low_n = early.n < kLowN || late.n < kLowN;
      out.push_back(row);
    }
  }
  return out;
}

namespace {

std::string_view Direction(double delta) {
  if (std::isnan(delta)) return "n/a";
  if (delta > 0) return "increase";
  if (delta < 0) return "decrease";
  return "none";
}

Table ShiftTable(const AnalysisFrame &frame, ShiftMetric metric,
                 std::string name, std::string title) {
  Table t;
  t.name = std::move(name);
  t.title = std::move(title);
  t.columns = {"cluster", "band",  "n_early", "n_late",   "early",
               "late",    "delta", "direction", "low_n"};
  for (const ShiftRow &r : ShiftReport(frame, metric)) {
    t.AddRow({Str(ClusterName(r.cluster)), Str(BandName(r.band)),
              Int(r.n_early), Int(r.n_late), r.early, r.late, r.delta,
              Str(Direction(r.delta)), Int(r.low_n ? 1 : 0)});
  }
  t.notes.push_back("Early = phases 1-2, Late = the last two phases. low_n = 1 "
                    "when either side has fewer than " +
                    std::to_string(kLowN) + " reviews.");
  return t;
}

}  // namespace

Table Table1(const Corpus &tagged, const GroupingScheme &scheme) {
  Table t;
  t.name = "table1";
  t.title = "Statistics on languages";
  t.columns = {"language", "n", "mean_x"};
  for (const auto &row : LanguageSummary(tagged, scheme)) {
    t.AddRow({Str(row.group), Int(row.n), row.mean_score});
  }
  return t;
}

Table Table3(const AnalysisFrame &frame) {
  Table t;
  t.name = "table3";
  t.title = "Scoring behaviour across labels";
  t.columns = {"label", "n", "mean_x", "f_x10", "f_xlt2"};
  for (const auto &r : LabelStats(frame)) {
    t.AddRow({Str(r.key[0]), Int(r.n), r.mean_x, r.f_x10, r.f_xlt2});
  }
  return t;
}

Table TableA1(const AnalysisFrame &frame) {
  Table t;
  t.name = "tableA1";
  t.title = "Scores: counts, relative frequency, median D, f(K=1)";
  t.columns = {"x", "n", "f", "med_d", "f_k1"};
  const double total = static_cast<double>(frame.rows.size());
  for (const auto &r : ScoreTableRows(frame)) {
    t.AddRow({static_cast<std::int64_t>(std::stoi(r.key[0])), Int(r.n),
              total > 0 ? static_cast<double>(r.n) / total : kNaN, r.med_d,
              r.f_k1});
  }
  t.notes.push_back("Med(D) is the lower median.");
  return t;
}

Table TableC1(const AnalysisFrame &frame) {
  const CellStatsResult cells = CellStats(frame, CellDim::kSentiment);
  Table t;
  t.name = "tableC1";
  t.title = "Sentiment and effort across thematic labels";
  t.columns = {"P", "Q", "M", "T", "sentiment", "n", "med_d", "f_k1"};
  for (const auto &r : cells.rows) {
    t.AddRow({Str(r.key[0]), Str(r.key[1]), Str(r.key[2]), Str(r.key[3]),
              Str(r.key[4]), Int(r.n), r.med_d, r.f_k1});
  }
  t.notes.push_back("Negative: x < 6; Positive: x > 6. " +
                    std::to_string(cells.excluded) +
                    " reviews with x = 6 are excluded.");
  return t;
}

Table TableC2(const AnalysisFrame &frame) {
  const CellStatsResult cells = CellStats(frame, CellDim::kPeriod);
  Table t;
  t.name = "tableC2";
  t.title = "Effort across thematic labels, Early vs Late phases";
  t.columns = {"P", "Q", "M", "T", "period", "n", "mean_x", "med_d", "f_k1"};
  for (const auto &r : cells.rows) {
    t.AddRow({Str(r.key[0]), Str(r.key[1]), Str(r.key[2]), Str(r.key[3]),
              Str(r.key[4]), Int(r.n), r.mean_x, r.med_d, r.f_k1});
  }
  t.notes.push_back(std::to_string(cells.excluded) +
                    " reviews in Mid phases are excluded.");
  return t;
}

Table TableD1(const AnalysisFrame &frame) {
  Table t;
  t.name = "tableD1";
  t.title = "Statistics on detected fakes";
  t.columns = {"fake", "n", "med_d", "f_k1", "mean_x", "early", "late"};
  for (bool fake : {true, false}) {
    std::vector<std::size_t> idx;
    std::size_t early = 0, late = 0;
    for (std::size_t i = 0; i < frame.rows.size(); ++i) {
      if (frame.rows[i].fake != fake) continue;
      idx.push_back(i);
      if (auto p = frame.Period(i)) {
        early += *p == PeriodTag::kEarly;
        late += *p == PeriodTag::kLate;
      }
    }
    const StatRow r = Summarize(frame, idx);
    const bool shares = frame.phase_count > 0 && !idx.empty();
    t.AddRow({Str(fake ? "Yes" : "No"), Int(r.n), r.med_d, r.f_k1, r.mean_x,
              shares ? static_cast<double>(early) / idx.size() : kNaN,
              shares ? static_cast<double>(late) / idx.size() : kNaN});
  }
  t.notes.push_back(
      "early/late: share of the row's reviews in Early/Late phases.");
  return t;
}

Table Fig2(const TrendTable &trend) {
  Table t;
  t.name = "fig2";
  t.title = "Daily review counts by sentiment";
  t.columns = {"day", "bucket", "count"};
  for (const DayRow &d : trend.days) {
    for (SentimentBucket b : kAllBuckets) {
      t.AddRow({FormatDay(d.day), Str(BucketName(b)),
                Int(d.counts[static_cast<int>(b)])});
    }
  }
  return t;
}

Table Fig2Phases(const TrendTable &trend) {
  Table t;
  t.name = "fig2_phases";
  t.title = "Relative score frequencies per phase";
  t.columns = {"phase", "score", "rel_freq"};
  for (const PhaseScoreRow &p : trend.phases) {
    for (int x = kMinScore; x <= kMaxScore; ++x) {
      t.AddRow({static_cast<std::int64_t>(p.phase),
                static_cast<std::int64_t>(x), p.RelFreq(x)});
    }
  }
  return t;
}

Table Fig4(const AnalysisFrame &frame) {
  RequirePartition(frame, 1, "fig4");
  std::map<std::tuple<int, int, int>, std::size_t> n;
  std::map<std::pair<int, int>, std::size_t> band_total;
  for (std::size_t i = 0; i < frame.rows.size(); ++i) {
    const PeriodTag p = *frame.Period(i);
    if (p == PeriodTag::kMid) continue;
    const int b = static_cast<int>(BandOf(frame.rows[i].score));
    ++n[{static_cast<int>(p), b, static_cast<int>(frame.Cluster(i))}];
    ++band_total[{static_cast<int>(p), b}];
  }
  Table t;
  t.name = "fig4";
  t.title = "Prevalence of clusters by score band";
  t.columns = {"period", "band", "cluster", "n", "share"};
  for (PeriodTag p : {PeriodTag::kEarly, PeriodTag::kLate}) {
    for (ScoreBand b : kAllBands) {
      const std::size_t total =
          band_total[{static_cast<int>(p), static_cast<int>(b)}];
      for (ClusterId c : kAllClusters) {
        const std::size_t k = n[{static_cast<int>(p), static_cast<int>(b),
                                 static_cast<int>(c)}];
        t.AddRow({Str(PeriodName(p)), Str(BandName(b)), Str(ClusterName(c)),
                  Int(k),
                  total ? static_cast<double>(k) / total : kNaN});
      }
    }
  }
  t.notes.push_back("share: fraction of the period and band's reviews in that cluster.");
  return t;
}

Table Fig5(const AnalysisFrame &frame) {
  return ShiftTable(frame, ShiftMetric::kExperiencedShare, "fig5",
                    "Early vs Late share of experienced users (K=1)");
}

Table Fig6(const AnalysisFrame &frame) {
  return ShiftTable(frame, ShiftMetric::kMedianDiversity, "fig6",
                    "Early vs Late median lexical diversity");
}

Table FigC1(const AnalysisFrame &frame) {
  RequirePartition(frame, 1, "figC1");
  std::map<std::tuple<int, int, int>, std::size_t> n;
  std::map<std::pair<int, int>, std::size_t> total;
  for (std::size_t i = 0; i < frame.rows.size(); ++i) {
    const PeriodTag p = *frame.Period(i);
    if (p == PeriodTag::kMid) continue;
    const auto b = frame.Pqmt(i);
    const auto cls = ValueClassOf(b[0], b[1], b[2]);
    if (!cls) continue;
    const int band = static_cast<int>(BandOf(frame.rows[i].score));
    ++n[{static_cast<int>(p), band, static_cast<int>(*cls)}];
    ++total[{static_cast<int>(p), band}];
  }
  Table t;
  t.name = "figC1";
  t.title = "Classes of value-laden reviews by score band";
  t.columns = {"period", "band", "class", "n", "share"};
  for (PeriodTag p : {PeriodTag::kEarly, PeriodTag::kLate}) {
    for (ScoreBand b : kAllBands) {
      const std::size_t tot = total[{static_cast<int>(p), static_cast<int>(b)}];
      for (ValueClass c : kAllValueClasses) {
        const std::size_t k = n[{static_cast<int>(p), static_cast<int>(b),
                                 static_cast<int>(c)}];
        t.AddRow({Str(PeriodName(p)), Str(BandName(b)), Str(ValueClassName(c)),
                  Int(k), tot ? static_cast<double>(k) / tot : kNaN});
      }
    }
  }
  t.notes.push_back(
      "Value-laden: P, Q or M present. share: fraction of value-laden "
      "reviews of that period and band.");
  return t;
}

}  // namespace revbomb
