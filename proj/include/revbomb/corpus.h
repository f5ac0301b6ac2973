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

// Review corpus data model and file ingestion.

#ifndef REVBOMB_CORPUS_H_
#define REVBOMB_CORPUS_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace revbomb {

using Day = std::chrono::sys_days;

// Parses YYYY-MM-DD; nullopt unless the date exists.
std::optional<Day> ParseDay(std::string_view s);
std::string FormatDay(Day d);

inline constexpr int kMinScore = 0;
inline constexpr int kMaxScore = 10;
inline constexpr std::size_t kMinBodyChars = 75;

struct LanguageTag {
  std::string code;
  double confidence = 0;
  bool symbols_only = false;
  bool overridden = false;

  bool operator==(const LanguageTag &) const = default;
};

// Fake-review cues, as a bit set.
enum Cue : std::uint8_t {
  kNumericUsername = 1 << 0,
  kNearDuplicate = 1 << 1,
  kRepeatedToken = 1 << 2,
  kRepeatedChar = 1 << 3,
};
using CueSet = std::uint8_t;

struct Review {
  std::string id;
  std::string username;
  std::string body;
  int score = 0;
  Day day{};
  // Number of the author's earlier reviews on the platform (k).
  int prior_reviews = 0;
  std::optional<LanguageTag> language;
  std::optional<CueSet> cues;

  bool operator==(const Review &) const = default;
};

// K = 1 iff the author had reviewed anything before.
inline bool IsExperienced(const Review &r) { return r.prior_reviews >= 1; }

struct Provenance {
  std::string source;
  std::string ingested_at;  // ISO-8601 UTC; never written into data tables
};

// Immutable, ordered by (day, ingestion order). Ids are unique.
class Corpus {
 public:
  Corpus() = default;
  // Reviews are given in ingestion order. Throws DataError on duplicate ids.
  explicit Corpus(std::vector<Review> reviews, Provenance provenance = {});

  std::size_t size() const { return reviews_.size(); }
  bool empty() const { return reviews_.empty(); }
  const Review &operator[](std::size_t i) const { return reviews_[i]; }
  const std::vector<Review> &reviews() const { return reviews_; }
  auto begin() const { return reviews_.begin(); }
  auto end() const { return reviews_.end(); }
  const Provenance &provenance() const { return provenance_; }

  // Position of the review with this id, if present.
  std::optional<std::size_t> Find(std::string_view id) const;

  // Copy with reviews[i] replaced by f(reviews[i]); order is preserved.
  template <typename F>
  Corpus Transform(F &&f) const {
    Corpus out = *this;
    for (auto &r : out.reviews_) f(r);
    return out;
  }

  // Sub-corpus of the reviews for which keep(r) holds, in corpus order.
  template <typename Pred>
  Corpus Filter(Pred &&keep) const {
    std::vector<Review> kept;
    for (const auto &r : reviews_) {
      if (keep(r)) kept.push_back(r);
    }
    return Corpus(std::move(kept), provenance_);
  }

 private:
  std::vector<Review> reviews_;
  std::unordered_map<std::string, std::size_t> index_;
  Provenance provenance_;
};

enum class InputFormat { kDelimitedTable, kRecordLines };

// Accepts "delimited-table"/"csv" and "record-lines"/"jsonl".
InputFormat ParseInputFormat(std::string_view name);

struct Rejection {
  std::size_t line = 0;
  std::string reason;
};

struct IngestResult {
  Corpus corpus;
  std::vector<Rejection> rejected;
  std::vector<std::string> warnings;
  std::size_t records = 0;  // valid + rejected
};

// Delimited table: UTF-8, header row with username, body, score, date and
// optionally id and prior_reviews; RFC 4180 quoting. Record lines: one JSON
// object per line with the same keys. Without an id column, ids are "r<n>"
// for the n-th data record.
//
// In strict mode bodies under 75 characters are rejected and the first
// invalid record throws DataError("line N: reason"); otherwise invalid
// records go to `rejected` and short bodies only warn.
IngestResult IngestReviews(std::istream &in, InputFormat format, bool strict,
                           std::string source = "<stream>");
IngestResult IngestFile(const std::string &path, InputFormat format,
                        bool strict);

void WriteDelimitedTable(const Corpus &corpus, std::ostream &out);
void WriteRecordLines(const Corpus &corpus, std::ostream &out);
void WriteRejections(const std::vector<Rejection> &rejected,
                     std::ostream &out);

struct HistoryResult {
  Corpus corpus;
  std::size_t missing = 0;  // reviews whose author was not in the map
};

// Sets prior_reviews from the map; absent users get 0 and are counted.
// Throws DataError on negative counts.
HistoryResult AttachUserHistory(const Corpus &corpus,
                                const std::map<std::string, int> &history);

// `username,prior_reviews` delimited table.
std::map<std::string, int> LoadUserHistory(const std::string &path);

// Share of reviews with K = 1; 0 for an empty corpus.
double ExperiencedShare(const Corpus &corpus);

// RFC 4180 helpers shared by the table readers and writers.
struct DelimitedRecord {
  std::size_t line = 0;  // 1-based physical line where the record starts
  std::vector<std::string> fields;
};
// Throws DataError on an unterminated quoted field.
std::vector<DelimitedRecord> ParseDelimited(std::string_view text,
                                            char delim = ',');
std::string QuoteField(std::string_view field, char delim = ',');

}  // namespace revbomb

#endif  // REVBOMB_CORPUS_H_
