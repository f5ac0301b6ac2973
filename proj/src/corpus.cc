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

#include "revbomb/corpus.h"

#include <algorithm>
#include <charconv>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "revbomb/data.h"
#include "revbomb/errors.h"
#include "revbomb/unicode.h"

namespace revbomb {

using json = nlohmann::json;

std::optional<Day> ParseDay(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return std::nullopt;
  auto num = [&](std::size_t pos, std::size_t len, int *out) {
    auto r = std::from_chars(s.data() + pos, s.data() + pos + len, *out);
    return r.ec == std::errc() && r.ptr == s.data() + pos + len;
  };
  int y, m, d;
  if (!num(0, 4, &y) || !num(5, 2, &m) || !num(8, 2, &d)) return std::nullopt;
  const std::chrono::year_month_day ymd{std::chrono::year(y),
                                        std::chrono::month(m),
                                        std::chrono::day(d)};
  if (!ymd.ok()) return std::nullopt;
  return Day(ymd);
}

std::string FormatDay(Day d) {
  const std::chrono::year_month_day ymd(d);
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()),
                unsigned(ymd.month()), unsigned(ymd.day()));
  return buf;
}

Corpus::Corpus(std::vector<Review> reviews, Provenance provenance)
    : reviews_(std::move(reviews)), provenance_(std::move(provenance)) {
  std::stable_sort(reviews_.begin(), reviews_.end(),
                   [](const Review &a, const Review &b) {
                     return a.day < b.day;
                   });
  index_.reserve(reviews_.size());
  for (std::size_t i = 0; i < reviews_.size(); ++i) {
    if (!index_.emplace(reviews_[i].id, i).second) {
      throw DataError("duplicate review id '" + reviews_[i].id + "'");
    }
  }
}

std::optional<std::size_t> Corpus::Find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

InputFormat ParseInputFormat(std::string_view name) {
  if (name == "delimited-table" || name == "csv") {
    return InputFormat::kDelimitedTable;
  }
  if (name == "record-lines" || name == "jsonl") {
    return InputFormat::kRecordLines;
  }
  throw ConfigError("unknown input format '" + std::string(name) + "'");
}

std::vector<DelimitedRecord> ParseDelimited(std::string_view text,
                                            char delim) {
  std::vector<DelimitedRecord> records;
  std::size_t line = 1;
  std::size_t pos = 0;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
  while (pos < text.size()) {
    DelimitedRecord rec;
    rec.line = line;
    std::string field;
    bool record_done = false;
    while (!record_done) {
      field.clear();
      if (pos < text.size() && text[pos] == '"') {
        const std::size_t open_line = line;
        ++pos;
        for (;;) {
          if (pos >= text.size()) {
            throw DataError("line " + std::to_string(open_line) +
                            ": unterminated quoted field");
          }
          const char c = text[pos++];
          if (c == '"') {
            if (pos < text.size() && text[pos] == '"') {
              field.push_back('"');
              ++pos;
            } else {
              break;
            }
          } else {
            if (c == '\n') ++line;
            field.push_back(c);
          }
        }
        // Anything between the closing quote and the delimiter is kept.
        while (pos < text.size() && text[pos] != delim && text[pos] != '\n' &&
               text[pos] != '\r') {
          field.push_back(text[pos++]);
        }
      } else {
        while (pos < text.size() && text[pos] != delim && text[pos] != '\n' &&
               text[pos] != '\r') {
          field.push_back(text[pos++]);
        }
      }
      rec.fields.push_back(field);
      if (pos < text.size() && text[pos] == delim) {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '\r') ++pos;
      if (pos < text.size() && text[pos] == '\n') ++pos;
      ++line;
      record_done = true;
    }
    const bool blank = rec.fields.size() == 1 && rec.fields[0].empty();
    if (!blank) records.push_back(std::move(rec));
  }
  return records;
}

std::string QuoteField(std::string_view field, char delim) {
  const bool needs_quotes =
      field.find_first_of(std::string{delim, '"', '\n', '\r'}) !=
          std::string_view::npos ||
      (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

namespace {

// Raw field values of one input record before validation.
struct RawRecord {
  std::size_t line = 0;
  // Set when the record could not be split into fields at all.
  std::optional<std::string> defect;
  std::optional<std::string> id;
  std::optional<std::string> username;
  std::optional<std::string> body;
  std::optional<std::string> score;
  std::optional<std::string> date;
  std::optional<std::string> prior_reviews;
};

std::optional<int> ParseInt(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

std::vector<RawRecord> ReadDelimited(std::string_view text) {
  auto rows = ParseDelimited(text);
  if (rows.empty()) return {};
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < rows[0].fields.size(); ++i) {
    col[rows[0].fields[i]] = i;
  }
  for (const char *req : {"username", "body", "score", "date"}) {
    if (!col.contains(req)) {
      throw DataError(std::string("missing required column '") + req + "'");
    }
  }
  auto get = [&](const DelimitedRecord &row,
                 const char *name) -> std::optional<std::string> {
    auto it = col.find(name);
    if (it == col.end() || it->second >= row.fields.size()) {
      return std::nullopt;
    }
    return row.fields[it->second];
  };
  std::vector<RawRecord> out;
  out.reserve(rows.size() - 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto &row = rows[i];
    RawRecord r;
    r.line = row.line;
    if (row.fields.size() != rows[0].fields.size()) {
      r.defect = "wrong number of fields";
      out.push_back(std::move(r));
      continue;
    }
    r.id = get(row, "id");
    r.username = get(row, "username");
    r.body = get(row, "body");
    r.score = get(row, "score");
    r.date = get(row, "date");
    r.prior_reviews = get(row, "prior_reviews");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RawRecord> ReadRecordLines(std::string_view text) {
  std::vector<RawRecord> out;
  std::size_t line = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view s = text.substr(start, end - start);
    start = end + 1;
    ++line;
    if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
    if (s.find_first_not_of(" \t") == std::string_view::npos) continue;
    RawRecord r;
    r.line = line;
    json j = json::parse(s, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      r.defect = "malformed record";
      out.push_back(std::move(r));
      continue;
    }
    auto get = [&](const char *key) -> std::optional<std::string> {
      auto it = j.find(key);
      if (it == j.end() || it->is_null()) return std::nullopt;
      if (it->is_string()) return it->get<std::string>();
      if (it->is_number_integer()) return std::to_string(it->get<long long>());
      return it->dump();
    };
    r.id = get("id");
    r.username = get("username");
    r.body = get("body");
    r.score = get("score");
    r.date = get("date");
    r.prior_reviews = get("prior_reviews");
    out.push_back(std::move(r));
  }
  return out;
}

std::string NowIso8601() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

IngestResult IngestReviews(std::istream &in, InputFormat format, bool strict,
                           std::string source) {
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw DataError("unreadable input stream " + source);
  const std::string text = ss.str();

  std::vector<RawRecord> raw = format == InputFormat::kDelimitedTable
                                   ? ReadDelimited(text)
                                   : ReadRecordLines(text);

  IngestResult result;
  result.records = raw.size();
  std::vector<Review> reviews;
  reviews.reserve(raw.size());
  std::set<std::string> seen_ids;
  std::set<std::tuple<std::string, Day, std::string>> seen_content;

  auto reject = [&](const RawRecord &r, std::string reason) {
    if (strict) {
      throw DataError("line " + std::to_string(r.line) + ": " + reason);
    }
    result.rejected.push_back({r.line, std::move(reason)});
  };

  std::size_t ordinal = 0;
  for (const RawRecord &r : raw) {
    ++ordinal;
    if (r.defect) {
      reject(r, *r.defect);
      continue;
    }
    if (!r.username || r.username->empty()) {
      reject(r, "missing username");
      continue;
    }
    if (!r.body) {
      reject(r, "missing body");
      continue;
    }
    if (!IsValidUtf8(*r.username) || !IsValidUtf8(*r.body)) {
      reject(r, "invalid UTF-8");
      continue;
    }
    const auto score = r.score ? ParseInt(*r.score) : std::nullopt;
    if (!score) {
      reject(r, "score not an integer");
      continue;
    }
    if (*score < kMinScore || *score > kMaxScore) {
      reject(r, "score out of range");
      continue;
    }
    const auto day = r.date ? ParseDay(*r.date) : std::nullopt;
    if (!day) {
      reject(r, "invalid date");
      continue;
    }
    int prior = 0;
    if (r.prior_reviews && !r.prior_reviews->empty()) {
      const auto p = ParseInt(*r.prior_reviews);
      if (!p) {
        reject(r, "prior_reviews not an integer");
        continue;
      }
      if (*p < 0) {
        reject(r, "negative prior_reviews");
        continue;
      }
      prior = *p;
    }
    std::string id =
        r.id && !r.id->empty() ? *r.id : "r" + std::to_string(ordinal);
    if (seen_ids.contains(id)) {
      reject(r, "duplicate id '" + id + "'");
      continue;
    }
    const std::size_t chars = CharCount(*r.body);
    if (chars < kMinBodyChars) {
      if (strict) {
        reject(r, "body shorter than 75 characters");
        continue;
      }
      result.warnings.push_back("line " + std::to_string(r.line) +
                                ": body shorter than 75 characters");
    }
    if (!seen_content.emplace(*r.username, *day, *r.body).second) {
      result.warnings.push_back("line " + std::to_string(r.line) +
                                ": duplicate (username, day, body) record");
    }
    seen_ids.insert(id);
    Review rev;
    rev.id = std::move(id);
    rev.username = *r.username;
    rev.body = *r.body;
    rev.score = *score;
    rev.day = *day;
    rev.prior_reviews = prior;
    reviews.push_back(std::move(rev));
  }
  result.corpus =
      Corpus(std::move(reviews), Provenance{std::move(source), NowIso8601()});
  return result;
}

IngestResult IngestFile(const std::string &path, InputFormat format,
                        bool strict) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open input '" + path + "'");
  return IngestReviews(in, format, strict, path);
}

void WriteDelimitedTable(const Corpus &corpus, std::ostream &out) {
  out << "id,username,body,score,date,prior_reviews\n";
  for (const Review &r : corpus) {
    out << QuoteField(r.id) << ',' << QuoteField(r.username) << ','
        << QuoteField(r.body) << ',' << r.score << ',' << FormatDay(r.day)
        << ',' << r.prior_reviews << '\n';
  }
}

void WriteRecordLines(const Corpus &corpus, std::ostream &out) {
  for (const Review &r : corpus) {
    json j = {{"id", r.id},
              {"username", r.username},
              {"body", r.body},
              {"score", r.score},
              {"date", FormatDay(r.day)},
              {"prior_reviews", r.prior_reviews}};
    out << j.dump() << '\n';
  }
}

void WriteRejections(const std::vector<Rejection> &rejected,
                     std::ostream &out) {
  for (const Rejection &r : rejected) {
    out << json{{"line", r.line}, {"reason", r.reason}}.dump() << '\n';
  }
}

HistoryResult AttachUserHistory(const Corpus &corpus,
                                const std::map<std::string, int> &history) {
  for (const auto &[user, k] : history) {
    if (k < 0) {
      throw DataError("negative prior review count for user '" + user + "'");
    }
  }
  std::size_t missing = 0;
  Corpus out = corpus.Transform([&](Review &r) {
    auto it = history.find(r.username);
    if (it == history.end()) {
      r.prior_reviews = 0;
      ++missing;
    } else {
      r.prior_reviews = it->second;
    }
  });
  return {std::move(out), missing};
}

std::map<std::string, int> LoadUserHistory(const std::string &path) {
  const auto rows = ParseDelimited(ReadFile(path));
  std::map<std::string, int> history;
  if (rows.empty()) return history;
  const auto &header = rows[0].fields;
  auto ucol = std::find(header.begin(), header.end(), "username");
  auto kcol = std::find(header.begin(), header.end(), "prior_reviews");
  if (ucol == header.end() || kcol == header.end()) {
    throw DataError(path + ": history needs username,prior_reviews columns");
  }
  const std::size_t ui = ucol - header.begin();
  const std::size_t ki = kcol - header.begin();
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto &f = rows[i].fields;
    if (f.size() != header.size()) {
      throw DataError(path + ": line " + std::to_string(rows[i].line) +
                      ": wrong number of fields");
    }
    const auto k = ParseInt(f[ki]);
    if (!k) {
      throw DataError(path + ": line " + std::to_string(rows[i].line) +
                      ": prior_reviews not an integer");
    }
    history[f[ui]] = *k;
  }
  return history;
}

double ExperiencedShare(const Corpus &corpus) {
  if (corpus.empty()) return 0;
  std::size_t k1 = 0;
  for (const Review &r : corpus) k1 += IsExperienced(r);
  return static_cast<double>(k1) / corpus.size();
}

}  // namespace revbomb
