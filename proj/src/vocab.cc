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


#include "revbomb/vocab.h"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "revbomb/data.h"
#include "revbomb/errors.h"
#include "revbomb/parallel.h"
#include "revbomb/unicode.h"

namespace revbomb {

namespace {

constexpr std::string_view kRoundTag = "@round=";

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool AtWordStart(std::string_view text, std::size_t pos) {
  return pos == 0 || !IsWordChar(PrevCodePoint(text, pos));
}

// Surface matches at a boundary position not claimed by a longer exclusion.
bool MatchWithExclusions(std::string_view lowered, std::string_view surface,
                         const std::vector<std::string> &exclusions) {
  for (std::size_t pos = lowered.find(surface); pos != std::string_view::npos;
       pos = lowered.find(surface, pos + 1)) {
    if (!AtWordStart(lowered, pos)) continue;
    const bool blocked = std::any_of(
        exclusions.begin(), exclusions.end(), [&](const std::string &ex) {
          return ex.size() > surface.size() &&
                 lowered.compare(pos, ex.size(), ex) == 0;
        });
    if (!blocked) return true;
  }
  return false;
}

struct ShippedFile {
  std::string_view label;
  std::string_view name;
};

constexpr ShippedFile kShipped[] = {
    {"P", "vocab/politics_P.txt"},
    {"Q", "vocab/lgbtq_Q.txt"},
    {"M", "vocab/meta_M.txt"},
    {"T", "vocab/technical_T.txt"},
};

}  // namespace

std::string CanonicalSurface(std::string_view raw) {
  std::string s = Normalize(raw).lowered;
  if (s.empty()) throw DataError("empty vocabulary surface");
  return s;
}

bool Vocabulary::Contains(std::string_view surface) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const VocabEntry &e) { return e.surface == surface; });
}

bool Vocabulary::Excludes(std::string_view token) const {
  return std::find(exclusions_.begin(), exclusions_.end(), token) !=
         exclusions_.end();
}

std::size_t Vocabulary::CountOrigin(Origin origin) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(),
                    [&](const VocabEntry &e) { return e.origin == origin; }));
}

int Vocabulary::LastRound() const {
  int last = 0;
  for (const auto &e : entries_) last = std::max(last, e.added_round);
  return last;
}

void Vocabulary::Add(VocabEntry entry) {
  entry.surface = CanonicalSurface(entry.surface);
  if (Contains(entry.surface)) {
    throw DataError("duplicate surface '" + entry.surface + "' in vocabulary " +
                    label_);
  }
  if (entry.origin == Origin::kPrior) entry.added_round = 0;
  entries_.push_back(std::move(entry));
  ++version_;
}

void Vocabulary::AddAll(const std::vector<VocabEntry> &entries) {
  std::set<std::string> seen;
  std::vector<VocabEntry> canonical;
  for (VocabEntry e : entries) {
    e.surface = CanonicalSurface(e.surface);
    if (Contains(e.surface) || !seen.insert(e.surface).second) {
      throw DataError("duplicate surface '" + e.surface + "' in vocabulary " +
                      label_);
    }
    canonical.push_back(std::move(e));
  }
  if (canonical.empty()) return;
  for (auto &e : canonical) {
    if (e.origin == Origin::kPrior) e.added_round = 0;
    entries_.push_back(std::move(e));
  }
  ++version_;
}

void Vocabulary::AddExclusion(std::string_view surface) {
  std::string s = CanonicalSurface(surface);
  if (Excludes(s)) {
    throw DataError("duplicate exclusion '" + s + "' in vocabulary " + label_);
  }
  exclusions_.push_back(std::move(s));
  ++version_;
}

bool Vocabulary::Matches(std::string_view lowered) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto &e) {
    return MatchWithExclusions(lowered, e.surface, exclusions_);
  });
}

bool MatchEntry(std::string_view lowered, std::string_view surface) {
  if (surface.empty()) return false;
  return MatchWithExclusions(lowered, surface, {});
}

bool MatchEntry(const NormText &body, const VocabEntry &entry) {
  return MatchEntry(body.lowered, entry.surface);
}

VocabularyLoad ParseVocabulary(std::string_view contents, bool strict) {
  enum class Section { kNone, kPrior, kPosterior, kExclude };
  VocabularyLoad out;
  Vocabulary &v = out.vocabulary;
  Section section = Section::kNone;
  bool have_label = false;
  std::uint64_t version = 0;
  std::vector<VocabEntry> entries;
  std::vector<std::string> exclusions;
  std::set<std::string, std::less<>> seen, seen_excl;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    std::string_view line = Trim(contents.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto fail = [&](const std::string &what) {
      throw DataError("vocabulary line " + std::to_string(line_no) + ": " +
                      what);
    };
    if (line == "[prior]") {
      section = Section::kPrior;
    } else if (line == "[posterior]") {
      section = Section::kPosterior;
    } else if (line == "[exclude]") {
      section = Section::kExclude;
    } else if (line.front() == '[') {
      fail("unknown section " + std::string(line));
    } else if (section == Section::kNone) {
      if (line.starts_with("label=")) {
        std::string label(Trim(line.substr(6)));
        if (label.empty()) fail("empty label");
        v = Vocabulary(label);
        have_label = true;
      } else if (line.starts_with("version=")) {
        try {
          version = std::stoull(std::string(line.substr(8)));
        } catch (const std::exception &) {
          fail("bad version");
        }
      } else {
        fail("expected label=, version= or a section header");
      }
    } else {
      int round = section == Section::kPosterior ? 1 : 0;
      std::string_view surface = line;
      if (auto tag = line.rfind(kRoundTag); tag != std::string_view::npos) {
        if (section != Section::kPosterior) fail("@round outside [posterior]");
        const std::string digits(Trim(line.substr(tag + kRoundTag.size())));
        if (digits.empty() ||
            !std::all_of(digits.begin(), digits.end(),
                         [](char c) { return c >= '0' && c <= '9'; })) {
          fail("bad @round value");
        }
        round = std::stoi(digits);
        surface = Trim(line.substr(0, tag));
      }
      std::string canonical = Normalize(surface).lowered;
      if (canonical.empty()) fail("empty surface");
      if (section == Section::kExclude) {
        if (!seen_excl.insert(canonical).second) {
          if (strict) fail("duplicate exclusion '" + canonical + "'");
          out.warnings.push_back("line " + std::to_string(line_no) +
                                 ": duplicate exclusion '" + canonical +
                                 "' ignored");
          continue;
        }
        exclusions.push_back(std::move(canonical));
        continue;
      }
      if (!seen.insert(canonical).second) {
        if (strict) fail("duplicate surface '" + canonical + "'");
        out.warnings.push_back("line " + std::to_string(line_no) +
                               ": duplicate surface '" + canonical +
                               "' ignored");
        continue;
      }
      entries.push_back({std::move(canonical),
                         section == Section::kPrior ? Origin::kPrior
                                                    : Origin::kPosterior,
                         round});
    }
  }
  if (!have_label) throw DataError("vocabulary file has no label= line");
  for (auto &e : entries) v.Add(std::move(e));
  for (auto &x : exclusions) v.AddExclusion(x);
  v.set_version(version > 0 ? version : 1);
  return out;
}

VocabularyLoad LoadVocabulary(const std::string &path, bool strict) {
  try {
    return ParseVocabulary(ReadFile(path), strict);
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
}

std::string SerializeVocabulary(const Vocabulary &v) {
  std::string out = "label=" + v.label() + "\n";
  out += "version=" + std::to_string(v.version()) + "\n\n[prior]\n";
  for (const auto &e : v.entries()) {
    if (e.origin == Origin::kPrior) out += e.surface + "\n";
  }
  out += "\n[posterior]\n";
  for (const auto &e : v.entries()) {
    if (e.origin != Origin::kPosterior) continue;
    out += e.surface + " " + std::string(kRoundTag) +
           std::to_string(e.added_round) + "\n";
  }
  if (!v.exclusions().empty()) {
    out += "\n[exclude]\n";
    for (const auto &x : v.exclusions()) out += x + "\n";
  }
  return out;
}

void SaveVocabulary(const Vocabulary &v, const std::string &path) {
  WriteFileAtomic(path, SerializeVocabulary(v));
}

std::string_view ShippedVocabularyText(std::string_view label) {
  for (const auto &f : kShipped) {
    if (f.label == label) return EmbeddedData(f.name);
  }
  throw ConfigError("no shipped vocabulary for label '" + std::string(label) +
                    "'");
}

std::vector<Vocabulary> ShippedVocabularies() {
  std::vector<Vocabulary> out;
  for (const auto &f : kShipped) {
    out.push_back(ParseVocabulary(EmbeddedData(f.name)).vocabulary);
  }
  return out;
}

bool LabelAssignment::Has(std::string_view label) const {
  auto it = labels.find(label);
  return it != labels.end() && it->second;
}

LabelAssignment LabelReview(const Review &r,
                            const std::vector<Vocabulary> &vocabs) {
  LabelAssignment a;
  a.review_id = r.id;
  const std::string lowered = Normalize(r.body).lowered;
  for (const auto &v : vocabs) a.labels[v.label()] = v.Matches(lowered);
  return a;
}

std::vector<LabelAssignment> LabelCorpus(const Corpus &corpus,
                                         const std::vector<Vocabulary> &vocabs,
                                         int threads) {
  std::vector<LabelAssignment> out(corpus.size());
  ParallelChunks(corpus.size(), threads,
                 [&](int, std::size_t begin, std::size_t end) {
                   for (std::size_t i = begin; i < end; ++i) {
                     out[i] = LabelReview(corpus[i], vocabs);
                   }
                 });
  return out;
}

std::vector<std::string> FilterUnlabeled(const Corpus &corpus,
                                         const Vocabulary &v, int threads) {
  std::vector<char> matched(corpus.size(), 0);
  ParallelChunks(corpus.size(), threads,
                 [&](int, std::size_t begin, std::size_t end) {
                   for (std::size_t i = begin; i < end; ++i) {
                     matched[i] = v.Matches(Normalize(corpus[i].body).lowered);
                   }
                 });
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (!matched[i]) ids.push_back(corpus[i].id);
  }
  return ids;
}

std::vector<TokenCount> TopTokens(const std::vector<std::string> &ids,
                                  const Corpus &corpus, std::size_t k,
                                  const StopList &stoplist,
                                  const std::vector<std::string> &skip) {
  if (k == 0) throw ConfigError("top-token count must be >= 1");
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto &id : ids) {
    const auto pos = corpus.Find(id);
    if (!pos) throw DataError("unknown review id '" + id + "'");
    for (auto &token :
         RemoveStopwords(Tokenize(Normalize(corpus[*pos].body)), stoplist)) {
      ++counts[std::move(token)];
    }
  }
  const std::unordered_set<std::string> skipped(skip.begin(), skip.end());
  std::vector<TokenCount> ranked;
  ranked.reserve(counts.size());
  for (auto &[token, count] : counts) {
    if (!skipped.contains(token)) ranked.push_back({token, count});
  }
  auto by_rank = [](const TokenCount &a, const TokenCount &b) {
    return a.count != b.count ? a.count > b.count : a.token < b.token;
  };
  const std::size_t keep = std::min(k, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + keep, ranked.end(),
                    by_rank);
  ranked.resize(keep);
  return ranked;
}

ExpansionState StartExpansion(const Corpus &corpus, Vocabulary vocabulary,
                              const ExpansionOptions &options) {
  ExpansionState s;
  s.round = vocabulary.LastRound() + 1;
  s.filtered_ids = FilterUnlabeled(corpus, vocabulary, options.threads);
  s.candidates = TopTokens(s.filtered_ids, corpus, options.top_k,
                           options.stoplist, vocabulary.exclusions());
  s.vocabulary = std::move(vocabulary);
  return s;
}

ExpansionState ExpansionStep(const ExpansionState &state,
                             const std::vector<std::string> &accepted,
                             const Corpus &corpus,
                             const ExpansionOptions &options) {
  ExpansionState next = state;
  if (accepted.empty()) {
    next.converged = true;
    return next;
  }
  std::vector<VocabEntry> entries;
  for (const auto &raw : accepted) {
    entries.push_back({raw, Origin::kPosterior, state.round});
  }
  next.vocabulary.AddAll(entries);  // throws before anything changes

  // Only the new entries can remove reviews from the filtered set.
  Vocabulary added(next.vocabulary.label());
  for (const auto &e : next.vocabulary.entries()) {
    if (e.added_round == state.round && e.origin == Origin::kPosterior &&
        !state.vocabulary.Contains(e.surface)) {
      added.Add(e);
    }
  }
  for (const auto &x : next.vocabulary.exclusions()) added.AddExclusion(x);
  std::vector<std::string> still;
  for (const auto &id : state.filtered_ids) {
    const auto pos = corpus.Find(id);
    if (!pos) throw DataError("unknown review id '" + id + "'");
    if (!added.Matches(Normalize(corpus[*pos].body).lowered)) {
      still.push_back(id);
    }
  }
  next.filtered_ids = std::move(still);
  next.candidates = TopTokens(next.filtered_ids, corpus, options.top_k,
                              options.stoplist, next.vocabulary.exclusions());
  next.round = state.round + 1;
  next.converged = false;
  return next;
}

}  // namespace revbomb
