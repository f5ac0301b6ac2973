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


// Thematic vocabularies, review labeling and the vocabulary-expansion loop.
//
// An entry matches a normalized body when its surface occurs there starting
// at a word boundary (start of text, or after a character that is neither a
// letter nor a digit). The match may end mid-word, so stems such as "politic"
// catch "political", and surfaces may span words ("the 0"). Stop words are
// kept in the text being matched.
//
// Expansion: reviews already matched by the vocabulary are set aside, the
// most frequent tokens of the rest are ranked for a human to judge, accepted
// surfaces join the vocabulary as posterior entries, and the loop repeats
// until a round accepts nothing.

#ifndef REVBOMB_VOCAB_H_
#define REVBOMB_VOCAB_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "revbomb/corpus.h"
#include "revbomb/text.h"

namespace revbomb {

enum class Origin { kPrior, kPosterior };

struct VocabEntry {
  std::string surface;  // lowercase, non-empty, trimmed
  Origin origin = Origin::kPrior;
  int added_round = 0;  // 0 for prior entries

  bool operator==(const VocabEntry &) const = default;
};

// Canonical surface: normalized (lowercase, single spaces, trimmed). Throws
// DataError if nothing is left.
std::string CanonicalSurface(std::string_view raw);

class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::string label) : label_(std::move(label)) {}

  const std::string &label() const { return label_; }
  // Entries in insertion order.
  const std::vector<VocabEntry> &entries() const { return entries_; }
  // Surfaces that block a shorter entry matching at the same position, for
  // ambiguous words. Never label anything themselves.
  const std::vector<std::string> &exclusions() const { return exclusions_; }
  std::uint64_t version() const { return version_; }

  bool Contains(std::string_view surface) const;
  bool Excludes(std::string_view token) const;
  std::size_t CountOrigin(Origin origin) const;
  // Highest added_round among entries (0 if none are posterior).
  int LastRound() const;

  // Each mutation bumps the version. Throws DataError on a duplicate.
  void Add(VocabEntry entry);
  void AddAll(const std::vector<VocabEntry> &entries);
  void AddExclusion(std::string_view surface);

  // Restores a persisted version number; only loaders need this.
  void set_version(std::uint64_t v) { version_ = v; }

  // True iff some entry matches the normalized text.
  bool Matches(std::string_view lowered) const;

  bool operator==(const Vocabulary &) const = default;

 private:
  std::string label_;
  std::vector<VocabEntry> entries_;
  std::vector<std::string> exclusions_;
  std::uint64_t version_ = 1;
};

// Surface occurs in the normalized text at a left word boundary.
bool MatchEntry(std::string_view lowered, std::string_view surface);
bool MatchEntry(const NormText &body, const VocabEntry &entry);

struct VocabularyLoad {
  Vocabulary vocabulary;
  std::vector<std::string> warnings;
};

// File format:
//   label=P
//   version=3          (optional)
//   [prior]
//   surface
//   [posterior]
//   surface @round=2   (no suffix: round 1)
//   [exclude]          (optional)
//   surface
// '#' starts a comment line. Duplicate surfaces throw DataError when strict;
// otherwise the first occurrence is kept and a warning recorded.
VocabularyLoad ParseVocabulary(std::string_view contents, bool strict = false);
VocabularyLoad LoadVocabulary(const std::string &path, bool strict = false);
std::string SerializeVocabulary(const Vocabulary &v);
void SaveVocabulary(const Vocabulary &v, const std::string &path);

// The four shipped vocabularies, in the order P, Q, M, T.
std::vector<Vocabulary> ShippedVocabularies();
// Raw text of a shipped vocabulary file, by label.
std::string_view ShippedVocabularyText(std::string_view label);

struct LabelAssignment {
  std::string review_id;
  // label -> carried; one key per active vocabulary.
  std::map<std::string, bool, std::less<>> labels;

  bool Has(std::string_view label) const;
  bool operator==(const LabelAssignment &) const = default;
};

LabelAssignment LabelReview(const Review &r,
                            const std::vector<Vocabulary> &vocabs);
// One assignment per review, in corpus order.
std::vector<LabelAssignment> LabelCorpus(const Corpus &corpus,
                                         const std::vector<Vocabulary> &vocabs,
                                         int threads = 0);

// Ids of reviews no entry of v matches, in corpus order.
std::vector<std::string> FilterUnlabeled(const Corpus &corpus,
                                         const Vocabulary &v, int threads = 0);

struct TokenCount {
  std::string token;
  std::size_t count = 0;

  bool operator==(const TokenCount &) const = default;
};

// Token frequencies over the given reviews after stop-word removal, ranked
// by count descending then token ascending, at most k long. Tokens listed in
// `skip` are left out.
std::vector<TokenCount> TopTokens(const std::vector<std::string> &ids,
                                  const Corpus &corpus, std::size_t k,
                                  const StopList &stoplist,
                                  const std::vector<std::string> &skip = {});

struct ExpansionOptions {
  std::size_t top_k = 2000;
  StopList stoplist = DefaultStopList();
  int threads = 0;
};

struct ExpansionState {
  Vocabulary vocabulary;
  int round = 1;  // the round whose candidates are on display
  std::vector<std::string> filtered_ids;
  std::vector<TokenCount> candidates;
  bool converged = false;
};

// Round = one past the vocabulary's last recorded round.
ExpansionState StartExpansion(const Corpus &corpus, Vocabulary vocabulary,
                              const ExpansionOptions &options);

// Accepted surfaces become posterior entries of the current round. An empty
// list marks convergence and changes nothing else. Throws DataError, leaving
// no partial update, if any surface is already present or repeated.
ExpansionState ExpansionStep(const ExpansionState &state,
                             const std::vector<std::string> &accepted,
                             const Corpus &corpus,
                             const ExpansionOptions &options);

}  // namespace revbomb

#endif  // REVBOMB_VOCAB_H_
