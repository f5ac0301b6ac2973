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


#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "revbomb/errors.h"
#include "revbomb/vocab.h"
#include "fixtures.h"
#include "testing.h"

namespace revbomb {
namespace {

using namespace revbomb::testing;

TEST(ShippedVocabularies, FilesListTheReferenceSurfacesInOrder) {
  for (const auto &pub : Reference()) {
    const std::string_view text = ShippedVocabularyText(pub.label);
    EXPECT_EQ(FileSection(text, "[prior]"), Split(pub.prior)) << pub.label;
    EXPECT_EQ(FileSection(text, "[posterior]"), Split(pub.posterior))
        << pub.label;
  }
}

TEST(ShippedVocabularies, LoadedSetsEqualTheReferenceUnion) {
  const std::vector<Vocabulary> vocabs = ShippedVocabularies();
  ASSERT_EQ(vocabs.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto &pub = Reference()[i];
    const Vocabulary &v = vocabs[i];
    EXPECT_EQ(v.label(), pub.label);
    std::set<std::string> expected;
    for (const auto &s : Split(pub.prior)) expected.insert(s);
    for (const auto &s : Split(pub.posterior)) expected.insert(s);
    std::set<std::string> got;
    for (const auto &e : v.entries()) got.insert(e.surface);
    EXPECT_EQ(got, expected) << pub.label;
    EXPECT_EQ(got.size(), v.entries().size()) << "no duplicates after load";
  }
  // The repeated Q surfaces keep their first section.
  const Vocabulary &q = vocabs[1];
  const auto dyke = std::find_if(q.entries().begin(), q.entries().end(),
                                 [](const auto &e) { return e.surface == "dyke"; });
  EXPECT_EQ(dyke->origin, Origin::kPrior);
  EXPECT_EQ(q.CountOrigin(Origin::kPrior), 17u);
  EXPECT_EQ(q.CountOrigin(Origin::kPosterior), 22u);
}

TEST(ShippedVocabularies, StrictLoadRejectsTheRepeatedSurfaces) {
  EXPECT_THROW(ParseVocabulary(ShippedVocabularyText("Q"), true), DataError);
  const VocabularyLoad lenient = ParseVocabulary(ShippedVocabularyText("Q"));
  EXPECT_EQ(lenient.warnings.size(), 2u);
  for (const char *label : {"P", "M", "T"}) {
    EXPECT_NO_THROW(ParseVocabulary(ShippedVocabularyText(label), true));
  }
}

TEST(MatchEntry, LeftWordBoundaryAndStemPrefix) {
  EXPECT_TRUE(MatchEntry("pure political nonsense", "politic"));
  EXPECT_FALSE(MatchEntry("i am apolitical", "politic"));
  EXPECT_TRUE(MatchEntry("politics", "politic"));
  EXPECT_TRUE(MatchEntry("i give it the 0/10", "the 0"));
  EXPECT_FALSE(MatchEntry("breathe 0", "the 0"));
  EXPECT_TRUE(MatchEntry("the sex scene", "sex scene"));
  EXPECT_FALSE(MatchEntry("the sex  scene", "sex scene"));  // not normalized
  EXPECT_TRUE(MatchEntry("(woke)", "woke"));
  EXPECT_FALSE(MatchEntry("", "woke"));
  EXPECT_FALSE(MatchEntry("woke", ""));
}

TEST(Vocabulary, ExclusionsBlockLongerAmbiguousWords) {
  Vocabulary v("T");
  v.Add({"lev", Origin::kPrior, 0});
  v.AddExclusion("level");
  EXPECT_TRUE(v.Matches("lev is a character"));
  EXPECT_FALSE(v.Matches("the level design"));
  EXPECT_TRUE(v.Matches("the level design and lev"));
  EXPECT_TRUE(v.Excludes("level"));
}

TEST(Vocabulary, VersionsAndDuplicates) {
  Vocabulary v("P");
  EXPECT_EQ(v.version(), 1u);
  v.Add({"woke", Origin::kPosterior, 1});
  EXPECT_EQ(v.version(), 2u);
  EXPECT_THROW(v.Add({"woke", Origin::kPrior, 0}), DataError);
  EXPECT_THROW(v.AddAll({{"sjw", Origin::kPosterior, 2},
                         {"woke", Origin::kPosterior, 2}}),
               DataError);
  EXPECT_FALSE(v.Contains("sjw"));  // all or nothing
  EXPECT_EQ(v.version(), 2u);
  v.AddAll({{"sjw", Origin::kPosterior, 2}, {"trump", Origin::kPosterior, 2}});
  EXPECT_EQ(v.version(), 3u);
  EXPECT_EQ(v.LastRound(), 2);
  EXPECT_EQ(CanonicalSurface("  Star   WAR "), "star war");
  EXPECT_THROW(CanonicalSurface("   "), DataError);
}

TEST(VocabularyFile, RoundTripsThroughSerialize) {
  Vocabulary v("M");
  v.Add({"troll", Origin::kPrior, 0});
  v.Add({"the 0", Origin::kPosterior, 1});
  v.Add({"salty", Origin::kPosterior, 3});
  v.AddExclusion("trolley");
  const VocabularyLoad back = ParseVocabulary(SerializeVocabulary(v), true);
  EXPECT_EQ(back.vocabulary, v);
  EXPECT_TRUE(back.warnings.empty());
  for (const auto &shipped : ShippedVocabularies()) {
    EXPECT_EQ(ParseVocabulary(SerializeVocabulary(shipped), true).vocabulary,
              shipped);
  }
}

TEST(VocabularyFile, SaveAndLoad) {
  testing::TempDir dir;
  Vocabulary v("Q");
  v.Add({"queer", Origin::kPrior, 0});
  SaveVocabulary(v, dir / "q.txt");
  EXPECT_EQ(LoadVocabulary(dir / "q.txt").vocabulary, v);
  EXPECT_THROW(LoadVocabulary(dir / "missing.txt"), std::exception);
}

TEST(VocabularyFile, ParseErrorsNameTheLine) {
  const auto error = [](std::string_view text) {
    try {
      ParseVocabulary(text);
    } catch (const DataError &e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(error("[prior]\nx\n"), "vocabulary file has no label= line");
  EXPECT_EQ(error("label=P\n[bogus]\n"), "vocabulary line 2: unknown section [bogus]");
  EXPECT_EQ(error("label=P\n[prior]\nx @round=2\n"),
            "vocabulary line 3: @round outside [posterior]");
  EXPECT_EQ(error("label=P\n[posterior]\nx @round=two\n"),
            "vocabulary line 3: bad @round value");
  EXPECT_EQ(error("label=P\nstray\n"),
            "vocabulary line 2: expected label=, version= or a section header");
  const VocabularyLoad ok = ParseVocabulary("label=P\nversion=7\n[posterior]\nwoke\n");
  EXPECT_EQ(ok.vocabulary.version(), 7u);
  EXPECT_EQ(ok.vocabulary.entries()[0].added_round, 1);
}

TEST(LabelReview, FortyReviewFixture) {
  const std::vector<Vocabulary> vocabs = ShippedVocabularies();
  std::vector<Review> reviews;
  for (std::size_t i = 0; i < std::size(kLabelFixture); ++i) {
    reviews.push_back(MakeReview("f" + std::to_string(i), kLabelFixture[i].body));
  }
  ASSERT_EQ(reviews.size(), 40u);
  const Corpus corpus(reviews);
  const auto assignments = LabelCorpus(corpus, vocabs, 3);
  ASSERT_EQ(assignments.size(), 40u);
  for (std::size_t i = 0; i < 40; ++i) {
    const std::string expected = kLabelFixture[i].labels;
    for (const char *label : {"P", "Q", "M", "T"}) {
      EXPECT_EQ(assignments[i].Has(label),
                expected.find(label) != std::string::npos)
          << "\"" << kLabelFixture[i].body << "\" label " << label;
    }
    EXPECT_EQ(assignments[i], LabelReview(corpus[i], vocabs));
    EXPECT_EQ(assignments[i].labels.size(), 4u);
  }
}

TEST(LabelReview, FixtureExercisesBothComponents) {
  const std::vector<Vocabulary> vocabs = ShippedVocabularies();
  for (const Vocabulary &v : vocabs) {
    std::set<std::string> prior, posterior;
    for (const auto &c : kLabelFixture) {
      const std::string lowered = Normalize(c.body).lowered;
      for (const auto &e : v.entries()) {
        if (!MatchEntry(lowered, e.surface)) continue;
        (e.origin == Origin::kPrior ? prior : posterior).insert(e.surface);
      }
    }
    EXPECT_GE(prior.size(), 2u) << v.label();
    EXPECT_GE(posterior.size(), 2u) << v.label();
  }
}

TEST(TopTokens, RanksByCountThenToken) {
  Corpus c({MakeReview("a", "zeta beta the beta alpha"),
            MakeReview("b", "beta alpha gamma gamma"),
            MakeReview("c", "ignored completely")});
  const StopList stop = {"the"};
  const auto top = TopTokens({"a", "b"}, c, 10, stop);
  EXPECT_EQ(top, (std::vector<TokenCount>{
                     {"beta", 3}, {"alpha", 2}, {"gamma", 2}, {"zeta", 1}}));
  EXPECT_EQ(TopTokens({"a", "b"}, c, 2, stop).size(), 2u);
  EXPECT_EQ(TopTokens({"a", "b"}, c, 10, stop, {"beta"}).front().token, "alpha");
  EXPECT_THROW(TopTokens({"a"}, c, 0, stop), ConfigError);
  EXPECT_TRUE(TopTokens({}, c, 5, stop).empty());
}

TEST(Expansion, AcceptShrinksFilterAndEmptyAcceptConverges) {
  Corpus c({MakeReview("a", "so woke it hurts"),
            MakeReview("b", "woke and sjw nonsense"),
            MakeReview("c", "politics everywhere"),
            MakeReview("d", "great combat and music")});
  Vocabulary p("P");
  p.Add({"politic", Origin::kPrior, 0});
  ExpansionOptions opts;
  opts.top_k = 10;
  ExpansionState s = StartExpansion(c, p, opts);
  EXPECT_EQ(s.round, 1);
  EXPECT_EQ(s.filtered_ids, (std::vector<std::string>{"a", "b", "d"}));
  EXPECT_EQ(s.candidates.front(), (TokenCount{"woke", 2}));
  ExpansionState s2 = ExpansionStep(s, {"woke"}, c, opts);
  EXPECT_EQ(s2.round, 2);
  EXPECT_EQ(s2.filtered_ids, std::vector<std::string>{"d"});
  EXPECT_EQ(s2.vocabulary.version(), s.vocabulary.version() + 1);
  EXPECT_FALSE(s2.converged);
  for (const auto &t : s2.candidates) EXPECT_NE(t.token, "woke");
  EXPECT_THROW(ExpansionStep(s2, {"woke"}, c, opts), DataError);
  EXPECT_THROW(ExpansionStep(s2, {"x", "x"}, c, opts), DataError);
  ExpansionState s3 = ExpansionStep(s2, {}, c, opts);
  EXPECT_TRUE(s3.converged);
  EXPECT_EQ(s3.filtered_ids, s2.filtered_ids);
  EXPECT_EQ(s3.vocabulary, s2.vocabulary);
  EXPECT_EQ(s3.round, s2.round);
  // A restarted session picks up at the next round.
  EXPECT_EQ(StartExpansion(c, s2.vocabulary, opts).round, 2);
}

// Random corpora and accept trajectories: the unlabeled set only ever
// shrinks, labels are never lost as the vocabulary grows, and an empty
// accept converges.
TEST(Expansion, MonotoneOverRandomTrajectories) {
  constexpr int kTrials = 500;
  const std::vector<std::string> words = {
      "alpha", "beta", "gamma", "delta", "eps", "zeta", "eta", "theta",
      "iota", "kappa", "lambda", "mu", "nu", "xi", "omicron", "pi"};
  std::mt19937_64 rng(77);
  ExpansionOptions opts;
  opts.top_k = 8;
  opts.threads = 1;
  opts.stoplist = {};
  for (int trial = 0; trial < kTrials; ++trial) {
    std::vector<Review> reviews;
    const int n = 5 + rng() % 25;
    for (int i = 0; i < n; ++i) {
      std::string body;
      for (int w = 1 + rng() % 6; w > 0; --w) body += words[rng() % words.size()] + " ";
      reviews.push_back(MakeReview("r" + std::to_string(i), body));
    }
    const Corpus corpus(reviews);
    Vocabulary v("L");
    v.Add({words[rng() % words.size()], Origin::kPrior, 0});
    ExpansionState s = StartExpansion(corpus, v, opts);
    auto labeled = [&](const Vocabulary &voc) {
      std::vector<bool> out;
      for (const auto &a : LabelCorpus(corpus, {voc}, 1)) out.push_back(a.Has("L"));
      return out;
    };
    std::vector<bool> before = labeled(s.vocabulary);
    for (int step = 0; step < 4 && !s.converged; ++step) {
      std::vector<std::string> accept;
      for (const auto &cand : s.candidates) {
        if (rng() % 3 == 0) accept.push_back(cand.token);
      }
      const ExpansionState next = ExpansionStep(s, accept, corpus, opts);
      ASSERT_TRUE(std::includes(s.filtered_ids.begin(), s.filtered_ids.end(),
                                next.filtered_ids.begin(), next.filtered_ids.end(),
                                [&](const std::string &a, const std::string &b) {
                                  return *corpus.Find(a) < *corpus.Find(b);
                                }));
      const std::vector<bool> after = labeled(next.vocabulary);
      for (std::size_t i = 0; i < after.size(); ++i) {
        ASSERT_TRUE(!before[i] || after[i]);
      }
      // The filter agrees with labeling from scratch.
      std::size_t unlabeled = std::count(after.begin(), after.end(), false);
      ASSERT_EQ(next.filtered_ids.size(), unlabeled);
      ASSERT_EQ(next.converged, accept.empty());
      before = after;
      s = next;
    }
    EXPECT_TRUE(ExpansionStep(s, {}, corpus, opts).converged);
  }
}

}  // namespace
}  // namespace revbomb
