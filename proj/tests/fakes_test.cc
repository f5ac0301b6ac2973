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

#include "revbomb/errors.h"
#include "revbomb/fakes.h"
#include "revbomb/unicode.h"
#include "fixtures.h"
#include "testing.h"

namespace revbomb {
namespace {

using namespace revbomb::testing;

TEST(Levenshtein, KnownValues) {
  EXPECT_EQ(Levenshtein("kitten", "sitting"), 3u);
  EXPECT_EQ(Levenshtein("david2000", "davvid2000"), 1u);
  EXPECT_EQ(Levenshtein("", "abc"), 3u);
  EXPECT_EQ(Levenshtein("abc", ""), 3u);
  EXPECT_EQ(Levenshtein("", ""), 0u);
  EXPECT_EQ(Levenshtein("flaw", "lawn"), 2u);
  EXPECT_EQ(Levenshtein("héllo", "hello"), 1u);  // code points, not bytes
}

TEST(Levenshtein, MatchesReferenceOnRandomPairs) {
  std::mt19937_64 rng(42);
  const std::u32string alphabet = U"abcdeé漢";
  for (int trial = 0; trial < 1000; ++trial) {
    const std::u32string a = RandomString(rng, 50, alphabet);
    const std::u32string b = trial % 2 ? RandomString(rng, 50, alphabet)
                                       : Mutate(rng, a, rng() % 8, alphabet);
    ASSERT_EQ(Levenshtein(a, b), ReferenceLevenshtein(a, b))
        << EncodeUtf8(a) << " / " << EncodeUtf8(b);
  }
}

TEST(Levenshtein, MetricProperties) {
  std::mt19937_64 rng(5);
  const std::u32string alphabet = U"abc";
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = RandomString(rng, 20, alphabet);
    const auto b = RandomString(rng, 20, alphabet);
    const auto c = RandomString(rng, 20, alphabet);
    EXPECT_EQ(Levenshtein(a, b), Levenshtein(b, a));
    EXPECT_EQ(Levenshtein(a, a), 0u);
    EXPECT_LE(Levenshtein(a, c), Levenshtein(a, b) + Levenshtein(b, c));
    const std::size_t la = a.size(), lb = b.size();
    EXPECT_GE(Levenshtein(a, b), la > lb ? la - lb : lb - la);
    EXPECT_LE(Levenshtein(a, b), std::max(la, lb));
  }
}

TEST(BoundedLevenshtein, ExactUpToBoundThenBoundPlusOne) {
  std::mt19937_64 rng(9);
  const std::u32string alphabet = U"abcd";
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = RandomString(rng, 40, alphabet);
    const auto b = Mutate(rng, a, rng() % 10, alphabet);
    const std::size_t k = rng() % 12;
    const std::size_t exact = ReferenceLevenshtein(a, b);
    ASSERT_EQ(BoundedLevenshtein(a, b, k), exact <= k ? exact : k + 1);
  }
}

TEST(NormalizedSimilarity, Definition) {
  EXPECT_DOUBLE_EQ(NormalizedSimilarity("", ""), 1.0);
  EXPECT_DOUBLE_EQ(NormalizedSimilarity("abcd", "abce"), 0.75);
  EXPECT_DOUBLE_EQ(NormalizedSimilarity("david2000", "davvid2000"), 0.9);
  EXPECT_DOUBLE_EQ(NormalizedSimilarity("abc", "xyz"), 0.0);
}

struct JoinCase {
  double threshold;
  int q;
  std::size_t max_len;
  std::u32string alphabet;
};

class JoinOracleTest : public ::testing::TestWithParam<JoinCase> {};

TEST_P(JoinOracleTest, EqualsBruteForce) {
  const JoinCase &jc = GetParam();
  std::mt19937_64 rng(static_cast<std::uint64_t>(jc.threshold * 1000) + jc.q);
  std::vector<SimilarityItem> items;
  for (int base = 0; base < 60; ++base) {
    const auto root = RandomString(rng, jc.max_len, jc.alphabet);
    items.push_back({"b" + std::to_string(base), EncodeUtf8(root)});
    for (int v = rng() % 4; v > 0; --v) {
      items.push_back(
          {"v" + std::to_string(items.size()),
           EncodeUtf8(Mutate(rng, root, rng() % 6, jc.alphabet))});
    }
  }
  const auto expected = BruteForcePairs(items, jc.threshold);
  for (bool prefilter : {true, false}) {
    for (int threads : {1, 3}) {
      const auto got = SimilarityPairs(items, {jc.threshold, jc.q, prefilter, threads});
      ASSERT_EQ(got.size(), expected.size()) << "prefilter=" << prefilter;
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].first, expected[i].first);
        EXPECT_EQ(got[i].second, expected[i].second);
        EXPECT_NEAR(got[i].similarity, expected[i].similarity, 1e-12);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    Thresholds, JoinOracleTest,
    ::testing::Values(JoinCase{0.85, 4, 120, U"abcdefgh "},
                      JoinCase{0.90, 3, 20, U"abc123"},
                      JoinCase{0.70, 2, 30, U"ab"},
                      JoinCase{0.95, 4, 200, U"abcdefghijklmnop "},
                      JoinCase{0.50, 3, 15, U"abcé漢"},
                      JoinCase{1.00, 4, 30, U"ab"}));

TEST(SimilarityPairs, RejectsBadOptions) {
  EXPECT_THROW(SimilarityPairs({}, {0.0, 4, true, 1}), ConfigError);
  EXPECT_THROW(SimilarityPairs({}, {1.5, 4, true, 1}), ConfigError);
  EXPECT_THROW(SimilarityPairs({}, {0.9, 0, true, 1}), ConfigError);
  EXPECT_TRUE(SimilarityPairs({}, {0.9, 4, true, 1}).empty());
}

TEST(SimilarityPairs, ShortAndEmptyStrings) {
  const std::vector<SimilarityItem> items = {
      {"a", ""}, {"b", ""}, {"c", "x"}, {"d", "xy"}, {"e", "x"}};
  EXPECT_EQ(SimilarityPairs(items, {0.5, 4, true, 1}),
            BruteForcePairs(items, 0.5));
}

TEST(Cues, NumericUsername) {
  EXPECT_TRUE(CueNumericUsername("123456"));
  EXPECT_TRUE(CueNumericUsername("0"));
  EXPECT_FALSE(CueNumericUsername(""));
  EXPECT_FALSE(CueNumericUsername("user123"));
  EXPECT_FALSE(CueNumericUsername("12 34"));
  EXPECT_FALSE(CueNumericUsername("١٢٣"));  // non-ASCII digits
}

TEST(Cues, RepeatedToken) {
  EXPECT_TRUE(CueRepeatedToken("bad bad bad game"));
  EXPECT_TRUE(CueRepeatedToken("Bad, BAD... bad!"));
  EXPECT_FALSE(CueRepeatedToken("bad bad game bad"));
  EXPECT_FALSE(CueRepeatedToken(""));
}

TEST(Cues, RepeatedChar) {
  EXPECT_TRUE(CueRepeatedChar("sooooo bad"));
  EXPECT_TRUE(CueRepeatedChar("NOOOo"));
  EXPECT_FALSE(CueRepeatedChar("sooo bad"));
  EXPECT_FALSE(CueRepeatedChar("10000 hours!!!!"));
}

TEST(CueNames, BitOrder) {
  EXPECT_EQ(CueNames(0), "");
  EXPECT_EQ(CueNames(kNumericUsername | kRepeatedChar),
            "NumericUsername|RepeatedChar");
  EXPECT_EQ(CueNames(kNearDuplicate | kRepeatedToken),
            "NearDuplicate|RepeatedToken");
}

TEST(FlagFakes, FlagsEachCueAndLinksPartners) {
  const std::string body =
      "This game betrays every character and the writers should apologise to "
      "all of the fans.";
  const std::string near = body.substr(0, body.size() - 1) + "!";
  const std::string other =
      "Solid sequel with great combat, though the pacing in the middle third "
      "drags on far too long.";
  Corpus c({MakeReview("a", body, 0, "2020-06-19", "1234567"),
            MakeReview("b", near, 0, "2020-06-19", "alice_smith"),
            MakeReview("c", other, 9, "2020-06-19", "alice_smith2"),
            MakeReview("d", "Completely different review written by someone "
                            "else, no no no no, about the ending of the game.",
                       9, "2020-06-19", "zed"),
            MakeReview("e", "Another distinct opinion: I loooove the "
                            "soundtrack and the landscapes of the open city.",
                       10, "2020-06-20", "yan"),
            MakeReview("f", "Unrelated but long enough body text about the "
                            "graphics, music, and acting quality.",
                       7, "2020-06-20", "quinn")});
  const auto flags = FlagFakes(c, SimilarityConfig{.threads = 2});
  std::map<std::string, FakeFlag> by_id;
  for (const auto &f : flags) by_id[f.review_id] = f;
  EXPECT_FALSE(by_id.contains("f"));
  EXPECT_EQ(by_id["a"].cues, kNumericUsername | kNearDuplicate);
  EXPECT_EQ(by_id["a"].partner_ids, std::vector<std::string>{"b"});
  // Usernames alice_smith / alice_smith2 are 0.917 similar.
  EXPECT_EQ(by_id["b"].cues, kNearDuplicate);
  EXPECT_EQ(by_id["b"].partner_ids, (std::vector<std::string>{"a", "c"}));
  EXPECT_TRUE(by_id["d"].cues & kRepeatedToken);
  EXPECT_TRUE(by_id["e"].cues & kRepeatedChar);
  // Flags come back in corpus order.
  for (std::size_t i = 1; i < flags.size(); ++i) {
    EXPECT_LT(*c.Find(flags[i - 1].review_id), *c.Find(flags[i].review_id));
  }
  const Corpus annotated = AnnotateCues(c, flags);
  EXPECT_EQ(*annotated[5].cues, 0);
  EXPECT_EQ(*annotated[0].cues, kNumericUsername | kNearDuplicate);
}

TEST(FlagFakes, ShortBodiesStayOutOfTheBodyJoin) {
  Corpus c({MakeReview("a", "same short text", 0, "2020-06-19", "u_one_a"),
            MakeReview("b", "same short text", 0, "2020-06-19", "v_two_b")});
  EXPECT_TRUE(FlagFakes(c, SimilarityConfig{}).empty());
}

}  // namespace
}  // namespace revbomb
