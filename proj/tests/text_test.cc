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

#include <cmath>
#include <random>

#include "revbomb/errors.h"
#include "revbomb/text.h"
#include "revbomb/unicode.h"

namespace revbomb {
namespace {

TEST(Unicode, DecodesAndCounts) {
  EXPECT_EQ(CharCount("héllo"), 5u);
  EXPECT_EQ(DecodeUtf8("aé€😀"), U"aé€😀");
  EXPECT_EQ(EncodeUtf8(U"aé€😀"), "aé€😀");
  EXPECT_TRUE(IsValidUtf8("naïve"));
  EXPECT_FALSE(IsValidUtf8("\xff\xfe"));
  EXPECT_EQ(DecodeUtf8("a\xffz"), U"a�z");
}

TEST(Unicode, LowercasesAcrossScripts) {
  EXPECT_EQ(ToLower(U'A'), U'a');
  EXPECT_EQ(ToLower(U'Ä'), U'ä');
  EXPECT_EQ(ToLower(U'Ж'), U'ж');
  EXPECT_EQ(ToLower(U'Σ'), U'σ');
  EXPECT_EQ(ToLower(U'1'), U'1');
}

TEST(Unicode, Scripts) {
  EXPECT_EQ(ScriptOf(U'q'), Script::kLatin);
  EXPECT_EQ(ScriptOf(U'ж'), Script::kCyrillic);
  EXPECT_EQ(ScriptOf(U'あ'), Script::kKana);
  EXPECT_EQ(ScriptOf(U'漢'), Script::kHan);
  EXPECT_EQ(ScriptOf(U'!'), Script::kNone);
  EXPECT_EQ(ScriptOf(U'7'), Script::kNone);
}

TEST(Normalize, LowercasesAndCollapsesWhitespace) {
  const NormText n = Normalize("  The  QUICK\tbrown\n\nFox  ");
  EXPECT_EQ(n.lowered, "the quick brown fox");
  EXPECT_EQ(n.original_length, 25u);
  EXPECT_EQ(Normalize("").lowered, "");
  EXPECT_EQ(Normalize(" \t ").lowered, "");
}

TEST(Normalize, Idempotent) {
  std::mt19937 rng(3);
  const std::u32string alphabet = U"aB É\tж.!\n7 ";
  for (int trial = 0; trial < 500; ++trial) {
    std::u32string s;
    for (int i = rng() % 40; i > 0; --i) s += alphabet[rng() % alphabet.size()];
    const std::string once = Normalize(EncodeUtf8(s)).lowered;
    EXPECT_EQ(Normalize(once).lowered, once);
  }
}

TEST(Tokenize, SplitsOnNonWordCharacters) {
  EXPECT_EQ(Tokenize(Normalize("Don't buy it!! 0/10, worst-game")),
            (TokenSeq{"don", "t", "buy", "it", "0", "10", "worst", "game"}));
  EXPECT_TRUE(Tokenize(Normalize("?!... ---")).empty());
  EXPECT_EQ(Tokenize(Normalize("Игра хорошая")),
            (TokenSeq{"игра", "хорошая"}));
}

TEST(LexicalDiversity, CountsDistinctTokens) {
  EXPECT_EQ(LexicalDiversity("the game the GAME the end"), 3u);
  EXPECT_EQ(LexicalDiversity(""), 0u);
  EXPECT_EQ(LexicalDiversity("!!!"), 0u);
}

TEST(LexicalDiversity, NeverExceedsTokenCount) {
  std::mt19937 rng(11);
  const std::vector<std::string> words = {"a", "b", "c", "dd", "ee", "ff"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string body;
    for (int i = rng() % 30; i > 0; --i) body += words[rng() % words.size()] + " ";
    EXPECT_LE(LexicalDiversity(body), Tokenize(Normalize(body)).size());
  }
}

// Word frequencies in running text follow a Zipf law with exponent near 1.
// Texts drawn that way, with review-like lengths, show the type count
// rising with length: D and the character count correlate strongly.
TEST(LexicalDiversity, TracksLengthOnZipfianText) {
  constexpr std::size_t kLexicon = 20000;
  constexpr int kTexts = 1500;
  constexpr double kMinCorrelation = 0.8;
  std::mt19937_64 rng(2024);
  std::vector<std::string> lexicon;
  std::uniform_int_distribution<int> len(2, 9), letter(0, 25);
  for (std::size_t i = 0; i < kLexicon; ++i) {
    std::string w;
    for (int k = len(rng); k > 0; --k) w += static_cast<char>('a' + letter(rng));
    lexicon.push_back(w);
  }
  std::vector<double> weights;
  for (std::size_t i = 0; i < kLexicon; ++i) weights.push_back(1.0 / (i + 1.0));
  std::discrete_distribution<std::size_t> zipf(weights.begin(), weights.end());
  std::lognormal_distribution<double> words(std::log(60.0), 0.9);
  std::vector<double> d, nchar;
  for (int t = 0; t < kTexts; ++t) {
    const int n = std::clamp(static_cast<int>(words(rng)), 5, 1500);
    std::string body;
    for (int i = 0; i < n; ++i) body += lexicon[zipf(rng)] + " ";
    d.push_back(static_cast<double>(LexicalDiversity(body)));
    nchar.push_back(static_cast<double>(CharCount(body)));
  }
  EXPECT_GT(PearsonCorrelation(d, nchar), kMinCorrelation);
}

TEST(PearsonCorrelation, MatchesClosedForms) {
  EXPECT_DOUBLE_EQ(PearsonCorrelation({1, 2, 3}, {2, 4, 6}), 1.0);
  EXPECT_DOUBLE_EQ(PearsonCorrelation({1, 2, 3}, {3, 2, 1}), -1.0);
  EXPECT_TRUE(std::isnan(PearsonCorrelation({1, 1, 1}, {1, 2, 3})));
  // Hand computation: x = 1..4, y = 1, 3, 2, 4 gives r = 0.8.
  EXPECT_NEAR(PearsonCorrelation({1, 2, 3, 4}, {1, 3, 2, 4}), 0.8, 1e-12);
}

TEST(StopList, ParsesCommentsAndBlankLines) {
  const StopList s = ParseStopList("# header\nthe\n\n  and  \nTHE\n");
  EXPECT_TRUE(s.contains("the"));
  EXPECT_TRUE(s.contains("and"));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(RemoveStopwords({"the", "game", "and", "story"}, s),
            (TokenSeq{"game", "story"}));
}

TEST(StopList, ShippedListCoversCommonWords) {
  const StopList &s = DefaultStopList();
  for (const char *w : {"the", "and", "is", "it", "of", "to"}) {
    EXPECT_TRUE(s.contains(w)) << w;
  }
  EXPECT_FALSE(s.contains("game"));
}

}  // namespace
}  // namespace revbomb
