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


// Fixtures and reference implementations shared by the unit tests and the
// acceptance suite.

#ifndef REVBOMB_TESTS_FIXTURES_H_
#define REVBOMB_TESTS_FIXTURES_H_

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "revbomb/fakes.h"
#include "revbomb/unicode.h"

namespace revbomb::testing {

inline std::vector<std::string> Split(std::string_view list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(list)};
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(' ');
    const auto b = item.find_last_not_of(' ');
    out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

struct ReferenceVocabulary {
  std::string label;
  std::string prior;
  std::string posterior;
};

// The reference dictionaries, transcribed verbatim (including the repeated
// "gender" and the "dyke" listed under both components of Q).
inline const std::vector<ReferenceVocabulary> &Reference() {
  static const std::vector<ReferenceVocabulary> v = {
      {"P",
       "agenda, alt right, altright, cancel cult, cancell, conservative, "
       "democra, far left, far right, fascis, feminis, gamergate, ideol, jew, "
       "kike, leftis, nazi, politic, progressive, propagand, racis, shill, sjw, "
       "social justice warrior, virtue sign",
       "activis, alt-right, anita, asia, far-right, feminaz, freedom of, "
       "globohomo, idealog, idelog, ideolog, lectur, moral, polical, propogan, "
       "religio, retcon, socialis, sponsor, trump, white man, white men, woke"},
      {"Q",
       "gender, bisex, dyke, fag, faggot, gay, gender, heterosex, homophob, "
       "homosex, intersex, lesb, lgbt, non-binary, nonbinary, pansexual, queer, "
       "trann",
       "androge, cis, degenerate, dyke, erotic, femenin, hetero, homos, hulk, "
       "inclusi, kiss, lbgt, lezb, lezz, masculin, pedo, porn, same sex, sex "
       "scene, shemale, sodom, stereotyp, taboo"},
      {"M",
       "bombin, boycot, controvers, critic, fake, journalis, metacritic, "
       "ratin, sabotag, scor, streamer, troll",
       "19th, are mad, balanc, bandwag, bias, blind, bots, bottin, brigad, "
       "comment, communit, complain, critiq, crybab, divisiv, downvot, fanboy, "
       "first day, grade, hater, ignore the, immature, incel, jedi, moron, "
       "overreact, people who, polar, salty, statistic, star war, the 0, the "
       "zero, user, who hate"},
      {"T",
       "abbie, actin, actor, antagonist, boss, character, dinah, ellie, "
       "fireflies, gameplay, gold, graphic, hero, jess, jj, joel, lev, manni, "
       "mechanic, murderer, music, narrat, protagonist, storytell, tomm, "
       "villain, visua, writing, yara",
       "animat, atmospher, bugs, cinematic, clich, collectibl, combat, cut "
       "scene, cutscen, design, dialog, ebby, environment, execut, flashbac, "
       "flaw, frame rat, framerat, game play, gamebreak, gaming exp, gampl, "
       "glitc, gore, goty, grafic, improvemen, innovative, linear, loot, melee, "
       "motion blur, open world, openworl, pathin, performa, platin, plot, "
       "puzzle, realistic, sandbox, script, sideque, storyl, structur, technic, "
       "worldbuild"},
  };
  return v;
}

// Surfaces listed in one section of a vocabulary file, verbatim and in order.
inline std::vector<std::string> FileSection(std::string_view text,
                                     std::string_view header) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  bool inside = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line[0] == '[') {
      inside = line == header;
      continue;
    }
    if (inside) out.push_back(line.substr(0, line.find(" @round=")));
  }
  return out;
}

struct LabelCase {
  const char *body;
  const char *labels;  // subset of "PQMT"
};

// Every label fires through at least two prior and two posterior surfaces.
inline constexpr LabelCase kLabelFixture[] = {
    {"Pure political propaganda disguised as a story.", "P"},
    {"I am apolitical and just wanted a fun time.", ""},
    {"The agenda is obvious from the first minute.", "P"},
    {"So woke it hurts.", "P"},
    {"Full of sjw nonsense and trump jokes.", "P"},
    {"Neil is a feminazi.", "P"},
    {"The lesbian kiss was fine.", "Q"},
    {"Too many gay characters.", "QT"},
    {"Forced queer romance.", "Q"},
    {"A transgender hulk punching people.", "Q"},
    {"The sex scene felt gratuitous.", "Q"},
    {"Zero stars: it is full of stereotypes.", "Q"},
    {"Stop review bombing this masterpiece.", "M"},
    {"The user score is being manipulated by trolls.", "M"},
    {"I give it the 0 it deserves.", "M"},
    {"Haters will hate but it is a masterpiece.", "M"},
    {"Fanboys are salty about the ending.", "M"},
    {"This is the last jedi all over again.", "M"},
    {"Metacritic critics were paid.", "M"},
    {"Joel deserved better.", "T"},
    {"The gameplay and graphics are stunning.", "T"},
    {"Plenty of bugs and glitches on launch.", "T"},
    {"The open world design is gorgeous.", "T"},
    {"Amazing cutscenes and combat.", "T"},
    {"Ellie and Abby are great protagonists.", "T"},
    {"Woke agenda, lgbt propaganda and broken gameplay.", "PQT"},
    {"The political trolls ruined the score.", "PM"},
    {"Gay characters and review bombing trolls.", "QMT"},
    {"Nothing to see here.", ""},
    {"A masterpiece, ten out of ten.", ""},
    {"Bought it day one and loved every minute.", ""},
    {"Politics aside, a moving tale.", "P"},
    {"Activists hijacked the franchise.", "P"},
    {"The homophobic outrage is sad.", "Q"},
    {"It is a degenerate mess.", "Q"},
    {"People who hate it never played it.", "M"},
    {"A framerate drop ruins the atmosphere.", "T"},
    {"Cinematic storytelling at its best.", "T"},
    {"Apolitical fans unite", ""},
    {"The zero score is a boycott by streamers over the plot.", "MT"},
};

// Textbook full-matrix edit distance; the reference for every check below.
inline std::size_t ReferenceLevenshtein(const std::u32string &a,
                                 const std::u32string &b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1,
                                          std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

inline double ReferenceSimilarity(const std::string &a, const std::string &b) {
  const std::u32string ua = DecodeUtf8(a), ub = DecodeUtf8(b);
  const std::size_t m = std::max(ua.size(), ub.size());
  if (m == 0) return 1.0;
  return 1.0 - static_cast<double>(ReferenceLevenshtein(ua, ub)) / m;
}

inline std::vector<SimilarPair> BruteForcePairs(const std::vector<SimilarityItem> &items,
                                         double t) {
  std::vector<SimilarPair> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      const double s = ReferenceSimilarity(items[i].text, items[j].text);
      if (s >= t) {
        auto [a, b] = std::minmax(items[i].id, items[j].id);
        out.push_back({a, b, s});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });
  return out;
}

inline std::u32string RandomString(std::mt19937_64 &rng, std::size_t max_len,
                            std::u32string_view alphabet) {
  std::u32string s(rng() % (max_len + 1), U'a');
  for (auto &c : s) c = alphabet[rng() % alphabet.size()];
  return s;
}

inline std::u32string Mutate(std::mt19937_64 &rng, std::u32string s, int edits,
                      std::u32string_view alphabet) {
  for (int e = 0; e < edits; ++e) {
    const int op = rng() % 3;
    const char32_t c = alphabet[rng() % alphabet.size()];
    if (op == 0 || s.empty()) {
      s.insert(s.begin() + rng() % (s.size() + 1), c);
    } else if (op == 1) {
      s.erase(s.begin() + rng() % s.size());
    } else {
      s[rng() % s.size()] = c;
    }
  }
  return s;
}

}  // namespace revbomb::testing

#endif  // REVBOMB_TESTS_FIXTURES_H_
