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

#include "revbomb/langid.h"

#include <algorithm>
#include <array>

#include "revbomb/data.h"
#include "revbomb/errors.h"
#include "revbomb/text.h"
#include "revbomb/unicode.h"

namespace revbomb {

namespace {

// Strips diacritics from lowercase Latin letters so that profile words can
// be written in plain ASCII.
char32_t FoldAccent(char32_t c) {
  static constexpr std::u32string_view kFrom =
      U"àáâãäåāăąçćčďđèéêëēėęěìíîïīįıñńňòóôõöøōőùúûüūůűųýÿłśšşßťţźżžğř";
  static constexpr std::string_view kTo =
      "aaaaaaaaacccddeeeeeeeeiiiiiiinnnoooooooouuuuuuuuyylssssttzzzgr";
  const auto i = kFrom.find(c);
  return i == std::u32string_view::npos ? c : static_cast<char32_t>(kTo[i]);
}

std::string FoldToken(std::string_view token) {
  std::string out;
  std::size_t pos = 0;
  while (pos < token.size()) {
    AppendUtf8(FoldAccent(NextCodePoint(token, pos)), &out);
  }
  return out;
}

std::string_view CodeForScript(Script s) {
  switch (s) {
    case Script::kGreek:
      return "el";
    case Script::kCyrillic:
      return "ru";
    case Script::kArmenian:
      return "hy";
    case Script::kHebrew:
      return "he";
    case Script::kArabic:
      return "ar";
    case Script::kDevanagari:
      return "hi";
    case Script::kThai:
      return "th";
    case Script::kHangul:
      return "ko";
    case Script::kKana:
      return "ja";
    case Script::kHan:
      return "zh";
    default:
      return kUndeterminedCode;
  }
}

std::vector<std::string_view> Lines(std::string_view s) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t end = s.find('\n', start);
    if (end == std::string_view::npos) end = s.size();
    std::string_view line = s.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (!line.empty()) lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

}  // namespace

LanguageDetector::LanguageDetector()
    : LanguageDetector(EmbeddedData("langid_function_words.txt")) {}

LanguageDetector::LanguageDetector(std::string_view profiles) {
  for (std::string_view line : Lines(profiles)) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ConfigError("language profile line without ':'");
    }
    const int lang = static_cast<int>(codes_.size());
    codes_.emplace_back(line.substr(0, colon));
    for (const auto &w : Tokenize(Normalize(line.substr(colon + 1)))) {
      auto &langs = word_langs_[FoldToken(w)];
      if (langs.empty() || langs.back() != lang) langs.push_back(lang);
    }
  }
}

LanguageTag LanguageDetector::Detect(std::string_view body) const {
  LanguageTag tag;
  const NormText norm = Normalize(body);

  std::array<std::size_t, static_cast<int>(Script::kHan) + 1> per_script{};
  std::size_t letters = 0;
  std::size_t pos = 0;
  while (pos < norm.lowered.size()) {
    const Script s = ScriptOf(NextCodePoint(norm.lowered, pos));
    if (s == Script::kNone) continue;
    ++per_script[static_cast<int>(s)];
    ++letters;
  }
  if (letters == 0) {
    tag.code = kSymbolsOnlyCode;
    tag.symbols_only = true;
    tag.confidence = norm.lowered.empty() ? 0.0 : 1.0;
    return tag;
  }

  const auto dominant_it =
      std::max_element(per_script.begin(), per_script.end());
  Script dominant = static_cast<Script>(dominant_it - per_script.begin());
  const double dominant_share = static_cast<double>(*dominant_it) / letters;
  // Japanese mixes kana with Han; any kana alongside Han means Japanese.
  if (dominant == Script::kHan &&
      per_script[static_cast<int>(Script::kKana)] > 0) {
    dominant = Script::kKana;
  }
  if (dominant != Script::kLatin) {
    tag.code = CodeForScript(dominant);
    tag.confidence = dominant_share;
    return tag;
  }

  std::vector<std::size_t> hits(codes_.size(), 0);
  for (const auto &token : Tokenize(norm)) {
    auto it = word_langs_.find(FoldToken(token));
    if (it == word_langs_.end()) continue;
    for (int lang : it->second) ++hits[lang];
  }
  std::size_t best = 0, second = 0;
  int best_lang = -1;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] > best) {
      second = best;
      best = hits[i];
      best_lang = static_cast<int>(i);
    } else if (hits[i] > second) {
      second = hits[i];
    }
  }
  if (best_lang < 0) {
    tag.code = kUndeterminedCode;
    tag.confidence = 0;
    return tag;
  }
  tag.code = codes_[best_lang];
  // Margin over the runner-up, damped when there is little evidence.
  tag.confidence = dominant_share * static_cast<double>(best - second) /
                   static_cast<double>(best + 1);
  return tag;
}

GroupingScheme::GroupingScheme()
    : GroupingScheme(Parse(EmbeddedData("language_groups.txt"))) {}

GroupingScheme GroupingScheme::Parse(std::string_view contents) {
  GroupingScheme scheme{Empty{}};
  for (std::string_view line : Lines(contents)) {
    const auto eq = line.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == line.size()) {
      throw ConfigError("grouping scheme line is not code=Group: '" +
                        std::string(line) + "'");
    }
    const std::string code(line.substr(0, eq));
    const std::string group(line.substr(eq + 1));
    if (code == "*") {
      scheme.default_group_ = group;
    } else {
      scheme.code_to_group_[code] = group;
    }
    if (std::find(scheme.groups_.begin(), scheme.groups_.end(), group) ==
        scheme.groups_.end()) {
      scheme.groups_.push_back(group);
    }
  }
  if (scheme.default_group_.empty()) {
    scheme.default_group_ = "Others";
    scheme.groups_.push_back(scheme.default_group_);
  }
  // Default group goes last.
  auto it = std::find(scheme.groups_.begin(), scheme.groups_.end(),
                      scheme.default_group_);
  std::rotate(it, it + 1, scheme.groups_.end());
  return scheme;
}

GroupingScheme GroupingScheme::Load(const std::string &path) {
  return Parse(ReadFile(path));
}

const std::string &GroupingScheme::GroupOf(std::string_view code) const {
  auto it = code_to_group_.find(code);
  return it == code_to_group_.end() ? default_group_ : it->second;
}

bool GroupingScheme::Knows(std::string_view code) const {
  return code_to_group_.contains(code) || code == kSymbolsOnlyCode ||
         code == kUndeterminedCode;
}

Corpus TagLanguages(const Corpus &corpus, const LanguageDetector &detector) {
  return corpus.Transform([&](Review &r) {
    if (r.language && r.language->overridden) return;
    r.language = detector.Detect(r.body);
  });
}

OverrideResult ApplyOverrides(
    const Corpus &corpus, const std::map<std::string, std::string> &overrides) {
  for (const auto &[id, code] : overrides) {
    if (!corpus.Find(id)) {
      throw DataError("language override for unknown review id '" + id + "'");
    }
  }
  std::size_t applied = 0;
  Corpus out = corpus.Transform([&](Review &r) {
    auto it = overrides.find(r.id);
    if (it == overrides.end()) return;
    LanguageTag tag;
    tag.code = it->second;
    tag.confidence = 1.0;
    tag.overridden = true;
    tag.symbols_only = r.language ? r.language->symbols_only : false;
    r.language = tag;
    ++applied;
  });
  return {std::move(out), applied};
}

std::map<std::string, std::string> LoadOverrides(const std::string &path) {
  const auto rows = ParseDelimited(ReadFile(path));
  std::map<std::string, std::string> out;
  std::size_t first = 0;
  if (!rows.empty() && rows[0].fields.size() == 2 && rows[0].fields[0] == "id" &&
      rows[0].fields[1] == "code") {
    first = 1;
  }
  for (std::size_t i = first; i < rows.size(); ++i) {
    if (rows[i].fields.size() != 2) {
      throw DataError(path + ": line " + std::to_string(rows[i].line) +
                      ": expected id,code");
    }
    out[rows[i].fields[0]] = rows[i].fields[1];
  }
  return out;
}

std::vector<LanguageRow> LanguageSummary(const Corpus &corpus,
                                         const GroupingScheme &scheme) {
  std::map<std::string, std::pair<std::size_t, long long>> acc;
  for (const Review &r : corpus) {
    if (!r.language) {
      throw DataError("review '" + r.id + "' has no language tag");
    }
    auto &[n, sum] = acc[scheme.GroupOf(r.language->code)];
    ++n;
    sum += r.score;
  }
  std::vector<LanguageRow> rows;
  for (const auto &group : scheme.groups()) {
    auto it = acc.find(group);
    if (it == acc.end()) continue;
    rows.push_back({group, it->second.first,
                    static_cast<double>(it->second.second) / it->second.first});
  }
  return rows;
}

Corpus NeedsReview(const Corpus &corpus, double threshold) {
  return corpus.Filter([&](const Review &r) {
    return !r.language ||
           (!r.language->overridden && r.language->confidence < threshold);
  });
}

}  // namespace revbomb
