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

// Minimal UTF-8 handling. Character classes cover the scripts that show up in
// review corpora (Latin, Greek, Cyrillic, Armenian, Hebrew, Arabic, Indic,
// Thai, CJK, Hangul); everything else counts as a symbol.

#ifndef REVBOMB_UNICODE_H_
#define REVBOMB_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace revbomb {

enum class Script {
  kNone,  // not a letter
  kLatin,
  kGreek,
  kCyrillic,
  kArmenian,
  kHebrew,
  kArabic,
  kDevanagari,
  kThai,
  kHangul,
  kKana,
  kHan,
};

// Decodes UTF-8. Invalid bytes decode to U+FFFD, one per offending byte.
std::u32string DecodeUtf8(std::string_view s);

// Decodes one code point starting at s[pos]; advances pos.
char32_t NextCodePoint(std::string_view s, std::size_t &pos);

// Code point ending right before byte offset pos (pos > 0).
char32_t PrevCodePoint(std::string_view s, std::size_t pos);

void AppendUtf8(char32_t c, std::string *out);
std::string EncodeUtf8(std::u32string_view s);

// Number of code points.
std::size_t CharCount(std::string_view s);

bool IsValidUtf8(std::string_view s);

Script ScriptOf(char32_t c);
inline bool IsLetter(char32_t c) { return ScriptOf(c) != Script::kNone; }
inline bool IsDigit(char32_t c) { return c >= U'0' && c <= U'9'; }
inline bool IsWordChar(char32_t c) { return IsDigit(c) || IsLetter(c); }
bool IsSpace(char32_t c);

// Simple one-to-one lowercase mapping for Latin, Greek and Cyrillic.
char32_t ToLower(char32_t c);
bool IsUpper(char32_t c);

}  // namespace revbomb

#endif  // REVBOMB_UNICODE_H_
