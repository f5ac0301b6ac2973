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

#include "revbomb/fakes.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>

#include "revbomb/errors.h"
#include "revbomb/parallel.h"
#include "revbomb/text.h"
#include "revbomb/unicode.h"

namespace revbomb {

bool CueNumericUsername(std::string_view username) {
  return !username.empty() &&
         std::all_of(username.begin(), username.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

bool CueRepeatedToken(std::string_view body) {
  const TokenSeq tokens = Tokenize(Normalize(body));
  int run = 1;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    run = tokens[i] == tokens[i - 1] ? run + 1 : 1;
    if (run >= 3) return true;
  }
  return false;
}

bool CueRepeatedChar(std::string_view body) {
  const std::string lowered = Normalize(body).lowered;
  char32_t prev = 0;
  int run = 0;
  std::size_t pos = 0;
  while (pos < lowered.size()) {
    const char32_t c = NextCodePoint(lowered, pos);
    if (!IsLetter(c)) {
      run = 0;
      prev = 0;
      continue;
    }
    run = c == prev ? run + 1 : 1;
    prev = c;
    if (run >= 4) return true;
  }
  return false;
}

std::size_t BoundedLevenshtein(std::u32string_view a, std::u32string_view b,
                               std::size_t max_distance) {
  // Common affixes never take part in an optimal alignment's edits.
  while (!a.empty() && !b.empty() && a.front() == b.front()) {
    a.remove_prefix(1);
    b.remove_prefix(1);
  }
  while (!a.empty() && !b.empty() && a.back() == b.back()) {
    a.remove_suffix(1);
    b.remove_suffix(1);
  }
  if (a.size() > b.size()) std::swap(a, b);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t k = max_distance;
  const std::size_t inf = k + 1;
  if (m - n > k) return inf;
  if (n == 0) return m;

  // Ukkonen band: only cells with |i - j| <= k can hold values <= k.
  std::vector<std::size_t> prev(m + 2, inf), cur(m + 2, inf);
  for (std::size_t j = 0; j <= std::min(m, k); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t lo = i > k ? i - k : 1;
    const std::size_t hi = std::min(m, i + k);
    cur[lo - 1] = (lo == 1 && i <= k) ? i : inf;
    std::size_t row_min = cur[lo - 1];
    for (std::size_t j = lo; j <= hi; ++j) {
      std::size_t v = prev[j - 1] + (a[i - 1] != b[j - 1] ? 1 : 0);
      v = std::min(v, prev[j] + 1);
      v = std::min(v, cur[j - 1] + 1);
      cur[j] = std::min(v, inf);
      row_min = std::min(row_min, cur[j]);
    }
    cur[hi + 1] = inf;
    if (row_min > k) return inf;
    std::swap(prev, cur);
  }
  return std::min(prev[m], inf);
}

std::size_t Levenshtein(std::u32string_view a, std::u32string_view b) {
  return BoundedLevenshtein(a, b, std::max(a.size(), b.size()));
}

std::size_t Levenshtein(std::string_view a, std::string_view b) {
  return Levenshtein(DecodeUtf8(a), DecodeUtf8(b));
}

double NormalizedSimilarity(std::u32string_view a, std::u32string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(Levenshtein(a, b)) /
                   static_cast<double>(longest);
}

double NormalizedSimilarity(std::string_view a, std::string_view b) {
  return NormalizedSimilarity(DecodeUtf8(a), DecodeUtf8(b));
}

namespace {

// Largest distance compatible with similarity >= t for longer length M.
std::size_t MaxDistance(double t, std::size_t longest) {
  return static_cast<std::size_t>(
      std::floor((1.0 - t) * static_cast<double>(longest) + 1e-9));
}

std::uint64_t GramKey(const char32_t *p, int q) {
  std::uint64_t h = 0x9E3779B97F4A7C15ull;
  for (int i = 0; i < q; ++i) {
    h ^= p[i];
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 31;
  }
  return h;
}

// Picks `count` pairwise non-overlapping gram starts (gaps >= q) minimizing
// the summed posting-list length. Empty if no such choice exists.
std::vector<std::uint32_t> ChooseDisjointGrams(
    const std::vector<std::uint32_t> &cost, int q, std::size_t count) {
  const std::size_t g = cost.size();
  if (count == 0 || g == 0 || (count - 1) * q + 1 > g) return {};
  constexpr std::uint64_t kInf = UINT64_MAX / 2;
  // best[c][j]: cheapest choice of c grams among starts [0, j).
  std::vector<std::vector<std::uint64_t>> best(
      count + 1, std::vector<std::uint64_t>(g + 1, kInf));
  std::fill(best[0].begin(), best[0].end(), 0);
  for (std::size_t c = 1; c <= count; ++c) {
    for (std::size_t j = 1; j <= g; ++j) {
      best[c][j] = best[c][j - 1];
      const std::size_t s = j - 1;
      const std::uint64_t before =
          s >= static_cast<std::size_t>(q) ? best[c - 1][s - q + 1]
          : c == 1                         ? 0
                                           : kInf;
      if (before < kInf) best[c][j] = std::min(best[c][j], before + cost[s]);
    }
  }
  if (best[count][g] >= kInf) return {};
  std::vector<std::uint32_t> chosen;
  std::size_t j = g;
  for (std::size_t c = count; c > 0; --c) {
    while (best[c][j] == best[c][j - 1]) --j;
    const std::size_t s = j - 1;
    chosen.push_back(static_cast<std::uint32_t>(s));
    j = s >= static_cast<std::size_t>(q) ? s - q + 1 : 0;
  }
  std::reverse(chosen.begin(), chosen.end());
  return chosen;
}

// Untouched chosen grams a candidate must show before verification.
constexpr std::size_t kSurvivors = 4;

struct Posting {
  std::uint32_t item;   // position in length order
  std::uint32_t start;  // character offset of the gram
};

}  // namespace

std::vector<SimilarPair> SimilarityPairs(
    const std::vector<SimilarityItem> &items, const JoinOptions &options) {
  const double t = options.threshold;
  const int q = options.qgram;
  if (!(t > 0.0 && t <= 1.0)) {
    throw ConfigError("similarity threshold out of (0,1]");
  }
  if (q < 1) throw ConfigError("q-gram length must be >= 1");

  const std::size_t n = items.size();
  // Items in ascending length; a pair is examined from its longer member.
  std::vector<std::uint32_t> order(n);
  std::vector<std::u32string> text(n);
  {
    std::vector<std::u32string> decoded(n);
    for (std::size_t i = 0; i < n; ++i) {
      decoded[i] = DecodeUtf8(items[i].text);
      order[i] = static_cast<std::uint32_t>(i);
    }
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
      return decoded[x].size() < decoded[y].size();
    });
    for (std::size_t p = 0; p < n; ++p) text[p] = std::move(decoded[order[p]]);
  }
  std::vector<std::size_t> len(n);
  for (std::size_t p = 0; p < n; ++p) len[p] = text[p].size();

  // Dense gram ids: every item's grams, as indices into the sorted key set.
  std::vector<std::vector<std::uint32_t>> grams(n);
  std::vector<std::uint32_t> freq;
  if (options.prefilter) {
    std::vector<std::uint64_t> keys;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t s = 0; s + q <= len[p]; ++s) {
        keys.push_back(GramKey(text[p].data() + s, q));
      }
    }
    std::vector<std::uint64_t> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    freq.assign(distinct.size(), 0);
    std::size_t next = 0;
    for (std::size_t p = 0; p < n; ++p) {
      const std::size_t count = len[p] >= static_cast<std::size_t>(q)
                                    ? len[p] - q + 1
                                    : 0;
      grams[p].reserve(count);
      for (std::size_t s = 0; s < count; ++s) {
        const auto id = static_cast<std::uint32_t>(
            std::lower_bound(distinct.begin(), distinct.end(), keys[next++]) -
            distinct.begin());
        grams[p].push_back(id);
        ++freq[id];
      }
    }
  }

  // Full positional index, postings in length order.
  std::vector<std::uint32_t> list_start(freq.size() + 1, 0);
  for (std::size_t id = 0; id < freq.size(); ++id) {
    list_start[id + 1] = list_start[id] + freq[id];
  }
  std::vector<Posting> postings(list_start.back());
  {
    std::vector<std::uint32_t> fill(list_start.begin(), list_start.end() - 1);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t s = 0; s < grams[p].size(); ++s) {
        postings[fill[grams[p][s]]++] = {static_cast<std::uint32_t>(p),
                                         static_cast<std::uint32_t>(s)};
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> sorted_grams(n);
  for (std::size_t p = 0; p < n; ++p) {
    sorted_grams[p] = grams[p];
    std::sort(sorted_grams[p].begin(), sorted_grams[p].end());
  }

  auto verify = [&](std::size_t pi, std::size_t pj,
                    std::vector<SimilarPair> *out) {
    const std::size_t longest = len[pi];
    const std::size_t dmax = MaxDistance(t, longest);
    if (options.prefilter && longest >= static_cast<std::size_t>(q)) {
      // Count filter: shared grams (with multiplicity) >= M - q + 1 - q d.
      const long long need = static_cast<long long>(longest) - q + 1 -
                             static_cast<long long>(q) * dmax;
      if (need > 0) {
        const auto &a = sorted_grams[pi];
        const auto &b = sorted_grams[pj];
        long long shared = 0;
        std::size_t x = 0, y = 0;
        while (x < a.size() && y < b.size()) {
          if (shared + static_cast<long long>(
                           std::min(a.size() - x, b.size() - y)) < need) {
            return;
          }
          if (a[x] < b[y]) {
            ++x;
          } else if (b[y] < a[x]) {
            ++y;
          } else {
            ++shared;
            ++x;
            ++y;
          }
        }
        if (shared < need) return;
      }
    }
    const std::size_t d = BoundedLevenshtein(text[pi], text[pj], dmax);
    if (d > dmax) return;
    const double sim =
        longest == 0 ? 1.0
                     : 1.0 - static_cast<double>(d) / static_cast<double>(longest);
    if (sim < t) return;
    const std::string &ia = items[order[pi]].id;
    const std::string &ib = items[order[pj]].id;
    if (ia == ib) return;
    if (ia < ib) {
      out->push_back({ia, ib, sim});
    } else {
      out->push_back({ib, ia, sim});
    }
  };

  const int chunks = ChunkCount(n, options.threads);
  std::vector<std::vector<SimilarPair>> found(chunks);
  ParallelChunks(n, options.threads, [&](int w, std::size_t begin,
                                         std::size_t end) {
    std::vector<std::uint32_t> stamp(n, UINT32_MAX);
    std::vector<std::uint32_t> hits(n, 0);
    std::vector<std::uint32_t> last_gram(n, UINT32_MAX);
    std::vector<std::uint32_t> candidates;
    std::vector<std::uint32_t> cost;
    for (std::size_t pi = begin; pi < end; ++pi) {
      const std::size_t dmax = MaxDistance(t, len[pi]);
      const std::size_t first = static_cast<std::size_t>(
          std::lower_bound(len.begin(), len.begin() + pi,
                           len[pi] - std::min(len[pi], dmax)) -
          len.begin());
      candidates.clear();
      cost.clear();
      for (auto id : grams[pi]) cost.push_back(freq[id]);
      // dmax + k disjoint grams: at most dmax are touched, so a true partner
      // holds >= k of them untouched, each within dmax of its position.
      std::vector<std::uint32_t> chosen;
      std::size_t need_hits = kSurvivors;
      for (; need_hits > 0; --need_hits) {
        chosen = ChooseDisjointGrams(cost, q, dmax + need_hits);
        if (!chosen.empty()) break;
      }
      if (chosen.empty()) {
        // Too short for the pigeonhole argument: scan the whole band.
        for (std::size_t pj = first; pj < pi; ++pj) {
          candidates.push_back(static_cast<std::uint32_t>(pj));
        }
      }
      for (std::size_t c = 0; c < chosen.size(); ++c) {
        const std::uint32_t s = chosen[c];
        const std::uint32_t id = grams[pi][s];
        auto lb = std::lower_bound(
            postings.begin() + list_start[id],
            postings.begin() + list_start[id + 1], first,
            [](const Posting &x, std::size_t v) { return x.item < v; });
        for (auto it = lb; it != postings.begin() + list_start[id + 1]; ++it) {
          if (it->item >= pi) break;
          const std::size_t shift =
              it->start > s ? it->start - s : s - it->start;
          if (shift > dmax) continue;
          // One count per chosen gram; `stamp` encodes (probe, gram).
          const std::uint32_t mark = static_cast<std::uint32_t>(c);
          if (stamp[it->item] != pi) {
            stamp[it->item] = static_cast<std::uint32_t>(pi);
            hits[it->item] = 0;
            last_gram[it->item] = UINT32_MAX;
          }
          if (last_gram[it->item] == mark) continue;
          last_gram[it->item] = mark;
          if (++hits[it->item] == need_hits) candidates.push_back(it->item);
        }
      }
      for (std::uint32_t pj : candidates) verify(pi, pj, &found[w]);
    }
  });

  std::vector<SimilarPair> pairs;
  for (auto &f : found) pairs.insert(pairs.end(), f.begin(), f.end());
  std::sort(pairs.begin(), pairs.end(), [](const auto &x, const auto &y) {
    return x.first != y.first ? x.first < y.first : x.second < y.second;
  });
  pairs.erase(std::unique(pairs.begin(), pairs.end(),
                          [](const auto &x, const auto &y) {
                            return x.first == y.first && x.second == y.second;
                          }),
              pairs.end());
  return pairs;
}

std::string CueNames(CueSet cues) {
  static constexpr std::pair<Cue, const char *> kNames[] = {
      {kNumericUsername, "NumericUsername"},
      {kNearDuplicate, "NearDuplicate"},
      {kRepeatedToken, "RepeatedToken"},
      {kRepeatedChar, "RepeatedChar"},
  };
  std::string out;
  for (const auto &[bit, name] : kNames) {
    if (!(cues & bit)) continue;
    if (!out.empty()) out += '|';
    out += name;
  }
  return out;
}

std::vector<FakeFlag> FlagFakes(const Corpus &corpus,
                                const SimilarityConfig &config) {
  const std::size_t n = corpus.size();
  std::vector<CueSet> cues(n, 0);
  ParallelChunks(n, config.threads, [&](int, std::size_t begin,
                                        std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Review &r = corpus[i];
      if (CueNumericUsername(r.username)) cues[i] |= kNumericUsername;
      if (CueRepeatedToken(r.body)) cues[i] |= kRepeatedToken;
      if (CueRepeatedChar(r.body)) cues[i] |= kRepeatedChar;
    }
  });

  std::vector<SimilarityItem> names, bodies;
  for (const Review &r : corpus) {
    std::string lowered = Normalize(r.username).lowered;
    if (CharCount(lowered) >= config.min_username_len) {
      names.push_back({r.id, std::move(lowered)});
    }
    if (CharCount(r.body) >= config.min_body_len) {
      bodies.push_back({r.id, Normalize(r.body).lowered});
    }
  }
  std::map<std::string, std::set<std::string>> partners;
  auto collect = [&](const std::vector<SimilarPair> &pairs) {
    for (const auto &p : pairs) {
      partners[p.first].insert(p.second);
      partners[p.second].insert(p.first);
    }
  };
  collect(SimilarityPairs(names, {config.username_threshold,
                                  config.username_qgram, true,
                                  config.threads}));
  collect(SimilarityPairs(bodies, {config.body_threshold, config.body_qgram,
                                   true, config.threads}));

  std::vector<FakeFlag> flags;
  for (std::size_t i = 0; i < n; ++i) {
    const Review &r = corpus[i];
    FakeFlag flag;
    flag.review_id = r.id;
    flag.cues = cues[i];
    if (auto it = partners.find(r.id); it != partners.end()) {
      flag.cues |= kNearDuplicate;
      flag.partner_ids.assign(it->second.begin(), it->second.end());
    }
    if (flag.cues != 0) flags.push_back(std::move(flag));
  }
  return flags;
}

Corpus AnnotateCues(const Corpus &corpus, const std::vector<FakeFlag> &flags) {
  std::unordered_map<std::string, CueSet> by_id;
  for (const auto &f : flags) by_id[f.review_id] = f.cues;
  return corpus.Transform([&](Review &r) {
    auto it = by_id.find(r.id);
    r.cues = it == by_id.end() ? CueSet{0} : it->second;
  });
}

}  // namespace revbomb
