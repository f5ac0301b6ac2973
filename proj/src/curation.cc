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


#include "revbomb/curation.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <random>
#include <unordered_set>

#include "httplib.h"
#include "revbomb/errors.h"
#include "revbomb/text.h"
#include "revbomb/unicode.h"

namespace revbomb {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// FNV-1a; stable across platforms, unlike std::hash.
std::uint64_t Fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string Hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

bool WordCharAt(std::string_view s, std::size_t pos) {
  std::size_t p = pos;
  return pos < s.size() && IsWordChar(NextCodePoint(s, p));
}

bool WordCharBefore(std::string_view s, std::size_t pos) {
  return pos > 0 && IsWordChar(PrevCodePoint(s, pos));
}

// Byte offset reached by walking `n` code points back (or forward) from pos.
std::size_t Back(std::string_view s, std::size_t pos, std::size_t n) {
  while (n-- > 0 && pos > 0) {
    do {
      --pos;
    } while (pos > 0 && (static_cast<unsigned char>(s[pos]) & 0xC0) == 0x80);
  }
  return pos;
}

std::size_t Forward(std::string_view s, std::size_t pos, std::size_t n) {
  while (n-- > 0 && pos < s.size()) NextCodePoint(s, pos);
  return pos;
}

}  // namespace

std::shared_ptr<const ExpansionState> CurationService::Slot::Load() const {
  std::lock_guard lock(swap);
  return state;
}

void CurationService::Slot::Store(std::shared_ptr<const ExpansionState> next) {
  std::lock_guard lock(swap);
  state = std::move(next);
}

CurationService::CurationService(Corpus corpus, std::vector<Vocabulary> vocabs,
                                 std::vector<std::string> paths,
                                 CurationOptions options)
    : corpus_(std::move(corpus)), options_(std::move(options)) {
  if (paths.size() != vocabs.size()) {
    throw ConfigError("one persistence path per vocabulary is required");
  }
  if (options_.page_size == 0) throw ConfigError("page size must be >= 1");
  lowered_.reserve(corpus_.size());
  std::vector<LabelAssignment> unlabeled(corpus_.size());
  std::uint64_t h = Fnv1a(std::to_string(options_.seed));
  for (const Review &r : corpus_) {
    lowered_.push_back(Normalize(r.body).lowered);
    unlabeled[lowered_.size() - 1].review_id = r.id;
    h = Fnv1a(r.id, h);
    h = Fnv1a("\n", h);
  }
  session_id_ = Hex(h);
  frame_ = BuildFrame(corpus_, unlabeled,
                      nullptr, nullptr, options_.expansion.threads);
  for (std::size_t i = 0; i < vocabs.size(); ++i) {
    auto slot = std::make_unique<Slot>();
    slot->label = vocabs[i].label();
    slot->path = paths[i];
    for (const auto &other : slots_) {
      if (other->label == slot->label) {
        throw ConfigError("two vocabularies share label " + slot->label);
      }
    }
    slot->state = std::make_shared<const ExpansionState>(
        StartExpansion(corpus_, std::move(vocabs[i]), options_.expansion));
    slots_.push_back(std::move(slot));
  }
}

CurationService::Slot &CurationService::Find(const std::string &label) const {
  for (const auto &slot : slots_) {
    if (slot->label == label) return *slot;
  }
  throw NotFound("unknown label '" + label + "'");
}

std::shared_ptr<const ExpansionState> CurationService::State(
    const std::string &label) const {
  return Find(label).Load();
}

ordered_json CurationService::Summary(const Slot &slot,
                                      const ExpansionState &s) {
  return {{"label", slot.label},
          {"version", s.vocabulary.version()},
          {"round", s.round},
          {"filtered", s.filtered_ids.size()},
          {"converged", s.converged}};
}

ordered_json CurationService::Session() const {
  ordered_json labels = ordered_json::array();
  for (const auto &slot : slots_) labels.push_back(Summary(*slot, *slot->Load()));
  return {{"session_id", session_id_},
          {"reviews", corpus_.size()},
          {"seed", options_.seed},
          {"page_size", options_.page_size},
          {"top_k", options_.expansion.top_k},
          {"labels", labels}};
}

ordered_json CurationService::Labels() const {
  ordered_json out = ordered_json::array();
  for (const auto &slot : slots_) {
    const auto s = slot->Load();
    ordered_json j = Summary(*slot, *s);
    j["prior"] = s->vocabulary.CountOrigin(Origin::kPrior);
    j["posterior"] = s->vocabulary.CountOrigin(Origin::kPosterior);
    out.push_back(std::move(j));
  }
  return out;
}

ordered_json CurationService::Candidates(const std::string &label,
                                         std::size_t page) const {
  if (page == 0) throw ConfigError("page numbers start at 1");
  const Slot &slot = Find(label);
  const auto s = slot.Load();
  ordered_json items = ordered_json::array();
  const std::size_t begin = (page - 1) * options_.page_size;
  for (std::size_t i = begin;
       i < s->candidates.size() && i < begin + options_.page_size; ++i) {
    items.push_back(
        {{"token", s->candidates[i].token}, {"count", s->candidates[i].count}});
  }
  ordered_json j = Summary(slot, *s);
  j["page"] = page;
  j["page_size"] = options_.page_size;
  j["total"] = s->candidates.size();
  j["candidates"] = std::move(items);
  return j;
}

std::vector<KwicSnippet> CurationService::Kwic(const std::string &token,
                                               std::size_t limit) const {
  const std::string needle = Normalize(token).lowered;
  if (needle.empty() || limit == 0) return {};
  // One hit per review: its first whole-word occurrence.
  std::vector<std::pair<std::size_t, std::size_t>> hits;
  for (std::size_t i = 0; i < lowered_.size(); ++i) {
    const std::string_view text = lowered_[i];
    for (std::size_t pos = text.find(needle); pos != std::string_view::npos;
         pos = text.find(needle, pos + 1)) {
      if (!WordCharBefore(text, pos) && !WordCharAt(text, pos + needle.size())) {
        hits.emplace_back(i, pos);
        break;
      }
    }
  }
  if (hits.size() > limit) {
    std::mt19937_64 rng(options_.seed ^ Fnv1a(needle));
    std::vector<std::pair<std::size_t, std::size_t>> picked;
    std::sample(hits.begin(), hits.end(), std::back_inserter(picked), limit,
                rng);
    std::sort(picked.begin(), picked.end());  // corpus order
    hits = std::move(picked);
  }
  std::vector<KwicSnippet> out;
  for (const auto &[i, pos] : hits) {
    const std::string_view text = lowered_[i];
    const std::size_t end = pos + needle.size();
    const std::size_t lo = Back(text, pos, options_.kwic_window);
    const std::size_t hi = Forward(text, end, options_.kwic_window);
    out.push_back({corpus_[i].id, std::string(text.substr(lo, pos - lo)),
                   std::string(text.substr(pos, needle.size())),
                   std::string(text.substr(end, hi - end)), corpus_[i].score,
                   FormatDay(corpus_[i].day)});
  }
  return out;
}

ordered_json CurationService::Accept(const std::string &label,
                                     const std::vector<std::string> &surfaces,
                                     std::uint64_t version) {
  Slot &slot = Find(label);
  std::lock_guard writer(slot.writer);
  const auto current = slot.Load();
  if (version != current->vocabulary.version()) {
    throw VersionConflict("vocabulary " + label + " is at version " +
                          std::to_string(current->vocabulary.version()) +
                          ", request carried " + std::to_string(version) +
                          "; refresh and resubmit");
  }
  auto next = std::make_shared<const ExpansionState>(
      ExpansionStep(*current, surfaces, corpus_, options_.expansion));
  if (!slot.path.empty() && !surfaces.empty()) {
    SaveVocabulary(next->vocabulary, slot.path);
  }
  slot.Store(next);
  ordered_json j = Summary(slot, *next);
  j["newly_labeled"] = current->filtered_ids.size() - next->filtered_ids.size();
  return j;
}

ordered_json CurationService::Preview(const std::string &label) const {
  const Slot &slot = Find(label);
  const auto s = slot.Load();
  std::unordered_set<std::string_view> unlabeled(s->filtered_ids.begin(),
                                                 s->filtered_ids.end());
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < corpus_.size(); ++i) {
    if (!unlabeled.contains(corpus_[i].id)) idx.push_back(i);
  }
  const StatRow row = Summarize(frame_, idx, {label});
  return {{"label", label},
          {"version", s->vocabulary.version()},
          {"n", row.n},
          {"mean_x", row.mean_x},
          {"f_x10", row.f_x10},
          {"f_xlt2", row.f_xlt2},
          {"med_d", row.med_d},
          {"f_k1", row.f_k1}};
}

ordered_json CurationService::Export() const {
  ordered_json files = ordered_json::array();
  for (const auto &slot : slots_) {
    const auto s = slot->Load();
    files.push_back({{"label", slot->label},
                     {"version", s->vocabulary.version()},
                     {"path", slot->path},
                     {"contents", SerializeVocabulary(s->vocabulary)}});
  }
  return {{"files", files}};
}

ordered_json KwicToJson(const std::vector<KwicSnippet> &snippets) {
  ordered_json out = ordered_json::array();
  for (const auto &s : snippets) {
    out.push_back({{"review_id", s.review_id},
                   {"left", s.left},
                   {"match", s.match},
                   {"right", s.right},
                   {"score", s.score},
                   {"day", s.day}});
  }
  return out;
}

namespace {

void Reply(httplib::Response &res, int status, const ordered_json &body) {
  res.status = status;
  res.set_content(body.dump() + "\n", "application/json");
}

template <typename Fn>
httplib::Server::Handler Guarded(Fn fn) {
  return [fn](const httplib::Request &req, httplib::Response &res) {
    try {
      Reply(res, 200, fn(req));
    } catch (const NotFound &e) {
      Reply(res, 404, {{"error", e.what()}});
    } catch (const VersionConflict &e) {
      Reply(res, 409, {{"error", e.what()}});
    } catch (const ConfigError &e) {
      Reply(res, 400, {{"error", e.what()}});
    } catch (const DataError &e) {
      Reply(res, 400, {{"error", e.what()}});
    } catch (const json::exception &e) {
      Reply(res, 400, {{"error", std::string("malformed request: ") + e.what()}});
    } catch (const std::exception &e) {
      Reply(res, 500, {{"error", e.what()}});
    }
  };
}

std::string Param(const httplib::Request &req, const char *name) {
  if (!req.has_param(name)) {
    throw ConfigError(std::string("missing query parameter '") + name + "'");
  }
  return req.get_param_value(name);
}

std::size_t NumberParam(const httplib::Request &req, const char *name,
                        std::size_t fallback) {
  if (!req.has_param(name)) return fallback;
  const std::string v = req.get_param_value(name);
  std::size_t out = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || p != v.data() + v.size()) {
    throw ConfigError(std::string("query parameter '") + name +
                      "' is not a non-negative integer");
  }
  return out;
}

}  // namespace

void RegisterCurationRoutes(httplib::Server &server, CurationService &service) {
  server.Get("/session", Guarded([&](const httplib::Request &) {
               return service.Session();
             }));
  server.Get("/labels", Guarded([&](const httplib::Request &) {
               return ordered_json{{"labels", service.Labels()}};
             }));
  server.Get("/candidates", Guarded([&](const httplib::Request &req) {
               return service.Candidates(Param(req, "label"),
                                         NumberParam(req, "page", 1));
             }));
  server.Get("/kwic", Guarded([&](const httplib::Request &req) {
               const std::string token = Param(req, "token");
               return ordered_json{
                   {"token", token},
                   {"snippets", KwicToJson(service.Kwic(
                                    token, NumberParam(req, "limit", 20)))}};
             }));
  server.Get("/preview", Guarded([&](const httplib::Request &req) {
               return service.Preview(Param(req, "label"));
             }));
  server.Get("/export", Guarded([&](const httplib::Request &) {
               return service.Export();
             }));
  server.Post("/accept", Guarded([&](const httplib::Request &req) {
                const json body = json::parse(req.body);
                return service.Accept(
                    body.at("label").get<std::string>(),
                    body.at("surfaces").get<std::vector<std::string>>(),
                    body.at("version").get<std::uint64_t>());
              }));
}

}  // namespace revbomb
