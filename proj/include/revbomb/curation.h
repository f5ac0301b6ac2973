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


// Curation session: the vocabulary-expansion loop behind a local HTTP API.
//
// Each label's ExpansionState is an immutable snapshot. Readers copy the
// current shared_ptr and never wait for a writer. An accept computes the
// next snapshot off to the side, serialized per label, and swaps it in only
// if the client's version token still matches. Vocabulary files are written
// after every accepted round, so a restarted session rebuilt from the same
// corpus and files shows the same candidates.

#ifndef REVBOMB_CURATION_H_
#define REVBOMB_CURATION_H_

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "revbomb/corpus.h"
#include "revbomb/stats.h"
#include "revbomb/vocab.h"

namespace httplib {
class Server;
}

namespace revbomb {

// Unknown label; mapped to HTTP 404.
class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CurationOptions {
  ExpansionOptions expansion;
  std::uint64_t seed = 1;  // KWIC sampling seed
  std::size_t page_size = 50;
  std::size_t kwic_window = 40;  // code points of context on each side
};

struct KwicSnippet {
  std::string review_id;
  std::string left;
  std::string match;
  std::string right;
  int score = 0;
  std::string day;
};

class CurationService {
 public:
  // `paths[i]` is where vocabs[i] is persisted after each accepted round;
  // an empty path disables persistence for that label.
  CurationService(Corpus corpus, std::vector<Vocabulary> vocabs,
                  std::vector<std::string> paths, CurationOptions options);

  nlohmann::ordered_json Session() const;
  nlohmann::ordered_json Labels() const;
  // Page numbers start at 1; a page past the end is empty.
  nlohmann::ordered_json Candidates(const std::string &label,
                                    std::size_t page) const;
  std::vector<KwicSnippet> Kwic(const std::string &token,
                                std::size_t limit) const;
  // Throws VersionConflict when `version` is stale and DataError when a
  // surface is already present.
  nlohmann::ordered_json Accept(const std::string &label,
                                const std::vector<std::string> &surfaces,
                                std::uint64_t version);
  nlohmann::ordered_json Preview(const std::string &label) const;
  // Serialized vocabulary files, in label order.
  nlohmann::ordered_json Export() const;

  std::shared_ptr<const ExpansionState> State(const std::string &label) const;
  const std::string &session_id() const { return session_id_; }

 private:
  struct Slot {
    std::string label;
    std::string path;
    std::mutex writer;
    mutable std::mutex swap;
    std::shared_ptr<const ExpansionState> state;

    std::shared_ptr<const ExpansionState> Load() const;
    void Store(std::shared_ptr<const ExpansionState> next);
  };

  Slot &Find(const std::string &label) const;
  static nlohmann::ordered_json Summary(const Slot &slot,
                                        const ExpansionState &s);

  Corpus corpus_;
  std::vector<std::string> lowered_;  // normalized body per review
  AnalysisFrame frame_;                // per-review score, D, k
  CurationOptions options_;
  std::string session_id_;
  std::vector<std::unique_ptr<Slot>> slots_;
};

nlohmann::ordered_json KwicToJson(const std::vector<KwicSnippet> &snippets);

// Registers GET /session, /labels, /candidates, /kwic, /preview, /export and
// POST /accept. Errors come back as {"error": ...} with 400, 404 or 409.
void RegisterCurationRoutes(httplib::Server &server, CurationService &service);

}  // namespace revbomb

#endif  // REVBOMB_CURATION_H_
