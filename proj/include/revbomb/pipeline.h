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


// Batch driver: configuration, stage orchestration and artifact output.
//
// A run writes into a staging directory next to the output directory and
// swaps it in only when every stage succeeded. A failed run leaves the
// output directory holding nothing but manifest.json, which records the
// failing stage and its cause. Data files never contain timestamps, so two
// runs over identical inputs produce identical tables.

#ifndef REVBOMB_PIPELINE_H_
#define REVBOMB_PIPELINE_H_

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "revbomb/corpus.h"
#include "revbomb/fakes.h"
#include "revbomb/phases.h"
#include "revbomb/table.h"
#include "revbomb/text.h"
#include "revbomb/vocab.h"

namespace revbomb {

std::string_view ToolVersion();

struct PipelineConfig {
  std::vector<std::string> inputs;
  std::string format = "delimited-table";
  bool strict = false;
  bool english_only = true;
  std::string language_groups;     // empty: shipped scheme
  std::string language_overrides;  // optional id,code table
  std::string user_history;        // optional username,prior_reviews table
  std::vector<std::string> vocabularies;  // empty: shipped P, Q, M, T
  std::string stopwords;                  // empty: shipped English list
  SimilarityConfig fake;
  int phase_count = 5;
  PhaseMode phase_mode = PhaseMode::kDayAligned;
  std::size_t top_k = 2000;
  int threads = 0;
  std::string out_dir = "out";
  bool plot = false;
  // Where `label` and `serve` keep curated copies of the shipped
  // vocabularies when `vocabularies` is empty.
  std::string curation_dir = "curation";
};

// Every key is optional; unknown keys throw ConfigError. Relative paths are
// resolved against `base_dir`.
PipelineConfig ConfigFromJson(const nlohmann::json &j,
                              const std::string &base_dir = "");
PipelineConfig LoadConfig(const std::string &path);
nlohmann::ordered_json ConfigToJson(const PipelineConfig &cfg);

// Problems that would stop a run; empty when the config is usable.
std::vector<std::string> ValidateConfig(const PipelineConfig &cfg);

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

struct RunManifest {
  std::string status = "ok";  // "ok" or "failed"
  std::string failed_stage;
  std::string error;
  nlohmann::ordered_json config;
  std::map<std::string, std::uint64_t> vocabulary_versions;
  std::vector<StageTiming> timings;
  // ingested, rejected, language_filtered_out, analyzed, flagged,
  // labeled_<L> for each label.
  std::map<std::string, std::size_t> counts;
  std::vector<std::string> warnings;
  std::vector<std::string> outputs;  // paths relative to the output dir

  nlohmann::ordered_json ToJson() const;
};

// Thrown by RunPipeline; carries the manifest already written to disk.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(const std::string &what, RunManifest manifest, int kind)
      : std::runtime_error(what), manifest_(std::move(manifest)), kind_(kind) {}
  const RunManifest &manifest() const { return manifest_; }
  // 1 config, 2 data, 3 internal.
  int kind() const { return kind_; }

 private:
  RunManifest manifest_;
  int kind_;
};

RunManifest RunPipeline(const PipelineConfig &cfg);

struct PreparedCorpus {
  Corpus corpus;  // analyzed reviews, language-tagged
  std::vector<std::pair<std::string, Rejection>> rejected;  // (source, row)
  std::size_t records = 0;
  std::size_t language_filtered_out = 0;
  Table table1;  // language summary before filtering
  std::vector<std::string> warnings;
};

// Ingest, user history and language stages. `on_stage` is called with each
// stage name as it begins. Throws DataError when nothing survives.
PreparedCorpus PrepareCorpus(
    const PipelineConfig &cfg,
    const std::function<void(const std::string &)> &on_stage = {});

// The configured vocabularies, or the shipped ones when none are given.
std::vector<Vocabulary> LoadVocabularies(const PipelineConfig &cfg,
                                         std::vector<std::string> *warnings);

// Vocabulary files the curation loop reads and writes, one per label in
// `vocabs` order. Without configured files, shipped vocabularies are copied
// into curation_dir on first use and read back from there afterwards.
std::vector<std::string> CurationPaths(const PipelineConfig &cfg,
                                       std::vector<Vocabulary> *vocabs,
                                       std::vector<std::string> *warnings);

StopList LoadStopwords(const PipelineConfig &cfg);

// Tables written by a run, read back from <out>/tables/*.json.
std::vector<Table> LoadTables(const std::string &out_dir);
Table TableFromJson(const nlohmann::json &j);

// Markdown report over the given tables (2-decimal rendering).
std::string RenderReport(const std::vector<Table> &tables,
                         const nlohmann::json &manifest);
// Writes report.md and, when plot is set, plots/*.svg. Returns the paths
// written, relative to out_dir.
std::vector<std::string> WriteReport(const std::string &out_dir, bool plot);

}  // namespace revbomb

#endif  // REVBOMB_PIPELINE_H_
