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


#include "revbomb/pipeline.h"

#include <algorithm>
#include <chrono>
#include <limits>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "revbomb/data.h"
#include "revbomb/errors.h"
#include "revbomb/langid.h"
#include "revbomb/plot.h"
#include "revbomb/stats.h"
#include "revbomb/text.h"
#include "revbomb/vocab.h"

#ifndef REVBOMB_VERSION
#define REVBOMB_VERSION "0.0.0"
#endif

namespace revbomb {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

std::string_view ToolVersion() { return REVBOMB_VERSION; }

namespace {

void CheckKeys(const json &j, const std::string &where,
               const std::set<std::string> &allowed) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto &[key, _] : j.items()) {
    if (!allowed.contains(key)) {
      throw ConfigError("unknown config key '" +
                        (where.empty() ? key : where + "." + key) + "'");
    }
  }
}

template <typename T>
void Read(const json &j, const char *key, const std::string &where, T *out) {
  if (!j.contains(key)) return;
  try {
    *out = j.at(key).get<T>();
  } catch (const json::exception &) {
    throw ConfigError("config key '" + (where.empty() ? "" : where + ".") +
                      key + "' has the wrong type");
  }
}

std::string Resolve(const std::string &base, const std::string &path) {
  if (path.empty() || base.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(base) / path).lexically_normal().string();
}

bool InUnitInterval(double v) { return v > 0.0 && v <= 1.0; }

}  // namespace

PipelineConfig ConfigFromJson(const json &j, const std::string &base_dir) {
  PipelineConfig cfg;
  CheckKeys(j, "",
            {"input", "inputs", "format", "strict", "english_only", "language",
             "user_history", "vocabularies", "stopwords", "fake", "phases",
             "top_k", "threads", "out", "plot", "curation_dir"});
  if (j.contains("input")) {
    std::string one;
    Read(j, "input", "", &one);
    cfg.inputs.push_back(one);
  }
  Read(j, "inputs", "", &cfg.inputs);
  Read(j, "format", "", &cfg.format);
  Read(j, "strict", "", &cfg.strict);
  Read(j, "english_only", "", &cfg.english_only);
  if (j.contains("language")) {
    const json &l = j.at("language");
    CheckKeys(l, "language", {"groups", "overrides"});
    Read(l, "groups", "language", &cfg.language_groups);
    Read(l, "overrides", "language", &cfg.language_overrides);
  }
  Read(j, "user_history", "", &cfg.user_history);
  Read(j, "vocabularies", "", &cfg.vocabularies);
  Read(j, "stopwords", "", &cfg.stopwords);
  if (j.contains("fake")) {
    const json &f = j.at("fake");
    CheckKeys(f, "fake",
              {"username_threshold", "body_threshold", "min_username_len",
               "min_body_len", "username_qgram", "body_qgram"});
    Read(f, "username_threshold", "fake", &cfg.fake.username_threshold);
    Read(f, "body_threshold", "fake", &cfg.fake.body_threshold);
    Read(f, "min_username_len", "fake", &cfg.fake.min_username_len);
    Read(f, "min_body_len", "fake", &cfg.fake.min_body_len);
    Read(f, "username_qgram", "fake", &cfg.fake.username_qgram);
    Read(f, "body_qgram", "fake", &cfg.fake.body_qgram);
  }
  if (j.contains("phases")) {
    const json &p = j.at("phases");
    CheckKeys(p, "phases", {"count", "mode"});
    Read(p, "count", "phases", &cfg.phase_count);
    std::string mode(PhaseModeName(cfg.phase_mode));
    Read(p, "mode", "phases", &mode);
    cfg.phase_mode = ParsePhaseMode(mode);
  }
  Read(j, "top_k", "", &cfg.top_k);
  Read(j, "threads", "", &cfg.threads);
  Read(j, "out", "", &cfg.out_dir);
  Read(j, "plot", "", &cfg.plot);
  Read(j, "curation_dir", "", &cfg.curation_dir);

  for (auto &in : cfg.inputs) in = Resolve(base_dir, in);
  for (auto &v : cfg.vocabularies) v = Resolve(base_dir, v);
  cfg.language_groups = Resolve(base_dir, cfg.language_groups);
  cfg.language_overrides = Resolve(base_dir, cfg.language_overrides);
  cfg.user_history = Resolve(base_dir, cfg.user_history);
  cfg.stopwords = Resolve(base_dir, cfg.stopwords);
  cfg.out_dir = Resolve(base_dir, cfg.out_dir);
  cfg.curation_dir = Resolve(base_dir, cfg.curation_dir);
  return cfg;
}

PipelineConfig LoadConfig(const std::string &path) {
  json j;
  try {
    j = json::parse(ReadFile(path));
  } catch (const json::exception &e) {
    throw ConfigError(path + ": invalid JSON: " + e.what());
  }
  return ConfigFromJson(j, fs::path(path).parent_path().string());
}

ordered_json ConfigToJson(const PipelineConfig &cfg) {
  ordered_json j;
  j["inputs"] = cfg.inputs;
  j["format"] = cfg.format;
  j["strict"] = cfg.strict;
  j["english_only"] = cfg.english_only;
  j["language"] = {{"groups", cfg.language_groups},
                   {"overrides", cfg.language_overrides}};
  j["user_history"] = cfg.user_history;
  j["vocabularies"] = cfg.vocabularies;
  j["stopwords"] = cfg.stopwords;
  j["fake"] = {{"username_threshold", cfg.fake.username_threshold},
               {"body_threshold", cfg.fake.body_threshold},
               {"min_username_len", cfg.fake.min_username_len},
               {"min_body_len", cfg.fake.min_body_len},
               {"username_qgram", cfg.fake.username_qgram},
               {"body_qgram", cfg.fake.body_qgram}};
  j["phases"] = {{"count", cfg.phase_count},
                 {"mode", std::string(PhaseModeName(cfg.phase_mode))}};
  j["top_k"] = cfg.top_k;
  j["threads"] = cfg.threads;
  j["out"] = cfg.out_dir;
  j["plot"] = cfg.plot;
  j["curation_dir"] = cfg.curation_dir;
  return j;
}

std::vector<std::string> ValidateConfig(const PipelineConfig &cfg) {
  std::vector<std::string> problems;
  auto need_file = [&](const std::string &path, const std::string &what) {
    if (!path.empty() && !fs::is_regular_file(path)) {
      problems.push_back(what + " not found: " + path);
    }
  };
  if (cfg.inputs.empty()) problems.push_back("no input files given");
  for (const auto &in : cfg.inputs) need_file(in, "input file");
  try {
    ParseInputFormat(cfg.format);
  } catch (const ConfigError &e) {
    problems.push_back(e.what());
  }
  need_file(cfg.language_groups, "language grouping file");
  need_file(cfg.language_overrides, "language override file");
  need_file(cfg.user_history, "user history file");
  for (const auto &v : cfg.vocabularies) need_file(v, "vocabulary file");
  need_file(cfg.stopwords, "stop-word file");
  if (!InUnitInterval(cfg.fake.username_threshold)) {
    problems.push_back("fake.username_threshold out of (0,1]");
  }
  if (!InUnitInterval(cfg.fake.body_threshold)) {
    problems.push_back("fake.body_threshold out of (0,1]");
  }
  if (cfg.fake.username_qgram < 1) {
    problems.push_back("fake.username_qgram must be >= 1");
  }
  if (cfg.fake.body_qgram < 1) problems.push_back("fake.body_qgram must be >= 1");
  if (cfg.phase_count < 1) problems.push_back("phases.count must be >= 1");
  if (cfg.top_k < 1) problems.push_back("top_k must be >= 1");
  if (cfg.threads < 0) problems.push_back("threads must be >= 0");
  if (cfg.out_dir.empty()) {
    problems.push_back("output directory not set");
  } else if (fs::exists(cfg.out_dir)) {
    if (!fs::is_directory(cfg.out_dir)) {
      problems.push_back("output path is not a directory: " + cfg.out_dir);
    } else if (!fs::is_empty(cfg.out_dir) &&
               !fs::exists(fs::path(cfg.out_dir) / "manifest.json")) {
      problems.push_back("output directory is not empty and holds no earlier "
                         "run: " + cfg.out_dir);
    }
  }
  return problems;
}

ordered_json RunManifest::ToJson() const {
  ordered_json j;
  j["tool_version"] = std::string(ToolVersion());
  j["status"] = status;
  if (status != "ok") {
    j["failed_stage"] = failed_stage;
    j["error"] = error;
  }
  j["config"] = config;
  j["vocabulary_versions"] = vocabulary_versions;
  ordered_json t = ordered_json::array();
  for (const auto &s : timings) t.push_back({{"stage", s.stage}, {"seconds", s.seconds}});
  j["timings"] = t;
  j["counts"] = counts;
  j["warnings"] = warnings;
  j["outputs"] = outputs;
  return j;
}

namespace {

void WriteText(const fs::path &path, std::string_view contents) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << contents;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string FlagsCsv(const std::vector<FakeFlag> &flags) {
  std::string out = "review_id,cues,partner_ids\n";
  for (const auto &f : flags) {
    std::string partners;
    for (const auto &p : f.partner_ids) {
      if (!partners.empty()) partners += ' ';
      partners += p;
    }
    out += QuoteField(f.review_id) + "," + CueNames(f.cues) + "," +
           QuoteField(partners) + "\n";
  }
  return out;
}

std::string LabelsCsv(const AnalysisFrame &frame, const Corpus &corpus) {
  std::string out = "review_id";
  for (const auto &l : frame.labels) out += "," + QuoteField(l);
  out += ",cluster,phase\n";
  for (std::size_t i = 0; i < frame.rows.size(); ++i) {
    out += QuoteField(corpus[i].id);
    for (std::size_t l = 0; l < frame.labels.size(); ++l) {
      out += (frame.rows[i].labels >> l) & 1u ? ",1" : ",0";
    }
    out += "," + std::string(ClusterName(frame.Cluster(i))) + "," +
           std::to_string(frame.rows[i].phase) + "\n";
  }
  return out;
}

int ErrorKind(const std::exception &e) {
  if (dynamic_cast<const ConfigError *>(&e)) return 1;
  if (dynamic_cast<const DataError *>(&e)) return 2;
  return 3;
}

}  // namespace

PreparedCorpus PrepareCorpus(
    const PipelineConfig &cfg,
    const std::function<void(const std::string &)> &on_stage) {
  auto begin = [&](const char *name) {
    if (on_stage) on_stage(name);
  };
  PreparedCorpus out;
  begin("ingest");
  const InputFormat format = ParseInputFormat(cfg.format);
  std::vector<Review> all;
  for (const auto &path : cfg.inputs) {
    IngestResult r = IngestFile(path, format, cfg.strict);
    out.records += r.records;
    for (auto &rej : r.rejected) out.rejected.push_back({path, rej});
    for (auto &w : r.warnings) out.warnings.push_back(path + ": " + w);
    all.insert(all.end(), r.corpus.begin(), r.corpus.end());
  }
  // Throws DataError when ids collide across input files.
  Corpus corpus(std::move(all),
                {cfg.inputs.size() == 1 ? cfg.inputs[0] : "<multiple>", ""});

  begin("history");
  if (!cfg.user_history.empty()) {
    HistoryResult h =
        AttachUserHistory(corpus, LoadUserHistory(cfg.user_history));
    if (h.missing > 0) {
      out.warnings.push_back(std::to_string(h.missing) +
                             " reviews by users absent from the history file");
    }
    corpus = std::move(h.corpus);
  }

  begin("language");
  const GroupingScheme scheme = cfg.language_groups.empty()
                                    ? GroupingScheme()
                                    : GroupingScheme::Load(cfg.language_groups);
  corpus = TagLanguages(corpus, LanguageDetector());
  if (!cfg.language_overrides.empty()) {
    corpus = ApplyOverrides(corpus, LoadOverrides(cfg.language_overrides)).corpus;
  }
  out.table1 = Table1(corpus, scheme);
  const std::size_t before = corpus.size();
  if (cfg.english_only) {
    corpus = corpus.Filter(
        [](const Review &r) { return r.language && r.language->code == "en"; });
  }
  out.language_filtered_out = before - corpus.size();
  if (corpus.empty()) throw DataError("empty corpus after filtering");
  out.corpus = std::move(corpus);
  return out;
}

std::vector<Vocabulary> LoadVocabularies(const PipelineConfig &cfg,
                                         std::vector<std::string> *warnings) {
  if (cfg.vocabularies.empty()) return ShippedVocabularies();
  std::vector<Vocabulary> vocabs;
  std::set<std::string> labels;
  for (const auto &path : cfg.vocabularies) {
    VocabularyLoad load = LoadVocabulary(path, cfg.strict);
    for (auto &w : load.warnings) warnings->push_back(path + ": " + w);
    if (!labels.insert(load.vocabulary.label()).second) {
      throw ConfigError("two vocabularies share label " +
                        load.vocabulary.label());
    }
    vocabs.push_back(std::move(load.vocabulary));
  }
  return vocabs;
}

std::vector<std::string> CurationPaths(const PipelineConfig &cfg,
                                       std::vector<Vocabulary> *vocabs,
                                       std::vector<std::string> *warnings) {
  if (!cfg.vocabularies.empty()) {
    *vocabs = LoadVocabularies(cfg, warnings);
    return cfg.vocabularies;
  }
  std::vector<std::string> paths;
  vocabs->clear();
  for (Vocabulary &shipped : ShippedVocabularies()) {
    const std::string path =
        (fs::path(cfg.curation_dir) / (shipped.label() + ".txt")).string();
    if (fs::exists(path)) {
      VocabularyLoad load = LoadVocabulary(path, cfg.strict);
      for (auto &w : load.warnings) warnings->push_back(path + ": " + w);
      vocabs->push_back(std::move(load.vocabulary));
    } else {
      fs::create_directories(cfg.curation_dir);
      SaveVocabulary(shipped, path);
      vocabs->push_back(std::move(shipped));
    }
    paths.push_back(path);
  }
  return paths;
}

StopList LoadStopwords(const PipelineConfig &cfg) {
  return cfg.stopwords.empty() ? DefaultStopList() : LoadStopList(cfg.stopwords);
}

RunManifest RunPipeline(const PipelineConfig &cfg) {
  RunManifest m;
  m.config = ConfigToJson(cfg);
  const fs::path out_dir(cfg.out_dir);
  const fs::path staging =
      out_dir.parent_path() / (out_dir.filename().string() + ".staging");
  std::string stage = "config";

  auto fail = [&](const std::exception &e) -> PipelineError {
    m.status = "failed";
    m.failed_stage = stage;
    m.error = e.what();
    std::error_code ec;
    fs::remove_all(staging, ec);
    const bool ours = fs::exists(out_dir / "manifest.json", ec);
    if (ours) fs::remove_all(out_dir, ec);
    if (!fs::exists(out_dir, ec) || ours) {
      fs::create_directories(out_dir, ec);
      std::ofstream(out_dir / "manifest.json") << m.ToJson().dump(2) << "\n";
    }
    return PipelineError(stage + ": " + e.what(), m, ErrorKind(e));
  };

  try {
    auto timed = [&](const std::string &name, auto &&fn) {
      stage = name;
      const auto t0 = std::chrono::steady_clock::now();
      fn();
      m.timings.push_back(
          {name, std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - t0)
                     .count()});
    };

    timed("config", [&] {
      const auto problems = ValidateConfig(cfg);
      if (!problems.empty()) {
        std::string msg;
        for (const auto &p : problems) msg += (msg.empty() ? "" : "; ") + p;
        throw ConfigError(msg);
      }
    });

    PreparedCorpus prepared;
    {
      std::string current;
      auto t0 = std::chrono::steady_clock::now();
      auto close = [&] {
        if (current.empty()) return;
        m.timings.push_back(
            {current, std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - t0)
                          .count()});
      };
      prepared = PrepareCorpus(cfg, [&](const std::string &name) {
        close();
        current = stage = name;
        t0 = std::chrono::steady_clock::now();
      });
      close();
    }
    m.warnings.insert(m.warnings.end(), prepared.warnings.begin(),
                      prepared.warnings.end());
    m.counts["ingested"] = prepared.records;
    m.counts["rejected"] = prepared.rejected.size();
    m.counts["language_filtered_out"] = prepared.language_filtered_out;
    m.counts["analyzed"] = prepared.corpus.size();
    const Corpus &corpus = prepared.corpus;
    const auto &rejected = prepared.rejected;
    const Table &table1 = prepared.table1;

    std::vector<FakeFlag> flags;
    timed("fakes", [&] {
      SimilarityConfig sc = cfg.fake;
      sc.threads = cfg.threads;
      flags = FlagFakes(corpus, sc);
      m.counts["flagged"] = flags.size();
    });

    std::vector<Vocabulary> vocabs;
    std::vector<LabelAssignment> assignments;
    timed("label", [&] {
      vocabs = LoadVocabularies(cfg, &m.warnings);
      for (const auto &v : vocabs) m.vocabulary_versions[v.label()] = v.version();
      assignments = LabelCorpus(corpus, vocabs, cfg.threads);
      for (const auto &v : vocabs) {
        std::size_t n = 0;
        for (const auto &a : assignments) n += a.Has(v.label());
        m.counts["labeled_" + v.label()] = n;
      }
    });

    PhasePartition partition;
    timed("phases", [&] {
      partition = PartitionEqualCount(corpus, cfg.phase_count, cfg.phase_mode);
    });

    std::vector<Table> tables;
    AnalysisFrame frame;
    timed("tables", [&] {
      frame = BuildFrame(corpus, assignments, &partition, &flags, cfg.threads);
      const TrendTable trend = BuildTrendTable(corpus, partition);
      tables = {table1,          Table3(frame),  TableA1(frame),
                TableC1(frame),  TableC2(frame), TableD1(frame),
                Fig2(trend),     Fig2Phases(trend), Fig4(frame)};
      if (partition.count() >= 4) {
        tables.push_back(Fig5(frame));
        tables.push_back(Fig6(frame));
      } else {
        m.warnings.push_back("fig5 and fig6 need at least 4 phases; skipped");
      }
      tables.push_back(FigC1(frame));
      std::ostringstream note;
      note << "Phases (" << PhaseModeName(partition.mode) << "):";
      for (const Phase &p : partition.phases) {
        note << " " << p.index << "=" << FormatDay(p.first_day) << ".."
             << FormatDay(p.last_day) << " (n=" << p.size() << ")";
      }
      tables[7].notes.push_back(note.str());
    });

    timed("write", [&] {
      std::error_code ec;
      fs::remove_all(staging, ec);
      fs::create_directories(staging);
      for (const Table &t : tables) {
        WriteText(staging / "tables" / (t.name + ".csv"), ToCsv(t));
        WriteText(staging / "tables" / (t.name + ".json"), ToJson(t));
        m.outputs.push_back("tables/" + t.name + ".csv");
        m.outputs.push_back("tables/" + t.name + ".json");
      }
      WriteText(staging / "flags.csv", FlagsCsv(flags));
      WriteText(staging / "labels.csv", LabelsCsv(frame, corpus));
      std::string rej;
      for (const auto &[source, r] : rejected) {
        rej += ordered_json{{"source", source}, {"line", r.line},
                            {"reason", r.reason}}
                   .dump() +
               "\n";
      }
      WriteText(staging / "rejected.jsonl", rej);
      m.outputs.insert(m.outputs.end(),
                       {"flags.csv", "labels.csv", "rejected.jsonl"});
      // report.md and plots are rendered from the tables on disk, the same
      // path the report verb takes.
      WriteText(staging / "manifest.json", m.ToJson().dump(2) + "\n");
      for (auto &p : WriteReport(staging.string(), cfg.plot)) {
        m.outputs.push_back(p);
      }
      WriteText(staging / "manifest.json", m.ToJson().dump(2) + "\n");
      if (fs::exists(out_dir)) fs::remove_all(out_dir);
      fs::rename(staging, out_dir);
    });
    WriteText(out_dir / "manifest.json", m.ToJson().dump(2) + "\n");
    return m;
  } catch (const PipelineError &) {
    throw;
  } catch (const std::exception &e) {
    throw fail(e);
  }
}

Table TableFromJson(const json &j) {
  Table t;
  t.name = j.at("name").get<std::string>();
  t.title = j.value("title", "");
  t.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto &r : j.at("rows")) {
    std::vector<Cell> row;
    for (const auto &c : t.columns) {
      const json &v = r.at(c);
      if (v.is_null()) {
        row.emplace_back(std::monostate{});
      } else if (v.is_number_integer()) {
        row.emplace_back(v.get<std::int64_t>());
      } else if (v.is_number()) {
        row.emplace_back(v.get<double>());
      } else {
        row.emplace_back(v.get<std::string>());
      }
    }
    t.rows.push_back(std::move(row));
  }
  if (j.contains("notes")) t.notes = j.at("notes").get<std::vector<std::string>>();
  return t;
}

std::vector<Table> LoadTables(const std::string &out_dir) {
  const fs::path manifest = fs::path(out_dir) / "manifest.json";
  if (!fs::exists(manifest)) {
    throw ConfigError("no run found in " + out_dir + " (manifest.json missing)");
  }
  std::vector<Table> tables;
  const json m = json::parse(ReadFile(manifest.string()));
  for (const auto &p : m.at("outputs")) {
    const std::string rel = p.get<std::string>();
    if (!rel.starts_with("tables/") || !rel.ends_with(".json")) continue;
    tables.push_back(TableFromJson(
        json::parse(ReadFile((fs::path(out_dir) / rel).string()))));
  }
  return tables;
}

namespace {

const Table *FindTable(const std::vector<Table> &tables, std::string_view name) {
  for (const auto &t : tables) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

double AsReal(const Cell &c) {
  if (std::holds_alternative<double>(c)) return std::get<double>(c);
  if (std::holds_alternative<std::int64_t>(c)) {
    return static_cast<double>(std::get<std::int64_t>(c));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::string AsText(const Cell &c) {
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  if (std::holds_alternative<std::int64_t>(c)) {
    return std::to_string(std::get<std::int64_t>(c));
  }
  return "";
}

std::size_t Column(const Table &t, std::string_view name) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (t.columns[i] == name) return i;
  }
  throw DataError("table " + t.name + " has no column " + std::string(name));
}

std::string PlotFig2(const Table &t) {
  const std::size_t day = Column(t, "day"), bucket = Column(t, "bucket"),
                    count = Column(t, "count");
  std::vector<std::string> days;
  std::vector<Series> series;
  for (const auto &row : t.rows) {
    const std::string d = AsText(row[day]);
    if (days.empty() || days.back() != d) days.push_back(d);
    const std::string b = AsText(row[bucket]);
    auto it = std::find_if(series.begin(), series.end(),
                           [&](const Series &s) { return s.name == b; });
    if (it == series.end()) {
      series.push_back({b, {}});
      it = series.end() - 1;
    }
    it->values.resize(days.size(), 0);
    it->values[days.size() - 1] = AsReal(row[count]);
  }
  return StackedBarChart("Daily reviews by sentiment", days, series);
}

std::string PlotShares(const Table &t, const std::string &group_col,
                       const std::string &title) {
  const std::size_t period = Column(t, "period"), band = Column(t, "band"),
                    group = Column(t, group_col), share = Column(t, "share");
  std::vector<std::string> cats;
  std::vector<Series> series;
  for (const auto &row : t.rows) {
    const std::string cat = AsText(row[period]) + " " + AsText(row[band]);
    if (cats.empty() || cats.back() != cat) cats.push_back(cat);
    const std::string g = AsText(row[group]);
    auto it = std::find_if(series.begin(), series.end(),
                           [&](const Series &s) { return s.name == g; });
    if (it == series.end()) {
      series.push_back({g, {}});
      it = series.end() - 1;
    }
    it->values.resize(cats.size(), std::numeric_limits<double>::quiet_NaN());
    it->values[cats.size() - 1] = AsReal(row[share]);
  }
  return StackedBarChart(title, cats, series);
}

std::string PlotShift(const Table &t) {
  const std::size_t cluster = Column(t, "cluster"), band = Column(t, "band"),
                    early = Column(t, "early"), late = Column(t, "late");
  std::vector<std::string> rows;
  std::vector<double> e, l;
  for (const auto &row : t.rows) {
    rows.push_back(AsText(row[cluster]) + " " + AsText(row[band]));
    e.push_back(AsReal(row[early]));
    l.push_back(AsReal(row[late]));
  }
  return DumbbellChart(t.title, rows, e, l);
}

}  // namespace

std::string RenderReport(const std::vector<Table> &tables,
                         const json &manifest) {
  std::string out = "# Review corpus analysis\n\n";
  if (manifest.contains("counts")) {
    out += "## Counts\n\n| stage | n |\n| --- | --- |\n";
    for (const auto &[k, v] : manifest.at("counts").items()) {
      out += "| " + k + " | " + v.dump() + " |\n";
    }
    out += "\n";
  }
  if (manifest.contains("vocabulary_versions")) {
    out += "## Vocabulary versions\n\n";
    for (const auto &[k, v] : manifest.at("vocabulary_versions").items()) {
      out += "- " + k + ": " + v.dump() + "\n";
    }
    out += "\n";
  }
  out += "Frequencies are rounded to 2 decimals; the CSV and JSON tables "
         "carry full precision. Medians are lower medians.\n\n";
  for (const auto &t : tables) {
    out += "## " + t.name + "\n\n" + ToMarkdown(t, 2) + "\n";
  }
  if (manifest.contains("config")) {
    out += "## Configuration\n\n```json\n" + manifest.at("config").dump(2) +
           "\n```\n";
  }
  return out;
}

std::vector<std::string> WriteReport(const std::string &out_dir, bool plot) {
  const std::vector<Table> tables = LoadTables(out_dir);
  const json m =
      json::parse(ReadFile((fs::path(out_dir) / "manifest.json").string()));
  json facts;
  for (const char *key :
       {"tool_version", "config", "vocabulary_versions", "counts"}) {
    if (m.contains(key)) facts[key] = m.at(key);
  }
  std::vector<std::string> written = {"report.md"};
  WriteText(fs::path(out_dir) / "report.md", RenderReport(tables, facts));
  if (!plot) return written;
  auto emit = [&](const std::string &name, const std::string &svg) {
    WriteText(fs::path(out_dir) / "plots" / (name + ".svg"), svg);
    written.push_back("plots/" + name + ".svg");
  };
  if (const Table *t = FindTable(tables, "fig2")) emit("fig2", PlotFig2(*t));
  if (const Table *t = FindTable(tables, "fig4")) {
    emit("fig4", PlotShares(*t, "cluster", "Prevalence of clusters"));
  }
  if (const Table *t = FindTable(tables, "fig5")) emit("fig5", PlotShift(*t));
  if (const Table *t = FindTable(tables, "fig6")) emit("fig6", PlotShift(*t));
  if (const Table *t = FindTable(tables, "figC1")) {
    emit("figC1", PlotShares(*t, "class", "Classes of value-laden reviews"));
  }
  return written;
}

}  // namespace revbomb
