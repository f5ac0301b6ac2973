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


// revbomb: batch analysis, vocabulary curation and reporting.
// Exit codes: 0 success, 1 configuration error, 2 data error, 3 internal.

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "httplib.h"
#include "json.hpp"
#include "revbomb/curation.h"
#include "revbomb/data.h"
#include "revbomb/errors.h"
#include "revbomb/pipeline.h"
#include "revbomb/text.h"
#include "revbomb/vocab.h"

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using revbomb::PipelineConfig;

struct GlobalFlags {
  std::string config;
  std::optional<bool> english_only;
  std::optional<int> phases;
  std::string out;
  bool plot = false;
  std::vector<std::string> inputs;
  int threads = -1;
};

PipelineConfig BuildConfig(const GlobalFlags &g) {
  PipelineConfig cfg =
      g.config.empty() ? PipelineConfig{} : revbomb::LoadConfig(g.config);
  if (g.english_only) cfg.english_only = *g.english_only;
  if (g.phases) cfg.phase_count = *g.phases;
  if (!g.out.empty()) cfg.out_dir = g.out;
  if (g.plot) cfg.plot = true;
  if (!g.inputs.empty()) cfg.inputs = g.inputs;
  if (g.threads >= 0) cfg.threads = g.threads;
  return cfg;
}

std::vector<std::string> ReadSurfaces(const std::string &path) {
  std::vector<std::string> out;
  std::istringstream in(revbomb::ReadFile(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first, line.find_last_not_of(" \t") - first + 1);
    out.push_back(line);
  }
  return out;
}

void PrintWarnings(const std::vector<std::string> &warnings) {
  constexpr std::size_t kShown = 10;
  for (std::size_t i = 0; i < warnings.size() && i < kShown; ++i) {
    std::cerr << "warning: " << warnings[i] << "\n";
  }
  if (warnings.size() > kShown) {
    std::cerr << "warning: " << warnings.size() - kShown
              << " more not shown\n";
  }
}

int RunIngest(const GlobalFlags &g, const std::string &write_path) {
  PipelineConfig cfg = BuildConfig(g);
  if (cfg.inputs.empty()) throw revbomb::ConfigError("no input files given");
  revbomb::PreparedCorpus p = revbomb::PrepareCorpus(cfg);
  PrintWarnings(p.warnings);
  if (!write_path.empty()) {
    std::ostringstream out;
    revbomb::WriteDelimitedTable(p.corpus, out);
    revbomb::WriteFileAtomic(write_path, out.str());
  }
  ordered_json rejected = ordered_json::array();
  for (const auto &[source, r] : p.rejected) {
    rejected.push_back({{"source", source}, {"line", r.line}, {"reason", r.reason}});
  }
  std::cout << ordered_json{{"ingested", p.records},
                            {"rejected", p.rejected.size()},
                            {"language_filtered_out", p.language_filtered_out},
                            {"analyzed", p.corpus.size()},
                            {"rejections", rejected}}
                   .dump(2)
            << "\n";
  return 0;
}

int RunAnalyze(const GlobalFlags &g) {
  const revbomb::RunManifest m = revbomb::RunPipeline(BuildConfig(g));
  PrintWarnings(m.warnings);
  std::cout << ordered_json(m.counts).dump(2) << "\n";
  std::cerr << "wrote " << m.outputs.size() << " files to "
            << BuildConfig(g).out_dir << "\n";
  return 0;
}

int RunLabel(const GlobalFlags &g, const std::string &candidates_label,
             const std::vector<std::string> &accept) {
  if (candidates_label.empty() == accept.empty()) {
    throw revbomb::ConfigError(
        "label needs exactly one of --candidates LABEL or --accept LABEL FILE");
  }
  PipelineConfig cfg = BuildConfig(g);
  revbomb::PreparedCorpus p = revbomb::PrepareCorpus(cfg);
  std::vector<std::string> warnings = p.warnings;
  std::vector<revbomb::Vocabulary> vocabs;
  const std::vector<std::string> paths =
      revbomb::CurationPaths(cfg, &vocabs, &warnings);
  PrintWarnings(warnings);
  const std::string label = accept.empty() ? candidates_label : accept[0];
  std::size_t at = vocabs.size();
  for (std::size_t i = 0; i < vocabs.size(); ++i) {
    if (vocabs[i].label() == label) at = i;
  }
  if (at == vocabs.size()) {
    throw revbomb::ConfigError("unknown label '" + label + "'");
  }
  revbomb::ExpansionOptions opts;
  opts.top_k = cfg.top_k;
  opts.stoplist = revbomb::LoadStopwords(cfg);
  opts.threads = cfg.threads;
  revbomb::ExpansionState state =
      revbomb::StartExpansion(p.corpus, vocabs[at], opts);
  ordered_json out = {{"label", label},
                      {"vocabulary", paths[at]},
                      {"version", state.vocabulary.version()}};
  if (accept.empty()) {
    out["round"] = state.round;
    out["filtered"] = state.filtered_ids.size();
    ordered_json c = ordered_json::array();
    for (const auto &t : state.candidates) {
      c.push_back({{"token", t.token}, {"count", t.count}});
    }
    out["candidates"] = c;
  } else {
    const std::vector<std::string> surfaces = ReadSurfaces(accept[1]);
    revbomb::ExpansionState next =
        revbomb::ExpansionStep(state, surfaces, p.corpus, opts);
    if (!surfaces.empty()) revbomb::SaveVocabulary(next.vocabulary, paths[at]);
    out["version"] = next.vocabulary.version();
    out["round"] = next.round;
    out["filtered"] = next.filtered_ids.size();
    out["newly_labeled"] = state.filtered_ids.size() - next.filtered_ids.size();
    out["converged"] = next.converged;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int RunReport(const GlobalFlags &g) {
  const PipelineConfig cfg = BuildConfig(g);
  for (const auto &p : revbomb::WriteReport(cfg.out_dir, cfg.plot)) {
    std::cout << (fs::path(cfg.out_dir) / p).string() << "\n";
  }
  return 0;
}

httplib::Server *g_server = nullptr;

extern "C" void StopServer(int) {
  if (g_server) g_server->stop();
}

int RunServe(const GlobalFlags &g, const std::string &host, int port,
             std::uint64_t seed) {
  PipelineConfig cfg = BuildConfig(g);
  revbomb::PreparedCorpus p = revbomb::PrepareCorpus(cfg);
  std::vector<std::string> warnings = p.warnings;
  std::vector<revbomb::Vocabulary> vocabs;
  std::vector<std::string> paths =
      revbomb::CurationPaths(cfg, &vocabs, &warnings);
  PrintWarnings(warnings);
  revbomb::CurationOptions opts;
  opts.expansion.top_k = cfg.top_k;
  opts.expansion.stoplist = revbomb::LoadStopwords(cfg);
  opts.expansion.threads = cfg.threads;
  opts.seed = seed;
  revbomb::CurationService service(std::move(p.corpus), std::move(vocabs),
                                   std::move(paths), opts);
  httplib::Server server;
  revbomb::RegisterCurationRoutes(server, service);
  g_server = &server;
  std::signal(SIGINT, StopServer);
  std::signal(SIGTERM, StopServer);
  if (!server.bind_to_port(host, port)) {
    throw revbomb::ConfigError("cannot listen on " + host + ":" +
                               std::to_string(port));
  }
  std::cerr << "session " << service.session_id() << " listening on " << host
            << ":" << port << "\n";
  server.listen_after_bind();
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Review-bombing forensics: fake cues, thematic labels, "
               "phase statistics and vocabulary curation."};
  app.set_version_flag("--version", std::string(revbomb::ToolVersion()));
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the verb
  GlobalFlags g;
  app.add_option("--config", g.config, "JSON configuration file");
  app.add_flag("--english-only,!--all-languages", g.english_only,
               "Analyze only reviews identified as English (default)");
  app.add_option("--phases", g.phases, "Number of phases")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output directory");
  app.add_flag("--plot", g.plot, "Also write SVG charts");
  app.add_option("--threads", g.threads, "Worker threads (0: all cores)")
      ->check(CLI::NonNegativeNumber);

  auto *ingest = app.add_subcommand("ingest", "Validate and tag input files");
  std::string write_path;
  ingest->add_option("inputs", g.inputs, "Review files");
  ingest->add_option("--write", write_path,
                     "Write the analyzed reviews as a delimited table");

  auto *analyze = app.add_subcommand("analyze", "Run the full pipeline");
  analyze->add_option("inputs", g.inputs, "Review files (override config)");

  auto *label = app.add_subcommand("label", "Drive the vocabulary loop");
  label->add_option("inputs", g.inputs, "Review files (override config)");
  std::string candidates_label;
  std::vector<std::string> accept;
  label->add_option("--candidates", candidates_label,
                    "Print ranked candidate tokens for LABEL");
  label->add_option("--accept", accept,
                    "Accept the surfaces listed in FILE into LABEL; an empty "
                    "file marks the label converged")
      ->expected(2)
      ->type_name("LABEL FILE");

  auto *report = app.add_subcommand("report", "Render report.md from a run");

  auto *serve = app.add_subcommand("serve", "Start the curation API");
  serve->add_option("inputs", g.inputs, "Review files (override config)");
  std::string host = "127.0.0.1";
  int port = 8080;
  std::uint64_t seed = 1;
  serve->add_option("--host", host, "Listen address");
  serve->add_option("--port", port, "Listen port")->check(CLI::Range(1, 65535));
  serve->add_option("--seed", seed, "Snippet sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*ingest) return RunIngest(g, write_path);
    if (*analyze) return RunAnalyze(g);
    if (*label) return RunLabel(g, candidates_label, accept);
    if (*report) return RunReport(g);
    if (*serve) return RunServe(g, host, port, seed);
    return 1;
  } catch (const revbomb::PipelineError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind();
  } catch (const revbomb::ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const revbomb::DataError &e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
