// Copyright 2026 The errcat Authors
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

// Subcommand implementations behind the errcat executable. Kept in the
// library so that tests can drive the exact code path the CLI runs.

#ifndef ERRCAT_CLI_HPP
#define ERRCAT_CLI_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "errcat/categorizer.hpp"
#include "errcat/corpus.hpp"
#include "errcat/error.hpp"
#include "errcat/fixtures.hpp"
#include "errcat/lexicon.hpp"
#include "errcat/metrics.hpp"
#include "errcat/report.hpp"
#include "errcat/shift.hpp"

namespace errcat {

enum class Command { Categorize, Evaluate, Diagnose, Split, ExportFixtures };

struct RunConfig {
  Command command = Command::Categorize;
  std::string corpus_path;
  std::string lexicon_path;
  std::string output_path;  // empty: standard output
  ReportFormat format = ReportFormat::Json;
  std::optional<std::uint64_t> seed;
  std::optional<SplitRatios> ratios;
  std::string out_prefix;     // split
  std::string records_path;   // per-record JSONL (verdicts or diagnoses)
  std::string rejects_path;   // rejection report JSONL
  unsigned threads = 0;       // 0: automatic
};

/// Where command output and diagnostics go. Defaults to the process
/// streams; tests substitute string streams.
struct CommandIo {
  std::ostream* out = &std::cout;
  std::ostream* err = &std::cerr;
};

namespace cli_detail {

inline void emit(const std::string& content, const std::string& path,
                 const CommandIo& io) {
  if (path.empty() || path == "-") {
    *io.out << content;
    io.out->flush();
  } else {
    write_output(content, path);
  }
}

inline Corpus load_checked(const RunConfig& cfg, const CommandIo& io) {
  if (cfg.corpus_path.empty()) throw Error("--corpus is required");
  auto loaded = load_corpus(cfg.corpus_path);
  for (const auto& r : loaded.rejected) {
    *io.err << cfg.corpus_path << ":" << r.line << ": rejected: " << r.reason
            << '\n';
  }
  for (const auto& w : loaded.warnings) {
    *io.err << cfg.corpus_path << ":" << w.line << ": warning: record "
            << w.id << " has " << w.reason << '\n';
  }
  if (!cfg.rejects_path.empty()) {
    std::ostringstream os;
    write_rejections_jsonl(loaded.rejected, os);
    write_output(os.str(), cfg.rejects_path);
  }
  return std::move(loaded.corpus);
}

inline Lexicon lexicon_checked(const RunConfig& cfg) {
  if (cfg.lexicon_path.empty()) throw Error("--lexicon is required");
  return load_lexicon(cfg.lexicon_path);
}

inline void write_jsonl(const std::vector<nlohmann::json>& rows,
                        const std::string& path) {
  std::string content;
  for (const auto& r : rows) content += r.dump() + "\n";
  write_output(content, path);
}

}  // namespace cli_detail

inline CategorizeReport run_categorize(const Corpus& corpus,
                                       const Lexicon& lexicon,
                                       unsigned threads) {
  CategorizeReport r;
  r.verdicts = categorize_corpus(corpus, lexicon, CompareField::Input, threads);
  r.distribution = distribution(r.verdicts);
  return r;
}

/// The matrix comes from build_confusion over the two categorizer passes;
/// there is no separate counting path.
inline EvaluateReport run_evaluate(const Corpus& corpus,
                                   const Lexicon& lexicon, unsigned threads) {
  auto input = categorize_corpus(corpus, lexicon, CompareField::Input, threads);
  auto predicted =
      categorize_corpus(corpus, lexicon, CompareField::Predicted, threads);
  EvaluateReport r;
  r.matrix = build_confusion(input, predicted);
  r.metrics = correction_metrics(r.matrix);
  for (auto c : kAllCategories) {
    r.fully_corrected[index_of(c)] = fully_corrected_rate(r.matrix, c);
  }
  r.input_distribution = distribution(input);
  r.predicted_distribution = distribution(predicted);
  return r;
}

inline DiagnoseReport run_diagnose(const Corpus& corpus,
                                   const Lexicon& lexicon, unsigned threads) {
  auto input = categorize_corpus(corpus, lexicon, CompareField::Input, threads);
  auto predicted =
      categorize_corpus(corpus, lexicon, CompareField::Predicted, threads);
  DiagnoseReport r;
  r.diagnoses = diagnose_corpus(corpus, lexicon, input, predicted, threads);
  r.shifts = shift_report(r.diagnoses);
  return r;
}

inline void cmd_categorize_or_throw(const RunConfig& cfg, const CommandIo& io) {
  auto lexicon = cli_detail::lexicon_checked(cfg);
  auto corpus = cli_detail::load_checked(cfg, io);
  auto report = run_categorize(corpus, lexicon, cfg.threads);
  if (!cfg.records_path.empty()) {
    std::vector<nlohmann::json> rows;
    for (const auto& v : report.verdicts) rows.push_back(to_json(v));
    cli_detail::write_jsonl(rows, cfg.records_path);
  }
  cli_detail::emit(render(report, cfg.format), cfg.output_path, io);
}

inline void cmd_evaluate_or_throw(const RunConfig& cfg, const CommandIo& io) {
  auto lexicon = cli_detail::lexicon_checked(cfg);
  auto corpus = cli_detail::load_checked(cfg, io);
  auto report = run_evaluate(corpus, lexicon, cfg.threads);
  cli_detail::emit(render(report, cfg.format), cfg.output_path, io);
}

inline void cmd_diagnose_or_throw(const RunConfig& cfg, const CommandIo& io) {
  auto lexicon = cli_detail::lexicon_checked(cfg);
  auto corpus = cli_detail::load_checked(cfg, io);
  auto report = run_diagnose(corpus, lexicon, cfg.threads);
  if (!cfg.records_path.empty()) {
    std::vector<nlohmann::json> rows;
    for (const auto& d : report.diagnoses) rows.push_back(to_json(d));
    cli_detail::write_jsonl(rows, cfg.records_path);
  }
  cli_detail::emit(render(report, cfg.format), cfg.output_path, io);
}

inline constexpr std::array<const char*, 3> kSplitNames = {
    "train", "validation", "test"};

inline void cmd_split_or_throw(const RunConfig& cfg, const CommandIo& io) {
  if (!cfg.ratios) throw Error("--ratios is required");
  if (!cfg.seed) throw Error("--seed is required");
  if (cfg.out_prefix.empty()) throw Error("--out-prefix is required");
  auto corpus = cli_detail::load_checked(cfg, io);
  auto parts = split_corpus(corpus, *cfg.ratios, *cfg.seed);
  nlohmann::json summary = nlohmann::json::object();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    auto path = cfg.out_prefix + "." + kSplitNames[k] + ".jsonl";
    write_corpus_jsonl(parts[k], path);
    summary[kSplitNames[k]] = {{"path", path}, {"records", parts[k].size()}};
  }
  cli_detail::emit(summary.dump(2) + "\n", cfg.output_path, io);
}

/// Writes every fixture as <name>.jsonl + <name>.words plus one
/// MANIFEST.json into `dir`.
inline void export_fixtures(const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<FixtureSet> sets;
  sets.push_back(category_examples_fixture());
  sets.push_back(qualitative_fixture(Model::Bart));
  sets.push_back(qualitative_fixture(Model::Marian));
  nlohmann::json manifest = {{"version", 1},
                             {"fixtures", nlohmann::json::array()}};
  for (const auto& f : sets) {
    auto base = (std::filesystem::path(dir) / f.name).string();
    write_corpus_jsonl(f.corpus, base + ".jsonl");
    std::string words;
    auto sorted = f.lexicon_words;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& w : sorted) words += w + "\n";
    write_output(words, base + ".words");
    manifest["fixtures"].push_back(fixture_manifest(f));
  }
  write_output(manifest.dump(2) + "\n",
               (std::filesystem::path(dir) / "MANIFEST.json").string());
}

/// Runs one subcommand. Returns 0 on success; any fatal error is reported
/// on io.err and yields 1.
inline int run_command(const RunConfig& cfg, const CommandIo& io = {}) {
  try {
    switch (cfg.command) {
      case Command::Categorize:
        cmd_categorize_or_throw(cfg, io);
        break;
      case Command::Evaluate:
        cmd_evaluate_or_throw(cfg, io);
        break;
      case Command::Diagnose:
        cmd_diagnose_or_throw(cfg, io);
        break;
      case Command::Split:
        cmd_split_or_throw(cfg, io);
        break;
      case Command::ExportFixtures:
        if (cfg.output_path.empty()) throw Error("--out-dir is required");
        export_fixtures(cfg.output_path);
        break;
    }
  } catch (const std::exception& e) {
    *io.err << "errcat: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

inline int cmd_categorize(const RunConfig& cfg, const CommandIo& io = {}) {
  auto c = cfg;
  c.command = Command::Categorize;
  return run_command(c, io);
}

inline int cmd_evaluate(const RunConfig& cfg, const CommandIo& io = {}) {
  auto c = cfg;
  c.command = Command::Evaluate;
  return run_command(c, io);
}

inline int cmd_diagnose(const RunConfig& cfg, const CommandIo& io = {}) {
  auto c = cfg;
  c.command = Command::Diagnose;
  return run_command(c, io);
}

inline int cmd_split(const RunConfig& cfg, const CommandIo& io = {}) {
  auto c = cfg;
  c.command = Command::Split;
  return run_command(c, io);
}

/// Parses "0.5,0.2,0.3".
inline SplitRatios parse_ratios(const std::string& text) {
  SplitRatios r{};
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == 3) throw Error("--ratios takes exactly three values: " + text);
    try {
      std::size_t used = 0;
      r[k] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error("--ratios value is not a number: " + item);
    }
    ++k;
  }
  if (k != 3) throw Error("--ratios takes exactly three values: " + text);
  return r;
}

}  // namespace errcat

#endif  // ERRCAT_CLI_HPP
