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

// errcat: sentence-pair error categorization and category-shift analysis.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "errcat/cli.hpp"
#include "errcat/parallel.hpp"
#include "errcat/report.hpp"

namespace {

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sentence-level error categorization and shift analysis"};
  app.require_subcommand(1);

  errcat::RunConfig cfg;
  cfg.threads = errcat::threads_from_env();
  std::string format = "json";
  std::string ratios;
  std::uint64_t seed = 0;

  auto* categorize = app.add_subcommand(
      "categorize", "Assign an error category to every input sentence");
  auto* evaluate = app.add_subcommand(
      "evaluate", "Confusion matrix and correction percentages of predictions");
  auto* diagnose = app.add_subcommand(
      "diagnose", "Per-record causes of category shifts");
  for (auto* cmd : {categorize, evaluate, diagnose}) {
    cmd->add_option("--corpus", cfg.corpus_path, "Corpus (.jsonl or .tsv)")
        ->required();
    cmd->add_option("--lexicon", cfg.lexicon_path, "Word list, one per line")
        ->required();
    cmd->add_option("--out", cfg.output_path, "Output path (default stdout)");
    cmd->add_option("--rejects", cfg.rejects_path,
                    "Write rejected corpus rows as JSONL");
    add_format_option(cmd, format);
  }
  categorize->add_option("--verdicts", cfg.records_path,
                         "Write per-record verdicts as JSONL");
  diagnose->add_option("--diagnoses", cfg.records_path,
                       "Write per-record diagnoses as JSONL");

  auto* split = app.add_subcommand(
      "split", "Shuffle with a seed and split into train/validation/test");
  split->add_option("--corpus", cfg.corpus_path, "Corpus (.jsonl or .tsv)")
      ->required();
  split->add_option("--ratios", ratios, "Three fractions, e.g. 0.5,0.2,0.3")
      ->required();
  split->add_option("--seed", seed, "PRNG seed")->required();
  split->add_option("--out-prefix", cfg.out_prefix,
                    "Writes PREFIX.{train,validation,test}.jsonl")
      ->required();
  split->add_option("--rejects", cfg.rejects_path,
                    "Write rejected corpus rows as JSONL");

  auto* fixtures = app.add_subcommand(
      "export-fixtures", "Write the bundled test corpora and word lists");
  fixtures->add_option("--out-dir", cfg.output_path, "Target directory")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (categorize->parsed()) cfg.command = errcat::Command::Categorize;
  if (evaluate->parsed()) cfg.command = errcat::Command::Evaluate;
  if (diagnose->parsed()) cfg.command = errcat::Command::Diagnose;
  if (fixtures->parsed()) cfg.command = errcat::Command::ExportFixtures;
  if (split->parsed()) {
    cfg.command = errcat::Command::Split;
    try {
      cfg.ratios = errcat::parse_ratios(ratios);
    } catch (const errcat::Error& e) {
      std::cerr << "errcat: error: " << e.what() << '\n';
      return 1;
    }
    cfg.seed = seed;
  }
  cfg.format = *errcat::parse_report_format(format);
  return errcat::run_command(cfg);
}
