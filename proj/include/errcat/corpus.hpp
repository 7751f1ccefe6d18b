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

// Parallel sentence corpora: loading (JSONL or TSV), splitting, writing.

#ifndef ERRCAT_CORPUS_HPP
#define ERRCAT_CORPUS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "errcat/error.hpp"
#include "errcat/text.hpp"

namespace errcat {

struct SentenceRecord {
  std::string id;
  std::string input;
  std::string target;
  std::optional<std::string> predicted;

  bool has_empty_side() const {
    return normalize(input).empty() || normalize(target).empty();
  }

  friend bool operator==(const SentenceRecord&, const SentenceRecord&) =
      default;
};

struct Corpus {
  std::vector<SentenceRecord> records;
  std::string source_path;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
};

/// One row that did not become a record. `line` is 1-based in the source.
struct RejectedRow {
  std::size_t line = 0;
  std::string reason;
};

/// Accepted row with an empty input or target sentence.
struct RowWarning {
  std::size_t line = 0;
  std::string id;
  std::string reason;
};

struct LoadResult {
  Corpus corpus;
  std::vector<RejectedRow> rejected;
  std::vector<RowWarning> warnings;
  std::size_t data_rows = 0;  // non-blank rows, header excluded
};

enum class CorpusFormat { Jsonl, Tsv };

/// ".tsv" and ".tab" select TSV; everything else is JSONL.
inline CorpusFormat format_for_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.substr(path.size() - suffix.size()) == suffix;
  };
  return (ends_with(".tsv") || ends_with(".tab")) ? CorpusFormat::Tsv
                                                   : CorpusFormat::Jsonl;
}

namespace corpus_detail {

class RowSink {
 public:
  explicit RowSink(LoadResult& out) : out_(out) {}

  void reject(std::size_t line, std::string reason) {
    out_.rejected.push_back({line, std::move(reason)});
  }

  void accept(std::size_t line, SentenceRecord rec) {
    if (rec.id.empty()) return reject(line, "empty id");
    if (!seen_.insert(rec.id).second) {
      return reject(line, "duplicate id \"" + rec.id + "\"");
    }
    if (normalize(rec.input).empty()) {
      out_.warnings.push_back({line, rec.id, "empty input"});
    }
    if (normalize(rec.target).empty()) {
      out_.warnings.push_back({line, rec.id, "empty target"});
    }
    out_.corpus.records.push_back(std::move(rec));
  }

 private:
  LoadResult& out_;
  std::unordered_set<std::string> seen_;
};

inline void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

inline bool is_blank(std::string_view line) { return normalize(line).empty(); }

inline void parse_jsonl(std::istream& in, LoadResult& out) {
  RowSink sink(out);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (is_blank(line)) continue;
    ++out.data_rows;
    if (!is_valid_utf8(line)) {
      sink.reject(line_no, "invalid UTF-8");
      continue;
    }
    auto row = nlohmann::json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object()) {
      sink.reject(line_no, "malformed JSON object");
      continue;
    }
    auto field = [&](const char* key) -> std::optional<std::string> {
      auto it = row.find(key);
      if (it == row.end() || !it->is_string()) return std::nullopt;
      return it->get<std::string>();
    };
    auto id = field("id");
    auto input = field("input");
    auto target = field("target");
    if (!id) {
      // Numeric ids are common in the wild; keep their textual form.
      auto it = row.find("id");
      if (it != row.end() && it->is_number_integer()) id = it->dump();
    }
    if (!id) {
      sink.reject(line_no, "missing id");
      continue;
    }
    if (!input || !target) {
      std::string what = !input && !target ? "input/target"
                         : !input         ? "input"
                                          : "target";
      sink.reject(line_no, "missing " + what + " field");
      continue;
    }
    SentenceRecord rec{*id, *input, *target, std::nullopt};
    if (auto it = row.find("predicted"); it != row.end() && !it->is_null()) {
      if (!it->is_string()) {
        sink.reject(line_no, "predicted is not a string");
        continue;
      }
      rec.predicted = it->get<std::string>();
    }
    sink.accept(line_no, std::move(rec));
  }
}

inline std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  while (true) {
    auto cut = line.find('\t');
    out.emplace_back(line.substr(0, cut));
    if (cut == std::string_view::npos) break;
    line.remove_prefix(cut + 1);
  }
  return out;
}

inline void parse_tsv(std::istream& in, const std::string& path,
                      LoadResult& out) {
  RowSink sink(out);
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (is_blank(line)) continue;
    header = split_tabs(line);
  }
  if (header.empty()) return;
  const bool has_predicted = header.size() == 4;
  if (header.size() < 3 || header.size() > 4 || header[0] != "id" ||
      header[1] != "input" || header[2] != "target" ||
      (has_predicted && header[3] != "predicted")) {
    throw Error(path + ": TSV header must be id<TAB>input<TAB>target"
                       "[<TAB>predicted]");
  }
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (is_blank(line)) continue;
    ++out.data_rows;
    if (!is_valid_utf8(line)) {
      sink.reject(line_no, "invalid UTF-8");
      continue;
    }
    auto cols = split_tabs(line);
    if (cols.size() < header.size()) {
      std::string missing;
      for (std::size_t c = std::max<std::size_t>(cols.size(), 1);
           c < header.size(); ++c) {
        if (!missing.empty()) missing += "/";
        missing += header[c];
      }
      bool plural = header.size() - std::max<std::size_t>(cols.size(), 1) > 1;
      sink.reject(line_no,
                  "missing " + missing + (plural ? " columns" : " column"));
      continue;
    }
    if (cols.size() > header.size()) {
      sink.reject(line_no, "too many columns");
      continue;
    }
    SentenceRecord rec{cols[0], cols[1], cols[2], std::nullopt};
    if (has_predicted) rec.predicted = cols[3];
    sink.accept(line_no, std::move(rec));
  }
}

}  // namespace corpus_detail

/// Parses an in-memory stream. Row-level problems are collected in
/// `rejected`; only a malformed TSV header is fatal.
inline LoadResult parse_corpus(std::istream& in, CorpusFormat format,
                               const std::string& source_path = "<stream>") {
  LoadResult out;
  out.corpus.source_path = source_path;
  if (format == CorpusFormat::Jsonl) {
    corpus_detail::parse_jsonl(in, out);
  } else {
    corpus_detail::parse_tsv(in, source_path, out);
  }
  return out;
}

inline LoadResult load_corpus(const std::string& path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read corpus file: " + path);
  auto result = parse_corpus(in, format, path);
  if (in.bad()) throw Error("error while reading corpus file: " + path);
  return result;
}

inline LoadResult load_corpus(const std::string& path) {
  return load_corpus(path, format_for_path(path));
}

inline nlohmann::json to_json(const SentenceRecord& rec) {
  nlohmann::json j = {
      {"id", rec.id}, {"input", rec.input}, {"target", rec.target}};
  if (rec.predicted) j["predicted"] = *rec.predicted;
  return j;
}

/// One JSON object per line, keys sorted, "\n" line endings.
inline void write_corpus_jsonl(const Corpus& corpus, std::ostream& out) {
  for (const auto& rec : corpus.records) out << to_json(rec).dump() << '\n';
}

inline void write_corpus_jsonl(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write corpus file: " + path);
  write_corpus_jsonl(corpus, out);
  if (!out) throw Error("error while writing corpus file: " + path);
}

inline void write_rejections_jsonl(const std::vector<RejectedRow>& rows,
                                   std::ostream& out) {
  for (const auto& r : rows) {
    out << nlohmann::json{{"line", r.line}, {"reason", r.reason}}.dump()
        << '\n';
  }
}

using SplitRatios = std::array<double, 3>;

namespace corpus_detail {

// std::uniform_int_distribution and std::shuffle are implementation-defined;
// these keep splits identical across standard libraries.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

inline void seeded_shuffle(std::vector<std::size_t>& order,
                           std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[bounded(rng, i)]);
  }
}

}  // namespace corpus_detail

/// Split sizes: floor(n * ratio) each, remainder added to the first split.
inline std::array<std::size_t, 3> split_sizes(std::size_t n,
                                              const SplitRatios& ratios) {
  double sum = 0.0;
  for (double r : ratios) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw Error("split ratios must be finite and non-negative");
    }
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "split ratios must sum to 1 (got " << sum << ")";
    throw Error(msg.str());
  }
  std::array<std::size_t, 3> sizes{};
  std::size_t assigned = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    // The epsilon absorbs products like 100 * 0.29 = 28.999999999999996.
    double exact = static_cast<double>(n) * ratios[k];
    auto size = static_cast<std::size_t>(std::floor(exact + 1e-6));
    sizes[k] = std::min(size, n - assigned);
    assigned += sizes[k];
  }
  sizes[0] += n - assigned;
  return sizes;
}

/// Shuffles with a seeded PRNG, then cuts into three consecutive runs.
/// Records keep their source order inside each split.
inline std::array<Corpus, 3> split_corpus(const Corpus& corpus,
                                          const SplitRatios& ratios,
                                          std::uint64_t seed) {
  if (corpus.empty()) throw Error("cannot split an empty corpus");
  auto sizes = split_sizes(corpus.size(), ratios);
  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  corpus_detail::seeded_shuffle(order, seed);

  std::array<Corpus, 3> out;
  std::size_t pos = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    std::vector<std::size_t> picked(order.begin() + pos,
                                    order.begin() + pos + sizes[k]);
    std::sort(picked.begin(), picked.end());
    out[k].source_path = corpus.source_path;
    out[k].records.reserve(picked.size());
    for (auto i : picked) out[k].records.push_back(corpus.records[i]);
    pos += sizes[k];
  }
  return out;
}

}  // namespace errcat

#endif  // ERRCAT_CORPUS_HPP
