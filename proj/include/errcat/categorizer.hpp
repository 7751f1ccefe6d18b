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

// Error-category assignment for (input, target) sentence pairs.
//
// The decision procedure:
//   1. normalized input == normalized target               -> A
//   2. either side empty after normalization                 -> B
//   3. greedy token matching leaves no mismatched input word -> B
//   4. count mismatched words found in the lexicon ("hits"):
//        all hit                                             -> B
//        some hit                                            -> D
//        none hit: substitute target[i] for every mismatched
//        input[i]; if that reproduces the target             -> C
//                                                  otherwise -> D

#ifndef ERRCAT_CATEGORIZER_HPP
#define ERRCAT_CATEGORIZER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errcat/category.hpp"
#include "errcat/corpus.hpp"
#include "errcat/error.hpp"
#include "errcat/lexicon.hpp"
#include "errcat/parallel.hpp"
#include "errcat/text.hpp"

namespace errcat {

struct MismatchedToken {
  Token token;
  std::size_t input_index = 0;
};

struct MatchResult {
  std::vector<MismatchedToken> mismatched;
  std::vector<std::size_t> consumed_target_indices;  // ascending
};

struct CategoryVerdict {
  ErrorCategory category = ErrorCategory::A;
  std::size_t mismatched_count = 0;
  std::size_t lexicon_hits = 0;
  std::optional<bool> replacement_matched;

  friend bool operator==(const CategoryVerdict&, const CategoryVerdict&) =
      default;
};

struct RecordVerdict {
  std::string id;
  CategoryVerdict verdict;
};

/// Scans input tokens left to right; each one consumes the leftmost
/// unconsumed target token with an identical surface (case- and
/// punctuation-sensitive). Input tokens left without a partner are
/// mismatched.
inline MatchResult match_tokens(const TokenSequence& input,
                                const TokenSequence& target) {
  MatchResult result;
  std::vector<bool> consumed(target.size(), false);
  for (const auto& tok : input) {
    bool found = false;
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (!consumed[j] && target[j].surface == tok.surface) {
        consumed[j] = true;
        found = true;
        break;
      }
    }
    if (!found) result.mismatched.push_back({tok, tok.index});
  }
  for (std::size_t j = 0; j < consumed.size(); ++j) {
    if (consumed[j]) result.consumed_target_indices.push_back(j);
  }
  return result;
}

namespace categorizer_detail {

inline bool replacement_reconstructs(const TokenSequence& input,
                                     const TokenSequence& target,
                                     const MatchResult& match) {
  if (input.size() != target.size()) return false;
  std::vector<std::string_view> patched;
  patched.reserve(input.size());
  for (const auto& tok : input) patched.emplace_back(tok.surface);
  for (const auto& m : match.mismatched) {
    if (m.input_index < target.size()) {
      patched[m.input_index] = target[m.input_index].surface;
    }
  }
  for (std::size_t i = 0; i < patched.size(); ++i) {
    if (patched[i] != target[i].surface) return false;
  }
  return true;
}

}  // namespace categorizer_detail

inline CategoryVerdict categorize(const TokenSequence& input,
                                  const TokenSequence& target,
                                  const Lexicon& lexicon) {
  CategoryVerdict v;
  if (input.normalized_text() == target.normalized_text()) {
    v.category = ErrorCategory::A;
    return v;
  }
  // Pure omission or addition of content carries no non-word evidence.
  if (input.empty() || target.empty()) {
    v.category = ErrorCategory::B;
    return v;
  }
  auto match = match_tokens(input, target);
  v.mismatched_count = match.mismatched.size();
  if (match.mismatched.empty()) {
    v.category = ErrorCategory::B;
    return v;
  }
  for (const auto& m : match.mismatched) {
    if (is_valid_word(lexicon, m.token)) ++v.lexicon_hits;
  }
  if (v.lexicon_hits == v.mismatched_count) {
    v.category = ErrorCategory::B;
  } else if (v.lexicon_hits > 0) {
    v.category = ErrorCategory::D;
  } else {
    bool fixed = categorizer_detail::replacement_reconstructs(input, target,
                                                              match);
    v.replacement_matched = fixed;
    v.category = fixed ? ErrorCategory::C : ErrorCategory::D;
  }
  return v;
}

inline CategoryVerdict categorize(std::string_view input,
                                  std::string_view target,
                                  const Lexicon& lexicon) {
  return categorize(tokenize(input), tokenize(target), lexicon);
}

enum class CompareField { Input, Predicted };

/// One verdict per record, in corpus order, comparing `field` against the
/// target. `threads` = 0 picks a worker count automatically; the output does
/// not depend on it.
inline std::vector<RecordVerdict> categorize_corpus(const Corpus& corpus,
                                                    const Lexicon& lexicon,
                                                    CompareField field,
                                                    unsigned threads = 1) {
  if (field == CompareField::Predicted) {
    std::string missing;
    std::size_t n_missing = 0;
    for (const auto& rec : corpus.records) {
      if (rec.predicted) continue;
      if (n_missing < 20) missing += (missing.empty() ? "" : ", ") + rec.id;
      ++n_missing;
    }
    if (n_missing > 0) {
      if (n_missing > 20) {
        missing += ", ... (" + std::to_string(n_missing) + " total)";
      }
      throw Error(corpus.source_path + ": records without a predicted " +
                  "sentence: " + missing);
    }
  }
  std::vector<RecordVerdict> out(corpus.size());
  parallel_for(corpus.size(), threads, [&](std::size_t i) {
    const auto& rec = corpus.records[i];
    const auto& compared =
        field == CompareField::Input ? rec.input : *rec.predicted;
    out[i] = {rec.id, categorize(compared, rec.target, lexicon)};
  });
  return out;
}

}  // namespace errcat

#endif  // ERRCAT_CATEGORIZER_HPP
