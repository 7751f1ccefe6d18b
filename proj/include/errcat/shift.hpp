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

// Category shifts between a record's input and its model prediction:
// the input-vs-predicted confusion matrix and per-record cause diagnosis.

#ifndef ERRCAT_SHIFT_HPP
#define ERRCAT_SHIFT_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errcat/categorizer.hpp"
#include "errcat/category.hpp"
#include "errcat/corpus.hpp"
#include "errcat/error.hpp"
#include "errcat/lexicon.hpp"
#include "errcat/parallel.hpp"
#include "errcat/text.hpp"

namespace errcat {

/// 4x4 counts. Rows are the predicted category, columns the input category,
/// so column totals are the input distribution.
class ConfusionMatrix {
 public:
  using Grid = std::array<std::array<std::uint64_t, kCategoryCount>,
                          kCategoryCount>;

  ConfusionMatrix() = default;
  explicit ConfusionMatrix(const Grid& by_predicted_then_input)
      : counts_(by_predicted_then_input) {}

  /// Records whose input is in `from` and whose prediction is in `to`.
  std::uint64_t transition(ErrorCategory from, ErrorCategory to) const {
    return counts_[index_of(to)][index_of(from)];
  }

  void add(ErrorCategory from, ErrorCategory to, std::uint64_t n = 1) {
    counts_[index_of(to)][index_of(from)] += n;
  }

  /// Cell addressed the way it is printed: (row = predicted, col = input).
  std::uint64_t at(ErrorCategory predicted, ErrorCategory input) const {
    return counts_[index_of(predicted)][index_of(input)];
  }

  std::uint64_t row_total(ErrorCategory predicted) const {
    std::uint64_t sum = 0;
    for (auto v : counts_[index_of(predicted)]) sum += v;
    return sum;
  }

  std::uint64_t col_total(ErrorCategory input) const {
    std::uint64_t sum = 0;
    for (const auto& row : counts_) sum += row[index_of(input)];
    return sum;
  }

  std::uint64_t grand_total() const {
    std::uint64_t sum = 0;
    for (auto c : kAllCategories) sum += row_total(c);
    return sum;
  }

  const Grid& counts() const { return counts_; }

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) =
      default;

 private:
  Grid counts_{};
};

/// Cross-tabulates two verdict lists over the same id set.
inline ConfusionMatrix build_confusion(
    const std::vector<RecordVerdict>& input_verdicts,
    const std::vector<RecordVerdict>& predicted_verdicts) {
  std::unordered_map<std::string, ErrorCategory> from;
  from.reserve(input_verdicts.size());
  for (const auto& rv : input_verdicts) {
    if (!from.emplace(rv.id, rv.verdict.category).second) {
      throw Error("duplicate id in input verdicts: " + rv.id);
    }
  }
  ConfusionMatrix m;
  std::set<std::string> only_predicted;
  std::unordered_map<std::string, bool> seen;
  for (const auto& rv : predicted_verdicts) {
    auto it = from.find(rv.id);
    if (it == from.end()) {
      only_predicted.insert(rv.id);
      continue;
    }
    if (!seen.emplace(rv.id, true).second) {
      throw Error("duplicate id in predicted verdicts: " + rv.id);
    }
    m.add(it->second, rv.verdict.category);
  }
  std::set<std::string> only_input;
  for (const auto& rv : input_verdicts) {
    if (!seen.count(rv.id)) only_input.insert(rv.id);
  }
  if (!only_input.empty() || !only_predicted.empty()) {
    std::string msg = "verdict id sets differ;";
    auto list = [&](const char* label, const std::set<std::string>& ids) {
      if (ids.empty()) return;
      msg += std::string(" ") + label + ":";
      for (const auto& id : ids) msg += " " + id;
    };
    list("only in input", only_input);
    list("only in predicted", only_predicted);
    throw Error(msg);
  }
  return m;
}

enum class ShiftCause : unsigned char {
  NewWordsIntroduced,
  WordsDeleted,
  SequenceChanged,
  CorrectWordAltered,
  SpellingCorrectedToNonMatching,
  SpellingErrorsIntroduced,
  SpellingErrorsCorrected,
  GrammaticalErrorsCorrected,
  NoChange,
};

inline constexpr std::size_t kShiftCauseCount = 9;

inline constexpr std::array<ShiftCause, kShiftCauseCount> kAllShiftCauses = {
    ShiftCause::NewWordsIntroduced,
    ShiftCause::WordsDeleted,
    ShiftCause::SequenceChanged,
    ShiftCause::CorrectWordAltered,
    ShiftCause::SpellingCorrectedToNonMatching,
    ShiftCause::SpellingErrorsIntroduced,
    ShiftCause::SpellingErrorsCorrected,
    ShiftCause::GrammaticalErrorsCorrected,
    ShiftCause::NoChange,
};

constexpr std::string_view to_string(ShiftCause c) {
  constexpr std::string_view names[] = {
      "NewWordsIntroduced",
      "WordsDeleted",
      "SequenceChanged",
      "CorrectWordAltered",
      "SpellingCorrectedToNonMatching",
      "SpellingErrorsIntroduced",
      "SpellingErrorsCorrected",
      "GrammaticalErrorsCorrected",
      "NoChange",
  };
  return names[static_cast<std::size_t>(c)];
}

inline std::optional<ShiftCause> parse_shift_cause(std::string_view s) {
  for (auto c : kAllShiftCauses) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

/// Small ordered set over the closed cause enumeration.
class CauseSet {
 public:
  void insert(ShiftCause c) { bits_ |= bit(c); }
  bool contains(ShiftCause c) const { return (bits_ & bit(c)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const {
    std::size_t n = 0;
    for (auto c : kAllShiftCauses) n += contains(c) ? 1 : 0;
    return n;
  }
  std::vector<ShiftCause> to_vector() const {
    std::vector<ShiftCause> out;
    for (auto c : kAllShiftCauses) {
      if (contains(c)) out.push_back(c);
    }
    return out;
  }

  friend bool operator==(const CauseSet&, const CauseSet&) = default;

 private:
  static constexpr std::uint16_t bit(ShiftCause c) {
    return static_cast<std::uint16_t>(1u << static_cast<unsigned>(c));
  }
  std::uint16_t bits_ = 0;
};

struct ShiftDiagnosis {
  std::string id;
  ErrorCategory from_category = ErrorCategory::A;
  ErrorCategory to_category = ErrorCategory::A;
  CauseSet causes;
};

namespace shift_detail {

using Counts = std::map<std::string_view, std::size_t>;

inline Counts count_surfaces(const TokenSequence& seq) {
  Counts c;
  for (const auto& t : seq) ++c[t.surface];
  return c;
}

inline std::size_t count_of(const Counts& c, std::string_view s) {
  auto it = c.find(s);
  return it == c.end() ? 0 : it->second;
}

// Tokens of `from` in excess of their multiplicity in `other`, in order.
inline std::vector<const Token*> excess(const TokenSequence& from,
                                        const Counts& other) {
  std::vector<const Token*> out;
  Counts used;
  for (const auto& t : from) {
    if (++used[t.surface] > count_of(other, t.surface)) out.push_back(&t);
  }
  return out;
}

}  // namespace shift_detail

/// Token-level causes of the move from `from` (input vs target) to `to`
/// (predicted vs target). Comparisons use surfaces and multisets:
///
///   NewWordsIntroduced   predicted has surfaces in excess of the input.
///   WordsDeleted         input has surfaces in excess of the prediction.
///   SequenceChanged      same multiset, different order.
///   CorrectWordAltered   a removed input word either matched the target,
///                        or was a valid word replaced by another valid
///                        word the target does not contain.
///   SpellingErrorsIntroduced        an added word is not a valid word.
///   SpellingErrorsCorrected         a non-word was removed and a target
///                                   word was added.
///   SpellingCorrectedToNonMatching  a non-word was removed and a valid
///                                   word absent from the target was added.
///   GrammaticalErrorsCorrected      from is B or D, to is A or C.
///   NoChange             prediction surfaces equal input surfaces; this
///                        is then the only cause.
inline ShiftDiagnosis diagnose_shift(const SentenceRecord& record,
                                     const Lexicon& lexicon,
                                     ErrorCategory from, ErrorCategory to) {
  using namespace shift_detail;
  if (!record.predicted) {
    throw Error("record " + record.id + " has no predicted sentence");
  }
  ShiftDiagnosis d{record.id, from, to, {}};
  auto input = tokenize(record.input);
  auto target = tokenize(record.target);
  auto predicted = tokenize(*record.predicted);

  if (input.surfaces() == predicted.surfaces()) {
    d.causes.insert(ShiftCause::NoChange);
    return d;
  }

  auto in_counts = count_surfaces(input);
  auto pred_counts = count_surfaces(predicted);
  auto tgt_counts = count_surfaces(target);
  auto added = excess(predicted, in_counts);
  auto removed = excess(input, pred_counts);

  if (!added.empty()) d.causes.insert(ShiftCause::NewWordsIntroduced);
  if (!removed.empty()) d.causes.insert(ShiftCause::WordsDeleted);
  if (added.empty() && removed.empty()) {
    d.causes.insert(ShiftCause::SequenceChanged);
  }

  auto valid = [&](const Token* t) { return is_valid_word(lexicon, *t); };
  auto in_target = [&](const Token* t) {
    return count_of(tgt_counts, t->surface) > 0;
  };

  bool removed_matched = false;
  bool removed_valid = false;
  bool removed_nonword = false;
  for (const Token* t : removed) {
    // Greedy matching pairs min(input, target) copies of a surface; a
    // matched copy is gone iff the prediction keeps fewer than that.
    auto matched_copies = std::min(count_of(in_counts, t->surface),
                                   count_of(tgt_counts, t->surface));
    if (count_of(pred_counts, t->surface) < matched_copies) {
      removed_matched = true;
    }
    if (valid(t)) {
      removed_valid = true;
    } else {
      removed_nonword = true;
    }
  }

  bool added_nonword = false;
  bool added_target_word = false;
  bool added_valid_off_target = false;
  for (const Token* t : added) {
    if (!valid(t)) added_nonword = true;
    if (in_target(t)) {
      added_target_word = true;
    } else if (valid(t)) {
      added_valid_off_target = true;
    }
  }

  if (!added.empty() &&
      (removed_matched || (removed_valid && added_valid_off_target))) {
    d.causes.insert(ShiftCause::CorrectWordAltered);
  }
  if (added_nonword) d.causes.insert(ShiftCause::SpellingErrorsIntroduced);
  if (removed_nonword && added_target_word) {
    d.causes.insert(ShiftCause::SpellingErrorsCorrected);
  }
  if (removed_nonword && added_valid_off_target) {
    d.causes.insert(ShiftCause::SpellingCorrectedToNonMatching);
  }
  if ((from == ErrorCategory::B || from == ErrorCategory::D) &&
      (to == ErrorCategory::A || to == ErrorCategory::C)) {
    d.causes.insert(ShiftCause::GrammaticalErrorsCorrected);
  }
  return d;
}

/// Diagnoses every record, with from/to taken from the two categorizer
/// passes. Output order follows the corpus regardless of `threads`.
inline std::vector<ShiftDiagnosis> diagnose_corpus(
    const Corpus& corpus, const Lexicon& lexicon,
    const std::vector<RecordVerdict>& input_verdicts,
    const std::vector<RecordVerdict>& predicted_verdicts,
    unsigned threads = 1) {
  if (input_verdicts.size() != corpus.size() ||
      predicted_verdicts.size() != corpus.size()) {
    throw Error("verdict lists do not cover the corpus: " +
                corpus.source_path);
  }
  std::vector<ShiftDiagnosis> out(corpus.size());
  parallel_for(corpus.size(), threads, [&](std::size_t i) {
    const auto& rec = corpus.records[i];
    if (input_verdicts[i].id != rec.id || predicted_verdicts[i].id != rec.id) {
      throw Error("verdict order does not match corpus at record " + rec.id);
    }
    out[i] = diagnose_shift(rec, lexicon, input_verdicts[i].verdict.category,
                            predicted_verdicts[i].verdict.category);
  });
  return out;
}

/// Per (from, to) cell: number of diagnoses and how often each cause fired.
class ShiftReport {
 public:
  struct Cell {
    std::uint64_t total = 0;
    std::array<std::uint64_t, kShiftCauseCount> causes{};

    friend bool operator==(const Cell&, const Cell&) = default;
  };

  const Cell& cell(ErrorCategory from, ErrorCategory to) const {
    return cells_[index_of(from)][index_of(to)];
  }

  std::uint64_t cause_count(ErrorCategory from, ErrorCategory to,
                            ShiftCause c) const {
    return cell(from, to).causes[static_cast<std::size_t>(c)];
  }

  void add(const ShiftDiagnosis& d) {
    auto& c = cells_[index_of(d.from_category)][index_of(d.to_category)];
    ++c.total;
    for (auto cause : d.causes.to_vector()) {
      ++c.causes[static_cast<std::size_t>(cause)];
    }
  }

  friend bool operator==(const ShiftReport&, const ShiftReport&) = default;

 private:
  std::array<std::array<Cell, kCategoryCount>, kCategoryCount> cells_{};
};

inline ShiftReport shift_report(const std::vector<ShiftDiagnosis>& diagnoses) {
  ShiftReport r;
  for (const auto& d : diagnoses) r.add(d);
  return r;
}

}  // namespace errcat

#endif  // ERRCAT_SHIFT_HPP
