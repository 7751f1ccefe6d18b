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

// Correction percentages and category distributions.

#ifndef ERRCAT_METRICS_HPP
#define ERRCAT_METRICS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "errcat/categorizer.hpp"
#include "errcat/category.hpp"
#include "errcat/shift.hpp"

namespace errcat {

/// An exact count ratio with its percentage rounded half-up to one decimal.
/// A zero denominator leaves the ratio undefined.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 0;

  bool defined() const { return den != 0; }

  /// 100 * num / den in tenths of a percent, rounded half-up.
  std::optional<std::uint64_t> tenths() const {
    if (den == 0) return std::nullopt;
    return (2000 * num + den) / (2 * den);
  }

  std::optional<double> percent() const {
    auto t = tenths();
    if (!t) return std::nullopt;
    return static_cast<double>(*t) / 10.0;
  }

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct CorrectionMetrics {
  Fraction spelling;
  Fraction grammatical;
  Fraction mixed;
};

/// Correction rates over the input columns of a confusion matrix:
///   spelling    = (D->B + C->A) / (|D| + |C|)
///   grammatical = (D->C + B->A) / (|D| + |B|)
///   mixed       =  D->A         /  |D|
/// where |X| is the input-column total of category X.
inline CorrectionMetrics correction_metrics(const ConfusionMatrix& m) {
  using C = ErrorCategory;
  const auto b = m.col_total(C::B);
  const auto c = m.col_total(C::C);
  const auto d = m.col_total(C::D);
  CorrectionMetrics out;
  out.spelling = {m.transition(C::D, C::B) + m.transition(C::C, C::A), d + c};
  out.grammatical = {m.transition(C::D, C::C) + m.transition(C::B, C::A),
                     d + b};
  out.mixed = {m.transition(C::D, C::A), d};
  return out;
}

/// Share of `category`'s input sentences predicted as A.
inline Fraction fully_corrected_rate(const ConfusionMatrix& m,
                                     ErrorCategory category) {
  return {m.transition(category, ErrorCategory::A), m.col_total(category)};
}

struct CategoryDistribution {
  std::array<std::uint64_t, kCategoryCount> counts{};

  std::uint64_t total() const {
    std::uint64_t sum = 0;
    for (auto c : counts) sum += c;
    return sum;
  }

  Fraction fraction(ErrorCategory c) const {
    return {counts[index_of(c)], total()};
  }

  friend bool operator==(const CategoryDistribution&,
                         const CategoryDistribution&) = default;
};

inline CategoryDistribution distribution(
    const std::vector<RecordVerdict>& verdicts) {
  CategoryDistribution d;
  for (const auto& v : verdicts) ++d.counts[index_of(v.verdict.category)];
  return d;
}

}  // namespace errcat

#endif  // ERRCAT_METRICS_HPP
