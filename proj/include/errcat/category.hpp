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

#ifndef ERRCAT_CATEGORY_HPP
#define ERRCAT_CATEGORY_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace errcat {

/// Sentence-level error category of an (input, target) pair.
///   A: input equals target.
///   B: real-word errors only (every mismatched word is a dictionary word).
///   C: non-word errors only, fixable by positional substitution.
///   D: mixed, or non-word errors that positional substitution cannot fix.
enum class ErrorCategory : unsigned char { A = 0, B = 1, C = 2, D = 3 };

inline constexpr std::size_t kCategoryCount = 4;

inline constexpr std::array<ErrorCategory, kCategoryCount> kAllCategories = {
    ErrorCategory::A, ErrorCategory::B, ErrorCategory::C, ErrorCategory::D};

constexpr std::size_t index_of(ErrorCategory c) {
  return static_cast<std::size_t>(c);
}

constexpr char to_char(ErrorCategory c) {
  return static_cast<char>('A' + static_cast<int>(c));
}

constexpr std::string_view to_string(ErrorCategory c) {
  constexpr std::string_view names[] = {"A", "B", "C", "D"};
  return names[index_of(c)];
}

/// Accepts "A".."D" and "CatA".."CatD" (case-insensitive prefix).
constexpr std::optional<ErrorCategory> parse_category(std::string_view s) {
  if (s.size() == 4 && (s[0] == 'C' || s[0] == 'c') &&
      (s[1] == 'a' || s[1] == 'A') && (s[2] == 't' || s[2] == 'T')) {
    s.remove_prefix(3);
  }
  if (s.size() != 1) return std::nullopt;
  char ch = s[0];
  if (ch >= 'a' && ch <= 'd') ch = static_cast<char>(ch - 'a' + 'A');
  if (ch < 'A' || ch > 'D') return std::nullopt;
  return static_cast<ErrorCategory>(ch - 'A');
}

}  // namespace errcat

#endif  // ERRCAT_CATEGORY_HPP
