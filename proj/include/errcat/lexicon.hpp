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

#ifndef ERRCAT_LEXICON_HPP
#define ERRCAT_LEXICON_HPP

#include <cstddef>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>

#include "errcat/error.hpp"
#include "errcat/text.hpp"

namespace errcat {

/// Dictionary-membership oracle. Immutable once built; lookups are safe
/// from any number of threads.
class Lexicon {
 public:
  Lexicon() = default;

  /// Builds from in-memory words with the same cleaning rules as the file
  /// loader. Words containing whitespace are skipped.
  Lexicon(std::initializer_list<std::string_view> words,
          std::string source = "<memory>")
      : source_(std::move(source)) {
    for (auto w : words) add(w);
  }

  template <typename Range>
  static Lexicon from_words(const Range& words,
                            std::string source = "<memory>") {
    Lexicon lex;
    lex.source_ = std::move(source);
    for (const auto& w : words) lex.add(w);
    return lex;
  }

  bool contains(std::string_view lowercase_word) const {
    return entries_.count(std::string(lowercase_word)) != 0;
  }

  std::size_t entry_count() const { return entries_.size(); }
  const std::string& source_path() const { return source_; }
  const std::unordered_set<std::string>& entries() const { return entries_; }
  std::size_t skipped_lines() const { return skipped_; }

  /// Returns a copy with additional words.
  template <typename Range>
  Lexicon with_words(const Range& words) const {
    Lexicon out = *this;
    for (const auto& w : words) out.add(w);
    return out;
  }

 private:
  friend Lexicon load_lexicon(const std::string& path);

  void add(std::string_view raw) {
    auto word = normalize(raw);
    if (word.empty() || word.front() == '#') return;
    if (word.find(' ') != std::string::npos) {
      ++skipped_;
      return;
    }
    for (char& ch : word) {
      if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
    }
    entries_.insert(std::move(word));
  }

  std::unordered_set<std::string> entries_;
  std::string source_;
  std::size_t skipped_ = 0;
};

/// Reads a UTF-8 word list: one word per line, '#' comments and blank lines
/// ignored, entries lowercased and deduplicated. Lines holding more than one
/// whitespace-separated word are skipped and counted in skipped_lines().
inline Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read lexicon file: " + path);
  Lexicon lex;
  lex.source_ = path;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!is_valid_utf8(line)) {
      throw Error(path + ":" + std::to_string(line_no) +
                  ": lexicon line is not valid UTF-8");
    }
    lex.add(line);
  }
  if (in.bad()) throw Error("error while reading lexicon file: " + path);
  if (lex.entry_count() == 0) {
    throw Error("lexicon has no usable entries: " + path);
  }
  return lex;
}

namespace lexicon_detail {

inline bool is_numeric_core(std::string_view core) {
  bool has_digit = false;
  for (char ch : core) {
    if (ch >= '0' && ch <= '9') {
      has_digit = true;
    } else if (std::string_view(".,:'/%-").find(ch) == std::string_view::npos) {
      return false;
    }
  }
  return has_digit;
}

}  // namespace lexicon_detail

/// A token is valid when its core is a lexicon entry, is empty
/// (punctuation-only token), or is a number such as "1'40" or "3.5%".
inline bool is_valid_word(const Lexicon& lexicon, const Token& token) {
  const auto& core = token.core;
  if (core.empty()) return true;
  if (lexicon_detail::is_numeric_core(core)) return true;
  return lexicon.contains(core);
}

}  // namespace errcat

#endif  // ERRCAT_LEXICON_HPP
