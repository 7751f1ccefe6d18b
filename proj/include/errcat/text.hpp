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

// Sentence normalization and whitespace tokenization.
//
// Tokens are the whitespace-separated chunks of a normalized sentence.
// Punctuation stays attached to its word; each token additionally carries a
// lookup "core" with leading/trailing Unicode punctuation removed and ASCII
// letters lowercased, which is what the lexicon sees.

#ifndef ERRCAT_TEXT_HPP
#define ERRCAT_TEXT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace errcat {

namespace text_detail {

struct CodePoint {
  std::size_t begin;
  std::size_t end;
  UChar32 value;  // negative for ill-formed UTF-8
};

inline CodePoint next_code_point(std::string_view s, std::size_t pos) {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(s.data());
  const auto length = static_cast<std::int32_t>(s.size());
  auto i = static_cast<std::int32_t>(pos);
  UChar32 c = 0;
  U8_NEXT(bytes, i, length, c);
  return {pos, static_cast<std::size_t>(i), c};
}

inline CodePoint prev_code_point(std::string_view s, std::size_t end) {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(s.data());
  auto i = static_cast<std::int32_t>(end);
  UChar32 c = 0;
  U8_PREV(bytes, 0, i, c);
  return {static_cast<std::size_t>(i), end, c};
}

inline bool is_space(UChar32 c) { return c >= 0 && u_isUWhiteSpace(c); }

inline bool is_punct(UChar32 c) { return c >= 0 && u_ispunct(c); }

}  // namespace text_detail

/// True if `s` is well-formed UTF-8.
inline bool is_valid_utf8(std::string_view s) {
  for (std::size_t pos = 0; pos < s.size();) {
    auto cp = text_detail::next_code_point(s, pos);
    if (cp.value < 0) return false;
    pos = cp.end;
  }
  return true;
}

/// Trims Unicode whitespace at both ends and collapses every internal
/// whitespace run to one ASCII space. Nothing else is altered.
inline std::string normalize(std::string_view sentence) {
  std::string out;
  out.reserve(sentence.size());
  bool pending_space = false;
  for (std::size_t pos = 0; pos < sentence.size();) {
    auto cp = text_detail::next_code_point(sentence, pos);
    if (text_detail::is_space(cp.value)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.append(sentence.substr(cp.begin, cp.end - cp.begin));
    }
    pos = cp.end;
  }
  return out;
}

/// Strips leading and trailing Unicode punctuation (general category P*)
/// and lowercases ASCII letters. Internal punctuation survives ("it's").
inline std::string lookup_core(std::string_view surface) {
  std::size_t begin = 0;
  std::size_t end = surface.size();
  while (begin < end) {
    auto cp = text_detail::next_code_point(surface, begin);
    if (!text_detail::is_punct(cp.value)) break;
    begin = cp.end;
  }
  while (end > begin) {
    auto cp = text_detail::prev_code_point(surface, end);
    if (!text_detail::is_punct(cp.value)) break;
    end = cp.begin;
  }
  std::string core(surface.substr(begin, end - begin));
  for (char& ch : core) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return core;
}

struct Token {
  std::string surface;
  std::string core;
  std::size_t index = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

class TokenSequence {
 public:
  TokenSequence() = default;

  const std::vector<Token>& tokens() const { return tokens_; }
  const std::string& normalized_text() const { return normalized_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  const Token& operator[](std::size_t i) const { return tokens_[i]; }
  auto begin() const { return tokens_.begin(); }
  auto end() const { return tokens_.end(); }

  std::vector<std::string> surfaces() const {
    std::vector<std::string> out;
    out.reserve(tokens_.size());
    for (const auto& t : tokens_) out.push_back(t.surface);
    return out;
  }

 private:
  friend TokenSequence tokenize(std::string_view sentence);

  std::vector<Token> tokens_;
  std::string normalized_;
};

inline TokenSequence tokenize(std::string_view sentence) {
  TokenSequence seq;
  seq.normalized_ = normalize(sentence);
  std::string_view rest = seq.normalized_;
  while (!rest.empty()) {
    auto cut = rest.find(' ');
    auto piece = rest.substr(0, cut);
    seq.tokens_.push_back(
        Token{std::string(piece), lookup_core(piece), seq.tokens_.size()});
    if (cut == std::string_view::npos) break;
    rest.remove_prefix(cut + 1);
  }
  return seq;
}

}  // namespace errcat

#endif  // ERRCAT_TEXT_HPP
