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

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "errcat/categorizer.hpp"
#include "errcat/corpus.hpp"
#include "errcat/error.hpp"
#include "errcat/lexicon.hpp"
#include "test_support.hpp"

namespace errcat {
namespace {

using C = ErrorCategory;

const Lexicon& cars_lexicon() {
  static const Lexicon lex{"these", "are", "cars", "car"};
  return lex;
}

std::vector<std::pair<std::string, std::size_t>> mismatched(
    const std::string& input, const std::string& target) {
  auto m = match_tokens(tokenize(input), tokenize(target));
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const auto& t : m.mismatched) out.emplace_back(t.token.surface, t.input_index);
  return out;
}

TEST(MatchTokensTest, GreedyLeftToRight) {
  using V = std::vector<std::pair<std::string, std::size_t>>;
  EXPECT_EQ(mismatched("Thess are car.", "These are cars."),
            (V{{"Thess", 0}, {"car.", 2}}));
}

TEST(MatchTokensTest, IdenticalSequencesConsumeEverything) {
  auto m = match_tokens(tokenize("a b c"), tokenize("a b c"));
  EXPECT_TRUE(m.mismatched.empty());
  EXPECT_EQ(m.consumed_target_indices, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(MatchTokensTest, DuplicatesConsumeLeftmostTarget) {
  using V = std::vector<std::pair<std::string, std::size_t>>;
  EXPECT_EQ(mismatched("a a", "a"), (V{{"a", 1}}));
  auto m = match_tokens(tokenize("b a"), tokenize("a x a"));
  EXPECT_EQ(m.consumed_target_indices, (std::vector<std::size_t>{0}));
}

TEST(MatchTokensTest, CaseAndPunctuationSensitive) {
  using V = std::vector<std::pair<std::string, std::size_t>>;
  EXPECT_EQ(mismatched("japan cars", "Japan cars."),
            (V{{"japan", 0}, {"cars", 1}}));
}

TEST(CategorizeTest, CanonicalExamples) {
  const auto& lex = cars_lexicon();
  EXPECT_EQ(categorize("These are cars.", "These are cars.", lex).category, C::A);
  EXPECT_EQ(categorize("These are car.", "These are cars.", lex).category, C::B);
  EXPECT_EQ(categorize("These are rars.", "These are cars.", lex).category, C::C);
  EXPECT_EQ(categorize("Thess are car.", "These are cars.", lex).category, C::D);
}

TEST(CategorizeTest, VerdictEvidence) {
  const auto& lex = cars_lexicon();
  auto b = categorize("These are car.", "These are cars.", lex);
  EXPECT_EQ(b, (CategoryVerdict{C::B, 1, 1, std::nullopt}));
  auto c = categorize("These are rars.", "These are cars.", lex);
  EXPECT_EQ(c, (CategoryVerdict{C::C, 1, 0, true}));
  auto d = categorize("Thess are car.", "These are cars.", lex);
  EXPECT_EQ(d, (CategoryVerdict{C::D, 2, 1, std::nullopt}));
}

TEST(CategorizeTest, PositionalReplacementFixesTypo) {
  Lexicon lex{"i", "want", "to", "talk", "her"};
  auto v = categorize("I wnat to talk to her", "I want to talk to her", lex);
  EXPECT_EQ(v.category, C::C);
  EXPECT_EQ(v.replacement_matched, std::optional<bool>(true));
}

TEST(CategorizeTest, FailedReplacementIsMixed) {
  const auto& lex = cars_lexicon();
  // Non-word with a missing target word: substitution cannot realign.
  auto v = categorize("These rars.", "These are cars.", lex);
  EXPECT_EQ(v.category, C::D);
  EXPECT_EQ(v.replacement_matched, std::optional<bool>(false));
  // Mismatched index past the end of the target.
  auto w = categorize("These are cars. rars", "These are cars.", lex);
  EXPECT_EQ(w.category, C::D);
  EXPECT_EQ(w.replacement_matched, std::optional<bool>(false));
}

TEST(CategorizeTest, ReorderingAndOmissionAreGrammatical) {
  const auto& lex = cars_lexicon();
  EXPECT_EQ(categorize("are These cars.", "These are cars.", lex).category, C::B);
  EXPECT_EQ(categorize("These cars.", "These are cars.", lex).category, C::B);
}

TEST(CategorizeTest, CapitalizationIsNotCatA) {
  const auto& lex = cars_lexicon();
  EXPECT_EQ(categorize("these are cars.", "These are cars.", lex).category, C::B);
}

TEST(CategorizeTest, EmptySentences) {
  const auto& lex = cars_lexicon();
  EXPECT_EQ(categorize("", "", lex).category, C::A);
  EXPECT_EQ(categorize("  ", "\t", lex).category, C::A);
  EXPECT_EQ(categorize("", "These are cars.", lex).category, C::B);
  EXPECT_EQ(categorize("rars", "", lex), (CategoryVerdict{C::B, 0, 0, std::nullopt}));
}

TEST(CategorizeTest, WhitespaceOnlyDifferenceIsCatA) {
  EXPECT_EQ(categorize(" These  are\tcars. ", "These are cars.", cars_lexicon())
                .category,
            C::A);
}

TEST(CategorizeCorpusTest, InputField) {
  Corpus c;
  c.records = {{"1", "These are cars.", "These are cars.", {}},
               {"2", "These are car.", "These are cars.", {}},
               {"3", "These are rars.", "These are cars.", {}},
               {"4", "Thess are car.", "These are cars.", {}}};
  auto v = categorize_corpus(c, cars_lexicon(), CompareField::Input);
  ASSERT_EQ(v.size(), 4u);
  std::vector<C> cats;
  for (const auto& rv : v) cats.push_back(rv.verdict.category);
  EXPECT_EQ(cats, (std::vector<C>{C::A, C::B, C::C, C::D}));
  EXPECT_EQ(v[2].id, "3");
}

TEST(CategorizeCorpusTest, MissingPredictionsListIds) {
  Corpus c;
  c.source_path = "x.jsonl";
  c.records = {{"ok", "a", "a", std::string("a")},
               {"bad-1", "a", "a", std::nullopt},
               {"bad-2", "a", "a", std::nullopt}};
  try {
    categorize_corpus(c, cars_lexicon(), CompareField::Predicted);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("bad-1"), std::string::npos);
    EXPECT_NE(msg.find("bad-2"), std::string::npos);
    EXPECT_EQ(msg.find("ok"), std::string::npos);
  }
}

TEST(CategorizeCorpusTest, ThreadCountDoesNotChangeOutput) {
  testing::SentenceGen gen({"These", "are", "cars.", "car.", "rars.", "Thess"}, 3);
  Corpus c;
  for (int i = 0; i < 2000; ++i) {
    c.records.push_back({std::to_string(i), gen.sentence(0, 5), gen.sentence(0, 5),
                         gen.sentence(0, 5)});
  }
  auto one = categorize_corpus(c, cars_lexicon(), CompareField::Predicted, 1);
  for (unsigned t : {2u, 3u, 8u, 0u}) {
    auto many = categorize_corpus(c, cars_lexicon(), CompareField::Predicted, t);
    ASSERT_EQ(many.size(), one.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      EXPECT_EQ(many[i].id, one[i].id);
      EXPECT_EQ(many[i].verdict, one[i].verdict);
    }
  }
}

// ------------------------------------------------------------- properties

const std::vector<std::string> kVocab = {"These", "these", "are", "cars.",
                                         "cars",  "car",   "rars", "Thess",
                                         ".",     "xyz,"};

void check_evidence(const CategoryVerdict& v, const std::string& in,
                    const std::string& tg) {
  SCOPED_TRACE(in + " || " + tg);
  EXPECT_LE(v.lexicon_hits, v.mismatched_count);
  EXPECT_EQ(v.category == C::A,
            v.mismatched_count == 0 && normalize(in) == normalize(tg));
  EXPECT_EQ(v.replacement_matched.has_value(),
            v.lexicon_hits == 0 && v.mismatched_count > 0);
  switch (v.category) {
    case C::A:
      break;
    case C::B:
      EXPECT_EQ(v.lexicon_hits, v.mismatched_count);
      break;
    case C::C:
      EXPECT_EQ(v.lexicon_hits, 0u);
      EXPECT_EQ(v.replacement_matched, std::optional<bool>(true));
      break;
    case C::D:
      EXPECT_TRUE((v.lexicon_hits > 0 && v.lexicon_hits < v.mismatched_count) ||
                  (v.lexicon_hits == 0 &&
                   v.replacement_matched == std::optional<bool>(false)));
      break;
  }
}

TEST(CategorizePropertyTest, Reflexivity) {
  testing::SentenceGen gen(kVocab, 31);
  for (int i = 0; i < 1000; ++i) {
    auto s = gen.sentence(0, 8);
    EXPECT_EQ(categorize(s, s, cars_lexicon()).category, C::A) << s;
  }
}

TEST(CategorizePropertyTest, WhitespaceInvariance) {
  testing::SentenceGen gen(kVocab, 32);
  for (int i = 0; i < 1000; ++i) {
    auto a = gen.words(0, 6);
    auto b = gen.words(0, 6);
    auto messy = categorize(gen.messy(a), gen.messy(b), cars_lexicon());
    auto clean = categorize(testing::SentenceGen::join(a),
                            testing::SentenceGen::join(b), cars_lexicon());
    EXPECT_EQ(messy, clean);
  }
}

TEST(CategorizePropertyTest, EvidenceSoundness) {
  testing::SentenceGen gen(kVocab, 33);
  for (int i = 0; i < 3000; ++i) {
    auto in = gen.sentence(0, 6);
    auto tg = gen.uniform(0, 3) == 0 ? in : gen.sentence(0, 6);
    check_evidence(categorize(in, tg, cars_lexicon()), in, tg);
  }
}

TEST(CategorizePropertyTest, MonotoneEvidence) {
  testing::SentenceGen gen(kVocab, 34);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    auto in = gen.sentence(1, 6);
    auto tg = gen.sentence(1, 6);
    auto v = categorize(in, tg, cars_lexicon());
    if (v.category != C::C && v.category != C::D) continue;
    std::vector<std::string> cores;
    for (const auto& m : match_tokens(tokenize(in), tokenize(tg)).mismatched) {
      cores.push_back(m.token.core);
    }
    auto bigger = cars_lexicon().with_words(cores);
    EXPECT_EQ(categorize(in, tg, bigger).category, C::B) << in << " || " << tg;
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(CategorizeOracleTest, ExhaustiveUpToLengthTwo) {
  const std::vector<std::string> vocab = {"these", "are", "cars", "rars", "thess"};
  testing::Oracle oracle({"these", "are", "cars"});
  Lexicon lex{"these", "are", "cars"};
  std::vector<std::vector<std::string>> sentences = {{}};
  for (const auto& a : vocab) {
    sentences.push_back({a});
    for (const auto& b : vocab) sentences.push_back({a, b});
  }
  for (const auto& in : sentences) {
    for (const auto& tg : sentences) {
      auto v = categorize(testing::SentenceGen::join(in),
                          testing::SentenceGen::join(tg), lex);
      auto o = oracle(in, tg);
      ASSERT_EQ(v.category, o.category)
          << testing::SentenceGen::join(in) << " || "
          << testing::SentenceGen::join(tg);
      ASSERT_EQ(v.mismatched_count, o.mismatched);
      ASSERT_EQ(v.lexicon_hits, o.hits);
      ASSERT_EQ(v.replacement_matched, o.replacement);
    }
  }
}

}  // namespace
}  // namespace errcat
