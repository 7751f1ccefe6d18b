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

#include <algorithm>
#include <string>
#include <vector>

#include "errcat/categorizer.hpp"
#include "errcat/error.hpp"
#include "errcat/fixtures.hpp"
#include "errcat/shift.hpp"
#include "test_support.hpp"

namespace errcat {
namespace {

using C = ErrorCategory;
using S = ShiftCause;

std::vector<RecordVerdict> verdicts(std::initializer_list<std::pair<const char*, C>> v) {
  std::vector<RecordVerdict> out;
  for (const auto& [id, c] : v) out.push_back({id, {c, 0, 0, std::nullopt}});
  return out;
}

TEST(ConfusionMatrixTest, AxesAreRowsPredictedColumnsInput) {
  ConfusionMatrix m;
  m.add(C::C, C::A, 3);
  EXPECT_EQ(m.transition(C::C, C::A), 3u);
  EXPECT_EQ(m.at(C::A, C::C), 3u);
  EXPECT_EQ(m.col_total(C::C), 3u);
  EXPECT_EQ(m.row_total(C::A), 3u);
  EXPECT_EQ(m.grand_total(), 3u);
}

TEST(BuildConfusionTest, IdentityIsDiagonal) {
  auto v = verdicts({{"1", C::A}, {"2", C::B}, {"3", C::C}, {"4", C::D}});
  auto m = build_confusion(v, v);
  for (auto p : kAllCategories) {
    for (auto i : kAllCategories) EXPECT_EQ(m.at(p, i), p == i ? 1u : 0u);
  }
}

TEST(BuildConfusionTest, PerfectModelFillsRowA) {
  auto in = verdicts({{"1", C::A}, {"2", C::B}, {"3", C::C}, {"4", C::D}});
  auto pred = verdicts({{"1", C::A}, {"2", C::A}, {"3", C::A}, {"4", C::A}});
  auto m = build_confusion(in, pred);
  EXPECT_EQ(m.row_total(C::A), 4u);
  for (auto i : kAllCategories) EXPECT_EQ(m.at(C::A, i), 1u);
}

TEST(BuildConfusionTest, PairsByIdNotPosition) {
  auto in = verdicts({{"1", C::B}, {"2", C::C}});
  auto pred = verdicts({{"2", C::A}, {"1", C::D}});
  auto m = build_confusion(in, pred);
  EXPECT_EQ(m.transition(C::B, C::D), 1u);
  EXPECT_EQ(m.transition(C::C, C::A), 1u);
}

TEST(BuildConfusionTest, IdMismatchIsAnError) {
  auto in = verdicts({{"1", C::A}, {"2", C::B}});
  auto pred = verdicts({{"1", C::A}, {"3", C::B}});
  try {
    build_confusion(in, pred);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find('2'), std::string::npos);
    EXPECT_NE(msg.find('3'), std::string::npos);
  }
  EXPECT_THROW(build_confusion(verdicts({{"1", C::A}, {"1", C::A}}),
                               verdicts({{"1", C::A}})),
               Error);
}

TEST(BuildConfusionTest, EmptyIsZero) {
  EXPECT_EQ(build_confusion({}, {}).grand_total(), 0u);
}

TEST(ShiftCauseTest, NamesRoundTrip) {
  for (auto c : kAllShiftCauses) EXPECT_EQ(parse_shift_cause(to_string(c)), c);
  EXPECT_FALSE(parse_shift_cause("Nope").has_value());
}

// ----------------------------------------------------------- diagnose

CauseSet causes_of(const std::string& input, const std::string& target,
                   const std::string& predicted, const Lexicon& lex) {
  SentenceRecord r{"x", input, target, predicted};
  auto from = categorize(input, target, lex).category;
  auto to = categorize(predicted, target, lex).category;
  return diagnose_shift(r, lex, from, to).causes;
}

TEST(DiagnoseShiftTest, MisspellingReplacedByOffTargetWord) {
  Lexicon lex{"i", "need", "more", "exercise", "motivation"};
  SentenceRecord r{"x", "I need more excercise .", "I need more exercise .",
                   std::string("I need more motivation .")};
  EXPECT_EQ(categorize(r.input, r.target, lex).category, C::C);
  EXPECT_EQ(categorize(*r.predicted, r.target, lex).category, C::B);
  auto d = diagnose_shift(r, lex, C::C, C::B);
  EXPECT_TRUE(d.causes.contains(S::SpellingCorrectedToNonMatching));
  EXPECT_FALSE(d.causes.contains(S::SpellingErrorsCorrected));
  EXPECT_FALSE(d.causes.contains(S::NoChange));
}

TEST(DiagnoseShiftTest, MisspellingReadAsDifferentWord) {
  Lexicon lex{"he", "meet", "meets", "met", "her", "everyday", "yesterday"};
  auto c = causes_of("He meet her evryday .", "He meets her everyday .",
                     "He met her yesterday .", lex);
  EXPECT_TRUE(c.contains(S::SpellingCorrectedToNonMatching));
  EXPECT_TRUE(c.contains(S::CorrectWordAltered));
}

TEST(DiagnoseShiftTest, UnchangedPredictionIsOnlyNoChange) {
  auto lex = category_examples_fixture().lexicon();
  SentenceRecord r{"x", "Thess are car.", "These are cars.",
                   std::string("Thess  are car.")};
  auto d = diagnose_shift(r, lex, C::D, C::D);
  EXPECT_EQ(d.causes.to_vector(), std::vector<S>{S::NoChange});
}

TEST(DiagnoseShiftTest, SpellingCorrected) {
  auto lex = category_examples_fixture().lexicon();
  auto c = causes_of("These are rars.", "These are cars.", "These are cars.", lex);
  EXPECT_TRUE(c.contains(S::SpellingErrorsCorrected));
  EXPECT_FALSE(c.contains(S::GrammaticalErrorsCorrected));
}

TEST(DiagnoseShiftTest, SpellingIntroduced) {
  auto lex = category_examples_fixture().lexicon();
  auto c = causes_of("These are cars.", "These are cars.", "These are rars.", lex);
  EXPECT_TRUE(c.contains(S::SpellingErrorsIntroduced));
  EXPECT_TRUE(c.contains(S::CorrectWordAltered));
}

TEST(DiagnoseShiftTest, GrammarFixMovesToA) {
  auto lex = category_examples_fixture().lexicon();
  auto c = causes_of("These are car.", "These are cars.", "These are cars.", lex);
  EXPECT_TRUE(c.contains(S::GrammaticalErrorsCorrected));
}

TEST(DiagnoseShiftTest, MissingPredictionThrows) {
  SentenceRecord r{"x", "a", "a", std::nullopt};
  EXPECT_THROW(diagnose_shift(r, Lexicon{"a"}, C::A, C::A), Error);
}

// One perturbation of an already-correct sentence yields exactly its
// structural cause.
TEST(DiagnoseShiftPropertyTest, SinglePerturbations) {
  const std::vector<std::string> vocab = {"alpha", "beta", "gamma", "delta",
                                          "eps",   "zeta", "eta"};
  Lexicon lex{"alpha", "beta", "gamma", "delta", "eps", "zeta", "eta", "novel"};
  testing::SentenceGen gen(vocab, 41);
  for (int i = 0; i < 500; ++i) {
    auto ws = gen.words(2, 7);
    auto base = testing::SentenceGen::join(ws);

    auto appended = ws;
    appended.push_back("novel");
    EXPECT_EQ(causes_of(base, base, testing::SentenceGen::join(appended), lex)
                  .to_vector(),
              std::vector<S>{S::NewWordsIntroduced});

    auto deleted = ws;
    deleted.erase(deleted.begin() + gen.uniform(0, ws.size() - 1));
    auto del = causes_of(base, base, testing::SentenceGen::join(deleted), lex);
    EXPECT_EQ(del.to_vector(), std::vector<S>{S::WordsDeleted}) << base;

    auto k = gen.uniform(0, ws.size() - 2);
    if (ws[k] == ws[k + 1]) continue;
    auto swapped = ws;
    std::swap(swapped[k], swapped[k + 1]);
    EXPECT_EQ(causes_of(base, base, testing::SentenceGen::join(swapped), lex)
                  .to_vector(),
              std::vector<S>{S::SequenceChanged});
  }
}

TEST(DiagnoseShiftPropertyTest, NoChangeIsExclusive) {
  auto lex = category_examples_fixture().lexicon();
  testing::SentenceGen gen({"These", "are", "cars.", "car", "rars"}, 42);
  for (int i = 0; i < 1000; ++i) {
    auto in = gen.sentence(0, 5);
    auto tg = gen.sentence(0, 5);
    auto pred = gen.uniform(0, 1) ? in : gen.sentence(0, 5);
    auto c = causes_of(in, tg, pred, lex);
    EXPECT_FALSE(c.empty() && tokenize(in).surfaces() != tokenize(pred).surfaces());
    EXPECT_EQ(c.contains(S::NoChange),
              tokenize(in).surfaces() == tokenize(pred).surfaces());
    if (c.contains(S::NoChange)) {
      EXPECT_EQ(c.size(), 1u);
    }
  }
}

// ------------------------------------------------------------ reports

TEST(ShiftReportTest, EmptyIsAllZero) {
  auto r = shift_report({});
  for (auto f : kAllCategories) {
    for (auto t : kAllCategories) {
      EXPECT_EQ(r.cell(f, t).total, 0u);
      for (auto c : kAllShiftCauses) EXPECT_EQ(r.cause_count(f, t, c), 0u);
    }
  }
}

TEST(ShiftReportTest, SingleNoChange) {
  ShiftDiagnosis d{"1", C::A, C::A, {}};
  d.causes.insert(S::NoChange);
  auto r = shift_report({d});
  EXPECT_EQ(r.cell(C::A, C::A).total, 1u);
  EXPECT_EQ(r.cause_count(C::A, C::A, S::NoChange), 1u);
  EXPECT_EQ(r.cell(C::A, C::B).total, 0u);
}

TEST(ShiftReportTest, PerfectPredictionsLandInA) {
  auto f = category_examples_fixture();
  auto lex = f.lexicon();
  for (auto& rec : f.corpus.records) rec.predicted = rec.target;
  auto in = categorize_corpus(f.corpus, lex, CompareField::Input);
  auto pred = categorize_corpus(f.corpus, lex, CompareField::Predicted);
  auto diagnoses = diagnose_corpus(f.corpus, lex, in, pred);
  auto r = shift_report(diagnoses);
  for (auto from : kAllCategories) {
    EXPECT_EQ(r.cell(from, C::A).total, 1u);
    for (auto to : {C::B, C::C, C::D}) EXPECT_EQ(r.cell(from, to).total, 0u);
  }
  EXPECT_EQ(r.cause_count(C::A, C::A, S::NoChange), 1u);
  EXPECT_EQ(r.cause_count(C::C, C::A, S::SpellingErrorsCorrected), 1u);
  EXPECT_EQ(r.cause_count(C::B, C::A, S::GrammaticalErrorsCorrected), 1u);
  EXPECT_EQ(r.cause_count(C::D, C::A, S::GrammaticalErrorsCorrected), 1u);
}

TEST(ShiftReportTest, CellTotalsMatchConfusion) {
  auto lex = category_examples_fixture().lexicon();
  testing::SentenceGen gen({"These", "are", "cars.", "car.", "rars.", "Thess"}, 43);
  Corpus corpus;
  for (int i = 0; i < 3000; ++i) {
    corpus.records.push_back({std::to_string(i), gen.sentence(0, 4),
                              gen.sentence(1, 4), gen.sentence(0, 4)});
  }
  auto in = categorize_corpus(corpus, lex, CompareField::Input, 4);
  auto pred = categorize_corpus(corpus, lex, CompareField::Predicted, 4);
  auto m = build_confusion(in, pred);
  auto r = shift_report(diagnose_corpus(corpus, lex, in, pred, 4));
  EXPECT_EQ(m.grand_total(), corpus.size());
  for (auto f : kAllCategories) {
    for (auto t : kAllCategories) EXPECT_EQ(r.cell(f, t).total, m.transition(f, t));
  }
  EXPECT_EQ(r, shift_report(diagnose_corpus(corpus, lex, in, pred, 1)));
}

TEST(CrossModuleTest, PredictingTheTargetIsCatA) {
  auto lex = category_examples_fixture().lexicon();
  testing::SentenceGen gen({"These", "are", "cars.", "car.", "rars.", "Thess"}, 44);
  for (int i = 0; i < 1000; ++i) {
    auto tg = gen.sentence(0, 5);
    EXPECT_EQ(categorize(tg, tg, lex).category, C::A);
  }
}

}  // namespace
}  // namespace errcat
