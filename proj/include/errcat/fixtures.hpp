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

// Test corpora built from published example sentences and published
// confusion-matrix counts. Each FixtureSet carries its expectations and the
// lexicon they were derived under.

#ifndef ERRCAT_FIXTURES_HPP
#define ERRCAT_FIXTURES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "errcat/categorizer.hpp"
#include "errcat/category.hpp"
#include "errcat/corpus.hpp"
#include "errcat/error.hpp"
#include "errcat/lexicon.hpp"
#include "errcat/report.hpp"
#include "errcat/shift.hpp"

namespace errcat {

/// Where an expected value comes from.
enum class Provenance {
  Published,     // printed in the source publication
  HandDerived,   // obtained by hand-running the decision procedure
  ByConstruction,
};

constexpr std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Published:
      return "published";
    case Provenance::HandDerived:
      return "hand-derived";
    case Provenance::ByConstruction:
      return "by-construction";
  }
  return "";
}

struct Shift {
  ErrorCategory from;
  ErrorCategory to;

  friend bool operator==(const Shift&, const Shift&) = default;
};

struct RecordExpectation {
  std::string id;
  std::optional<ErrorCategory> input_category;
  std::optional<ErrorCategory> predicted_category;
  Provenance provenance = Provenance::HandDerived;
  /// Shift the publication reports for this record, when it reports one.
  std::optional<Shift> published_shift;
  /// Set when the printed sentences cannot yield the published shift under
  /// the decision procedure (spacing quirks, flagged targets).
  std::string authors_note;
};

struct FixtureSet {
  std::string name;
  Corpus corpus;
  std::vector<std::string> lexicon_words;
  std::vector<RecordExpectation> expected;
  std::optional<ConfusionMatrix> expected_matrix;

  Lexicon lexicon() const {
    return Lexicon::from_words(lexicon_words, name + ".words");
  }
};

// ------------------------------------------------------------ examples

/// The four canonical example pairs, one per category, under the lexicon
/// {these, are, cars, car}.
inline FixtureSet category_examples_fixture() {
  FixtureSet f;
  f.name = "category_examples";
  f.corpus.source_path = "category_examples.jsonl";
  f.lexicon_words = {"these", "are", "cars", "car"};
  const std::string target = "These are cars.";
  const std::array<std::pair<const char*, ErrorCategory>, 4> rows = {{
      {"These are cars.", ErrorCategory::A},
      {"These are car.", ErrorCategory::B},
      {"These are rars.", ErrorCategory::C},
      {"Thess are car.", ErrorCategory::D},
  }};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto id = std::to_string(i + 1);
    f.corpus.records.push_back({id, rows[i].first, target, std::nullopt});
    f.expected.push_back(
        {id, rows[i].second, std::nullopt, Provenance::Published, {}, {}});
  }
  return f;
}

// ------------------------------------------------------------ matrices

/// Published confusion counts, rows = predicted, columns = input.
inline ConfusionMatrix published_bart_matrix() {
  return ConfusionMatrix({{{10975, 1229, 123, 54},
                           {13, 11169, 66, 449},
                           {0, 2, 324, 24},
                           {0, 26, 22, 1262}}});
}

inline ConfusionMatrix published_marian_matrix() {
  return ConfusionMatrix({{{10956, 669, 93, 26},
                           {32, 11617, 24, 390},
                           {0, 6, 363, 18},
                           {0, 134, 55, 1355}}});
}

namespace fixture_detail {

struct Template {
  std::string_view target;
  std::array<std::string_view, kCategoryCount> by_category;
};

// Each template supplies, for one target, a sentence that falls in each
// category under the template lexicon.
inline constexpr std::array<Template, 3> kTemplates = {{
    {"These are cars.",
     {"These are cars.", "These are car.", "These are rars.",
      "Thess are car."}},
    {"I want to talk to her",
     {"I want to talk to her", "I want to talk with her",
      "I wnat to talk to her", "I wnat to talk with her"}},
    {"Good evening!",
     {"Good evening!", "evening! Good", "Good eveningng!",
      "Gooood evening! now"}},
}};

inline std::vector<std::string> template_lexicon() {
  return {"these", "are", "cars", "car", "i",    "want",
          "to",    "talk", "her", "with", "good", "evening", "now"};
}

}  // namespace fixture_detail

/// Synthetic corpus whose (input category, predicted category) pairs
/// realize `counts` exactly. Records cycle through a few sentence templates;
/// every template pair is checked against the categorizer first and a
/// disagreement aborts construction.
inline FixtureSet matrix_fixture(const std::string& name,
                                 const ConfusionMatrix& counts) {
  using fixture_detail::kTemplates;
  FixtureSet f;
  f.name = name;
  f.corpus.source_path = name + ".jsonl";
  f.lexicon_words = fixture_detail::template_lexicon();
  f.expected_matrix = counts;
  const auto lexicon = f.lexicon();

  for (std::size_t t = 0; t < kTemplates.size(); ++t) {
    for (auto c : kAllCategories) {
      auto got = categorize(kTemplates[t].by_category[index_of(c)],
                            kTemplates[t].target, lexicon)
                     .category;
      if (got != c) {
        throw Error("matrix fixture template " + std::to_string(t) +
                    " sentence for Cat " + std::string(to_string(c)) +
                    " categorizes as Cat " + std::string(to_string(got)));
      }
    }
  }

  f.corpus.records.reserve(counts.grand_total());
  for (auto from : kAllCategories) {
    for (auto to : kAllCategories) {
      const auto n = counts.transition(from, to);
      for (std::uint64_t k = 0; k < n; ++k) {
        const auto& tpl = kTemplates[k % kTemplates.size()];
        std::string id = name + "-" + std::string(to_string(from)) +
                         std::string(to_string(to)) + "-" +
                         std::to_string(k + 1);
        f.corpus.records.push_back(
            {id, std::string(tpl.by_category[index_of(from)]),
             std::string(tpl.target),
             std::string(tpl.by_category[index_of(to)])});
        f.expected.push_back(
            {id, from, to, Provenance::ByConstruction, Shift{from, to}, {}});
      }
    }
  }
  return f;
}

inline FixtureSet bart_matrix_fixture() {
  return matrix_fixture("bart_matrix", published_bart_matrix());
}

inline FixtureSet marian_matrix_fixture() {
  return matrix_fixture("marian_matrix", published_marian_matrix());
}

// ---------------------------------------------------------- qualitative

struct QualitativeExample {
  std::string_view id;  // "<from><to>-<n>": the shift group and example
  std::string_view target;
  std::string_view input;
  std::string_view bart;
  std::string_view marian;
  ErrorCategory input_category;
  ErrorCategory bart_category;
  ErrorCategory marian_category;
  std::optional<Shift> bart_published;
  std::optional<Shift> marian_published;
  std::string_view authors_note;
};

namespace fixture_detail {

using C = ErrorCategory;
inline constexpr std::optional<Shift> kNoShift = std::nullopt;

// Sentences are verbatim, including their irregular spacing. Categories are
// hand-derived under qualitative_lexicon_words().
inline const std::vector<QualitativeExample>& qualitative_examples() {
  static const std::vector<QualitativeExample> examples = {
      {"AB-1",
       "Because it smells artistic.",
       "Because it smells artistic.",
       "Because it smell like art.",
       "Because it smell art.",
       C::A, C::B, C::B, Shift{C::A, C::B}, Shift{C::A, C::B},
       ""},
      {"AB-2",
       "Enjoy this rather short (1' 40'') : It is the impressive story of a brave teenager rescuing dolphins.",
       "Enjoy this rather short (1' 40'') : It is the impressive story of a brave teenager rescuing dolphins.",
       "Enjoy this rather short (1'40'') : It is the impressive story of a brave teenager rescuing dolphins.",
       "Enjoy this rather short (1'40'') : It is the impressive story of a brave teenager rescuing dolphins.",
       C::A, C::B, C::B, Shift{C::A, C::B}, Shift{C::A, C::B},
       ""},
      {"AB-3",
       "The way of learning: reading vs. experience vs. experience of someone",
       "The way of learning : reading vs. experience vs. experience of someone",
       "The way of learning : reading, experience vs. experience of someone",
       "The way of learning : reading vs. experience vs. experience of someone",
       C::B, C::B, C::B, Shift{C::A, C::B}, kNoShift,
       "the target has no space before the colon and the input does, so the input is not an exact match"},
      {"AB-4",
       "I listened to an audio book `` Doctor WHO ``",
       "I listened to an audio book `` Doctor WHO ``",
       "I listened to an audio book `` Doctor WHO ``",
       "I listened to an audio book Doctor WHO",
       C::A, C::A, C::B, kNoShift, Shift{C::A, C::B},
       ""},
      {"BA-1",
       "I enjoyed it .",
       "I enjoyed.",
       "I enjoyed it .",
       "I enjoyed it .",
       C::B, C::A, C::A, Shift{C::B, C::A}, Shift{C::B, C::A},
       ""},
      {"BA-2",
       "About 30 people joined the same company together.",
       "About 30 people joined same company together.",
       "About 30 people joined the same company together.",
       "About 30 people joined the same company together.",
       C::B, C::A, C::A, Shift{C::B, C::A}, Shift{C::B, C::A},
       ""},
      {"BA-3",
       "So now I have been forcing myself to do it.",
       "So now I had been forcing myself to do it.",
       "So now I have been forcing myself to do it.",
       "So now I had been forcing myself to do it.",
       C::B, C::A, C::B, Shift{C::B, C::A}, kNoShift,
       ""},
      {"BA-4",
       "Most people think that Poland is a backward country.",
       "Most of people think that Poland is a backward country.",
       "Most of people think that Poland is a backward country.",
       "Most people think that Poland is a backward country.",
       C::B, C::B, C::A, kNoShift, Shift{C::B, C::A},
       ""},
      {"BC-1",
       "I think it's difficult for me to work as an orthodontist .",
       "I think it's difficult for me to work as a orthodontist .",
       "I think it's difficult for me to work as an orthodist .",
       "I think it's difficult for me to work as a orthodontist .",
       C::B, C::C, C::B, Shift{C::B, C::C}, kNoShift,
       ""},
      {"BC-2",
       "Their music videos are so COOL and they are very imaginative .",
       "Their music video are so COOL and they are very imagination .",
       "Their music videos are so COOL and they are very imaginationful .",
       "Their music video are so COOL and they are very imaginated .",
       C::B, C::C, C::D, Shift{C::B, C::C}, kNoShift,
       ""},
      {"BC-3",
       "I would like to visit the USA.",
       "I would like to visiting USA.",
       "I would like to visit the USA.",
       "I would like to visite the USA.",
       C::B, C::A, C::C, kNoShift, Shift{C::B, C::C},
       ""},
      {"BC-4",
       "It was about the Netherlands.",
       "It broadcast about the Netherlands.",
       "It was broadcasted in the Netherlands.",
       "It broadcasted about the Netherlands.",
       C::B, C::D, C::C, kNoShift, kNoShift,
       "the commentary leaves open whether either prediction is a shift"},
      {"BD-1",
       "The day before yesterday, my old classmates and I went to a sushi bar at ShijoKarasuma.",
       "The day before yesterday, my old classmates and I went sushi bar at ShijoKarasuma.",
       "The day before yesterday, my old classmates and I went to a sushi bar at Shijo Karasuma..",
       "The day before yesterday, my old classmates and I went sushi bar at Shijo",
       C::B, C::D, C::D, Shift{C::B, C::D}, Shift{C::B, C::D},
       ""},
      {"BD-2",
       "Details are in the following site.",
       "Detail is in following site.",
       "TheDetail is in the following site.",
       "in the following website.",
       C::B, C::D, C::B, Shift{C::B, C::D}, kNoShift,
       ""},
      {"BD-3",
       "The Boeing 787, a new aircraft manufactured by Boeing, came to Japan today.",
       "Boeing 787, a new air craft manufactured by Boeing, come to Japan today.",
       "Boeing 787, a new air craft manufactured by Boeing, came to Japan today.",
       "teaching 787, a new air craft manufactured byborg, come to Japan today.",
       C::B, C::B, C::D, kNoShift, Shift{C::B, C::D},
       ""},
      {"BD-4",
       "Has anyone taken the IBT toefl before?",
       "Is anyone take the IBT toefl before?",
       "Is anyone take the IBT toefl before?",
       "Is anyone take the VIT toefl before?",
       C::B, C::B, C::D, kNoShift, Shift{C::B, C::D},
       ""},
      {"CA-1",
       "Good evening!",
       "Good eveningng!",
       "Good evening!",
       "Good evening!",
       C::C, C::A, C::A, Shift{C::C, C::A}, Shift{C::C, C::A},
       ""},
      {"CA-2",
       "I want to talk to her",
       "I wnat to talk to her",
       "I want to talk to her",
       "I want to talk to her",
       C::C, C::A, C::A, Shift{C::C, C::A}, Shift{C::C, C::A},
       ""},
      {"CA-3",
       "So, I will study hard tomorrow.",
       "So, I will study hard tommorow.",
       "So, I will study hard tomorrow.",
       "So, I will study hard tommorow.",
       C::C, C::A, C::C, Shift{C::C, C::A}, kNoShift,
       ""},
      {"CA-4",
       "Our daily life is getting useful day by day.",
       "Our daily life is getting usuful day by day.",
       "Our daily life is getting usuful day by day.",
       "Our daily life is getting useful day by day.",
       C::C, C::C, C::A, kNoShift, Shift{C::C, C::A},
       ""},
      {"CB-1",
       "Today, it rained for a long time.",
       "Today, it raind for a long time.",
       "Today, it's been raining for a long time.",
       "Today, it rains for a long time.",
       C::C, C::B, C::B, Shift{C::C, C::B}, Shift{C::C, C::B},
       ""},
      {"CB-2",
       "I use it for studying everyday.",
       "I use it for studying everydays .",
       "I use it for studying every day .",
       "I use it for studying every day .",
       C::D, C::B, C::B, Shift{C::C, C::B}, Shift{C::C, C::B},
       "the target attaches the full stop ('everyday.') while the input detaches it ('everydays .'); the lone '.' is a valid mismatched token, so the input is mixed"},
      {"CB-3",
       "I need more exercise .",
       "I need more excercise .",
       "I need more motivation .",
       "I need more excercise .",
       C::C, C::B, C::C, Shift{C::C, C::B}, kNoShift,
       ""},
      {"CB-4",
       "The second one is the Chinese Pavilion in the EXPO.",
       "The sennd one is the Chinese Pavilion in the EXPO.",
       "The second one is the Chinese Pavilion in the EXPO.",
       "The send one is the Chinese Pavilion in the EXPO.",
       C::C, C::A, C::B, kNoShift, Shift{C::C, C::B},
       ""},
      {"CD-1",
       "I sometimes felt sea sickness.",
       "I sometimes felt sea sichness.",
       "I sometimes felt the sea sichness.",
       "I sometimes felt seakelness.",
       C::C, C::D, C::D, Shift{C::C, C::D}, kNoShift,
       ""},
      {"CD-2",
       "Fortunately everyone was on time!",
       "Fortunately eveyone comes on time!",
       "Fortunately eveyone came on time!",
       "Fortunately eveyone came on time!",
       C::D, C::D, C::D, Shift{C::C, C::D}, Shift{C::C, C::D},
       "the target is itself flagged as inaccurate; 'comes' is a valid word that the target lacks, so the input is mixed"},
      {"CD-3",
       "it's even offensive in Japan.",
       "it's even offence in Japan.",
       "it's even an offence in Japan.",
       "it's even offence in Japan.",
       C::C, C::D, C::C, Shift{C::C, C::D}, kNoShift,
       ""},
      {"CD-4",
       "But I'll try to keep writing journals regularly from now on.",
       "But I'll try to keep writng journal regularly from now on.",
       "But I'll try to keep writing journal regularly from now on.",
       "But I'll try to keep writing a journal regularly from now on.",
       C::D, C::B, C::B, Shift{C::C, C::D}, Shift{C::C, C::D},
       "'journal' (target 'journals') is a valid word next to the non-word 'writng', so the input is mixed"},
      {"DA-1",
       "So younger people in Japan should have more interest in these problems",
       "So younger peopole in Japan should have more interest in these problem",
       "So younger people in Japan should have more interest in these problems",
       "So younger people in Japan should have more interest in these problems",
       C::D, C::A, C::A, Shift{C::D, C::A}, Shift{C::D, C::A},
       ""},
      {"DA-2",
       "Of course I should speak in English there!",
       "Ofcourse I should speak in English there!",
       "Of course I should speak in English there!",
       "Of course I should speak in English there!",
       C::D, C::A, C::A, Shift{C::D, C::A}, Shift{C::D, C::A},
       ""},
      {"DA-3",
       "I will visit the USA this winter!",
       "I will visite USA in this winter!",
       "I will visit the USA this winter!",
       "I will visite the USA in this winter!",
       C::D, C::A, C::D, Shift{C::D, C::A}, kNoShift,
       ""},
      {"DA-4",
       "The Internet helps us with communicating with foreigners .",
       "The Internet helps us with communicatig with foreigner .",
       "The Internet helps us with communicatig with foreigner .",
       "The Internet helps us with communicating with foreigners .",
       C::D, C::D, C::A, kNoShift, Shift{C::D, C::A},
       ""},
      {"DB-1",
       "He meets her everyday .",
       "He meet her evryday .",
       "He met her yesterday .",
       "He meet her everyday .",
       C::D, C::B, C::B, Shift{C::D, C::B}, Shift{C::D, C::B},
       ""},
      {"DB-2",
       "So I can speak a little French.",
       "So I can speak French a littele .",
       "So I can speak French a little .",
       "So I can speak French a little .",
       C::D, C::B, C::B, Shift{C::D, C::B}, Shift{C::D, C::B},
       ""},
      {"DB-3",
       "Luckily, I've found this website .",
       "Luckly, I find this web .",
       "Luckily, I found this website.",
       "Luckily, I find this website.",
       C::D, C::B, C::B, Shift{C::D, C::B}, Shift{C::D, C::B},
       ""},
      {"DB-4",
       "Today my sister came to see me.",
       "Today my sisiter come to see me.",
       "Today my sisiter came to see me.",
       "Today my sister come to see me.",
       C::D, C::C, C::B, kNoShift, Shift{C::D, C::B},
       ""},
      {"DC-1",
       "I was very surprised .",
       "I was suprised very much.",
       "I was very suprised .",
       "I was very suprised .",
       C::D, C::C, C::C, Shift{C::D, C::C}, Shift{C::D, C::C},
       ""},
      {"DC-2",
       "If you learn Japanese, I will help you.",
       "If you learn Japanese, I help you.",
       "If you learn Japanese, I will help you.",
       "If you learn Japanese, I help you.",
       C::B, C::A, C::B, kNoShift, kNoShift,
       "every input word occurs in the target, so the input carries no non-word; the commentary does not match the printed triple"},
      {"DC-3",
       "Japanese believe that it is a lucky symbol.",
       "Japanese believes that it is a luckey symbol.",
       "Japanese believe that it is a luckey symbol.",
       "Japanese believes that it is a luckey symbol.",
       C::D, C::C, C::D, Shift{C::D, C::C}, kNoShift,
       ""},
      {"DC-4",
       "It will be a nice time.",
       "It will be naice time.",
       "It will be naice time.",
       "It will be a naice time.",
       C::D, C::D, C::C, kNoShift, Shift{C::D, C::C},
       ""},
  };
  return examples;
}

}  // namespace fixture_detail

inline const std::vector<QualitativeExample>& qualitative_examples() {
  return fixture_detail::qualitative_examples();
}

/// Correctly spelled words of the qualitative sentences. Proper nouns a
/// general word list would lack are left out, as are "offence" and
/// "broadcasted", following the American-English convention the published
/// categories imply.
inline std::vector<std::string> qualitative_lexicon_words() {
  return {
      "a", "about", "air", "aircraft", "an", "and", "anyone", "are", "art",
      "artistic", "as", "at", "audio", "backward", "bar", "be", "because",
      "been", "before", "believe", "believes", "boeing", "book", "brave",
      "broadcast", "but", "by", "came", "can", "chinese", "classmates",
      "come", "comes", "communicating", "company", "cool", "country",
      "course", "craft", "daily", "day", "detail", "details", "difficult",
      "do", "doctor", "dolphins", "english", "enjoy", "enjoyed", "even",
      "evening", "every", "everyday", "everyone", "exercise", "experience",
      "expo", "felt", "find", "following", "for", "forcing", "foreigner",
      "foreigners", "fortunately", "found", "french", "from", "getting",
      "good", "had", "hard", "has", "have", "he", "help", "helps", "her", "i",
      "i'll", "i've", "if", "imagination", "imaginative", "impressive", "in",
      "interest", "internet", "is", "it", "it's", "japan", "japanese",
      "joined", "journal", "journals", "keep", "learn", "learning", "life",
      "like", "listened", "little", "long", "luckily", "lucky",
      "manufactured", "me", "meet", "meets", "met", "more", "most",
      "motivation", "much", "music", "my", "myself", "need", "netherlands",
      "new", "nice", "now", "of", "offensive", "old", "on", "one",
      "orthodontist", "our", "pavilion", "people", "poland", "problem",
      "problems", "rained", "raining", "rains", "rather", "reading",
      "regularly", "rescuing", "same", "sea", "second", "see", "send",
      "short", "should", "sickness", "sister", "site", "smell", "smells",
      "so", "someone", "sometimes", "speak", "story", "study", "studying",
      "surprised", "sushi", "symbol", "take", "taken", "talk", "teaching",
      "teenager", "that", "the", "their", "there", "these", "they", "think",
      "this", "time", "to", "today", "together", "tomorrow", "try", "us",
      "usa", "use", "useful", "very", "video", "videos", "visit", "visiting",
      "vs", "want", "was", "way", "web", "website", "went", "who", "will",
      "winter", "with", "work", "would", "writing", "yesterday", "you",
      "younger"};
}

/// Lookup cores in the qualitative sentences that are deliberately not
/// lexicon words.
inline std::vector<std::string> qualitative_nonwords() {
  return {
      "eveningng", "wnat", "tommorow", "usuful", "raind", "everydays",
      "excercise", "sennd", "sichness", "seakelness", "eveyone", "offence",
      "writng", "peopole", "ofcourse", "visite", "communicatig", "evryday",
      "littele", "luckly", "sisiter", "suprised", "luckey", "naice",
      "orthodist", "imaginationful", "imaginated", "broadcasted", "thedetail",
      "byborg", "shijo", "karasuma", "shijokarasuma", "ibt", "toefl", "vit",
      "``"};
}

enum class Model { Bart, Marian };

constexpr std::string_view to_string(Model m) {
  return m == Model::Bart ? "bart" : "marian";
}

/// One corpus per model: input, target and that model's prediction.
inline FixtureSet qualitative_fixture(Model model) {
  FixtureSet f;
  f.name = "qualitative_" + std::string(to_string(model));
  f.corpus.source_path = f.name + ".jsonl";
  f.lexicon_words = qualitative_lexicon_words();
  for (const auto& ex : qualitative_examples()) {
    const bool bart = model == Model::Bart;
    f.corpus.records.push_back({std::string(ex.id), std::string(ex.input),
                                std::string(ex.target),
                                std::string(bart ? ex.bart : ex.marian)});
    f.expected.push_back(
        {std::string(ex.id), ex.input_category,
         bart ? ex.bart_category : ex.marian_category,
         Provenance::HandDerived,
         bart ? ex.bart_published : ex.marian_published,
         std::string(ex.authors_note)});
  }
  return f;
}

// -------------------------------------------------------------- export

inline nlohmann::json manifest_entry(const RecordExpectation& e) {
  auto cat = [](const std::optional<ErrorCategory>& c) {
    return c ? nlohmann::json(std::string(to_string(*c)))
             : nlohmann::json(nullptr);
  };
  nlohmann::json j = {{"id", e.id},
                      {"input_category", cat(e.input_category)},
                      {"predicted_category", cat(e.predicted_category)},
                      {"provenance", std::string(to_string(e.provenance))}};
  if (e.published_shift) {
    j["published_shift"] = std::string(to_string(e.published_shift->from)) +
                           "->" + std::string(to_string(e.published_shift->to));
  } else {
    j["published_shift"] = nullptr;
  }
  if (!e.authors_note.empty()) j["authors_note"] = e.authors_note;
  return j;
}

/// Manifest describing a fixture's expectations and their provenance.
inline nlohmann::json fixture_manifest(const FixtureSet& f) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& e : f.expected) records.push_back(manifest_entry(e));
  nlohmann::json j = {{"name", f.name},
                      {"corpus", f.name + ".jsonl"},
                      {"lexicon", f.name + ".words"},
                      {"records", records}};
  if (f.expected_matrix) {
    j["expected_matrix"] = to_json(*f.expected_matrix);
    j["expected_matrix_provenance"] =
        std::string(to_string(Provenance::Published));
  }
  return j;
}

}  // namespace errcat

#endif  // ERRCAT_FIXTURES_HPP
