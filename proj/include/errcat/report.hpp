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

// Serialization of analysis results. Every renderer is a pure function of
// its input: JSON keys are sorted, percentages carry one decimal, lines end
// in "\n".

#ifndef ERRCAT_REPORT_HPP
#define ERRCAT_REPORT_HPP

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "errcat/categorizer.hpp"
#include "errcat/category.hpp"
#include "errcat/error.hpp"
#include "errcat/metrics.hpp"
#include "errcat/shift.hpp"

namespace errcat {

enum class ReportFormat { Json, Csv, Text };

inline std::optional<ReportFormat> parse_report_format(std::string_view s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "text") return ReportFormat::Text;
  return std::nullopt;
}

struct CategorizeReport {
  std::vector<RecordVerdict> verdicts;
  CategoryDistribution distribution;
};

struct EvaluateReport {
  ConfusionMatrix matrix;
  CorrectionMetrics metrics;
  std::array<Fraction, kCategoryCount> fully_corrected{};
  CategoryDistribution input_distribution;
  CategoryDistribution predicted_distribution;
};

struct DiagnoseReport {
  std::vector<ShiftDiagnosis> diagnoses;
  ShiftReport shifts;
};

// ---------------------------------------------------------------- JSON

inline std::string percent_string(const Fraction& f) {
  auto t = f.tenths();
  if (!t) return "null";
  return std::to_string(*t / 10) + "." + std::to_string(*t % 10);
}

inline nlohmann::json to_json(const Fraction& f) {
  nlohmann::json j = {{"num", f.num}, {"den", f.den}};
  if (auto p = f.percent()) {
    j["pct"] = *p;
  } else {
    j["pct"] = nullptr;
  }
  return j;
}

inline nlohmann::json to_json(const RecordVerdict& rv) {
  const auto& v = rv.verdict;
  nlohmann::json j = {{"id", rv.id},
                      {"category", std::string(to_string(v.category))},
                      {"mismatched", v.mismatched_count},
                      {"lexicon_hits", v.lexicon_hits}};
  if (v.replacement_matched) {
    j["replacement_matched"] = *v.replacement_matched;
  } else {
    j["replacement_matched"] = nullptr;
  }
  return j;
}

inline nlohmann::json to_json(const CategoryDistribution& d) {
  nlohmann::json counts = nlohmann::json::object();
  nlohmann::json fractions = nlohmann::json::object();
  for (auto c : kAllCategories) {
    std::string key(to_string(c));
    counts[key] = d.counts[index_of(c)];
    auto pct = d.fraction(c).percent();
    fractions[key] = pct ? nlohmann::json(*pct) : nlohmann::json(nullptr);
  }
  return {{"counts", counts}, {"fractions", fractions}, {"total", d.total()}};
}

inline nlohmann::json to_json(const ConfusionMatrix& m) {
  nlohmann::json counts = nlohmann::json::array();
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json cols = nlohmann::json::array();
  for (auto p : kAllCategories) {
    nlohmann::json line = nlohmann::json::array();
    for (auto i : kAllCategories) line.push_back(m.at(p, i));
    counts.push_back(line);
    rows.push_back(m.row_total(p));
    cols.push_back(m.col_total(p));
  }
  return {{"rows", "predicted"},       {"cols", "input"},
          {"order", {"A", "B", "C", "D"}}, {"counts", counts},
          {"col_totals", cols},        {"row_totals", rows},
          {"total", m.grand_total()}};
}

inline nlohmann::json to_json(const CorrectionMetrics& cm) {
  return {{"spelling", to_json(cm.spelling)},
          {"grammatical", to_json(cm.grammatical)},
          {"mixed", to_json(cm.mixed)}};
}

inline nlohmann::json to_json(const ShiftDiagnosis& d) {
  nlohmann::json causes = nlohmann::json::array();
  for (auto c : d.causes.to_vector()) causes.push_back(std::string(to_string(c)));
  return {{"id", d.id},
          {"from", std::string(to_string(d.from_category))},
          {"to", std::string(to_string(d.to_category))},
          {"causes", causes}};
}

inline nlohmann::json to_json(const ShiftReport& r) {
  nlohmann::json cells = nlohmann::json::array();
  for (auto from : kAllCategories) {
    for (auto to : kAllCategories) {
      nlohmann::json causes = nlohmann::json::object();
      for (auto c : kAllShiftCauses) {
        causes[std::string(to_string(c))] = r.cause_count(from, to, c);
      }
      cells.push_back({{"from", std::string(to_string(from))},
                       {"to", std::string(to_string(to))},
                       {"total", r.cell(from, to).total},
                       {"causes", causes}});
    }
  }
  return {{"cells", cells}};
}

inline nlohmann::json to_json(const CategorizeReport& r) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  return {{"distribution", to_json(r.distribution)}, {"verdicts", verdicts}};
}

inline nlohmann::json to_json(const EvaluateReport& r) {
  nlohmann::json fully = nlohmann::json::object();
  for (auto c : kAllCategories) {
    fully[std::string(to_string(c))] = to_json(r.fully_corrected[index_of(c)]);
  }
  return {{"confusion", to_json(r.matrix)},
          {"metrics", to_json(r.metrics)},
          {"fully_corrected", fully},
          {"input_distribution", to_json(r.input_distribution)},
          {"predicted_distribution", to_json(r.predicted_distribution)}};
}

inline nlohmann::json to_json(const DiagnoseReport& r) {
  nlohmann::json diagnoses = nlohmann::json::array();
  for (const auto& d : r.diagnoses) diagnoses.push_back(to_json(d));
  return {{"diagnoses", diagnoses}, {"shift_report", to_json(r.shifts)}};
}

// ----------------------------------------------------------------- CSV

namespace report_detail {

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

inline std::string optional_bool(const std::optional<bool>& b) {
  if (!b) return "null";
  return *b ? "true" : "false";
}

inline void fraction_csv(std::ostream& os, std::string_view label,
                         const Fraction& f) {
  os << label << ',' << f.num << ',' << f.den << ',' << percent_string(f)
     << '\n';
}

inline void distribution_csv(std::ostream& os, std::string_view name,
                             const CategoryDistribution& d) {
  os << "distribution,category,count,pct\n";
  for (auto c : kAllCategories) {
    os << name << ',' << to_string(c) << ',' << d.counts[index_of(c)] << ','
       << percent_string(d.fraction(c)) << '\n';
  }
}

inline std::string causes_joined(const CauseSet& causes,
                                 std::string_view sep) {
  std::string out;
  for (auto c : causes.to_vector()) {
    if (!out.empty()) out += sep;
    out += to_string(c);
  }
  return out;
}

}  // namespace report_detail

/// Header, one row per predicted category, then the column-total row.
inline void write_csv(std::ostream& os, const ConfusionMatrix& m) {
  os << "predicted,A,B,C,D,total\n";
  for (auto p : kAllCategories) {
    os << to_string(p);
    for (auto i : kAllCategories) os << ',' << m.at(p, i);
    os << ',' << m.row_total(p) << '\n';
  }
  os << "total";
  for (auto i : kAllCategories) os << ',' << m.col_total(i);
  os << ',' << m.grand_total() << '\n';
}

inline void write_csv(std::ostream& os, const CategorizeReport& r) {
  using namespace report_detail;
  os << "id,category,mismatched,lexicon_hits,replacement_matched\n";
  for (const auto& rv : r.verdicts) {
    const auto& v = rv.verdict;
    os << csv_field(rv.id) << ',' << to_string(v.category) << ','
       << v.mismatched_count << ',' << v.lexicon_hits << ','
       << optional_bool(v.replacement_matched) << '\n';
  }
  os << '\n';
  distribution_csv(os, "input", r.distribution);
}

inline void write_csv(std::ostream& os, const EvaluateReport& r) {
  using namespace report_detail;
  write_csv(os, r.matrix);
  os << "\nmetric,num,den,pct\n";
  fraction_csv(os, "spelling", r.metrics.spelling);
  fraction_csv(os, "grammatical", r.metrics.grammatical);
  fraction_csv(os, "mixed", r.metrics.mixed);
  for (auto c : kAllCategories) {
    fraction_csv(os, "fully_corrected_" + std::string(to_string(c)),
                 r.fully_corrected[index_of(c)]);
  }
  os << '\n';
  distribution_csv(os, "input", r.input_distribution);
  os << '\n';
  distribution_csv(os, "predicted", r.predicted_distribution);
}

inline void write_csv(std::ostream& os, const DiagnoseReport& r) {
  using namespace report_detail;
  os << "id,from,to,causes\n";
  for (const auto& d : r.diagnoses) {
    os << csv_field(d.id) << ',' << to_string(d.from_category) << ','
       << to_string(d.to_category) << ',' << causes_joined(d.causes, ";")
       << '\n';
  }
  os << "\nfrom,to,total";
  for (auto c : kAllShiftCauses) os << ',' << to_string(c);
  os << '\n';
  for (auto from : kAllCategories) {
    for (auto to : kAllCategories) {
      os << to_string(from) << ',' << to_string(to) << ','
         << r.shifts.cell(from, to).total;
      for (auto c : kAllShiftCauses) {
        os << ',' << r.shifts.cause_count(from, to, c);
      }
      os << '\n';
    }
  }
}

// ---------------------------------------------------------------- text

namespace report_detail {

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

inline std::string pct_text(const Fraction& f) {
  if (!f.defined()) return "undefined";
  return std::to_string(f.num) + "/" + std::to_string(f.den) + " = " +
         percent_string(f) + "%";
}

inline void distribution_text(std::ostream& os, std::string_view title,
                              const CategoryDistribution& d) {
  os << title << " (" << d.total() << " records)\n";
  for (auto c : kAllCategories) {
    auto f = d.fraction(c);
    os << "  Cat " << to_string(c) << pad(std::to_string(f.num), 10) << "  "
       << (f.defined() ? percent_string(f) + "%" : "undefined") << '\n';
  }
}

}  // namespace report_detail

inline void write_text(std::ostream& os, const ConfusionMatrix& m) {
  using report_detail::pad;
  os << "Confusion matrix (rows: predicted, columns: input)\n";
  os << pad("", 10);
  for (auto i : kAllCategories) os << pad("Cat " + std::string(to_string(i)), 10);
  os << pad("Total", 10) << '\n';
  for (auto p : kAllCategories) {
    os << pad("Cat " + std::string(to_string(p)), 10);
    for (auto i : kAllCategories) os << pad(std::to_string(m.at(p, i)), 10);
    os << pad(std::to_string(m.row_total(p)), 10) << '\n';
  }
  os << pad("Total", 10);
  for (auto i : kAllCategories) os << pad(std::to_string(m.col_total(i)), 10);
  os << pad(std::to_string(m.grand_total()), 10) << '\n';
}

inline void write_text(std::ostream& os, const CategorizeReport& r) {
  using report_detail::pad;
  report_detail::distribution_text(os, "Category distribution",
                                   r.distribution);
  os << "\nPer-record verdicts\n";
  for (const auto& rv : r.verdicts) {
    const auto& v = rv.verdict;
    os << "  " << rv.id << "  Cat " << to_string(v.category)
       << "  mismatched=" << v.mismatched_count
       << " lexicon_hits=" << v.lexicon_hits
       << " replacement=" << report_detail::optional_bool(v.replacement_matched)
       << '\n';
  }
}

inline void write_text(std::ostream& os, const EvaluateReport& r) {
  using report_detail::pct_text;
  write_text(os, r.matrix);
  os << "\nCorrection percentages\n";
  os << "  spelling     " << pct_text(r.metrics.spelling) << '\n';
  os << "  grammatical  " << pct_text(r.metrics.grammatical) << '\n';
  os << "  mixed        " << pct_text(r.metrics.mixed) << '\n';
  os << "\nFully corrected (predicted Cat A)\n";
  for (auto c : kAllCategories) {
    os << "  Cat " << to_string(c) << "        "
       << pct_text(r.fully_corrected[index_of(c)]) << '\n';
  }
  os << '\n';
  report_detail::distribution_text(os, "Input distribution",
                                   r.input_distribution);
  os << '\n';
  report_detail::distribution_text(os, "Predicted distribution",
                                   r.predicted_distribution);
}

inline void write_text(std::ostream& os, const DiagnoseReport& r) {
  os << "Shift causes\n";
  for (auto from : kAllCategories) {
    for (auto to : kAllCategories) {
      const auto& cell = r.shifts.cell(from, to);
      if (cell.total == 0) continue;
      os << "  Cat " << to_string(from) << " -> Cat " << to_string(to) << "  ("
         << cell.total << " records)\n";
      for (auto c : kAllShiftCauses) {
        auto n = r.shifts.cause_count(from, to, c);
        if (n != 0) os << "    " << to_string(c) << ": " << n << '\n';
      }
    }
  }
  os << "\nPer-record diagnoses\n";
  for (const auto& d : r.diagnoses) {
    os << "  " << d.id << "  " << to_string(d.from_category) << " -> "
       << to_string(d.to_category) << "  "
       << report_detail::causes_joined(d.causes, ", ") << '\n';
  }
}

// --------------------------------------------------------------- output

template <typename Report>
std::string render(const Report& report, ReportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::Json:
      os << to_json(report).dump(2) << '\n';
      break;
    case ReportFormat::Csv:
      write_csv(os, report);
      break;
    case ReportFormat::Text:
      write_text(os, report);
      break;
  }
  return os.str();
}

/// Writes `content` to `path` byte for byte. An empty path or "-" means
/// standard output.
inline void write_output(const std::string& content, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << content << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write output file: " + path);
  out << content;
  out.close();
  if (!out) throw Error("error while writing output file: " + path);
}

template <typename Report>
void write_report(const Report& report, const std::string& path,
                  ReportFormat format) {
  write_output(render(report, format), path);
}

}  // namespace errcat

#endif  // ERRCAT_REPORT_HPP
