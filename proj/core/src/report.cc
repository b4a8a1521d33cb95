// Copyright 2026 The mlsum Authors.
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
#include "mlsum/report.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "mlsum/error.h"

namespace mlsum {

namespace {

std::vector<RougeReport> sorted_with_mean(std::span<const RougeReport> reports) {
  std::vector<RougeReport> rows(reports.begin(), reports.end());
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& x, const auto& y) { return x.doc_id < y.doc_id; });
  if (!rows.empty()) rows.push_back(mean_report(reports));
  return rows;
}

std::vector<RougeReport> assemble(std::map<std::string, std::array<bool, 4>>& seen,
                                  std::map<std::string, RougeReport>& by_doc,
                                  const std::string& source) {
  std::vector<RougeReport> out;
  for (auto& [doc, report] : by_doc) {
    const auto& flags = seen[doc];
    if (!std::all_of(flags.begin(), flags.end(), [](bool b) { return b; })) {
      throw ValidationError(source + ": document '" + doc + "' lacks some ROUGE metrics");
    }
    out.push_back(std::move(report));
  }
  return out;
}

void add_row(std::map<std::string, std::array<bool, 4>>& seen,
             std::map<std::string, RougeReport>& by_doc, const std::string& doc_id,
             const std::string& metric_name, RougeScore score, const std::string& source,
             std::size_t line) {
  if (doc_id == kMeanDocId) return;
  auto metric = parse_rouge_metric(metric_name);
  if (!metric) throw ParseError(source, line, "unknown metric '" + metric_name + "'");
  auto& report = by_doc[doc_id];
  report.doc_id = doc_id;
  report[*metric] = score;
  seen[doc_id][static_cast<std::size_t>(*metric)] = true;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

RougeReport mean_report(std::span<const RougeReport> reports) {
  RougeReport mean;
  mean.doc_id = std::string(kMeanDocId);
  if (reports.empty()) return mean;
  for (auto m : kAllRougeMetrics) {
    double r = 0.0, p = 0.0, f = 0.0;
    for (const auto& rep : reports) {
      r += rep[m].recall;
      p += rep[m].precision;
      f += rep[m].f_measure;
    }
    const double n = static_cast<double>(reports.size());
    mean[m] = RougeScore{r / n, p / n, f / n, false};
  }
  return mean;
}

void write_reports_json(std::ostream& out, std::span<const RougeReport> reports) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& rep : sorted_with_mean(reports)) {
    for (auto m : kAllRougeMetrics) {
      nlohmann::ordered_json row;
      row["doc_id"] = rep.doc_id;
      row["metric"] = std::string(to_string(m));
      row["recall"] = rep[m].recall;
      row["precision"] = rep[m].precision;
      row["f"] = rep[m].f_measure;
      rows.push_back(std::move(row));
    }
  }
  out << rows.dump(2) << '\n';
}

void write_reports_csv(std::ostream& out, std::span<const RougeReport> reports) {
  out << "doc_id,metric,recall,precision,f\n";
  for (const auto& rep : sorted_with_mean(reports)) {
    for (auto m : kAllRougeMetrics) {
      out << rep.doc_id << ',' << to_string(m) << ',' << format_double(rep[m].recall) << ','
          << format_double(rep[m].precision) << ',' << format_double(rep[m].f_measure) << '\n';
    }
  }
}

std::vector<RougeReport> read_reports(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open report: " + path.string());
  if (path.extension() == ".csv") return read_reports_csv(in, path.string());
  return read_reports_json(in, path.string());
}

std::vector<RougeReport> read_reports_json(std::istream& in, const std::string& source) {
  nlohmann::json rows;
  try {
    rows = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source, 0, e.what());
  }
  if (!rows.is_array()) throw ParseError(source, 0, "report must be a JSON array of rows");
  std::map<std::string, std::array<bool, 4>> seen;
  std::map<std::string, RougeReport> by_doc;
  std::size_t index = 0;
  for (const auto& row : rows) {
    ++index;
    try {
      RougeScore s{row.at("recall").get<double>(), row.at("precision").get<double>(),
                   row.at("f").get<double>(), false};
      add_row(seen, by_doc, row.at("doc_id").get<std::string>(),
              row.at("metric").get<std::string>(), s, source, index);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(source, index, e.what());
    }
  }
  return assemble(seen, by_doc, source);
}

std::vector<RougeReport> read_reports_csv(std::istream& in, const std::string& source) {
  std::map<std::string, std::array<bool, 4>> seen;
  std::map<std::string, RougeReport> by_doc;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || (line_no == 1 && line.rfind("doc_id,", 0) == 0)) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, ',')) cols.push_back(col);
    if (cols.size() != 5) throw ParseError(source, line_no, "expected 5 columns");
    RougeScore s;
    try {
      s.recall = std::stod(cols[2]);
      s.precision = std::stod(cols[3]);
      s.f_measure = std::stod(cols[4]);
    } catch (const std::exception&) {
      throw ParseError(source, line_no, "non-numeric score");
    }
    add_row(seen, by_doc, cols[0], cols[1], s, source, line_no);
  }
  return assemble(seen, by_doc, source);
}

std::string_view to_string(Facet facet) {
  switch (facet) {
    case Facet::Recall:
      return "recall";
    case Facet::Precision:
      return "precision";
    case Facet::FMeasure:
      return "f";
  }
  return "?";
}

double facet_value(const RougeScore& score, Facet facet) {
  switch (facet) {
    case Facet::Recall:
      return score.recall;
    case Facet::Precision:
      return score.precision;
    case Facet::FMeasure:
      return score.f_measure;
  }
  return 0.0;
}

std::vector<ComparisonCell> compare_reports(std::span<const RougeReport> a,
                                            std::span<const RougeReport> b,
                                            WilcoxonMethod method) {
  std::map<std::string, const RougeReport*> left;
  std::map<std::string, const RougeReport*> right;
  for (const auto& r : a) left[r.doc_id] = &r;
  for (const auto& r : b) right[r.doc_id] = &r;
  std::vector<std::string> only_a;
  std::vector<std::string> only_b;
  for (const auto& [id, _] : left) {
    if (!right.count(id)) only_a.push_back(id);
  }
  for (const auto& [id, _] : right) {
    if (!left.count(id)) only_b.push_back(id);
  }
  if (!only_a.empty() || !only_b.empty()) {
    std::ostringstream msg;
    msg << "report sets do not pair up";
    auto list = [&](const char* label, const std::vector<std::string>& ids) {
      if (ids.empty()) return;
      msg << "; missing from " << label << ":";
      for (const auto& id : ids) msg << ' ' << id;
    };
    list("B", only_a);
    list("A", only_b);
    throw ValidationError(msg.str());
  }

  std::vector<ComparisonCell> cells;
  for (auto m : kAllRougeMetrics) {
    for (auto f : {Facet::Recall, Facet::Precision, Facet::FMeasure}) {
      std::vector<double> xs;
      std::vector<double> ys;
      for (const auto& [id, ra] : left) {
        xs.push_back(facet_value((*ra)[m], f));
        ys.push_back(facet_value((*right.at(id))[m], f));
      }
      ComparisonCell cell{m, f, std::nullopt, {}};
      try {
        cell.result = wilcoxon_signed_rank(xs, ys, method);
      } catch (const InsufficientData& e) {
        cell.note = e.what();
      }
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

void write_comparison_csv(std::ostream& out, std::span<const ComparisonCell> cells) {
  out << "metric,facet,n,statistic,p_value,mark\n";
  for (const auto& c : cells) {
    out << to_string(c.metric) << ',' << to_string(c.facet) << ',';
    if (c.result) {
      out << c.result->n_effective << ',' << format_double(c.result->statistic) << ','
          << format_double(c.result->p_value) << ',' << (c.significant() ? "" : "*") << '\n';
    } else {
      out << "0,,,*\n";
    }
  }
}

void write_comparison_table(std::ostream& out, std::span<const ComparisonCell> cells) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%-10s", "");
  out << buf;
  for (const char* h : {"Recall", "Precision", "F-measure"}) {
    std::snprintf(buf, sizeof(buf), "%12s", h);
    out << buf;
  }
  out << '\n';
  for (auto m : kAllRougeMetrics) {
    std::snprintf(buf, sizeof(buf), "%-10s", std::string(to_string(m)).c_str());
    out << buf;
    for (auto f : {Facet::Recall, Facet::Precision, Facet::FMeasure}) {
      auto it = std::find_if(cells.begin(), cells.end(), [&](const ComparisonCell& c) {
        return c.metric == m && c.facet == f;
      });
      if (it == cells.end() || !it->significant()) {
        std::snprintf(buf, sizeof(buf), "%12s", "*");
      } else {
        std::snprintf(buf, sizeof(buf), "%12.2E", it->result->p_value);
      }
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace mlsum
