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
#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "mlsum/report.h"
#include "support/oracles.h"

namespace mlsum {
namespace {

RougeReport row(std::string id, double base) {
  RougeReport r;
  r.doc_id = std::move(id);
  for (std::size_t m = 0; m < 4; ++m) {
    r.scores[m] = RougeScore::FromCounts(base + 0.01 * static_cast<double>(m), 1.0, 1.0 + base);
  }
  return r;
}

std::vector<RougeReport> sample(double shift, std::size_t n) {
  std::vector<RougeReport> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(row("doc" + std::to_string(i),
                      0.1 + 0.05 * static_cast<double>(i) + shift * static_cast<double>(i + 1)));
  }
  return out;
}

TEST(MeanReport, Averages) {
  const std::vector<RougeReport> r{row("a", 0.2), row("b", 0.4)};
  const RougeReport mean = mean_report(r);
  EXPECT_EQ(mean.doc_id, kMeanDocId);
  EXPECT_DOUBLE_EQ(mean[RougeMetric::Rouge1].recall, 0.3);
}

TEST(Reports, JsonRoundTripDropsMeanRows) {
  const auto reports = sample(0.0, 4);
  std::stringstream io;
  write_reports_json(io, reports);
  EXPECT_NE(io.str().find("__mean__"), std::string::npos);
  const auto back = read_reports_json(io, "mem");
  ASSERT_EQ(back.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(back[i].doc_id, reports[i].doc_id);
    for (auto m : kAllRougeMetrics) {
      EXPECT_DOUBLE_EQ(back[i][m].recall, reports[i][m].recall);
      EXPECT_DOUBLE_EQ(back[i][m].f_measure, reports[i][m].f_measure);
    }
  }
}

TEST(Reports, CsvRoundTrip) {
  const auto reports = sample(0.0, 3);
  std::stringstream io;
  write_reports_csv(io, reports);
  EXPECT_EQ(io.str().rfind("doc_id,metric,recall,precision,f\n", 0), 0u);
  const auto back = read_reports_csv(io, "mem");
  ASSERT_EQ(back.size(), 3u);
  EXPECT_DOUBLE_EQ(back[2][RougeMetric::RougeSU4].precision,
                   reports[2][RougeMetric::RougeSU4].precision);
}

TEST(Reports, MalformedInput) {
  std::istringstream bad_metric("doc_id,metric,recall,precision,f\nd,ROUGE-9,1,1,1\n");
  EXPECT_THROW(read_reports_csv(bad_metric, "r.csv"), ParseError);
  std::istringstream not_array(R"({"doc_id":"x"})");
  EXPECT_THROW(read_reports_json(not_array, "r.json"), ParseError);
  std::istringstream partial("doc_id,metric,recall,precision,f\nd,ROUGE-1,1,1,1\n");
  EXPECT_THROW(read_reports_csv(partial, "r.csv"), ValidationError);
}

TEST(Compare, MissingDocumentsListed) {
  auto a = sample(0.0, 6);
  auto b = sample(0.01, 6);
  b.pop_back();
  b.push_back(row("extra", 0.5));
  try {
    compare_reports(a, b);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("doc5"), std::string::npos) << what;
    EXPECT_NE(what.find("extra"), std::string::npos) << what;
  }
}

TEST(Compare, PValuesMatchEnumeration) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t n = 5; n <= 10; ++n) {
    std::vector<RougeReport> a;
    std::vector<RougeReport> b;
    for (std::size_t i = 0; i < n; ++i) {
      RougeReport ra;
      RougeReport rb;
      ra.doc_id = rb.doc_id = "d" + std::to_string(i);
      for (std::size_t m = 0; m < 4; ++m) {
        ra.scores[m] = {u(rng), u(rng), u(rng), false};
        rb.scores[m] = {u(rng), u(rng), u(rng), false};
      }
      a.push_back(ra);
      b.push_back(rb);
    }
    const auto cells = compare_reports(a, b);
    ASSERT_EQ(cells.size(), 12u);
    for (const auto& c : cells) {
      ASSERT_TRUE(c.result);
      std::vector<double> d;
      for (std::size_t i = 0; i < n; ++i) {
        d.push_back(facet_value(a[i][c.metric], c.facet) - facet_value(b[i][c.metric], c.facet));
      }
      EXPECT_NEAR(c.result->p_value, oracle::wilcoxon_enumerated_p(d), 1e-12);
    }
  }
}

TEST(Compare, IdenticalSetsAreInsufficient) {
  const auto a = sample(0.0, 6);
  const auto cells = compare_reports(a, a);
  for (const auto& c : cells) {
    EXPECT_FALSE(c.result);
    EXPECT_FALSE(c.significant());
  }
  std::ostringstream csv;
  write_comparison_csv(csv, cells);
  EXPECT_NE(csv.str().find("ROUGE-1,recall,0,,,*"), std::string::npos) << csv.str();
}

TEST(Compare, TableMarksNonSignificantCells) {
  const auto cells = compare_reports(sample(0.0, 8), sample(0.02, 8));
  std::ostringstream table;
  write_comparison_table(table, cells);
  const std::string t = table.str();
  EXPECT_NE(t.find("ROUGE-SU4"), std::string::npos);
  EXPECT_NE(t.find("E-"), std::string::npos) << t;
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(std::stod(format_double(6.0 / 7.0)), 6.0 / 7.0);
}

}  // namespace
}  // namespace mlsum
