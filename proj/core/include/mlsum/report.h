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
#ifndef MLSUM_REPORT_H_
#define MLSUM_REPORT_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlsum/rouge.h"
#include "mlsum/wilcoxon.h"

namespace mlsum {

inline constexpr std::string_view kMeanDocId = "__mean__";
inline constexpr double kSignificanceLevel = 0.05;

// Arithmetic mean over documents of every metric and facet.
RougeReport mean_report(std::span<const RougeReport> reports);

// Rows {doc_id, metric, recall, precision, f} sorted by doc_id then metric,
// followed by the __mean__ rows.
void write_reports_json(std::ostream& out, std::span<const RougeReport> reports);
void write_reports_csv(std::ostream& out, std::span<const RougeReport> reports);

// Reads either format (chosen by extension, .csv or anything else as JSON).
// __mean__ rows are dropped; every document must carry all four metrics.
std::vector<RougeReport> read_reports(const std::filesystem::path& path);
std::vector<RougeReport> read_reports_json(std::istream& in, const std::string& source);
std::vector<RougeReport> read_reports_csv(std::istream& in, const std::string& source);

enum class Facet { Recall, Precision, FMeasure };
std::string_view to_string(Facet facet);
double facet_value(const RougeScore& score, Facet facet);

struct ComparisonCell {
  RougeMetric metric = RougeMetric::Rouge1;
  Facet facet = Facet::Recall;
  std::optional<WilcoxonResult> result;  // empty when the test could not run
  std::string note;

  // "*" marks cells where the systems do not differ significantly.
  bool significant() const { return result && result->p_value <= kSignificanceLevel; }
};

// Pairs documents by doc_id and runs one Wilcoxon test per metric and
// facet. Throws ValidationError listing doc_ids present on only one side.
std::vector<ComparisonCell> compare_reports(std::span<const RougeReport> a,
                                            std::span<const RougeReport> b,
                                            WilcoxonMethod method = WilcoxonMethod::Auto);

// Columns: metric, facet, n, statistic, p_value, mark.
void write_comparison_csv(std::ostream& out, std::span<const ComparisonCell> cells);
// Metric rows by Recall / Precision / F-measure columns of p-values, "*"
// for non-significant cells.
void write_comparison_table(std::ostream& out, std::span<const ComparisonCell> cells);

// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace mlsum

#endif  // MLSUM_REPORT_H_
