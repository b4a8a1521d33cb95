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
#ifndef MLSUM_PIPELINE_H_
#define MLSUM_PIPELINE_H_

#include <optional>
#include <string_view>
#include <vector>

#include "mlsum/annotation.h"
#include "mlsum/baselines.h"
#include "mlsum/graph.h"
#include "mlsum/multirank.h"
#include "mlsum/selection.h"

namespace mlsum {

enum class SystemKind {
  MultiRank,        // multi-layer graph ranked by the coupled fixed point
  LexRank,          // TF-IDF cosine graph + PageRank
  WeightedAverage,  // per-layer PageRank, averaged
};

std::string_view to_string(SystemKind kind);
std::optional<SystemKind> parse_system_kind(std::string_view name);

struct PipelineConfig {
  SystemKind system = SystemKind::MultiRank;
  GraphBuildConfig graph;
  MultiRankParams multirank;
  SummaryConfig summary;
  LexRankConfig lexrank;
  // Layer weights for WeightedAverage; empty means uniform.
  std::vector<double> average_weights;

  void validate() const;
};

struct PipelineResult {
  Summary summary;
  std::vector<double> centrality;  // raw ranking signal per sentence
  std::vector<double> scores;      // normalised scores used for selection
  std::optional<MultiLayerGraph> graph;
  std::optional<CentralityResult> multirank;
};

// Graph -> ranking -> selection for one annotated document. Throws
// InvalidArgument for an empty document or invalid configuration.
PipelineResult summarize(const AnnotatedDocument& doc, const PipelineConfig& cfg,
                         const IdfTable* corpus_idf = nullptr);

}  // namespace mlsum

#endif  // MLSUM_PIPELINE_H_
