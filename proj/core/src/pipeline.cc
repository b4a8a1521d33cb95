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
#include "mlsum/pipeline.h"

namespace mlsum {

std::string_view to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::MultiRank:
      return "multirank";
    case SystemKind::LexRank:
      return "lexrank";
    case SystemKind::WeightedAverage:
      return "weighted-average";
  }
  return "unknown";
}

std::optional<SystemKind> parse_system_kind(std::string_view name) {
  for (auto k : {SystemKind::MultiRank, SystemKind::LexRank, SystemKind::WeightedAverage}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

void PipelineConfig::validate() const {
  graph.validate();
  multirank.validate();
  summary.validate();
  lexrank.validate();
  if (system == SystemKind::WeightedAverage && !average_weights.empty() &&
      average_weights.size() != graph.layers.size()) {
    throw InvalidArgument("pipeline: one average weight per layer required");
  }
}

PipelineResult summarize(const AnnotatedDocument& doc, const PipelineConfig& cfg,
                         const IdfTable* corpus_idf) {
  cfg.validate();
  if (doc.size() == 0) {
    throw InvalidArgument("document '" + doc.document.doc_id + "' has no sentences");
  }
  PipelineResult out;
  if (cfg.system == SystemKind::LexRank) {
    IdfTable local;
    const IdfTable* idf = corpus_idf;
    if (cfg.lexrank.idf_source == IdfSource::PerDocument) {
      local = IdfTable::FromSentences(doc.document);
      idf = &local;
    } else if (idf == nullptr) {
      throw InvalidArgument("lexrank: corpus IDF requested but none supplied");
    }
    out.centrality = lexrank_centrality(doc.document, *idf, cfg.lexrank);
    out.scores = min_max_normalize(out.centrality);
    SummaryConfig basic = cfg.summary;
    basic.mode = SelectionMode::Basic;
    out.summary = select(out.scores, doc.document, basic);
    return out;
  }

  out.graph = build_graph(doc, cfg.graph);
  if (cfg.system == SystemKind::MultiRank) {
    out.multirank = multirank(*out.graph, cfg.multirank);
    out.centrality = out.multirank->x;
  } else {
    std::vector<double> weights = cfg.average_weights;
    if (weights.empty()) weights.assign(out.graph->n_layers(), 1.0);
    out.centrality = simple_weighted_average(*out.graph, weights, cfg.multirank.damping);
  }
  out.scores = sentence_scores(out.centrality, len_con(doc), cfg.summary);
  out.summary = select(out.scores, doc.document, cfg.summary);
  return out;
}

}  // namespace mlsum
