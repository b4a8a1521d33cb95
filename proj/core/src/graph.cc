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
#include "mlsum/graph.h"

#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>

#include "json.hpp"

namespace mlsum {

void GraphBuildConfig::validate() const {
  if (layers.empty()) throw InvalidArgument("graph config: layer subset must be nonempty");
  std::set<SimilarityKind> seen(layers.begin(), layers.end());
  if (seen.size() != layers.size()) {
    throw InvalidArgument("graph config: layers must be distinct");
  }
  if (word_ngram == 0 || concept_ngram == 0) {
    throw InvalidArgument("graph config: n-gram orders must be >= 1");
  }
  if (mode == EdgeMode::Unweighted && !(threshold > 0.0 && threshold < 1.0)) {
    throw InvalidArgument("graph config: threshold must lie in (0, 1)");
  }
}

MultiLayerGraph::MultiLayerGraph(std::vector<SimilarityKind> layers,
                                 std::vector<DenseMatrix> adjacency)
    : layers_(std::move(layers)), adjacency_(std::move(adjacency)) {
  if (layers_.empty()) throw InvalidArgument("graph: at least one layer required");
  if (layers_.size() != adjacency_.size()) {
    throw InvalidArgument("graph: one adjacency matrix per layer required");
  }
  if (std::set<SimilarityKind>(layers_.begin(), layers_.end()).size() != layers_.size()) {
    throw InvalidArgument("graph: layers must be distinct");
  }
  n_nodes_ = adjacency_.front().rows();
  for (const auto& a : adjacency_) {
    if (a.rows() != n_nodes_ || a.cols() != n_nodes_) {
      throw InvalidArgument("graph: every layer must be n x n");
    }
    for (std::size_t i = 0; i < n_nodes_; ++i) {
      if (a(i, i) != 0.0) throw InvalidArgument("graph: diagonal must be zero");
      for (std::size_t j = 0; j < n_nodes_; ++j) {
        const double w = a(i, j);
        if (!std::isfinite(w) || w < 0.0) {
          throw InvalidArgument("graph: weights must be finite and nonnegative");
        }
        if (w != a(j, i)) throw InvalidArgument("graph: adjacency must be symmetric");
      }
    }
  }
}

const DenseMatrix* MultiLayerGraph::find_layer(SimilarityKind kind) const {
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    if (layers_[i] == kind) return &adjacency_[i];
  }
  return nullptr;
}

MultiLayerGraph build_graph(const AnnotatedDocument& doc, const GraphBuildConfig& cfg) {
  cfg.validate();
  const std::size_t n = doc.size();
  if (n == 0) throw InvalidArgument("build_graph: document '" + doc.document.doc_id + "' has no sentences");
  const auto features = extract_features(doc, cfg.word_filter);

  using Counts = std::map<std::vector<std::string>, std::size_t>;
  std::vector<Counts> word_counts(n);
  std::vector<Counts> concept_counts(n);
  for (std::size_t i = 0; i < n; ++i) {
    word_counts[i] = ngram_counts(std::span<const std::string>(features[i].words), cfg.word_ngram);
    concept_counts[i] =
        ngram_counts(std::span<const std::string>(features[i].concepts), cfg.concept_ngram);
  }

  std::vector<DenseMatrix> adjacency;
  adjacency.reserve(cfg.layers.size());
  for (auto kind : cfg.layers) {
    DenseMatrix a = DenseMatrix::Square(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto& fi = features[i];
        const auto& fj = features[j];
        double s = 0.0;
        switch (kind) {
          case SimilarityKind::Semantic:
            s = (fi.concepts.empty() || fj.concepts.empty())
                    ? 0.0
                    : dice_from_counts(concept_counts[i],
                                       ngram_total(fi.concepts.size(), cfg.concept_ngram),
                                       concept_counts[j],
                                       ngram_total(fj.concepts.size(), cfg.concept_ngram));
            break;
          case SimilarityKind::Word:
            s = dice_from_counts(word_counts[i], ngram_total(fi.words.size(), cfg.word_ngram),
                                 word_counts[j], ngram_total(fj.words.size(), cfg.word_ngram));
            break;
          case SimilarityKind::Coref:
            s = coref_similarity(fi.chains, fj.chains);
            break;
        }
        if (cfg.mode == EdgeMode::Unweighted) s = s >= cfg.threshold ? 1.0 : 0.0;
        a(i, j) = s;
        a(j, i) = s;
      }
    }
    adjacency.push_back(std::move(a));
  }
  return MultiLayerGraph(cfg.layers, std::move(adjacency));
}

MultiLayerGraph apply_threshold(const MultiLayerGraph& g, double threshold) {
  std::vector<DenseMatrix> out;
  for (const auto& a : g.adjacency()) {
    DenseMatrix b = DenseMatrix::Square(g.n_nodes());
    for (std::size_t i = 0; i < g.n_nodes(); ++i) {
      for (std::size_t j = 0; j < g.n_nodes(); ++j) {
        if (i != j) b(i, j) = a(i, j) >= threshold ? 1.0 : 0.0;
      }
    }
    out.push_back(std::move(b));
  }
  return MultiLayerGraph(g.layers(), std::move(out));
}

void write_graph_json(std::ostream& out, const MultiLayerGraph& g) {
  nlohmann::ordered_json doc;
  doc["n_nodes"] = g.n_nodes();
  auto layers = nlohmann::ordered_json::array();
  for (std::size_t l = 0; l < g.n_layers(); ++l) {
    nlohmann::ordered_json layer;
    layer["kind"] = std::string(to_string(g.layers()[l]));
    auto edges = nlohmann::ordered_json::array();
    const auto& a = g.layer(l);
    for (std::size_t i = 0; i < g.n_nodes(); ++i) {
      for (std::size_t j = i + 1; j < g.n_nodes(); ++j) {
        if (a(i, j) > 0.0) edges.push_back({i, j, a(i, j)});
      }
    }
    layer["edges"] = std::move(edges);
    layers.push_back(std::move(layer));
  }
  doc["layers"] = std::move(layers);
  out << doc.dump(2) << '\n';
}

MultiLayerGraph read_graph_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("graph", 0, e.what());
  }
  try {
    const auto n = doc.at("n_nodes").get<std::size_t>();
    std::vector<SimilarityKind> kinds;
    std::vector<DenseMatrix> mats;
    for (const auto& layer : doc.at("layers")) {
      auto kind = parse_similarity_kind(layer.at("kind").get<std::string>());
      if (!kind) throw ParseError("graph", 0, "unknown layer kind");
      DenseMatrix a = DenseMatrix::Square(n);
      for (const auto& e : layer.at("edges")) {
        const auto i = e.at(0).get<std::size_t>();
        const auto j = e.at(1).get<std::size_t>();
        const double w = e.at(2).get<double>();
        if (i >= n || j >= n || i == j) throw ParseError("graph", 0, "edge endpoint out of range");
        a(i, j) = w;
        a(j, i) = w;
      }
      kinds.push_back(*kind);
      mats.push_back(std::move(a));
    }
    return MultiLayerGraph(std::move(kinds), std::move(mats));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("graph", 0, e.what());
  }
}

}  // namespace mlsum
