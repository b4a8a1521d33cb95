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
#ifndef MLSUM_GRAPH_H_
#define MLSUM_GRAPH_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "mlsum/annotation.h"
#include "mlsum/matrix.h"
#include "mlsum/similarity.h"

namespace mlsum {

enum class EdgeMode { Weighted, Unweighted };

struct GraphBuildConfig {
  EdgeMode mode = EdgeMode::Weighted;
  // Unweighted mode links i and j when similarity >= threshold.
  double threshold = 0.2;
  std::vector<SimilarityKind> layers{kAllSimilarityKinds.begin(),
                                     kAllSimilarityKinds.end()};
  std::size_t word_ngram = 2;
  std::size_t concept_ngram = 1;
  TermFilter word_filter;

  // Throws InvalidArgument: empty or repeated layers, n-gram order 0,
  // threshold outside (0, 1) in Unweighted mode.
  void validate() const;
};

// Undirected multiplex graph over sentence nodes. Every layer is an n x n
// symmetric, nonnegative matrix with a zero diagonal.
class MultiLayerGraph {
 public:
  // Throws InvalidArgument if any invariant is violated.
  MultiLayerGraph(std::vector<SimilarityKind> layers,
                  std::vector<DenseMatrix> adjacency);

  std::size_t n_nodes() const { return n_nodes_; }
  std::size_t n_layers() const { return layers_.size(); }
  const std::vector<SimilarityKind>& layers() const { return layers_; }
  const std::vector<DenseMatrix>& adjacency() const { return adjacency_; }
  const DenseMatrix& layer(std::size_t index) const { return adjacency_.at(index); }
  // nullptr if the kind is not part of this graph.
  const DenseMatrix* find_layer(SimilarityKind kind) const;

 private:
  std::size_t n_nodes_ = 0;
  std::vector<SimilarityKind> layers_;
  std::vector<DenseMatrix> adjacency_;
};

// Fills one layer per configured similarity for every pair i < j. Throws
// InvalidArgument on an empty document or invalid config.
MultiLayerGraph build_graph(const AnnotatedDocument& doc, const GraphBuildConfig& cfg);

// Post-hoc binarisation of a weighted graph: weight >= threshold -> 1.
MultiLayerGraph apply_threshold(const MultiLayerGraph& g, double threshold);

// {"n_nodes": n, "layers": [{"kind": "...", "edges": [[i, j, w], ...]}]},
// listing each undirected edge once with i < j and w > 0.
void write_graph_json(std::ostream& out, const MultiLayerGraph& g);
MultiLayerGraph read_graph_json(std::istream& in);

}  // namespace mlsum

#endif  // MLSUM_GRAPH_H_
