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
#ifndef MLSUM_BASELINES_H_
#define MLSUM_BASELINES_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mlsum/graph.h"
#include "mlsum/matrix.h"
#include "mlsum/selection.h"
#include "mlsum/text.h"

namespace mlsum {

enum class IdfSource { PerDocument, Corpus };

struct LexRankConfig {
  double cosine_threshold = 0.1;
  double damping = 0.85;
  IdfSource idf_source = IdfSource::PerDocument;

  void validate() const;
};

// Document frequencies. idf(t) = log(N / max(df(t), 1)).
class IdfTable {
 public:
  IdfTable() = default;
  IdfTable(std::map<std::string, std::size_t> document_frequency, std::size_t corpus_size);

  // Every sentence of doc counts as one document.
  static IdfTable FromSentences(const Document& doc);
  // TSV: term, document_frequency, corpus_size. corpus_size must agree on
  // every row.
  static IdfTable Load(const std::filesystem::path& path);
  static IdfTable Parse(std::istream& in, const std::string& source_name);

  double idf(const std::string& term) const;
  std::size_t corpus_size() const { return corpus_size_; }

 private:
  std::map<std::string, std::size_t> df_;
  std::size_t corpus_size_ = 0;
};

// Cosine similarity of TF-IDF sentence vectors; zero diagonal.
DenseMatrix tfidf_cosine_matrix(const Document& doc, const IdfTable& idf);

// Unweighted LexRank graph: 1 where cosine >= threshold (off-diagonal).
DenseMatrix lexrank_graph(const Document& doc, const IdfTable& idf,
                          const LexRankConfig& cfg);

std::vector<double> lexrank_centrality(const Document& doc, const IdfTable& idf,
                                       const LexRankConfig& cfg);

// corpus_idf is only consulted when cfg.idf_source is Corpus, and must be
// non-null then.
Summary lexrank_summarize(const Document& doc, const IdfTable* corpus_idf,
                          const LexRankConfig& cfg, double rate);

// Weighted mean of per-layer PageRank vectors:
//   sum_a w_a * pagerank(A[a]) / sum_a w_a.
// Throws InvalidArgument for negative weights, all-zero weights or a
// length mismatch.
std::vector<double> simple_weighted_average(const MultiLayerGraph& g,
                                            std::span<const double> layer_weights,
                                            double damping = 0.85);

}  // namespace mlsum

#endif  // MLSUM_BASELINES_H_
