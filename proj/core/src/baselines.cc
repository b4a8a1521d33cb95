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
#include "mlsum/baselines.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "mlsum/multirank.h"

namespace mlsum {

void LexRankConfig::validate() const {
  if (!(cosine_threshold >= 0.0 && cosine_threshold < 1.0)) {
    throw InvalidArgument("lexrank: cosine threshold must lie in [0, 1)");
  }
  if (!(damping > 0.0 && damping < 1.0)) {
    throw InvalidArgument("lexrank: damping must lie in (0, 1)");
  }
}

IdfTable::IdfTable(std::map<std::string, std::size_t> document_frequency,
                   std::size_t corpus_size)
    : df_(std::move(document_frequency)), corpus_size_(corpus_size) {}

IdfTable IdfTable::FromSentences(const Document& doc) {
  std::map<std::string, std::size_t> df;
  for (const auto& s : doc.sentences) {
    std::set<std::string> seen;
    for (const auto& t : s.tokens) seen.insert(t.normalized);
    for (const auto& t : seen) ++df[t];
  }
  return IdfTable(std::move(df), doc.size());
}

IdfTable IdfTable::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open IDF table: " + path.string());
  return Parse(in, path.string());
}

IdfTable IdfTable::Parse(std::istream& in, const std::string& source_name) {
  std::map<std::string, std::size_t> df;
  std::size_t corpus_size = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string term, df_text, n_text;
    if (!std::getline(fields, term, '\t') || !std::getline(fields, df_text, '\t') ||
        !std::getline(fields, n_text, '\t')) {
      if (line_no == 1) continue;  // header or junk first line
      throw ParseError(source_name, line_no, "expected term<TAB>document_frequency<TAB>corpus_size");
    }
    std::size_t d = 0;
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      d = std::stoull(df_text, &used);
      if (used != df_text.size()) throw std::invalid_argument("trailing");
      n = std::stoull(n_text, &used);
      if (used != n_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      if (line_no == 1) continue;  // header
      throw ParseError(source_name, line_no, "frequencies must be nonnegative integers");
    }
    if (corpus_size != 0 && n != corpus_size) {
      throw ParseError(source_name, line_no, "corpus_size differs from earlier rows");
    }
    if (n == 0 || d > n) throw ParseError(source_name, line_no, "need 0 <= df <= corpus_size, corpus_size > 0");
    corpus_size = n;
    df[ascii_lower(term)] = d;
  }
  return IdfTable(std::move(df), corpus_size);
}

double IdfTable::idf(const std::string& term) const {
  if (corpus_size_ == 0) return 0.0;
  auto it = df_.find(term);
  const std::size_t d = it == df_.end() ? 1 : std::max<std::size_t>(it->second, 1);
  return std::log(static_cast<double>(corpus_size_) / static_cast<double>(d));
}

DenseMatrix tfidf_cosine_matrix(const Document& doc, const IdfTable& idf) {
  const std::size_t n = doc.size();
  std::vector<std::map<std::string, double>> vectors(n);
  std::vector<double> norms(n, 0.0);
  for (const auto& s : doc.sentences) {
    auto& v = vectors[s.index];
    for (const auto& t : s.tokens) v[t.normalized] += 1.0;
    for (auto& [term, weight] : v) {
      weight *= idf.idf(term);
      norms[s.index] += weight * weight;
    }
    norms[s.index] = std::sqrt(norms[s.index]);
  }
  DenseMatrix cos = DenseMatrix::Square(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (norms[i] == 0.0 || norms[j] == 0.0) continue;
      double dot = 0.0;
      for (const auto& [term, w] : vectors[i]) {
        auto it = vectors[j].find(term);
        if (it != vectors[j].end()) dot += w * it->second;
      }
      const double c = std::clamp(dot / (norms[i] * norms[j]), 0.0, 1.0);
      cos(i, j) = c;
      cos(j, i) = c;
    }
  }
  return cos;
}

DenseMatrix lexrank_graph(const Document& doc, const IdfTable& idf,
                          const LexRankConfig& cfg) {
  cfg.validate();
  DenseMatrix a = tfidf_cosine_matrix(doc, idf);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) a(i, j) = a(i, j) >= cfg.cosine_threshold ? 1.0 : 0.0;
    }
  }
  return a;
}

std::vector<double> lexrank_centrality(const Document& doc, const IdfTable& idf,
                                       const LexRankConfig& cfg) {
  if (doc.empty()) throw InvalidArgument("lexrank: document has no sentences");
  return pagerank(lexrank_graph(doc, idf, cfg), cfg.damping);
}

Summary lexrank_summarize(const Document& doc, const IdfTable* corpus_idf,
                          const LexRankConfig& cfg, double rate) {
  cfg.validate();
  IdfTable local;
  const IdfTable* idf = corpus_idf;
  if (cfg.idf_source == IdfSource::PerDocument) {
    local = IdfTable::FromSentences(doc);
    idf = &local;
  } else if (idf == nullptr) {
    throw InvalidArgument("lexrank: corpus IDF requested but none supplied");
  }
  const auto x = lexrank_centrality(doc, *idf, cfg);
  SummaryConfig sc;
  sc.compression_rate = rate;
  return select(min_max_normalize(x), doc, sc);
}

std::vector<double> simple_weighted_average(const MultiLayerGraph& g,
                                            std::span<const double> layer_weights,
                                            double damping) {
  if (layer_weights.size() != g.n_layers()) {
    throw InvalidArgument("simple_weighted_average: one weight per layer required");
  }
  double total = 0.0;
  for (double w : layer_weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InvalidArgument("simple_weighted_average: weights must be finite and nonnegative");
    }
    total += w;
  }
  if (total <= 0.0) throw InvalidArgument("simple_weighted_average: weights are all zero");
  std::vector<double> out(g.n_nodes(), 0.0);
  for (std::size_t a = 0; a < g.n_layers(); ++a) {
    if (layer_weights[a] == 0.0) continue;
    const auto pr = pagerank(g.layer(a), damping);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += layer_weights[a] * pr[i];
  }
  for (double& v : out) v /= total;
  return out;
}

}  // namespace mlsum
