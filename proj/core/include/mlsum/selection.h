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
#ifndef MLSUM_SELECTION_H_
#define MLSUM_SELECTION_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlsum/annotation.h"

namespace mlsum {

enum class SelectionMode { Basic, Enhanced };

// How the centrality enters the enhanced score: its min-max normalised
// value, or its descending rank position scaled to [0, 1].
enum class CentralityTerm { Value, Rank };

enum class OutputOrder { Document, Score };

struct SummaryConfig {
  double compression_rate = 0.20;
  SelectionMode mode = SelectionMode::Basic;
  double gamma = 1.0;
  double theta = 0.0;
  CentralityTerm centrality_term = CentralityTerm::Value;
  OutputOrder output_order = OutputOrder::Document;
  // gamma and theta are limited to [-1, 1] unless this is set.
  bool allow_extreme_weights = false;

  void validate() const;
};

struct SelectedSentence {
  std::size_t index = 0;
  double score = 0.0;
};

struct Summary {
  std::string doc_id;
  std::vector<SelectedSentence> selected;
  std::vector<std::string> sentences;  // texts of the selected sentences, in output order
  std::string text;                    // sentences joined by single spaces

  std::size_t k() const { return selected.size(); }
  std::vector<std::size_t> indices() const;
};

// Share of the document's concept mentions falling in each sentence. All
// zeros when the document has no mentions.
std::vector<double> len_con(const AnnotatedDocument& doc);

// (v - min) / (max - min); a constant vector maps to zeros. Throws
// InvalidArgument on an empty vector.
std::vector<double> min_max_normalize(std::span<const double> v);

// Indices by descending score, ties to the smaller index.
std::vector<std::size_t> rank_descending(std::span<const double> scores);

// Basic ranking: sentences by descending centrality.
std::vector<std::size_t> score_basic(std::span<const double> x);

// min_max(gamma * c + theta * lencon), where c is the centrality term
// selected by 'term'. Throws InvalidArgument on length mismatch.
std::vector<double> score_enhanced(std::span<const double> x,
                                   std::span<const double> lencon, double gamma,
                                   double theta,
                                   CentralityTerm term = CentralityTerm::Value);

// Final per-sentence scores in [0, 1] for the configured mode. Basic uses
// min_max(x), which orders sentences exactly as score_basic does.
std::vector<double> sentence_scores(std::span<const double> x,
                                    std::span<const double> lencon,
                                    const SummaryConfig& cfg);

// max(1, round_half_up(rate * n)), capped at n.
std::size_t target_count(std::size_t n_sentences, double rate);

// Takes the top-k sentences by score (ties to the smaller index) and
// orders them per cfg.output_order.
Summary select(std::span<const double> scores, const Document& doc,
               const SummaryConfig& cfg);

// {"doc_id", "k", "indices", "scores", "text", "sentences"}
void write_summary_json(std::ostream& out, const Summary& summary);
// One selected sentence per line.
void write_summary_text(std::ostream& out, const Summary& summary);
Summary read_summary_json(std::istream& in, const std::string& source_name);

std::string_view to_string(SelectionMode mode);
std::string_view to_string(CentralityTerm term);
std::string_view to_string(OutputOrder order);

}  // namespace mlsum

#endif  // MLSUM_SELECTION_H_
