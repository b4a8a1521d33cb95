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
#ifndef MLSUM_SIMILARITY_H_
#define MLSUM_SIMILARITY_H_

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlsum/annotation.h"
#include "mlsum/text.h"

namespace mlsum {

enum class SimilarityKind { Semantic, Word, Coref };

inline constexpr std::array<SimilarityKind, 3> kAllSimilarityKinds = {
    SimilarityKind::Semantic, SimilarityKind::Word, SimilarityKind::Coref};

std::string_view to_string(SimilarityKind kind);
std::optional<SimilarityKind> parse_similarity_kind(std::string_view name);

// Dice coefficient over n-gram multisets:
//   2 * |A ∩ B| / (|A| + |B|)
// with min-multiplicity intersection. 0 when both multisets are empty.
// Dice coefficient of two n-gram multisets given as count maps holding
// total_a and total_b n-grams.
template <typename Gram>
double dice_from_counts(const std::map<Gram, std::size_t>& ca, std::size_t total_a,
                        const std::map<Gram, std::size_t>& cb, std::size_t total_b) {
  if (total_a + total_b == 0) return 0.0;
  std::size_t shared = 0;
  auto ia = ca.begin();
  auto ib = cb.begin();
  while (ia != ca.end() && ib != cb.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      shared += std::min(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  return 2.0 * static_cast<double>(shared) / static_cast<double>(total_a + total_b);
}

inline std::size_t ngram_total(std::size_t length, std::size_t n) {
  return length >= n ? length - n + 1 : 0;
}

template <typename T>
double ngram_similarity(std::span<const T> a, std::span<const T> b, std::size_t n) {
  return dice_from_counts(ngram_counts(a, n), ngram_total(a.size(), n), ngram_counts(b, n),
                          ngram_total(b.size(), n));
}

template <typename T>
double ngram_similarity(const std::vector<T>& a, const std::vector<T>& b,
                        std::size_t n) {
  return ngram_similarity(std::span<const T>(a), std::span<const T>(b), n);
}

// Concept ids of the mentions in one sentence, ordered by span.
std::vector<std::string> concept_sequence(std::span<const ConceptMention> mentions,
                                          std::size_t sentence_index);

// Dice over the concept-id sequences of the two sentences' mentions.
// Mentions belonging to other sentences are ignored.
double semantic_similarity(std::span<const ConceptMention> mentions_i,
                           std::span<const ConceptMention> mentions_j,
                           std::size_t sentence_i, std::size_t sentence_j,
                           std::size_t n);

double word_similarity(const Sentence& a, const Sentence& b, std::size_t n,
                       const TermFilter& filter = {});

// Ids of chains with at least one mention in the sentence.
std::set<std::string> chains_touching(std::span<const CorefChain> chains,
                                      std::size_t sentence_index);

// |K_i ∩ K_j| / max(|K_i|, |K_j|) over the chain-id sets; 0 if either is
// empty.
double coref_similarity(const std::set<std::string>& chains_i,
                        const std::set<std::string>& chains_j);
double coref_similarity(std::size_t sentence_i, std::size_t sentence_j,
                        std::span<const CorefChain> chains);

// Per-sentence representations used to fill every layer of a graph, computed
// once per document.
struct SentenceFeatures {
  std::vector<std::string> words;
  std::vector<std::string> concepts;
  std::set<std::string> chains;
};

std::vector<SentenceFeatures> extract_features(const AnnotatedDocument& doc,
                                               const TermFilter& word_filter = {});

}  // namespace mlsum

#endif  // MLSUM_SIMILARITY_H_
