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
#include "mlsum/similarity.h"

#include <iterator>
#include <tuple>

namespace mlsum {

std::string_view to_string(SimilarityKind kind) {
  switch (kind) {
    case SimilarityKind::Semantic:
      return "semantic";
    case SimilarityKind::Word:
      return "word";
    case SimilarityKind::Coref:
      return "coref";
  }
  return "unknown";
}

std::optional<SimilarityKind> parse_similarity_kind(std::string_view name) {
  const std::string lower = ascii_lower(name);
  for (auto kind : kAllSimilarityKinds) {
    if (lower == to_string(kind)) return kind;
  }
  if (lower == "coreference" || lower == "co-reference") return SimilarityKind::Coref;
  return std::nullopt;
}

std::vector<std::string> concept_sequence(std::span<const ConceptMention> mentions,
                                          std::size_t sentence_index) {
  std::vector<const ConceptMention*> picked;
  for (const auto& m : mentions) {
    if (m.sentence_index == sentence_index) picked.push_back(&m);
  }
  std::stable_sort(picked.begin(), picked.end(), [](const auto* x, const auto* y) {
    return std::tie(x->span.begin, x->span.end) < std::tie(y->span.begin, y->span.end);
  });
  std::vector<std::string> ids;
  ids.reserve(picked.size());
  for (const auto* m : picked) ids.push_back(m->concept_id);
  return ids;
}

double semantic_similarity(std::span<const ConceptMention> mentions_i,
                           std::span<const ConceptMention> mentions_j,
                           std::size_t sentence_i, std::size_t sentence_j,
                           std::size_t n) {
  const auto ci = concept_sequence(mentions_i, sentence_i);
  const auto cj = concept_sequence(mentions_j, sentence_j);
  if (n == 0) throw InvalidArgument("semantic_similarity: n must be >= 1");
  if (ci.empty() || cj.empty()) return 0.0;
  return ngram_similarity(ci, cj, n);
}

double word_similarity(const Sentence& a, const Sentence& b, std::size_t n,
                       const TermFilter& filter) {
  return ngram_similarity(filtered_terms(a.tokens, filter),
                          filtered_terms(b.tokens, filter), n);
}

std::set<std::string> chains_touching(std::span<const CorefChain> chains,
                                      std::size_t sentence_index) {
  std::set<std::string> ids;
  for (const auto& c : chains) {
    for (const auto& m : c.mentions) {
      if (m.sentence_index == sentence_index) {
        ids.insert(c.chain_id);
        break;
      }
    }
  }
  return ids;
}

double coref_similarity(const std::set<std::string>& ki,
                        const std::set<std::string>& kj) {
  if (ki.empty() || kj.empty()) return 0.0;
  std::vector<std::string> shared;
  std::set_intersection(ki.begin(), ki.end(), kj.begin(), kj.end(),
                        std::back_inserter(shared));
  return static_cast<double>(shared.size()) /
         static_cast<double>(std::max(ki.size(), kj.size()));
}

double coref_similarity(std::size_t sentence_i, std::size_t sentence_j,
                        std::span<const CorefChain> chains) {
  return coref_similarity(chains_touching(chains, sentence_i),
                          chains_touching(chains, sentence_j));
}

std::vector<SentenceFeatures> extract_features(const AnnotatedDocument& doc,
                                               const TermFilter& word_filter) {
  std::vector<SentenceFeatures> out(doc.size());
  for (const auto& s : doc.document.sentences) {
    auto& f = out[s.index];
    f.words = filtered_terms(s.tokens, word_filter);
    f.concepts = concept_sequence(doc.concept_mentions, s.index);
    f.chains = chains_touching(doc.coref_chains, s.index);
  }
  return out;
}

}  // namespace mlsum
