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
#ifndef MLSUM_TESTS_SUPPORT_RANDOM_INPUTS_H_
#define MLSUM_TESTS_SUPPORT_RANDOM_INPUTS_H_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "mlsum/annotation.h"
#include "mlsum/matrix.h"

namespace mlsum::testing {

// Symmetric, zero-diagonal, nonnegative. density is the chance of an edge.
inline DenseMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, double density) {
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::bernoulli_distribution edge(density);
  DenseMatrix a = DenseMatrix::Square(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) a(i, j) = a(j, i) = weight(rng);
    }
  }
  return a;
}

inline std::vector<std::string> random_words(std::mt19937_64& rng, std::size_t max_len,
                                             std::size_t alphabet) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet - 1);
  std::vector<std::string> out(len(rng));
  for (auto& w : out) w = std::string(1, static_cast<char>('a' + pick(rng)));
  return out;
}

// A document of n sentences over a small vocabulary, with concept mentions
// on random tokens drawn from a small concept inventory and fallback
// chains.
inline AnnotatedDocument random_annotated_document(std::mt19937_64& rng, std::size_t n) {
  static const char* kVocab[] = {"cell",   "protein", "gene",  "tumor",  "dose",
                                 "trial",  "patient", "renal", "kinase", "signal",
                                 "marker", "therapy", "liver", "plasma", "lesion"};
  std::uniform_int_distribution<std::size_t> len(3, 12);
  std::uniform_int_distribution<std::size_t> word(0, std::size(kVocab) - 1);
  std::uniform_int_distribution<int> concept_id(0, 5);
  std::bernoulli_distribution tag(0.3);
  std::vector<std::string> sentences;
  for (std::size_t s = 0; s < n; ++s) {
    std::string text = "Sentence";
    const std::size_t l = len(rng);
    for (std::size_t t = 0; t < l; ++t) {
      text += ' ';
      text += kVocab[word(rng)];
    }
    text += '.';
    sentences.push_back(text);
  }
  AnnotatedDocument doc;
  doc.document = make_document_from_sentences("random", sentences);
  for (const auto& sent : doc.document.sentences) {
    for (const auto& tok : sent.tokens) {
      if (tok.normalized == "sentence" || !tag(rng)) continue;
      doc.concept_mentions.push_back(ConceptMention{
          sent.index, tok.span, "C" + std::to_string(concept_id(rng)), tok.normalized, ""});
    }
  }
  doc.coref_chains = derive_coref_chains_fallback(doc.document, doc.concept_mentions);
  return doc;
}

}  // namespace mlsum::testing

#endif  // MLSUM_TESTS_SUPPORT_RANDOM_INPUTS_H_
