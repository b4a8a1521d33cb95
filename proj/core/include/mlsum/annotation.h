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
#ifndef MLSUM_ANNOTATION_H_
#define MLSUM_ANNOTATION_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlsum/text.h"

namespace mlsum {

// A concept (e.g. a UMLS CUI) found in one sentence. span is in bytes
// relative to the sentence text.
struct ConceptMention {
  std::size_t sentence_index = 0;
  Span span;
  std::string concept_id;
  std::string preferred_name;
  std::string semantic_type;

  friend bool operator==(const ConceptMention&, const ConceptMention&) = default;
};

struct MentionRef {
  std::size_t sentence_index = 0;
  Span span;

  friend bool operator==(const MentionRef&, const MentionRef&) = default;
  friend auto operator<=>(const MentionRef&, const MentionRef&) = default;
};

// Expressions referring to the same entity; at least two mentions, sorted
// by (sentence_index, span.begin).
struct CorefChain {
  std::string chain_id;
  std::vector<MentionRef> mentions;

  friend bool operator==(const CorefChain&, const CorefChain&) = default;
};

struct AnnotatedDocument {
  Document document;
  std::vector<ConceptMention> concept_mentions;
  std::vector<CorefChain> coref_chains;

  std::size_t size() const { return document.size(); }
};

struct LexiconEntry {
  std::string concept_id;
  std::string name;
  std::string semantic_type;
};

// Case-insensitive term dictionary. Terms are matched as token sequences,
// so "Pulmonary  arterial hypertension" and "pulmonary arterial
// hypertension" are the same key.
class Lexicon {
 public:
  // Returns false (and keeps the existing entry) when the term was already
  // present. Throws InvalidArgument for terms with no tokens or an empty
  // concept id.
  bool add(std::string_view term, LexiconEntry entry);

  // TSV: term, concept_id, name, sem_type (sem_type may be empty or
  // missing). Blank lines and '#' comments are skipped.
  static Lexicon Load(const std::filesystem::path& path);
  static Lexicon Parse(std::istream& in, const std::string& source_name);

  const LexiconEntry* find(std::span<const std::string> normalized_tokens) const;
  std::size_t max_term_tokens() const { return max_term_tokens_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::vector<std::string>, LexiconEntry> entries_;
  std::size_t max_term_tokens_ = 0;
};

// Greedy longest match, left to right, over each sentence's tokens. A match
// consumes its tokens so shorter overlapping terms are suppressed.
std::vector<ConceptMention> annotate_concepts_dictionary(const Document& doc,
                                                         const Lexicon& lexicon);

// Concept-identity chaining: mentions sharing a concept_id that occur in at
// least two distinct sentences form one chain with chain_id = concept_id.
// Chains are ordered by chain_id.
std::vector<CorefChain> derive_coref_chains_fallback(
    const Document& doc, std::span<const ConceptMention> mentions);

// Union of two mention lists, deduplicated on (sentence, span, concept_id),
// sorted by (sentence, span.begin, span.end, concept_id).
std::vector<ConceptMention> merge_mentions(std::span<const ConceptMention> a,
                                           std::span<const ConceptMention> b);

// Dictionary annotation plus fallback chains.
AnnotatedDocument annotate_with_lexicon(Document doc, const Lexicon& lexicon);

struct AnnotationSet {
  std::vector<ConceptMention> mentions;
  std::vector<CorefChain> chains;
};

// Reads the JSON Lines interchange format. Records whose doc_id differs
// from doc.doc_id are skipped, so one file may carry a whole corpus.
// Throws ParseError (with line number) on malformed records and
// ValidationError when a record does not fit the document.
AnnotationSet load_annotations(const std::filesystem::path& path,
                               const Document& doc);
AnnotationSet parse_annotations(std::istream& in, const std::string& source_name,
                                const Document& doc);

void write_annotations(std::ostream& out, const std::string& doc_id,
                       std::span<const ConceptMention> mentions,
                       std::span<const CorefChain> chains);

}  // namespace mlsum

#endif  // MLSUM_ANNOTATION_H_
