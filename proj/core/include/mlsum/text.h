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

#ifndef MLSUM_TEXT_H_
#define MLSUM_TEXT_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlsum/error.h"

namespace mlsum {

// Half-open byte range [begin, end).
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - begin; }
  bool contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

struct Token {
  std::string surface;
  std::string normalized;  // ASCII case-folded surface
  Span span;               // byte offsets within the owning sentence text
};

struct Sentence {
  std::size_t index = 0;
  std::string text;
  Span char_span;  // byte offsets into Document::raw_text
  std::vector<Token> tokens;

  std::vector<std::string> normalized_tokens() const;
};

struct Document {
  std::string doc_id;
  std::string raw_text;
  std::vector<Sentence> sentences;

  std::size_t size() const { return sentences.size(); }
  bool empty() const { return sentences.empty(); }
};

// Words after which a period does not end a sentence ("e.g.", "Fig.").
// Entries are stored lower-cased without their trailing period.
class AbbreviationList {
 public:
  AbbreviationList() = default;
  explicit AbbreviationList(std::set<std::string> entries);

  static const AbbreviationList& Default();
  // One abbreviation per line; blank lines and lines starting with '#'
  // are ignored.
  static AbbreviationList Load(const std::filesystem::path& path);

  void add(std::string_view abbreviation);
  bool contains(std::string_view word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::set<std::string> entries_;
};

std::string ascii_lower(std::string_view s);

// Splits on whitespace and punctuation. Punctuation is dropped, except a
// hyphen between two word characters ("tRNA-Ile") and a '.' or ',' between
// two digits ("2.5"). Bytes >= 0x80 count as word characters so UTF-8
// letters survive intact.
std::vector<Token> tokenize(std::string_view sentence_text);

// Rule-based splitter: a sentence ends at '.', '!' or '?' (plus any
// closing quotes or brackets) that is followed by whitespace and then an
// uppercase letter, digit or opening quote/bracket, unless the word before
// a '.' is a guarded abbreviation. Sentences without tokens are dropped and
// the survivors are indexed 0..n-1.
std::vector<Sentence> segment_sentences(
    std::string_view raw_text,
    const AbbreviationList& abbreviations = AbbreviationList::Default());

Document make_document(
    std::string doc_id, std::string raw_text,
    const AbbreviationList& abbreviations = AbbreviationList::Default());

// Builds a document from externally segmented sentences, bypassing the
// splitter. raw_text is the sentences joined by a single space; empty or
// token-less entries are dropped.
Document make_document_from_sentences(std::string doc_id,
                                      std::span<const std::string> sentences);

// Optional term filtering applied before similarity or ROUGE matching.
// Both are off by default.
struct TermFilter {
  bool stem = false;              // Porter stemmer
  bool remove_stopwords = false;  // small English function-word list

  friend bool operator==(const TermFilter&, const TermFilter&) = default;
};

bool is_stopword(std::string_view lowercase_word);

// Porter (1980) suffix stripping for lower-case ASCII words. Words shorter
// than three characters or containing non-letters are returned unchanged.
std::string porter_stem(std::string_view lowercase_word);

// Normalized forms of the tokens after applying filter.
std::vector<std::string> filtered_terms(std::span<const Token> tokens,
                                        const TermFilter& filter);

// All contiguous length-n windows of items, in order, with multiplicity.
template <typename T>
std::vector<std::vector<T>> ngrams(std::span<const T> items, std::size_t n) {
  if (n == 0) throw InvalidArgument("ngrams: n must be >= 1");
  std::vector<std::vector<T>> out;
  if (items.size() < n) return out;
  out.reserve(items.size() - n + 1);
  for (std::size_t i = 0; i + n <= items.size(); ++i) {
    out.emplace_back(items.begin() + i, items.begin() + i + n);
  }
  return out;
}

template <typename T>
std::vector<std::vector<T>> ngrams(const std::vector<T>& items, std::size_t n) {
  return ngrams(std::span<const T>(items), n);
}

// Multiset view of ngrams(): n-gram -> multiplicity.
template <typename T>
std::map<std::vector<T>, std::size_t> ngram_counts(std::span<const T> items,
                                                   std::size_t n) {
  std::map<std::vector<T>, std::size_t> counts;
  for (auto& gram : ngrams(items, n)) ++counts[std::move(gram)];
  return counts;
}

}  // namespace mlsum

#endif  // MLSUM_TEXT_H_
