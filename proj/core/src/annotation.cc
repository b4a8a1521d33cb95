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
#include "mlsum/annotation.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "json.hpp"

namespace mlsum {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t b = 0;
  while (true) {
    std::size_t e = line.find('\t', b);
    cols.push_back(line.substr(b, e == std::string::npos ? std::string::npos : e - b));
    if (e == std::string::npos) break;
    b = e + 1;
  }
  return cols;
}

std::vector<std::string> term_key(std::string_view term) {
  std::vector<std::string> key;
  for (auto& t : tokenize(term)) key.push_back(std::move(t.normalized));
  return key;
}

auto mention_order(const ConceptMention& m) {
  return std::tie(m.sentence_index, m.span.begin, m.span.end, m.concept_id);
}

// Field accessors for interchange records. Missing or mistyped fields are
// parse errors; out-of-range values are left to validation.
const nlohmann::json& field(const nlohmann::json& rec, const char* key,
                            const std::string& src, std::size_t line) {
  auto it = rec.find(key);
  if (it == rec.end()) {
    throw ParseError(src, line, std::string("missing field '") + key + "'");
  }
  return *it;
}

std::string string_field(const nlohmann::json& rec, const char* key,
                         const std::string& src, std::size_t line,
                         bool required = true) {
  if (!required && !rec.contains(key)) return {};
  const auto& v = field(rec, key, src, line);
  if (!v.is_string()) {
    throw ParseError(src, line, std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

long long int_field(const nlohmann::json& rec, const char* key,
                    const std::string& src, std::size_t line) {
  const auto& v = field(rec, key, src, line);
  if (!v.is_number_integer()) {
    throw ParseError(src, line, std::string("field '") + key + "' must be an integer");
  }
  return v.get<long long>();
}

MentionRef checked_ref(const nlohmann::json& rec, const Document& doc,
                       const std::string& src, std::size_t line,
                       const std::string& record_name) {
  long long si = int_field(rec, "sentence_index", src, line);
  long long start = int_field(rec, "start", src, line);
  long long end = int_field(rec, "end", src, line);
  std::ostringstream where;
  where << src << ":" << line << ": " << record_name << ": ";
  if (si < 0 || static_cast<std::size_t>(si) >= doc.size()) {
    where << "sentence_index " << si << " out of range (document '" << doc.doc_id
          << "' has " << doc.size() << " sentences)";
    throw ValidationError(where.str());
  }
  const std::size_t len = doc.sentences[static_cast<std::size_t>(si)].text.size();
  if (start < 0 || end <= start || static_cast<std::size_t>(end) > len) {
    where << "span [" << start << ", " << end << ") outside sentence "
          << si << " (length " << len << ")";
    throw ValidationError(where.str());
  }
  return MentionRef{static_cast<std::size_t>(si),
                    Span{static_cast<std::size_t>(start), static_cast<std::size_t>(end)}};
}

}  // namespace

bool Lexicon::add(std::string_view term, LexiconEntry entry) {
  auto key = term_key(term);
  if (key.empty()) throw InvalidArgument("lexicon term has no tokens: '" + std::string(term) + "'");
  if (entry.concept_id.empty()) {
    throw InvalidArgument("lexicon term '" + std::string(term) + "' has an empty concept id");
  }
  const std::size_t len = key.size();
  bool inserted = entries_.emplace(std::move(key), std::move(entry)).second;
  if (inserted) max_term_tokens_ = std::max(max_term_tokens_, len);
  return inserted;
}

Lexicon Lexicon::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon: " + path.string());
  return Parse(in, path.string());
}

Lexicon Lexicon::Parse(std::istream& in, const std::string& source_name) {
  Lexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto cols = split_tabs(line);
    if (line_no == 1 && ascii_lower(cols[0]) == "term") continue;  // header
    if (cols.size() < 2) {
      throw ParseError(source_name, line_no, "expected term<TAB>concept_id[<TAB>name<TAB>sem_type]");
    }
    LexiconEntry entry{cols[1], cols.size() > 2 ? cols[2] : cols[0],
                       cols.size() > 3 ? cols[3] : std::string()};
    try {
      lex.add(cols[0], std::move(entry));
    } catch (const InvalidArgument& e) {
      throw ParseError(source_name, line_no, e.what());
    }
  }
  return lex;
}

const LexiconEntry* Lexicon::find(std::span<const std::string> normalized_tokens) const {
  auto it = entries_.find(std::vector<std::string>(normalized_tokens.begin(),
                                                   normalized_tokens.end()));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<ConceptMention> annotate_concepts_dictionary(const Document& doc,
                                                         const Lexicon& lexicon) {
  std::vector<ConceptMention> out;
  if (lexicon.empty()) return out;
  for (const auto& sentence : doc.sentences) {
    const auto words = sentence.normalized_tokens();
    const std::span<const std::string> all(words);
    std::size_t i = 0;
    while (i < words.size()) {
      const std::size_t longest = std::min(lexicon.max_term_tokens(), words.size() - i);
      std::size_t matched = 0;
      for (std::size_t len = longest; len >= 1; --len) {
        if (const LexiconEntry* e = lexicon.find(all.subspan(i, len))) {
          out.push_back(ConceptMention{
              sentence.index,
              Span{sentence.tokens[i].span.begin, sentence.tokens[i + len - 1].span.end},
              e->concept_id, e->name, e->semantic_type});
          matched = len;
          break;
        }
      }
      i += matched > 0 ? matched : 1;
    }
  }
  return out;
}

std::vector<CorefChain> derive_coref_chains_fallback(
    const Document& /*doc*/, std::span<const ConceptMention> mentions) {
  std::map<std::string, std::vector<MentionRef>> groups;
  for (const auto& m : mentions) {
    groups[m.concept_id].push_back(MentionRef{m.sentence_index, m.span});
  }
  std::vector<CorefChain> chains;
  for (auto& [id, refs] : groups) {
    std::sort(refs.begin(), refs.end());
    refs.erase(std::unique(refs.begin(), refs.end()), refs.end());
    std::set<std::size_t> sentences;
    for (const auto& r : refs) sentences.insert(r.sentence_index);
    if (refs.size() >= 2 && sentences.size() >= 2) {
      chains.push_back(CorefChain{id, std::move(refs)});
    }
  }
  return chains;
}

std::vector<ConceptMention> merge_mentions(std::span<const ConceptMention> a,
                                           std::span<const ConceptMention> b) {
  std::vector<ConceptMention> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
    return mention_order(x) < mention_order(y);
  });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const auto& x, const auto& y) {
                          return mention_order(x) == mention_order(y);
                        }),
            all.end());
  return all;
}

AnnotatedDocument annotate_with_lexicon(Document doc, const Lexicon& lexicon) {
  AnnotatedDocument out;
  out.concept_mentions = annotate_concepts_dictionary(doc, lexicon);
  out.coref_chains = derive_coref_chains_fallback(doc, out.concept_mentions);
  out.document = std::move(doc);
  return out;
}

AnnotationSet load_annotations(const std::filesystem::path& path, const Document& doc) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open annotation file: " + path.string());
  return parse_annotations(in, path.string(), doc);
}

AnnotationSet parse_annotations(std::istream& in, const std::string& src,
                                const Document& doc) {
  AnnotationSet out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(src, line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!rec.is_object()) throw ParseError(src, line_no, "record must be a JSON object");
    const std::string kind = string_field(rec, "kind", src, line_no);
    const std::string doc_id = string_field(rec, "doc_id", src, line_no);
    if (kind == "mention") {
      ConceptMention m;
      m.concept_id = string_field(rec, "concept_id", src, line_no);
      m.preferred_name = string_field(rec, "name", src, line_no, false);
      m.semantic_type = string_field(rec, "sem_type", src, line_no, false);
      if (doc_id != doc.doc_id) continue;
      auto ref = checked_ref(rec, doc, src, line_no, "mention '" + m.concept_id + "'");
      if (m.concept_id.empty()) {
        throw ValidationError(src + ":" + std::to_string(line_no) + ": mention has an empty concept_id");
      }
      m.sentence_index = ref.sentence_index;
      m.span = ref.span;
      out.mentions.push_back(std::move(m));
    } else if (kind == "chain") {
      CorefChain chain;
      chain.chain_id = string_field(rec, "chain_id", src, line_no);
      const auto& refs = field(rec, "mentions", src, line_no);
      if (!refs.is_array()) throw ParseError(src, line_no, "field 'mentions' must be an array");
      for (const auto& r : refs) {
        if (!r.is_object()) throw ParseError(src, line_no, "chain mention must be an object");
        // Type-check every element before skipping foreign documents.
        int_field(r, "sentence_index", src, line_no);
        int_field(r, "start", src, line_no);
        int_field(r, "end", src, line_no);
      }
      if (doc_id != doc.doc_id) continue;
      for (const auto& r : refs) {
        chain.mentions.push_back(
            checked_ref(r, doc, src, line_no, "chain '" + chain.chain_id + "'"));
      }
      if (chain.mentions.size() < 2) {
        throw ValidationError(src + ":" + std::to_string(line_no) + ": chain '" +
                              chain.chain_id + "' has fewer than 2 mentions");
      }
      std::sort(chain.mentions.begin(), chain.mentions.end());
      out.chains.push_back(std::move(chain));
    } else {
      throw ParseError(src, line_no, "unknown record kind '" + kind + "'");
    }
  }
  return out;
}

void write_annotations(std::ostream& out, const std::string& doc_id,
                       std::span<const ConceptMention> mentions,
                       std::span<const CorefChain> chains) {
  for (const auto& m : mentions) {
    ordered_json rec;
    rec["kind"] = "mention";
    rec["doc_id"] = doc_id;
    rec["sentence_index"] = m.sentence_index;
    rec["start"] = m.span.begin;
    rec["end"] = m.span.end;
    rec["concept_id"] = m.concept_id;
    rec["name"] = m.preferred_name;
    rec["sem_type"] = m.semantic_type;
    out << rec.dump() << '\n';
  }
  for (const auto& c : chains) {
    ordered_json rec;
    rec["kind"] = "chain";
    rec["doc_id"] = doc_id;
    rec["chain_id"] = c.chain_id;
    ordered_json refs = ordered_json::array();
    for (const auto& r : c.mentions) {
      ordered_json j;
      j["sentence_index"] = r.sentence_index;
      j["start"] = r.span.begin;
      j["end"] = r.span.end;
      refs.push_back(std::move(j));
    }
    rec["mentions"] = std::move(refs);
    out << rec.dump() << '\n';
  }
}

}  // namespace mlsum
