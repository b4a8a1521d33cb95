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
#include "mlsum/text.h"

#include <fstream>
#include <utility>

namespace mlsum {

ParseError::ParseError(std::string source, std::size_t line,
                       const std::string& what)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : "") +
                         ": " + what),
      source_(std::move(source)),
      line_(line) {}

namespace {

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }
bool is_upper(unsigned char c) { return c >= 'A' && c <= 'Z'; }
bool is_alpha(unsigned char c) {
  return (c >= 'a' && c <= 'z') || is_upper(c);
}
bool is_word(unsigned char c) { return is_alpha(c) || is_digit(c) || c >= 0x80; }
bool is_terminal(unsigned char c) { return c == '.' || c == '!' || c == '?'; }
bool is_closer(unsigned char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}';
}
bool is_opener(unsigned char c) {
  return c == '"' || c == '\'' || c == '(' || c == '[';
}

std::pair<std::size_t, std::size_t> trim(std::string_view s, std::size_t b,
                                         std::size_t e) {
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return {b, e};
}

// The whitespace-delimited word ending just before position dot, without
// leading opening punctuation.
std::string_view word_before(std::string_view s, std::size_t dot) {
  std::size_t b = dot;
  while (b > 0 && !is_space(s[b - 1])) --b;
  while (b < dot && (is_opener(s[b]) || s[b] == '-')) ++b;
  return s.substr(b, dot - b);
}

}  // namespace

std::vector<std::string> Sentence::normalized_tokens() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.normalized);
  return out;
}

AbbreviationList::AbbreviationList(std::set<std::string> entries) {
  for (const auto& e : entries) add(e);
}

void AbbreviationList::add(std::string_view abbreviation) {
  std::string a = ascii_lower(abbreviation);
  while (!a.empty() && a.back() == '.') a.pop_back();
  if (!a.empty()) entries_.insert(std::move(a));
}

bool AbbreviationList::contains(std::string_view word) const {
  std::string w = ascii_lower(word);
  while (!w.empty() && w.back() == '.') w.pop_back();
  return !w.empty() && entries_.count(w) > 0;
}

const AbbreviationList& AbbreviationList::Default() {
  static const AbbreviationList kDefault({
      "al", "approx", "ca", "cf", "dr", "e.g", "eq", "eqs", "fig", "figs",
      "i.e", "inc", "jr", "ltd", "mr", "mrs", "ms", "no", "prof", "ref",
      "refs", "resp", "sr", "st", "vol", "vs", "viz"});
  return kDefault;
}

AbbreviationList AbbreviationList::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open abbreviation list: " + path.string());
  AbbreviationList list;
  std::string line;
  while (std::getline(in, line)) {
    auto [b, e] = trim(line, 0, line.size());
    std::string_view entry(line.data() + b, e - b);
    if (entry.empty() || entry.front() == '#') continue;
    list.add(entry);
  }
  return list;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (is_upper(static_cast<unsigned char>(c))) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  const std::size_t n = text.size();
  auto at = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
  std::size_t i = 0;
  while (i < n) {
    if (!is_word(at(i))) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < n) {
      unsigned char c = at(j);
      if (is_word(c)) {
        ++j;
        continue;
      }
      bool has_next = j + 1 < n;
      if (c == '-' && has_next && is_word(at(j + 1))) {
        j += 2;
        continue;
      }
      if ((c == '.' || c == ',') && has_next && is_digit(at(j - 1)) &&
          is_digit(at(j + 1))) {
        j += 2;
        continue;
      }
      break;
    }
    std::string surface(text.substr(i, j - i));
    tokens.push_back(Token{surface, ascii_lower(surface), Span{i, j}});
    i = j;
  }
  return tokens;
}

std::vector<Sentence> segment_sentences(std::string_view raw,
                                        const AbbreviationList& abbreviations) {
  std::vector<Sentence> out;
  const std::size_t n = raw.size();
  auto at = [&](std::size_t i) { return static_cast<unsigned char>(raw[i]); };

  auto emit = [&](std::size_t b, std::size_t e) {
    auto [tb, te] = trim(raw, b, e);
    if (tb >= te) return;
    Sentence s;
    s.text = std::string(raw.substr(tb, te - tb));
    s.char_span = Span{tb, te};
    s.tokens = tokenize(s.text);
    if (s.tokens.empty()) return;
    s.index = out.size();
    out.push_back(std::move(s));
  };

  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (!is_terminal(at(i))) {
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    while (end < n && (is_terminal(at(end)) || is_closer(at(end)))) ++end;

    bool boundary = false;
    if (end == n) {
      boundary = true;
    } else if (is_space(at(end))) {
      std::size_t j = end;
      while (j < n && is_space(at(j))) ++j;
      boundary = j == n || is_upper(at(j)) || is_digit(at(j)) || is_opener(at(j));
    }
    if (boundary && at(i) == '.' && end == i + 1 &&
        abbreviations.contains(word_before(raw, i))) {
      boundary = false;
    }
    if (boundary) {
      emit(start, end);
      start = end;
    }
    i = end;
  }
  emit(start, n);
  return out;
}

Document make_document(std::string doc_id, std::string raw_text,
                       const AbbreviationList& abbreviations) {
  Document doc;
  doc.doc_id = std::move(doc_id);
  doc.raw_text = std::move(raw_text);
  doc.sentences = segment_sentences(doc.raw_text, abbreviations);
  return doc;
}

Document make_document_from_sentences(std::string doc_id,
                                      std::span<const std::string> sentences) {
  Document doc;
  doc.doc_id = std::move(doc_id);
  for (const auto& text : sentences) {
    auto [b, e] = trim(text, 0, text.size());
    if (b >= e) continue;
    Sentence s;
    s.text = text.substr(b, e - b);
    s.tokens = tokenize(s.text);
    if (s.tokens.empty()) continue;
    if (!doc.raw_text.empty()) doc.raw_text += ' ';
    s.char_span = Span{doc.raw_text.size(), doc.raw_text.size() + s.text.size()};
    doc.raw_text += s.text;
    s.index = doc.sentences.size();
    doc.sentences.push_back(std::move(s));
  }
  return doc;
}

}  // namespace mlsum
