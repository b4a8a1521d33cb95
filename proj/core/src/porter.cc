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
// Porter stemmer, following the structure of the reference ANSI C
// implementation (including its "bli" -> "ble" and "logi" -> "log" rules).

#include <array>
#include <string>
#include <string_view>

#include "mlsum/text.h"

namespace mlsum {

namespace {

class PorterStemmer {
 public:
  explicit PorterStemmer(std::string_view word) : b_(word), k_(static_cast<int>(word.size()) - 1) {}

  std::string Run() {
    if (k_ <= 1) return b_;
    Step1ab();
    if (k_ > 0) {
      Step1c();
      Step2();
      Step3();
      Step4();
      Step5();
    }
    return b_.substr(0, static_cast<std::size_t>(k_ + 1));
  }

 private:
  char at(int i) const { return b_[static_cast<std::size_t>(i)]; }

  bool cons(int i) const {
    switch (at(i)) {
      case 'a':
      case 'e':
      case 'i':
      case 'o':
      case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b[0..j].
  int m() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool double_consonant(int j) const {
    if (j < 1) return false;
    if (at(j) != at(j - 1)) return false;
    return cons(j);
  }

  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char ch = at(i);
    return !(ch == 'w' || ch == 'x' || ch == 'y');
  }

  bool ends(std::string_view s) {
    const int len = static_cast<int>(s.size());
    if (len > k_ + 1) return false;
    if (b_.compare(static_cast<std::size_t>(k_ - len + 1), s.size(), s) != 0) return false;
    j_ = k_ - len;
    return true;
  }

  void set_to(std::string_view s) {
    b_.replace(static_cast<std::size_t>(j_ + 1), static_cast<std::size_t>(k_ - j_), s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void r(std::string_view s) {
    if (m() > 0) set_to(s);
  }

  void Step1ab() {
    if (at(k_) == 's') {
      if (ends("sses")) {
        k_ -= 2;
      } else if (ends("ies")) {
        set_to("i");
      } else if (at(k_ - 1) != 's') {
        --k_;
      }
    }
    if (ends("eed")) {
      if (m() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_consonant(k_)) {
        --k_;
        const char ch = at(k_);
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else if (m() == 1 && cvc(k_)) {
        set_to("e");
      }
    }
  }

  void Step1c() {
    if (ends("y") && vowel_in_stem()) b_[static_cast<std::size_t>(k_)] = 'i';
  }

  struct Rule {
    std::string_view suffix;
    std::string_view replacement;
  };

  template <std::size_t N>
  bool apply_first(const std::array<Rule, N>& rules) {
    for (const auto& rule : rules) {
      if (ends(rule.suffix)) {
        r(rule.replacement);
        return true;
      }
    }
    return false;
  }

  void Step2() {
    if (k_ < 1) return;
    switch (at(k_ - 1)) {
      case 'a':
        apply_first(std::array<Rule, 2>{{{"ational", "ate"}, {"tional", "tion"}}});
        break;
      case 'c':
        apply_first(std::array<Rule, 2>{{{"enci", "ence"}, {"anci", "ance"}}});
        break;
      case 'e':
        apply_first(std::array<Rule, 1>{{{"izer", "ize"}}});
        break;
      case 'l':
        apply_first(std::array<Rule, 5>{
            {{"bli", "ble"}, {"alli", "al"}, {"entli", "ent"}, {"eli", "e"}, {"ousli", "ous"}}});
        break;
      case 'o':
        apply_first(std::array<Rule, 3>{{{"ization", "ize"}, {"ation", "ate"}, {"ator", "ate"}}});
        break;
      case 's':
        apply_first(std::array<Rule, 4>{{{"alism", "al"},
                                         {"iveness", "ive"},
                                         {"fulness", "ful"},
                                         {"ousness", "ous"}}});
        break;
      case 't':
        apply_first(std::array<Rule, 3>{{{"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}}});
        break;
      case 'g':
        apply_first(std::array<Rule, 1>{{{"logi", "log"}}});
        break;
      default:
        break;
    }
  }

  void Step3() {
    switch (at(k_)) {
      case 'e':
        apply_first(std::array<Rule, 3>{{{"icate", "ic"}, {"ative", ""}, {"alize", "al"}}});
        break;
      case 'i':
        apply_first(std::array<Rule, 1>{{{"iciti", "ic"}}});
        break;
      case 'l':
        apply_first(std::array<Rule, 2>{{{"ical", "ic"}, {"ful", ""}}});
        break;
      case 's':
        apply_first(std::array<Rule, 1>{{{"ness", ""}}});
        break;
      default:
        break;
    }
  }

  void Step4() {
    if (k_ < 1) return;
    bool matched = false;
    switch (at(k_ - 1)) {
      case 'a':
        matched = ends("al");
        break;
      case 'c':
        matched = ends("ance") || ends("ence");
        break;
      case 'e':
        matched = ends("er");
        break;
      case 'i':
        matched = ends("ic");
        break;
      case 'l':
        matched = ends("able") || ends("ible");
        break;
      case 'n':
        matched = ends("ant") || ends("ement") || ends("ment") || ends("ent");
        break;
      case 'o':
        if (ends("ion") && j_ >= 0 && (at(j_) == 's' || at(j_) == 't')) {
          matched = true;
        } else {
          matched = ends("ou");
        }
        break;
      case 's':
        matched = ends("ism");
        break;
      case 't':
        matched = ends("ate") || ends("iti");
        break;
      case 'u':
        matched = ends("ous");
        break;
      case 'v':
        matched = ends("ive");
        break;
      case 'z':
        matched = ends("ize");
        break;
      default:
        break;
    }
    if (matched && m() > 1) k_ = j_;
  }

  void Step5() {
    j_ = k_;
    if (at(k_) == 'e') {
      const int a = m();
      if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
    }
    if (at(k_) == 'l' && double_consonant(k_) && m() > 1) --k_;
  }

  std::string b_;
  int k_;
  int j_ = 0;
};

}  // namespace

std::string porter_stem(std::string_view word) {
  if (word.size() < 3) return std::string(word);
  for (char c : word) {
    if (c < 'a' || c > 'z') return std::string(word);
  }
  return PorterStemmer(word).Run();
}

bool is_stopword(std::string_view w) {
  static constexpr std::array<std::string_view, 64> kStopwords = {
      "a",     "about", "after", "all",   "also",  "an",    "and",   "any",
      "are",   "as",    "at",    "be",    "been",  "being", "but",   "by",
      "can",   "could", "did",   "do",    "does",  "for",   "from",  "had",
      "has",   "have",  "he",    "her",   "his",   "how",   "if",    "in",
      "into",  "is",    "it",    "its",   "may",   "more",  "no",    "not",
      "of",    "on",    "or",    "other", "our",   "she",   "should", "so",
      "such",  "than",  "that",  "the",   "their", "there", "these", "they",
      "this",  "to",    "was",   "we",    "were",  "which", "with",  "would"};
  for (auto s : kStopwords) {
    if (s == w) return true;
  }
  return false;
}

std::vector<std::string> filtered_terms(std::span<const Token> tokens,
                                        const TermFilter& filter) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (filter.remove_stopwords && is_stopword(t.normalized)) continue;
    out.push_back(filter.stem ? porter_stem(t.normalized) : t.normalized);
  }
  return out;
}

}  // namespace mlsum
