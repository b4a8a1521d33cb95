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
#include "mlsum/rouge.h"

#include <algorithm>
#include <map>
#include <set>

namespace mlsum {

namespace {

using Gram = std::vector<std::string>;

std::size_t clipped_overlap(const std::map<Gram, std::size_t>& a,
                            const std::map<Gram, std::size_t>& b) {
  std::size_t hits = 0;
  for (const auto& [gram, count] : a) {
    auto it = b.find(gram);
    if (it != b.end()) hits += std::min(count, it->second);
  }
  return hits;
}

std::size_t total(const std::map<Gram, std::size_t>& counts) {
  std::size_t t = 0;
  for (const auto& [gram, c] : counts) t += c;
  return t;
}

std::map<Gram, std::size_t> skip_bigram_counts(std::span<const std::string> tokens,
                                               std::size_t max_skip) {
  std::map<Gram, std::size_t> counts;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    ++counts[Gram{tokens[i]}];
    for (std::size_t j = i + 1; j < tokens.size() && j <= i + max_skip + 1; ++j) {
      ++counts[Gram{tokens[i], tokens[j]}];
    }
  }
  return counts;
}

std::vector<std::vector<std::string>> sentence_tokens(std::string_view text,
                                                      const TermFilter& filter) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : segment_sentences(text)) {
    auto toks = filtered_terms(s.tokens, filter);
    if (!toks.empty()) out.push_back(std::move(toks));
  }
  return out;
}

std::vector<std::string> flatten(std::span<const std::vector<std::string>> sentences) {
  std::vector<std::string> out;
  for (const auto& s : sentences) out.insert(out.end(), s.begin(), s.end());
  return out;
}

}  // namespace

RougeScore RougeScore::FromCounts(double hits, double reference_total, double system_total) {
  RougeScore s;
  s.recall = reference_total > 0.0 ? hits / reference_total : 0.0;
  s.precision = system_total > 0.0 ? hits / system_total : 0.0;
  const double pr = s.precision + s.recall;
  s.f_measure = pr > 0.0 ? 2.0 * s.precision * s.recall / pr : 0.0;
  return s;
}

std::string_view to_string(RougeMetric metric) {
  switch (metric) {
    case RougeMetric::Rouge1:
      return "ROUGE-1";
    case RougeMetric::Rouge2:
      return "ROUGE-2";
    case RougeMetric::RougeL:
      return "ROUGE-L";
    case RougeMetric::RougeSU4:
      return "ROUGE-SU4";
  }
  return "ROUGE-?";
}

std::optional<RougeMetric> parse_rouge_metric(std::string_view name) {
  for (auto m : kAllRougeMetrics) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

std::vector<std::string> rouge_tokens(std::string_view text, const TermFilter& filter) {
  return filtered_terms(tokenize(text), filter);
}

std::size_t lcs_length(std::span<const std::string> x, std::span<const std::string> y) {
  if (x.size() < y.size()) std::swap(x, y);
  std::vector<std::size_t> prev(y.size() + 1, 0);
  std::vector<std::size_t> cur(y.size() + 1, 0);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    for (std::size_t j = 1; j <= y.size(); ++j) {
      cur[j] = x[i - 1] == y[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

std::vector<std::size_t> lcs_positions(std::span<const std::string> x,
                                       std::span<const std::string> y) {
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  std::vector<std::size_t> table((m + 1) * (n + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return table[i * (n + 1) + j]; };
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      at(i, j) = x[i - 1] == y[j - 1] ? at(i - 1, j - 1) + 1
                                      : std::max(at(i - 1, j), at(i, j - 1));
    }
  }
  std::vector<std::size_t> positions;
  std::size_t i = m;
  std::size_t j = n;
  while (i > 0 && j > 0) {
    if (x[i - 1] == y[j - 1]) {
      positions.push_back(i - 1);
      --i;
      --j;
    } else if (at(i - 1, j) >= at(i, j - 1)) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(positions.begin(), positions.end());
  return positions;
}

RougeScore rouge_n(std::span<const std::string> system,
                   std::span<const std::string> reference, std::size_t n) {
  if (system.empty() || reference.empty()) {
    RougeScore s;
    s.empty_input = true;
    return s;
  }
  const auto sys = ngram_counts(system, n);
  const auto ref = ngram_counts(reference, n);
  return RougeScore::FromCounts(static_cast<double>(clipped_overlap(sys, ref)),
                                static_cast<double>(total(ref)),
                                static_cast<double>(total(sys)));
}

RougeScore rouge_su(std::span<const std::string> system,
                    std::span<const std::string> reference, std::size_t max_skip) {
  if (system.empty() || reference.empty()) {
    RougeScore s;
    s.empty_input = true;
    return s;
  }
  const auto sys = skip_bigram_counts(system, max_skip);
  const auto ref = skip_bigram_counts(reference, max_skip);
  return RougeScore::FromCounts(static_cast<double>(clipped_overlap(sys, ref)),
                                static_cast<double>(total(ref)),
                                static_cast<double>(total(sys)));
}

RougeScore rouge_l(std::span<const std::vector<std::string>> system_sentences,
                   std::span<const std::vector<std::string>> reference_sentences) {
  const auto sys_all = flatten(system_sentences);
  const auto ref_all = flatten(reference_sentences);
  if (sys_all.empty() || ref_all.empty()) {
    RougeScore s;
    s.empty_input = true;
    return s;
  }
  std::map<std::string, std::size_t> sys_left;
  std::map<std::string, std::size_t> ref_left;
  for (const auto& t : sys_all) ++sys_left[t];
  for (const auto& t : ref_all) ++ref_left[t];

  std::size_t hits = 0;
  for (const auto& ref : reference_sentences) {
    std::set<std::size_t> union_positions;
    for (const auto& sys : system_sentences) {
      for (std::size_t p : lcs_positions(ref, sys)) union_positions.insert(p);
    }
    for (std::size_t p : union_positions) {
      const auto& t = ref[p];
      auto& r = ref_left[t];
      auto& s = sys_left[t];
      if (r > 0 && s > 0) {
        ++hits;
        --r;
        --s;
      }
    }
  }
  return RougeScore::FromCounts(static_cast<double>(hits),
                                static_cast<double>(ref_all.size()),
                                static_cast<double>(sys_all.size()));
}

RougeScore rouge_n(std::string_view system, std::string_view reference, std::size_t n,
                   const TermFilter& filter) {
  return rouge_n(rouge_tokens(system, filter), rouge_tokens(reference, filter), n);
}

RougeScore rouge_su4(std::string_view system, std::string_view reference,
                     const TermFilter& filter) {
  return rouge_su(rouge_tokens(system, filter), rouge_tokens(reference, filter), 4);
}

RougeScore rouge_l(std::string_view system, std::string_view reference,
                   const TermFilter& filter) {
  return rouge_l(sentence_tokens(system, filter), sentence_tokens(reference, filter));
}

RougeReport evaluate_rouge(std::string doc_id, std::span<const std::string> system_sentences,
                           std::span<const std::string> reference_sentences,
                           const TermFilter& filter) {
  std::vector<std::vector<std::string>> sys;
  std::vector<std::vector<std::string>> ref;
  for (const auto& s : system_sentences) {
    auto t = rouge_tokens(s, filter);
    if (!t.empty()) sys.push_back(std::move(t));
  }
  for (const auto& s : reference_sentences) {
    auto t = rouge_tokens(s, filter);
    if (!t.empty()) ref.push_back(std::move(t));
  }
  const auto sys_flat = flatten(sys);
  const auto ref_flat = flatten(ref);
  RougeReport report;
  report.doc_id = std::move(doc_id);
  report[RougeMetric::Rouge1] = rouge_n(sys_flat, ref_flat, 1);
  report[RougeMetric::Rouge2] = rouge_n(sys_flat, ref_flat, 2);
  report[RougeMetric::RougeL] = rouge_l(sys, ref);
  report[RougeMetric::RougeSU4] = rouge_su(sys_flat, ref_flat, 4);
  return report;
}

RougeReport evaluate_rouge(std::string doc_id, std::string_view system_text,
                           std::string_view reference_text, const TermFilter& filter) {
  std::vector<std::string> sys;
  std::vector<std::string> ref;
  for (const auto& s : segment_sentences(system_text)) sys.push_back(s.text);
  for (const auto& s : segment_sentences(reference_text)) ref.push_back(s.text);
  return evaluate_rouge(std::move(doc_id), sys, ref, filter);
}

}  // namespace mlsum
