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
#ifndef MLSUM_ROUGE_H_
#define MLSUM_ROUGE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mlsum/text.h"

namespace mlsum {

struct RougeScore {
  double recall = 0.0;
  double precision = 0.0;
  double f_measure = 0.0;
  // Set when the system or reference had no tokens; all values are 0 then.
  bool empty_input = false;

  static RougeScore FromCounts(double hits, double reference_total, double system_total);
};

enum class RougeMetric { Rouge1, Rouge2, RougeL, RougeSU4 };

inline constexpr std::array<RougeMetric, 4> kAllRougeMetrics = {
    RougeMetric::Rouge1, RougeMetric::Rouge2, RougeMetric::RougeL, RougeMetric::RougeSU4};

std::string_view to_string(RougeMetric metric);  // "ROUGE-1", ...
std::optional<RougeMetric> parse_rouge_metric(std::string_view name);

struct RougeReport {
  std::string doc_id;
  std::array<RougeScore, 4> scores{};

  RougeScore& operator[](RougeMetric m) { return scores[static_cast<std::size_t>(m)]; }
  const RougeScore& operator[](RougeMetric m) const {
    return scores[static_cast<std::size_t>(m)];
  }
};

// Lower-cased word tokens with punctuation removed, then filtered.
std::vector<std::string> rouge_tokens(std::string_view text, const TermFilter& filter = {});

std::size_t lcs_length(std::span<const std::string> x, std::span<const std::string> y);

// Positions of x that belong to one longest common subsequence of x and y,
// in increasing order.
std::vector<std::size_t> lcs_positions(std::span<const std::string> x,
                                       std::span<const std::string> y);

// Clipped n-gram overlap over the whole token sequences.
RougeScore rouge_n(std::span<const std::string> system,
                   std::span<const std::string> reference, std::size_t n);

// Skip-bigrams with at most max_skip intervening tokens, plus unigrams.
RougeScore rouge_su(std::span<const std::string> system,
                    std::span<const std::string> reference, std::size_t max_skip = 4);

// Summary-level ROUGE-L: for each reference sentence, the union of its
// LCS hits against every system sentence, clipped by token counts.
// Recall divides by the reference token count, precision by the system
// token count.
RougeScore rouge_l(std::span<const std::vector<std::string>> system_sentences,
                   std::span<const std::vector<std::string>> reference_sentences);

// Text-level conveniences: texts are split into sentences, then tokenized.
RougeScore rouge_n(std::string_view system, std::string_view reference, std::size_t n,
                   const TermFilter& filter = {});
RougeScore rouge_su4(std::string_view system, std::string_view reference,
                     const TermFilter& filter = {});
RougeScore rouge_l(std::string_view system, std::string_view reference,
                   const TermFilter& filter = {});

// All four metrics for one document.
RougeReport evaluate_rouge(std::string doc_id, std::span<const std::string> system_sentences,
                           std::span<const std::string> reference_sentences,
                           const TermFilter& filter = {});
RougeReport evaluate_rouge(std::string doc_id, std::string_view system_text,
                           std::string_view reference_text, const TermFilter& filter = {});

}  // namespace mlsum

#endif  // MLSUM_ROUGE_H_
