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
#include "mlsum/selection.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>

#include "json.hpp"
#include "mlsum/text.h"

namespace mlsum {

void SummaryConfig::validate() const {
  if (!(compression_rate > 0.0 && compression_rate <= 1.0)) {
    throw InvalidArgument("summary config: compression rate must lie in (0, 1]");
  }
  if (!std::isfinite(gamma) || !std::isfinite(theta)) {
    throw InvalidArgument("summary config: gamma and theta must be finite");
  }
  if (!allow_extreme_weights &&
      (gamma < -1.0 || gamma > 1.0 || theta < -1.0 || theta > 1.0)) {
    throw InvalidArgument(
        "summary config: gamma and theta must lie in [-1, 1] unless extreme weights are allowed");
  }
}

std::vector<std::size_t> Summary::indices() const {
  std::vector<std::size_t> out;
  out.reserve(selected.size());
  for (const auto& s : selected) out.push_back(s.index);
  return out;
}

std::vector<double> len_con(const AnnotatedDocument& doc) {
  std::vector<double> counts(doc.size(), 0.0);
  for (const auto& m : doc.concept_mentions) {
    if (m.sentence_index < counts.size()) counts[m.sentence_index] += 1.0;
  }
  const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  if (total > 0.0) {
    for (double& c : counts) c /= total;
  }
  return counts;
}

std::vector<double> min_max_normalize(std::span<const double> v) {
  if (v.empty()) throw InvalidArgument("min_max_normalize: empty vector");
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double min = *lo;
  const double range = *hi - min;
  std::vector<double> out(v.size(), 0.0);
  if (range > 0.0) {
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - min) / range;
  }
  return out;
}

std::vector<std::size_t> rank_descending(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });
  return order;
}

std::vector<std::size_t> score_basic(std::span<const double> x) {
  return rank_descending(x);
}

std::vector<double> score_enhanced(std::span<const double> x,
                                   std::span<const double> lencon, double gamma,
                                   double theta, CentralityTerm term) {
  if (x.size() != lencon.size()) {
    throw InvalidArgument("score_enhanced: centrality and lencon lengths differ");
  }
  if (x.empty()) throw InvalidArgument("score_enhanced: empty input");
  std::vector<double> central;
  if (term == CentralityTerm::Value) {
    central = min_max_normalize(x);
  } else {
    const std::size_t n = x.size();
    central.assign(n, 0.0);
    if (n > 1) {
      const auto order = rank_descending(x);
      for (std::size_t pos = 0; pos < n; ++pos) {
        central[order[pos]] = static_cast<double>(n - 1 - pos) / static_cast<double>(n - 1);
      }
    }
  }
  std::vector<double> combined(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    combined[i] = gamma * central[i] + theta * lencon[i];
  }
  return min_max_normalize(combined);
}

std::vector<double> sentence_scores(std::span<const double> x,
                                    std::span<const double> lencon,
                                    const SummaryConfig& cfg) {
  if (cfg.mode == SelectionMode::Basic) return min_max_normalize(x);
  return score_enhanced(x, lencon, cfg.gamma, cfg.theta, cfg.centrality_term);
}

std::size_t target_count(std::size_t n_sentences, double rate) {
  if (n_sentences == 0) return 0;
  // The epsilon keeps products such as 0.35 * 10 = 3.4999999999999996 on
  // the intended side of the half.
  const double raw = std::floor(rate * static_cast<double>(n_sentences) + 0.5 + 1e-9);
  const auto k = static_cast<std::size_t>(std::max(1.0, raw));
  return std::min(k, n_sentences);
}

Summary select(std::span<const double> scores, const Document& doc,
               const SummaryConfig& cfg) {
  cfg.validate();
  if (scores.size() != doc.size()) {
    throw InvalidArgument("select: one score per sentence required");
  }
  Summary out;
  out.doc_id = doc.doc_id;
  if (doc.empty()) return out;
  const std::size_t k = target_count(doc.size(), cfg.compression_rate);
  auto order = rank_descending(scores);
  order.resize(k);
  if (cfg.output_order == OutputOrder::Document) std::sort(order.begin(), order.end());
  for (std::size_t idx : order) {
    out.selected.push_back(SelectedSentence{idx, scores[idx]});
    out.sentences.push_back(doc.sentences[idx].text);
    if (!out.text.empty()) out.text += ' ';
    out.text += doc.sentences[idx].text;
  }
  return out;
}

void write_summary_json(std::ostream& out, const Summary& summary) {
  nlohmann::ordered_json j;
  j["doc_id"] = summary.doc_id;
  j["k"] = summary.k();
  auto indices = nlohmann::ordered_json::array();
  auto scores = nlohmann::ordered_json::array();
  for (const auto& s : summary.selected) {
    indices.push_back(s.index);
    scores.push_back(s.score);
  }
  j["indices"] = std::move(indices);
  j["scores"] = std::move(scores);
  j["text"] = summary.text;
  j["sentences"] = summary.sentences;
  out << j.dump(2) << '\n';
}

void write_summary_text(std::ostream& out, const Summary& summary) {
  for (const auto& s : summary.sentences) out << s << '\n';
}

Summary read_summary_json(std::istream& in, const std::string& source_name) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source_name, 0, e.what());
  }
  try {
    Summary s;
    s.doc_id = j.at("doc_id").get<std::string>();
    s.text = j.at("text").get<std::string>();
    const auto indices = j.at("indices").get<std::vector<std::size_t>>();
    const auto scores = j.value("scores", std::vector<double>(indices.size(), 0.0));
    if (scores.size() != indices.size()) {
      throw ParseError(source_name, 0, "'indices' and 'scores' differ in length");
    }
    for (std::size_t i = 0; i < indices.size(); ++i) {
      s.selected.push_back(SelectedSentence{indices[i], scores[i]});
    }
    if (j.contains("sentences")) {
      s.sentences = j.at("sentences").get<std::vector<std::string>>();
    } else {
      for (const auto& sent : segment_sentences(s.text)) s.sentences.push_back(sent.text);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source_name, 0, e.what());
  }
}

std::string_view to_string(SelectionMode mode) {
  return mode == SelectionMode::Basic ? "basic" : "enhanced";
}
std::string_view to_string(CentralityTerm term) {
  return term == CentralityTerm::Value ? "value" : "rank";
}
std::string_view to_string(OutputOrder order) {
  return order == OutputOrder::Document ? "document" : "score";
}

}  // namespace mlsum
