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
#include "mlsum/wilcoxon.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mlsum/error.h"

namespace mlsum {

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && values[order[j]] == values[order[i]]) ++j;
    // Positions i..j-1 hold ranks i+1..j.
    const double avg = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t t = i; t < j; ++t) ranks[order[t]] = avg;
    i = j;
  }
  return ranks;
}

namespace {

double exact_p_value(std::span<const double> ranks, double w_plus) {
  // Ranks are multiples of 1/2, so twice each rank is an integer.
  std::vector<long long> doubled(ranks.size());
  long long total = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    doubled[i] = std::llround(2.0 * ranks[i]);
    total += doubled[i];
  }
  std::vector<double> ways(static_cast<std::size_t>(total) + 1, 0.0);
  ways[0] = 1.0;
  long long reach = 0;
  for (long long r : doubled) {
    for (long long s = reach; s >= 0; --s) {
      if (ways[static_cast<std::size_t>(s)] != 0.0) {
        ways[static_cast<std::size_t>(s + r)] += ways[static_cast<std::size_t>(s)];
      }
    }
    reach += r;
  }
  const long long observed = std::llround(2.0 * w_plus);
  const long long distance = std::llabs(2 * observed - total);
  double extreme = 0.0;
  for (long long s = 0; s <= total; ++s) {
    if (std::llabs(2 * s - total) >= distance) extreme += ways[static_cast<std::size_t>(s)];
  }
  const double p = extreme / std::ldexp(1.0, static_cast<int>(ranks.size()));
  return std::min(1.0, p);
}

double normal_p_value(std::span<const double> abs_diffs, double w_plus) {
  const double n = static_cast<double>(abs_diffs.size());
  const double mean = n * (n + 1.0) / 4.0;
  double variance = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
  std::vector<double> sorted(abs_diffs.begin(), abs_diffs.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i + 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    variance -= (t * t * t - t) / 48.0;
    i = j;
  }
  if (variance <= 0.0) return 1.0;
  const double z = (std::abs(w_plus - mean) - 0.5) / std::sqrt(variance);
  if (z <= 0.0) return 1.0;
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                    WilcoxonMethod method) {
  if (a.size() != b.size()) {
    throw InvalidArgument("wilcoxon: paired samples differ in length");
  }
  std::vector<double> diffs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (std::isnan(d)) throw InvalidArgument("wilcoxon: NaN in sample");
    if (d != 0.0) diffs.push_back(d);
  }
  if (diffs.size() < kWilcoxonMinN) {
    throw InsufficientData("wilcoxon: " + std::to_string(diffs.size()) +
                           " nonzero differences, need at least " +
                           std::to_string(kWilcoxonMinN));
  }
  std::vector<double> abs_diffs(diffs.size());
  std::transform(diffs.begin(), diffs.end(), abs_diffs.begin(),
                 [](double d) { return std::abs(d); });
  const auto ranks = average_ranks(abs_diffs);

  WilcoxonResult r;
  r.n_effective = diffs.size();
  double w_minus = 0.0;
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    (diffs[i] > 0.0 ? r.w_plus : w_minus) += ranks[i];
  }
  r.statistic = std::min(r.w_plus, w_minus);
  r.exact = method == WilcoxonMethod::Exact ||
            (method == WilcoxonMethod::Auto && r.n_effective <= kWilcoxonExactMaxN);
  r.p_value = r.exact ? exact_p_value(ranks, r.w_plus) : normal_p_value(abs_diffs, r.w_plus);
  return r;
}

}  // namespace mlsum
