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
#ifndef MLSUM_WILCOXON_H_
#define MLSUM_WILCOXON_H_

#include <cstddef>
#include <span>
#include <vector>

#include "mlsum/error.h"

namespace mlsum {

enum class WilcoxonMethod {
  Auto,    // exact up to kWilcoxonExactMaxN nonzero differences, else normal
  Exact,   // exact null distribution at any n
  Normal,  // normal approximation with continuity and tie corrections
};

inline constexpr std::size_t kWilcoxonExactMaxN = 25;
inline constexpr std::size_t kWilcoxonMinN = 5;

struct WilcoxonResult {
  double statistic = 0.0;  // min(W+, W-)
  double p_value = 1.0;    // two-sided
  double w_plus = 0.0;
  std::size_t n_effective = 0;  // nonzero differences
  bool exact = false;
};

// Midranks (1-based) of values, ties sharing their average rank.
std::vector<double> average_ranks(std::span<const double> values);

// Paired two-sided signed-rank test on a - b. Zero differences are
// dropped and tied |differences| share average ranks. The exact branch
// counts sign assignments whose W+ lies at least as far from its null
// mean as the observed W+.
//
// Throws InvalidArgument when lengths differ and InsufficientData when
// fewer than kWilcoxonMinN differences are nonzero.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b,
                                    WilcoxonMethod method = WilcoxonMethod::Auto);

}  // namespace mlsum

#endif  // MLSUM_WILCOXON_H_
