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
// Slow, independent reference implementations used only by tests.
#ifndef MLSUM_TESTS_SUPPORT_ORACLES_H_
#define MLSUM_TESTS_SUPPORT_ORACLES_H_

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mlsum/matrix.h"

namespace mlsum::oracle {

// Dice over n-gram multisets by pairing each n-gram of a with an unused
// identical n-gram of b.
template <typename T>
double dice(const std::vector<T>& a, const std::vector<T>& b, std::size_t n) {
  auto grams = [n](const std::vector<T>& s) {
    std::vector<std::vector<T>> out;
    for (std::size_t i = 0; i + n <= s.size(); ++i) {
      out.emplace_back(s.begin() + static_cast<std::ptrdiff_t>(i),
                       s.begin() + static_cast<std::ptrdiff_t>(i + n));
    }
    return out;
  };
  const auto ga = grams(a);
  const auto gb = grams(b);
  if (ga.empty() && gb.empty()) return 0.0;
  std::vector<bool> used(gb.size(), false);
  std::size_t shared = 0;
  for (const auto& g : ga) {
    for (std::size_t j = 0; j < gb.size(); ++j) {
      if (!used[j] && gb[j] == g) {
        used[j] = true;
        ++shared;
        break;
      }
    }
  }
  return 2.0 * static_cast<double>(shared) / static_cast<double>(ga.size() + gb.size());
}

// Full-table LCS over suffixes.
inline std::size_t lcs(const std::vector<std::string>& x, const std::vector<std::string>& y) {
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  std::vector<std::vector<std::size_t>> t(m + 1, std::vector<std::size_t>(n + 1, 0));
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      t[i][j] = x[i] == y[j] ? t[i + 1][j + 1] + 1 : std::max(t[i + 1][j], t[i][j + 1]);
    }
  }
  return t[0][0];
}

// Skip-bigrams with at most max_skip intervening tokens, plus unigrams
// (encoded as a pair with an empty second element).
inline std::vector<std::pair<std::string, std::string>> skip_units(
    const std::vector<std::string>& s, std::size_t max_skip) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.emplace_back(s[i], std::string());
    for (std::size_t j = i + 1; j < s.size() && j - i - 1 <= max_skip; ++j) {
      out.emplace_back(s[i], s[j]);
    }
  }
  return out;
}

struct Prf {
  double recall = 0.0;
  double precision = 0.0;
  double f = 0.0;
};

inline Prf su_scores(const std::vector<std::string>& sys, const std::vector<std::string>& ref,
                     std::size_t max_skip) {
  const auto s = skip_units(sys, max_skip);
  const auto r = skip_units(ref, max_skip);
  std::vector<bool> used(r.size(), false);
  double hits = 0.0;
  for (const auto& u : s) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (!used[j] && r[j] == u) {
        used[j] = true;
        hits += 1.0;
        break;
      }
    }
  }
  Prf out;
  if (s.empty() || r.empty()) return out;
  out.recall = hits / static_cast<double>(r.size());
  out.precision = hits / static_cast<double>(s.size());
  out.f = hits > 0.0 ? 2.0 * out.recall * out.precision / (out.recall + out.precision) : 0.0;
  return out;
}

// Two-sided exact p of the signed-rank statistic by visiting every sign
// assignment. Ranks of |d| are averaged over ties.
inline double wilcoxon_enumerated_p(const std::vector<double>& diffs) {
  std::vector<double> d;
  for (double v : diffs) {
    if (v != 0.0) d.push_back(v);
  }
  const std::size_t n = d.size();
  std::vector<double> rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    double less = 0.0;
    double equal = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::fabs(d[j]) < std::fabs(d[i])) less += 1.0;
      if (std::fabs(d[j]) == std::fabs(d[i])) equal += 1.0;
    }
    rank[i] = less + (equal + 1.0) / 2.0;
  }
  double total = 0.0;
  double observed = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    total += rank[i];
    if (d[i] > 0.0) observed += rank[i];
  }
  const double centre = total / 2.0;
  const double distance = std::fabs(observed - centre);
  std::uint64_t extreme = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    double w = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) w += rank[i];
    }
    if (std::fabs(w - centre) >= distance - 1e-9) ++extreme;
  }
  return static_cast<double>(extreme) / static_cast<double>(count);
}

inline Eigen::MatrixXd to_eigen(const DenseMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
    }
  }
  return out;
}

// PageRank as the solution of (I - d P) x = (1 - d)/n 1 where P is the
// column-stochastic transition matrix (A(i, j) weights the link j -> i)
// and empty columns jump uniformly.
inline std::vector<double> pagerank_solve(const DenseMatrix& a, double d) {
  const Eigen::Index n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXd p = to_eigen(a);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double s = p.col(j).sum();
    if (s > 0.0) {
      p.col(j) /= s;
    } else {
      p.col(j).setConstant(1.0 / static_cast<double>(n));
    }
  }
  const Eigen::MatrixXd lhs = Eigen::MatrixXd::Identity(n, n) - d * p;
  const Eigen::VectorXd rhs = Eigen::VectorXd::Constant(n, (1.0 - d) / static_cast<double>(n));
  Eigen::VectorXd x = lhs.partialPivLu().solve(rhs);
  x /= x.sum();
  return {x.data(), x.data() + n};
}

struct FixedPoint {
  std::vector<double> x;
  std::vector<double> z;
  bool converged = false;
};

// Coupled node/layer fixed point iterated with a Jacobi schedule: both
// updates read the previous iterate.
//   W_a = sum of layer a,  B_ai = column i sum of layer a / W_a
//   G = sum_a A_a z_a,     k_j = row j sum of G
//   x'_i = d sum_j G_ji / k_j x_j + (1 - d)/n  (empty rows jump uniformly)
//   z'_a = W_a (B x)_a / mean_b W_b (B x)_b
inline FixedPoint multirank_jacobi(const std::vector<DenseMatrix>& layers, double d,
                                   double tol = 1e-13, int max_iter = 200000) {
  const Eigen::Index n = static_cast<Eigen::Index>(layers.front().rows());
  const Eigen::Index m = static_cast<Eigen::Index>(layers.size());
  std::vector<Eigen::MatrixXd> a;
  Eigen::VectorXd w(m);
  Eigen::MatrixXd b(m, n);
  for (Eigen::Index k = 0; k < m; ++k) {
    a.push_back(to_eigen(layers[static_cast<std::size_t>(k)]));
    w(k) = a.back().sum();
    const Eigen::RowVectorXd cols = a.back().colwise().sum();
    b.row(k) = w(k) > 0.0 ? Eigen::RowVectorXd(cols / w(k)) : Eigen::RowVectorXd::Zero(n);
  }
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  Eigen::VectorXd z = Eigen::VectorXd::Ones(m);
  FixedPoint out;
  for (int it = 0; it < max_iter; ++it) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index k = 0; k < m; ++k) g += a[static_cast<std::size_t>(k)] * z(k);
    Eigen::VectorXd xn = Eigen::VectorXd::Constant(n, (1.0 - d) / static_cast<double>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
      const double kj = g.row(j).sum();
      if (kj > 0.0) {
        xn += d * x(j) / kj * g.row(j).transpose();
      } else {
        xn.array() += d * x(j) / static_cast<double>(n);
      }
    }
    xn /= xn.sum();
    Eigen::VectorXd zn = (w.array() * (b * x).array()).matrix();
    const double omega = zn.mean();
    if (omega > 0.0) {
      zn /= omega;
    } else {
      zn.setOnes();
    }
    const double rx = (xn - x).lpNorm<1>();
    const double rz = (zn - z).lpNorm<1>();
    x = xn;
    z = zn;
    if (rx < tol && rz < tol) {
      out.converged = true;
      break;
    }
  }
  out.x.assign(x.data(), x.data() + n);
  out.z.assign(z.data(), z.data() + m);
  return out;
}

}  // namespace mlsum::oracle

#endif  // MLSUM_TESTS_SUPPORT_ORACLES_H_
