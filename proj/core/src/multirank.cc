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
#include "mlsum/multirank.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>

#include "mlsum/error.h"

namespace mlsum {

namespace {

void check_layers(std::span<const DenseMatrix> layers) {
  if (layers.empty()) throw InvalidArgument("multirank: at least one layer required");
  const std::size_t n = layers.front().rows();
  if (n == 0) throw InvalidArgument("multirank: graph has no nodes");
  for (const auto& a : layers) {
    if (a.rows() != n || a.cols() != n) {
      throw InvalidArgument("multirank: layers must be square and of equal size");
    }
  }
}

void normalize_to_unit_sum(std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  if (s > 0.0) {
    for (double& x : v) x /= s;
  } else {
    for (double& x : v) x = 1.0 / static_cast<double>(v.size());
  }
}

// One damped walk step on a weighted matrix whose row j holds the
// out-links of node j (weight m(j, i) for j -> i).
std::vector<double> walk_step(const DenseMatrix& m, std::span<const double> x,
                              double damping) {
  const std::size_t n = x.size();
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<double> next(n, (1.0 - damping) * inv_n);
  double dangling = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double k = m.row_sum(j);
    if (k > 0.0) {
      const double coef = damping * x[j] / k;
      const auto row = m.row(j);
      for (std::size_t i = 0; i < n; ++i) next[i] += row[i] * coef;
    } else {
      dangling += x[j];
    }
  }
  if (dangling > 0.0) {
    const double share = damping * dangling * inv_n;
    for (double& v : next) v += share;
  }
  normalize_to_unit_sum(next);
  return next;
}

std::vector<double> layer_influence(const DerivedNetworks& nets,
                                    std::span<const double> x) {
  const std::size_t m = nets.layer_weights.size();
  std::vector<double> z(m, 0.0);
  double total = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    double participation = 0.0;
    const auto row = nets.bipartite.row(a);
    for (std::size_t i = 0; i < x.size(); ++i) participation += row[i] * x[i];
    z[a] = nets.layer_weights[a] * participation;
    total += z[a];
  }
  const double omega = total / static_cast<double>(m);
  if (omega > 0.0) {
    for (double& v : z) v /= omega;
  } else {
    std::fill(z.begin(), z.end(), 1.0);
  }
  return z;
}

}  // namespace

void MultiRankParams::validate() const {
  if (!(damping > 0.0 && damping < 1.0)) {
    throw InvalidArgument("multirank: damping must lie in (0, 1)");
  }
  if (!(tolerance > 0.0)) throw InvalidArgument("multirank: tolerance must be > 0");
  if (max_iterations == 0) throw InvalidArgument("multirank: max_iterations must be >= 1");
}

DerivedNetworks derive_networks(std::span<const DenseMatrix> layers,
                                std::span<const double> z) {
  check_layers(layers);
  if (z.size() != layers.size()) {
    throw InvalidArgument("derive_networks: one influence per layer required");
  }
  const std::size_t n = layers.front().rows();
  const std::size_t m = layers.size();
  DerivedNetworks out{std::vector<double>(m, 0.0), DenseMatrix(m, n), DenseMatrix::Square(n)};
  for (std::size_t a = 0; a < m; ++a) {
    if (z[a] < 0.0) throw InvalidArgument("derive_networks: influences must be nonnegative");
    const auto& adj = layers[a];
    out.layer_weights[a] = adj.sum();
    const double w = out.layer_weights[a];
    for (std::size_t i = 0; i < n; ++i) {
      out.bipartite(a, i) = w > 0.0 ? adj.col_sum(i) / w : 0.0;
      for (std::size_t j = 0; j < n; ++j) out.colored(i, j) += adj(i, j) * z[a];
    }
  }
  return out;
}

DerivedNetworks derive_networks(const MultiLayerGraph& g, std::span<const double> z) {
  return derive_networks(g.adjacency(), z);
}

CentralityResult multirank(std::span<const DenseMatrix> layers,
                           const MultiRankParams& params) {
  params.validate();
  check_layers(layers);
  const std::size_t n = layers.front().rows();
  const std::size_t m = layers.size();

  CentralityResult result;
  result.x.assign(n, 1.0 / static_cast<double>(n));
  result.z.assign(m, 1.0);
  result.final_residual = std::numeric_limits<double>::infinity();

  for (std::size_t it = 1; it <= params.max_iterations; ++it) {
    const DerivedNetworks nets = derive_networks(layers, result.z);
    std::vector<double> x = walk_step(nets.colored, result.x, params.damping);
    std::vector<double> z = layer_influence(nets, x);

    ConvergenceStep step{it, l1_distance(x, result.x), l1_distance(z, result.z)};
    result.trace.push_back(step);
    result.x = std::move(x);
    result.z = std::move(z);
    result.iterations = it;
    result.final_residual = std::max(step.residual_x, step.residual_z);
    if (step.residual_x < params.tolerance && step.residual_z < params.tolerance) {
      result.converged = true;
      break;
    }
  }
  return result;
}

CentralityResult multirank(const MultiLayerGraph& g, const MultiRankParams& params) {
  return multirank(g.adjacency(), params);
}

std::vector<double> pagerank(const DenseMatrix& adjacency, const PageRankOptions& options) {
  const std::size_t n = adjacency.rows();
  if (n == 0 || adjacency.cols() != n) {
    throw InvalidArgument("pagerank: adjacency must be a nonempty square matrix");
  }
  if (!(options.damping > 0.0 && options.damping < 1.0)) {
    throw InvalidArgument("pagerank: damping must lie in (0, 1)");
  }
  // walk_step reads out-links from rows; column j of adjacency holds the
  // out-links of j.
  DenseMatrix out_links = DenseMatrix::Square(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double w = adjacency(i, j);
      if (!std::isfinite(w) || w < 0.0) {
        throw InvalidArgument("pagerank: weights must be finite and nonnegative");
      }
      out_links(j, i) = w;
    }
  }
  std::vector<double> x(n, 1.0 / static_cast<double>(n));
  for (std::size_t it = 0; it < options.max_iterations; ++it) {
    std::vector<double> next = walk_step(out_links, x, options.damping);
    const double residual = l1_distance(next, x);
    x = std::move(next);
    if (residual < options.tolerance) break;
  }
  return x;
}

std::vector<double> pagerank(const DenseMatrix& adjacency, double damping) {
  PageRankOptions options;
  options.damping = damping;
  return pagerank(adjacency, options);
}

void write_trace_csv(std::ostream& out, const CentralityResult& result) {
  out << "iteration,residual_x,residual_z\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (const auto& s : result.trace) {
    out << s.iteration << ',' << s.residual_x << ',' << s.residual_z << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace mlsum
