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
#ifndef MLSUM_MULTIRANK_H_
#define MLSUM_MULTIRANK_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "mlsum/graph.h"
#include "mlsum/matrix.h"

namespace mlsum {

// Networks derived from a multiplex graph for a given layer-influence
// vector z:
//   layer_weights[a] = sum_ij A[a](i, j)                  (aggregate)
//   bipartite(a, i)  = sum_j A[a](j, i) / layer_weights[a] (0 if weight is 0)
//   colored(i, j)    = sum_a A[a](i, j) * z[a]
struct DerivedNetworks {
  std::vector<double> layer_weights;
  DenseMatrix bipartite;  // layers x nodes
  DenseMatrix colored;    // nodes x nodes
};

DerivedNetworks derive_networks(std::span<const DenseMatrix> layers,
                                std::span<const double> z);
DerivedNetworks derive_networks(const MultiLayerGraph& g, std::span<const double> z);

struct MultiRankParams {
  double damping = 0.85;
  double tolerance = 1e-9;  // on the L1 change of both x and z
  std::size_t max_iterations = 1000;

  void validate() const;
};

struct ConvergenceStep {
  std::size_t iteration = 0;
  double residual_x = 0.0;
  double residual_z = 0.0;
};

struct CentralityResult {
  std::vector<double> x;  // node centralities, sum to 1
  std::vector<double> z;  // layer influences, sum to the number of layers
  std::size_t iterations = 0;
  double final_residual = 0.0;  // max of the last x and z residuals
  bool converged = false;
  std::vector<ConvergenceStep> trace;
};

// Coupled fixed point for node centralities x and layer influences z.
//
// Starting from x = 1/n and z = 1, each iteration
//   1. rebuilds the colored network G from the current z,
//   2. takes one damped random-walk step
//        x'_i = d * sum_j G(j, i) / k_j * x_j + (1 - d) / n,
//      with k_j = sum_i G(j, i); nodes with k_j = 0 spread their mass
//      uniformly. x' is renormalised to sum to 1,
//   3. sets z'_a = W_a * sum_i B(a, i) * x'_i / w, where w is the mean of
//      those products over layers, so that sum_a z'_a equals the layer
//      count. If every product is 0, z' stays uniform.
// Iteration stops once both L1 residuals drop below tolerance or after
// max_iterations; the diagnostics are filled in either way.
CentralityResult multirank(std::span<const DenseMatrix> layers,
                           const MultiRankParams& params = {});
CentralityResult multirank(const MultiLayerGraph& g, const MultiRankParams& params = {});

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-9;
  std::size_t max_iterations = 10000;
};

// Power iteration on the column-stochastic normalisation of adjacency
// (adjacency(i, j) is the weight of the link j -> i) with uniform
// teleportation. Dangling columns redistribute uniformly.
std::vector<double> pagerank(const DenseMatrix& adjacency, const PageRankOptions& options);
std::vector<double> pagerank(const DenseMatrix& adjacency, double damping = 0.85);

// CSV with header "iteration,residual_x,residual_z".
void write_trace_csv(std::ostream& out, const CentralityResult& result);

}  // namespace mlsum

#endif  // MLSUM_MULTIRANK_H_
