// Copyright 2026 The dirclose Authors
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

#include "dirclose/heuristic.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "dirclose/closure.hpp"

namespace dirclose {

DegreeSnapshot final_degree_snapshot(const TemporalDigraph& g) {
  DegreeSnapshot snapshot;
  snapshot.node_count = g.node_count();
  snapshot.edge_count = g.edge_count();
  snapshot.in_degree.resize(g.node_count());
  snapshot.follower_indegree_sum.resize(g.node_count());
  for (NodeId n = 0; n < g.node_count(); ++n) {
    snapshot.in_degree[n] = g.in_degree(n);
    snapshot.follower_indegree_sum[n] = follower_indegree_sum(g, n);
  }
  return snapshot;
}

double follower_landing_probability(const DegreeSnapshot& snapshot, NodeId j, double alpha) {
  if (snapshot.edge_count == 0) {
    throw GraphError("landing probability undefined on an edgeless snapshot");
  }
  if (j >= snapshot.in_degree.size()) {
    throw GraphError("node " + std::to_string(j) + " not in snapshot");
  }
  const double uniform_term = static_cast<double>(snapshot.in_degree[j]) /
                              static_cast<double>(snapshot.node_count);
  const double degree_term = static_cast<double>(snapshot.follower_indegree_sum[j]) /
                             static_cast<double>(snapshot.edge_count);
  return alpha * uniform_term + (1.0 - alpha) * degree_term;
}

double closure_ratio_estimate(double s, unsigned edges_per_node) {
  if (edges_per_node < 1) {
    throw std::invalid_argument("edges_per_node must be >= 1");
  }
  if (!(s >= 0.0 && s <= 1.0)) {
    throw std::invalid_argument("landing probability must lie in [0, 1]");
  }
  if (s == 0.0 || edges_per_node == 1) return 0.0;
  const double d = static_cast<double>(edges_per_node);
  if (s == 1.0) return 1.0 - 1.0 / d;
  // 1 - (1 - (1-s)^D) / (D*s); expm1/log1p keep precision for small s.
  const double one_minus_pow = -std::expm1(d * std::log1p(-s));
  return 1.0 - one_minus_pow / (d * s);
}

std::vector<double> estimate_final_closure_ratios(const TemporalDigraph& g, double alpha,
                                                  unsigned edges_per_node) {
  const DegreeSnapshot snapshot = final_degree_snapshot(g);
  std::vector<double> estimates(g.node_count(), 0.0);
  if (snapshot.edge_count == 0) return estimates;
  for (NodeId j = 0; j < g.node_count(); ++j) {
    estimates[j] =
        closure_ratio_estimate(follower_landing_probability(snapshot, j, alpha), edges_per_node);
  }
  return estimates;
}

std::vector<double> closure_estimate_trace(const TemporalDigraph& g, NodeId j, double alpha,
                                           unsigned edges_per_node) {
  if (j >= g.node_count()) {
    throw GraphError("node " + std::to_string(j) + " out of range");
  }
  std::vector<double> trace;
  trace.reserve(g.edge_count());

  std::vector<std::uint64_t> in_degree(g.node_count(), 0);
  std::vector<bool> seen(g.node_count(), false);
  std::uint64_t present_nodes = 0;
  std::unordered_set<NodeId> followers;
  std::uint64_t follower_degree_sum = 0;

  std::uint64_t edges = 0;
  for (const EdgeRecord& e : g.edges()) {
    for (const NodeId endpoint : {e.src, e.dst}) {
      if (!seen[endpoint]) {
        seen[endpoint] = true;
        ++present_nodes;
      }
    }
    ++in_degree[e.dst];
    ++edges;
    if (e.dst == j) {
      followers.insert(e.src);
      follower_degree_sum += in_degree[e.src];
    } else if (followers.count(e.dst) != 0) {
      ++follower_degree_sum;
    }
    const double s =
        alpha * (static_cast<double>(followers.size()) / static_cast<double>(present_nodes)) +
        (1.0 - alpha) * (static_cast<double>(follower_degree_sum) / static_cast<double>(edges));
    trace.push_back(closure_ratio_estimate(s, edges_per_node));
  }
  return trace;
}

}  // namespace dirclose
