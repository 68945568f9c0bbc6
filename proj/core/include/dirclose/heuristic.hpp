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

#pragma once

#include <cstdint>
#include <vector>

#include "dirclose/temporal_graph.hpp"

namespace dirclose {

// Closed-form estimate of preferential-attachment closure ratios. For a node
// j, the probability that one fresh edge lands on some follower of j mixes a
// uniform term with an in-degree-proportional term; averaging over which of
// the D out-edges of an arriving node is under consideration turns that
// landing probability into a closure-probability estimate for edges into j.

/// Degree bookkeeping for one graph snapshot.
struct DegreeSnapshot {
  std::uint64_t node_count = 0;
  std::uint64_t edge_count = 0;
  std::vector<std::uint64_t> in_degree;
  /// Per node, the sum of in-degrees over the node's followers.
  std::vector<std::uint64_t> follower_indegree_sum;
};

/// Snapshot of the fully grown graph.
DegreeSnapshot final_degree_snapshot(const TemporalDigraph& g);

/// Probability that a fresh edge is directed at some follower of node j:
/// alpha * |followers(j)| / nodes + (1 - alpha) * follower_indegree_sum(j) / edges.
/// Throws GraphError when the snapshot has no edges.
double follower_landing_probability(const DegreeSnapshot& snapshot, NodeId j, double alpha);

/// Estimated probability that an edge into a node with landing probability s
/// exhibits closure, for arriving nodes creating edges_per_node edges:
/// the average over d = 1..D of 1 - (1-s)^(d-1), i.e.
/// 1 - (1 - (1-s)^D) / (D * s), with the s -> 0 limit of 0 handled exactly.
double closure_ratio_estimate(double s, unsigned edges_per_node);

/// Estimated final closure ratio for every node, computed from the final
/// snapshot. alpha and edges_per_node must be the growth parameters of g.
std::vector<double> estimate_final_closure_ratios(const TemporalDigraph& g, double alpha,
                                                  unsigned edges_per_node);

/// Diagnostic trace: the closure-ratio estimate for node j recomputed after
/// every edge arrival. Nodes are counted as present from their first
/// appearance in an edge. Entry t corresponds to the state after edge t.
std::vector<double> closure_estimate_trace(const TemporalDigraph& g, NodeId j, double alpha,
                                           unsigned edges_per_node);

}  // namespace dirclose
