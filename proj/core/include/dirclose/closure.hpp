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
#include <optional>
#include <vector>

#include "dirclose/temporal_graph.hpp"

namespace dirclose {

/// Per-edge closure flags indexed by arrival index. An edge a->c exhibits
/// closure when a directed two-step path a->b->c already exists at the moment
/// the edge arrives.
using ClosureFlags = std::vector<bool>;

/// Computes closure flags by replaying edges in arrival order. Each edge is
/// checked by scanning the smaller of its source's current out-neighborhood
/// and its target's current in-neighborhood, so the total cost is
/// O(sum over edges of min(out_degree, in_degree)).
ClosureFlags closure_flags_streaming(const TemporalDigraph& g);

/// List criterion for a single edge: a->c exhibits closure iff some b both
/// precedes a in the in-list of c and precedes c in the out-list of a. Only
/// per-node list orders are consulted, never the global arrival index, so
/// this is valid on graphs reconstructed from chronological list files.
/// Throws GraphError if the edge a->c does not exist.
bool edge_exhibits_closure(const TemporalDigraph& g, NodeId a, NodeId c);

/// Closure flags for every edge via the list criterion (shared incremental
/// state per target node; equivalent to calling edge_exhibits_closure per
/// edge but cheaper in bulk).
ClosureFlags closure_flags_from_lists(const TemporalDigraph& g);

/// Running closure fraction over the in-edges of c in arrival order:
/// entry i = (closure flags among the first i+1 in-edges) / (i + 1).
std::vector<double> closure_trajectory(const TemporalDigraph& g, const ClosureFlags& flags,
                                       NodeId c);

/// Final closure ratio of every node (0 for nodes with no in-edges). O(E).
std::vector<double> final_closure_ratios(const TemporalDigraph& g, const ClosureFlags& flags);

struct FollowerDegreeSums {
  /// Sum of in-degrees over the followers of the node.
  std::uint64_t total = 0;
  /// Same sum restricted to followers sharing the node's community label;
  /// present iff the graph carries community labels.
  std::optional<std::uint64_t> same_community;
};

std::uint64_t follower_indegree_sum(const TemporalDigraph& g, NodeId c);

/// Throws GraphError when the graph carries no community labels.
std::uint64_t same_community_follower_indegree_sum(const TemporalDigraph& g, NodeId c);

FollowerDegreeSums follower_indegree_sums(const TemporalDigraph& g, NodeId c);

struct ClosureProfile {
  NodeId node = 0;
  std::size_t in_degree = 0;
  /// Last trajectory entry; 0 when the node has no in-edges.
  double final_ratio = 0.0;
  std::vector<double> trajectory;
  FollowerDegreeSums sums;
};

ClosureProfile closure_profile(const TemporalDigraph& g, const ClosureFlags& flags, NodeId c);

/// How the per-follower link count k is measured.
enum class KLinkMode {
  /// k counts, in the final graph, the followers of c that a given follower
  /// also follows. Default.
  FinalGraph,
  /// k counts only links already present when the follower's edge to c
  /// arrived. Under this measurement k >= 1 coincides with the closure flag
  /// itself; exposed for sensitivity analysis.
  AtArrival,
};

struct KLinkedStat {
  std::size_t k = 0;
  /// Followers of c that follow exactly k other followers of c, in arrival
  /// order of their edge to c.
  std::vector<NodeId> members;
  /// Members whose closure flag could be evaluated (all members unless an
  /// evaluable mask is supplied).
  std::size_t evaluable = 0;
  /// Fraction of evaluable members whose edge to c exhibits closure.
  /// Unset when no member is evaluable.
  std::optional<double> closure_fraction;
};

/// Partitions the followers of c by k. Every follower lands in exactly one
/// group; groups are returned ascending by k and only for nonempty member
/// sets. The optional per-node mask restricts closure_fraction (and the
/// evaluable counts) to nodes for which the flag is trustworthy.
std::vector<KLinkedStat> k_linked_partition(const TemporalDigraph& g, const ClosureFlags& flags,
                                            NodeId c, KLinkMode mode = KLinkMode::FinalGraph,
                                            const std::vector<bool>* evaluable_mask = nullptr);

}  // namespace dirclose
