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
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dirclose {

/// Dense node index in [0, node_count).
using NodeId = std::uint32_t;

/// Global edge arrival index, 0-based and contiguous.
using EdgeSeq = std::uint64_t;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EdgeRecord {
  NodeId src;
  NodeId dst;
  EdgeSeq seq;

  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Adjacency entry: the neighbor plus the arrival index of the edge.
struct Arc {
  NodeId node;
  EdgeSeq seq;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct InducedSubgraph;

/// Directed graph whose edges carry a global arrival order.
///
/// Construction is single-writer and append-only: edges get consecutive
/// arrival indices, and per-node adjacency lists are kept in arrival order
/// (the in-list of a node is exactly the chronological list of its followers,
/// the out-list the chronological list of the nodes it follows). Once built,
/// the graph is immutable and safe to share across threads for analysis.
///
/// Parallel edges and self-loops are rejected; a follow relation exists at
/// most once.
class TemporalDigraph {
 public:
  TemporalDigraph() = default;
  explicit TemporalDigraph(std::size_t node_count)
      : node_count_(node_count), out_(node_count), in_(node_count) {}

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Appends edge src->dst with the next arrival index and returns it.
  /// Throws GraphError for unknown endpoints, self-loops and duplicates.
  EdgeSeq append_edge(NodeId src, NodeId dst);

  bool has_edge(NodeId src, NodeId dst) const {
    return edge_index_.find(edge_key(src, dst)) != edge_index_.end();
  }

  /// Arrival index of edge src->dst, if present.
  std::optional<EdgeSeq> edge_seq(NodeId src, NodeId dst) const {
    auto it = edge_index_.find(edge_key(src, dst));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }

  /// All edges, ascending by arrival index.
  std::span<const EdgeRecord> edges() const { return edges_; }

  /// Targets of node a in arrival order.
  std::span<const Arc> out_arcs(NodeId a) const { check_node(a); return out_[a]; }
  /// Sources pointing at node c in arrival order.
  std::span<const Arc> in_arcs(NodeId c) const { check_node(c); return in_[c]; }

  std::size_t out_degree(NodeId a) const { check_node(a); return out_[a].size(); }
  std::size_t in_degree(NodeId c) const { check_node(c); return in_[c].size(); }

  /// Chronologically ordered list of the followers of c.
  std::vector<NodeId> in_list(NodeId c) const;
  /// Chronologically ordered list of the nodes a follows.
  std::vector<NodeId> out_list(NodeId a) const;

  // -- optional per-node attributes -----------------------------------------

  void set_communities(std::vector<std::uint32_t> labels);
  bool has_communities() const { return !community_.empty(); }
  std::uint32_t community(NodeId n) const { check_node(n); return community_.at(n); }
  std::span<const std::uint32_t> communities() const { return community_; }

  void set_fitness(std::vector<double> values);
  bool has_fitness() const { return !fitness_.empty(); }
  double fitness(NodeId n) const { check_node(n); return fitness_.at(n); }
  std::span<const double> fitness_values() const { return fitness_; }

  /// Marks the arrival order as synthesized from per-node list orders rather
  /// than observed globally. Closure analysis on such graphs must use the
  /// list criterion, which only relies on the per-node orders.
  void mark_order_synthetic() { synthetic_order_ = true; }
  bool order_is_synthetic() const { return synthetic_order_; }

  /// Subgraph induced on {center} and the followers of center. Surviving
  /// edges keep their relative order and are re-indexed contiguously; node
  /// ids are remapped densely in ascending order of the original ids.
  InducedSubgraph induced_follower_subgraph(NodeId center) const;

 private:
  static std::uint64_t edge_key(NodeId src, NodeId dst) {
    return (static_cast<std::uint64_t>(src) << 32) | dst;
  }

  void check_node(NodeId n) const {
    if (n >= node_count_) {
      throw GraphError("node " + std::to_string(n) + " out of range (node count " +
                       std::to_string(node_count_) + ")");
    }
  }

  std::size_t node_count_ = 0;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<Arc>> in_;
  std::unordered_map<std::uint64_t, EdgeSeq> edge_index_;
  std::vector<std::uint32_t> community_;
  std::vector<double> fitness_;
  bool synthetic_order_ = false;
};

struct InducedSubgraph {
  TemporalDigraph graph;
  /// original_id[k] is the id in the parent graph of subgraph node k.
  std::vector<NodeId> original_id;
};

/// Nodes whose in-degree lies in [lo, hi], ascending by id. With the default
/// bounds this is the micro-celebrity filter (10,000 to 50,000 followers).
std::vector<NodeId> nodes_with_in_degree_between(const TemporalDigraph& g,
                                                 std::size_t lo = 10000,
                                                 std::size_t hi = 50000);

/// Node ids sorted by descending in-degree (ties by ascending id), truncated
/// to the first top_n entries.
std::vector<NodeId> top_in_degree_nodes(const TemporalDigraph& g, std::size_t top_n);

}  // namespace dirclose
