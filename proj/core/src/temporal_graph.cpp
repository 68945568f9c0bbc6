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

#include "dirclose/temporal_graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace dirclose {

EdgeSeq TemporalDigraph::append_edge(NodeId src, NodeId dst) {
  check_node(src);
  check_node(dst);
  if (src == dst) {
    throw GraphError("self-loop rejected at node " + std::to_string(src));
  }
  const std::uint64_t key = edge_key(src, dst);
  if (edge_index_.find(key) != edge_index_.end()) {
    throw GraphError("duplicate edge " + std::to_string(src) + "->" + std::to_string(dst));
  }
  const EdgeSeq seq = edges_.size();
  edges_.push_back({src, dst, seq});
  out_[src].push_back({dst, seq});
  in_[dst].push_back({src, seq});
  edge_index_.emplace(key, seq);
  return seq;
}

std::vector<NodeId> TemporalDigraph::in_list(NodeId c) const {
  check_node(c);
  std::vector<NodeId> result;
  result.reserve(in_[c].size());
  for (const Arc& arc : in_[c]) result.push_back(arc.node);
  return result;
}

std::vector<NodeId> TemporalDigraph::out_list(NodeId a) const {
  check_node(a);
  std::vector<NodeId> result;
  result.reserve(out_[a].size());
  for (const Arc& arc : out_[a]) result.push_back(arc.node);
  return result;
}

void TemporalDigraph::set_communities(std::vector<std::uint32_t> labels) {
  if (labels.size() != node_count_) {
    throw GraphError("community labels must cover every node");
  }
  community_ = std::move(labels);
}

void TemporalDigraph::set_fitness(std::vector<double> values) {
  if (values.size() != node_count_) {
    throw GraphError("fitness values must cover every node");
  }
  fitness_ = std::move(values);
}

InducedSubgraph TemporalDigraph::induced_follower_subgraph(NodeId center) const {
  check_node(center);

  std::vector<NodeId> kept;
  kept.reserve(in_[center].size() + 1);
  kept.push_back(center);
  for (const Arc& arc : in_[center]) kept.push_back(arc.node);
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  std::unordered_map<NodeId, NodeId> remap;
  remap.reserve(kept.size());
  for (NodeId i = 0; i < kept.size(); ++i) remap.emplace(kept[i], i);

  InducedSubgraph result;
  result.graph = TemporalDigraph(kept.size());
  result.original_id = kept;

  // Edges are already ascending by seq, so surviving edges keep their
  // relative order when re-appended.
  for (const EdgeRecord& e : edges_) {
    auto src = remap.find(e.src);
    if (src == remap.end()) continue;
    auto dst = remap.find(e.dst);
    if (dst == remap.end()) continue;
    result.graph.append_edge(src->second, dst->second);
  }

  if (has_communities()) {
    std::vector<std::uint32_t> labels(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) labels[i] = community_[kept[i]];
    result.graph.set_communities(std::move(labels));
  }
  if (has_fitness()) {
    std::vector<double> values(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) values[i] = fitness_[kept[i]];
    result.graph.set_fitness(std::move(values));
  }
  if (synthetic_order_) result.graph.mark_order_synthetic();
  return result;
}

std::vector<NodeId> nodes_with_in_degree_between(const TemporalDigraph& g, std::size_t lo,
                                                 std::size_t hi) {
  std::vector<NodeId> result;
  for (NodeId n = 0; n < g.node_count(); ++n) {
    const std::size_t d = g.in_degree(n);
    if (d >= lo && d <= hi) result.push_back(n);
  }
  return result;
}

std::vector<NodeId> top_in_degree_nodes(const TemporalDigraph& g, std::size_t top_n) {
  std::vector<NodeId> nodes(g.node_count());
  for (NodeId n = 0; n < g.node_count(); ++n) nodes[n] = n;
  std::sort(nodes.begin(), nodes.end(), [&g](NodeId a, NodeId b) {
    const std::size_t da = g.in_degree(a);
    const std::size_t db = g.in_degree(b);
    if (da != db) return da > db;
    return a < b;
  });
  if (nodes.size() > top_n) nodes.resize(top_n);
  return nodes;
}

}  // namespace dirclose
