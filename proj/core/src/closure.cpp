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

#include "dirclose/closure.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace dirclose {

ClosureFlags closure_flags_streaming(const TemporalDigraph& g) {
  ClosureFlags flags(g.edge_count(), false);
  // Number of out-/in-edges of each node already replayed; the first
  // out_done[n] entries of out_arcs(n) are exactly the out-edges present
  // before the current arrival.
  std::vector<std::uint32_t> out_done(g.node_count(), 0);
  std::vector<std::uint32_t> in_done(g.node_count(), 0);

  for (const EdgeRecord& e : g.edges()) {
    const NodeId a = e.src;
    const NodeId c = e.dst;
    const EdgeSeq t = e.seq;
    bool closed = false;
    if (out_done[a] <= in_done[c]) {
      const auto arcs = g.out_arcs(a);
      for (std::uint32_t i = 0; i < out_done[a] && !closed; ++i) {
        const auto seq = g.edge_seq(arcs[i].node, c);
        closed = seq.has_value() && *seq < t;
      }
    } else {
      const auto arcs = g.in_arcs(c);
      for (std::uint32_t i = 0; i < in_done[c] && !closed; ++i) {
        const auto seq = g.edge_seq(a, arcs[i].node);
        closed = seq.has_value() && *seq < t;
      }
    }
    flags[t] = closed;
    ++out_done[a];
    ++in_done[c];
  }
  return flags;
}

bool edge_exhibits_closure(const TemporalDigraph& g, NodeId a, NodeId c) {
  if (!g.has_edge(a, c)) {
    throw GraphError("edge " + std::to_string(a) + "->" + std::to_string(c) + " not present");
  }
  // Followers of c that arrived before a did.
  std::unordered_set<NodeId> earlier_followers;
  for (const Arc& arc : g.in_arcs(c)) {
    if (arc.node == a) break;
    earlier_followers.insert(arc.node);
  }
  if (earlier_followers.empty()) return false;
  for (const Arc& arc : g.out_arcs(a)) {
    if (arc.node == c) break;
    if (earlier_followers.count(arc.node) != 0) return true;
  }
  return false;
}

ClosureFlags closure_flags_from_lists(const TemporalDigraph& g) {
  ClosureFlags flags(g.edge_count(), false);
  // Walk each in-list once, growing the earlier-follower set incrementally
  // instead of rebuilding it per edge.
  std::unordered_set<NodeId> earlier_followers;
  for (NodeId c = 0; c < g.node_count(); ++c) {
    const auto in = g.in_arcs(c);
    if (in.empty()) continue;
    earlier_followers.clear();
    for (const Arc& follower : in) {
      const NodeId a = follower.node;
      bool closed = false;
      if (!earlier_followers.empty()) {
        for (const Arc& followed : g.out_arcs(a)) {
          if (followed.node == c) break;
          if (earlier_followers.count(followed.node) != 0) {
            closed = true;
            break;
          }
        }
      }
      flags[follower.seq] = closed;
      earlier_followers.insert(a);
    }
  }
  return flags;
}

std::vector<double> closure_trajectory(const TemporalDigraph& g, const ClosureFlags& flags,
                                       NodeId c) {
  const auto in = g.in_arcs(c);
  std::vector<double> trajectory;
  trajectory.reserve(in.size());
  std::size_t closed = 0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (flags.at(in[i].seq)) ++closed;
    trajectory.push_back(static_cast<double>(closed) / static_cast<double>(i + 1));
  }
  return trajectory;
}

std::vector<double> final_closure_ratios(const TemporalDigraph& g, const ClosureFlags& flags) {
  std::vector<std::uint64_t> closed(g.node_count(), 0);
  for (const EdgeRecord& e : g.edges()) {
    if (flags.at(e.seq)) ++closed[e.dst];
  }
  std::vector<double> ratios(g.node_count(), 0.0);
  for (NodeId n = 0; n < g.node_count(); ++n) {
    const std::size_t d = g.in_degree(n);
    if (d > 0) ratios[n] = static_cast<double>(closed[n]) / static_cast<double>(d);
  }
  return ratios;
}

std::uint64_t follower_indegree_sum(const TemporalDigraph& g, NodeId c) {
  std::uint64_t sum = 0;
  for (const Arc& arc : g.in_arcs(c)) sum += g.in_degree(arc.node);
  return sum;
}

std::uint64_t same_community_follower_indegree_sum(const TemporalDigraph& g, NodeId c) {
  if (!g.has_communities()) {
    throw GraphError("graph carries no community labels");
  }
  const std::uint32_t home = g.community(c);
  std::uint64_t sum = 0;
  for (const Arc& arc : g.in_arcs(c)) {
    if (g.community(arc.node) == home) sum += g.in_degree(arc.node);
  }
  return sum;
}

FollowerDegreeSums follower_indegree_sums(const TemporalDigraph& g, NodeId c) {
  FollowerDegreeSums sums;
  sums.total = follower_indegree_sum(g, c);
  if (g.has_communities()) sums.same_community = same_community_follower_indegree_sum(g, c);
  return sums;
}

ClosureProfile closure_profile(const TemporalDigraph& g, const ClosureFlags& flags, NodeId c) {
  ClosureProfile profile;
  profile.node = c;
  profile.in_degree = g.in_degree(c);
  profile.trajectory = closure_trajectory(g, flags, c);
  profile.final_ratio = profile.trajectory.empty() ? 0.0 : profile.trajectory.back();
  profile.sums = follower_indegree_sums(g, c);
  return profile;
}

std::vector<KLinkedStat> k_linked_partition(const TemporalDigraph& g, const ClosureFlags& flags,
                                            NodeId c, KLinkMode mode,
                                            const std::vector<bool>* evaluable_mask) {
  const auto in = g.in_arcs(c);
  std::unordered_set<NodeId> followers;
  followers.reserve(in.size() * 2);
  for (const Arc& arc : in) followers.insert(arc.node);

  struct Group {
    std::vector<NodeId> members;
    std::size_t evaluable = 0;
    std::size_t closed = 0;
  };
  std::map<std::size_t, Group> groups;

  for (const Arc& arc : in) {
    const NodeId a = arc.node;
    std::size_t k = 0;
    if (mode == KLinkMode::FinalGraph) {
      for (const Arc& followed : g.out_arcs(a)) {
        if (followed.node != c && followers.count(followed.node) != 0) ++k;
      }
    } else {
      // Count only links fully in place when the a->c edge arrived.
      const EdgeSeq t = arc.seq;
      for (const Arc& followed : g.out_arcs(a)) {
        if (followed.seq >= t || followed.node == c) continue;
        const auto closing = g.edge_seq(followed.node, c);
        if (closing.has_value() && *closing < t) ++k;
      }
    }
    Group& group = groups[k];
    group.members.push_back(a);
    if (evaluable_mask == nullptr || evaluable_mask->at(a)) {
      ++group.evaluable;
      if (flags.at(arc.seq)) ++group.closed;
    }
  }

  std::vector<KLinkedStat> result;
  result.reserve(groups.size());
  for (auto& [k, group] : groups) {
    KLinkedStat stat;
    stat.k = k;
    stat.members = std::move(group.members);
    stat.evaluable = group.evaluable;
    if (group.evaluable > 0) {
      stat.closure_fraction =
          static_cast<double>(group.closed) / static_cast<double>(group.evaluable);
    }
    result.push_back(std::move(stat));
  }
  return result;
}

}  // namespace dirclose
