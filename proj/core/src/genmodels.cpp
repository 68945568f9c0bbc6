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

#include "dirclose/genmodels.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

#include "dirclose/prefix_weight_tree.hpp"
#include "dirclose/rng.hpp"

namespace dirclose {

namespace {

constexpr unsigned kResampleFactor = 100;
constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// Preferential draw proportional to in-degree.
struct DegreeSampler {
  PrefixWeightTree<std::uint64_t> tree;

  explicit DegreeSampler(std::size_t n) : tree(n) {}
  NodeId draw(Rng& rng) { return static_cast<NodeId>(tree.find(rng.uniform_index(tree.total()))); }
  void bump(NodeId v) { tree.add(v, 1); }
};

// Preferential draw proportional to in-degree times fitness.
struct FitnessSampler {
  PrefixWeightTree<double> tree;
  std::span<const double> fitness;

  FitnessSampler(std::size_t n, std::span<const double> f) : tree(n), fitness(f) {}
  NodeId draw(Rng& rng) {
    return static_cast<NodeId>(tree.find(rng.uniform01() * tree.total()));
  }
  void bump(NodeId v) { tree.add(v, fitness[v]); }
};

// Shared growth loop for the plain and fitness variants; they differ only in
// the preferential weight.
template <typename Sampler>
TemporalDigraph grow(const ModelParams& params, Sampler& sampler, Rng& rng) {
  TemporalDigraph g(params.node_count);
  std::size_t positive_in_degree = 0;
  auto bump = [&](NodeId v) {
    if (g.in_degree(v) == 1) ++positive_in_degree;
    sampler.bump(v);
  };

  g.append_edge(1, 0);
  bump(0);

  const unsigned target_degree = params.edges_per_node;
  const double alpha = params.alpha;
  const unsigned max_attempts = kResampleFactor * target_degree;

  for (NodeId j = 2; j < params.node_count; ++j) {
    for (unsigned d = 0; d < target_degree; ++d) {
      // Distinct endpoints reachable by j: the uniform branch covers
      // {1..j-1}, the preferential branch covers nodes with positive
      // in-degree (node 0 always qualifies once the seed edge exists).
      std::size_t reachable;
      if (alpha >= 1.0) {
        reachable = j - 1;
      } else if (alpha <= 0.0) {
        reachable = positive_in_degree;
      } else {
        reachable = j;
      }
      if (g.out_degree(j) >= reachable) break;

      NodeId target = kNoNode;
      for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        NodeId candidate;
        if (rng.uniform01() < alpha) {
          candidate = static_cast<NodeId>(1 + rng.uniform_index(j - 1));
        } else {
          candidate = sampler.draw(rng);
        }
        if (!g.has_edge(j, candidate)) {
          target = candidate;
          break;
        }
      }
      if (target == kNoNode) {
        // Resample cap hit: draw uniformly among unused reachable endpoints.
        std::vector<NodeId> unused;
        for (NodeId v = 0; v < j; ++v) {
          if (g.has_edge(j, v)) continue;
          const bool via_uniform = alpha > 0.0 && v >= 1;
          const bool via_preferential = alpha < 1.0 && g.in_degree(v) > 0;
          if (via_uniform || via_preferential) unused.push_back(v);
        }
        if (unused.empty()) break;
        target = unused[rng.uniform_index(unused.size())];
      }
      g.append_edge(j, target);
      bump(target);
    }
  }
  return g;
}

void check_kind(const ModelParams& params, ModelKind expected) {
  if (params.kind != expected) {
    throw std::invalid_argument("params.kind does not match the generator called");
  }
}

}  // namespace

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::PreferentialAttachment: return "pa";
    case ModelKind::PreferentialAttachmentFitness: return "pa-fitness";
    case ModelKind::PreferentialAttachmentCommunities: return "pa-communities";
  }
  return "unknown";
}

void ModelParams::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
  if (edges_per_node < 1) {
    throw std::invalid_argument("edges_per_node must be >= 1");
  }
  if (node_count < 2) {
    throw std::invalid_argument("node_count must be >= 2");
  }
  if (node_count > std::numeric_limits<NodeId>::max()) {
    throw std::invalid_argument("node_count exceeds the node id range");
  }
  if (kind == ModelKind::PreferentialAttachmentCommunities) {
    if (community_count < 1) {
      throw std::invalid_argument("community_count must be >= 1");
    }
    if (!(beta >= 0.5 && beta <= 1.0)) {
      throw std::invalid_argument("beta must lie in [0.5, 1]");
    }
    if (node_count < 2 * community_count) {
      throw std::invalid_argument("node_count must be at least 2 * community_count");
    }
  }
}

TemporalDigraph generate_pa(const ModelParams& params) {
  check_kind(params, ModelKind::PreferentialAttachment);
  params.validate();
  Rng rng(params.seed);
  DegreeSampler sampler(params.node_count);
  return grow(params, sampler, rng);
}

TemporalDigraph generate_pa_fitness(const ModelParams& params) {
  check_kind(params, ModelKind::PreferentialAttachmentFitness);
  params.validate();
  Rng rng(params.seed);
  std::vector<double> fitness(params.node_count);
  for (double& f : fitness) f = rng.uniform01_open();
  FitnessSampler sampler(params.node_count, fitness);
  TemporalDigraph g = grow(params, sampler, rng);
  g.set_fitness(std::move(fitness));
  return g;
}

TemporalDigraph generate_pa_fitness(const ModelParams& params, std::span<const double> fitness) {
  check_kind(params, ModelKind::PreferentialAttachmentFitness);
  params.validate();
  if (fitness.size() != params.node_count) {
    throw std::invalid_argument("fitness values must cover every node");
  }
  for (double f : fitness) {
    if (!(f > 0.0 && f < 1.0)) {
      throw std::invalid_argument("fitness values must lie in (0, 1)");
    }
  }
  Rng rng(params.seed);
  std::vector<double> values(fitness.begin(), fitness.end());
  FitnessSampler sampler(params.node_count, values);
  TemporalDigraph g = grow(params, sampler, rng);
  g.set_fitness(std::move(values));
  return g;
}

TemporalDigraph generate_pa_communities(const ModelParams& params) {
  check_kind(params, ModelKind::PreferentialAttachmentCommunities);
  params.validate();

  const std::size_t community_count = params.community_count;
  const std::size_t n = params.node_count;
  Rng rng(params.seed);
  TemporalDigraph g(n);

  std::vector<std::uint32_t> label(n, 0);
  std::vector<std::uint32_t> local_slot(n, 0);
  std::vector<std::vector<NodeId>> members(community_count);
  std::vector<PrefixWeightTree<std::uint64_t>> local_degree(community_count);
  PrefixWeightTree<std::uint64_t> global_degree(n);

  auto join = [&](NodeId v, std::uint32_t community) {
    label[v] = community;
    local_slot[v] = static_cast<std::uint32_t>(members[community].size());
    members[community].push_back(v);
    local_degree[community].push_back(0);
  };
  auto bump = [&](NodeId v) {
    global_degree.add(v, 1);
    local_degree[label[v]].add(local_slot[v], 1);
  };

  // Seed: community i holds nodes 2i and 2i+1, the latter pointing at the
  // former.
  for (std::uint32_t i = 0; i < community_count; ++i) {
    join(static_cast<NodeId>(2 * i), i);
    join(static_cast<NodeId>(2 * i + 1), i);
  }
  for (std::uint32_t i = 0; i < community_count; ++i) {
    g.append_edge(static_cast<NodeId>(2 * i + 1), static_cast<NodeId>(2 * i));
    bump(static_cast<NodeId>(2 * i));
  }

  const unsigned target_degree = params.edges_per_node;
  const unsigned max_attempts = kResampleFactor * target_degree;

  for (NodeId j = static_cast<NodeId>(2 * community_count); j < n; ++j) {
    const auto home = static_cast<std::uint32_t>(rng.uniform_index(community_count));
    // j joins the member list only after creating its edges, so pools never
    // contain j itself.
    for (unsigned d = 0; d < target_degree; ++d) {
      const std::size_t pool_bound = params.beta >= 1.0 ? members[home].size() : j;
      if (g.out_degree(j) >= pool_bound) break;

      NodeId target = kNoNode;
      for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        // Pool coin first, then the method coin within the pool.
        const bool same_community = rng.uniform01() < params.beta;
        const bool preferential = rng.uniform01() < params.alpha;
        NodeId candidate;
        if (same_community) {
          const auto& pool = members[home];
          auto& tree = local_degree[home];
          if (preferential && tree.total() > 0) {
            candidate = pool[tree.find(rng.uniform_index(tree.total()))];
          } else {
            candidate = pool[rng.uniform_index(pool.size())];
          }
        } else {
          if (preferential && global_degree.total() > 0) {
            candidate = static_cast<NodeId>(global_degree.find(rng.uniform_index(global_degree.total())));
          } else {
            candidate = static_cast<NodeId>(rng.uniform_index(j));
          }
        }
        if (!g.has_edge(j, candidate)) {
          target = candidate;
          break;
        }
      }
      if (target == kNoNode) {
        std::vector<NodeId> unused;
        if (params.beta >= 1.0) {
          for (NodeId v : members[home]) {
            if (!g.has_edge(j, v)) unused.push_back(v);
          }
        } else {
          for (NodeId v = 0; v < j; ++v) {
            if (!g.has_edge(j, v)) unused.push_back(v);
          }
        }
        if (unused.empty()) break;
        target = unused[rng.uniform_index(unused.size())];
      }
      g.append_edge(j, target);
      bump(target);
    }
    join(j, home);
  }

  g.set_communities(std::move(label));
  return g;
}

TemporalDigraph generate(const ModelParams& params) {
  switch (params.kind) {
    case ModelKind::PreferentialAttachment: return generate_pa(params);
    case ModelKind::PreferentialAttachmentFitness: return generate_pa_fitness(params);
    case ModelKind::PreferentialAttachmentCommunities: return generate_pa_communities(params);
  }
  throw std::invalid_argument("unknown model kind");
}

}  // namespace dirclose
