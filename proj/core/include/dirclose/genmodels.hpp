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
#include <span>
#include <string>

#include "dirclose/temporal_graph.hpp"

namespace dirclose {

enum class ModelKind {
  PreferentialAttachment,
  PreferentialAttachmentFitness,
  PreferentialAttachmentCommunities,
};

std::string to_string(ModelKind kind);

/// Parameters for the growth models.
///
/// Caution: alpha plays opposite roles across the models. For
/// PreferentialAttachment and PreferentialAttachmentFitness, alpha is the
/// probability of the *uniform* endpoint choice (1 - alpha preferential).
/// For PreferentialAttachmentCommunities, alpha is the probability of the
/// *preferential* choice within the selected pool (1 - alpha uniform). The
/// models are implemented literally as defined; no harmonization is applied.
struct ModelParams {
  ModelKind kind = ModelKind::PreferentialAttachment;
  double alpha = 0.3;
  /// Probability of restricting the endpoint pool to the joining node's own
  /// community (communities model only); must lie in [0.5, 1].
  double beta = 0.8;
  /// Edges each arriving node attempts to create (D).
  unsigned edges_per_node = 10;
  /// Final node count (N).
  std::size_t node_count = 0;
  /// Community count (communities model only).
  std::size_t community_count = 1;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

/// Plain preferential attachment.
///
/// Seed graph: node 1 points at node 0. Then each node j = 2..N-1 joins and
/// creates up to edges_per_node edges to prior nodes; per edge the endpoint
/// is uniform over {1..j-1} with probability alpha, otherwise drawn
/// proportionally to current in-degree. An endpoint already used by j this
/// step is resampled (full procedure, fresh coin), capped at
/// 100 * edges_per_node attempts before an unused endpoint is drawn uniformly
/// from the remaining reachable candidates. When fewer distinct reachable
/// endpoints exist than edges_per_node, the node creates only that many.
TemporalDigraph generate_pa(const ModelParams& params);

/// Preferential attachment with fitness: identical to generate_pa except the
/// preferential draw weights node i by in_degree(i) * fitness(i), with
/// fitness values drawn uniformly in (0, 1) up front. The generated fitness
/// values are stored on the returned graph.
TemporalDigraph generate_pa_fitness(const ModelParams& params);

/// Same, with caller-provided fitness values (size node_count, each in (0,1)).
TemporalDigraph generate_pa_fitness(const ModelParams& params, std::span<const double> fitness);

/// Preferential attachment with communities.
///
/// Seed graph: community_count two-node communities, node 2i+1 pointing at
/// node 2i, both in community i. Each later node joins a community chosen
/// uniformly at random, then creates up to edges_per_node edges; per edge the
/// candidate pool is the prior nodes of its own community with probability
/// beta and all prior nodes otherwise, and within the pool the endpoint is
/// preferential (in-degree weighted) with probability alpha, uniform
/// otherwise. A preferential draw over a zero-weight pool falls back to a
/// uniform draw from the pool. Duplicate handling is as in generate_pa.
/// Community labels are stored on the returned graph.
TemporalDigraph generate_pa_communities(const ModelParams& params);

/// Dispatches on params.kind.
TemporalDigraph generate(const ModelParams& params);

}  // namespace dirclose
