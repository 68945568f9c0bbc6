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

#include "dirclose/closure.hpp"
#include "dirclose/rational.hpp"
#include "dirclose/rng.hpp"
#include "dirclose/temporal_graph.hpp"

namespace dirclose {

// Random-ordering baseline for the k-linked closure test. The local topology
// around a follower that also follows k other followers of the target is a
// star network of 2k+1 edges: a->c, a->b_i and b_i->c for i = 1..k. Under a
// uniformly random arrival order of those edges, the probability that a->c
// exhibits closure is the chance-level closure fraction for that group.

/// Draws one uniformly random arrival order of the 2k+1 star edges and
/// reports whether the a->c edge exhibits closure under that order.
bool star_trial(unsigned k, Rng& rng);

/// How exact_star_closure_probability obtains its value.
enum class ExactMode {
  /// Exhaustive for small k, closed form beyond (cross-checked where both
  /// apply). Default.
  Auto,
  /// Exhaustive enumeration only; supported for k <= 6.
  Enumerate,
  /// Inclusion-exclusion closed form only; supported for k <= 20.
  Formula,
};

/// Exact probability that the a->c edge of the k-star exhibits closure under
/// a uniformly random edge ordering.
///
/// Enumerate walks every ordering: all (2k+1)! permutations for k <= 4, and
/// for k = 5, 6 every (position of a->c, set of earlier edges) class, which
/// covers the permutations exactly without materializing them. Formula
/// evaluates sum_{j=1..k} (-1)^(j+1) * C(k,j) / (2j+1) in exact rational
/// arithmetic. Auto enumerates for k <= 6 and asserts agreement with the
/// formula, then switches to the formula alone.
///
/// Throws std::invalid_argument when k exceeds the mode's supported range;
/// use the Monte Carlo estimate (baseline_closure_fraction) for larger k.
Rational exact_star_closure_probability(unsigned k, ExactMode mode = ExactMode::Auto);

struct BaselineEstimate {
  unsigned k = 0;
  std::size_t sample_size = 0;
  unsigned runs = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Monte Carlo estimate of the chance-level closure fraction for group size
/// sample_size: each run draws sample_size independent star orderings and
/// records the fraction exhibiting closure; mean/min/max are taken over runs.
/// Runs use independent substreams of rng, so the estimate is reproducible
/// regardless of evaluation order.
BaselineEstimate baseline_closure_fraction(unsigned k, std::size_t sample_size, unsigned runs,
                                           const Rng& rng);

struct RandTestRow {
  std::size_t k = 0;
  /// Group size |members| of the k-linked partition.
  std::size_t group_size = 0;
  /// Members whose flag was evaluable (== group_size without a mask).
  std::size_t evaluable = 0;
  double observed = 0.0;
  BaselineEstimate baseline;

  bool observed_within_band() const {
    return observed >= baseline.min && observed <= baseline.max;
  }
};

struct RandTestReport {
  NodeId node = 0;
  unsigned runs = 0;
  std::size_t min_group_size = 10;
  KLinkMode k_mode = KLinkMode::FinalGraph;
  /// One row per k with group size strictly above min_group_size, ascending.
  std::vector<RandTestRow> rows;
  /// Smallest k among the rows whose observed fraction falls inside
  /// [baseline.min, baseline.max]; unset when no row does.
  std::optional<std::size_t> crossover_k;
};

struct RandTestOptions {
  unsigned runs = 100;
  /// Rows are emitted for groups with size strictly greater than this.
  std::size_t min_group_size = 10;
  KLinkMode k_mode = KLinkMode::FinalGraph;
  /// Optional per-node mask of followers whose closure flag is evaluable.
  const std::vector<bool>* evaluable_mask = nullptr;
};

/// Compares the observed per-k closure fractions of node c against the
/// random-ordering baseline. Each run of each k draws group_size orderings,
/// mirroring one sampled follower group per run.
RandTestReport rand_test(const TemporalDigraph& g, const ClosureFlags& flags, NodeId c,
                         const RandTestOptions& options, const Rng& rng);

}  // namespace dirclose
