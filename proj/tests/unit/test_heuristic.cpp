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

#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "dirclose/genmodels.hpp"
#include "dirclose/heuristic.hpp"
#include "test_util.hpp"

using dirclose::DegreeSnapshot;
using dirclose::GraphError;
using dirclose::NodeId;
using dirclose::TemporalDigraph;

namespace {

// Independent route to the closed form: average the per-rank closure chance
// over which of the D out-edges is under consideration.
double stepwise_estimate(double s, unsigned d) {
  double sum = 0.0;
  for (unsigned rank = 1; rank <= d; ++rank) {
    sum += 1.0 - std::pow(1.0 - s, rank - 1);
  }
  return sum / double(d);
}

DegreeSnapshot snapshot_of(std::uint64_t nodes, std::uint64_t edges,
                           std::vector<std::uint64_t> in_degree,
                           std::vector<std::uint64_t> follower_sum) {
  DegreeSnapshot snapshot;
  snapshot.node_count = nodes;
  snapshot.edge_count = edges;
  snapshot.in_degree = std::move(in_degree);
  snapshot.follower_indegree_sum = std::move(follower_sum);
  return snapshot;
}

}  // namespace

TEST_CASE("landing probability substitutions") {
  SUBCASE("no followers means no landing") {
    const auto snapshot = snapshot_of(10, 20, {0}, {0});
    CHECK(dirclose::follower_landing_probability(snapshot, 0, 0.3) == 0.0);
  }
  SUBCASE("pure uniform term") {
    const auto snapshot = snapshot_of(10, 20, {2}, {5});
    CHECK(dirclose::follower_landing_probability(snapshot, 0, 1.0) == doctest::Approx(0.2));
  }
  SUBCASE("mixed term") {
    const auto snapshot = snapshot_of(10, 20, {2}, {5});
    CHECK(dirclose::follower_landing_probability(snapshot, 0, 0.3) ==
          doctest::Approx(0.3 * 0.2 + 0.7 * 0.25));
  }
  SUBCASE("edgeless snapshot is an error") {
    const auto snapshot = snapshot_of(10, 0, {2}, {0});
    CHECK_THROWS_AS(dirclose::follower_landing_probability(snapshot, 0, 0.3), GraphError);
  }
}

TEST_CASE("closure estimate endpoints") {
  for (const double s : {0.0, 0.1, 0.5, 1.0}) {
    CHECK(dirclose::closure_ratio_estimate(s, 1) == 0.0);
  }
  CHECK(dirclose::closure_ratio_estimate(0.0, 10) == 0.0);
  CHECK(dirclose::closure_ratio_estimate(1.0, 10) == doctest::Approx(0.9));
  CHECK_THROWS_AS(dirclose::closure_ratio_estimate(1.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(dirclose::closure_ratio_estimate(-0.2, 10), std::invalid_argument);
  CHECK_THROWS_AS(dirclose::closure_ratio_estimate(0.5, 0), std::invalid_argument);
}

TEST_CASE("closure estimate equals the stepwise average") {
  CHECK(dirclose::closure_ratio_estimate(0.235, 10) ==
        doctest::Approx(stepwise_estimate(0.235, 10)).epsilon(1e-12));
  CHECK(dirclose::closure_ratio_estimate(0.235, 10) == doctest::Approx(0.6037).epsilon(1e-3));
  for (const double s : {0.001, 0.01, 0.1, 0.5, 0.9}) {
    for (const unsigned d : {2u, 5u, 10u, 50u}) {
      CHECK(std::abs(dirclose::closure_ratio_estimate(s, d) - stepwise_estimate(s, d)) < 1e-12);
    }
  }
}

TEST_CASE("closure estimate is continuous and increasing in s") {
  for (const unsigned d : {2u, 5u, 10u}) {
    double previous = 0.0;
    for (int i = 1; i <= 1000; ++i) {
      const double s = double(i) / 1000.0;
      const double value = dirclose::closure_ratio_estimate(s, d);
      CHECK(value >= previous);
      CHECK(value <= 1.0);
      previous = value;
    }
    // Small-s behavior: c(s) ~ (d-1)/2 * s.
    const double s = 1e-6;
    const double linearized = double(d - 1) / 2.0 * s;
    CHECK(std::abs(dirclose::closure_ratio_estimate(s, d) - linearized) < 0.01 * linearized);
  }
}

TEST_CASE("final snapshot bookkeeping identities") {
  dirclose::Rng rng(14);
  const TemporalDigraph g = dirclose::test::random_graph(30, 260, rng);
  const DegreeSnapshot snapshot = dirclose::final_degree_snapshot(g);
  std::uint64_t degree_total = 0;
  for (NodeId n = 0; n < g.node_count(); ++n) {
    degree_total += snapshot.in_degree[n];
    CHECK(snapshot.follower_indegree_sum[n] <= snapshot.edge_count);
  }
  CHECK(degree_total == snapshot.edge_count);
}

TEST_CASE("estimated ratios: isolated nodes score zero") {
  TemporalDigraph g(6);
  g.append_edge(1, 0);
  g.append_edge(2, 0);
  g.append_edge(2, 1);
  const auto estimates = dirclose::estimate_final_closure_ratios(g, 0.3, 10);
  REQUIRE(estimates.size() == 6);
  CHECK(estimates[5] == 0.0);  // no in-edges, no followers
  CHECK(estimates[0] > 0.0);
}

TEST_CASE("per-step trace ends at the final-snapshot estimate") {
  dirclose::ModelParams params;
  params.kind = dirclose::ModelKind::PreferentialAttachment;
  params.node_count = 500;
  params.alpha = 0.3;
  params.edges_per_node = 5;
  params.seed = 4;
  const TemporalDigraph g = dirclose::generate_pa(params);
  const auto estimates = dirclose::estimate_final_closure_ratios(g, 0.3, 5);
  const NodeId j = dirclose::top_in_degree_nodes(g, 1).front();
  const auto trace = dirclose::closure_estimate_trace(g, j, 0.3, 5);
  REQUIRE(trace.size() == g.edge_count());
  CHECK(trace.back() == doctest::Approx(estimates[j]).epsilon(1e-12));
  // The estimate stabilizes: the last tenth of the trace stays near the end.
  const std::size_t tail_start = trace.size() - trace.size() / 10;
  for (std::size_t t = tail_start; t < trace.size(); ++t) {
    CHECK(std::abs(trace[t] - trace.back()) < 0.05);
  }
}
