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
#include <numeric>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "dirclose/genmodels.hpp"
#include "dirclose/rand_baseline.hpp"
#include "test_util.hpp"

using dirclose::BaselineEstimate;
using dirclose::ExactMode;
using dirclose::NodeId;
using dirclose::Rational;
using dirclose::Rng;
using dirclose::TemporalDigraph;

TEST_CASE("rational arithmetic normalizes and compares exactly") {
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 1) - Rational(3, 5) + Rational(1, 7) == Rational(19, 35));
  CHECK(Rational(1, 3) < Rational(7, 15));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(1, -2).num() == -1);
}

TEST_CASE("star trial with no parallel paths never closes") {
  Rng rng(1);
  for (int i = 0; i < 200; ++i) CHECK_FALSE(dirclose::star_trial(0, rng));
}

TEST_CASE("star trial frequencies approach the enumerated probabilities") {
  constexpr std::size_t kTrials = 100000;
  for (const unsigned k : {1u, 2u, 3u}) {
    Rng rng(900 + k);
    std::size_t closed = 0;
    for (std::size_t i = 0; i < kTrials; ++i) {
      if (dirclose::star_trial(k, rng)) ++closed;
    }
    const double p = dirclose::exact_star_closure_probability(k).to_double();
    const double tolerance = 3.0 * std::sqrt(p * (1.0 - p) / double(kTrials));
    CHECK(std::abs(double(closed) / double(kTrials) - p) < tolerance);
  }
}

TEST_CASE("star trial agrees with the streaming detector on materialized stars") {
  // Build the 2k+1 edge star under explicit random orders and compare the
  // positional closure predicate with a full graph replay.
  Rng rng(77);
  for (int round = 0; round < 200; ++round) {
    const unsigned k = 1 + static_cast<unsigned>(rng.uniform_index(5));
    const std::size_t edge_count = 2 * k + 1;
    std::vector<std::uint32_t> pos(edge_count);
    std::iota(pos.begin(), pos.end(), 0u);
    rng.shuffle(pos);

    bool predicted = false;
    for (unsigned i = 1; i <= k; ++i) {
      if (pos[i] < pos[0] && pos[k + i] < pos[0]) predicted = true;
    }

    // Nodes: 0 = a, 1 = c, 2..k+1 = b_i. Edge e sits at arrival slot pos[e].
    std::vector<std::pair<NodeId, NodeId>> edge_of_slot(edge_count);
    edge_of_slot[pos[0]] = {0, 1};
    for (unsigned i = 1; i <= k; ++i) {
      edge_of_slot[pos[i]] = {0, static_cast<NodeId>(1 + i)};
      edge_of_slot[pos[k + i]] = {static_cast<NodeId>(1 + i), 1};
    }
    TemporalDigraph g(k + 2);
    for (const auto& [src, dst] : edge_of_slot) g.append_edge(src, dst);
    const auto flags = dirclose::closure_flags_streaming(g);
    CHECK(flags[*g.edge_seq(0, 1)] == predicted);
  }
}

TEST_CASE("exact probabilities: enumresults match the closed form") {
  CHECK(dirclose::exact_star_closure_probability(0, ExactMode::Enumerate) == Rational(0, 1));
  CHECK(dirclose::exact_star_closure_probability(1, ExactMode::Enumerate) == Rational(1, 3));
  CHECK(dirclose::exact_star_closure_probability(2, ExactMode::Enumerate) == Rational(7, 15));
  CHECK(dirclose::exact_star_closure_probability(3, ExactMode::Enumerate) == Rational(19, 35));
  for (unsigned k = 0; k <= 6; ++k) {
    CHECK(dirclose::exact_star_closure_probability(k, ExactMode::Enumerate) ==
          dirclose::exact_star_closure_probability(k, ExactMode::Formula));
  }
}

TEST_CASE("exact probability is strictly increasing in k and bounded by 1") {
  Rational previous(0, 1);
  for (unsigned k = 1; k <= 20; ++k) {
    const Rational p = dirclose::exact_star_closure_probability(k);
    CHECK(previous < p);
    CHECK(p < Rational(1, 1));
    previous = p;
  }
}

TEST_CASE("exact probability rejects out-of-range k") {
  CHECK_THROWS_AS(dirclose::exact_star_closure_probability(7, ExactMode::Enumerate),
                  std::invalid_argument);
  CHECK_THROWS_AS(dirclose::exact_star_closure_probability(21, ExactMode::Formula),
                  std::invalid_argument);
  CHECK_THROWS_WITH_AS(dirclose::exact_star_closure_probability(21),
                       doctest::Contains("Monte Carlo"), std::invalid_argument);
}

TEST_CASE("baseline estimate at k=0 is identically zero") {
  const Rng rng(4);
  const BaselineEstimate est = dirclose::baseline_closure_fraction(0, 50, 100, rng);
  CHECK(est.mean == 0.0);
  CHECK(est.min == 0.0);
  CHECK(est.max == 0.0);
}

TEST_CASE("baseline estimate concentrates around the exact value") {
  const Rng rng(10);
  const BaselineEstimate est = dirclose::baseline_closure_fraction(1, 100000, 100, rng);
  const double p = 1.0 / 3.0;
  const double tolerance = 3.0 * std::sqrt(p * (1.0 - p) / 100000.0);
  CHECK(std::abs(est.mean - p) < tolerance);
  CHECK(est.min <= est.mean);
  CHECK(est.mean <= est.max);
}

TEST_CASE("baseline estimate with small samples spreads around the mean") {
  const Rng rng(12);
  const BaselineEstimate est = dirclose::baseline_closure_fraction(1, 11, 100, rng);
  CHECK(est.min <= est.mean);
  CHECK(est.mean <= est.max);
  CHECK(est.min < est.max);
}

TEST_CASE("baseline estimate is reproducible for a fixed seed") {
  const Rng a(99);
  const Rng b(99);
  const BaselineEstimate ea = dirclose::baseline_closure_fraction(3, 500, 100, a);
  const BaselineEstimate eb = dirclose::baseline_closure_fraction(3, 500, 100, b);
  CHECK(ea.mean == eb.mean);
  CHECK(ea.min == eb.min);
  CHECK(ea.max == eb.max);
}

TEST_CASE("baseline estimate validates its sizes") {
  const Rng rng(1);
  CHECK_THROWS_AS(dirclose::baseline_closure_fraction(1, 0, 100, rng), std::invalid_argument);
  CHECK_THROWS_AS(dirclose::baseline_closure_fraction(1, 10, 0, rng), std::invalid_argument);
}

namespace {

// Celebrity with 12 followers that each follow the bridge node b; the order
// of each follower's own edges decides whether its edge to c closes.
TemporalDigraph synthetic_group(bool close_last) {
  TemporalDigraph g(14);
  const NodeId c = 0;
  const NodeId b = 1;
  if (close_last) {
    g.append_edge(b, c);
    for (NodeId a = 2; a < 14; ++a) {
      g.append_edge(a, b);
      g.append_edge(a, c);
    }
  } else {
    for (NodeId a = 2; a < 14; ++a) g.append_edge(a, c);
    for (NodeId a = 2; a < 14; ++a) g.append_edge(a, b);
    g.append_edge(b, c);
  }
  return g;
}

}  // namespace

TEST_CASE("rand test: construction where every group edge closes") {
  const TemporalDigraph g = synthetic_group(true);
  const auto flags = dirclose::closure_flags_streaming(g);
  dirclose::RandTestOptions options;
  const auto report = dirclose::rand_test(g, flags, 0, options, Rng(31));
  REQUIRE(report.rows.size() == 1);
  const auto& row = report.rows.front();
  CHECK(row.k == 1);
  CHECK(row.group_size == 12);
  CHECK(row.observed == 1.0);
  CHECK(row.observed > row.baseline.max);
  CHECK_FALSE(report.crossover_k.has_value());
}

TEST_CASE("rand test: construction where no group edge closes") {
  const TemporalDigraph g = synthetic_group(false);
  const auto flags = dirclose::closure_flags_streaming(g);
  dirclose::RandTestOptions options;
  const auto report = dirclose::rand_test(g, flags, 0, options, Rng(32));
  REQUIRE(report.rows.size() == 1);
  const auto& row = report.rows.front();
  CHECK(row.k == 1);
  CHECK(row.observed == 0.0);
  CHECK(row.baseline.min >= 0.0);
}

TEST_CASE("rand test report shape is stable across baseline seeds") {
  dirclose::ModelParams params;
  params.kind = dirclose::ModelKind::PreferentialAttachmentCommunities;
  params.node_count = 2000;
  params.alpha = 0.3;
  params.beta = 0.8;
  params.edges_per_node = 10;
  params.community_count = 20;
  params.seed = 8;
  const TemporalDigraph g = dirclose::generate_pa_communities(params);
  const auto flags = dirclose::closure_flags_streaming(g);
  const NodeId c = dirclose::top_in_degree_nodes(g, 1).front();

  dirclose::RandTestOptions options;
  std::vector<std::size_t> row_counts;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto report = dirclose::rand_test(g, flags, c, options, Rng(seed));
    row_counts.push_back(report.rows.size());
    for (const auto& row : report.rows) {
      CHECK(row.group_size > options.min_group_size);
      CHECK(row.baseline.min <= row.baseline.mean);
      CHECK(row.baseline.mean <= row.baseline.max);
      // 100-run min/max brackets the true chance level for every seed.
      if (row.k <= 6) {
        const double exact =
            dirclose::exact_star_closure_probability(static_cast<unsigned>(row.k)).to_double();
        CHECK(row.baseline.min <= exact);
        CHECK(exact <= row.baseline.max);
      }
      if (row.k == 0) CHECK(row.observed == 0.0);
    }
  }
  for (const std::size_t count : row_counts) CHECK(count == row_counts.front());
}

TEST_CASE("rand test is reproducible for a fixed seed") {
  const TemporalDigraph g = synthetic_group(true);
  const auto flags = dirclose::closure_flags_streaming(g);
  dirclose::RandTestOptions options;
  const auto a = dirclose::rand_test(g, flags, 0, options, Rng(5));
  const auto b = dirclose::rand_test(g, flags, 0, options, Rng(5));
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].observed == b.rows[i].observed);
    CHECK(a.rows[i].baseline.mean == b.rows[i].baseline.mean);
    CHECK(a.rows[i].baseline.min == b.rows[i].baseline.min);
    CHECK(a.rows[i].baseline.max == b.rows[i].baseline.max);
  }
  CHECK(a.crossover_k == b.crossover_k);
}
