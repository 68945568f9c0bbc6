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
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dirclose/closure.hpp"
#include "dirclose/genmodels.hpp"
#include "dirclose/rand_baseline.hpp"
#include "dirclose/temporal_graph.hpp"

namespace dirclose {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AnalysisKind {
  Trajectories,
  Profiles,
  RandTest,
  Heuristic,
  Correlations,
};

std::string to_string(AnalysisKind kind);

/// Everything one experiment run needs. Exactly one input source (model,
/// edge CSV, or list file) must be set.
struct ExperimentConfig {
  std::optional<ModelParams> model;
  std::optional<std::filesystem::path> edges_path;
  std::optional<std::filesystem::path> lists_path;

  std::vector<AnalysisKind> analyses;
  std::filesystem::path out_dir;

  /// Seed for the randomization test (model generation uses model->seed).
  std::uint64_t seed = 0;

  /// Trajectory CSV covers this many highest-in-degree nodes.
  std::size_t top_trajectories = 10;
  /// Correlation coefficients are computed over this many highest-in-degree
  /// nodes.
  std::size_t top_correlation = 100;
  /// Restrict trajectory nodes to in-degrees within these bounds.
  std::optional<std::pair<std::size_t, std::size_t>> celebrity_bounds;

  unsigned randtest_runs = 100;
  std::size_t randtest_min_group = 10;
  /// Node for the randomization test; defaults to the highest in-degree node.
  std::optional<NodeId> focus_node;

  /// Measure per-follower k at edge arrival time instead of on the final
  /// graph (sensitivity analysis).
  bool k_at_arrival = false;
  /// Drop followers without an out-list from closure-fraction denominators.
  /// Only valid for list-file input.
  bool exclude_undeterminable = false;
  /// Fail unless the graph carries community labels.
  bool require_communities = false;

  /// Growth parameters for the heuristic when not recoverable from the input
  /// (model input and generated CSVs carry them).
  std::optional<double> alpha_override;
  std::optional<unsigned> edges_per_node_override;
};

struct CorrelationSummary {
  std::size_t slice_size = 0;
  std::optional<double> pearson_ratio_vs_in_degree;
  std::optional<double> spearman_ratio_vs_in_degree;
  std::optional<double> pearson_ratio_vs_follower_sum;
  std::optional<double> spearman_ratio_vs_follower_sum;
  std::optional<double> pearson_ratio_vs_same_community_sum;
  std::optional<double> spearman_ratio_vs_same_community_sum;
};

struct ExperimentResult {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  /// Files written, keyed by analysis name ("edges", "profiles", ...).
  std::map<std::string, std::filesystem::path> outputs;

  std::vector<double> final_ratios;
  std::optional<CorrelationSummary> correlations;
  /// Mean absolute error between measured and estimated closure ratio over
  /// the top_correlation slice, when the heuristic analysis ran.
  std::optional<double> heuristic_mae;
  std::size_t heuristic_slice_size = 0;
  std::optional<RandTestReport> randtest;
};

/// Validates the configuration, resolves the input graph, computes closure
/// flags (list criterion for list-derived graphs, streaming replay
/// otherwise), runs the requested analyses and writes one CSV per analysis
/// into out_dir. Every CSV starts with '# key=value' lines echoing the full
/// configuration, so runs are reproducible from any output file. Outputs are
/// byte-deterministic for a fixed configuration.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Metadata lines describing a model run, suitable for emit_edge_csv; the
/// alpha and d entries let downstream analyses recover the growth parameters.
std::vector<std::pair<std::string, std::string>> model_metadata(const ModelParams& params);

}  // namespace dirclose
