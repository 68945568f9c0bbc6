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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirclose/experiment.hpp"
#include "dirclose/genmodels.hpp"
#include "dirclose/io.hpp"

namespace {

using dirclose::AnalysisKind;

struct Options {
  std::string out_dir = ".";
  std::uint64_t seed = 0;
  std::string format = "csv";

  std::string model;
  std::size_t n = 10000;
  double alpha = 0.3;
  double beta = 0.8;
  unsigned d = 10;
  std::size_t communities = 100;
  std::string out_file;

  std::string edges_path;
  std::string lists_path;

  std::size_t top_trajectories = 10;
  std::size_t top_correlation = 100;
  bool celebrities = false;
  std::size_t min_followers = 10000;
  std::size_t max_followers = 50000;

  unsigned runs = 100;
  std::size_t min_group = 10;
  std::int64_t node = -1;
  bool k_at_arrival = false;
  bool exclude_undeterminable = false;
  bool require_communities = false;

  double alpha_override = -1.0;
  int d_override = -1;

  std::vector<std::string> analyses;
};

dirclose::ModelKind model_kind(const std::string& name) {
  if (name == "pa") return dirclose::ModelKind::PreferentialAttachment;
  if (name == "pa-fitness") return dirclose::ModelKind::PreferentialAttachmentFitness;
  if (name == "pa-communities") return dirclose::ModelKind::PreferentialAttachmentCommunities;
  throw CLI::ValidationError("--model", "unknown model '" + name + "'");
}

dirclose::ModelParams model_params(const Options& opt) {
  dirclose::ModelParams params;
  params.kind = model_kind(opt.model);
  params.node_count = opt.n;
  params.alpha = opt.alpha;
  params.beta = opt.beta;
  params.edges_per_node = opt.d;
  params.community_count = opt.communities;
  params.seed = opt.seed;
  return params;
}

AnalysisKind analysis_kind(const std::string& name) {
  if (name == "trajectories") return AnalysisKind::Trajectories;
  if (name == "profiles") return AnalysisKind::Profiles;
  if (name == "randtest") return AnalysisKind::RandTest;
  if (name == "heuristic") return AnalysisKind::Heuristic;
  if (name == "correlations") return AnalysisKind::Correlations;
  throw CLI::ValidationError("--analyses", "unknown analysis '" + name + "'");
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--out-dir", opt.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv"}))
      ->capture_default_str();
}

void add_input(CLI::App* cmd, Options& opt, bool allow_model) {
  auto* edges = cmd->add_option("--edges", opt.edges_path, "Temporal edge CSV input");
  auto* lists = cmd->add_option("--lists", opt.lists_path, "Chronological list-file input");
  edges->excludes(lists);
  if (allow_model) {
    auto* model = cmd->add_option("--model", opt.model,
                                  "Growth model: pa, pa-fitness or pa-communities");
    model->excludes(edges);
    model->excludes(lists);
    cmd->add_option("--n", opt.n, "Node count")->capture_default_str();
    cmd->add_option("--alpha", opt.alpha, "Model mixing parameter")->capture_default_str();
    cmd->add_option("--d", opt.d, "Edges per arriving node")->capture_default_str();
    cmd->add_option("--beta", opt.beta, "Own-community pool probability (pa-communities)")
        ->capture_default_str();
    cmd->add_option("--communities", opt.communities, "Community count (pa-communities)")
        ->capture_default_str();
  }
}

void add_analysis_knobs(CLI::App* cmd, Options& opt) {
  cmd->add_option("--top-trajectories", opt.top_trajectories,
                  "Trajectory output covers this many highest-in-degree nodes")
      ->capture_default_str();
  cmd->add_option("--top-correlation", opt.top_correlation,
                  "Correlation/heuristic slices cover this many highest-in-degree nodes")
      ->capture_default_str();
  cmd->add_flag("--celebrities", opt.celebrities,
                "Restrict trajectory nodes to the follower-count band");
  cmd->add_option("--min-followers", opt.min_followers, "Celebrity band lower bound")
      ->capture_default_str();
  cmd->add_option("--max-followers", opt.max_followers, "Celebrity band upper bound")
      ->capture_default_str();
  cmd->add_flag("--k-at-arrival", opt.k_at_arrival,
                "Measure per-follower k at edge arrival instead of on the final graph");
  cmd->add_flag("--exclude-undeterminable", opt.exclude_undeterminable,
                "Drop followers without an out-list from closure fractions (list input)");
  cmd->add_flag("--require-communities", opt.require_communities,
                "Fail unless the input graph carries community labels");
}

void add_randtest_knobs(CLI::App* cmd, Options& opt) {
  cmd->add_option("--runs", opt.runs, "Baseline simulation runs per k")->capture_default_str();
  cmd->add_option("--min-group", opt.min_group,
                  "Report rows only for groups strictly larger than this")
      ->capture_default_str();
  cmd->add_option("--node", opt.node, "Focus node (default: highest in-degree)");
}

dirclose::ExperimentConfig experiment_config(const Options& opt,
                                             std::vector<AnalysisKind> analyses) {
  dirclose::ExperimentConfig config;
  if (!opt.model.empty()) {
    config.model = model_params(opt);
  } else if (!opt.edges_path.empty()) {
    config.edges_path = opt.edges_path;
  } else if (!opt.lists_path.empty()) {
    config.lists_path = opt.lists_path;
  }
  config.analyses = std::move(analyses);
  config.out_dir = opt.out_dir;
  config.seed = opt.seed;
  config.top_trajectories = opt.top_trajectories;
  config.top_correlation = opt.top_correlation;
  if (opt.celebrities) config.celebrity_bounds = {opt.min_followers, opt.max_followers};
  config.randtest_runs = opt.runs;
  config.randtest_min_group = opt.min_group;
  if (opt.node >= 0) config.focus_node = static_cast<dirclose::NodeId>(opt.node);
  config.k_at_arrival = opt.k_at_arrival;
  config.exclude_undeterminable = opt.exclude_undeterminable;
  config.require_communities = opt.require_communities;
  if (opt.alpha_override >= 0.0) config.alpha_override = opt.alpha_override;
  if (opt.d_override >= 1) config.edges_per_node_override = static_cast<unsigned>(opt.d_override);
  return config;
}

void print_outputs(const dirclose::ExperimentResult& result) {
  for (const auto& [name, path] : result.outputs) {
    std::cout << name << ": " << path.string() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed-closure analysis for temporal networks"};
  app.set_version_flag("--version", "dirclose 0.1.0");
  app.require_subcommand(1);

  Options opt;

  // generate: grow a model graph and write it as an edge CSV.
  auto* generate = app.add_subcommand("generate", "Generate a growth-model graph");
  add_common(generate, opt);
  generate->add_option("--model", opt.model, "pa, pa-fitness or pa-communities")->required();
  generate->add_option("--n", opt.n, "Node count")->capture_default_str();
  generate->add_option("--alpha", opt.alpha, "Model mixing parameter")->capture_default_str();
  generate->add_option("--d", opt.d, "Edges per arriving node")->capture_default_str();
  generate->add_option("--beta", opt.beta, "Own-community pool probability (pa-communities)")
      ->capture_default_str();
  generate->add_option("--communities", opt.communities, "Community count (pa-communities)")
      ->capture_default_str();
  generate->add_option("--out", opt.out_file, "Output file (default <out-dir>/edges.csv)");
  generate->callback([&opt]() {
    const dirclose::ModelParams params = model_params(opt);
    const dirclose::TemporalDigraph graph = dirclose::generate(params);
    std::filesystem::create_directories(opt.out_dir);
    const std::filesystem::path path = opt.out_file.empty()
                                           ? std::filesystem::path(opt.out_dir) / "edges.csv"
                                           : std::filesystem::path(opt.out_file);
    dirclose::emit_edge_csv(graph, path, dirclose::model_metadata(params));
    std::cout << "edges: " << path.string() << '\n';
  });

  // ingest: normalize a chronological list file into an edge CSV.
  auto* ingest = app.add_subcommand("ingest", "Ingest a chronological list file");
  add_common(ingest, opt);
  ingest->add_option("--lists", opt.lists_path, "Chronological list file")->required();
  ingest->callback([&opt]() {
    const dirclose::ListIngestResult result = dirclose::parse_list_file(opt.lists_path);
    std::filesystem::create_directories(opt.out_dir);
    const std::filesystem::path edges = std::filesystem::path(opt.out_dir) / "edges.csv";
    const std::filesystem::path handles = std::filesystem::path(opt.out_dir) / "handles.csv";
    dirclose::CsvMetadata meta;
    meta.emplace_back("tool", "dirclose");
    meta.emplace_back("version", "0.1.0");
    meta.emplace_back("input", "lists");
    meta.emplace_back("input_path", opt.lists_path);
    dirclose::emit_edge_csv(result.graph, edges, meta);
    dirclose::emit_handle_map(result.handles, handles, &result.has_out_list);
    std::cout << "edges: " << edges.string() << '\n';
    std::cout << "handles: " << handles.string() << '\n';
  });

  // analyze: closure profiles, trajectories and correlation summary.
  auto* analyze = app.add_subcommand("analyze", "Closure ratios, trajectories and correlations");
  add_common(analyze, opt);
  add_input(analyze, opt, false);
  add_analysis_knobs(analyze, opt);
  analyze->callback([&opt]() {
    print_outputs(dirclose::run_experiment(experiment_config(
        opt, {AnalysisKind::Trajectories, AnalysisKind::Profiles, AnalysisKind::Correlations})));
  });

  // randtest: observed per-k closure fractions vs the random-ordering baseline.
  auto* randtest = app.add_subcommand("randtest", "Random-ordering closure test");
  add_common(randtest, opt);
  add_input(randtest, opt, false);
  add_randtest_knobs(randtest, opt);
  randtest->add_flag("--k-at-arrival", opt.k_at_arrival,
                     "Measure per-follower k at edge arrival instead of on the final graph");
  randtest->add_flag("--exclude-undeterminable", opt.exclude_undeterminable,
                     "Drop followers without an out-list from closure fractions (list input)");
  randtest->callback([&opt]() {
    print_outputs(dirclose::run_experiment(experiment_config(opt, {AnalysisKind::RandTest})));
  });

  // approx: closed-form closure-ratio estimate vs measured ratios.
  auto* approx = app.add_subcommand("approx", "Closure-ratio estimate vs measurement");
  add_common(approx, opt);
  add_input(approx, opt, false);
  approx->add_option("--alpha", opt.alpha_override,
                     "Growth alpha (default: recovered from input metadata)");
  approx->add_option("--d", opt.d_override,
                     "Growth edges-per-node (default: recovered from input metadata)");
  approx->add_option("--top-correlation", opt.top_correlation,
                     "Error summary covers this many highest-in-degree nodes")
      ->capture_default_str();
  approx->callback([&opt]() {
    print_outputs(dirclose::run_experiment(experiment_config(opt, {AnalysisKind::Heuristic})));
  });

  // report: the full bundle.
  auto* report = app.add_subcommand("report", "Run every analysis and write the full bundle");
  add_common(report, opt);
  add_input(report, opt, true);
  add_analysis_knobs(report, opt);
  add_randtest_knobs(report, opt);
  report->add_option("--alpha-override", opt.alpha_override,
                     "Growth alpha for the heuristic on ingested inputs");
  report->add_option("--d-override", opt.d_override,
                     "Growth edges-per-node for the heuristic on ingested inputs");
  report->add_option("--analyses", opt.analyses,
                     "Subset of: trajectories profiles randtest heuristic correlations")
      ->delimiter(',');
  report->callback([&opt]() {
    std::vector<AnalysisKind> kinds;
    if (!opt.analyses.empty()) {
      for (const std::string& name : opt.analyses) kinds.push_back(analysis_kind(name));
    } else {
      kinds = {AnalysisKind::Trajectories, AnalysisKind::Profiles, AnalysisKind::RandTest,
               AnalysisKind::Correlations};
      const bool heuristic_possible = !opt.model.empty() || !opt.edges_path.empty() ||
                                      (opt.alpha_override >= 0.0 && opt.d_override >= 1);
      if (heuristic_possible) kinds.push_back(AnalysisKind::Heuristic);
    }
    print_outputs(dirclose::run_experiment(experiment_config(opt, std::move(kinds))));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
