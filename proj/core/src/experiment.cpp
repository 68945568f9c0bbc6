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

#include "dirclose/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "dirclose/correlation.hpp"
#include "dirclose/heuristic.hpp"
#include "dirclose/io.hpp"

namespace dirclose {

namespace {

constexpr std::string_view kVersion = "0.1.0";

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_optional(const std::optional<double>& v) {
  return v.has_value() ? format_double(*v) : "nan";
}

std::optional<double> safe_correlate(std::span<const double> xs, std::span<const double> ys,
                                     CorrelationMethod method) {
  try {
    return correlate(xs, ys, method);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::vector<AnalysisKind> canonical_analyses(const std::vector<AnalysisKind>& requested) {
  const AnalysisKind order[] = {AnalysisKind::Trajectories, AnalysisKind::Profiles,
                                AnalysisKind::RandTest, AnalysisKind::Heuristic,
                                AnalysisKind::Correlations};
  std::vector<AnalysisKind> result;
  for (AnalysisKind kind : order) {
    if (std::find(requested.begin(), requested.end(), kind) != requested.end()) {
      result.push_back(kind);
    }
  }
  return result;
}

bool wants(const std::vector<AnalysisKind>& analyses, AnalysisKind kind) {
  return std::find(analyses.begin(), analyses.end(), kind) != analyses.end();
}

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

void write_echo(std::ofstream& out, const CsvMetadata& echo) {
  for (const auto& [key, value] : echo) out << "# " << key << '=' << value << '\n';
}

std::optional<double> metadata_double(const CsvMetadata& meta, const std::string& key) {
  for (const auto& [k, v] : meta) {
    if (k == key) {
      try {
        return std::stod(v);
      } catch (...) {
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(AnalysisKind kind) {
  switch (kind) {
    case AnalysisKind::Trajectories: return "trajectories";
    case AnalysisKind::Profiles: return "profiles";
    case AnalysisKind::RandTest: return "randtest";
    case AnalysisKind::Heuristic: return "heuristic";
    case AnalysisKind::Correlations: return "correlations";
  }
  return "unknown";
}

CsvMetadata model_metadata(const ModelParams& params) {
  CsvMetadata meta;
  meta.emplace_back("tool", "dirclose");
  meta.emplace_back("version", std::string(kVersion));
  meta.emplace_back("model", to_string(params.kind));
  meta.emplace_back("n", std::to_string(params.node_count));
  meta.emplace_back("alpha", format_double(params.alpha));
  meta.emplace_back("d", std::to_string(params.edges_per_node));
  if (params.kind == ModelKind::PreferentialAttachmentCommunities) {
    meta.emplace_back("beta", format_double(params.beta));
    meta.emplace_back("communities", std::to_string(params.community_count));
    meta.emplace_back("alpha_semantics", "preferential_choice_probability");
  } else {
    meta.emplace_back("alpha_semantics", "uniform_choice_probability");
  }
  meta.emplace_back("model_seed", std::to_string(params.seed));
  return meta;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  // Structural validation first: every conflict detectable without touching
  // the input fails before any generation, parsing or analysis.
  const int sources = (config.model.has_value() ? 1 : 0) + (config.edges_path.has_value() ? 1 : 0) +
                      (config.lists_path.has_value() ? 1 : 0);
  if (sources != 1) {
    throw ConfigError("exactly one input source (model, edges CSV or list file) must be set");
  }
  if (config.analyses.empty()) throw ConfigError("no analyses requested");
  if (config.out_dir.empty()) throw ConfigError("out_dir must be set");
  const std::vector<AnalysisKind> analyses = canonical_analyses(config.analyses);
  if (config.exclude_undeterminable && !config.lists_path.has_value()) {
    throw ConfigError("exclude_undeterminable requires list-file input");
  }
  if (config.model.has_value()) {
    config.model->validate();
    if (config.require_communities &&
        config.model->kind != ModelKind::PreferentialAttachmentCommunities) {
      throw ConfigError("community analysis requested but the model carries no communities");
    }
  }
  if (config.lists_path.has_value() && wants(analyses, AnalysisKind::Heuristic) &&
      (!config.alpha_override.has_value() || !config.edges_per_node_override.has_value())) {
    throw ConfigError("heuristic analysis on list input needs alpha and edges-per-node");
  }

  // Resolve the input graph.
  TemporalDigraph graph;
  CsvMetadata input_metadata;
  std::vector<bool> has_out_list;
  if (config.model.has_value()) {
    graph = generate(*config.model);
  } else if (config.edges_path.has_value()) {
    EdgeCsv parsed = parse_edge_csv(*config.edges_path);
    graph = std::move(parsed.graph);
    input_metadata = std::move(parsed.metadata);
  } else {
    ListIngestResult parsed = parse_list_file(*config.lists_path);
    graph = std::move(parsed.graph);
    has_out_list = std::move(parsed.has_out_list);
  }

  if (config.require_communities && !graph.has_communities()) {
    throw ConfigError("community analysis requested but the graph carries no community labels");
  }

  // Growth parameters for the heuristic.
  std::optional<double> alpha = config.alpha_override;
  std::optional<unsigned> edges_per_node = config.edges_per_node_override;
  if (config.model.has_value()) {
    if (!alpha.has_value()) alpha = config.model->alpha;
    if (!edges_per_node.has_value()) edges_per_node = config.model->edges_per_node;
  } else {
    if (!alpha.has_value()) alpha = metadata_double(input_metadata, "alpha");
    if (!edges_per_node.has_value()) {
      if (const auto d = metadata_double(input_metadata, "d"); d.has_value() && *d >= 1.0) {
        edges_per_node = static_cast<unsigned>(*d);
      }
    }
  }
  if (wants(analyses, AnalysisKind::Heuristic) &&
      (!alpha.has_value() || !edges_per_node.has_value())) {
    throw ConfigError("heuristic analysis needs alpha and edges-per-node (flags or metadata)");
  }

  std::optional<NodeId> focus = config.focus_node;
  if (wants(analyses, AnalysisKind::RandTest)) {
    if (graph.edge_count() == 0) throw ConfigError("randomization test needs a nonempty graph");
    if (focus.has_value() && *focus >= graph.node_count()) {
      throw ConfigError("focus node out of range");
    }
    if (!focus.has_value()) focus = top_in_degree_nodes(graph, 1).front();
  }

  std::filesystem::create_directories(config.out_dir);

  // Configuration echo shared by every output file.
  CsvMetadata echo;
  echo.emplace_back("tool", "dirclose");
  echo.emplace_back("version", std::string(kVersion));
  if (config.model.has_value()) {
    echo.emplace_back("input", "model");
    for (auto& kv : model_metadata(*config.model)) {
      if (kv.first != "tool" && kv.first != "version") echo.push_back(kv);
    }
  } else if (config.edges_path.has_value()) {
    echo.emplace_back("input", "edges");
    echo.emplace_back("input_path", config.edges_path->string());
  } else {
    echo.emplace_back("input", "lists");
    echo.emplace_back("input_path", config.lists_path->string());
  }
  {
    std::string names;
    for (AnalysisKind kind : analyses) {
      if (!names.empty()) names += ',';
      names += to_string(kind);
    }
    echo.emplace_back("analyses", names);
  }
  echo.emplace_back("seed", std::to_string(config.seed));
  echo.emplace_back("top_trajectories", std::to_string(config.top_trajectories));
  echo.emplace_back("top_correlation", std::to_string(config.top_correlation));
  if (config.celebrity_bounds.has_value()) {
    echo.emplace_back("celebrity_bounds", std::to_string(config.celebrity_bounds->first) + ".." +
                                              std::to_string(config.celebrity_bounds->second));
  }
  if (wants(analyses, AnalysisKind::RandTest)) {
    echo.emplace_back("randtest_runs", std::to_string(config.randtest_runs));
    echo.emplace_back("randtest_min_group", std::to_string(config.randtest_min_group));
    echo.emplace_back("focus_node", std::to_string(*focus));
  }
  echo.emplace_back("k_mode", config.k_at_arrival ? "at_arrival" : "final");
  echo.emplace_back("exclude_undeterminable", config.exclude_undeterminable ? "true" : "false");
  echo.emplace_back("order", graph.order_is_synthetic() ? "synthetic" : "observed");

  ExperimentResult result;
  result.node_count = graph.node_count();
  result.edge_count = graph.edge_count();

  if (config.model.has_value()) {
    const std::filesystem::path path = config.out_dir / "edges.csv";
    emit_edge_csv(graph, path, model_metadata(*config.model));
    result.outputs.emplace("edges", path);
  }

  // Closure flags: list criterion when the global order is synthetic.
  const ClosureFlags flags =
      graph.order_is_synthetic() ? closure_flags_from_lists(graph) : closure_flags_streaming(graph);
  result.final_ratios = final_closure_ratios(graph, flags);

  const KLinkMode k_mode = config.k_at_arrival ? KLinkMode::AtArrival : KLinkMode::FinalGraph;

  for (const AnalysisKind kind : analyses) {
    switch (kind) {
      case AnalysisKind::Trajectories: {
        const std::filesystem::path path = config.out_dir / "trajectories.csv";
        std::ofstream out = open_csv(path);
        write_echo(out, echo);
        std::vector<NodeId> nodes;
        if (config.celebrity_bounds.has_value()) {
          const auto [lo, hi] = *config.celebrity_bounds;
          for (NodeId n : top_in_degree_nodes(graph, graph.node_count())) {
            const std::size_t d = graph.in_degree(n);
            if (d >= lo && d <= hi) nodes.push_back(n);
            if (nodes.size() == config.top_trajectories) break;
          }
        } else {
          nodes = top_in_degree_nodes(graph, config.top_trajectories);
        }
        out << "node,arrival_index,running_ratio\n";
        for (const NodeId n : nodes) {
          const std::vector<double> trajectory = closure_trajectory(graph, flags, n);
          for (std::size_t i = 0; i < trajectory.size(); ++i) {
            out << n << ',' << i << ',' << format_double(trajectory[i]) << '\n';
          }
        }
        if (!out.good()) throw ConfigError("write failed: " + path.string());
        result.outputs.emplace("trajectories", path);
        break;
      }
      case AnalysisKind::Profiles: {
        const std::filesystem::path path = config.out_dir / "profiles.csv";
        std::ofstream out = open_csv(path);
        write_echo(out, echo);
        const bool with_community = graph.has_communities();
        const bool with_fitness = graph.has_fitness();
        out << "node,in_degree,final_ratio,follower_indegree_sum";
        if (with_community) out << ",same_community_follower_indegree_sum,community";
        if (with_fitness) out << ",fitness";
        out << '\n';
        for (NodeId n = 0; n < graph.node_count(); ++n) {
          const FollowerDegreeSums sums = follower_indegree_sums(graph, n);
          out << n << ',' << graph.in_degree(n) << ',' << format_double(result.final_ratios[n])
              << ',' << sums.total;
          if (with_community) out << ',' << *sums.same_community << ',' << graph.community(n);
          if (with_fitness) out << ',' << format_double(graph.fitness(n));
          out << '\n';
        }
        if (!out.good()) throw ConfigError("write failed: " + path.string());
        result.outputs.emplace("profiles", path);
        break;
      }
      case AnalysisKind::RandTest: {
        const std::filesystem::path path = config.out_dir / "randtest.csv";
        std::ofstream out = open_csv(path);
        write_echo(out, echo);
        RandTestOptions options;
        options.runs = config.randtest_runs;
        options.min_group_size = config.randtest_min_group;
        options.k_mode = k_mode;
        std::vector<bool> evaluable;
        if (config.exclude_undeterminable) {
          evaluable = has_out_list;
          options.evaluable_mask = &evaluable;
        }
        const Rng rng(config.seed);
        const RandTestReport report = rand_test(graph, flags, *focus, options, rng);
        out << "# crossover_k="
            << (report.crossover_k.has_value() ? std::to_string(*report.crossover_k) : "inf")
            << '\n';
        out << "k,group_size,evaluable,observed_fraction,baseline_mean,baseline_min,baseline_max\n";
        for (const RandTestRow& row : report.rows) {
          out << row.k << ',' << row.group_size << ',' << row.evaluable << ','
              << format_double(row.observed) << ',' << format_double(row.baseline.mean) << ','
              << format_double(row.baseline.min) << ',' << format_double(row.baseline.max) << '\n';
        }
        if (!out.good()) throw ConfigError("write failed: " + path.string());
        result.outputs.emplace("randtest", path);
        result.randtest = report;
        break;
      }
      case AnalysisKind::Heuristic: {
        const std::filesystem::path path = config.out_dir / "heuristic.csv";
        std::ofstream out = open_csv(path);
        const std::vector<double> estimates =
            estimate_final_closure_ratios(graph, *alpha, *edges_per_node);
        const std::vector<NodeId> slice = top_in_degree_nodes(graph, config.top_correlation);
        double abs_err = 0.0;
        for (const NodeId n : slice) {
          abs_err += std::abs(result.final_ratios[n] - estimates[n]);
        }
        const double mae = slice.empty() ? 0.0 : abs_err / static_cast<double>(slice.size());
        write_echo(out, echo);
        out << "# heuristic_alpha=" << format_double(*alpha) << '\n';
        out << "# heuristic_d=" << *edges_per_node << '\n';
        out << "# mae_top_slice=" << format_double(mae) << '\n';
        out << "# mae_slice_size=" << slice.size() << '\n';
        out << "node,in_degree,measured_ratio,estimated_ratio\n";
        for (NodeId n = 0; n < graph.node_count(); ++n) {
          out << n << ',' << graph.in_degree(n) << ',' << format_double(result.final_ratios[n])
              << ',' << format_double(estimates[n]) << '\n';
        }
        if (!out.good()) throw ConfigError("write failed: " + path.string());
        result.outputs.emplace("heuristic", path);
        result.heuristic_mae = mae;
        result.heuristic_slice_size = slice.size();
        break;
      }
      case AnalysisKind::Correlations: {
        const std::filesystem::path path = config.out_dir / "correlations.csv";
        std::ofstream out = open_csv(path);
        write_echo(out, echo);
        const std::vector<NodeId> slice = top_in_degree_nodes(graph, config.top_correlation);
        std::vector<double> ratio;
        std::vector<double> in_degree;
        std::vector<double> follower_sum;
        std::vector<double> same_community_sum;
        for (const NodeId n : slice) {
          ratio.push_back(result.final_ratios[n]);
          in_degree.push_back(static_cast<double>(graph.in_degree(n)));
          const FollowerDegreeSums sums = follower_indegree_sums(graph, n);
          follower_sum.push_back(static_cast<double>(sums.total));
          if (graph.has_communities()) {
            same_community_sum.push_back(static_cast<double>(*sums.same_community));
          }
        }
        CorrelationSummary summary;
        summary.slice_size = slice.size();
        summary.pearson_ratio_vs_in_degree =
            safe_correlate(in_degree, ratio, CorrelationMethod::Pearson);
        summary.spearman_ratio_vs_in_degree =
            safe_correlate(in_degree, ratio, CorrelationMethod::Spearman);
        summary.pearson_ratio_vs_follower_sum =
            safe_correlate(follower_sum, ratio, CorrelationMethod::Pearson);
        summary.spearman_ratio_vs_follower_sum =
            safe_correlate(follower_sum, ratio, CorrelationMethod::Spearman);
        if (graph.has_communities()) {
          summary.pearson_ratio_vs_same_community_sum =
              safe_correlate(same_community_sum, ratio, CorrelationMethod::Pearson);
          summary.spearman_ratio_vs_same_community_sum =
              safe_correlate(same_community_sum, ratio, CorrelationMethod::Spearman);
        }
        out << "pair,method,slice_size,coefficient\n";
        const auto row = [&](const char* pair, const char* method,
                             const std::optional<double>& value) {
          out << pair << ',' << method << ',' << slice.size() << ',' << format_optional(value)
              << '\n';
        };
        row("final_ratio~in_degree", "pearson", summary.pearson_ratio_vs_in_degree);
        row("final_ratio~in_degree", "spearman", summary.spearman_ratio_vs_in_degree);
        row("final_ratio~follower_indegree_sum", "pearson", summary.pearson_ratio_vs_follower_sum);
        row("final_ratio~follower_indegree_sum", "spearman",
            summary.spearman_ratio_vs_follower_sum);
        if (graph.has_communities()) {
          row("final_ratio~same_community_follower_indegree_sum", "pearson",
              summary.pearson_ratio_vs_same_community_sum);
          row("final_ratio~same_community_follower_indegree_sum", "spearman",
              summary.spearman_ratio_vs_same_community_sum);
        }
        if (!out.good()) throw ConfigError("write failed: " + path.string());
        result.outputs.emplace("correlations", path);
        result.correlations = summary;
        break;
      }
    }
  }
  return result;
}

}  // namespace dirclose
