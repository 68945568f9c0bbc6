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

// Test-only helpers: small graph generators and independent brute-force
// oracles. The oracles deliberately avoid the library's incremental
// algorithms so they can serve as a second route for every check.

#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dirclose/closure.hpp"
#include "dirclose/rng.hpp"
#include "dirclose/temporal_graph.hpp"

namespace dirclose::test {

/// Random temporal digraph: n nodes, up to m distinct non-self edges in a
/// uniformly random arrival order.
inline TemporalDigraph random_graph(std::size_t n, std::size_t m, Rng& rng) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId src = 0; src < n; ++src) {
    for (NodeId dst = 0; dst < n; ++dst) {
      if (src != dst) pairs.emplace_back(src, dst);
    }
  }
  rng.shuffle(pairs);
  if (m > pairs.size()) m = pairs.size();
  TemporalDigraph g(n);
  for (std::size_t i = 0; i < m; ++i) g.append_edge(pairs[i].first, pairs[i].second);
  return g;
}

/// Quadratic oracle: an edge exhibits closure iff some pair of strictly
/// earlier edges forms a two-step path between its endpoints.
inline ClosureFlags closure_flags_bruteforce(const TemporalDigraph& g) {
  const auto edges = g.edges();
  ClosureFlags flags(edges.size(), false);
  for (const EdgeRecord& e : edges) {
    bool closed = false;
    for (const EdgeRecord& first : edges) {
      if (first.seq >= e.seq || first.src != e.src) continue;
      for (const EdgeRecord& second : edges) {
        if (second.seq >= e.seq) continue;
        if (second.src == first.dst && second.dst == e.dst) {
          closed = true;
          break;
        }
      }
      if (closed) break;
    }
    flags[e.seq] = closed;
  }
  return flags;
}

/// Brute-force k per follower of c: double loop over follower pairs.
inline std::map<NodeId, std::size_t> k_linked_bruteforce(const TemporalDigraph& g, NodeId c) {
  std::vector<NodeId> followers = g.in_list(c);
  std::map<NodeId, std::size_t> k_of;
  for (const NodeId a : followers) {
    std::size_t k = 0;
    for (const NodeId b : followers) {
      if (b != a && g.has_edge(a, b)) ++k;
    }
    k_of[a] = k;
  }
  return k_of;
}

/// Brute-force induced-subgraph edge filter: every edge with both endpoints
/// in {c} union followers(c), in original arrival order.
inline std::vector<std::pair<NodeId, NodeId>> induced_edges_bruteforce(const TemporalDigraph& g,
                                                                       NodeId c) {
  std::set<NodeId> keep;
  keep.insert(c);
  for (const NodeId a : g.in_list(c)) keep.insert(a);
  std::vector<std::pair<NodeId, NodeId>> result;
  for (const EdgeRecord& e : g.edges()) {
    if (keep.count(e.src) != 0 && keep.count(e.dst) != 0) result.emplace_back(e.src, e.dst);
  }
  return result;
}

/// O(n^2) fractional ranks.
inline std::vector<double> ranks_bruteforce(const std::vector<double>& v) {
  std::vector<double> result(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::size_t below = 0;
    std::size_t tied = 0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] < v[i]) ++below;
      if (v[j] == v[i]) ++tied;
    }
    result[i] = static_cast<double>(below) + 1.0 + static_cast<double>(tied - 1) / 2.0;
  }
  return result;
}

inline double pearson_bruteforce(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0;
  double sy = 0;
  double sxy = 0;
  double sxx = 0;
  double syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxy += xs[i] * ys[i];
    sxx += xs[i] * xs[i];
    syy += ys[i] * ys[i];
  }
  return (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

/// Scratch directory under the current working directory, wiped on entry.
inline std::filesystem::path scratch_dir(const std::string& name) {
  const std::filesystem::path dir = std::filesystem::path("test_scratch") / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace dirclose::test
