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

#include "dirclose/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <queue>
#include <sstream>

namespace dirclose {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) tokens.push_back(s.substr(start, i - start));
  }
  return tokens;
}

std::vector<std::string_view> split_char(std::string_view s, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      fields.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return fields;
}

template <typename Int>
std::optional<Int> parse_int(std::string_view field) {
  field = trim(field);
  Int value{};
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || field.empty()) return std::nullopt;
  return value;
}

std::optional<double> parse_double(std::string_view field) {
  field = trim(field);
  double value{};
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || field.empty()) return std::nullopt;
  return value;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::uint64_t pair_key(NodeId src, NodeId dst) {
  return (static_cast<std::uint64_t>(src) << 32) | dst;
}

}  // namespace

std::string HandleMap::normalize(std::string_view handle) {
  std::string result(handle);
  for (char& c : result) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return result;
}

NodeId HandleMap::intern(std::string_view handle) {
  std::string key = normalize(handle);
  auto it = node_by_handle.find(key);
  if (it != node_by_handle.end()) return it->second;
  const NodeId id = static_cast<NodeId>(handle_by_node.size());
  handle_by_node.push_back(key);
  node_by_handle.emplace(std::move(key), id);
  return id;
}

NodeId HandleMap::require(std::string_view handle) const {
  auto it = node_by_handle.find(normalize(handle));
  if (it == node_by_handle.end()) {
    throw GraphError("unknown handle: " + std::string(handle));
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// list files

ListIngestResult parse_list_file(const std::filesystem::path& path) {
  const std::vector<std::string> lines = read_lines(path);

  struct PendingEdge {
    NodeId src;
    NodeId dst;
    bool in_asserted = false;
    bool out_asserted = false;
  };
  HandleMap handles;
  std::vector<PendingEdge> edges;
  std::unordered_map<std::uint64_t, std::size_t> edge_of_pair;
  // Precedence constraints between edge indices implied by list order.
  std::vector<std::pair<std::size_t, std::size_t>> precedes;
  std::unordered_map<std::uint64_t, std::size_t> list_definition_line;  // (dir, subject)
  std::vector<bool> out_listed_nodes;  // grown lazily below

  auto edge_index_for = [&](NodeId src, NodeId dst) {
    const std::uint64_t key = pair_key(src, dst);
    auto it = edge_of_pair.find(key);
    if (it != edge_of_pair.end()) return it->second;
    const std::size_t idx = edges.size();
    edges.push_back({src, dst});
    edge_of_pair.emplace(key, idx);
    return idx;
  };

  std::vector<std::pair<NodeId, bool>> subjects_with_out;  // (node, has out list)

  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    std::string_view line = trim(lines[ln]);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(path, line_no, "expected '<in|out> <handle>: ...'");
    }
    const auto head = split_whitespace(line.substr(0, colon));
    if (head.size() != 2 || (head[0] != "in" && head[0] != "out")) {
      throw ParseError(path, line_no, "record must start with 'in <handle>:' or 'out <handle>:'");
    }
    const bool is_in = head[0] == "in";
    const NodeId subject = handles.intern(head[1]);

    const std::uint64_t def_key = (static_cast<std::uint64_t>(is_in) << 32) | subject;
    if (!list_definition_line.emplace(def_key, line_no).second) {
      throw ParseError(path, line_no,
                       "list for '" + HandleMap::normalize(head[1]) + "' already defined");
    }
    if (!is_in) {
      if (subject >= out_listed_nodes.size()) out_listed_nodes.resize(subject + 1, false);
      out_listed_nodes[subject] = true;
    }

    std::vector<NodeId> neighbors;
    std::unordered_map<NodeId, bool> seen_neighbor;
    for (const auto token : split_whitespace(line.substr(colon + 1))) {
      const NodeId neighbor = handles.intern(token);
      if (neighbor == subject) {
        throw ParseError(path, line_no, "handle cannot appear in its own list");
      }
      if (!seen_neighbor.emplace(neighbor, true).second) {
        throw ParseError(path, line_no,
                         "duplicate neighbor '" + HandleMap::normalize(token) + "'");
      }
      neighbors.push_back(neighbor);
    }

    std::size_t previous = SIZE_MAX;
    for (const NodeId neighbor : neighbors) {
      const std::size_t idx = is_in ? edge_index_for(neighbor, subject)
                                    : edge_index_for(subject, neighbor);
      if (is_in) {
        edges[idx].in_asserted = true;
      } else {
        edges[idx].out_asserted = true;
      }
      if (previous != SIZE_MAX) precedes.emplace_back(previous, idx);
      previous = idx;
    }
  }

  // Topological order over the per-list precedence constraints, ties broken
  // by first-assertion order so the synthesized chronology is deterministic.
  const std::size_t edge_count = edges.size();
  std::vector<std::vector<std::size_t>> succ(edge_count);
  std::vector<std::size_t> pending(edge_count, 0);
  for (const auto& [before, after] : precedes) {
    succ[before].push_back(after);
    ++pending[after];
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < edge_count; ++i) {
    if (pending[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> order;
  order.reserve(edge_count);
  while (!ready.empty()) {
    const std::size_t idx = ready.top();
    ready.pop();
    order.push_back(idx);
    for (const std::size_t next : succ[idx]) {
      if (--pending[next] == 0) ready.push(next);
    }
  }
  if (order.size() != edge_count) {
    throw ParseError(path.string() + ": lists admit no consistent chronology (ordering cycle)");
  }

  ListIngestResult result;
  result.handles = std::move(handles);
  const std::size_t node_count = result.handles.handle_by_node.size();
  result.graph = TemporalDigraph(node_count);
  result.evidence.reserve(edge_count);
  for (const std::size_t idx : order) {
    const PendingEdge& e = edges[idx];
    result.graph.append_edge(e.src, e.dst);
    result.evidence.push_back(e.in_asserted && e.out_asserted ? EdgeEvidence::BothLists
                              : e.in_asserted                 ? EdgeEvidence::InListOnly
                                                              : EdgeEvidence::OutListOnly);
  }
  result.graph.mark_order_synthetic();
  result.has_out_list.assign(node_count, false);
  for (std::size_t n = 0; n < out_listed_nodes.size(); ++n) {
    if (out_listed_nodes[n]) result.has_out_list[n] = true;
  }
  return result;
}

void emit_list_file(const TemporalDigraph& g, const std::filesystem::path& path,
                    const HandleMap* handles) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  auto handle = [&](NodeId n) -> std::string {
    if (handles != nullptr && n < handles->handle_by_node.size()) {
      return handles->handle_by_node[n];
    }
    return "n" + std::to_string(n);
  };
  for (NodeId a = 0; a < g.node_count(); ++a) {
    if (g.out_degree(a) == 0) continue;
    out << "out " << handle(a) << ":";
    for (const Arc& arc : g.out_arcs(a)) out << ' ' << handle(arc.node);
    out << '\n';
  }
  for (NodeId c = 0; c < g.node_count(); ++c) {
    if (g.in_degree(c) == 0) continue;
    out << "in " << handle(c) << ":";
    for (const Arc& arc : g.in_arcs(c)) out << ' ' << handle(arc.node);
    out << '\n';
  }
  if (!out.good()) throw ParseError("write failed: " + path.string());
}

void emit_handle_map(const HandleMap& handles, const std::filesystem::path& path,
                     const std::vector<bool>* has_out_list) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << "node,handle";
  if (has_out_list != nullptr) out << ",has_out_list";
  out << '\n';
  for (std::size_t n = 0; n < handles.handle_by_node.size(); ++n) {
    out << n << ',' << handles.handle_by_node[n];
    if (has_out_list != nullptr) out << ',' << (has_out_list->at(n) ? 1 : 0);
    out << '\n';
  }
  if (!out.good()) throw ParseError("write failed: " + path.string());
}

// ---------------------------------------------------------------------------
// edge CSVs

namespace {

struct NodeAttrs {
  std::optional<std::uint32_t> community;
  std::optional<double> fitness;
};

void merge_attr(const std::filesystem::path& path, std::size_t line_no,
                std::unordered_map<NodeId, NodeAttrs>& attrs, NodeId node,
                std::optional<std::uint32_t> community, std::optional<double> fitness) {
  NodeAttrs& slot = attrs[node];
  if (community.has_value()) {
    if (slot.community.has_value() && *slot.community != *community) {
      throw ParseError(path, line_no,
                       "conflicting community for node " + std::to_string(node));
    }
    slot.community = community;
  }
  if (fitness.has_value()) {
    if (slot.fitness.has_value() && *slot.fitness != *fitness) {
      throw ParseError(path, line_no, "conflicting fitness for node " + std::to_string(node));
    }
    slot.fitness = fitness;
  }
}

}  // namespace

EdgeCsv parse_edge_csv(const std::filesystem::path& path) {
  const std::vector<std::string> lines = read_lines(path);

  EdgeCsv result;
  std::unordered_map<NodeId, NodeAttrs> attrs;
  std::optional<std::size_t> declared_nodes;
  bool synthetic_order = false;

  struct Row {
    NodeId src;
    NodeId dst;
    std::uint64_t seq;
    std::size_t line_no;
    std::optional<std::uint32_t> community;
    std::optional<double> fitness;
  };
  std::vector<Row> rows;
  bool has_community_col = false;
  bool has_fitness_col = false;
  bool header_seen = false;

  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const std::size_t line_no = ln + 1;
    std::string_view line = trim(lines[ln]);
    if (line.empty()) continue;

    if (line.front() == '#') {
      std::string_view body = trim(line.substr(1));
      if (body.rfind("node_attr:", 0) == 0) {
        const auto tokens = split_whitespace(body.substr(std::string_view("node_attr:").size()));
        if (tokens.empty()) throw ParseError(path, line_no, "node_attr without a node id");
        const auto id = parse_int<NodeId>(tokens[0]);
        if (!id.has_value()) throw ParseError(path, line_no, "node_attr id must be an integer");
        std::optional<std::uint32_t> community;
        std::optional<double> fitness;
        for (std::size_t t = 1; t < tokens.size(); ++t) {
          const auto kv = split_char(tokens[t], '=');
          if (kv.size() != 2) throw ParseError(path, line_no, "node_attr expects key=value");
          if (kv[0] == "community") {
            community = parse_int<std::uint32_t>(kv[1]);
            if (!community.has_value()) {
              throw ParseError(path, line_no, "node_attr community must be an integer");
            }
          } else if (kv[0] == "fitness") {
            fitness = parse_double(kv[1]);
            if (!fitness.has_value()) {
              throw ParseError(path, line_no, "node_attr fitness must be a number");
            }
          } else {
            throw ParseError(path, line_no, "unknown node_attr key");
          }
        }
        merge_attr(path, line_no, attrs, *id, community, fitness);
      } else if (const std::size_t eq = body.find('='); eq != std::string_view::npos) {
        const std::string key(trim(body.substr(0, eq)));
        const std::string value(trim(body.substr(eq + 1)));
        if (key == "nodes") {
          const auto n = parse_int<std::size_t>(value);
          if (!n.has_value()) throw ParseError(path, line_no, "nodes must be an integer");
          declared_nodes = n;
        } else if (key == "order") {
          synthetic_order = value == "synthetic";
        } else {
          result.metadata.emplace_back(key, value);
        }
      }
      continue;
    }

    if (!header_seen) {
      const auto cols = split_char(line, ',');
      if (cols.size() < 3 || trim(cols[0]) != "src" || trim(cols[1]) != "dst" ||
          trim(cols[2]) != "seq") {
        throw ParseError(path, line_no, "header must start with src,dst,seq");
      }
      std::size_t next = 3;
      if (next < cols.size() && trim(cols[next]) == "community") {
        has_community_col = true;
        ++next;
      }
      if (next < cols.size() && trim(cols[next]) == "fitness") {
        has_fitness_col = true;
        ++next;
      }
      if (next != cols.size()) {
        throw ParseError(path, line_no, "unsupported header columns");
      }
      header_seen = true;
      continue;
    }

    const auto fields = split_char(line, ',');
    const std::size_t expected = 3 + (has_community_col ? 1 : 0) + (has_fitness_col ? 1 : 0);
    if (fields.size() != expected) {
      throw ParseError(path, line_no, "expected " + std::to_string(expected) + " fields");
    }
    const auto src = parse_int<NodeId>(fields[0]);
    const auto dst = parse_int<NodeId>(fields[1]);
    const auto seq = parse_int<std::uint64_t>(fields[2]);
    if (!src.has_value() || !dst.has_value() || !seq.has_value()) {
      throw ParseError(path, line_no, "src, dst and seq must be non-negative integers");
    }
    Row row{*src, *dst, *seq, line_no, std::nullopt, std::nullopt};
    std::size_t next = 3;
    if (has_community_col) {
      row.community = parse_int<std::uint32_t>(fields[next]);
      if (!row.community.has_value()) {
        throw ParseError(path, line_no, "community must be a non-negative integer");
      }
      ++next;
    }
    if (has_fitness_col) {
      row.fitness = parse_double(fields[next]);
      if (!row.fitness.has_value()) {
        throw ParseError(path, line_no, "fitness must be a number");
      }
    }
    rows.push_back(row);
  }

  if (!header_seen && !rows.empty()) {
    throw ParseError(path.string() + ": missing header");
  }

  // seq values must be exactly 0..E-1.
  std::vector<std::size_t> row_of_seq(rows.size(), SIZE_MAX);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    if (row.seq >= rows.size()) {
      throw ParseError(path, row.line_no,
                       "seq " + std::to_string(row.seq) + " out of range (edge count " +
                           std::to_string(rows.size()) + "); seq must be contiguous from 0");
    }
    if (row_of_seq[row.seq] != SIZE_MAX) {
      throw ParseError(path, row.line_no, "duplicate seq " + std::to_string(row.seq));
    }
    row_of_seq[row.seq] = i;
  }

  std::size_t node_count = declared_nodes.value_or(0);
  for (const Row& row : rows) {
    node_count = std::max({node_count, static_cast<std::size_t>(row.src) + 1,
                           static_cast<std::size_t>(row.dst) + 1});
  }
  if (declared_nodes.has_value() && node_count > *declared_nodes) {
    throw ParseError(path.string() + ": node id exceeds declared node count");
  }

  result.graph = TemporalDigraph(node_count);
  if (synthetic_order) result.graph.mark_order_synthetic();
  for (const std::size_t i : row_of_seq) {
    const Row& row = rows[i];
    try {
      result.graph.append_edge(row.src, row.dst);
    } catch (const GraphError& e) {
      throw ParseError(path, row.line_no, e.what());
    }
    merge_attr(path, row.line_no, attrs, row.src, row.community, row.fitness);
  }

  if (has_community_col) {
    std::vector<std::uint32_t> labels(node_count);
    for (NodeId n = 0; n < node_count; ++n) {
      auto it = attrs.find(n);
      if (it == attrs.end() || !it->second.community.has_value()) {
        throw ParseError(path.string() + ": missing community for node " + std::to_string(n));
      }
      labels[n] = *it->second.community;
    }
    result.graph.set_communities(std::move(labels));
  }
  if (has_fitness_col) {
    std::vector<double> values(node_count);
    for (NodeId n = 0; n < node_count; ++n) {
      auto it = attrs.find(n);
      if (it == attrs.end() || !it->second.fitness.has_value()) {
        throw ParseError(path.string() + ": missing fitness for node " + std::to_string(n));
      }
      values[n] = *it->second.fitness;
    }
    result.graph.set_fitness(std::move(values));
  }
  return result;
}

void emit_edge_csv(const TemporalDigraph& g, const std::filesystem::path& path,
                   const CsvMetadata& metadata) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());

  for (const auto& [key, value] : metadata) out << "# " << key << '=' << value << '\n';
  out << "# nodes=" << g.node_count() << '\n';
  if (g.order_is_synthetic()) out << "# order=synthetic\n";

  const bool with_community = g.has_communities();
  const bool with_fitness = g.has_fitness();
  if (with_community || with_fitness) {
    // Attribute columns describe the source node; nodes that never appear as
    // a source get their attributes via node_attr comment lines.
    std::vector<bool> covered(g.node_count(), false);
    for (const EdgeRecord& e : g.edges()) covered[e.src] = true;
    for (NodeId n = 0; n < g.node_count(); ++n) {
      if (covered[n]) continue;
      out << "# node_attr: " << n;
      if (with_community) out << " community=" << g.community(n);
      if (with_fitness) out << " fitness=" << format_double(g.fitness(n));
      out << '\n';
    }
  }

  out << "src,dst,seq";
  if (with_community) out << ",community";
  if (with_fitness) out << ",fitness";
  out << '\n';
  for (const EdgeRecord& e : g.edges()) {
    out << e.src << ',' << e.dst << ',' << e.seq;
    if (with_community) out << ',' << g.community(e.src);
    if (with_fitness) out << ',' << format_double(g.fitness(e.src));
    out << '\n';
  }
  if (!out.good()) throw ParseError("write failed: " + path.string());
}

}  // namespace dirclose
