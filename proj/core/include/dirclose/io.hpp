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
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dirclose/temporal_graph.hpp"

namespace dirclose {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::filesystem::path& path, std::size_t line, const std::string& message)
      : std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + message),
        line_(line) {}
  explicit ParseError(const std::string& message) : std::runtime_error(message), line_(0) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Bijection between external string handles and dense node ids. Handles are
/// case-normalized (ASCII lowercase) on insertion and lookup.
struct HandleMap {
  std::vector<std::string> handle_by_node;
  std::unordered_map<std::string, NodeId> node_by_handle;

  static std::string normalize(std::string_view handle);

  /// Id for handle, inserting a fresh one if unknown.
  NodeId intern(std::string_view handle);
  /// Id for handle; throws GraphError if unknown.
  NodeId require(std::string_view handle) const;
};

/// Which list(s) asserted an edge of a list-file ingest.
enum class EdgeEvidence : std::uint8_t {
  InListOnly,
  OutListOnly,
  BothLists,
};

struct ListIngestResult {
  TemporalDigraph graph;
  HandleMap handles;
  /// Indexed by arrival index.
  std::vector<EdgeEvidence> evidence;
  /// Per node: whether the file carried an out-list for it. Closure flags of
  /// edges whose source has no out-list cannot be confirmed from the data.
  std::vector<bool> has_out_list;
};

/// Parses a chronological list file.
///
/// Format, one record per line:
///   in <handle>: h1 h2 ...     followers of <handle>, oldest first
///   out <handle>: h1 h2 ...    nodes <handle> follows, oldest first
/// Blank lines and lines starting with '#' are ignored.
///
/// The resulting graph reproduces every list as its in/out adjacency order.
/// Global arrival indices are synthesized (a topological order of the union
/// of the per-list precedence constraints) and the graph is marked
/// order-synthetic; closure analysis must use the list criterion. Errors:
/// malformed lines, duplicate neighbors within a list, repeated list
/// definitions, and list sets admitting no consistent chronology.
ListIngestResult parse_list_file(const std::filesystem::path& path);

/// Writes g as a list file ("out" records in node order, then "in" records).
/// Handles come from the map when given, otherwise "n<id>".
void emit_list_file(const TemporalDigraph& g, const std::filesystem::path& path,
                    const HandleMap* handles = nullptr);

/// Writes node,handle rows; adds a has_out_list column when given.
void emit_handle_map(const HandleMap& handles, const std::filesystem::path& path,
                     const std::vector<bool>* has_out_list = nullptr);

/// Key=value pairs carried in '#' comment lines of an edge CSV.
using CsvMetadata = std::vector<std::pair<std::string, std::string>>;

struct EdgeCsv {
  TemporalDigraph graph;
  CsvMetadata metadata;
};

/// Parses a temporal edge CSV.
///
/// Layout: optional '# key=value' metadata lines and '# node_attr: <id>
/// community=<c> fitness=<f>' lines, then a header 'src,dst,seq' optionally
/// extended by 'community' and/or 'fitness' columns, then one row per edge.
/// Attribute columns describe the row's source node; node_attr lines carry
/// the attributes of nodes that never appear as a source. seq values must be
/// exactly 0..E-1 (any row order); duplicates, gaps and self-loops are
/// errors, as are conflicting attribute assertions or missing attributes for
/// some node when an attribute column is present.
EdgeCsv parse_edge_csv(const std::filesystem::path& path);

/// Writes g (edges ascending by seq, plus community/fitness columns when the
/// graph carries them) with the given metadata echoed as '# key=value' lines.
/// parse_edge_csv(emit_edge_csv(g)) reproduces g exactly, including node
/// count and attributes.
void emit_edge_csv(const TemporalDigraph& g, const std::filesystem::path& path,
                   const CsvMetadata& metadata = {});

}  // namespace dirclose
