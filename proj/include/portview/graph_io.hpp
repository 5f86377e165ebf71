// Copyright 2026 The portview Authors
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

// Graph files:
//
//   {"node_count": n, "edges": [
//     {"u": 0, "v": 1, "port_u": 1, "port_v": 1},
//     ...
//   ]}
//
// One record per undirected edge, sorted by (u, v) with u < v; ports are
// 1-based. The writer is hand-rolled so that output is byte-identical across
// runs and platforms; parsing goes through nlohmann::json.

#pragma once

#include <cstdint>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "portview/error.hpp"
#include "portview/graph.hpp"

namespace portview {

inline std::string save_json(const PortLabeledGraph& graph) {
  std::ostringstream out;
  out << "{\"node_count\": " << graph.node_count() << ", \"edges\": [";
  const auto edges = edge_records(graph);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeRecord& e = edges[i];
    out << (i ? ",\n  " : "\n  ") << "{\"u\": " << e.u << ", \"v\": " << e.v
        << ", \"port_u\": " << e.port_u << ", \"port_v\": " << e.port_v << "}";
  }
  out << (edges.empty() ? "]}\n" : "\n]}\n");
  return out.str();
}

namespace detail {

inline std::uint64_t unsigned_field(const nlohmann::json& object, const char* key) {
  const auto it = object.find(key);
  if (it == object.end()) {
    throw Error(ErrorCode::kParseError, std::string("missing field \"") + key + "\"");
  }
  if (!it->is_number_integer() || (!it->is_number_unsigned() && it->get<std::int64_t>() < 0)) {
    throw Error(ErrorCode::kParseError,
                std::string("field \"") + key + "\" must be a non-negative integer");
  }
  const auto value = it->get<std::uint64_t>();
  if (value > kNoNode - 1) {
    throw Error(ErrorCode::kParseError, std::string("field \"") + key + "\" is too large");
  }
  return value;
}

}  // namespace detail

/// Parses a graph document and places its edges into port slots without
/// validating the result. Damage that fits a slot table (broken reciprocity,
/// holes in the port range) survives so validate() can report it.
inline PortLabeledGraph parse_json_unchecked(std::string_view text,
                                             std::vector<Violation>* assembly_problems = nullptr) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::kParseError, "top level must be an object");
  const std::uint64_t n = detail::unsigned_field(doc, "node_count");
  const auto edges_it = doc.find("edges");
  if (edges_it == doc.end() || !edges_it->is_array()) {
    throw Error(ErrorCode::kParseError, "\"edges\" must be an array");
  }
  std::vector<EdgeRecord> edges;
  edges.reserve(edges_it->size());
  for (const auto& item : *edges_it) {
    if (!item.is_object()) throw Error(ErrorCode::kParseError, "edge records must be objects");
    edges.push_back({static_cast<NodeId>(detail::unsigned_field(item, "u")),
                     static_cast<NodeId>(detail::unsigned_field(item, "v")),
                     static_cast<Port>(detail::unsigned_field(item, "port_u")),
                     static_cast<Port>(detail::unsigned_field(item, "port_v"))});
  }
  std::vector<Violation> problems;
  PortLabeledGraph graph = assemble(n, edges, problems);
  for (const Violation& v : problems) {
    if (v.kind == ViolationKind::kNeighborOutOfRange) throw Error(ErrorCode::kParseError, v.message);
  }
  if (assembly_problems) *assembly_problems = std::move(problems);
  return graph;
}

/// Strict loader: any invariant violation raises kInvariantViolation.
inline PortLabeledGraph load_json(std::string_view text) {
  std::vector<Violation> problems;
  PortLabeledGraph graph = parse_json_unchecked(text, &problems);
  auto remaining = validate(graph);
  problems.insert(problems.end(), remaining.begin(), remaining.end());
  if (!problems.empty()) throw Error(ErrorCode::kInvariantViolation, describe(problems));
  return graph;
}

/// Undirected DOT with one `label="pu/pv"` edge per undirected edge. Not
/// meant to be parsed back.
inline std::string export_dot(const PortLabeledGraph& graph, std::string_view name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (NodeId v = 0; v < graph.node_count(); ++v) out << "  " << v << ";\n";
  for (const EdgeRecord& e : edge_records(graph)) {
    out << "  " << e.u << " -- " << e.v << " [label=\"" << e.port_u << "/" << e.port_v
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::kIoError, "short write to " + path);
}

}  // namespace portview
