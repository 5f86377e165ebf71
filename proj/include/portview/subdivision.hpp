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

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "portview/construction.hpp"
#include "portview/error.hpp"
#include "portview/graph.hpp"

namespace portview {

/// Where everything of the original graph went in its subdivision.
struct SubdivisionMap {
  std::size_t path_length = 1;
  /// Original node v keeps its id; kept explicit for callers that remap.
  std::vector<NodeId> node_image;
  /// Original edges in edge_records() order.
  std::vector<EdgeRecord> edges;
  /// interior[t] lists the path_length-1 new nodes of edges[t], from u to v.
  std::vector<std::vector<NodeId>> interior;
};

struct Subdivision {
  PortLabeledGraph graph;
  SubdivisionMap map;
};

inline bool is_symmetric(const EdgeRecord& e) { return e.port_u == e.port_v; }

/// Replaces every edge by a path of `path_length` edges. The endpoints keep
/// their original labels. Interior labels depend only on the ordered pair
/// of endpoint labels, so edges with equal labels become isomorphic paths.
///
/// Paths are oriented from the endpoint with the smaller label. Along an
/// asymmetric edge each interior node uses port 1 backwards and port 2
/// forwards. Along a symmetric edge the first half does the same and the
/// second half is mirrored, which needs an odd path length.
inline Subdivision subdivide(const PortLabeledGraph& graph, std::size_t path_length) {
  if (path_length < 1) {
    throw Error(ErrorCode::kParameterOutOfRange, "subdivision length must be at least 1");
  }
  Subdivision out;
  out.map.path_length = path_length;
  out.map.edges = edge_records(graph);
  const std::size_t n = graph.node_count();
  const std::size_t inner = path_length - 1;

  if (path_length % 2 == 0) {
    for (const EdgeRecord& e : out.map.edges) {
      if (is_symmetric(e)) {
        throw Error(ErrorCode::kEvenSubdivisionOfSymmetricEdge,
                    "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        "} has label " + std::to_string(e.port_u) +
                        " at both ends; path length " + std::to_string(path_length) +
                        " must be odd");
      }
    }
  }
  const std::size_t total = n + inner * out.map.edges.size();
  if (total >= kNoNode) {
    throw Error(ErrorCode::kParameterOutOfRange, "subdivided graph too large");
  }

  out.map.node_image.resize(n);
  std::vector<std::vector<PortEntry>> adj(total);
  for (NodeId v = 0; v < n; ++v) {
    out.map.node_image[v] = v;
    adj[v].resize(graph.degree(v));
  }
  out.map.interior.reserve(out.map.edges.size());

  std::vector<NodeId> path(path_length + 1);
  std::vector<Port> back_port(path_length + 1), forward_port(path_length + 1);
  for (std::size_t t = 0; t < out.map.edges.size(); ++t) {
    const EdgeRecord& e = out.map.edges[t];
    auto& ids = out.map.interior.emplace_back(inner);
    for (std::size_t k = 0; k < inner; ++k) ids[k] = static_cast<NodeId>(n + t * inner + k);

    const bool flip = e.port_v < e.port_u;
    path.front() = flip ? e.v : e.u;
    path.back() = flip ? e.u : e.v;
    for (std::size_t k = 1; k < path_length; ++k) {
      path[k] = flip ? ids[inner - k] : ids[k - 1];
    }
    forward_port[0] = flip ? e.port_v : e.port_u;
    back_port[path_length] = flip ? e.port_u : e.port_v;
    const std::size_t half = path_length / 2;
    for (std::size_t k = 1; k < path_length; ++k) {
      const bool mirrored = is_symmetric(e) && k > half;
      back_port[k] = mirrored ? 2 : 1;
      forward_port[k] = mirrored ? 1 : 2;
    }
    for (std::size_t k = 0; k < path_length; ++k) {
      auto& from = adj[path[k]];
      auto& to = adj[path[k + 1]];
      if (from.size() < forward_port[k]) from.resize(forward_port[k]);
      if (to.size() < back_port[k + 1]) to.resize(back_port[k + 1]);
      from[forward_port[k] - 1] = {path[k + 1], back_port[k + 1]};
      to[back_port[k + 1] - 1] = {path[k], forward_port[k]};
    }
  }
  out.graph = PortLabeledGraph(adj);
  return out;
}

/// A concrete witness for the diameter/size trade-off: xi_D(G_l) with D the
/// largest odd integer such that 3D <= D', and l the largest integer with
/// D' * 4^l <= 3n'.
struct TheoremInstance {
  std::uint64_t d_prime = 0;
  std::uint64_t n_prime = 0;
  std::uint32_t l = 0;
  std::size_t path_length = 0;  // D
  PortLabeledGraph graph;
  WitnessPair witnesses;
  std::size_t guaranteed_equal_depth = 0;  // D * (l - 1)
  double depth_bound = 0;  // (D'-5)/6 * log2(n'/D') - 0.41 D'
  std::size_t measured_diameter = 0;
};

/// (D'-5)/6 * log2(n'/D') - 0.41 * D'.
inline double theorem_depth_bound(std::uint64_t d_prime, std::uint64_t n_prime) {
  const auto dp = static_cast<double>(d_prime);
  return (dp - 5.0) / 6.0 * std::log2(static_cast<double>(n_prime) / dp) - 0.41 * dp;
}

struct TheoremParameters {
  std::uint32_t l = 0;
  std::size_t path_length = 0;
};

/// Parameter recipe only; throws kHypothesisViolation unless D' >= 3 and
/// n' >= D' * 2^12 / 3.
inline TheoremParameters theorem_parameters(std::uint64_t d_prime, std::uint64_t n_prime) {
  if (d_prime < 3) {
    throw Error(ErrorCode::kHypothesisViolation, "D' = " + std::to_string(d_prime) + " < 3");
  }
  constexpr std::uint64_t kLimit = std::numeric_limits<std::uint64_t>::max() / 4;
  if (n_prime > kLimit / 3 || d_prime > kLimit / 4096) {
    throw Error(ErrorCode::kParameterOutOfRange, "D' or n' too large");
  }
  const std::uint64_t budget = 3 * n_prime;
  if (budget < d_prime * 4096) {
    throw Error(ErrorCode::kHypothesisViolation,
                "n' = " + std::to_string(n_prime) + " < D' * 2^12 / 3 = " +
                    std::to_string(d_prime * 4096 / 3.0));
  }
  TheoremParameters p;
  std::uint64_t scaled = d_prime;  // D' * 4^l
  while (scaled <= budget / 4) {
    scaled *= 4;
    ++p.l;
  }
  p.path_length = d_prime / 3;
  if (p.path_length % 2 == 0) --p.path_length;
  return p;
}

/// Builds the witness graph for (D', n') and measures it without judging.
inline TheoremInstance build_theorem_instance(std::uint64_t d_prime, std::uint64_t n_prime) {
  const TheoremParameters params = theorem_parameters(d_prime, n_prime);
  if (params.l > kMaxLevelParameter) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "derived l = " + std::to_string(params.l) + " exceeds generator limit " +
                    std::to_string(kMaxLevelParameter));
  }
  TheoremInstance inst;
  inst.d_prime = d_prime;
  inst.n_prime = n_prime;
  inst.l = params.l;
  inst.path_length = params.path_length;
  const LowerBoundGraph base = build_lower_bound_graph(params.l);
  inst.witnesses = witness_nodes(base.grid);
  inst.graph = subdivide(base.graph, params.path_length).graph;
  inst.guaranteed_equal_depth = params.path_length * (params.l - 1);
  inst.depth_bound = theorem_depth_bound(d_prime, n_prime);
  inst.measured_diameter = diameter(inst.graph);
  return inst;
}

/// build_theorem_instance() plus the checks node count <= n', diameter <= D'
/// and D(l-1) >= depth bound; any failure raises kAssertionFailed.
inline TheoremInstance theorem_instance(std::uint64_t d_prime, std::uint64_t n_prime) {
  TheoremInstance inst = build_theorem_instance(d_prime, n_prime);
  if (inst.graph.node_count() > n_prime) {
    throw Error(ErrorCode::kAssertionFailed,
                "graph has " + std::to_string(inst.graph.node_count()) + " nodes > n' = " +
                    std::to_string(n_prime));
  }
  if (inst.measured_diameter > d_prime) {
    throw Error(ErrorCode::kAssertionFailed,
                "diameter " + std::to_string(inst.measured_diameter) + " > D' = " +
                    std::to_string(d_prime));
  }
  if (static_cast<double>(inst.guaranteed_equal_depth) < inst.depth_bound) {
    throw Error(ErrorCode::kAssertionFailed,
                "guaranteed depth " + std::to_string(inst.guaranteed_equal_depth) +
                    " below bound " + std::to_string(inst.depth_bound));
  }
  return inst;
}

}  // namespace portview
