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

// Symmetric port-labeled networks.
//
// Every node v owns ports 1..deg(v); the slot behind port p stores the
// neighbor reached through p and the port by which that neighbor is
// entered. A graph may be assembled from arbitrary (possibly broken)
// adjacency so that validate() can report what is wrong with it; graphs
// produced by GraphBuilder and the generators are always valid.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "portview/error.hpp"

namespace portview {

using NodeId = std::uint32_t;
using Port = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// What sits behind one port: the neighbor and the port it is entered by.
struct PortEntry {
  NodeId neighbor = kNoNode;
  Port reverse_port = 0;

  friend bool operator==(const PortEntry&, const PortEntry&) = default;
};

/// One undirected edge with its two endpoint labels; the serialization unit.
struct EdgeRecord {
  NodeId u = 0;
  NodeId v = 0;
  Port port_u = 0;
  Port port_v = 0;

  friend auto operator<=>(const EdgeRecord&, const EdgeRecord&) = default;
};

enum class ViolationKind {
  kUnassignedPort,
  kNeighborOutOfRange,
  kSelfLoop,
  kReversePortOutOfRange,
  kReciprocity,
  kParallelEdge,
  kPortCollision,
};

struct Violation {
  ViolationKind kind;
  NodeId node;
  Port port;
  std::string message;
};

class PortLabeledGraph {
 public:
  PortLabeledGraph() = default;

  /// Takes adjacency[v][p-1] as the slot of port p at v. No checking is
  /// done here; call validate() before trusting the result.
  explicit PortLabeledGraph(const std::vector<std::vector<PortEntry>>& adjacency) {
    offsets_.reserve(adjacency.size() + 1);
    offsets_.push_back(0);
    std::size_t total = 0;
    for (const auto& ports : adjacency) total += ports.size();
    slots_.reserve(total);
    for (const auto& ports : adjacency) {
      slots_.insert(slots_.end(), ports.begin(), ports.end());
      offsets_.push_back(slots_.size());
    }
  }

  std::size_t node_count() const {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }

  /// Number of undirected edges, assuming the graph is valid.
  std::size_t edge_count() const { return slots_.size() / 2; }

  std::size_t degree(NodeId v) const {
    check_node(v);
    return offsets_[v + 1] - offsets_[v];
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (std::size_t v = 0; v < node_count(); ++v) {
      best = std::max<std::size_t>(best, offsets_[v + 1] - offsets_[v]);
    }
    return best;
  }

  /// All port slots of v, indexed by port - 1.
  std::span<const PortEntry> ports(NodeId v) const {
    check_node(v);
    return {slots_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  const PortEntry& slot(NodeId v, Port p) const {
    check_node(v);
    const std::size_t deg = offsets_[v + 1] - offsets_[v];
    if (p < 1 || p > deg) {
      throw Error(ErrorCode::kPortOutOfRange,
                  "port " + std::to_string(p) + " at node " + std::to_string(v) +
                      " (degree " + std::to_string(deg) + ")");
    }
    return slots_[offsets_[v] + p - 1];
  }

  /// The neighbor reached from v through port p.
  NodeId next(NodeId v, Port p) const { return slot(v, p).neighbor; }

  /// The port label at the far end of the edge leaving v through port p.
  Port end(NodeId v, Port p) const { return slot(v, p).reverse_port; }

  /// The label of edge {u, w} at u, or 0 when the nodes are not adjacent.
  Port port_towards(NodeId u, NodeId w) const {
    const auto adj = ports(u);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (adj[i].neighbor == w) return static_cast<Port>(i + 1);
    }
    return 0;
  }

  friend bool operator==(const PortLabeledGraph&, const PortLabeledGraph&) = default;

 private:
  void check_node(NodeId v) const {
    if (v >= node_count()) {
      throw Error(ErrorCode::kNodeOutOfRange,
                  "node " + std::to_string(v) + " (node count " +
                      std::to_string(node_count()) + ")");
    }
  }

  std::vector<std::size_t> offsets_;
  std::vector<PortEntry> slots_;
};

namespace detail {

inline std::string at(NodeId v, Port p) {
  return "(" + std::to_string(v) + "," + std::to_string(p) + ")";
}

}  // namespace detail

/// Lists every invariant violation, ordered by node and then port. An empty
/// result means the graph is a valid simple symmetric port-labeled graph.
inline std::vector<Violation> validate(const PortLabeledGraph& graph) {
  std::vector<Violation> out;
  const std::size_t n = graph.node_count();
  std::vector<NodeId> seen_by(n, kNoNode);
  for (NodeId v = 0; v < n; ++v) {
    const auto adj = graph.ports(v);
    for (Port p = 1; p <= adj.size(); ++p) {
      const PortEntry& e = adj[p - 1];
      if (e.neighbor == kNoNode) {
        out.push_back({ViolationKind::kUnassignedPort, v, p,
                       "unassigned port at " + detail::at(v, p) +
                           ": ports must be consecutive 1.." +
                           std::to_string(adj.size())});
        continue;
      }
      if (e.neighbor >= n) {
        out.push_back({ViolationKind::kNeighborOutOfRange, v, p,
                       "neighbor " + std::to_string(e.neighbor) + " out of range at " +
                           detail::at(v, p)});
        continue;
      }
      if (e.neighbor == v) {
        out.push_back({ViolationKind::kSelfLoop, v, p, "self-loop at " + detail::at(v, p)});
        continue;
      }
      const std::size_t far_degree = graph.degree(e.neighbor);
      if (e.reverse_port < 1 || e.reverse_port > far_degree) {
        out.push_back({ViolationKind::kReversePortOutOfRange, v, p,
                       "reverse port " + std::to_string(e.reverse_port) + " at " +
                           detail::at(v, p) + " exceeds degree " +
                           std::to_string(far_degree) + " of node " +
                           std::to_string(e.neighbor)});
        continue;
      }
      const PortEntry& back = graph.ports(e.neighbor)[e.reverse_port - 1];
      if (back.neighbor != v || back.reverse_port != p) {
        out.push_back({ViolationKind::kReciprocity, v, p,
                       "reciprocity violation at " + detail::at(v, p) + ": slot " +
                           detail::at(e.neighbor, e.reverse_port) + " points to " +
                           detail::at(back.neighbor, back.reverse_port)});
      }
      if (seen_by[e.neighbor] == v) {
        out.push_back({ViolationKind::kParallelEdge, v, p,
                       "parallel edge at " + detail::at(v, p) + " to node " +
                           std::to_string(e.neighbor)});
      }
      seen_by[e.neighbor] = v;
    }
  }
  return out;
}

inline bool is_valid(const PortLabeledGraph& graph) { return validate(graph).empty(); }

/// Each undirected edge once, with u < v, sorted by (u, v).
inline std::vector<EdgeRecord> edge_records(const PortLabeledGraph& graph) {
  std::vector<EdgeRecord> edges;
  edges.reserve(graph.edge_count());
  for (NodeId u = 0; u < graph.node_count(); ++u) {
    const auto adj = graph.ports(u);
    for (Port p = 1; p <= adj.size(); ++p) {
      if (adj[p - 1].neighbor > u && adj[p - 1].neighbor != kNoNode) {
        edges.push_back({u, adj[p - 1].neighbor, p, adj[p - 1].reverse_port});
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

/// Places edge records into port slots. Problems that cannot be represented
/// in a slot table (bad node ids, zero ports, self-loops, two edges on one
/// port) are appended to `problems`; whatever remains is left for validate().
inline PortLabeledGraph assemble(std::size_t node_count, std::span<const EdgeRecord> edges,
                                 std::vector<Violation>& problems) {
  std::vector<std::vector<PortEntry>> adjacency(node_count);
  auto place = [&](NodeId at, Port port, NodeId to, Port back) {
    auto& ports = adjacency[at];
    if (ports.size() < port) ports.resize(port);
    if (ports[port - 1].neighbor != kNoNode) {
      problems.push_back({ViolationKind::kPortCollision, at, port,
                          "port collision at " + detail::at(at, port) + ": used by nodes " +
                              std::to_string(ports[port - 1].neighbor) + " and " +
                              std::to_string(to)});
    }
    ports[port - 1] = {to, back};
  };
  for (const EdgeRecord& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      problems.push_back({ViolationKind::kNeighborOutOfRange, std::min(e.u, e.v), e.port_u,
                          "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} references a node outside [0," +
                              std::to_string(node_count) + ")"});
      continue;
    }
    if (e.u == e.v) {
      problems.push_back({ViolationKind::kSelfLoop, e.u, e.port_u,
                          "self-loop at " + detail::at(e.u, e.port_u)});
      continue;
    }
    if (e.port_u == 0 || e.port_v == 0) {
      problems.push_back({ViolationKind::kUnassignedPort, e.u, e.port_u,
                          "port 0 on edge {" + std::to_string(e.u) + "," +
                              std::to_string(e.v) + "}: ports are 1-based"});
      continue;
    }
    place(e.u, e.port_u, e.v, e.port_v);
    place(e.v, e.port_v, e.u, e.port_u);
  }
  return PortLabeledGraph(adjacency);
}

inline std::string describe(std::span<const Violation> violations, std::size_t limit = 8) {
  std::string text;
  for (std::size_t i = 0; i < violations.size() && i < limit; ++i) {
    if (i) text += "; ";
    text += violations[i].message;
  }
  if (violations.size() > limit) {
    text += "; ... (" + std::to_string(violations.size()) + " total)";
  }
  return text;
}

/// Builds a graph from edge records and throws kInvariantViolation unless it
/// is valid.
inline PortLabeledGraph from_edges(std::size_t node_count, std::span<const EdgeRecord> edges) {
  std::vector<Violation> problems;
  PortLabeledGraph graph = assemble(node_count, edges, problems);
  auto remaining = validate(graph);
  problems.insert(problems.end(), remaining.begin(), remaining.end());
  if (!problems.empty()) throw Error(ErrorCode::kInvariantViolation, describe(problems));
  return graph;
}

/// Incremental front end to from_edges: connect() records λ(u,v) = port_u and
/// λ(v,u) = port_v.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t node_count) : node_count_(node_count) {}

  GraphBuilder& connect(NodeId u, Port port_u, NodeId v, Port port_v) {
    edges_.push_back({u, v, port_u, port_v});
    return *this;
  }

  std::size_t node_count() const { return node_count_; }

  PortLabeledGraph build() const { return from_edges(node_count_, edges_); }

 private:
  std::size_t node_count_;
  std::vector<EdgeRecord> edges_;
};

/// Hop distances from `source`; unreachable nodes get kNoNode.
inline std::vector<std::uint32_t> bfs_distances(const PortLabeledGraph& graph, NodeId source) {
  std::vector<std::uint32_t> dist(graph.node_count(), kNoNode);
  std::vector<NodeId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (const PortEntry& e : graph.ports(v)) {
      if (dist[e.neighbor] == kNoNode) {
        dist[e.neighbor] = dist[v] + 1;
        queue.push_back(e.neighbor);
      }
    }
  }
  return dist;
}

/// Exact diameter. Runs breadth-first search from every node, 64 sources
/// at a time as bit lanes, so each level costs one pass over the slots.
inline std::size_t diameter(const PortLabeledGraph& graph) {
  const std::size_t n = graph.node_count();
  std::size_t best = 0;
  std::vector<std::uint64_t> visited(n), frontier(n), next(n);
  for (std::size_t base = 0; base < n; base += 64) {
    const std::size_t lanes = std::min<std::size_t>(64, n - base);
    const std::uint64_t full = lanes == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << lanes) - 1;
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    for (std::size_t b = 0; b < lanes; ++b) {
      visited[base + b] = frontier[base + b] = std::uint64_t{1} << b;
    }
    std::size_t depth = 0;
    for (;;) {
      bool grew = false;
      for (NodeId v = 0; v < n; ++v) {
        std::uint64_t reach = 0;
        for (const PortEntry& e : graph.ports(v)) reach |= frontier[e.neighbor];
        next[v] = reach & ~visited[v];
        grew |= next[v] != 0;
      }
      if (!grew) break;
      ++depth;
      for (std::size_t v = 0; v < n; ++v) visited[v] |= next[v];
      std::swap(frontier, next);
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (visited[v] != full) {
        throw Error(ErrorCode::kDisconnectedGraph,
                    "node " + std::to_string(v) + " is unreachable from node " +
                        std::to_string(base + std::countr_one(visited[v])));
      }
    }
    best = std::max(best, depth);
  }
  return best;
}

inline bool is_connected(const PortLabeledGraph& graph) {
  if (graph.node_count() == 0) return true;
  const auto dist = bfs_distances(graph, 0);
  return std::find(dist.begin(), dist.end(), kNoNode) == dist.end();
}

namespace detail {

inline std::vector<std::vector<PortEntry>> union_adjacency(const PortLabeledGraph& g1,
                                                           const PortLabeledGraph& g2) {
  const auto shift = static_cast<NodeId>(g1.node_count());
  std::vector<std::vector<PortEntry>> adjacency;
  adjacency.reserve(g1.node_count() + g2.node_count());
  for (NodeId v = 0; v < g1.node_count(); ++v) {
    const auto adj = g1.ports(v);
    adjacency.emplace_back(adj.begin(), adj.end());
  }
  for (NodeId v = 0; v < g2.node_count(); ++v) {
    auto& ports = adjacency.emplace_back();
    for (const PortEntry& e : g2.ports(v)) {
      ports.push_back({e.neighbor == kNoNode ? kNoNode : e.neighbor + shift, e.reverse_port});
    }
  }
  return adjacency;
}

}  // namespace detail

/// Node ids of g2 are shifted by g1.node_count(); labels are unchanged.
inline PortLabeledGraph disjoint_union(const PortLabeledGraph& g1, const PortLabeledGraph& g2) {
  return PortLabeledGraph(detail::union_adjacency(g1, g2));
}

/// Disjoint union plus a bridge {v1, v2 + |g1|} carrying port d+1 at both
/// ends, where d is the common degree of v1 and v2.
inline PortLabeledGraph join_with_bridge(const PortLabeledGraph& g1, NodeId v1,
                                         const PortLabeledGraph& g2, NodeId v2) {
  const std::size_t d1 = g1.degree(v1);
  const std::size_t d2 = g2.degree(v2);
  if (d1 != d2) {
    throw Error(ErrorCode::kDegreeMismatch,
                "bridge endpoints have degrees " + std::to_string(d1) + " and " +
                    std::to_string(d2));
  }
  auto adjacency = detail::union_adjacency(g1, g2);
  const NodeId w2 = v2 + static_cast<NodeId>(g1.node_count());
  const auto bridge_port = static_cast<Port>(d1 + 1);
  adjacency[v1].push_back({w2, bridge_port});
  adjacency[w2].push_back({v1, bridge_port});
  return PortLabeledGraph(adjacency);
}

}  // namespace portview
