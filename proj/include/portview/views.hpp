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

// Truncated views and their equivalence classes.
//
// Round k of the refinement colors two nodes alike exactly when their views
// truncated to depth k coincide. Round 0 is the all-equal coloring; round
// k+1 colors v by the port-ordered signature
//
//   deg(v), (end(v,1), color_k(next(v,1))), ..., (end(v,d), color_k(next(v,d)))
//
// Colors are renumbered densely in first-touch order over ascending node
// ids, so two colorings describe the same partition iff they are equal as
// arrays.
//
// naive_view_tree() and nonbacktracking_label_sequences() build views and
// walk sets literally; they exist to cross-check the refinement on small
// graphs.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "portview/error.hpp"
#include "portview/graph.hpp"

namespace portview {

using Color = std::uint32_t;
using Coloring = std::vector<Color>;

struct RefinementPartition {
  /// rounds[k][v] is the color of v at depth k.
  std::vector<Coloring> rounds;
  /// Smallest k whose coloring equals the one at k + 1, once known.
  std::optional<std::size_t> stabilization_round;

  std::size_t depth() const { return rounds.empty() ? 0 : rounds.size() - 1; }

  std::size_t class_count(std::size_t round) const {
    const Coloring& c = rounds.at(round);
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + std::size_t{1};
  }

  bool same_class(NodeId u, NodeId v, std::size_t round) const {
    const Coloring& c = rounds.at(round);
    return c.at(u) == c.at(v);
  }

  /// Coloring at the stabilization round, i.e. infinite-view classes.
  const Coloring& stable_coloring() const {
    if (!stabilization_round) {
      throw Error(ErrorCode::kAssertionFailed, "partition has not been refined to stability");
    }
    return rounds[*stabilization_round];
  }

  /// First round at which u and v get different colors, if any was computed.
  std::optional<std::size_t> first_split(NodeId u, NodeId v) const {
    for (std::size_t k = 0; k < rounds.size(); ++k) {
      if (rounds[k].at(u) != rounds[k].at(v)) return k;
    }
    return std::nullopt;
  }
};

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

inline std::uint64_t signature_hash(const PortLabeledGraph& g, const Coloring& prev, NodeId v) {
  const auto adj = g.ports(v);
  std::uint64_t h = mix(0, adj.size());
  for (const PortEntry& e : adj) h = mix(mix(h, e.reverse_port), prev[e.neighbor]);
  return h;
}

inline bool same_signature(const PortLabeledGraph& g, const Coloring& prev, NodeId a, NodeId b) {
  const auto pa = g.ports(a);
  const auto pb = g.ports(b);
  if (pa.size() != pb.size()) return false;
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa[i].reverse_port != pb[i].reverse_port) return false;
    if (prev[pa[i].neighbor] != prev[pb[i].neighbor]) return false;
  }
  return true;
}

}  // namespace detail

/// One refinement round: colors at depth k+1 from colors at depth k.
inline Coloring refine(const PortLabeledGraph& graph, const Coloring& prev) {
  const std::size_t n = graph.node_count();
  Coloring next(n);
  // Representatives per hash bucket; exact comparison resolves collisions.
  std::unordered_map<std::uint64_t, std::vector<NodeId>> buckets;
  buckets.reserve(n);
  Color fresh = 0;
  for (NodeId v = 0; v < n; ++v) {
    auto& reps = buckets[detail::signature_hash(graph, prev, v)];
    bool matched = false;
    for (NodeId r : reps) {
      if (detail::same_signature(graph, prev, v, r)) {
        next[v] = next[r];
        matched = true;
        break;
      }
    }
    if (!matched) {
      next[v] = fresh++;
      reps.push_back(v);
    }
  }
  return next;
}

/// Colorings for rounds 0..depth.
inline RefinementPartition view_classes(const PortLabeledGraph& graph, std::size_t depth) {
  RefinementPartition out;
  out.rounds.reserve(depth + 1);
  out.rounds.emplace_back(graph.node_count(), Color{0});
  for (std::size_t k = 0; k < depth; ++k) {
    out.rounds.push_back(refine(graph, out.rounds.back()));
    if (!out.stabilization_round && out.rounds[k + 1] == out.rounds[k]) {
      out.stabilization_round = k;
    }
  }
  return out;
}

/// Refines until two consecutive rounds agree. The result holds rounds
/// 0..s+1 where s is the stabilization round.
inline RefinementPartition stabilized_partition(const PortLabeledGraph& graph) {
  RefinementPartition out;
  out.rounds.emplace_back(graph.node_count(), Color{0});
  for (;;) {
    out.rounds.push_back(refine(graph, out.rounds.back()));
    const std::size_t k = out.rounds.size() - 2;
    if (out.rounds[k + 1] == out.rounds[k]) {
      out.stabilization_round = k;
      return out;
    }
  }
}

/// Whether V_depth(u) = V_depth(v). Stops early once the coloring is stable.
inline bool views_equal(const PortLabeledGraph& graph, NodeId u, NodeId v, std::size_t depth) {
  if (u >= graph.node_count() || v >= graph.node_count()) {
    throw Error(ErrorCode::kNodeOutOfRange, "views_equal on node outside the graph");
  }
  Coloring current(graph.node_count(), Color{0});
  for (std::size_t k = 0; k < depth; ++k) {
    Coloring next = refine(graph, current);
    if (next[u] != next[v]) return false;
    if (next == current) break;
    current = std::move(next);
  }
  return true;
}

inline std::optional<std::size_t> minimal_distinguishing_depth(const RefinementPartition& stable,
                                                               NodeId u, NodeId v) {
  return stable.first_split(u, v);
}

/// Smallest depth at which the views of u and v differ; nullopt when the
/// infinite views are equal.
inline std::optional<std::size_t> minimal_distinguishing_depth(const PortLabeledGraph& graph,
                                                               NodeId u, NodeId v) {
  return minimal_distinguishing_depth(stabilized_partition(graph), u, v);
}

struct QuotientArc {
  Color target_class = 0;
  Port entry_port = 0;

  friend bool operator==(const QuotientArc&, const QuotientArc&) = default;
};

/// The graph on infinite-view classes: table[c][p-1] says where port p
/// leads from any member of class c.
struct QuotientGraph {
  std::size_t class_count = 0;
  std::vector<std::vector<QuotientArc>> table;
  Coloring class_of;
};

inline QuotientGraph quotient_graph(const PortLabeledGraph& graph,
                                    const RefinementPartition& stable) {
  QuotientGraph q;
  q.class_of = stable.stable_coloring();
  q.class_count = stable.class_count(*stable.stabilization_round);
  q.table.resize(q.class_count);
  std::vector<bool> filled(q.class_count, false);
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    const Color c = q.class_of[v];
    if (filled[c]) continue;
    filled[c] = true;
    for (const PortEntry& e : graph.ports(v)) {
      q.table[c].push_back({q.class_of[e.neighbor], e.reverse_port});
    }
  }
  return q;
}

inline QuotientGraph quotient_graph(const PortLabeledGraph& graph) {
  return quotient_graph(graph, stabilized_partition(graph));
}

// ---------------------------------------------------------------------------
// Brute-force oracles.

/// Largest Δ^k the literal view and walk enumerations agree to expand.
inline constexpr std::uint64_t kOracleBudget = 1'000'000;

namespace detail {

inline void check_oracle_budget(const PortLabeledGraph& graph, std::size_t depth) {
  const std::uint64_t branching = graph.max_degree();
  std::uint64_t size = 1;
  for (std::size_t k = 0; k < depth && branching > 1; ++k) {
    size *= branching;
    if (size > kOracleBudget) {
      throw Error(ErrorCode::kOracleBudgetExceeded,
                  "max degree " + std::to_string(branching) + " to depth " +
                      std::to_string(depth) + " exceeds " + std::to_string(kOracleBudget));
    }
  }
}

}  // namespace detail

/// Explicit truncated view. Nodes are laid out breadth-first with the
/// children of each node contiguous and ordered by port at the parent; that
/// layout is canonical, so structural equality is array equality.
struct ViewTree {
  struct Node {
    Port port_at_parent = 0;  // 0 at the root
    Port port_at_child = 0;
    std::uint32_t first_child = 0;
    std::uint32_t child_count = 0;

    friend bool operator==(const Node&, const Node&) = default;
  };

  std::vector<Node> nodes;

  std::size_t size() const { return nodes.size(); }
  const Node& root() const { return nodes.front(); }

  friend bool operator==(const ViewTree&, const ViewTree&) = default;
};

inline ViewTree naive_view_tree(const PortLabeledGraph& graph, NodeId v, std::size_t depth) {
  detail::check_oracle_budget(graph, depth);
  ViewTree tree;
  struct Pending {
    NodeId at;
    std::size_t level;
  };
  std::vector<Pending> origin{{v, 0}};
  tree.nodes.push_back({});
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto [at, level] = origin[i];
    if (level == depth) continue;
    const auto adj = graph.ports(at);
    tree.nodes[i].first_child = static_cast<std::uint32_t>(tree.nodes.size());
    tree.nodes[i].child_count = static_cast<std::uint32_t>(adj.size());
    for (Port p = 1; p <= adj.size(); ++p) {
      tree.nodes.push_back({p, adj[p - 1].reverse_port, 0, 0});
      origin.push_back({adj[p - 1].neighbor, level + 1});
    }
  }
  return tree;
}

struct LabelStep {
  Port forward_port = 0;
  Port entry_port = 0;

  friend auto operator<=>(const LabelStep&, const LabelStep&) = default;
};

using LabelSequence = std::vector<LabelStep>;

namespace detail {

inline void collect_nonbacktracking(const PortLabeledGraph& graph, NodeId at, Port entered_by,
                                    std::size_t remaining, bool keep_prefixes,
                                    LabelSequence& walk, std::set<LabelSequence>& out) {
  if (keep_prefixes || remaining == 0) out.insert(walk);
  if (remaining == 0) return;
  const auto adj = graph.ports(at);
  for (Port p = 1; p <= adj.size(); ++p) {
    if (p == entered_by) continue;
    walk.push_back({p, adj[p - 1].reverse_port});
    collect_nonbacktracking(graph, adj[p - 1].neighbor, adj[p - 1].reverse_port,
                            remaining - 1, keep_prefixes, walk, out);
    walk.pop_back();
  }
}

}  // namespace detail

/// Label sequences of all non-backtracking walks of exactly `length` steps
/// from v. A walk is non-backtracking when it never leaves a node through
/// the port it entered by.
inline std::set<LabelSequence> nonbacktracking_label_sequences(const PortLabeledGraph& graph,
                                                               NodeId v, std::size_t length) {
  detail::check_oracle_budget(graph, length);
  std::set<LabelSequence> out;
  LabelSequence walk;
  detail::collect_nonbacktracking(graph, v, 0, length, false, walk, out);
  return out;
}

/// Same as above for every length 0..max_length. Walks that dead-end at a
/// degree-1 node before max_length are kept, which the exact-length set
/// loses.
inline std::set<LabelSequence> nonbacktracking_label_sequences_upto(const PortLabeledGraph& graph,
                                                                    NodeId v,
                                                                    std::size_t max_length) {
  detail::check_oracle_budget(graph, max_length);
  std::set<LabelSequence> out;
  LabelSequence walk;
  detail::collect_nonbacktracking(graph, v, 0, max_length, true, walk, out);
  return out;
}

/// {"rounds": [[...], ...], "stabilization_round": k} with k null when the
/// partition was not refined to stability.
inline std::string partition_to_json(const RefinementPartition& partition) {
  nlohmann::ordered_json doc;
  doc["rounds"] = partition.rounds;
  doc["stabilization_round"] = partition.stabilization_round
                                   ? nlohmann::ordered_json(*partition.stabilization_round)
                                   : nlohmann::ordered_json(nullptr);
  return doc.dump() + "\n";
}

}  // namespace portview
