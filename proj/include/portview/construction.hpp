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

// The lower-bound graph G_l: 2^l columns and l+2 levels. Node v_i(j) sits at
// level i, column j, and gets id i * 2^l + j.
//
//   level 0      perfect matching v_0(j) -- v_0(j xor 1), ports {1,2}
//   level l+1    clique; port p leads from column j to column j+p mod 2^l
//   v_{l+1}(j)   port 2^l + i leads down to v_i(j) (all i <= l)
//   level i < l  port 3 leads up to v_{i+1}(pi_i(j)), entered by port 2
//
// Nodes a_l = v_l(0) and b_l = v_l(2^{l-1}) have equal views up to depth
// l-1 and different infinite views.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "portview/error.hpp"
#include "portview/graph.hpp"

namespace portview {

/// Largest level parameter accepted by the generator; G_14 already has
/// 2^28 clique slots.
inline constexpr std::size_t kMaxLevelParameter = 14;

/// b_k(j): the k-th rightmost binary digit of j.
constexpr std::uint32_t bit(std::uint32_t k, std::uint64_t j) {
  return k >= 64 ? 0 : static_cast<std::uint32_t>((j >> k) & 1);
}

/// The involution swapping bits i and i-1 of j; the identity for i = 0.
constexpr std::uint64_t pi(std::uint32_t i, std::uint64_t j) {
  if (i == 0) return j;
  const std::uint64_t hi = std::uint64_t{1} << i;
  const std::uint64_t lo = std::uint64_t{1} << (i - 1);
  return (j - hi * bit(i, j) - lo * bit(i - 1, j)) + hi * bit(i - 1, j) + lo * bit(i, j);
}

/// Number of identical rightmost bits of j1 and j2, capped at l.
constexpr std::uint32_t delta(std::uint64_t j1, std::uint64_t j2, std::uint32_t l) {
  std::uint32_t d = 0;
  while (d < l && bit(d, j1) == bit(d, j2)) ++d;
  return d;
}

/// Bijection between (level, column) coordinates of G_l and node ids.
class GridIndex {
 public:
  GridIndex() = default;
  explicit GridIndex(std::uint32_t l) : l_(l) {}

  std::uint32_t l() const { return l_; }
  std::size_t level_count() const { return l_ + 2; }
  std::size_t column_count() const { return std::size_t{1} << l_; }
  std::size_t node_count() const { return level_count() * column_count(); }

  NodeId node_of(std::size_t level, std::size_t column) const {
    if (level >= level_count() || column >= column_count()) {
      throw Error(ErrorCode::kNodeOutOfRange,
                  "v_" + std::to_string(level) + "(" + std::to_string(column) +
                      ") is outside G_" + std::to_string(l_));
    }
    return static_cast<NodeId>(level * column_count() + column);
  }

  std::size_t level_of(NodeId v) const { return v >> l_; }
  std::size_t column_of(NodeId v) const { return v & (column_count() - 1); }

 private:
  std::uint32_t l_ = 0;
};

struct WitnessPair {
  NodeId a = 0;
  NodeId b = 0;
};

struct LowerBoundGraph {
  PortLabeledGraph graph;
  GridIndex grid;
};

inline LowerBoundGraph build_lower_bound_graph(std::uint32_t l) {
  if (l < 2 || l > kMaxLevelParameter) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "l = " + std::to_string(l) + " (supported range 2.." +
                    std::to_string(kMaxLevelParameter) + ")");
  }
  const GridIndex grid(l);
  const std::size_t cols = grid.column_count();
  const std::size_t top = l + 1;
  const auto base = static_cast<Port>(cols);

  std::vector<std::vector<PortEntry>> adj(grid.node_count());
  auto set = [&](NodeId from, Port port, NodeId to, Port back) {
    auto& ports = adj[from];
    if (ports.size() < port) ports.resize(port);
    ports[port - 1] = {to, back};
  };

  for (std::size_t j = 0; j < cols; ++j) {
    // Matching inside level 0.
    {
      const std::size_t partner = j ^ 1;
      set(grid.node_of(0, j), static_cast<Port>(1 + (j + 1) % 2), grid.node_of(0, partner),
          static_cast<Port>(1 + (partner + 1) % 2));
    }
    // Clique on the top level.
    for (std::size_t p = 1; p < cols; ++p) {
      set(grid.node_of(top, j), static_cast<Port>(p), grid.node_of(top, (j + p) % cols),
          static_cast<Port>(cols - p));
    }
    // Column spokes from the top level to every lower level.
    for (std::size_t i = 0; i <= l; ++i) {
      const Port low = i > 0 ? 1 : static_cast<Port>(1 + j % 2);
      set(grid.node_of(top, j), base + static_cast<Port>(i), grid.node_of(i, j), low);
      set(grid.node_of(i, j), low, grid.node_of(top, j), base + static_cast<Port>(i));
    }
    // Matchings between adjacent levels.
    for (std::uint32_t i = 0; i < l; ++i) {
      const NodeId upper = grid.node_of(i + 1, pi(i, j));
      set(grid.node_of(i, j), 3, upper, 2);
      set(upper, 2, grid.node_of(i, j), 3);
    }
  }
  return {PortLabeledGraph(adj), grid};
}

/// Expected degree of every node of level i in G_l.
inline std::size_t expected_level_degree(std::uint32_t l, std::size_t level) {
  if (level <= l - 1) return 3;
  if (level == l) return 2;
  return (std::size_t{1} << l) + l;
}

/// Edge count of G_l summed stage by stage.
inline std::size_t expected_edge_count(std::uint32_t l) {
  const std::size_t cols = std::size_t{1} << l;
  return cols / 2 + (cols / 2) * (cols - 1) + (l + 1) * cols + l * cols;
}

inline WitnessPair witness_nodes(const GridIndex& grid) {
  return {grid.node_of(grid.l(), 0), grid.node_of(grid.l(), grid.column_count() / 2)};
}

/// Replay of port 2 for l+1 steps from both witnesses.
struct DistinguishingWalk {
  std::vector<NodeId> from_a;  // l+2 nodes, starting at a_l
  std::vector<NodeId> from_b;
  Port final_entry_a = 0;
  Port final_entry_b = 0;
};

/// Walks port 2 from a_l and b_l and checks every visited node against the
/// closed form: after i < l steps a_l is at v_{l-i}(0) and b_l at
/// v_{l-i}(2^{l-1-i}); step l reaches v_0(0) and v_0(1); step l+1 enters
/// v_0(1) by port 1 and v_{l+1}(1) by port 2^l. Throws kTrajectoryMismatch
/// on any deviation.
inline DistinguishingWalk distinguishing_walk(const PortLabeledGraph& graph,
                                              const GridIndex& grid) {
  const std::uint32_t l = grid.l();
  const WitnessPair w = witness_nodes(grid);
  DistinguishingWalk walk;
  walk.from_a.push_back(w.a);
  walk.from_b.push_back(w.b);
  for (std::uint32_t step = 1; step <= l + 1; ++step) {
    walk.final_entry_a = graph.end(walk.from_a.back(), 2);
    walk.final_entry_b = graph.end(walk.from_b.back(), 2);
    walk.from_a.push_back(graph.next(walk.from_a.back(), 2));
    walk.from_b.push_back(graph.next(walk.from_b.back(), 2));
  }

  auto expect = [&](const char* side, std::size_t step, NodeId got, NodeId want) {
    if (got != want) {
      throw Error(ErrorCode::kTrajectoryMismatch,
                  std::string("walk from ") + side + " after " + std::to_string(step) +
                      " steps is at node " + std::to_string(got) + ", expected " +
                      std::to_string(want));
    }
  };
  for (std::uint32_t i = 0; i < l; ++i) {
    expect("a", i, walk.from_a[i], grid.node_of(l - i, 0));
    expect("b", i, walk.from_b[i], grid.node_of(l - i, std::size_t{1} << (l - 1 - i)));
  }
  expect("a", l, walk.from_a[l], grid.node_of(0, 0));
  expect("b", l, walk.from_b[l], grid.node_of(0, 1));
  expect("a", l + 1, walk.from_a[l + 1], grid.node_of(0, 1));
  expect("b", l + 1, walk.from_b[l + 1], grid.node_of(l + 1, 1));
  if (walk.final_entry_a != 1 || walk.final_entry_b != grid.column_count()) {
    throw Error(ErrorCode::kTrajectoryMismatch,
                "final entry ports " + std::to_string(walk.final_entry_a) + " and " +
                    std::to_string(walk.final_entry_b) + ", expected 1 and " +
                    std::to_string(grid.column_count()));
  }
  return walk;
}

inline DistinguishingWalk distinguishing_walk(std::uint32_t l) {
  const LowerBoundGraph g = build_lower_bound_graph(l);
  return distinguishing_walk(g.graph, g.grid);
}

}  // namespace portview
