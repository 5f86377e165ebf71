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

#include "portview/construction.hpp"

#include <bitset>
#include <map>
#include <random>
#include <utility>

#include "gtest/gtest.h"
#include "portview/views.hpp"
#include "test_support.hpp"

namespace portview {
namespace {

std::uint64_t oracle_swap(std::uint32_t i, std::uint64_t j) {
  if (i == 0) return j;
  std::bitset<64> b(j);
  const bool hi = b[i], lo = b[i - 1];
  b[i] = lo;
  b[i - 1] = hi;
  return b.to_ullong();
}

std::uint32_t oracle_common_suffix(std::uint64_t j1, std::uint64_t j2, std::uint32_t l) {
  std::uint32_t best = 0;
  for (std::uint32_t d = 0; d <= l; ++d) {
    const std::uint64_t mod = std::uint64_t{1} << d;
    if (j1 % mod == j2 % mod) best = d;
  }
  return best;
}

// lambda[(u, v)] = port at u of the edge towards v, written stage by stage.
std::map<std::pair<NodeId, NodeId>, Port> oracle_labels(std::uint32_t l) {
  const std::uint64_t cols = std::uint64_t{1} << l;
  auto node = [&](std::uint64_t i, std::uint64_t j) { return static_cast<NodeId>(i * cols + j); };
  std::map<std::pair<NodeId, NodeId>, Port> lambda;
  for (std::uint64_t j = 0; j < cols; ++j) {
    lambda[{node(0, j), node(0, j ^ 1)}] = static_cast<Port>(1 + (j + 1) % 2);
    for (std::uint64_t p = 1; p < cols; ++p) {
      lambda[{node(l + 1, j), node(l + 1, (j + p) % cols)}] = static_cast<Port>(p);
    }
    for (std::uint64_t i = 0; i <= l; ++i) {
      lambda[{node(l + 1, j), node(i, j)}] = static_cast<Port>(cols + i);
      lambda[{node(i, j), node(l + 1, j)}] = static_cast<Port>(i > 0 ? 1 : 1 + j % 2);
    }
    for (std::uint32_t i = 0; i < l; ++i) {
      lambda[{node(i, j), node(i + 1, oracle_swap(i, j))}] = 3;
      lambda[{node(i + 1, oracle_swap(i, j)), node(i, j)}] = 2;
    }
  }
  return lambda;
}

TEST(BitsTest, Examples) {
  EXPECT_EQ(bit(2, 4), 1u);
  EXPECT_EQ(bit(3, 4), 0u);
  EXPECT_EQ(bit(0, 5), 1u);
  EXPECT_EQ(pi(2, 0b100), 0b010u);
  EXPECT_EQ(pi(1, 0b110), 0b101u);
  EXPECT_EQ(pi(0, 37), 37u);
  EXPECT_EQ(delta(5, 7, 6), 1u);
  EXPECT_EQ(delta(9, 9, 6), 6u);
  EXPECT_EQ(delta(0, 32, 6), 5u);
}

TEST(BitsTest, AgreeWithOracles) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20000; ++trial) {
    const std::uint64_t j = rng() & 0xffff, k = rng() & 0xffff;
    const auto i = static_cast<std::uint32_t>(rng() % 16);
    const auto l = static_cast<std::uint32_t>(1 + rng() % 16);
    EXPECT_EQ(bit(i, j), (j >> i) & 1);
    EXPECT_EQ(pi(i, j), oracle_swap(i, j));
    EXPECT_EQ(pi(i, pi(i, j)), j);
    EXPECT_EQ(delta(j, k, l), oracle_common_suffix(j, k, l));
  }
}

TEST(GridTest, Indexing) {
  const GridIndex grid(6);
  EXPECT_EQ(grid.node_count(), 512u);
  EXPECT_EQ(grid.node_of(7, 0), 448u);
  EXPECT_EQ(grid.level_of(416), 6u);
  EXPECT_EQ(grid.column_of(416), 32u);
  EXPECT_THROW(grid.node_of(8, 0), Error);
  EXPECT_THROW(grid.node_of(0, 64), Error);
}

TEST(BuildTest, RejectsSmallLevelParameter) {
  for (std::uint32_t l : {0u, 1u, 15u}) {
    try {
      build_lower_bound_graph(l);
      FAIL() << l;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParameterOutOfRange);
    }
  }
}

TEST(BuildTest, MatchesStageByStageOracle) {
  for (std::uint32_t l = 2; l <= 8; ++l) {
    const auto g = build_lower_bound_graph(l).graph;
    const auto lambda = oracle_labels(l);
    ASSERT_EQ(lambda.size(), 2 * g.edge_count()) << l;
    for (NodeId v = 0; v < g.node_count(); ++v)
      for (Port p = 1; p <= g.degree(v); ++p) {
        const auto it = lambda.find({v, g.next(v, p)});
        ASSERT_NE(it, lambda.end()) << "l=" << l << " v=" << v << " p=" << p;
        EXPECT_EQ(it->second, p);
      }
  }
}

TEST(BuildTest, CountsAndDegrees) {
  for (std::uint32_t l = 2; l <= 10; ++l) {
    const auto g = build_lower_bound_graph(l);
    const std::size_t cols = std::size_t{1} << l;
    EXPECT_EQ(g.graph.node_count(), (l + 2) * cols);
    const std::size_t m = cols / 2 + cols / 2 * (cols - 1) + (l + 1) * cols + l * cols;
    EXPECT_EQ(g.graph.edge_count(), m);
    EXPECT_EQ(expected_edge_count(l), m);
    if (l >= 5) EXPECT_LT(g.graph.edge_count(), cols * cols);
    for (NodeId v = 0; v < g.graph.node_count(); ++v) {
      const std::size_t level = g.grid.level_of(v);
      const std::size_t want = level < l ? 3 : level == l ? 2 : cols + l;
      EXPECT_EQ(g.graph.degree(v), want);
      EXPECT_EQ(expected_level_degree(l, level), want);
    }
    EXPECT_TRUE(is_valid(g.graph));
  }
  EXPECT_EQ(build_lower_bound_graph(6).graph.edge_count(), 2880u);
}

TEST(BuildTest, DiameterAtMostThree) {
  for (std::uint32_t l = 2; l <= 8; ++l) {
    const auto g = build_lower_bound_graph(l).graph;
    EXPECT_LE(testing::oracle_diameter(g), 3);
  }
}

TEST(WitnessTest, Ids) {
  const auto w = witness_nodes(GridIndex(6));
  EXPECT_EQ(w.a, 384u);
  EXPECT_EQ(w.b, 416u);
}

TEST(WitnessTest, ViewsEqualThroughLevelMinusOne) {
  for (std::uint32_t l = 2; l <= 8; ++l) {
    const auto g = build_lower_bound_graph(l);
    const auto w = witness_nodes(g.grid);
    EXPECT_TRUE(views_equal(g.graph, w.a, w.b, l - 1));
    const auto dstar = minimal_distinguishing_depth(g.graph, w.a, w.b);
    ASSERT_TRUE(dstar.has_value());
    EXPECT_GE(*dstar, l);
    EXPECT_LE(*dstar, l + 1);
  }
  // Frozen from a run of the refinement: the witnesses split exactly at l + 1.
  EXPECT_EQ(minimal_distinguishing_depth(build_lower_bound_graph(6).graph, 384, 416),
            std::optional<std::size_t>(7));
}

TEST(WalkTest, PortTwoTrajectory) {
  const auto g = build_lower_bound_graph(6);
  const auto walk = distinguishing_walk(g.graph, g.grid);
  ASSERT_EQ(walk.from_a.size(), 8u);
  EXPECT_EQ(walk.from_a[1], g.grid.node_of(5, 0));
  EXPECT_EQ(walk.from_b[1], g.grid.node_of(5, 16));
  EXPECT_EQ(walk.from_a[6], g.grid.node_of(0, 0));
  EXPECT_EQ(walk.from_b[6], g.grid.node_of(0, 1));
  EXPECT_EQ(walk.from_a[7], g.grid.node_of(0, 1));
  EXPECT_EQ(walk.from_b[7], g.grid.node_of(7, 1));
  EXPECT_EQ(walk.final_entry_a, 1u);
  EXPECT_EQ(walk.final_entry_b, 64u);
  for (std::uint32_t l = 2; l <= 10; ++l) EXPECT_NO_THROW(distinguishing_walk(l)) << l;
}

TEST(WalkTest, DamagedGraphIsCaught) {
  // Any valid graph where port 2 leads elsewhere breaks the replay.
  const auto g = build_lower_bound_graph(6);
  const auto other = build_lower_bound_graph(7);
  try {
    distinguishing_walk(other.graph, g.grid);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTrajectoryMismatch);
  }
}

}  // namespace
}  // namespace portview
