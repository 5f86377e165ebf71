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

#include "portview/views.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "json.hpp"
#include "portview/construction.hpp"
#include "test_support.hpp"

namespace portview {
namespace {

using testing::oracle_views_equal;
using testing::random_min_degree_two_graph;
using testing::random_port_graph;
using testing::two_node_graph;

// Path 0 - 1 - 2; the middle node reaches 0 by port 1 and 2 by port 2.
PortLabeledGraph three_path() { return GraphBuilder(3).connect(0, 1, 1, 1).connect(1, 2, 2, 1).build(); }

// Two rings with different port patterns; each is vertex-transitive.
PortLabeledGraph ring(std::size_t n) {
  GraphBuilder b(n);
  for (NodeId v = 0; v < n; ++v) b.connect(v, 2, (v + 1) % n, 1);
  return b.build();
}

TEST(RefinementTest, RoundZeroIsOneClass) {
  const auto p = view_classes(three_path(), 0);
  ASSERT_EQ(p.rounds.size(), 1u);
  EXPECT_EQ(p.rounds[0], (Coloring{0, 0, 0}));
  EXPECT_EQ(p.class_count(0), 1u);
}

TEST(RefinementTest, PathSplitsInOneRound) {
  const auto p = stabilized_partition(three_path());
  // The leaves differ in the port they are entered by, the middle in degree.
  EXPECT_EQ(p.rounds[1], (Coloring{0, 1, 2}));
  EXPECT_EQ(*p.stabilization_round, 1u);
  EXPECT_EQ(minimal_distinguishing_depth(p, 0, 2), std::optional<std::size_t>(1));
  EXPECT_EQ(minimal_distinguishing_depth(p, 0, 1), std::optional<std::size_t>(1));
}

TEST(RefinementTest, MirrorImagesNeverSplit) {
  // 0 - 1 - 2 - 3 with the labels of the reversed path equal to the original.
  const auto g = GraphBuilder(4).connect(0, 1, 1, 1).connect(1, 2, 2, 2).connect(2, 1, 3, 1).build();
  const auto p = stabilized_partition(g);
  EXPECT_EQ(p.stable_coloring(), (Coloring{0, 1, 1, 0}));
  EXPECT_FALSE(minimal_distinguishing_depth(p, 1, 2).has_value());
  EXPECT_EQ(quotient_graph(g, p).class_count, 2u);
}

TEST(RefinementTest, RingIsOneClassForever) {
  const auto p = stabilized_partition(ring(7));
  EXPECT_EQ(*p.stabilization_round, 0u);
  EXPECT_EQ(p.class_count(p.depth()), 1u);
  EXPECT_FALSE(minimal_distinguishing_depth(p, 0, 3).has_value());
  EXPECT_TRUE(views_equal(ring(7), 0, 3, 50));
}

TEST(RefinementTest, TwoNodeGraphIsSymmetric) {
  EXPECT_TRUE(views_equal(two_node_graph(), 0, 1, 10));
  EXPECT_EQ(quotient_graph(two_node_graph()).class_count, 1u);
}

TEST(RefinementTest, RejectsUnknownNodes) {
  try {
    views_equal(two_node_graph(), 0, 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNodeOutOfRange);
  }
}

TEST(RefinementTest, PropertiesOnRandomGraphs) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_port_graph(1 + trial % 14, 0.35, rng);
    const auto p = stabilized_partition(g);
    const std::size_t n = g.node_count();
    ASSERT_TRUE(p.stabilization_round.has_value());
    const std::size_t s = *p.stabilization_round;
    EXPECT_LE(s, n == 0 ? 0 : n - 1);
    EXPECT_EQ(p.rounds[s], p.rounds[s + 1]);
    for (std::size_t k = 0; k < s; ++k) EXPECT_NE(p.rounds[k], p.rounds[k + 1]) << k;

    // Refinement only ever splits classes.
    for (std::size_t k = 0; k + 1 < p.rounds.size(); ++k) {
      EXPECT_LE(p.class_count(k), p.class_count(k + 1));
      for (NodeId u = 0; u < n; ++u)
        for (NodeId v = 0; v < n; ++v)
          if (p.same_class(u, v, k + 1)) EXPECT_TRUE(p.same_class(u, v, k));
    }

    // Three more rounds change nothing; a second run gives the same arrays.
    Coloring c = p.stable_coloring();
    for (int extra = 0; extra < 3; ++extra) {
      c = refine(g, c);
      EXPECT_EQ(c, p.stable_coloring());
    }
    EXPECT_EQ(stabilized_partition(g).rounds, p.rounds);
  }
}

TEST(RefinementTest, AgreesWithRecursiveDefinition) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_port_graph(2 + trial % 7, 0.45, rng);
    for (std::size_t k = 0; k <= 4; ++k) {
      const auto p = view_classes(g, k);
      for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v = 0; v < g.node_count(); ++v) {
          const bool want = oracle_views_equal(g, u, v, k);
          EXPECT_EQ(p.same_class(u, v, k), want);
          EXPECT_EQ(views_equal(g, u, v, k), want);
        }
    }
  }
}

TEST(QuotientTest, ArcsAreConsistentWithinClasses) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = random_port_graph(2 + trial % 12, 0.4, rng);
    const auto stable = stabilized_partition(g);
    const auto q = quotient_graph(g, stable);
    EXPECT_EQ(q.class_count, stable.class_count(stable.depth()));
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const auto& row = q.table[q.class_of[v]];
      ASSERT_EQ(row.size(), g.degree(v));
      for (Port p = 1; p <= g.degree(v); ++p) {
        EXPECT_EQ(row[p - 1].target_class, q.class_of[g.next(v, p)]);
        EXPECT_EQ(row[p - 1].entry_port, g.end(v, p));
      }
    }
  }
}

TEST(QuotientTest, LowerBoundGraphHasNoSymmetry) {
  const auto g = build_lower_bound_graph(6);
  EXPECT_EQ(quotient_graph(g.graph).class_count, g.graph.node_count());
}

TEST(ViewTreeTest, SizesAndLayout) {
  const auto t = naive_view_tree(three_path(), 1, 2);
  // Root, two children, and their 1 + 1 children.
  EXPECT_EQ(t.size(), 5u);
  EXPECT_EQ(t.root().child_count, 2u);
  EXPECT_EQ(t.nodes[1].port_at_parent, 1u);
  EXPECT_EQ(t.nodes[2].port_at_parent, 2u);
  EXPECT_EQ(t.nodes[2].port_at_child, 1u);
  EXPECT_EQ(naive_view_tree(three_path(), 0, 0).size(), 1u);
}

TEST(ViewTreeTest, EqualTreesExactlyWhenViewsEqual) {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_port_graph(2 + trial % 7, 0.45, rng);
    for (std::size_t k = 0; k <= 4; ++k)
      for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v = u + 1; v < g.node_count(); ++v)
          EXPECT_EQ(naive_view_tree(g, u, k) == naive_view_tree(g, v, k),
                    oracle_views_equal(g, u, v, k));
  }
}

TEST(ViewTreeTest, BudgetIsEnforced) {
  const auto g = build_lower_bound_graph(6).graph;
  try {
    naive_view_tree(g, 0, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOracleBudgetExceeded);
  }
}

TEST(NonBacktrackingTest, PathWalks) {
  const auto walks = nonbacktracking_label_sequences(three_path(), 0, 2);
  EXPECT_EQ(walks, (std::set<LabelSequence>{{{1, 1}, {2, 1}}}));
  const auto all = nonbacktracking_label_sequences_upto(three_path(), 0, 2);
  EXPECT_EQ(all.size(), 3u);
}

// With a leaf in the graph, the exact-length sets can coincide while the
// views differ: walks into the leaf die out and leave no trace.
TEST(NonBacktrackingTest, ExactLengthSetsMissDeadEnds) {
  const auto g = three_path();
  EXPECT_FALSE(views_equal(g, 0, 1, 3));
  EXPECT_TRUE(nonbacktracking_label_sequences(g, 0, 3).empty());
  EXPECT_TRUE(nonbacktracking_label_sequences(g, 1, 3).empty());
  EXPECT_NE(nonbacktracking_label_sequences_upto(g, 0, 3),
            nonbacktracking_label_sequences_upto(g, 1, 3));
}

TEST(NonBacktrackingTest, PrefixClosedSetsMatchViews) {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_port_graph(2 + trial % 7, 0.45, rng);
    for (std::size_t k = 0; k <= 4; ++k)
      for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v = u + 1; v < g.node_count(); ++v)
          EXPECT_EQ(nonbacktracking_label_sequences_upto(g, u, k) ==
                        nonbacktracking_label_sequences_upto(g, v, k),
                    oracle_views_equal(g, u, v, k));
  }
}

TEST(NonBacktrackingTest, ExactLengthSetsMatchViewsWithoutLeaves) {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_min_degree_two_graph(3 + trial % 6, 0.3, rng);
    for (std::size_t k = 0; k <= 4; ++k)
      for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v = u + 1; v < g.node_count(); ++v)
          EXPECT_EQ(nonbacktracking_label_sequences(g, u, k) ==
                        nonbacktracking_label_sequences(g, v, k),
                    oracle_views_equal(g, u, v, k));
  }
}

TEST(PartitionJsonTest, Layout) {
  const auto doc = nlohmann::json::parse(partition_to_json(stabilized_partition(three_path())));
  EXPECT_EQ(doc["stabilization_round"], 1);
  EXPECT_EQ(doc["rounds"].size(), 3u);
  EXPECT_EQ(doc["rounds"][1], nlohmann::json::array({0, 1, 2}));
  EXPECT_TRUE(nlohmann::json::parse(partition_to_json(view_classes(three_path(), 0)))
                  ["stabilization_round"]
                      .is_null());
}

}  // namespace
}  // namespace portview
