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

// Generators and independent oracles shared by the test binaries. Nothing
// here calls into the code paths it is used to check.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "portview/graph.hpp"

namespace portview::testing {

/// {(0,1) <-> (1,1)}: the smallest valid graph, with one symmetric edge.
inline PortLabeledGraph two_node_graph() {
  return GraphBuilder(2).connect(0, 1, 1, 1).build();
}

/// Random simple graph on `n` nodes with edge probability `p` and a
/// uniformly random port numbering at every node.
inline PortLabeledGraph random_port_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<NodeId>> neighbors(n);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) {
        neighbors[u].push_back(v);
        neighbors[v].push_back(u);
      }
  std::vector<std::map<NodeId, Port>> port_of(n);
  for (NodeId v = 0; v < n; ++v) {
    std::vector<Port> ports(neighbors[v].size());
    std::iota(ports.begin(), ports.end(), Port{1});
    std::shuffle(ports.begin(), ports.end(), rng);
    for (std::size_t i = 0; i < ports.size(); ++i) port_of[v][neighbors[v][i]] = ports[i];
  }
  GraphBuilder b(n);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : neighbors[u])
      if (u < v) b.connect(u, port_of[u][v], v, port_of[v][u]);
  return b.build();
}

/// Like random_port_graph, but every node ends up with degree >= 2 (a
/// Hamiltonian cycle is added first). Requires n >= 3.
inline PortLabeledGraph random_min_degree_two_graph(std::size_t n, double p,
                                                    std::mt19937_64& rng) {
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId a = order[i], b = order[(i + 1) % n];
    adj[a][b] = adj[b][a] = true;
  }
  std::bernoulli_distribution coin(p);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) adj[u][v] = adj[v][u] = true;
  std::vector<std::vector<NodeId>> neighbors(n);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = 0; v < n; ++v)
      if (adj[u][v]) neighbors[u].push_back(v);
  std::vector<std::map<NodeId, Port>> port_of(n);
  for (NodeId v = 0; v < n; ++v) {
    std::vector<Port> ports(neighbors[v].size());
    std::iota(ports.begin(), ports.end(), Port{1});
    std::shuffle(ports.begin(), ports.end(), rng);
    for (std::size_t i = 0; i < ports.size(); ++i) port_of[v][neighbors[v][i]] = ports[i];
  }
  GraphBuilder b(n);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : neighbors[u])
      if (u < v) b.connect(u, port_of[u][v], v, port_of[v][u]);
  return b.build();
}

/// Textbook queue BFS; returns -1 for unreachable nodes.
inline std::vector<int> oracle_distances(const PortLabeledGraph& g, NodeId source) {
  std::vector<int> dist(g.node_count(), -1);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (Port p = 1; p <= g.degree(v); ++p) {
      const NodeId w = g.next(v, p);
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

/// Diameter as max over single-source BFS runs; -1 when disconnected.
inline int oracle_diameter(const PortLabeledGraph& g) {
  int best = 0;
  for (NodeId s = 0; s < g.node_count(); ++s) {
    for (int d : oracle_distances(g, s)) {
      if (d < 0) return -1;
      best = std::max(best, d);
    }
  }
  return best;
}

/// Recursive definition of truncated-view equality, evaluated literally.
inline bool oracle_views_equal(const PortLabeledGraph& g, NodeId u, NodeId v, std::size_t depth) {
  if (depth == 0) return true;
  if (g.degree(u) != g.degree(v)) return false;
  for (Port p = 1; p <= g.degree(u); ++p) {
    if (g.end(u, p) != g.end(v, p)) return false;
    if (!oracle_views_equal(g, g.next(u, p), g.next(v, p), depth - 1)) return false;
  }
  return true;
}

}  // namespace portview::testing
