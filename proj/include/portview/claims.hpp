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

// Mechanical checks of the lower-bound construction on concrete instances.
//
// Each check_* function quantifies one property over an instance and
// returns a ClaimRecord; the verify_* functions bundle them into a
// VerificationReport. Column-arithmetic sweeps are exhaustive up to
// SweepOptions::exhaustive_up_to and draw seeded uniform samples above it.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "portview/construction.hpp"
#include "portview/error.hpp"
#include "portview/graph.hpp"
#include "portview/report.hpp"
#include "portview/subdivision.hpp"
#include "portview/views.hpp"

namespace portview {

struct SweepOptions {
  std::uint64_t seed = 20140601;
  std::uint64_t samples = 100'000;
  std::uint32_t exhaustive_up_to = 6;
};

/// Smallest l for which the quantitative claims are checked.
inline constexpr std::uint32_t kMinClaimLevel = 6;

namespace detail {

inline std::string coord(std::size_t level, std::uint64_t column) {
  return "v_" + std::to_string(level) + "(" + std::to_string(column) + ")";
}

/// Color of v at depth k of a partition refined to stability.
inline Color color_at(const RefinementPartition& stable, std::size_t k, NodeId v) {
  return stable.rounds[std::min(k, stable.rounds.size() - 1)][v];
}

}  // namespace detail

inline ClaimRecord check_graph_invariants(const PortLabeledGraph& graph,
                                          const std::vector<Violation>& assembly_problems = {}) {
  return timed_claim("graph_invariants",
                     "consecutive ports, reciprocity and simplicity at every (node, port)",
                     [&](ClaimRecord& r) {
                       for (const Violation& v : assembly_problems) r.fail(v.message);
                       for (const Violation& v : validate(graph)) r.fail(v.message);
                       r.checked += graph.edge_count() * 2 + assembly_problems.size();
                     });
}

inline ClaimRecord check_size_formulas(const LowerBoundGraph& g) {
  return timed_claim("size_formulas", "n = (l+2)2^l, |E| = stage sum, |E| < 2^{2l}",
                     [&](ClaimRecord& r) {
                       const std::uint32_t l = g.grid.l();
                       const std::size_t n = g.graph.node_count();
                       const std::size_t m = g.graph.edge_count();
                       r.expect(n == (l + 2) * (std::size_t{1} << l),
                                "node count " + std::to_string(n));
                       r.expect(m == expected_edge_count(l), "edge count " + std::to_string(m) +
                                                                 " != " +
                                                                 std::to_string(expected_edge_count(l)));
                       r.expect(m < (std::size_t{1} << (2 * l)),
                                "edge count " + std::to_string(m) + " not below 2^" +
                                    std::to_string(2 * l));
                     });
}

inline ClaimRecord check_degree_profile(const LowerBoundGraph& g) {
  return timed_claim("degree_profile", "every node has its level's degree (3, 2, 2^l + l)",
                     [&](ClaimRecord& r) {
                       for (NodeId v = 0; v < g.graph.node_count(); ++v) {
                         const std::size_t level = g.grid.level_of(v);
                         const std::size_t want = expected_level_degree(g.grid.l(), level);
                         r.expect(g.graph.degree(v) == want,
                                  detail::coord(level, g.grid.column_of(v)) + " has degree " +
                                      std::to_string(g.graph.degree(v)) + ", expected " +
                                      std::to_string(want));
                       }
                     });
}

/// Diameter <= bound; the measured value (or nullopt when disconnected) is
/// written to `measured`.
inline ClaimRecord check_diameter_at_most(const PortLabeledGraph& graph, std::size_t bound,
                                          std::string id,
                                          std::optional<std::size_t>& measured) {
  return timed_claim(std::move(id), "diameter <= " + std::to_string(bound),
                     [&](ClaimRecord& r) {
                       try {
                         measured = diameter(graph);
                         r.expect(*measured <= bound,
                                  "diameter " + std::to_string(*measured));
                       } catch (const Error& e) {
                         measured.reset();
                         r.expect(false, e.what());
                       }
                     });
}

namespace detail {

/// Runs `check(j1, j2, d)` over all triples in [0, 2^l)^3 when l is small,
/// otherwise over `samples` uniform triples.
template <typename Check>
void sweep_triples(std::uint32_t l, const SweepOptions& opts, std::uint64_t salt, Check&& check) {
  const std::uint64_t cols = std::uint64_t{1} << l;
  if (l <= opts.exhaustive_up_to) {
    for (std::uint64_t j1 = 0; j1 < cols; ++j1)
      for (std::uint64_t j2 = 0; j2 < cols; ++j2)
        for (std::uint64_t d = 0; d < cols; ++d) check(j1, j2, d);
    return;
  }
  std::mt19937_64 rng(opts.seed ^ (salt * 0x9e3779b97f4a7c15ULL) ^ l);
  std::uniform_int_distribution<std::uint64_t> column(0, cols - 1);
  for (std::uint64_t s = 0; s < opts.samples; ++s) {
    const std::uint64_t j1 = column(rng), j2 = column(rng), d = column(rng);
    check(j1, j2, d);
  }
}

inline std::string sweep_scope(std::uint32_t l, const SweepOptions& opts, const char* what) {
  if (l <= opts.exhaustive_up_to) return std::string("exhaustive over ") + what;
  return std::to_string(opts.samples) + " seeded samples (seed " + std::to_string(opts.seed) +
         ") of " + what;
}

}  // namespace detail

inline ClaimRecord check_delta_xor_invariance(std::uint32_t l, const SweepOptions& opts) {
  return timed_claim(
      "delta_xor_invariance",
      "delta(j1^d, j2^d) = delta(j1, j2); " + detail::sweep_scope(l, opts, "j1, j2, d < 2^l"),
      [&](ClaimRecord& r) {
        detail::sweep_triples(l, opts, 1, [&](std::uint64_t j1, std::uint64_t j2, std::uint64_t d) {
          r.expect(delta(j1 ^ d, j2 ^ d, l) == delta(j1, j2, l), [&] {
            return "j1=" + std::to_string(j1) + " j2=" + std::to_string(j2) +
                   " d=" + std::to_string(d);
          });
        });
      });
}

inline ClaimRecord check_delta_shift_invariance(std::uint32_t l, const SweepOptions& opts) {
  return timed_claim(
      "delta_shift_invariance",
      "delta(j1+d mod 2^l, j2+d mod 2^l) = delta(j1, j2); " +
          detail::sweep_scope(l, opts, "j1, j2, d < 2^l"),
      [&](ClaimRecord& r) {
        const std::uint64_t mask = (std::uint64_t{1} << l) - 1;
        detail::sweep_triples(l, opts, 2, [&](std::uint64_t j1, std::uint64_t j2, std::uint64_t d) {
          r.expect(delta((j1 + d) & mask, (j2 + d) & mask, l) == delta(j1, j2, l), [&] {
            return "j1=" + std::to_string(j1) + " j2=" + std::to_string(j2) +
                   " d=" + std::to_string(d);
          });
        });
      });
}

inline ClaimRecord check_delta_pi_drop(std::uint32_t l, const SweepOptions& opts) {
  return timed_claim(
      "delta_pi_drop",
      "delta(pi_i(j1), pi_i(j2)) >= delta(j1, j2) - 1 for 1 <= i <= l-1; " +
          detail::sweep_scope(l, opts, "i, j1, j2"),
      [&](ClaimRecord& r) {
        auto check = [&](std::uint32_t i, std::uint64_t j1, std::uint64_t j2) {
          const auto before = static_cast<std::int64_t>(delta(j1, j2, l));
          const auto after = static_cast<std::int64_t>(delta(pi(i, j1), pi(i, j2), l));
          r.expect(after >= before - 1, [&] {
            return "i=" + std::to_string(i) + " j1=" + std::to_string(j1) +
                   " j2=" + std::to_string(j2);
          });
        };
        const std::uint64_t cols = std::uint64_t{1} << l;
        if (l <= opts.exhaustive_up_to) {
          for (std::uint32_t i = 1; i < l; ++i)
            for (std::uint64_t j1 = 0; j1 < cols; ++j1)
              for (std::uint64_t j2 = 0; j2 < cols; ++j2) check(i, j1, j2);
          return;
        }
        std::mt19937_64 rng(opts.seed ^ (3 * 0x9e3779b97f4a7c15ULL) ^ l);
        std::uniform_int_distribution<std::uint64_t> column(0, cols - 1);
        std::uniform_int_distribution<std::uint32_t> level(1, l - 1);
        for (std::uint64_t s = 0; s < opts.samples; ++s) {
          const std::uint32_t i = level(rng);
          const std::uint64_t j1 = column(rng), j2 = column(rng);
          check(i, j1, j2);
        }
      });
}

inline ClaimRecord check_pi_involution(std::uint32_t l) {
  return timed_claim("pi_involution", "pi_i(pi_i(j)) = j for 0 <= i <= l, j < 2^l",
                     [&](ClaimRecord& r) {
                       for (std::uint32_t i = 0; i <= l; ++i)
                         for (std::uint64_t j = 0; j < (std::uint64_t{1} << l); ++j)
                           r.expect(pi(i, pi(i, j)) == j,
                                    "i=" + std::to_string(i) + " j=" + std::to_string(j));
                     });
}

/// pi_{l-1-i}(2^{l-2-i}) = 2^{l-1-i}, the step the port-2 walk from b_l
/// relies on.
inline ClaimRecord check_pi_walk_identity(std::uint32_t max_l) {
  return timed_claim(
      "pi_walk_identity",
      "pi_{l-1-i}(2^{l-2-i}) = 2^{l-1-i} for 2 <= l <= " + std::to_string(max_l) +
          ", 0 <= i <= l-2",
      [&](ClaimRecord& r) {
        for (std::uint32_t l = 2; l <= max_l; ++l)
          for (std::uint32_t i = 0; i + 2 <= l; ++i)
            r.expect(pi(l - 1 - i, std::uint64_t{1} << (l - 2 - i)) ==
                         (std::uint64_t{1} << (l - 1 - i)),
                     "l=" + std::to_string(l) + " i=" + std::to_string(i));
      });
}

/// Four records: for same-level pairs with delta > 0 and every port p,
/// equal degrees; next nodes on a common level; delta of the next nodes
/// drops by at most one; equal entry ports.
inline std::vector<ClaimRecord> check_same_level_transport(const LowerBoundGraph& g,
                                                           const SweepOptions& opts) {
  const std::uint32_t l = g.grid.l();
  const std::uint64_t cols = g.grid.column_count();
  const std::string scope = l <= opts.exhaustive_up_to
                                ? "exhaustive over levels, pairs with delta > 0 and ports"
                                : detail::sweep_scope(l, opts, "(level, pair with delta > 0, port)");
  std::vector<ClaimRecord> records(4);
  records[0].id = "same_level_equal_degree";
  records[0].quantification = "deg(v_i(j1)) = deg(v_i(j2)); " + scope;
  records[1].id = "same_level_next_same_level";
  records[1].quantification = "next_p of both nodes share a level; " + scope;
  records[2].id = "same_level_delta_drop";
  records[2].quantification = "delta(next_p(u), next_p(v)) >= delta(u, v) - 1; " + scope;
  records[3].id = "same_level_equal_entry_port";
  records[3].quantification = "end_p(u) = end_p(v); " + scope;
  const auto start = std::chrono::steady_clock::now();

  auto check_pair = [&](std::size_t level, std::uint64_t j1, std::uint64_t j2,
                        std::optional<Port> only_port) {
    const NodeId u = g.grid.node_of(level, j1);
    const NodeId v = g.grid.node_of(level, j2);
    auto where = [&] { return detail::coord(level, j1) + " vs " + detail::coord(level, j2); };
    const std::size_t du = g.graph.degree(u), dv = g.graph.degree(v);
    records[0].expect(du == dv, where);
    if (du != dv) return;
    const std::uint32_t d = delta(j1, j2, l);
    auto check_port = [&](Port p) {
      const NodeId nu = g.graph.next(u, p), nv = g.graph.next(v, p);
      auto at = [&] { return where() + " port " + std::to_string(p); };
      const bool same_level = g.grid.level_of(nu) == g.grid.level_of(nv);
      records[1].expect(same_level, at);
      if (same_level) {
        const auto after = delta(g.grid.column_of(nu), g.grid.column_of(nv), l);
        records[2].expect(after + 1 >= d, at);
      }
      records[3].expect(g.graph.end(u, p) == g.graph.end(v, p), at);
    };
    if (only_port) {
      check_port(*only_port);
    } else {
      for (Port p = 1; p <= du; ++p) check_port(p);
    }
  };

  if (l <= opts.exhaustive_up_to) {
    for (std::size_t level = 0; level < g.grid.level_count(); ++level)
      for (std::uint64_t j1 = 0; j1 < cols; ++j1)
        for (std::uint64_t j2 = 0; j2 < cols; ++j2)
          if (delta(j1, j2, l) > 0) check_pair(level, j1, j2, std::nullopt);
  } else {
    std::mt19937_64 rng(opts.seed ^ (4 * 0x9e3779b97f4a7c15ULL) ^ l);
    std::uniform_int_distribution<std::size_t> level_dist(0, g.grid.level_count() - 1);
    std::uniform_int_distribution<std::uint64_t> column(0, cols - 1);
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
      const std::size_t level = level_dist(rng);
      const std::uint64_t j1 = column(rng);
      // delta > 0 means equal parity.
      const std::uint64_t j2 = (column(rng) & ~std::uint64_t{1}) | (j1 & 1);
      const std::size_t deg = expected_level_degree(l, level);
      std::uniform_int_distribution<Port> port(1, static_cast<Port>(deg));
      check_pair(level, j1, j2, port(rng));
    }
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : records) r.elapsed_ms = ms;
  return records;
}

/// Same-level pairs with delta = d > 0 have equal views to depth d.
inline ClaimRecord check_truncated_views_by_delta(const LowerBoundGraph& g,
                                                  const RefinementPartition& stable) {
  return timed_claim(
      "same_level_views_equal_to_delta",
      "V_delta(v_i(j1)) = V_delta(v_i(j2)) for all same-level pairs with delta > 0",
      [&](ClaimRecord& r) {
        const std::uint32_t l = g.grid.l();
        const std::uint64_t cols = g.grid.column_count();
        for (std::size_t level = 0; level < g.grid.level_count(); ++level)
          for (std::uint64_t j1 = 0; j1 < cols; ++j1)
            for (std::uint64_t j2 = j1 + 1; j2 < cols; ++j2) {
              const std::uint32_t d = delta(j1, j2, l);
              if (d == 0) continue;
              const NodeId u = g.grid.node_of(level, j1), v = g.grid.node_of(level, j2);
              r.expect(detail::color_at(stable, d, u) == detail::color_at(stable, d, v), [&] {
                return detail::coord(level, j1) + " vs " + detail::coord(level, j2) +
                       " at depth " + std::to_string(d);
              });
            }
      });
}

inline ClaimRecord check_distinguishing_walk(const LowerBoundGraph& g) {
  return timed_claim("distinguishing_walk",
                     "port-2 walk of length l+1 from a_l and b_l follows the closed-form "
                     "trajectory and ends with entry ports 1 vs 2^l",
                     [&](ClaimRecord& r) {
                       try {
                         const DistinguishingWalk w = distinguishing_walk(g.graph, g.grid);
                         r.checked += 2 * (w.from_a.size() + 1);
                       } catch (const Error& e) {
                         r.expect(false, e.what());
                       }
                     });
}

/// Stabilization after at most n-1 rounds.
inline ClaimRecord check_stabilization_bound(const RefinementPartition& stable,
                                             std::size_t node_count, std::string id) {
  return timed_claim(std::move(id), "stabilization round <= n - 1", [&](ClaimRecord& r) {
    const std::size_t s = stable.stabilization_round.value_or(node_count);
    r.expect(node_count > 0 && s <= node_count - 1,
             "stabilization round " + std::to_string(s) + " with n = " +
                 std::to_string(node_count));
  });
}

/// Views of the witnesses agree to `equal_depth` and first differ at a
/// depth in [lo, hi]; d* is written to `measured`.
inline std::vector<ClaimRecord> check_witness_separation(const RefinementPartition& stable,
                                                         const WitnessPair& w,
                                                         std::size_t equal_depth, std::size_t lo,
                                                         std::size_t hi, const std::string& prefix,
                                                         std::optional<std::size_t>& measured) {
  std::vector<ClaimRecord> out;
  out.push_back(timed_claim(prefix + "witness_views_equal",
                            "V_k(a) = V_k(b) for every k <= " + std::to_string(equal_depth),
                            [&](ClaimRecord& r) {
                              for (std::size_t k = 0; k <= equal_depth; ++k) {
                                r.expect(detail::color_at(stable, k, w.a) ==
                                             detail::color_at(stable, k, w.b),
                                         "views differ at depth " + std::to_string(k));
                              }
                            }));
  out.push_back(timed_claim(
      prefix + "witness_distinguishing_depth",
      "d* exists and " + std::to_string(lo) + " <= d* <= " + std::to_string(hi),
      [&](ClaimRecord& r) {
        measured = minimal_distinguishing_depth(stable, w.a, w.b);
        if (!measured) {
          r.expect(false, "witnesses have equal infinite views");
        } else {
          r.expect(*measured >= lo && *measured <= hi, "d* = " + std::to_string(*measured));
        }
      }));
  return out;
}

/// For every ordered label pair (p, q), all edges u->v with
/// (lambda(u,v), lambda(v,u)) = (p, q) became paths with one label sequence.
inline ClaimRecord check_subdivision_label_isomorphism(const Subdivision& sub) {
  return timed_claim(
      "subdivision_label_isomorphism",
      "equal endpoint label pairs give identical path label sequences (both orientations)",
      [&](ClaimRecord& r) {
        std::map<std::pair<Port, Port>, std::vector<Port>> seen;
        auto trace = [&](NodeId start, Port first_port) {
          std::vector<Port> labels;
          NodeId at = start;
          Port out_port = first_port;
          for (std::size_t k = 0; k < sub.map.path_length; ++k) {
            const PortEntry& e = sub.graph.slot(at, out_port);
            labels.push_back(out_port);
            labels.push_back(e.reverse_port);
            at = e.neighbor;
            // Interior nodes have degree 2: leave by the other port.
            if (k + 1 < sub.map.path_length) out_port = e.reverse_port == 1 ? 2 : 1;
          }
          return labels;
        };
        for (const EdgeRecord& e : sub.map.edges) {
          for (int side = 0; side < 2; ++side) {
            const NodeId from = side ? e.v : e.u;
            const std::pair<Port, Port> key =
                side ? std::pair{e.port_v, e.port_u} : std::pair{e.port_u, e.port_v};
            auto labels = trace(from, key.first);
            auto [it, inserted] = seen.emplace(key, labels);
            r.expect(inserted || it->second == labels,
                     "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} from " + std::to_string(from));
          }
        }
      });
}

inline ClaimRecord check_subdivision_sizes(const PortLabeledGraph& original,
                                           const Subdivision& sub) {
  return timed_claim("subdivision_sizes", "|V'| = |V| + (D-1)|E| and |E'| = D|E|",
                     [&](ClaimRecord& r) {
                       const std::size_t d = sub.map.path_length;
                       const std::size_t want_n =
                           original.node_count() + (d - 1) * original.edge_count();
                       r.expect(sub.graph.node_count() == want_n,
                                "node count " + std::to_string(sub.graph.node_count()) +
                                    " != " + std::to_string(want_n));
                       r.expect(sub.graph.edge_count() == d * original.edge_count(),
                                "edge count " + std::to_string(sub.graph.edge_count()));
                     });
}

namespace detail {

inline nlohmann::ordered_json optional_json(const std::optional<std::size_t>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

inline void append(std::vector<ClaimRecord>& to, std::vector<ClaimRecord> from) {
  for (auto& r : from) to.push_back(std::move(r));
}

}  // namespace detail

/// Largest hop distance between two of the first `original_count` nodes,
/// i.e. between nodes that existed before subdivision.
inline std::optional<std::size_t> original_node_eccentricity(const PortLabeledGraph& graph,
                                                             std::size_t original_count) {
  std::size_t best = 0;
  for (NodeId u = 0; u < original_count; ++u) {
    const auto dist = bfs_distances(graph, u);
    for (NodeId v = 0; v < original_count; ++v) {
      if (dist[v] == kNoNode) return std::nullopt;
      best = std::max<std::size_t>(best, dist[v]);
    }
  }
  return best;
}

inline ClaimRecord check_original_distance(const PortLabeledGraph& graph,
                                           std::size_t original_count, std::size_t bound,
                                           std::optional<std::size_t>& measured) {
  return timed_claim("original_nodes_distance_at_most_3D",
                     "dist(u, v) <= " + std::to_string(bound) +
                         " for all nodes u, v of the unsubdivided graph",
                     [&](ClaimRecord& r) {
                       measured = original_node_eccentricity(graph, original_count);
                       r.expect(measured && *measured <= bound,
                                measured ? "distance " + std::to_string(*measured)
                                         : std::string("original nodes disconnected"));
                     });
}

/// Every check of G_l, plus those of xi_D(G_l) when `path_length` is given.
inline VerificationReport verify_lower_bound(std::uint32_t l,
                                             std::optional<std::size_t> path_length,
                                             const SweepOptions& opts = {}) {
  if (l < kMinClaimLevel) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "claim verification needs l >= " + std::to_string(kMinClaimLevel));
  }
  VerificationReport report;
  report.command = "verify";
  report.parameters["l"] = l;
  report.parameters["subdivide"] = detail::optional_json(path_length);
  report.parameters["seed"] = opts.seed;
  report.parameters["samples"] = opts.samples;

  const LowerBoundGraph g = build_lower_bound_graph(l);
  const WitnessPair w = witness_nodes(g.grid);
  auto& claims = report.claims;
  claims.push_back(check_graph_invariants(g.graph));
  claims.push_back(check_size_formulas(g));
  claims.push_back(check_degree_profile(g));
  std::optional<std::size_t> diam;
  claims.push_back(check_diameter_at_most(g.graph, 3, "diameter_at_most_3", diam));
  claims.push_back(check_delta_xor_invariance(l, opts));
  claims.push_back(check_delta_shift_invariance(l, opts));
  claims.push_back(check_delta_pi_drop(l, opts));
  claims.push_back(check_pi_involution(l));
  claims.push_back(check_pi_walk_identity(12));
  detail::append(claims, check_same_level_transport(g, opts));

  const RefinementPartition stable = stabilized_partition(g.graph);
  claims.push_back(check_truncated_views_by_delta(g, stable));
  claims.push_back(check_distinguishing_walk(g));
  std::optional<std::size_t> dstar;
  detail::append(claims, check_witness_separation(stable, w, l - 1, l, l + 1, "", dstar));
  claims.push_back(check_stabilization_bound(stable, g.graph.node_count(), "stabilization_bound"));

  auto& m = report.measured;
  m["node_count"] = g.graph.node_count();
  m["edge_count"] = g.graph.edge_count();
  m["diameter"] = detail::optional_json(diam);
  m["grid_convention"] = "node_of(i, j) = i * 2^l + j";
  m["witness_a"] = w.a;
  m["witness_b"] = w.b;
  m["distinguishing_depth"] = detail::optional_json(dstar);
  m["stabilization_round"] = detail::optional_json(stable.stabilization_round);
  m["quotient_size"] = stable.class_count(*stable.stabilization_round);

  if (path_length) {
    const std::size_t D = *path_length;
    const Subdivision sub = subdivide(g.graph, D);
    claims.push_back(check_graph_invariants(sub.graph));
    claims.back().id = "subdivided_graph_invariants";
    claims.push_back(check_subdivision_sizes(g.graph, sub));
    claims.push_back(check_subdivision_label_isomorphism(sub));
    if (D == 1) {
      claims.push_back(timed_claim("subdivision_identity", "xi_1(G) = G", [&](ClaimRecord& r) {
        r.expect(sub.graph == g.graph, "xi_1 differs from the original graph");
      }));
    }
    std::optional<std::size_t> sub_diam;
    claims.push_back(
        check_diameter_at_most(sub.graph, 3 * D, "subdivided_diameter_at_most_3D", sub_diam));
    std::optional<std::size_t> sub_orig;
    claims.push_back(check_original_distance(sub.graph, g.graph.node_count(), 3 * D, sub_orig));
    const RefinementPartition sub_stable = stabilized_partition(sub.graph);
    std::optional<std::size_t> sub_dstar;
    detail::append(claims, check_witness_separation(sub_stable, w, D * (l - 1), D * (l - 1) + 1,
                                                    D * (l + 1), "subdivided_", sub_dstar));
    claims.push_back(check_stabilization_bound(sub_stable, sub.graph.node_count(),
                                               "subdivided_stabilization_bound"));
    m["subdivided_node_count"] = sub.graph.node_count();
    m["subdivided_edge_count"] = sub.graph.edge_count();
    m["subdivided_diameter"] = detail::optional_json(sub_diam);
    m["subdivided_original_node_distance"] = detail::optional_json(sub_orig);
    m["subdivided_guaranteed_equal_depth"] = D * (l - 1);
    m["subdivided_distinguishing_depth"] = detail::optional_json(sub_dstar);
    m["subdivided_stabilization_round"] = detail::optional_json(sub_stable.stabilization_round);
    m["subdivided_quotient_size"] = sub_stable.class_count(*sub_stable.stabilization_round);
    report.notes.push_back(
        "interior path labels need an odd D whenever the graph has an edge with equal labels at "
        "both ends; G_l has such edges in its top-level clique, so only odd D is accepted");
  }
  report.notes.push_back("diameter is measured; only the upper bound is asserted");
  return report;
}

/// Checks of the (D', n') witness: size, diameter, the depth bound, and
/// that the views really agree to D(l-1) and differ later.
inline VerificationReport verify_theorem(std::uint64_t d_prime, std::uint64_t n_prime) {
  VerificationReport report;
  report.command = "theorem";
  report.parameters["dprime"] = d_prime;
  report.parameters["nprime"] = n_prime;
  const TheoremInstance inst = build_theorem_instance(d_prime, n_prime);
  report.parameters["l"] = inst.l;
  report.parameters["subdivide"] = inst.path_length;

  auto& claims = report.claims;
  claims.push_back(check_graph_invariants(inst.graph));
  claims.push_back(timed_claim("node_count_within_nprime", "|V| <= n'", [&](ClaimRecord& r) {
    r.expect(inst.graph.node_count() <= n_prime,
             std::to_string(inst.graph.node_count()) + " nodes");
  }));
  claims.push_back(timed_claim("diameter_within_dprime", "diameter <= D'", [&](ClaimRecord& r) {
    r.expect(inst.measured_diameter <= d_prime,
             "diameter " + std::to_string(inst.measured_diameter));
  }));
  std::optional<std::size_t> orig_dist;
  const std::size_t base_nodes = (inst.l + 2) * (std::size_t{1} << inst.l);
  claims.push_back(
      check_original_distance(inst.graph, base_nodes, 3 * inst.path_length, orig_dist));
  claims.push_back(timed_claim(
      "guaranteed_depth_meets_bound", "D(l-1) >= (D'-5)/6 log2(n'/D') - 0.41 D'",
      [&](ClaimRecord& r) {
        r.expect(static_cast<double>(inst.guaranteed_equal_depth) >= inst.depth_bound,
                 std::to_string(inst.guaranteed_equal_depth) + " < " +
                     std::to_string(inst.depth_bound));
      }));
  const RefinementPartition stable = stabilized_partition(inst.graph);
  std::optional<std::size_t> dstar;
  detail::append(claims, check_witness_separation(stable, inst.witnesses,
                                                  inst.guaranteed_equal_depth,
                                                  inst.guaranteed_equal_depth + 1,
                                                  inst.path_length * (inst.l + 1), "", dstar));
  claims.push_back(check_stabilization_bound(stable, inst.graph.node_count(), "stabilization_bound"));

  auto& m = report.measured;
  m["node_count"] = inst.graph.node_count();
  m["edge_count"] = inst.graph.edge_count();
  m["diameter"] = inst.measured_diameter;
  m["original_node_distance"] = detail::optional_json(orig_dist);
  m["guaranteed_equal_depth"] = inst.guaranteed_equal_depth;
  m["depth_bound"] = inst.depth_bound;
  m["witness_a"] = inst.witnesses.a;
  m["witness_b"] = inst.witnesses.b;
  m["distinguishing_depth"] = detail::optional_json(dstar);
  m["stabilization_round"] = detail::optional_json(stable.stabilization_round);
  return report;
}

/// Two copies of G_l bridged at a_l (first copy) and b_l (second copy).
inline VerificationReport verify_join_demo(std::uint32_t l) {
  if (l < kMinClaimLevel) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "join demo needs l >= " + std::to_string(kMinClaimLevel));
  }
  VerificationReport report;
  report.command = "join-demo";
  report.parameters["l"] = l;
  const LowerBoundGraph g = build_lower_bound_graph(l);
  const WitnessPair w = witness_nodes(g.grid);
  const PortLabeledGraph joined = join_with_bridge(g.graph, w.a, g.graph, w.b);
  const NodeId left = w.a;
  const NodeId right = w.b + static_cast<NodeId>(g.graph.node_count());

  auto& claims = report.claims;
  claims.push_back(check_graph_invariants(joined));
  claims.push_back(timed_claim("joined_node_count", "|V| = 2 (l+2) 2^l", [&](ClaimRecord& r) {
    r.expect(joined.node_count() == 2 * g.graph.node_count(),
             std::to_string(joined.node_count()) + " nodes");
  }));
  const RefinementPartition stable = stabilized_partition(joined);
  claims.push_back(timed_claim(
      "bridge_endpoints_views_equal",
      "V_k(bridge endpoints) equal for every k <= " + std::to_string(l - 1),
      [&](ClaimRecord& r) {
        for (std::size_t k = 0; k < l; ++k) {
          r.expect(detail::color_at(stable, k, left) == detail::color_at(stable, k, right),
                   "differ at depth " + std::to_string(k));
        }
      }));
  claims.push_back(check_stabilization_bound(stable, joined.node_count(), "stabilization_bound"));

  std::optional<std::size_t> diam;
  try {
    diam = diameter(joined);
  } catch (const Error&) {
  }
  const auto dstar = minimal_distinguishing_depth(stable, left, right);
  auto& m = report.measured;
  m["node_count"] = joined.node_count();
  m["edge_count"] = joined.edge_count();
  m["diameter"] = detail::optional_json(diam);
  m["bridge_endpoints"] = {left, right};
  m["distinguishing_depth"] = detail::optional_json(dstar);
  m["distinguishable_at_depth_l_plus_2"] = !views_equal(joined, left, right, l + 2);
  return report;
}

/// Checks that apply to an arbitrary graph file.
inline VerificationReport verify_graph(const PortLabeledGraph& graph,
                                       const std::vector<Violation>& assembly_problems = {}) {
  VerificationReport report;
  report.command = "verify";
  report.claims.push_back(check_graph_invariants(graph, assembly_problems));
  auto& m = report.measured;
  m["node_count"] = graph.node_count();
  if (!report.passed()) return report;
  m["edge_count"] = graph.edge_count();
  const RefinementPartition stable = stabilized_partition(graph);
  report.claims.push_back(
      check_stabilization_bound(stable, graph.node_count(), "stabilization_bound"));
  m["stabilization_round"] = detail::optional_json(stable.stabilization_round);
  m["quotient_size"] = stable.class_count(*stable.stabilization_round);
  if (is_connected(graph)) {
    m["diameter"] = diameter(graph);
  } else {
    m["diameter"] = nullptr;
  }
  return report;
}

}  // namespace portview
