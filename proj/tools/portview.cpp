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

// portview: generate lower-bound graphs, check their properties, and query
// view equivalence of arbitrary port-labeled graphs.
//
// Exit status: 0 all checks pass, 1 a check failed, 2 invalid input.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "portview/portview.hpp"

namespace {

using namespace portview;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInvalid = 2;

struct Options {
  std::optional<std::uint32_t> l;
  std::optional<std::size_t> subdivide;
  std::optional<std::uint64_t> dprime;
  std::optional<std::uint64_t> nprime;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> samples;
  std::optional<std::string> graph_path;
  std::optional<std::string> out;
  std::optional<NodeId> u;
  std::optional<NodeId> v;
  bool dot = false;
};

std::uint32_t require_l(const Options& o) {
  if (!o.l) throw Error(ErrorCode::kParameterOutOfRange, "--l is required");
  return *o.l;
}

/// G_l or xi_D(G_l) from --l / --subdivide, or the graph file given by --graph.
struct LoadedGraph {
  PortLabeledGraph graph;
  std::optional<LowerBoundGraph> base;
};

LoadedGraph load_input(const Options& o) {
  if (o.graph_path) {
    if (o.l) throw Error(ErrorCode::kParameterOutOfRange, "use either --graph or --l");
    return {load_json(read_file(*o.graph_path)), std::nullopt};
  }
  LowerBoundGraph base = build_lower_bound_graph(require_l(o));
  PortLabeledGraph graph = o.subdivide ? subdivide(base.graph, *o.subdivide).graph : base.graph;
  return {std::move(graph), std::move(base)};
}

int emit(const VerificationReport& report, const Options& o) {
  std::cout << report.summary();
  if (o.out) write_file(*o.out, report.to_json());
  return report.passed() ? kExitPass : kExitFail;
}

std::string sibling_path(const std::string& path, const std::string& suffix) {
  const auto dot = path.rfind(".json");
  const std::string stem = dot != std::string::npos && dot + 5 == path.size()
                               ? path.substr(0, dot)
                               : path;
  return stem + suffix;
}

int run_gen(const Options& o) {
  const std::uint32_t l = require_l(o);
  if (!o.out) throw Error(ErrorCode::kParameterOutOfRange, "--out is required");
  const LowerBoundGraph base = build_lower_bound_graph(l);
  const PortLabeledGraph graph =
      o.subdivide ? subdivide(base.graph, *o.subdivide).graph : base.graph;
  write_file(*o.out, save_json(graph));

  const WitnessPair w = witness_nodes(base.grid);
  nlohmann::ordered_json meta;
  meta["l"] = l;
  meta["subdivide"] = o.subdivide ? nlohmann::ordered_json(*o.subdivide) : nullptr;
  meta["node_count"] = graph.node_count();
  meta["edge_count"] = graph.edge_count();
  meta["grid"] = {{"level_count", base.grid.level_count()},
                  {"column_count", base.grid.column_count()},
                  {"node_of", "i * 2^l + j"}};
  meta["witnesses"] = {{"a", w.a}, {"b", w.b}};
  const std::string meta_path = sibling_path(*o.out, ".meta.json");
  write_file(meta_path, meta.dump(2) + "\n");
  std::cout << "wrote " << *o.out << " (" << graph.node_count() << " nodes, "
            << graph.edge_count() << " edges) and " << meta_path << "\n";
  if (o.dot) {
    const std::string dot_path = sibling_path(*o.out, ".dot");
    write_file(dot_path, export_dot(graph));
    std::cout << "wrote " << dot_path << "\n";
  }
  return kExitPass;
}

int run_verify(const Options& o) {
  if (o.graph_path) {
    std::vector<Violation> problems;
    const PortLabeledGraph graph = parse_json_unchecked(read_file(*o.graph_path), &problems);
    VerificationReport report = verify_graph(graph, problems);
    report.parameters["graph"] = *o.graph_path;
    return emit(report, o);
  }
  SweepOptions sweep;
  if (o.seed) sweep.seed = *o.seed;
  if (o.samples) sweep.samples = *o.samples;
  return emit(verify_lower_bound(require_l(o), o.subdivide, sweep), o);
}

int run_theorem(const Options& o) {
  if (!o.dprime || !o.nprime) {
    throw Error(ErrorCode::kParameterOutOfRange, "--dprime and --nprime are required");
  }
  return emit(verify_theorem(*o.dprime, *o.nprime), o);
}

int run_depth(const Options& o) {
  if (!o.u || !o.v) throw Error(ErrorCode::kParameterOutOfRange, "--u and --v are required");
  const LoadedGraph in = load_input(o);
  const std::size_t n = in.graph.node_count();
  if (*o.u >= n || *o.v >= n) {
    throw Error(ErrorCode::kNodeOutOfRange, "nodes must lie in [0, " + std::to_string(n) + ")");
  }
  const RefinementPartition stable = stabilized_partition(in.graph);
  const auto dstar = minimal_distinguishing_depth(stable, *o.u, *o.v);
  if (dstar) {
    std::cout << "d* = " << *dstar;
  } else {
    std::cout << "equivalent";
  }
  std::cout << " (stabilization round " << *stable.stabilization_round << ")\n";
  if (is_connected(in.graph) && n > 1) {
    const auto diam = static_cast<double>(diameter(in.graph));
    std::cout << "reference D*log2(n/D) = " << diam * std::log2(static_cast<double>(n) / diam)
              << " (D = " << diam << ", n = " << n << "; upper-bound shape, constant 1)\n";
  }
  return kExitPass;
}

int run_quotient(const Options& o) {
  const LoadedGraph in = load_input(o);
  const RefinementPartition stable = stabilized_partition(in.graph);
  const QuotientGraph q = quotient_graph(in.graph, stable);
  std::cout << "quotient size " << q.class_count << " of " << in.graph.node_count()
            << " nodes (stabilization round " << *stable.stabilization_round << ")\n";
  if (o.out) {
    write_file(*o.out, partition_to_json(stable));
    std::cout << "wrote " << *o.out << "\n";
  }
  return kExitPass;
}

int run_join_demo(const Options& o) { return emit(verify_join_demo(require_l(o)), o); }

int run_export_dot(const Options& o) {
  const LoadedGraph in = load_input(o);
  const std::string dot = export_dot(in.graph);
  if (o.out) {
    write_file(*o.out, dot);
  } else {
    std::cout << dot;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Views in anonymous port-labeled networks"};
  app.require_subcommand(1);
  Options o;

  auto add_l = [&](CLI::App* cmd) { cmd->add_option("--l", o.l, "level parameter of G_l"); };
  auto add_subdivide = [&](CLI::App* cmd) {
    cmd->add_option("--subdivide", o.subdivide, "replace each edge by a path of length D");
  };
  auto add_graph = [&](CLI::App* cmd) {
    cmd->add_option("--graph", o.graph_path, "graph JSON file")->check(CLI::ExistingFile);
  };
  auto add_out = [&](CLI::App* cmd, const char* what) { cmd->add_option("--out", o.out, what); };

  auto* gen = app.add_subcommand("gen", "write G_l or its subdivision as JSON");
  add_l(gen);
  add_subdivide(gen);
  add_out(gen, "graph JSON path; metadata goes next to it");
  gen->add_flag("--dot", o.dot, "also write a DOT file");

  auto* verify = app.add_subcommand("verify", "check every property of G_l, or a graph file");
  add_l(verify);
  add_subdivide(verify);
  add_graph(verify);
  verify->add_option("--seed", o.seed, "seed for sampled sweeps");
  verify->add_option("--samples", o.samples, "samples per sampled sweep");
  add_out(verify, "JSON report path");

  auto* theorem = app.add_subcommand("theorem", "build and check the (D', n') witness");
  theorem->add_option("--dprime", o.dprime, "diameter budget D'")->required();
  theorem->add_option("--nprime", o.nprime, "node budget n'")->required();
  add_out(theorem, "JSON report path");

  auto* depth = app.add_subcommand("depth", "minimal depth separating the views of two nodes");
  add_graph(depth);
  add_l(depth);
  add_subdivide(depth);
  depth->add_option("--u", o.u, "first node")->required();
  depth->add_option("--v", o.v, "second node")->required();

  auto* quotient = app.add_subcommand("quotient", "infinite-view classes and quotient size");
  add_graph(quotient);
  add_l(quotient);
  add_subdivide(quotient);
  add_out(quotient, "partition dump path");

  auto* join = app.add_subcommand("join-demo", "bridge two copies of G_l at its witnesses");
  add_l(join);
  add_out(join, "JSON report path");

  auto* dot = app.add_subcommand("export-dot", "DOT rendering of a graph");
  add_graph(dot);
  add_l(dot);
  add_subdivide(dot);
  add_out(dot, "DOT path (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (gen->parsed()) return run_gen(o);
    if (verify->parsed()) return run_verify(o);
    if (theorem->parsed()) return run_theorem(o);
    if (depth->parsed()) return run_depth(o);
    if (quotient->parsed()) return run_quotient(o);
    if (join->parsed()) return run_join_demo(o);
    if (dot->parsed()) return run_export_dot(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
