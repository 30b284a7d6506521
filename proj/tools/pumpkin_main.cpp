// Command-line front end: solve / oracle / gen / bench over text edge lists.
//
// Exit codes across all subcommands: 0 = YES (or success), 1 = NO (or a
// bench bound violation), 2 = usage, parse, or size errors.
//
// Verdicts and certificates go to stdout and are byte-deterministic for a
// fixed invocation; --stats emits a timing-bearing JSON object on stderr so
// that stdout stays reproducible.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pumpkin/edgelist.hpp"
#include "pumpkin/generator.hpp"
#include "pumpkin/oracle.hpp"
#include "pumpkin/recognizer.hpp"
#include "pumpkin/solver.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace pumpkin;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

json stats_to_json(const SearchStats& stats, double elapsed_ms) {
  json firings = json::object();
  for (int code = 0; code < kBranchRuleCount; ++code)
    firings[RuleId::from_code(code).name()] = stats.rule_firings[code];
  json reductions = json::object();
  for (int i = 0; i < kReductionRuleCount; ++i)
    reductions[to_string(static_cast<ReductionRule>(i))] =
        stats.reductions[i];
  return json{{"schema", 1},
              {"nodes", stats.nodes},
              {"leaves", stats.leaves},
              {"max_depth", stats.max_depth},
              {"rule_firings", firings},
              {"reductions", reductions},
              {"elapsed_ms", elapsed_ms}};
}

void print_certificate_line(const Solution& sol) {
  for (std::size_t i = 0; i < sol.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << sol[i];
  }
  std::cout << '\n';
}

struct SolveArgs {
  std::string input;
  int k = 0;
  std::optional<VertexId> source;
  std::optional<VertexId> sink;
  bool stats = false;
  bool certify = false;
  bool json_out = false;
};

int cmd_solve(const SolveArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  const EdgeListFile file = read_edge_list_file(args.input);
  const Digraph g = to_digraph(file);

  std::optional<Solution> solution;
  SearchStats stats;
  std::optional<VertexId> source = args.source;
  std::optional<VertexId> sink = args.sink;

  if (args.source && args.sink) {
    RpvdsResult r = solve_rpvds(Instance(g, args.k, *args.source, *args.sink));
    solution = std::move(r.solution);
    stats = r.stats;
  } else {
    PvdsResult r = solve_pvds(g, args.k);
    solution = std::move(r.solution);
    stats = r.stats;
    source = r.source;
    sink = r.sink;
  }

  if (solution && args.certify) {
    const Solution& sol = *solution;
    const bool ok = static_cast<int>(sol.size()) <= args.k &&
                    std::none_of(sol.begin(), sol.end(),
                                 [&](VertexId v) {
                                   return v == *source || v == *sink;
                                 }) &&
                    is_pumpkin(g.delete_vertices(sol), *source, *sink);
    if (!ok) {
      std::cerr << "certificate verification failed\n";
      return kExitError;
    }
  }

  if (args.stats)
    std::cerr << stats_to_json(stats, elapsed_ms_since(started)).dump()
              << '\n';

  if (args.json_out) {
    json out{{"schema", 1}, {"answer", solution ? "yes" : "no"}};
    if (solution) {
      out["certificate"] = *solution;
      out["source"] = *source;
      out["sink"] = *sink;
    }
    std::cout << out.dump() << '\n';
  } else if (solution) {
    std::cout << "YES\n";
    print_certificate_line(*solution);
  } else {
    std::cout << "NO\n";
  }
  return solution ? kExitYes : kExitNo;
}

struct OracleArgs {
  std::string input;
  int k = 0;
  std::optional<VertexId> source;
  std::optional<VertexId> sink;
};

int cmd_oracle(const OracleArgs& args) {
  const EdgeListFile file = read_edge_list_file(args.input);
  const Digraph g = to_digraph(file);

  OracleResult result;
  if (args.source && args.sink)
    result = brute_force_rpvds(Instance(g, args.k, *args.source, *args.sink));
  else
    result = brute_force_pvds(g, args.k);

  if (result.answer) {
    std::cout << "YES\n";
    print_certificate_line(*result.witness);
    std::cout << "min_size " << *result.min_size << '\n';
    return kExitYes;
  }
  std::cout << "NO\n";
  return kExitNo;
}

struct GenArgs {
  std::string kind;
  std::vector<int> paths;
  int noise = 0;
  double edges_per_vertex = 2.0;
  VertexId n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  Digraph g;
  EdgeListMeta meta;
  if (args.kind == "pumpkin") {
    g = make_pumpkin(args.paths).g;
  } else if (args.kind == "planted") {
    PlantSpec spec{args.paths, args.noise, args.edges_per_vertex, args.seed};
    Instance inst = make_planted(spec);
    meta = {inst.s, inst.t, inst.k};
    g = std::move(inst.g);
  } else if (args.kind == "random") {
    g = random_digraph(args.n, args.p, args.seed);
  } else {
    std::cerr << "unknown kind: " << args.kind << '\n';
    return kExitError;
  }

  if (args.out.empty())
    write_edge_list(std::cout, g, meta);
  else
    write_edge_list_file(args.out, g, meta);
  return 0;
}

struct BenchArgs {
  std::string corpus;
  std::string out;
};

int cmd_bench(const BenchArgs& args) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(args.corpus))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::ofstream csv(args.out);
  if (!csv) {
    std::cerr << "cannot open " << args.out << " for writing\n";
    return kExitError;
  }
  csv << "file,n,m,k,answer,nodes,leaves,max_depth,elapsed_ms,bound_ratio\n";

  double max_ratio = 0.0;
  bool violated = false;
  for (const fs::path& path : files) {
    const EdgeListFile file = read_edge_list_file(path.string());
    if (!file.source || !file.sink || !file.planted_k) {
      std::cerr << path.string() << ": missing planted metadata\n";
      return kExitError;
    }
    const Digraph g = to_digraph(file);
    const auto started = std::chrono::steady_clock::now();
    RpvdsResult r =
        solve_rpvds(Instance(g, *file.planted_k, *file.source, *file.sink));
    const double elapsed = elapsed_ms_since(started);
    const double ratio =
        static_cast<double>(r.stats.nodes) / std::ldexp(1.0, *file.planted_k);
    max_ratio = std::max(max_ratio, ratio);
    if (ratio > 10.0) violated = true;

    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.3f", elapsed);
    csv << path.filename().string() << ',' << g.capacity() << ','
        << g.edge_count() << ',' << *file.planted_k << ','
        << (r.solution ? "YES" : "NO") << ',' << r.stats.nodes << ','
        << r.stats.leaves << ',' << r.stats.max_depth << ',' << buffer << ',';
    std::snprintf(buffer, sizeof buffer, "%.6g", ratio);
    csv << buffer << '\n';
  }

  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", max_ratio);
  std::cout << "instances=" << files.size() << " max_bound_ratio=" << buffer
            << '\n';
  return violated ? kExitNo : kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for pumpkin vertex deletion"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  VertexId solve_source = -1, solve_sink = -1;
  auto* solve = app.add_subcommand(
      "solve", "decide whether deleting at most k vertices leaves a pumpkin");
  solve->add_option("input", solve_args.input, "edge-list file")->required();
  solve->add_option("--k", solve_args.k, "deletion budget")->required();
  auto* src_opt = solve->add_option("--source", solve_source,
                                    "prescribed source (with --sink)");
  auto* sink_opt =
      solve->add_option("--sink", solve_sink, "prescribed sink (with --source)");
  src_opt->needs(sink_opt);
  sink_opt->needs(src_opt);
  solve->add_flag("--stats", solve_args.stats, "emit search stats on stderr");
  solve->add_flag("--certify", solve_args.certify,
                  "re-verify the certificate before printing");
  solve->add_flag("--json", solve_args.json_out, "JSON verdict on stdout");

  OracleArgs oracle_args;
  VertexId oracle_source = -1, oracle_sink = -1;
  auto* oracle = app.add_subcommand(
      "oracle", "brute-force ground truth (small instances only)");
  oracle->add_option("input", oracle_args.input, "edge-list file")->required();
  oracle->add_option("--k", oracle_args.k, "deletion budget")->required();
  auto* osrc = oracle->add_option("--source", oracle_source, "prescribed source");
  auto* osink = oracle->add_option("--sink", oracle_sink, "prescribed sink");
  osrc->needs(osink);
  osink->needs(osrc);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->add_option("kind", gen_args.kind, "pumpkin | planted | random")
      ->required();
  gen->add_option("--paths", gen_args.paths,
                  "path lengths, e.g. --paths 2,3,2")
      ->delimiter(',');
  gen->add_option("--noise", gen_args.noise, "planted: noise vertex count");
  gen->add_option("--edges-per-vertex", gen_args.edges_per_vertex,
                  "planted: expected attachments per noise vertex");
  gen->add_option("--n", gen_args.n, "random: vertex count");
  gen->add_option("--p", gen_args.p, "random: arc probability");
  gen->add_option("--seed", gen_args.seed, "random stream seed");
  gen->add_option("--out", gen_args.out, "output file (default: stdout)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand(
      "bench", "solve a corpus of planted instances and audit the node bound");
  bench->add_option("corpus", bench_args.corpus, "directory of edge lists")
      ->required();
  bench->add_option("--out", bench_args.out, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (solve->parsed()) {
      if (src_opt->count()) solve_args.source = solve_source;
      if (sink_opt->count()) solve_args.sink = solve_sink;
      return cmd_solve(solve_args);
    }
    if (oracle->parsed()) {
      if (osrc->count()) oracle_args.source = oracle_source;
      if (osink->count()) oracle_args.sink = oracle_sink;
      return cmd_oracle(oracle_args);
    }
    if (gen->parsed()) return cmd_gen(gen_args);
    if (bench->parsed()) return cmd_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
