// pairspan command line: generate instances, build pairwise spanners,
// verify stretch bounds, and run the benchmark driver.
//
// Exit codes: 0 = built and verified, 1 = usage or I/O error,
// 2 = verification failure (including internal invariant violations).

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pairspan/bench.hpp"
#include "pairspan/gen.hpp"
#include "pairspan/io.hpp"
#include "pairspan/verify.hpp"

using namespace pairspan;

namespace {

std::optional<double> parse_beta(const std::string& text) {
  if (text == "auto") return std::nullopt;
  try {
    return std::stod(text);
  } catch (const std::exception&) {
    throw std::runtime_error("--beta expects 'auto' or a real number, got '" + text + "'");
  }
}

Construction parse_construction(const std::string& name) {
  auto c = construction_from_string(name);
  if (!c) throw std::runtime_error("unknown construction '" + name + "'");
  return *c;
}

GraphModel parse_model(const std::string& name) {
  auto m = graph_model_from_string(name);
  if (!m) throw std::runtime_error("unknown graph model '" + name + "'");
  return *m;
}

PairMode parse_pair_mode(const std::string& name) {
  auto m = pair_mode_from_string(name);
  if (!m) throw std::runtime_error("unknown pair mode '" + name + "'");
  return *m;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

struct GenArgs {
  std::string model = "gnp";
  int n = 100;
  double p = 0.1;
  int rows = 0, cols = 0;
  std::uint64_t seed = 0;
  std::string out = "-";
};

struct PairArgs {
  std::string mode = "random-pairs";
  int count = 10;
  std::uint64_t seed = 0;
  std::string in;
  std::string out = "-";
};

struct BuildArgs {
  std::string construction;
  std::string in;
  std::string pairs;
  int k = 2;
  std::string eps = "0.5";
  std::string beta = "auto";
  std::string out;
  std::string csv;
};

struct VerifyArgs {
  std::string in;
  std::string spanner;
  std::string pairs;
  std::string construction;
  int k = 2;
  std::string eps = "0.5";
  std::string alpha;
  std::string add;
};

struct BenchArgs {
  std::string model = "gnp";
  int n = 100;
  double p = 0.1;
  int rows = 0, cols = 0;
  std::uint64_t seed = 0;
  std::string pairs_mode = "subset-cross";
  int count = 10;
  std::uint64_t pairs_seed = 0;
  std::vector<std::string> constructions;
  int k = 2;
  std::string eps = "0.5";
  std::string beta = "auto";
  std::string csv = "-";
};

GenSpec to_gen_spec(const std::string& model, int n, double p, int rows, int cols,
                    std::uint64_t seed) {
  GenSpec spec;
  spec.model = parse_model(model);
  spec.n = n;
  spec.p = p;
  spec.rows = rows;
  spec.cols = cols;
  spec.seed = seed;
  return spec;
}

int run_gen(const GenArgs& args) {
  Graph g = generate_graph(
      to_gen_spec(args.model, args.n, args.p, args.rows, args.cols, args.seed));
  std::ostringstream os;
  write_graph(os, g);
  write_text(args.out, os.str());
  return 0;
}

int run_pairs(const PairArgs& args) {
  Graph g = read_graph_file(args.in);
  PairSpec spec;
  spec.mode = parse_pair_mode(args.mode);
  spec.count = args.count;
  spec.seed = args.seed;
  auto pairs = generate_pairs(g.num_nodes(), spec);
  std::ostringstream os;
  write_pairs(os, pairs);
  write_text(args.out, os.str());
  return 0;
}

BenchRow outcome_to_row(const Graph& g, const ConstructionRequest& req,
                        const BuildOutcome& outcome, int num_pairs, int baseline,
                        double wall_ms) {
  BenchRow row;
  row.construction = to_string(req.kind);
  row.n = g.num_nodes();
  row.m = g.num_edges();
  bool set_based = req.kind == Construction::subsetwise ||
                   req.kind == Construction::sourcewise;
  row.n_or_s = set_based ? outcome.ledger.set_size : num_pairs;
  switch (req.kind) {
    case Construction::sourcewise:
    case Construction::pairwise_pure:
    case Construction::mult:
      row.k_or_eps = std::to_string(req.k);
      break;
    case Construction::pairwise_near:
      row.k_or_eps = req.eps;
      break;
    default:
      row.k_or_eps = "-";
  }
  if (req.kind == Construction::mult || req.kind == Construction::preserver) {
    row.beta = "-";
  } else {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", outcome.ledger.beta);
    row.beta = buf;
  }
  row.edges_clustering = outcome.spanner.clustering_edges;
  row.edges_bought = outcome.spanner.bought_edges;
  row.edges_phase3 = outcome.spanner.phase3_edges;
  row.edges_total = outcome.spanner.edges.size();
  row.baseline_edges = baseline;
  row.stretch_pass = outcome.stretch.pass;
  row.worst_excess = outcome.stretch.worst_excess;
  row.wall_time_ms = wall_ms;
  return row;
}

int run_build(const BuildArgs& args) {
  Graph g = read_graph_file(args.in);
  ConstructionRequest req;
  req.kind = parse_construction(args.construction);
  req.k = args.k == 0 ? ceil_log2(g.num_nodes()) : args.k;
  req.eps = args.eps;
  req.beta = parse_beta(args.beta);

  std::vector<std::pair<Node, Node>> pairs;
  if (!args.pairs.empty()) {
    pairs = read_pairs_file(args.pairs);
  } else if (req.kind != Construction::mult) {
    throw std::runtime_error("build: --pairs is required for " + args.construction);
  }

  auto start = std::chrono::steady_clock::now();
  BuildOutcome outcome = run_construction(g, pairs, req);
  auto stop = std::chrono::steady_clock::now();
  double wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  if (!args.out.empty()) write_edge_set_file(args.out, g, outcome.spanner.edges);
  if (!args.csv.empty()) {
    int baseline = preserver_baseline(g, pairs).size();
    BenchRow row = outcome_to_row(g, req, outcome,
                                  static_cast<int>(pairs.size()), baseline, wall_ms);
    std::ofstream csv(args.csv);
    if (!csv) throw std::runtime_error("cannot open for writing: " + args.csv);
    csv << csv_header() << '\n' << to_csv(row) << '\n';
  }

  std::cerr << to_string(req.kind) << ": " << outcome.spanner.edges.size()
            << " edges (clustering " << outcome.spanner.clustering_edges
            << ", bought " << outcome.spanner.bought_edges << ", phase3 "
            << outcome.spanner.phase3_edges << ") over " << g.num_edges()
            << " graph edges; stretch "
            << (outcome.stretch.pass ? "ok" : "FAILED") << ", size audit "
            << (outcome.sizes.pass ? "ok" : "FAILED") << '\n';

  if (!outcome.verified())
    throw VerificationFailure(to_string(req.kind) + ": " + outcome.failure_witness());
  return 0;
}

int run_verify(const VerifyArgs& args) {
  Graph g = read_graph_file(args.in);
  EdgeSet h = read_edge_set_file(args.spanner, g);
  auto pairs = read_pairs_file(args.pairs);

  StretchSpec spec;
  if (!args.alpha.empty() || !args.add.empty()) {
    spec.alpha = args.alpha.empty() ? Rational::from_int(1)
                                    : Rational::from_decimal(args.alpha);
    spec.add = args.add.empty() ? Rational::from_int(0)
                                : Rational::from_decimal(args.add);
  } else if (!args.construction.empty()) {
    ConstructionRequest req;
    req.kind = parse_construction(args.construction);
    req.k = args.k;
    req.eps = args.eps;
    spec = stretch_spec_for(req);
  } else {
    throw std::runtime_error("verify: give --construction or --alpha/--add");
  }

  StretchReport rep = verify_stretch(g, h, pairs, spec);
  int shown = 0;
  for (const auto& row : rep.rows) {
    if (row.ok || shown >= 10) continue;
    std::cerr << "violation: pair (" << row.u << "," << row.v << ") d_G=" << row.d_g
              << " d_H="
              << (row.d_h == DistanceRow::kUnreachable ? std::string("unreachable")
                                                       : std::to_string(row.d_h))
              << " bound=" << row.bound << '\n';
    ++shown;
  }
  std::cerr << "checked " << rep.rows.size() << " pairs: "
            << (rep.pass ? "all within bound" : "violations found") << '\n';
  if (!rep.pass) throw VerificationFailure("stretch: " + rep.first_failure());
  return 0;
}

int run_bench(const BenchArgs& args) {
  BenchSpec spec;
  spec.graph = to_gen_spec(args.model, args.n, args.p, args.rows, args.cols, args.seed);
  spec.pairs.mode = parse_pair_mode(args.pairs_mode);
  spec.pairs.count = args.count;
  spec.pairs.seed = args.pairs_seed;
  if (args.constructions.empty())
    throw std::runtime_error("bench: --construction is required");
  const Graph instance = generate_graph(spec.graph);
  for (const std::string& name : args.constructions) {
    ConstructionRequest req;
    req.kind = parse_construction(name);
    req.k = args.k == 0 ? ceil_log2(instance.num_nodes()) : args.k;
    req.eps = args.eps;
    req.beta = parse_beta(args.beta);
    spec.constructions.push_back(std::move(req));
  }

  auto rows = run_benchmark(spec);
  std::ostringstream os;
  write_csv(os, rows);
  write_text(args.csv, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pairwise graph spanners: generators, constructions, audits"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a graph instance");
  gen->add_option("--model", gen_args.model, "gnp|grid|tree|cycle");
  gen->add_option("--n", gen_args.n, "node count (gnp, tree, cycle)");
  gen->add_option("--p", gen_args.p, "edge probability (gnp)");
  gen->add_option("--rows", gen_args.rows, "grid rows");
  gen->add_option("--cols", gen_args.cols, "grid cols");
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--out", gen_args.out, "output path, '-' for stdout");

  PairArgs pair_args;
  auto* pairs = app.add_subcommand("pairs", "generate a pair set for a graph");
  pairs->add_option("--mode", pair_args.mode,
                    "random-pairs|subset-cross|sourcewise-cross");
  pairs->add_option("--count,--s-size", pair_args.count,
                    "pair count (random-pairs) or |S| (cross modes)");
  pairs->add_option("--seed", pair_args.seed, "sampling seed");
  pairs->add_option("--in", pair_args.in, "graph file")->required();
  pairs->add_option("--out", pair_args.out, "output path, '-' for stdout");

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "build a spanner and verify it");
  build->add_option("--construction", build_args.construction,
                    "subsetwise|sourcewise|pairwise-near|pairwise-pure|mult|preserver")
      ->required();
  build->add_option("--in", build_args.in, "graph file")->required();
  build->add_option("--pairs", build_args.pairs, "pairs file");
  build->add_option("--k", build_args.k, "stretch parameter k (0 = ceil(log2 n))");
  build->add_option("--eps", build_args.eps, "epsilon (decimal string)");
  build->add_option("--beta", build_args.beta, "'auto' or a real in [0,1]");
  build->add_option("--out", build_args.out, "write the spanner edge list here");
  build->add_option("--csv", build_args.csv, "write a one-row CSV summary here");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check a spanner against a stretch bound");
  verify->add_option("--in", verify_args.in, "graph file")->required();
  verify->add_option("--spanner", verify_args.spanner, "spanner edge list file")
      ->required();
  verify->add_option("--pairs", verify_args.pairs, "pairs file")->required();
  verify->add_option("--construction", verify_args.construction,
                     "derive the bound from this construction");
  verify->add_option("--k", verify_args.k, "k for the derived bound");
  verify->add_option("--eps", verify_args.eps, "epsilon for the derived bound");
  verify->add_option("--alpha", verify_args.alpha, "explicit multiplicative stretch");
  verify->add_option("--add", verify_args.add, "explicit additive stretch");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "generate, build, audit, emit CSV");
  bench->add_option("--model", bench_args.model, "gnp|grid|tree|cycle");
  bench->add_option("--n", bench_args.n, "node count");
  bench->add_option("--p", bench_args.p, "edge probability (gnp)");
  bench->add_option("--rows", bench_args.rows, "grid rows");
  bench->add_option("--cols", bench_args.cols, "grid cols");
  bench->add_option("--seed", bench_args.seed, "graph seed");
  bench->add_option("--pairs-mode", bench_args.pairs_mode,
                    "random-pairs|subset-cross|sourcewise-cross");
  bench->add_option("--count,--s-size", bench_args.count,
                    "pair count or |S| for the pair set");
  bench->add_option("--pairs-seed", bench_args.pairs_seed, "pair sampling seed");
  bench->add_option("--construction", bench_args.constructions,
                    "comma-separated construction list")
      ->delimiter(',');
  bench->add_option("--k", bench_args.k, "stretch parameter k (0 = ceil(log2 n))");
  bench->add_option("--eps", bench_args.eps, "epsilon (decimal string)");
  bench->add_option("--beta", bench_args.beta, "'auto' or a real in [0,1]");
  bench->add_option("--csv", bench_args.csv, "output path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(gen)) return run_gen(gen_args);
    if (app.got_subcommand(pairs)) return run_pairs(pair_args);
    if (app.got_subcommand(build)) return run_build(build_args);
    if (app.got_subcommand(verify)) return run_verify(verify_args);
    if (app.got_subcommand(bench)) return run_bench(bench_args);
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
