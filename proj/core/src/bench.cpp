#include "pairspan/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "pairspan/mult_spanner.hpp"
#include "pairspan/pairwise_near.hpp"
#include "pairspan/pairwise_pure.hpp"
#include "pairspan/sourcewise.hpp"
#include "pairspan/subsetwise.hpp"

namespace pairspan {

std::vector<Node> subset_from_pairs(std::span<const std::pair<Node, Node>> pairs) {
  std::vector<Node> s;
  for (const auto& [u, v] : pairs) {
    s.push_back(u);
    s.push_back(v);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<Node> sources_from_pairs(std::span<const std::pair<Node, Node>> pairs) {
  std::vector<Node> s;
  for (const auto& [u, v] : pairs) s.push_back(u);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

StretchSpec stretch_spec_for(const ConstructionRequest& req) {
  switch (req.kind) {
    case Construction::subsetwise: return StretchSpec::additive(2);
    case Construction::sourcewise: return StretchSpec::additive(2LL * req.k);
    case Construction::pairwise_near: return StretchSpec::near_additive(req.eps);
    case Construction::pairwise_pure: return StretchSpec::additive(4LL * req.k);
    case Construction::mult: return StretchSpec::multiplicative(2LL * req.k - 1);
    case Construction::preserver: return StretchSpec::additive(0);
  }
  throw std::invalid_argument("stretch_spec_for: unknown construction");
}

std::string BuildOutcome::failure_witness() const {
  if (!stretch.pass) return "stretch: " + stretch.first_failure();
  if (!sizes.pass) return "size audit: " + sizes.first_failure();
  return "";
}

BuildOutcome run_construction(const Graph& g,
                              std::span<const std::pair<Node, Node>> pairs,
                              const ConstructionRequest& req) {
  BuildOutcome out;
  switch (req.kind) {
    case Construction::subsetwise: {
      SubsetwiseParams params{subset_from_pairs(pairs), req.beta};
      std::tie(out.spanner, out.ledger) = build_subsetwise(g, params);
      break;
    }
    case Construction::sourcewise: {
      SourcewiseParams params{sources_from_pairs(pairs), req.k, req.beta};
      std::tie(out.spanner, out.ledger) = build_sourcewise(g, params);
      break;
    }
    case Construction::pairwise_near: {
      NearAdditiveParams params;
      params.pairs.assign(pairs.begin(), pairs.end());
      params.epsilon = Rational::from_decimal(req.eps).to_double();
      params.beta = req.beta;
      std::tie(out.spanner, out.ledger) = build_pairwise_near(g, params);
      break;
    }
    case Construction::pairwise_pure: {
      PureAdditiveParams params;
      params.pairs.assign(pairs.begin(), pairs.end());
      params.k = req.k;
      params.beta = req.beta;
      std::tie(out.spanner, out.ledger) = build_pairwise_pure(g, params);
      break;
    }
    case Construction::mult: {
      out.spanner.edges = greedy_mult_spanner(g, req.k);
      out.spanner.phase3_edges = out.spanner.edges.size();
      out.ledger.kind = Construction::mult;
      out.ledger.n = g.num_nodes();
      out.ledger.k = req.k;
      break;
    }
    case Construction::preserver: {
      out.spanner.edges = preserver_baseline(g, pairs);
      out.spanner.bought_edges = out.spanner.edges.size();
      out.ledger.kind = Construction::preserver;
      out.ledger.n = g.num_nodes();
      break;
    }
  }
  out.spec = stretch_spec_for(req);
  out.stretch = verify_stretch(g, out.spanner.edges, pairs, out.spec);
  out.sizes = audit_sizes(out.ledger);
  return out;
}

EdgeSet preserver_baseline(const Graph& g,
                           std::span<const std::pair<Node, Node>> pairs) {
  EdgeSet h = g.empty_edge_set();
  const EdgeSet all = g.full_edge_set();
  std::unordered_map<Node, DistanceRow> rows;
  for (const auto& [u, v] : pairs) {
    g.check_node(u, "preserver pair");
    g.check_node(v, "preserver pair");
    if (u == v) continue;
    auto it = rows.find(u);
    if (it == rows.end()) it = rows.emplace(u, bfs_distances(g, all, u)).first;
    if (!it->second.reached(v)) continue;
    Path p = extract_path(g, all, it->second, v);
    for (std::size_t e = 0; e + 1 < p.vertices.size(); ++e)
      h.insert(g.edge_index(p.vertices[e], p.vertices[e + 1]));
  }
  return h;
}

namespace {

std::string format_fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

int worker_count() {
  if (const char* env = std::getenv("PAIRSPAN_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

bool uses_set_size(Construction c) {
  return c == Construction::subsetwise || c == Construction::sourcewise;
}

bool uses_beta(Construction c) {
  return c != Construction::mult && c != Construction::preserver;
}

std::string k_or_eps_of(const ConstructionRequest& req) {
  switch (req.kind) {
    case Construction::sourcewise:
    case Construction::pairwise_pure:
    case Construction::mult:
      return std::to_string(req.k);
    case Construction::pairwise_near:
      return req.eps;
    default:
      return "-";
  }
}

}  // namespace

std::string csv_header() {
  return "construction,n,m,N_or_S,k_or_eps,beta,edges_clustering,edges_bought,"
         "edges_phase3,edges_total,baseline_edges,stretch_pass,worst_excess,"
         "wall_time_ms";
}

std::string to_csv(const BenchRow& r) {
  std::ostringstream os;
  os << r.construction << ',' << r.n << ',' << r.m << ',' << r.n_or_s << ','
     << r.k_or_eps << ',' << r.beta << ',' << r.edges_clustering << ','
     << r.edges_bought << ',' << r.edges_phase3 << ',' << r.edges_total << ','
     << r.baseline_edges << ',' << (r.stretch_pass ? "true" : "false") << ','
     << format_fixed(r.worst_excess, 6) << ',' << format_fixed(r.wall_time_ms, 3);
  return os.str();
}

std::vector<BenchRow> run_benchmark(const BenchSpec& spec) {
  const Graph g = generate_graph(spec.graph);
  const auto pairs = generate_pairs(g.num_nodes(), spec.pairs);
  const int baseline = preserver_baseline(g, pairs).size();

  const int cells = static_cast<int>(spec.constructions.size());
  std::vector<BenchRow> rows(cells);
  std::vector<std::exception_ptr> errors(cells);

  auto run_cell = [&](int i) {
    const ConstructionRequest& req = spec.constructions[i];
    auto start = std::chrono::steady_clock::now();
    BuildOutcome outcome = run_construction(g, pairs, req);
    auto stop = std::chrono::steady_clock::now();

    BenchRow row;
    row.construction = to_string(req.kind);
    row.n = g.num_nodes();
    row.m = g.num_edges();
    row.n_or_s = uses_set_size(req.kind)
                     ? outcome.ledger.set_size
                     : static_cast<int>(pairs.size());
    row.k_or_eps = k_or_eps_of(req);
    row.beta = uses_beta(req.kind) ? format_fixed(outcome.ledger.beta, 6) : "-";
    row.edges_clustering = outcome.spanner.clustering_edges;
    row.edges_bought = outcome.spanner.bought_edges;
    row.edges_phase3 = outcome.spanner.phase3_edges;
    row.edges_total = outcome.spanner.edges.size();
    row.baseline_edges = baseline;
    row.stretch_pass = outcome.stretch.pass;
    row.worst_excess = outcome.stretch.worst_excess;
    row.wall_time_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    rows[i] = std::move(row);

    if (!outcome.verified())
      throw VerificationFailure(to_string(req.kind) + ": " +
                                outcome.failure_witness());
  };

  const int workers = std::min(worker_count(), std::max(cells, 1));
  if (workers <= 1 || cells <= 1) {
    for (int i = 0; i < cells; ++i) {
      try {
        run_cell(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          int i = next.fetch_add(1);
          if (i >= cells) return;
          try {
            run_cell(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  for (int i = 0; i < cells; ++i)
    if (errors[i]) std::rethrow_exception(errors[i]);
  return rows;
}

void write_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << csv_header() << '\n';
  for (const auto& row : rows) out << to_csv(row) << '\n';
}

}  // namespace pairspan
