#include "pairspan/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "pairspan/rng.hpp"

namespace pairspan {

Rational Rational::from_decimal(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational: empty string");
  std::size_t dot = text.find('.');
  std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if (whole.empty() && frac.empty())
    throw std::invalid_argument("rational: no digits");
  if (frac.size() > 12)
    throw std::invalid_argument("rational: too many fractional digits");
  auto digits_only = [](const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits_only(whole) || !digits_only(frac))
    throw std::invalid_argument("rational: invalid character in '" + text + "'");
  long long num = whole.empty() ? 0 : std::stoll(whole);
  long long den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  return Rational{num, den}.normalized();
}

Rational Rational::normalized() const {
  long long g = std::gcd(num, den);
  if (g == 0) return {0, 1};
  return {num / g, den / g};
}

Rational Rational::operator+(const Rational& o) const {
  return Rational{num * o.den + o.num * den, den * o.den}.normalized();
}

StretchSpec StretchSpec::additive(long long add) {
  return {Rational::from_int(1), Rational::from_int(add)};
}

StretchSpec StretchSpec::multiplicative(long long alpha) {
  return {Rational::from_int(alpha), Rational::from_int(0)};
}

StretchSpec StretchSpec::near_additive(const std::string& eps_decimal) {
  return {Rational::from_int(1) + Rational::from_decimal(eps_decimal),
          Rational::from_int(4)};
}

bool StretchSpec::ok(int d_g, int d_h) const {
  // d_h <= (a.num/a.den) d_g + b.num/b.den, cleared of denominators.
  using wide = __int128;
  wide lhs = static_cast<wide>(d_h) * alpha.den * add.den;
  wide rhs = static_cast<wide>(alpha.num) * d_g * add.den +
             static_cast<wide>(add.num) * alpha.den;
  return lhs <= rhs;
}

double StretchSpec::bound(int d_g) const {
  return alpha.to_double() * d_g + add.to_double();
}

std::string StretchReport::first_failure() const {
  for (const auto& r : rows) {
    if (!r.ok) {
      std::ostringstream os;
      os << "pair (" << r.u << "," << r.v << "): d_G=" << r.d_g
         << " d_H=" << (r.d_h == DistanceRow::kUnreachable ? std::string("unreachable")
                                                           : std::to_string(r.d_h))
         << " bound=" << r.bound;
      return os.str();
    }
  }
  return "";
}

StretchReport verify_stretch(const Graph& g, const EdgeSet& h,
                             std::span<const std::pair<Node, Node>> pairs,
                             const StretchSpec& spec) {
  if (h.capacity() != g.num_edges())
    throw std::invalid_argument("verify_stretch: edge set belongs to a different graph");
  const EdgeSet all = g.full_edge_set();
  std::unordered_map<Node, DistanceRow> rows_g, rows_h;
  auto row_of = [&](std::unordered_map<Node, DistanceRow>& cache, const EdgeSet& es,
                    Node u) -> const DistanceRow& {
    auto it = cache.find(u);
    if (it == cache.end()) it = cache.emplace(u, bfs_distances(g, es, u)).first;
    return it->second;
  };

  StretchReport report;
  report.rows.reserve(pairs.size());
  for (const auto& [u, v] : pairs) {
    g.check_node(u, "verify_stretch pair");
    g.check_node(v, "verify_stretch pair");
    StretchRow row;
    row.u = u;
    row.v = v;
    row.d_g = row_of(rows_g, all, u).at(v);
    if (row.d_g == DistanceRow::kUnreachable) {
      report.rows.push_back(row);  // vacuously ok
      continue;
    }
    row.bound = spec.bound(row.d_g);
    row.d_h = row_of(rows_h, h, u).at(v);
    if (row.d_h == DistanceRow::kUnreachable) {
      row.ok = false;
      report.pass = false;
      report.worst_excess = INFINITY;
    } else {
      row.ok = spec.ok(row.d_g, row.d_h);
      if (!row.ok) report.pass = false;
      report.worst_excess = std::max(report.worst_excess, row.d_h - row.bound);
    }
    report.rows.push_back(row);
  }
  return report;
}

std::string SizeReport::first_failure() const {
  for (const auto& r : rows)
    if (!r.ok)
      return r.name + ": observed " + std::to_string(r.observed) + " > allowed " +
             std::to_string(r.allowed);
  return "";
}

namespace {

void push_row(SizeReport& rep, std::string name, double observed, double allowed) {
  bool ok = observed <= allowed + 1e-6;
  rep.rows.push_back({std::move(name), observed, allowed, ok});
  if (!ok) rep.pass = false;
}

}  // namespace

SizeReport audit_sizes(const BuyLedger& ledger) {
  SizeReport rep;
  const double n1mb = real_npow(ledger.n, 1.0 - ledger.beta);
  const double cost = static_cast<double>(ledger.sum_cost_bought);
  const double value = static_cast<double>(ledger.sum_value_bought);
  switch (ledger.kind) {
    case Construction::subsetwise: {
      push_row(rep, "bought_cost_total", cost, 6.0 * ledger.set_size * n1mb);
      push_row(rep, "cost_le_twice_value", cost, 2.0 * value);
      push_row(rep, "endpoint_cluster_contribution_cap",
               ledger.max_contribution(), 3.0);
      break;
    }
    case Construction::sourcewise: {
      if (ledger.k < 1) throw std::invalid_argument("audit_sizes: sourcewise ledger without k");
      push_row(rep, "bought_cost_total", cost,
               3.0 * ledger.gamma * (2.0 * ledger.k + 3.0) * ledger.set_size * n1mb);
      push_row(rep, "cluster_contribution_cap", ledger.max_contribution_low32(),
               (2.0 * ledger.k + 3.0) * ledger.set_size);
      push_row(rep, "source_cluster_contribution_cap", ledger.max_contribution(),
               2.0 * ledger.k + 3.0);
      break;
    }
    case Construction::pairwise_near: {
      if (!(ledger.epsilon > 0.0))
        throw std::invalid_argument("audit_sizes: near ledger without epsilon");
      double log_n = ledger.n >= 2 ? std::log2(static_cast<double>(ledger.n)) : 0.0;
      push_row(rep, "bought_cost_total", cost,
               (12.0 * log_n / ledger.epsilon) *
                   std::sqrt(5.0 * std::max(ledger.num_pairs, 1)) * n1mb);
      push_row(rep, "bought_value_total", value, 5.0 * n1mb * n1mb);
      push_row(rep, "cluster_pair_contribution_cap", ledger.max_contribution(), 5.0);
      break;
    }
    case Construction::pairwise_pure: {
      if (ledger.k < 1) throw std::invalid_argument("audit_sizes: pure ledger without k");
      push_row(rep, "bought_cost_total", cost,
               6.0 * ledger.gamma * std::sqrt(4.0 * ledger.k + 5.0) * n1mb *
                   std::sqrt(static_cast<double>(std::max(ledger.num_pairs, 1))));
      push_row(rep, "cluster_pair_contribution_cap", ledger.max_contribution(),
               4.0 * ledger.k + 5.0);
      break;
    }
    case Construction::mult:
    case Construction::preserver:
      break;  // no path-buying budgets
  }
  return rep;
}

ClusterCoverageReport audit_cluster_coverage(const Graph& g, const Clustering& cl,
                          const ClusterGraph& cg, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("audit_cluster_coverage: trials must be >= 1");
  ClusterCoverageReport rep;
  rep.trials = trials;
  const int n = g.num_nodes();
  if (n == 0) return rep;
  const EdgeSet all = g.full_edge_set();
  SplitMix64 rng(seed);
  std::vector<char> seen(cl.num_clusters(), 0);
  for (int trial = 0; trial < trials; ++trial) {
    Node u = static_cast<Node>(rng.next_below(n));
    Node v = static_cast<Node>(rng.next_below(n));
    auto p = shortest_path(g, all, u, v);
    if (!p) continue;
    ++rep.checked;
    int t = path_cost(g, *p, cg.edges);
    std::fill(seen.begin(), seen.end(), 0);
    int touching = 0;
    for (Node w : p->vertices) {
      int cid = cl.cluster_of[w];
      if (cid >= 0 && !seen[cid]) {
        seen[cid] = 1;
        ++touching;
      }
    }
    if (2 * touching < t) {
      ++rep.violations;
      rep.pass = false;
      std::ostringstream os;
      os << "path (" << u << "," << v << "): t=" << t << " touching=" << touching;
      rep.witnesses.push_back(os.str());
    }
  }
  return rep;
}

namespace {

// Nodes of cg within 2 hops of u.
void mark_within_two(const Graph& g, const EdgeSet& cg_edges, Node u,
                     std::vector<char>& mark, std::vector<Node>& touched) {
  touched.clear();
  mark[u] = 1;
  touched.push_back(u);
  auto nb = g.neighbors(u);
  auto ids = g.incident_edge_ids(u);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    if (!cg_edges.contains(ids[i])) continue;
    Node w = nb[i];
    if (!mark[w]) {
      mark[w] = 1;
      touched.push_back(w);
    }
    auto nb2 = g.neighbors(w);
    auto ids2 = g.incident_edge_ids(w);
    for (std::size_t j = 0; j < nb2.size(); ++j) {
      if (!cg_edges.contains(ids2[j])) continue;
      if (!mark[nb2[j]]) {
        mark[nb2[j]] = 1;
        touched.push_back(nb2[j]);
      }
    }
  }
}

}  // namespace

ClusteringAudit audit_clustering(const Graph& g, const Clustering& cl,
                                 const ClusterGraph& cg) {
  ClusteringAudit audit;
  auto fail = [&](const std::string& what) {
    audit.ok = false;
    audit.violations.push_back(what);
  };
  const int n = g.num_nodes();
  audit.cluster_count = cl.num_clusters();
  audit.cg_edges = cg.edges.size();

  std::vector<int> seen_in(n, -1);
  for (int cid = 0; cid < cl.num_clusters(); ++cid) {
    const Cluster& c = cl.clusters[cid];
    if (static_cast<int>(c.members.size()) != cl.size_threshold)
      fail("cluster " + std::to_string(cid) + " has wrong size");
    for (Node m : c.members) {
      if (seen_in[m] >= 0) fail("node " + std::to_string(m) + " in two clusters");
      seen_in[m] = cid;
      if (cl.cluster_of[m] != cid)
        fail("cluster_of mismatch at node " + std::to_string(m));
      if (!g.has_edge(m, c.center))
        fail("member " + std::to_string(m) + " not adjacent to its center");
    }
  }
  for (Node u = 0; u < n; ++u)
    if (cl.cluster_of[u] != seen_in[u])
      fail("cluster_of marks node " + std::to_string(u) + " inconsistently");

  if (cl.num_clusters() > floor_npow(n, 1.0 - cl.beta))
    fail("cluster count exceeds n^(1-beta)");

  // Missing-edge property.
  for (int eid = 0; eid < g.num_edges(); ++eid) {
    if (cg.edges.contains(eid)) continue;
    auto [u, v] = g.edge(eid);
    int cu = cl.cluster_of[u], cv = cl.cluster_of[v];
    if (cu < 0 || cv < 0 || cu == cv) {
      fail("absent edge (" + std::to_string(u) + "," + std::to_string(v) +
           ") does not join two distinct clusters");
    }
  }

  // Cluster-diameter property: co-members within 2 hops in cg.
  std::vector<char> mark(n, 0);
  std::vector<Node> touched;
  for (const Cluster& c : cl.clusters) {
    for (Node m : c.members) {
      mark_within_two(g, cg.edges, m, mark, touched);
      for (Node other : c.members) {
        if (!mark[other])
          fail("members " + std::to_string(m) + "," + std::to_string(other) +
               " farther than 2 hops in cg");
      }
      for (Node t : touched) mark[t] = 0;
    }
  }

  const long long thr = cl.size_threshold;
  audit.cg_edge_bound =
      static_cast<long long>(cl.num_clusters()) * (thr + 1) * (thr + 1) +
      static_cast<long long>(n) * thr;
  if (audit.cg_edges > audit.cg_edge_bound) fail("cg edge count exceeds explicit bound");

  return audit;
}

}  // namespace pairspan
