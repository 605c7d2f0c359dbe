#include "c4lab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "c4lab/extremal.hpp"
#include "c4lab/geometry.hpp"
#include "c4lab/graph.hpp"
#include "c4lab/polarity.hpp"
#include "c4lab/rng.hpp"
#include "c4lab/supersat.hpp"

namespace c4lab::acceptance {

namespace {

using Clock = std::chrono::steady_clock;
using graph::Edge;
using graph::Graph;
using graph::Vertex;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failure notes; the criterion passes when none were recorded.
class Check {
 public:
  void expect(bool ok, const std::string& note) {
    ++checks_;
    if (!ok) {
      ++failed_;
      if (notes_.size() < 6) notes_.push_back(note);
    }
  }
  void info(const std::string& s) { info_.push_back(s); }
  bool ok() const { return failed_ == 0; }
  std::string detail() const {
    std::ostringstream os;
    os << checks_ - failed_ << "/" << checks_ << " checks";
    for (const auto& s : info_) os << "; " << s;
    for (const auto& s : notes_) os << "; FAIL " << s;
    return os.str();
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failed_ = 0;
  std::vector<std::string> notes_;
  std::vector<std::string> info_;
};

std::string fmt(const auto&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

void time_limit(Check& c, const Options& o, Clock::time_point t0, double limit, const std::string& what) {
  if (o.mode != Mode::Standard) return;
  const double s = seconds_since(t0);
  c.expect(s < limit, fmt(what, " took ", s, " s, limit ", limit, " s"));
}

Graph random_density_graph(std::uint32_t n, double p, CounterRng& rng) {
  const auto cut = static_cast<std::uint64_t>(p * 18446744073709551616.0);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng() < cut) e.push_back({u, v});
    }
  }
  return Graph::from_edges(n, e);
}

// Random maximal C4-free graph: pairs in shuffled order, kept when no path
// u-a-b-v exists.
Graph greedy_c4_free(std::uint32_t n, CounterRng& rng) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  rng.shuffle(pairs);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::vector<Vertex>> nb(n);
  std::vector<Edge> kept;
  for (const auto& [u, v] : pairs) {
    bool closes = false;
    for (Vertex a : nb[u]) {
      for (Vertex b : nb[v]) {
        if (a != v && b != u && a != b && adj[a][b]) closes = true;
      }
      if (closes) break;
    }
    if (closes) continue;
    adj[u][v] = adj[v][u] = 1;
    nb[u].push_back(v);
    nb[v].push_back(u);
    kept.push_back({u, v});
  }
  return Graph::from_edges(n, kept);
}

std::vector<std::uint32_t> pick(Mode m, std::vector<std::uint32_t> quick, std::vector<std::uint32_t> standard,
                                std::vector<std::uint32_t> full) {
  switch (m) {
    case Mode::Quick: return quick;
    case Mode::Full: return full;
    default: return standard;
  }
}

std::uint64_t pick_n(Mode m, std::uint64_t quick, std::uint64_t standard, std::uint64_t full) {
  return m == Mode::Quick ? quick : m == Mode::Full ? full : standard;
}

CriterionResult plane_axioms(const Options& o) {
  Check c;
  const auto t0 = Clock::now();
  for (std::uint32_t q : pick(o.mode, {2, 3, 4, 5, 7, 8, 9, 11, 13, 16},
                              {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 64},
                              {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 128})) {
    const auto plane = geometry::build_pg2(field::FieldSpec::of_order(q));
    const auto v = geometry::verify_projective_plane(plane.structure);
    c.expect(v.ok(), fmt("q=", q, ": ", v.ok() ? "" : v.first()->message));
  }
  time_limit(c, o, t0, 60, "plane sweep");
  return {1, "plane axioms for PG(2,q)", c.ok(), c.detail()};
}

CriterionResult er_exactness(const Options& o) {
  Check c;
  Clock::time_point t128{};
  for (std::uint32_t q : pick(o.mode, {2, 4, 8, 16, 32}, {2, 4, 8, 16, 32, 64, 128}, {2, 4, 8, 16, 32, 64, 128, 256})) {
    const auto t0 = Clock::now();
    const auto er = polarity::er_graph(q, false);
    const std::uint64_t qq = q;
    const Graph& g = er.graph;
    c.expect(g.n() == qq * qq + qq + 1, fmt("q=", q, " vertices ", g.n()));
    c.expect(g.m() == qq * (qq + 1) * (qq + 1) / 2, fmt("q=", q, " edges ", g.m()));
    const auto c4 = graph::count_c4(g, o.threads);
    c.expect(c4 == 0, fmt("q=", q, " C4 count ", c4));
    std::uint64_t low = 0;
    for (Vertex v = 0; v < g.n(); ++v) low += g.degree(v) == q;
    c.expect(low == qq + 1, fmt("q=", q, " degree-q vertices ", low));
    c.expect(polarity::degree_q_independence(er).ok, fmt("q=", q, " degree-q set not independent"));
    try {
      const Vertex w = polarity::special_vertex_w(er);
      c.expect(g.degree(w) == q + 1, fmt("q=", q, " w has degree ", g.degree(w)));
    } catch (const std::exception& e) {
      c.expect(false, fmt("q=", q, " special vertex: ", e.what()));
    }
    if (q == 128) {
      t128 = t0;
      time_limit(c, o, t128, 300, "q=128");
    }
  }
  return {2, "ER_q exactness", c.ok(), c.detail()};
}

CriterionResult edge_census(const Options& o) {
  Check c;
  struct Run {
    std::uint32_t q;
    std::uint64_t samples;
  };
  std::vector<Run> runs;
  if (o.mode == Mode::Quick) {
    runs = {{4, 0}, {8, 0}, {16, 1000}};
  } else if (o.mode == Mode::Full) {
    runs = {{4, 0}, {8, 0}, {16, 0}, {32, 10000}};
  } else {
    runs = {{4, 0}, {8, 0}, {16, 10000}};
  }
  for (const auto& r : runs) {
    const auto er = polarity::er_graph(r.q, false);
    const auto rep = supersat::add_edge_census(er, r.samples, o.seed + r.q, o.threads);
    const auto pairs = rep.measured().at("pairs_tested").get<std::uint64_t>();
    c.info(fmt("q=", r.q, " ", pairs, " pairs, histogram ", rep.measured().at("count_histogram").dump()));
    for (const auto& f : rep.failures()) c.expect(false, fmt("q=", r.q, " ", f));
    c.expect(rep.passed(), fmt("q=", r.q, " census failed"));
  }
  return {3, "single-edge census", c.ok(), c.detail()};
}

CriterionResult matching_construction(const Options& o) {
  Check c;
  for (std::uint32_t q : pick(o.mode, {8, 16}, {8, 16, 64}, {8, 16, 32, 64, 128})) {
    const auto er = polarity::er_graph(q, false);
    const std::uint32_t tmax = std::min<std::uint32_t>(8, (q + 1) / 2);
    for (std::uint32_t t = 1; t <= tmax; ++t) {
      const auto rep = supersat::matching_experiment(er, t, 0);
      c.expect(rep.passed(), fmt("q=", q, " t=", t, ": ", rep.failures().empty() ? "" : rep.failures().front()));
    }
  }
  return {4, "matching construction t(q-1)", c.ok(), c.detail()};
}

CriterionResult halfway_bound(const Options& o) {
  Check c;
  const std::uint64_t per_q = pick_n(o.mode, 40, 200, 400);
  for (std::uint32_t q : {4u, 16u}) {
    const auto er = polarity::er_graph(q, false);
    const std::uint32_t n = er.graph.n();
    CounterRng rng(o.seed, 500 + q);
    std::uint64_t tested = 0;
    for (std::uint64_t i = 0; i < per_q; ++i) {
      const std::uint64_t t = 3 + rng.below(48);
      Graph g;
      if (i % 2 == 0) {
        g = er.graph.with_edges_added(supersat::random_non_edges(er.graph, t, rng));
      } else {
        g = supersat::random_graph(n, er.graph.m() + t, rng);
      }
      const auto rep = supersat::halfway_bound_check(g, q, 1);
      ++tested;
      c.expect(rep.passed(), fmt("q=", q, " instance ", i, ": ", rep.failures().empty() ? "" : rep.failures().front()));
    }
    c.info(fmt("q=", q, " ", tested, " graphs"));
  }
  return {5, "halfway lower bound", c.ok(), c.detail()};
}

CriterionResult random_construction(const Options& o) {
  Check c;
  const auto t0 = Clock::now();
  const auto trials = static_cast<std::uint32_t>(pick_n(o.mode, 10, 50, 200));
  for (std::uint64_t t : {5ull, 50ull}) {
    const auto rep = supersat::random_supersat(16, t, trials, o.seed + t, o.threads);
    const double frac = rep.measured().at("fraction_x_ge_t").get<double>();
    const auto within = rep.measured().at("trials_y_within_bound").get<std::uint64_t>();
    c.info(fmt("t=", t, " P(X>=t)=", frac, " mean X=", rep.measured().at("mean_x").get<double>(),
               " mean Y=", rep.measured().at("mean_y").get<double>(), " bound=", rep.bounds().at("y_bound").get<double>()));
    c.expect(frac >= 0.15, fmt("t=", t, " fraction ", frac, " < 0.15"));
    c.expect(within == trials, fmt("t=", t, " only ", within, " of ", trials, " trials within the Y bound"));
  }
  time_limit(c, o, t0, 120, "random construction");
  return {6, "randomized construction", c.ok(), c.detail()};
}

CriterionResult counting_oracle(const Options& o) {
  Check c;
  const std::uint64_t count = pick_n(o.mode, 200, 1000, 5000);
  CounterRng rng(o.seed, 700);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::uint32_t>(1 + rng.below(32));
    const double p = 0.1 * static_cast<double>(1 + i % 9);
    const Graph g = random_density_graph(n, p, rng);
    const auto fast = graph::count_c4(g, 1);
    const auto slow = graph::count_c4_bruteforce(g);
    c.expect(fast == slow, fmt("graph ", i, " n=", n, " p=", p, ": ", fast, " != ", slow));
  }
  return {7, "count_c4 against brute force", c.ok(), c.detail()};
}

CriterionResult identities(const Options& o) {
  Check c;
  CounterRng rng(o.seed, 800);
  const std::uint64_t free_n = pick_n(o.mode, 50, 200, 1000);
  for (std::uint64_t i = 0; i < free_n; ++i) {
    Graph g;
    if (i % 10 == 9) {
      const std::uint32_t q = std::vector<std::uint32_t>{2, 3, 4, 5, 7, 8}[rng.below(6)];
      g = polarity::er_graph(q, false).graph;
    } else {
      g = greedy_c4_free(static_cast<std::uint32_t>(2 + rng.below(39)), rng);
    }
    c.expect(graph::is_c4_free(g), fmt("generator produced a C4 at instance ", i));
    const auto s = graph::up_p2_stats(g, 1, 1);
    const std::uint64_t n = g.n();
    c.expect(s.two_paths + s.uncovered_pairs == n * (n - 1) / 2,
             fmt("instance ", i, ": |P2| + |UP| = ", s.two_paths + s.uncovered_pairs, " != ", n * (n - 1) / 2));
  }
  const std::uint64_t claim_n = pick_n(o.mode, 100, 500, 2000);
  for (std::uint64_t i = 0; i < claim_n; ++i) {
    const auto n = static_cast<std::uint32_t>(2 + rng.below(30));
    const Graph g = random_density_graph(n, 0.05 + 0.9 * static_cast<double>(rng.below(1000)) / 1000.0, rng);
    std::vector<Vertex> a;
    const std::uint64_t keep = rng.below(1001);
    for (Vertex v = 0; v < n; ++v) {
      if (rng.below(1000) < keep) a.push_back(v);
    }
    const auto r = graph::claim_c4_inequality(g, a);
    c.expect(r.holds, fmt("claim sample ", i, ": ", r.lhs, " < ", r.rhs));
  }
  const std::uint64_t conv_n = pick_n(o.mode, 10000, 100000, 500000);
  std::vector<std::int64_t> seq;
  for (std::uint64_t i = 0; i < conv_n; ++i) {
    const auto m = static_cast<std::int64_t>(1 + rng.below(12));
    const auto k = static_cast<std::int64_t>(1 + rng.below(15));
    const std::int64_t r = -m + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(4 * m + 1)));
    seq.assign(static_cast<std::size_t>(m), 0);
    for (auto& x : seq) x = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(2 * k + 1)));
    std::int64_t sum = 0;
    for (auto x : seq) sum += x;
    while (sum < k * m + r) {
      ++seq[rng.below(seq.size())];
      ++sum;
    }
    const auto res = graph::convexity_bound(seq, k, r);
    c.expect(res.preconditions_ok && res.holds, fmt("convexity sample ", i, ": ", res.lhs, " < ", res.rhs));
  }
  c.info(fmt(free_n, " C4-free graphs, ", claim_n, " claim samples, ", conv_n, " sequences"));
  return {8, "counting identities", c.ok(), c.detail()};
}

CriterionResult turan_values(const Options& o) {
  Check c;
  const auto t0 = Clock::now();
  const std::vector<std::uint64_t> expected{0, 0, 0, 0, 4, 6, 7, 9, 11, 13};
  const std::uint32_t top = o.mode == Mode::Quick ? 8 : 9;
  std::ostringstream vals;
  for (std::uint32_t n = 4; n <= top; ++n) {
    const auto rec = extremal::turan_bruteforce(n);
    vals << (n > 4 ? "," : "") << rec.ex_value;
    c.expect(rec.ex_value == expected[n], fmt("ex(", n, ") = ", rec.ex_value, ", expected ", expected[n]));
    c.expect(rec.ex_value <= extremal::reiman_bound(n), fmt("ex(", n, ") above the Reiman bound"));
    if (n == 7) {
      c.expect(rec.ex_value == extremal::furedi_value(2).value, "ex(7) != q(q+1)^2/2 at q=2");
    }
  }
  c.info("ex(4.." + std::to_string(top) + ") = " + vals.str());
  time_limit(c, o, t0, 300, "Turan brute force");
  return {9, "Turan desk values", c.ok(), c.detail()};
}

CriterionResult bruck_ryser(const Options&) {
  Check c;
  for (std::uint64_t q : {6, 14, 21, 22}) c.expect(geometry::bruck_ryser_excluded(q), fmt("q=", q, " not excluded"));
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 10, 12, 16}) c.expect(!geometry::bruck_ryser_excluded(q), fmt("q=", q, " excluded"));
  return {10, "Bruck-Ryser exclusions", c.ok(), c.detail()};
}

CriterionResult neighborhood_diagnostic(const Options& o) {
  Check c;
  const double delta = 0.25;
  for (std::uint32_t q : pick(o.mode, {8}, {8, 16}, {8, 16, 32})) {
    const auto er = polarity::er_graph(q, false);
    const std::uint64_t need = static_cast<std::uint64_t>(q) * q - 1;
    const auto fam = graph::neighborhood_family(er.graph, q, delta);
    c.expect(fam.one_intersecting && fam.size() >= need,
             fmt("ER_", q, ": one_intersecting=", fam.one_intersecting, " size=", fam.size(), " need ", need));
    c.info(fmt("ER_", q, " |family|=", fam.size()));
    CounterRng rng(o.seed, 1100 + q);
    for (std::size_t removed = 1; removed <= 3; ++removed) {
      auto edges = er.graph.edges();
      rng.shuffle(edges);
      edges.resize(removed);
      const Graph g = er.graph.with_edges_removed(edges);
      const auto f = graph::neighborhood_family(g, q, delta);
      c.info(fmt("ER_", q, "-", removed, " |family|=", f.size(), " 1-int=", f.one_intersecting));
      c.expect(f.one_intersecting && f.size() >= need,
               fmt("ER_", q, " minus ", removed, ": one_intersecting=", f.one_intersecting, " size=", f.size(),
                   " need ", need));
    }
  }
  const auto fano = geometry::build_pg2(field::FieldSpec::of_order(2));
  auto lines = fano.structure.lines();
  const geometry::Line last = lines.back();
  lines.pop_back();
  try {
    const auto ext = geometry::extend_one_intersecting(geometry::IncidenceStructure(7, lines), {last});
    auto got = ext.result.lines();
    auto want = fano.structure.lines();
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    c.expect(got == want, "extension did not reproduce the Fano plane");
  } catch (const std::exception& e) {
    c.expect(false, fmt("Fano extension threw: ", e.what()));
  }
  return {11, "neighborhood family diagnostic", c.ok(), c.detail()};
}

CriterionResult lower_bound_chain(const Options&) {
  Check c;
  for (std::uint64_t n : {10'000ull, 1'000'000ull, 100'000'000ull}) {
    const auto ch = extremal::turan_lower_bound(n);
    c.info(fmt("n=", n, " p=", ch.p, " bound=", ch.bound.str()));
    c.expect(ch.window.in_window, fmt("n=", n, " prime outside the window"));
    c.expect(ch.p_check == exact::Certainty::True, fmt("n=", n, " p >= sqrt(n) - n^0.2625 - 1 not certified"));
    c.expect(ch.bound_check == exact::Certainty::True, fmt("n=", n, " bound >= formula not certified"));
  }
  return {12, "prime window lower-bound chain", c.ok(), c.detail()};
}

}  // namespace

CriterionResult run_criterion(int id, const Options& opts) {
  using Fn = CriterionResult (*)(const Options&);
  static const Fn table[kCriterionCount] = {plane_axioms,          er_exactness,   edge_census,
                                            matching_construction, halfway_bound,  random_construction,
                                            counting_oracle,       identities,     turan_values,
                                            bruck_ryser,           neighborhood_diagnostic, lower_bound_chain};
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id must be in [1, 12]");
  const auto t0 = Clock::now();
  CriterionResult r;
  try {
    r = table[id - 1](opts);
  } catch (const std::exception& e) {
    r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()};
  }
  r.id = id;
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<CriterionResult> run_all(const Options& opts) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, opts));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "[%s] %02d ", r.passed ? "PASS" : "FAIL", r.id);
  char secs[32];
  std::snprintf(secs, sizeof secs, " (%.2f s): ", r.seconds);
  return head + r.title + secs + r.detail;
}

}  // namespace c4lab::acceptance
