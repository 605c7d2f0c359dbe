#include "c4lab/supersat.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "c4lab/exact.hpp"
#include "c4lab/parallel.hpp"

namespace c4lab::supersat {

namespace {

__extension__ typedef unsigned __int128 u128;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string str(const auto&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

Json edges_json(std::span<const Edge> edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back({e.u, e.v});
  return out;
}

struct EdgeInspection {
  std::uint64_t count = 0;
  std::uint64_t through = 0;
  bool in_range = false;
  bool low_iff_both_q = false;
  bool all_contain_uv = false;
  bool pairwise_only_uv = false;
  bool ok() const { return in_range && low_iff_both_q && all_contain_uv && pairwise_only_uv; }
};

EdgeInspection inspect_edge(const PolarityGraph& g, Vertex u, Vertex v) {
  if (u == v || u >= g.graph.n() || v >= g.graph.n()) throw std::invalid_argument("add_edge_experiment: bad vertex pair");
  if (g.graph.has_edge(u, v)) {
    throw std::invalid_argument(str("add_edge_experiment: (", u, ", ", v, ") is already an edge"));
  }
  const Edge e = graph::normalized({u, v});
  const Graph gp = g.graph.with_edges_added(std::span<const Edge>(&e, 1));
  const auto cycles = graph::c4_through_edge(gp, u, v);
  const std::uint64_t q = g.q;

  EdgeInspection r;
  r.count = graph::count_c4(gp, 1);
  r.through = cycles.size();
  r.in_range = r.count + 1 >= q && r.count <= q + 1;
  const bool both_q = g.graph.degree(u) == q && g.graph.degree(v) == q;
  r.low_iff_both_q = (r.count + 1 == q) == both_q;
  r.all_contain_uv = r.through == r.count;

  std::vector<std::array<Edge, 4>> sets;
  sets.reserve(cycles.size());
  for (const auto& c : cycles) {
    std::array<Edge, 4> s{graph::normalized({c[0], c[1]}), graph::normalized({c[1], c[2]}),
                          graph::normalized({c[2], c[3]}), graph::normalized({c[3], c[0]})};
    std::sort(s.begin(), s.end());
    sets.push_back(s);
  }
  r.pairwise_only_uv = true;
  for (std::size_t i = 0; i < sets.size() && r.pairwise_only_uv; ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<Edge> common;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(), std::back_inserter(common));
      if (common.size() != 1 || common[0] != e) {
        r.pairwise_only_uv = false;
        break;
      }
    }
  }
  return r;
}

// Canonical rotation and direction of a 4-cycle given as a vertex sequence.
graph::Cycle4 canonical(const graph::Cycle4& c) {
  const auto min_it = std::min_element(c.begin(), c.end());
  const std::size_t k = static_cast<std::size_t>(min_it - c.begin());
  graph::Cycle4 fwd{c[k], c[(k + 1) % 4], c[(k + 2) % 4], c[(k + 3) % 4]};
  if (fwd[3] < fwd[1]) std::swap(fwd[1], fwd[3]);
  return fwd;
}

std::vector<Edge> checked_new_edges(const Graph& g, std::span<const Edge> add, const char* who) {
  std::vector<Edge> out;
  out.reserve(add.size());
  for (const auto& raw : add) {
    if (raw.u == raw.v || raw.u >= g.n() || raw.v >= g.n()) throw std::invalid_argument(str(who, ": bad edge"));
    const Edge e = graph::normalized(raw);
    if (g.has_edge(e.u, e.v)) throw std::invalid_argument(str(who, ": (", e.u, ", ", e.v, ") is already an edge of H"));
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw std::invalid_argument(str(who, ": repeated edge"));
  return out;
}

}  // namespace

ExperimentReport add_edge_experiment(const PolarityGraph& g, Vertex u, Vertex v) {
  const auto start = Clock::now();
  const EdgeInspection r = inspect_edge(g, u, v);
  const std::uint64_t q = g.q;
  ExperimentReport rep("add_edge");
  rep.params() = {{"q", q}, {"t", 1}, {"seed", nullptr}, {"trials", 1}, {"u", u}, {"v", v}};
  rep.measured() = {{"c4_count", r.count},
                    {"cycles_through_uv", r.through},
                    {"degree_u", g.graph.degree(u)},
                    {"degree_v", g.graph.degree(v)}};
  rep.bounds() = {{"low", q - 1}, {"high", q + 1}};
  rep.verdict("count_in_range", str(q - 1, " <= ", r.count, " <= ", q + 1), r.in_range);
  rep.verdict("q_minus_1_iff_both_degree_q",
              str("(#C4 == q-1) <=> (d(u) == d(v) == q) with #C4 = ", r.count), r.low_iff_both_q);
  rep.verdict("all_cycles_contain_uv", str("cycles through uv ", r.through, " == #C4 ", r.count), r.all_contain_uv);
  rep.verdict("pairwise_share_only_uv", "E(C) ∩ E(C') == {uv} for all pairs", r.pairwise_only_uv);
  rep.set_wall_ms(ms_since(start));
  return rep;
}

ExperimentReport add_edge_census(const PolarityGraph& g, std::uint64_t samples, std::uint64_t seed,
                                 unsigned threads) {
  const auto start = Clock::now();
  std::vector<Edge> pairs;
  if (samples == 0) {
    for (Vertex u = 0; u < g.graph.n(); ++u) {
      for (Vertex v = u + 1; v < g.graph.n(); ++v) {
        if (!g.graph.has_edge(u, v)) pairs.push_back({u, v});
      }
    }
  } else {
    CounterRng rng(seed, 0);
    // Independent uniform draws; repeats are allowed.
    const std::uint32_t n = g.graph.n();
    while (pairs.size() < samples) {
      const auto u = static_cast<Vertex>(rng.below(n));
      const auto v = static_cast<Vertex>(rng.below(n));
      if (u == v || g.graph.has_edge(u, v)) continue;
      pairs.push_back(graph::normalized({u, v}));
    }
  }

  struct Tally {
    std::map<std::uint64_t, std::uint64_t> histogram;
    std::uint64_t range = 0, iff = 0, contain = 0, pairwise = 0;
    std::optional<std::size_t> first_bad;
  };
  const unsigned workers = std::min<unsigned>(resolve_threads(threads), std::max<std::size_t>(1, pairs.size()));
  std::vector<Tally> tallies(workers);
  run_workers(workers, [&](unsigned w) {
    Tally& t = tallies[w];
    for (std::size_t i = w; i < pairs.size(); i += workers) {
      const EdgeInspection r = inspect_edge(g, pairs[i].u, pairs[i].v);
      ++t.histogram[r.count];
      t.range += !r.in_range;
      t.iff += !r.low_iff_both_q;
      t.contain += !r.all_contain_uv;
      t.pairwise += !r.pairwise_only_uv;
      if (!r.ok() && (!t.first_bad || i < *t.first_bad)) t.first_bad = i;
    }
  });
  Tally total;
  for (const auto& t : tallies) {
    for (const auto& [k, c] : t.histogram) total.histogram[k] += c;
    total.range += t.range;
    total.iff += t.iff;
    total.contain += t.contain;
    total.pairwise += t.pairwise;
    if (t.first_bad && (!total.first_bad || *t.first_bad < *total.first_bad)) total.first_bad = t.first_bad;
  }

  ExperimentReport rep("add_edge_census");
  rep.params() = {{"q", g.q}, {"t", 1}, {"seed", samples == 0 ? Json(nullptr) : Json(seed)},
                  {"trials", pairs.size()}, {"mode", samples == 0 ? "exhaustive" : "sampled"}};
  Json hist = Json::object();
  for (const auto& [k, c] : total.histogram) hist[std::to_string(k)] = c;
  rep.measured() = {{"pairs_tested", pairs.size()}, {"count_histogram", hist},
                    {"violations_range", total.range}, {"violations_iff", total.iff},
                    {"violations_contain_uv", total.contain}, {"violations_pairwise", total.pairwise}};
  if (total.first_bad) rep.measured()["first_violation"] = {pairs[*total.first_bad].u, pairs[*total.first_bad].v};
  rep.bounds() = {{"low", g.q - 1}, {"high", g.q + 1}};
  rep.verdict("count_in_range", str("violations of q-1 <= #C4 <= q+1: ", total.range, " == 0"), total.range == 0);
  rep.verdict("q_minus_1_iff_both_degree_q", str("violations: ", total.iff, " == 0"), total.iff == 0);
  rep.verdict("all_cycles_contain_uv", str("violations: ", total.contain, " == 0"), total.contain == 0);
  rep.verdict("pairwise_share_only_uv", str("violations: ", total.pairwise, " == 0"), total.pairwise == 0);
  rep.set_wall_ms(ms_since(start));
  return rep;
}

std::vector<Edge> degree_q_matching(const PolarityGraph& er, std::uint32_t t, std::uint64_t seed) {
  if (er.q % 2 != 0) throw std::invalid_argument("matching_experiment: q must be even");
  if (t > (er.q + 1) / 2) throw std::invalid_argument("matching_experiment: t must be at most (q+1)/2");
  std::vector<Vertex> low;
  for (Vertex v = 0; v < er.graph.n(); ++v) {
    if (er.graph.degree(v) == er.q) low.push_back(v);
  }
  if (seed != 0) {
    CounterRng rng(seed, 0);
    rng.shuffle(low);
  }
  if (low.size() < 2 * static_cast<std::size_t>(t)) throw std::invalid_argument("matching_experiment: too few degree-q vertices");
  std::vector<Edge> out;
  for (std::uint32_t i = 0; i < t; ++i) out.push_back(graph::normalized({low[2 * i], low[2 * i + 1]}));
  return out;
}

ExperimentReport matching_experiment(const PolarityGraph& er, std::uint32_t t, std::uint64_t seed) {
  const auto start = Clock::now();
  if (!er.orthogonal()) throw std::invalid_argument("matching_experiment: needs the orthogonal polarity graph");
  const auto matching = degree_q_matching(er, t, seed);
  const std::uint64_t q = er.q;

  const auto indep = polarity::degree_q_independence(er);
  const Vertex w = polarity::special_vertex_w(er);
  bool in_nw = true;
  for (const auto& e : matching) in_nw = in_nw && er.graph.has_edge(w, e.u) && er.graph.has_edge(w, e.v);

  const Graph gp = er.graph.with_edges_added(matching);
  const std::uint64_t count = graph::count_c4(gp, 1);
  const std::uint64_t expected = t * (q - 1);

  ExperimentReport rep("matching");
  rep.params() = {{"q", q}, {"t", t}, {"seed", seed}, {"trials", 1}};
  rep.measured() = {{"c4_count", count}, {"edges", gp.m()}, {"special_vertex", w}, {"matching", edges_json(matching)}};
  rep.bounds() = {{"t(q-1)", expected}};
  rep.verdict("degree_q_set_independent",
              indep.ok ? std::string("no edge inside S_q")
                       : str("edge (", indep.witness->u, ", ", indep.witness->v, ") inside S_q"),
              indep.ok);
  rep.verdict("matching_in_neighborhood_of_w", str("all 2t endpoints adjacent to w = ", w), in_nw);
  rep.verdict("count_equals_t(q-1)", str("#C4 = ", count, " == t(q-1) = ", expected), count == expected);
  rep.set_wall_ms(ms_since(start));
  return rep;
}

ExperimentReport matching_experiment(std::uint32_t q, std::uint32_t t, std::uint64_t seed) {
  if (q % 2 != 0) throw std::invalid_argument("matching_experiment: q must be even");
  if (t > (q + 1) / 2) throw std::invalid_argument("matching_experiment: t must be at most (q+1)/2");
  return matching_experiment(polarity::er_graph(q, false), t, seed);
}

Graph random_supersat_trial(const PolarityGraph& er, std::uint64_t t, std::uint64_t seed, std::uint32_t trial) {
  const std::uint64_t q = er.q;
  const u128 denom = static_cast<u128>(q * q * q) * (q + 1);
  if (static_cast<u128>(4) * t > denom) throw std::invalid_argument("random_supersat: 4t exceeds q^3 (q+1)");
  const bool always = static_cast<u128>(4) * t == denom;
  // Draw r succeeds iff r < floor(alpha 2^64).
  const u128 threshold = always ? 0 : (static_cast<u128>(4 * t) << 64) / denom;
  CounterRng rng(seed, trial);
  std::vector<Edge> added;
  std::uint64_t counter = 0;
  const Graph& g = er.graph;
  for (Vertex u = 0; u < g.n(); ++u) {
    const auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
        continue;
      }
      if (t != 0 && (always || static_cast<u128>(rng.at(counter)) < threshold)) added.push_back({u, v});
      ++counter;
    }
  }
  return g.with_edges_added(added);
}

ExperimentReport random_supersat(std::uint32_t q, std::uint64_t t, std::uint32_t trials, std::uint64_t seed,
                                 unsigned threads) {
  const auto start = Clock::now();
  if (trials == 0) throw std::invalid_argument("random_supersat: trials must be >= 1");
  const u128 denom = static_cast<u128>(static_cast<std::uint64_t>(q) * q * q) * (q + 1);
  if (static_cast<u128>(4) * t > denom) throw std::invalid_argument("random_supersat: 4t exceeds q^3 (q+1)");
  const PolarityGraph er = polarity::er_graph(q, false);
  const std::uint64_t base_edges = er.graph.m();

  std::vector<std::uint64_t> xs(trials), ys(trials);
  const unsigned workers = std::min<unsigned>(resolve_threads(threads), trials);
  run_workers(workers, [&](unsigned w) {
    for (std::uint32_t i = w; i < trials; i += workers) {
      const Graph g = random_supersat_trial(er, t, seed, i);
      xs[i] = g.m() - base_edges;
      ys[i] = graph::count_c4(g, 1);
    }
  });

  // Y <= 500 (tq + t^4/q^8)  <=>  Y q^8 <= 500 (t q^9 + t^4)
  const exact::Int q8 = exact::ipow(q, 8);
  const exact::Int rhs = 500 * (exact::Int(t) * q8 * q + exact::ipow(t, 4));
  auto within = [&](std::uint64_t y) { return exact::Int(y) * q8 <= rhs; };
  const double bound = 500.0 * (static_cast<double>(t) * q + std::pow(static_cast<double>(t), 4) / std::pow(q, 8.0));

  std::uint64_t hits = 0, all_within = 0;
  std::optional<std::uint64_t> min_y;
  double sum_x = 0, sum_y = 0;
  for (std::uint32_t i = 0; i < trials; ++i) {
    sum_x += static_cast<double>(xs[i]);
    sum_y += static_cast<double>(ys[i]);
    all_within += within(ys[i]);
    if (xs[i] >= t) {
      ++hits;
      if (!min_y || ys[i] < *min_y) min_y = ys[i];
    }
  }
  const double n_pairs = static_cast<double>(denom) / 2.0;
  const double alpha = 4.0 * static_cast<double>(t) / static_cast<double>(denom);
  const double sigma = std::sqrt(n_pairs * alpha * (1.0 - alpha));
  const double se = sigma / std::sqrt(static_cast<double>(trials));
  const double mean_x = sum_x / trials;
  const double fraction = static_cast<double>(hits) / trials;
  const double fraction_floor = 0.22 - 3.0 * std::sqrt(0.22 * 0.78 / trials);

  ExperimentReport rep("random_supersat");
  rep.params() = {{"q", q}, {"t", t}, {"seed", seed}, {"trials", trials}};
  rep.measured() = {{"x", xs}, {"y", ys}, {"mean_x", mean_x}, {"mean_y", sum_y / trials},
                    {"fraction_x_ge_t", fraction}, {"trials_y_within_bound", all_within}};
  if (min_y) rep.measured()["min_y_with_x_ge_t"] = *min_y;
  rep.bounds() = {{"alpha", alpha}, {"non_adjacent_pairs", n_pairs}, {"expected_x", 2 * t},
                  {"sigma_x", sigma}, {"y_bound", bound}, {"fraction_floor", fraction_floor}};
  rep.verdict("min_y_with_x_ge_t_within_bound",
              min_y ? str("min Y over X >= t = ", *min_y, " <= 500(tq + t^4/q^8) = ", bound)
                    : std::string("no trial reached X >= t"),
              min_y && within(*min_y));
  rep.verdict("mean_x_within_5_standard_errors",
              str("|", mean_x, " - ", 2 * t, "| <= 5 sigma / sqrt(trials) = ", 5 * se),
              std::abs(mean_x - 2.0 * static_cast<double>(t)) <= 5 * se);
  rep.verdict("fraction_x_ge_t", str(fraction, " >= 0.22 - 3 se = ", fraction_floor), fraction >= fraction_floor);
  rep.verdict("every_trial_y_within_bound", str(all_within, " of ", trials, " trials have Y <= ", bound),
              all_within == trials, VerdictKind::Informative);
  rep.set_wall_ms(ms_since(start));
  return rep;
}

ExperimentReport halfway_bound_check(const Graph& g, std::uint32_t q, unsigned threads) {
  const auto start = Clock::now();
  if (q == 0 || q % 2 != 0) throw std::invalid_argument("halfway_bound_check: q must be even");
  const std::uint64_t qq = q;
  if (g.n() != qq * qq + qq + 1) throw std::invalid_argument("halfway_bound_check: need q^2+q+1 vertices");
  const std::uint64_t base = qq * (qq + 1) * (qq + 1) / 2;
  if (g.m() <= base) throw std::invalid_argument("halfway_bound_check: need more than q(q+1)^2/2 edges");
  const std::int64_t t = static_cast<std::int64_t>(g.m() - base);
  const std::uint64_t count = graph::count_c4(g, threads);
  const auto qi = static_cast<std::int64_t>(q);
  // #C4 >= (tq - 2.5q - t)/2  <=>  4 #C4 >= 2tq - 5q - 2t
  const std::int64_t rhs4 = 2 * t * qi - 5 * qi - 2 * t;
  const bool holds = 4 * static_cast<std::int64_t>(count) >= rhs4;
  const double bound = (static_cast<double>(t) * q - 2.5 * q - static_cast<double>(t)) / 2.0;

  ExperimentReport rep("halfway_bound");
  rep.params() = {{"q", q}, {"t", t}, {"seed", nullptr}, {"trials", 1}};
  rep.measured() = {{"c4_count", count}, {"edges", g.m()}};
  rep.bounds() = {{"(tq-2.5q-t)/2", bound}};
  rep.verdict("c4_at_least_halfway_bound", str("#C4 = ", count, " >= (tq - 2.5q - t)/2 = ", bound), holds);
  rep.set_wall_ms(ms_since(start));
  return rep;
}

ExperimentReport classify_perturbation(const PolarityGraph& h, std::span<const Edge> add,
                                       std::span<const Edge> remove) {
  const auto start = Clock::now();
  const auto added = checked_new_edges(h.graph, add, "classify_perturbation");
  std::vector<Edge> removed;
  for (const auto& raw : remove) {
    const Edge e = graph::normalized(raw);
    if (e.u == e.v || e.v >= h.graph.n() || !h.graph.has_edge(e.u, e.v)) {
      throw std::invalid_argument(str("classify_perturbation: (", e.u, ", ", e.v, ") is not an edge of H"));
    }
    removed.push_back(e);
  }
  std::sort(removed.begin(), removed.end());
  if (std::adjacent_find(removed.begin(), removed.end()) != removed.end()) {
    throw std::invalid_argument("classify_perturbation: repeated edge in remove");
  }
  if (added.size() != removed.size() + 1) throw std::invalid_argument("classify_perturbation: need |add| = |remove| + 1");

  const Graph g = h.graph.with_edges_added(added).with_edges_removed(removed);
  const std::uint64_t count = graph::count_c4(g, 1);
  const auto s = static_cast<std::int64_t>(added.size());
  const auto q = static_cast<std::int64_t>(h.q);
  const std::int64_t lo = s * q - s * s, hi = s * q + s * s;
  const auto c = static_cast<std::int64_t>(count);

  ExperimentReport rep("classify_perturbation");
  rep.params() = {{"q", h.q}, {"t", nullptr}, {"seed", nullptr}, {"trials", 1}, {"s", s},
                  {"add", edges_json(added)}, {"remove", edges_json(removed)}};
  rep.measured() = {{"c4_count", count}, {"edges", g.m()}};
  rep.bounds() = {{"sq-s^2", lo}, {"sq+s^2", hi}};
  rep.verdict("count_within_sq_pm_s2", str(lo, " <= #C4 = ", count, " <= ", hi), lo <= c && c <= hi,
              s == 1 ? VerdictKind::Required : VerdictKind::Informative);
  rep.set_wall_ms(ms_since(start));
  return rep;
}

AuditResult upper_count_audit(const PolarityGraph& h, std::span<const Edge> add) {
  if (add.size() > kMaxAuditEdges) throw std::invalid_argument("upper_count_audit: at most 64 added edges");
  const auto added = checked_new_edges(h.graph, add, "upper_count_audit");
  const Graph g = h.graph.with_edges_added(added);

  auto is_added = [&](Vertex a, Vertex b) { return std::binary_search(added.begin(), added.end(), graph::normalized({a, b})); };
  std::set<graph::Cycle4> seen;
  for (const auto& e : added) {
    for (const auto& c : graph::c4_through_edge(g, e.u, e.v)) seen.insert(canonical(c));
  }
  AuditResult r;
  r.s = added.size();
  for (const auto& c : seen) {
    int used = 0;
    for (int i = 0; i < 4; ++i) used += is_added(c[i], c[(i + 1) % 4]);
    (used == 1 ? r.c0 : r.c1) += 1;
  }
  r.c0_bound = r.s * (h.q + 1);
  r.c1_bound = r.s * (r.s - (r.s > 0 ? 1 : 0));
  const std::uint64_t before = graph::count_c4(h.graph, 1);
  const std::uint64_t after = graph::count_c4(g, 1);
  r.delta = after - before;
  r.bound_ok = r.c0 <= r.c0_bound && r.c1 <= r.c1_bound;
  r.partition_ok = r.c0 + r.c1 == r.delta;
  return r;
}

ExperimentReport AuditResult::to_report(std::uint32_t q) const {
  ExperimentReport rep("upper_count_audit");
  rep.params() = {{"q", q}, {"t", nullptr}, {"seed", nullptr}, {"trials", 1}, {"s", s}};
  rep.measured() = {{"c0", c0}, {"c1", c1}, {"delta", delta}};
  rep.bounds() = {{"s(q+1)", c0_bound}, {"2C(s,2)", c1_bound}, {"sq+s^2", s * q + s * s}};
  rep.verdict("c0_bound", str("C0 = ", c0, " <= s(q+1) = ", c0_bound), c0 <= c0_bound);
  rep.verdict("c1_bound", str("C1 = ", c1, " <= 2C(s,2) = ", c1_bound), c1 <= c1_bound);
  rep.verdict("partition_complete", str("C0 + C1 = ", c0 + c1, " == count delta ", delta), partition_ok);
  return rep;
}

std::vector<Edge> random_non_edges(const Graph& g, std::size_t count, CounterRng& rng) {
  const std::uint64_t n = g.n();
  const std::uint64_t free = n * (n - (n ? 1 : 0)) / 2 - g.m();
  if (count > free) throw std::invalid_argument("random_non_edges: not enough non-edges");
  std::set<Edge> chosen;
  while (chosen.size() < count) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const auto v = static_cast<Vertex>(rng.below(n));
    if (u == v || g.has_edge(u, v)) continue;
    chosen.insert(graph::normalized({u, v}));
  }
  return {chosen.begin(), chosen.end()};
}

Graph random_graph(std::uint32_t n, std::uint64_t m, CounterRng& rng) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - (n ? 1 : 0)) / 2;
  if (m > pairs) throw std::invalid_argument("random_graph: too many edges");
  std::vector<Edge> all;
  all.reserve(pairs);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all.push_back({u, v});
  }
  // Partial Fisher-Yates: the first m slots end up a uniform m-subset.
  for (std::uint64_t i = 0; i < m; ++i) std::swap(all[i], all[i + rng.below(pairs - i)]);
  all.resize(m);
  return Graph::from_edges(n, all);
}

}  // namespace c4lab::supersat
