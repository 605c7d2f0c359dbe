#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "c4lab/graph.hpp"
#include "c4lab/polarity.hpp"

using namespace c4lab;
using graph::Edge;
using graph::Graph;

namespace {

Graph make(std::uint32_t n, std::vector<Edge> e) { return Graph::from_edges(n, e); }

Graph complete(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) e.push_back({u, v});
  return make(n, e);
}

Graph cycle(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t u = 0; u < n; ++u) e.push_back({u, (u + 1) % n});
  return make(n, e);
}

Graph gnp(std::uint32_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (coin(rng)) e.push_back({u, v});
  return make(n, e);
}

// Closed walks a-b-c-d-a on four distinct vertices, each cycle seen 8 times.
std::uint64_t oracle_c4(const Graph& g) {
  const auto n = g.n();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
  std::uint64_t walks = 0;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      if (!adj[a][b]) continue;
      for (std::uint32_t c = 0; c < n; ++c) {
        if (c == a || !adj[b][c]) continue;
        for (std::uint32_t d = 0; d < n; ++d)
          if (d != b && d != a && adj[c][d] && adj[d][a]) ++walks;
      }
    }
  return walks / 8;
}

Graph relabel(const Graph& g, const std::vector<std::uint32_t>& perm) {
  std::vector<Edge> e;
  for (const auto& x : g.edges()) e.push_back({perm[x.u], perm[x.v]});
  return make(g.n(), e);
}

}  // namespace

TEST(GraphBuild, DeduplicatesAndSorts) {
  const auto g = make(4, {{2, 1}, {1, 2}, {0, 3}, {3, 1}});
  EXPECT_EQ(g.m(), 3u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 3}, {1, 2}, {1, 3}}));
  EXPECT_EQ(std::vector<std::uint32_t>(g.neighbors(3).begin(), g.neighbors(3).end()),
            (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(g.max_degree(), 2u);
}

TEST(GraphBuild, RejectsBadEdges) {
  EXPECT_THROW(make(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(make(3, {{1, 1}}), std::invalid_argument);
}

TEST(GraphBuild, AddAndRemove) {
  const auto g = cycle(5);
  const std::vector<Edge> chord{{0, 2}};
  const auto h = g.with_edges_added(chord);
  EXPECT_EQ(h.m(), 6u);
  EXPECT_EQ(h.with_edges_removed(chord), g);
}

TEST(Codegree, Basics) {
  const auto k4 = complete(4);
  EXPECT_EQ(graph::codegree(k4, 0, 1), 2u);
  EXPECT_EQ(graph::codegree(cycle(4), 0, 2), 2u);
  EXPECT_EQ(graph::codegree(cycle(5), 0, 1), 0u);
  EXPECT_THROW(graph::codegree(k4, 2, 2), std::invalid_argument);
}

TEST(CountC4, SmallExamples) {
  EXPECT_EQ(graph::count_c4(complete(4)), 3u);
  EXPECT_EQ(graph::count_c4(cycle(4)), 1u);
  EXPECT_EQ(graph::count_c4(cycle(5)), 0u);
  EXPECT_EQ(graph::count_c4(complete(5)), 15u);
  EXPECT_EQ(graph::count_c4(Graph::from_edges(0, {})), 0u);
  // K_{2,3}: choose the 2-side pair and two of three on the other side.
  EXPECT_EQ(graph::count_c4(make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})), 3u);
}

TEST(CountC4, AgreesWithWalkOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 24);
    const double p = 0.1 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0;
    const auto g = gnp(n, p, rng);
    const auto expected = oracle_c4(g);
    ASSERT_EQ(graph::count_c4(g, 1), expected);
    ASSERT_EQ(graph::count_c4(g, 4), expected);
    ASSERT_EQ(graph::count_c4_bruteforce(g), expected);
  }
}

TEST(CountC4, InvariantUnderRelabeling) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = gnp(40, 0.3, rng);
    std::vector<std::uint32_t> perm(40);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(graph::count_c4(relabel(g, perm)), graph::count_c4(g));
  }
}

TEST(CountC4, ThreadCountDoesNotMatter) {
  std::mt19937_64 rng(8);
  const auto g = gnp(600, 0.05, rng);
  const auto one = graph::count_c4(g, 1);
  for (unsigned t : {0u, 2u, 3u, 7u, 16u}) EXPECT_EQ(graph::count_c4(g, t), one);
}

TEST(CountC4, PolarityGraphsAreC4Free) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto er = polarity::er_graph(q, false);
    EXPECT_EQ(graph::count_c4(er.graph), 0u);
    EXPECT_TRUE(graph::is_c4_free(er.graph));
  }
  EXPECT_FALSE(graph::is_c4_free(cycle(4)));
}

TEST(CountC4, InputLimits) {
  EXPECT_THROW(graph::count_c4(Graph::from_edges(graph::kMaxCountVertices + 1, {})), std::length_error);
  std::vector<Edge> star;
  for (std::uint32_t v = 1; v <= graph::kMaxCountDegree + 1; ++v) star.push_back({0, v});
  EXPECT_THROW(graph::count_c4(make(graph::kMaxCountDegree + 2, star)), std::length_error);
  EXPECT_THROW(graph::count_c4_bruteforce(complete(65)), std::length_error);
}

TEST(C4ThroughEdge, ListsEveryCycleOnce) {
  const auto k4 = complete(4);
  const auto cyc = graph::c4_through_edge(k4, 0, 1);
  EXPECT_EQ(cyc.size(), 2u);
  for (const auto& c : cyc) {
    EXPECT_EQ(c[0], 0u);
    EXPECT_EQ(c[1], 1u);
    EXPECT_TRUE(k4.has_edge(c[1], c[2]) && k4.has_edge(c[2], c[3]) && k4.has_edge(c[3], c[0]));
  }
  EXPECT_THROW(graph::c4_through_edge(cycle(5), 0, 2), std::invalid_argument);

  std::mt19937_64 rng(21);
  const auto g = gnp(18, 0.4, rng);
  std::uint64_t total = 0;
  for (const auto& e : g.edges()) total += graph::c4_through_edge(g, e.u, e.v).size();
  EXPECT_EQ(total, 4 * graph::count_c4(g));
}

TEST(UpP2Stats, SmallestPolarityGraph) {
  const auto er = polarity::er_graph(2);
  const auto s = graph::up_p2_stats(er.graph, 2);
  EXPECT_EQ(s.two_paths, 15u);
  EXPECT_EQ(s.uncovered_pairs, 6u);
  EXPECT_EQ(s.small.size(), 3u);
  EXPECT_EQ(s.total_deficiency, 3u);
  EXPECT_EQ(s.degree_histogram[2], 3u);
  EXPECT_EQ(s.degree_histogram[3], 4u);
  EXPECT_EQ(s.of_degree(2), s.small);
}

TEST(UpP2Stats, PolarityGraphDeficiencyIsQPlusOne) {
  for (std::uint32_t q : {4u, 8u, 16u}) {
    const auto er = polarity::er_graph(q, false);
    const auto s = graph::up_p2_stats(er.graph, q, 2);
    EXPECT_EQ(s.total_deficiency, q + 1);
    EXPECT_EQ(s.uncovered_pairs, std::uint64_t{q} * (q + 1));
    std::uint64_t d0 = 0;
    for (auto x : s.uncovered_degree) d0 += x;
    EXPECT_EQ(d0, 2 * s.uncovered_pairs);
  }
}

TEST(UpP2Stats, EmptyGraph) {
  const auto s = graph::up_p2_stats(Graph::from_edges(5, {}), 3);
  EXPECT_EQ(s.two_paths, 0u);
  EXPECT_EQ(s.uncovered_pairs, 10u);
  EXPECT_EQ(s.total_deficiency, 20u);
}

TEST(ClaimInequality, CompleteGraphIsTight) {
  const std::vector<std::uint32_t> all{0, 1, 2, 3};
  const auto r = graph::claim_c4_inequality(complete(4), all);
  EXPECT_EQ(r.lhs, 6);
  EXPECT_EQ(r.rhs, 6);
  EXPECT_TRUE(r.holds);
}

TEST(ClaimInequality, HoldsOnRandomGraphsAndSets) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = gnp(20, 0.05 + 0.05 * (trial % 10), rng);
    std::vector<std::uint32_t> a;
    for (std::uint32_t v = 0; v < 20; ++v)
      if (rng() % 2) a.push_back(v);
    const auto r = graph::claim_c4_inequality(g, a);
    ASSERT_TRUE(r.holds) << r.lhs << " " << r.rhs;
    ASSERT_EQ(r.lhs, static_cast<std::int64_t>(2 * graph::count_c4(g)));
  }
}

TEST(Convexity, Examples) {
  const std::vector<std::int64_t> a{3, 3, 3};
  const auto r = graph::convexity_bound(a, 3, 0);
  EXPECT_TRUE(r.preconditions_ok);
  EXPECT_EQ(r.lhs, 9);
  EXPECT_EQ(r.rhs, 9);
  EXPECT_TRUE(r.holds);

  const std::vector<std::int64_t> b{5, 1};
  const auto s = graph::convexity_bound(b, 2, 2);
  EXPECT_EQ(s.lhs, 10);
  EXPECT_EQ(s.rhs, 6);
  EXPECT_TRUE(s.holds);

  const std::vector<std::int64_t> c{1, 1};
  EXPECT_FALSE(graph::convexity_bound(c, 2, 0).preconditions_ok);
}

TEST(NeighborhoodFamily, PolarityGraphGivesQSquaredMinusOne) {
  for (std::uint32_t q : {8u, 16u}) {
    const auto er = polarity::er_graph(q, false);
    for (double delta : {0.25, 0.5, 0.9}) {
      const auto f = graph::neighborhood_family(er.graph, q, delta);
      EXPECT_EQ(f.size(), std::size_t{q} * q - 1);
      EXPECT_EQ(f.heavy.size(), 1u);
      EXPECT_EQ(f.small.size(), q + 1);
      EXPECT_TRUE(f.one_intersecting);
    }
    EXPECT_THROW(graph::neighborhood_family(er.graph, q, 1.0), std::invalid_argument);
    EXPECT_THROW(graph::neighborhood_family(er.graph, q, 0.0), std::invalid_argument);
  }
}

TEST(EdgeList, RoundTrip) {
  std::mt19937_64 rng(4);
  const auto g = gnp(30, 0.2, rng);
  const auto text = g.to_edge_list();
  EXPECT_EQ(text.rfind("# vertices 30 edges " + std::to_string(g.m()), 0), 0u);
  EXPECT_EQ(Graph::from_edge_list(text), g);
  EXPECT_EQ(Graph::from_edge_list(text).to_edge_list(), text);
}

TEST(EdgeList, LenientInput) {
  const auto g = Graph::from_edge_list("# hi\n3 1\n\n0 1\n1 0\n");
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.m(), 2u);
  EXPECT_THROW(Graph::from_edge_list("0 x\n"), std::exception);
  EXPECT_THROW(Graph::from_edge_list("# vertices 2\n0 5\n"), std::exception);
}
