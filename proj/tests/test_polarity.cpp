#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <random>

#include "c4lab/graph.hpp"
#include "c4lab/polarity.hpp"

using namespace c4lab;
using polarity::Polarity;

namespace {

std::shared_ptr<const geometry::ProjectivePlane> plane(std::uint32_t q) {
  return std::make_shared<const geometry::ProjectivePlane>(geometry::build_pg2(field::FieldSpec::of_order(q)));
}

// [a:b:c] -> line a^r x + b^r y + c^r z = 0 with r = sqrt(q).
Polarity unitary(std::uint32_t q, std::uint32_t r) {
  const auto spec = field::FieldSpec::of_order(q);
  auto p = plane(q);
  Polarity pi{p, std::vector<std::uint32_t>(p->size())};
  auto frob = [&](std::uint32_t x) {
    std::uint32_t y = 1;
    for (std::uint32_t i = 0; i < r; ++i) y = spec.mul(y, x);
    return y;
  };
  for (std::uint32_t i = 0; i < p->size(); ++i) {
    const auto& c = p->coords[i];
    pi.sigma[i] = geometry::triple_index({frob(c[0]), frob(c[1]), frob(c[2])}, q);
  }
  return pi;
}

}  // namespace

TEST(OrthogonalPolarity, SigmaIsIdentityAndVerifies) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto pi = polarity::orthogonal_polarity(field::FieldSpec::of_order(q));
    for (std::uint32_t i = 0; i < pi.sigma.size(); ++i) ASSERT_EQ(pi.sigma[i], i);
    EXPECT_TRUE(polarity::verify_polarity(pi).ok) << q;
  }
}

TEST(OrthogonalPolarity, SwappedSigmaFails) {
  auto pi = polarity::orthogonal_polarity(field::FieldSpec::of_order(3));
  std::swap(pi.sigma[0], pi.sigma[1]);
  const auto v = polarity::verify_polarity(pi);
  EXPECT_FALSE(v.ok);
  ASSERT_TRUE(v.witness.has_value());
  const auto [i, j] = *v.witness;
  const auto& s = pi.plane->structure;
  EXPECT_NE(s.incident(j, pi.sigma[i]), s.incident(i, pi.sigma[j]));
  EXPECT_THROW(polarity::polarity_graph(pi), std::invalid_argument);
}

TEST(OrthogonalPolarity, ShuffledSigmaFails) {
  auto pi = polarity::orthogonal_polarity(field::FieldSpec::of_order(5));
  std::mt19937 rng(9);
  std::shuffle(pi.sigma.begin(), pi.sigma.end(), rng);
  EXPECT_FALSE(polarity::verify_polarity(pi).ok);
}

TEST(PolarityGraph, AbsolutePointCounts) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u, 16u}) {
    const auto g = polarity::er_graph(q);
    EXPECT_EQ(g.absolute_count(), q + 1) << q;
    EXPECT_TRUE(g.orthogonal());
    for (auto v : g.absolute_points) EXPECT_EQ(g.graph.degree(v), q);
  }
}

TEST(PolarityGraph, SizesAndDegrees) {
  const auto g2 = polarity::er_graph(2);
  EXPECT_EQ(g2.graph.n(), 7u);
  EXPECT_EQ(g2.graph.m(), 9u);

  const auto g8 = polarity::er_graph(8);
  EXPECT_EQ(g8.graph.n(), 73u);
  EXPECT_EQ(g8.graph.m(), 324u);
  std::uint32_t low = 0;
  for (std::uint32_t v = 0; v < 73; ++v) {
    const auto d = g8.graph.degree(v);
    EXPECT_TRUE(d == 8 || d == 9);
    low += d == 8;
  }
  EXPECT_EQ(low, 9u);

  const auto g16 = polarity::er_graph(16);
  EXPECT_EQ(g16.graph.m(), 2312u);
  EXPECT_TRUE(graph::is_c4_free(g16.graph));
}

TEST(PolarityGraph, EdgeCountFormula) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    EXPECT_EQ(polarity::er_graph(static_cast<std::uint32_t>(q), false).graph.m(), polarity::polarity_edge_count(q, 0));
  }
  EXPECT_EQ(polarity::polarity_edge_count(4, 2), 48u);
  EXPECT_EQ(polarity::polarity_edge_count(9, 6), 441u);
  EXPECT_THROW(polarity::polarity_edge_count(8, 1), std::invalid_argument);
}

TEST(PolarityGraph, UnitaryPolarityHasMoreAbsolutePoints) {
  struct Case {
    std::uint32_t q, r, absolute, m_pi, edges;
  };
  for (const auto c : {Case{4, 2, 9, 2, 48}, Case{9, 3, 28, 6, 441}}) {
    const auto pi = unitary(c.q, c.r);
    ASSERT_TRUE(polarity::verify_polarity(pi).ok);
    const auto g = polarity::polarity_graph(pi);
    EXPECT_EQ(g.absolute_count(), c.absolute);
    EXPECT_EQ(g.m_pi, c.m_pi);
    EXPECT_EQ(g.graph.m(), c.edges);
    EXPECT_FALSE(g.orthogonal());
    EXPECT_THROW(polarity::special_vertex_w(g), std::invalid_argument);
  }
}

TEST(SpecialVertex, EvenOrders) {
  for (std::uint32_t q : {2u, 4u, 8u, 16u}) {
    const auto g = polarity::er_graph(q);
    const auto w = polarity::special_vertex_w(g);
    EXPECT_EQ(g.graph.degree(w), q + 1);
    const auto nb = g.graph.neighbors(w);
    EXPECT_TRUE(std::equal(nb.begin(), nb.end(), g.absolute_points.begin(), g.absolute_points.end()));
  }
  EXPECT_EQ(polarity::er_graph(4).graph.degree(polarity::special_vertex_w(polarity::er_graph(4))), 5u);
}

TEST(SpecialVertex, OddOrderThrows) {
  try {
    polarity::special_vertex_w(polarity::er_graph(3));
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "odd order");
  }
}

TEST(Independence, DegreeQVerticesAreIndependent) {
  for (std::uint32_t q : {2u, 4u, 8u, 16u, 32u}) EXPECT_TRUE(polarity::degree_q_independence(polarity::er_graph(q, false)).ok);
}

TEST(Independence, NegativeControl) {
  const auto g = polarity::er_graph(8);
  const auto w = polarity::special_vertex_w(g);
  // Dropping one edge at w leaves w with degree q next to the other absolute points.
  const std::vector<graph::Edge> gone{{w, g.absolute_points[0]}};
  const auto v = polarity::degree_q_independence(g.graph.with_edges_removed(gone), 8);
  EXPECT_FALSE(v.ok);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(v.witness->u == w || v.witness->v == w);
}

TEST(PolarityText, RoundTrip) {
  const auto pi = unitary(4, 2);
  const auto text = pi.to_text();
  const auto back = Polarity::from_text(text, pi.plane);
  EXPECT_EQ(back.sigma, pi.sigma);
  EXPECT_EQ(back.to_text(), text);
  EXPECT_THROW(Polarity::from_text("5\n", pi.plane), geometry::ParseError);
  EXPECT_THROW(Polarity::from_text("4\n0 1\n", pi.plane), geometry::ParseError);
  EXPECT_THROW(Polarity::from_text("four\n", pi.plane), geometry::ParseError);
}
