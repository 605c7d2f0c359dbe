#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <random>

#include "c4lab/extremal.hpp"
#include "c4lab/graph.hpp"

using namespace c4lab;

namespace {

// Every labelled graph on n <= 7 vertices, as a bitmask over the C(n,2) pairs.
struct Enumerator {
  std::uint32_t n;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

  explicit Enumerator(std::uint32_t n_) : n(n_) {
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }

  std::uint64_t cycles(std::uint32_t mask) const {
    std::uint32_t nb[8] = {};
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1u) {
        nb[pairs[i].first] |= 1u << pairs[i].second;
        nb[pairs[i].second] |= 1u << pairs[i].first;
      }
    std::uint64_t twice = 0;
    for (const auto& [u, v] : pairs) {
      const auto c = static_cast<std::uint64_t>(std::popcount(nb[u] & nb[v]));
      twice += c * (c - (c > 0)) / 2;
    }
    return twice / 2;
  }

  std::uint64_t ex() const {
    std::uint64_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      const auto m = static_cast<std::uint64_t>(std::popcount(mask));
      if (m > best && cycles(mask) == 0) best = m;
    }
    return best;
  }

  std::uint64_t h(std::uint64_t edges) const {
    std::uint64_t best = UINT64_MAX;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask)
      if (static_cast<std::uint64_t>(std::popcount(mask)) == edges) best = std::min(best, cycles(mask));
    return best;
  }
};

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

}  // namespace

TEST(TuranBruteforce, MatchesEnumerationOracle) {
  for (std::uint32_t n = 1; n <= 7; ++n) {
    const auto rec = extremal::turan_bruteforce(n);
    EXPECT_EQ(rec.ex_value, Enumerator(n).ex()) << n;
    EXPECT_EQ(rec.method, "bruteforce");
    const auto g = graph::Graph::from_edges(n, rec.witness);
    EXPECT_EQ(g.m(), rec.ex_value);
    EXPECT_TRUE(graph::is_c4_free(g));
  }
}

TEST(TuranBruteforce, KnownValuesUpToTen) {
  const std::uint64_t expected[] = {0, 0, 1, 3, 4, 6, 7, 9, 11, 13, 16};
  for (std::uint32_t n = 1; n <= 10; ++n) EXPECT_EQ(extremal::turan_bruteforce(n).ex_value, expected[n]) << n;
  EXPECT_THROW(extremal::turan_bruteforce(11), std::invalid_argument);
}

TEST(SupersatBruteforce, MatchesEnumerationOracle) {
  for (std::uint32_t n = 4; n <= 7; ++n) {
    const Enumerator e(n);
    const auto ex = e.ex();
    for (std::uint64_t t = 0; t <= 2; ++t) {
      const auto rec = extremal::h_bruteforce(n, t);
      EXPECT_EQ(rec.edges, ex + t);
      EXPECT_EQ(rec.min_c4, e.h(ex + t)) << n << " " << t;
      const auto g = graph::Graph::from_edges(n, rec.witness);
      EXPECT_EQ(g.m(), ex + t);
      EXPECT_EQ(graph::count_c4(g), rec.min_c4);
    }
  }
}

TEST(SupersatBruteforce, FrozenValues) {
  EXPECT_EQ(extremal::h_bruteforce(4, 1).min_c4, 1u);
  EXPECT_EQ(extremal::h_bruteforce(7, 1).min_c4, 1u);
  EXPECT_EQ(extremal::h_bruteforce(6, 0).min_c4, 0u);
  EXPECT_THROW(extremal::h_bruteforce(10, 1), std::invalid_argument);
  EXPECT_THROW(extremal::h_bruteforce(4, 3), std::invalid_argument);
}

TEST(Reiman, Values) {
  EXPECT_EQ(extremal::reiman_bound(7), 10u);
  EXPECT_EQ(extremal::reiman_bound(4), 4u);
  EXPECT_EQ(extremal::reiman_bound(1), 0u);
  EXPECT_THROW(extremal::reiman_bound(0), std::invalid_argument);
  for (std::uint64_t n = 1; n < 5000; ++n) {
    const long double v = n / 4.0L * (1 + std::sqrt(static_cast<long double>(4 * n - 3)));
    const auto r = extremal::reiman_bound(n);
    ASSERT_LE(static_cast<long double>(r), v + 1e-9L) << n;
    ASSERT_GT(static_cast<long double>(r) + 1, v - 1e-9L) << n;
  }
  for (std::uint32_t n = 1; n <= 10; ++n) EXPECT_LE(extremal::turan_bruteforce(n).ex_value, extremal::reiman_bound(n));
}

TEST(Furedi, ValuesAndExclusions) {
  EXPECT_EQ(extremal::furedi_value(2).value, 9u);
  EXPECT_EQ(extremal::furedi_value(8).value, 324u);
  for (std::uint64_t q = 1; q <= 20; ++q) {
    const bool excluded = q == 1 || q == 7 || q == 9 || q == 11 || q == 13;
    EXPECT_EQ(extremal::furedi_value(q).excluded_q, excluded) << q;
    EXPECT_EQ(extremal::furedi_value(q).value, q * (q + 1) * (q + 1) / 2);
  }
  EXPECT_EQ(extremal::turan_bruteforce(7).ex_value, extremal::furedi_value(2).value);
}

TEST(PrimeWindow, Examples) {
  EXPECT_EQ(extremal::prime_in_interval(100).prime, 97u);
  EXPECT_TRUE(extremal::prime_in_interval(100).in_window);
  EXPECT_EQ(extremal::prime_in_interval(10).prime, 7u);
  EXPECT_EQ(extremal::prime_in_interval(4).prime, 3u);
  EXPECT_EQ(extremal::prime_in_interval(2).prime, 2u);
  EXPECT_THROW(extremal::prime_in_interval(1), std::invalid_argument);
}

TEST(PrimeWindow, AgreesWithTrialDivision) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t x = 2 + rng() % (trial < 200 ? 10'000 : 1'000'000'000ull);
    std::uint64_t p = x;
    while (!is_prime(p)) --p;
    const auto w = extremal::prime_in_interval(x);
    ASSERT_EQ(w.prime, p) << x;
    const long double lhs = 40 * std::log(static_cast<long double>(x - p) + 0.0L);
    const long double rhs = 21 * std::log(static_cast<long double>(x));
    if (x == p) {
      EXPECT_TRUE(w.in_window);
    } else if (std::fabs(lhs - rhs) > 1e-6L) {
      EXPECT_EQ(w.in_window, lhs < rhs) << x;
    }
  }
}

TEST(LowerBound, Examples) {
  const auto big = extremal::turan_lower_bound(1'000'000);
  EXPECT_EQ(big.p, 997u);
  EXPECT_EQ(big.bound, exact::Int(496507994));
  EXPECT_EQ(big.x_floor, 999u);
  EXPECT_TRUE(big.chain_holds);
  EXPECT_EQ(big.p_check, exact::Certainty::True);
  EXPECT_EQ(big.bound_check, exact::Certainty::True);

  const auto seven = extremal::turan_lower_bound(7);
  EXPECT_EQ(seven.p, 2u);
  EXPECT_EQ(seven.bound, exact::Int(9));
  EXPECT_THROW(extremal::turan_lower_bound(2), std::invalid_argument);
  EXPECT_THROW(extremal::turan_lower_bound(6), std::domain_error);
}

TEST(LowerBound, BoundNeverExceedsReimanAndGrows) {
  exact::Int prev = 0;
  for (std::uint64_t n = 7; n <= 20'000; n += 37) {
    const auto ch = extremal::turan_lower_bound(n);
    ASSERT_GE(ch.bound, prev);
    ASSERT_LE(ch.bound, exact::Int(extremal::reiman_bound(n)));
    ASSERT_LE(ch.p * ch.p + ch.p + 1, n);
    prev = ch.bound;
  }
}

TEST(Corollary, Branches) {
  const auto q8 = extremal::corollary_turan_decision(8, 324, 0);
  EXPECT_EQ(q8.threshold, 320);
  EXPECT_EQ(q8.branch, 1);
  EXPECT_EQ(q8.bound, 324);

  const auto q6 = extremal::corollary_turan_decision(6, 102, 0);
  EXPECT_EQ(q6.threshold, 144);
  EXPECT_EQ(q6.branch, 2);
  EXPECT_EQ(q6.bound, 144);
  // No plane of order 6, so the polarity lower bound is 0.
  EXPECT_EQ(extremal::corollary_turan_decision(6, 0, 0).branch, 2);
  EXPECT_EQ(extremal::corollary_turan_decision(6, 0, 0).bound, 144);

  const auto q2 = extremal::corollary_turan_decision(2, 9, 0);
  EXPECT_EQ(q2.threshold, 8);
  EXPECT_EQ(q2.branch, 1);

  EXPECT_EQ(extremal::corollary_turan_decision(8, 324, 5).branch, 2);
  EXPECT_THROW(extremal::corollary_turan_decision(7, 100, 0), std::invalid_argument);
}
