#include <gtest/gtest.h>

#include <random>

#include "c4lab/field.hpp"
#include "c4lab/primes.hpp"

using namespace c4lab;
using field::FieldSpec;
using field::Poly;

namespace {

// Oracle arithmetic written independently of the library.
Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly rem(Poly a, const Poly& m, std::uint32_t p) {
  a = trim(a);
  const std::size_t dm = m.size() - 1;
  std::uint32_t lead_inv = 1;
  while (lead_inv * m.back() % p != 1) ++lead_inv;
  while (a.size() > dm) {
    const std::uint64_t f = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p * p - f * m[i] % p) % p);
    a = trim(a);
  }
  return a;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = static_cast<std::uint32_t>((out[i + j] + 1ull * a[i] * b[j]) % p);
  return trim(out);
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of idx.
Poly monic(std::uint64_t idx, unsigned d, std::uint32_t p) {
  Poly f(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    f[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  f[d] = 1;
  return f;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

bool irreducible_by_division(const Poly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    for (std::uint64_t i = 0; i < ipow(p, d); ++i) {
      if (rem(f, monic(i, d, p), p).empty()) return false;
    }
  }
  return true;
}

// Comparing from x^(k-1) downwards makes c_{k-1} the most significant
// digit, so candidates in rank order are exactly monic(rank).
Poly least_irreducible(std::uint32_t p, unsigned k) {
  const std::uint64_t count = ipow(p, k);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    const Poly f = monic(rank, k, p);
    if (irreducible_by_division(f, p)) return f;
  }
  return {};
}

std::uint32_t oracle_mul(const FieldSpec& f, std::uint32_t a, std::uint32_t b) {
  Poly r = rem(mul(trim(f.coeffs(a)), trim(f.coeffs(b)), f.p()), f.modulus(), f.p());
  r.resize(f.k(), 0);
  return f.encode(r);
}

std::vector<std::uint32_t> prime_powers(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 2; q <= limit; ++q) {
    if (as_prime_power(q)) out.push_back(q);
  }
  return out;
}

}  // namespace

TEST(Irreducible, SpecExamples) {
  EXPECT_EQ(field::find_irreducible(2, 1), (Poly{0, 1}));
  EXPECT_EQ(field::find_irreducible(2, 2), (Poly{1, 1, 1}));
  EXPECT_EQ(field::find_irreducible(3, 2), (Poly{1, 0, 1}));
}

TEST(Irreducible, FrozenOracleValues) {
  EXPECT_EQ(field::find_irreducible(2, 3), (Poly{1, 1, 0, 1}));
  EXPECT_EQ(field::find_irreducible(2, 4), (Poly{1, 1, 0, 0, 1}));
  EXPECT_EQ(field::find_irreducible(2, 8), (Poly{1, 1, 0, 1, 1, 0, 0, 0, 1}));
  EXPECT_EQ(field::find_irreducible(2, 10), (Poly{1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(field::find_irreducible(5, 2), (Poly{2, 0, 1}));
}

TEST(Irreducible, MatchesDivisionOracle) {
  const std::vector<std::pair<std::uint32_t, unsigned>> cases{
      {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {2, 10},
      {3, 1}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 2}, {5, 3}, {5, 4}, {7, 2}, {7, 3},
      {11, 2}, {13, 2}, {31, 2}};
  for (const auto& [p, k] : cases) {
    EXPECT_EQ(field::find_irreducible(p, k), least_irreducible(p, k)) << "p=" << p << " k=" << k;
  }
}

TEST(Irreducible, DividesFrobeniusPolynomial) {
  // x^(p^k) - x is divisible by every irreducible of degree k.
  for (const auto& [p, k] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 5}, {2, 8}, {3, 4}, {5, 3}, {7, 2}}) {
    const Poly f = field::find_irreducible(p, k);
    Poly x{0, 1};
    Poly acc = x;
    for (unsigned i = 0; i < k; ++i) {
      Poly r = acc;
      for (std::uint32_t j = 1; j < p; ++j) r = rem(mul(r, acc, p), f, p);
      acc = r;
    }
    acc.resize(std::max<std::size_t>(acc.size(), 2), 0);
    acc[1] = (acc[1] + p - 1) % p;
    EXPECT_TRUE(trim(acc).empty()) << "p=" << p << " k=" << k;
  }
}

TEST(Irreducible, HighDegreeAgreesWithRabin) {
  const Poly f = field::find_irreducible(2, 20);
  EXPECT_EQ(f.size(), 21u);
  EXPECT_TRUE(field::is_irreducible(f, 2));
  EXPECT_FALSE(field::is_irreducible(Poly{1, 0, 1}, 2));  // (x+1)^2
}

TEST(Irreducible, RejectsBadArguments) {
  EXPECT_THROW(field::find_irreducible(4, 2), std::invalid_argument);
  EXPECT_THROW(field::find_irreducible(1, 2), std::invalid_argument);
  EXPECT_THROW(field::find_irreducible(2, 0), std::invalid_argument);
  EXPECT_THROW(field::find_irreducible(2, 21), std::invalid_argument);
}

TEST(FieldSpec, Construction) {
  EXPECT_THROW(FieldSpec(4, 1), std::invalid_argument);
  EXPECT_THROW(FieldSpec(2, 11), std::out_of_range);
  EXPECT_THROW(FieldSpec::of_order(6), std::invalid_argument);
  EXPECT_THROW(FieldSpec::of_order(2048), std::out_of_range);
  const FieldSpec f = FieldSpec::of_order(1024);
  EXPECT_EQ(f.p(), 2u);
  EXPECT_EQ(f.k(), 10u);
}

TEST(FieldArith, SpecExamples) {
  const FieldSpec gf5 = FieldSpec::of_order(5);
  EXPECT_EQ(gf5.mul(3, 4), 2u);
  const FieldSpec gf4 = FieldSpec::of_order(4);
  const std::uint32_t x = gf4.encode(Poly{0, 1});
  EXPECT_EQ(gf4.coeffs(gf4.mul(x, x)), (Poly{1, 1}));
}

TEST(FieldArith, Enumeration) {
  EXPECT_EQ(FieldSpec::of_order(2).elements().size(), 2u);
  const auto gf3 = FieldSpec::of_order(3).elements();
  for (std::uint32_t i = 0; i < 3; ++i) EXPECT_EQ(gf3[i].coeffs(), (Poly{i}));
  const auto gf4 = FieldSpec::of_order(4).elements();
  const std::vector<Poly> want{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  ASSERT_EQ(gf4.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(gf4[i].coeffs(), want[i]);
  EXPECT_TRUE(gf4[0].is_zero());
  EXPECT_EQ(gf4[1], FieldSpec::of_order(4).one());
}

TEST(FieldArith, TablesMatchOracleExhaustively) {
  for (std::uint32_t q : prime_powers(64)) {
    const FieldSpec f = FieldSpec::of_order(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        ASSERT_EQ(f.mul(a, b), oracle_mul(f, a, b)) << "q=" << q << " " << a << "*" << b;
        ASSERT_EQ(f.mul(a, b), f.mul_reference(a, b));
        Poly ca = f.coeffs(a), cb = f.coeffs(b), cs(f.k());
        for (unsigned i = 0; i < f.k(); ++i) cs[i] = (ca[i] + cb[i]) % f.p();
        ASSERT_EQ(f.add(a, b), f.encode(cs));
      }
    }
  }
}

TEST(FieldArith, LargeFieldsSampled) {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : prime_powers(1024)) {
    if (q <= 64) continue;
    const FieldSpec f = FieldSpec::of_order(q);
    for (int i = 0; i < 300; ++i) {
      const auto a = static_cast<std::uint32_t>(rng() % q), b = static_cast<std::uint32_t>(rng() % q),
                 c = static_cast<std::uint32_t>(rng() % q);
      ASSERT_EQ(f.mul(a, b), oracle_mul(f, a, b)) << "q=" << q;
      ASSERT_EQ(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      ASSERT_EQ(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
      ASSERT_EQ(f.mul(a, b), f.mul(b, a));
      ASSERT_EQ(f.add(a, b), f.add(b, a));
      ASSERT_EQ(f.add(a, f.neg(a)), 0u);
    }
  }
}

TEST(FieldArith, InverseAndLagrange) {
  for (std::uint32_t q : prime_powers(256)) {
    const FieldSpec f = FieldSpec::of_order(q);
    for (std::uint32_t a = 1; a < q; ++a) {
      ASSERT_EQ(f.mul(a, f.inv(a)), 1u) << "q=" << q;
      ASSERT_EQ(f.mul(f.inv(a), a), 1u);
      ASSERT_EQ(f.pow(a, q - 1), 1u);
    }
    EXPECT_THROW(f.inv(0), std::domain_error);
  }
}

TEST(FieldArith, PackedBinaryAgrees) {
  for (unsigned k = 1; k <= 8; ++k) {
    const FieldSpec f(2, k);
    std::uint32_t bits = 0;
    for (unsigned i = 0; i <= k; ++i) bits |= f.modulus()[i] << i;
    for (std::uint32_t a = 0; a < f.q(); ++a)
      for (std::uint32_t b = 0; b < f.q(); ++b) ASSERT_EQ(field::gf2_packed_mul(a, b, bits, k), f.mul(a, b));
  }
}

TEST(FieldElement, Operators) {
  const FieldSpec f = FieldSpec::of_order(9);
  const auto a = f.element(5), b = f.element(7);
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ(-(-a), a);
  EXPECT_EQ(a.pow(8), f.one());
  EXPECT_EQ(a * a.inv(), f.one());
  EXPECT_THROW(f.zero().inv(), std::domain_error);
  EXPECT_THROW(a / f.zero(), std::domain_error);
  const FieldSpec g = FieldSpec::of_order(3);
  EXPECT_THROW(g.one() + f.one(), std::invalid_argument);
  EXPECT_THROW(f.element(9), std::invalid_argument);
}

TEST(Primes, AgreeWithSieve) {
  const std::uint32_t limit = 2'000'000;
  std::vector<char> sieve(limit + 1, 1);
  sieve[0] = sieve[1] = 0;
  for (std::uint32_t i = 2; i * i <= limit; ++i)
    if (sieve[i])
      for (std::uint32_t j = i * i; j <= limit; j += i) sieve[j] = 0;
  for (std::uint32_t n = 0; n <= limit; ++n) ASSERT_EQ(is_prime(n), sieve[n] != 0) << n;
}

TEST(Primes, LargeKnownValues) {
  EXPECT_TRUE(is_prime(2305843009213693951ull));    // 2^61 - 1
  EXPECT_TRUE(is_prime(18446744073709551557ull));   // largest 64-bit prime
  EXPECT_FALSE(is_prime(3215031751ull));            // strong pseudoprime to 2, 3, 5, 7
  EXPECT_FALSE(is_prime(3825123056546413051ull));   // strong pseudoprime to bases up to 23
  EXPECT_EQ(prev_prime(100), 97u);
  EXPECT_EQ(prev_prime(2), 2u);
  EXPECT_FALSE(prev_prime(1).has_value());
}

TEST(Primes, PrimePowers) {
  EXPECT_EQ(as_prime_power(1024)->p, 2u);
  EXPECT_EQ(as_prime_power(1024)->k, 10u);
  EXPECT_EQ(as_prime_power(343)->p, 7u);
  EXPECT_FALSE(as_prime_power(12).has_value());
  EXPECT_FALSE(as_prime_power(1).has_value());
}
