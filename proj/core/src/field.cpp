#include "c4lab/field.hpp"

#include <algorithm>
#include <sstream>

#include "c4lab/primes.hpp"

namespace c4lab::field {

namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a[i]) + p - b[i]) % p);
  }
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  result = poly_mod(result, m, p);
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
    e >>= 1;
    if (e > 0) base = poly_mod(poly_mul(base, base, p), m, p);
  }
  return result;
}

std::vector<unsigned> prime_divisors(unsigned k) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d <= k; ++d) {
    if (k % d == 0) {
      out.push_back(d);
      while (k % d == 0) k /= d;
    }
  }
  return out;
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t t = static_cast<std::uint64_t>(a[i]) * b[j] % p;
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + t) % p);
    }
  }
  trim(out);
  return out;
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  Poly mm = m;
  trim(mm);
  if (mm.empty()) throw std::invalid_argument("polynomial division by zero");
  trim(a);
  const std::size_t dm = mm.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(mm.back(), p);
  while (!a.empty() && a.size() - 1 >= dm) {
    const std::size_t shift = a.size() - 1 - dm;
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t t = factor * mm[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f_in, std::uint32_t p) {
  Poly f = f_in;
  trim(f);
  if (f.size() < 2) throw std::invalid_argument("is_irreducible: degree must be >= 1");
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  // make monic
  const std::uint32_t lead_inv = inv_mod_p(f.back(), p);
  for (auto& c : f) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * lead_inv % p);
  if (k == 1) return true;

  const Poly x = poly_mod(Poly{0, 1}, f, p);
  // frob[i] = x^(p^i) mod f
  std::vector<Poly> frob{x};
  for (unsigned i = 1; i <= k; ++i) frob.push_back(poly_pow_mod(frob.back(), p, f, p));
  if (poly_sub(frob[k], x, p) != Poly{}) return false;
  for (unsigned r : prime_divisors(k)) {
    Poly g = poly_gcd(f, poly_sub(frob[k / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Poly find_irreducible(std::uint32_t p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p = " + std::to_string(p) + " is not prime");
  if (k < 1 || k > 20) throw std::invalid_argument("find_irreducible: degree must lie in [1, 20]");
  Poly f(k + 1, 0);
  f[k] = 1;
  // Odometer over the k low coefficients with c_0 as the least significant digit
  // walks candidates in the required order.
  while (true) {
    if (is_irreducible(f, p)) return f;
    unsigned i = 0;
    while (i < k && f[i] == p - 1) f[i++] = 0;
    if (i == k) break;
    ++f[i];
  }
  throw std::logic_error("find_irreducible: exhausted candidates");
}

std::uint32_t gf2_packed_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus_bits, unsigned k) {
  std::uint32_t result = 0;
  const std::uint32_t top = 1u << k;
  while (b != 0) {
    if (b & 1) result ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= modulus_bits;
  }
  return result;
}

FieldSpec::FieldSpec(std::uint32_t p, unsigned k) {
  if (!is_prime(p)) throw std::invalid_argument("FieldSpec: characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("FieldSpec: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::out_of_range("FieldSpec: field order exceeds 1024");
  }

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->k = k;
  t->q = static_cast<std::uint32_t>(q);
  t->modulus = find_irreducible(p, k);
  t_ = t;

  const std::uint32_t Q = t->q;
  auto digitwise = [p, k](std::uint32_t a, std::uint32_t b, bool negate_b) {
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    for (unsigned i = 0; i < k; ++i) {
      const std::uint32_t da = a % p;
      std::uint32_t db = b % p;
      if (negate_b) db = (p - db) % p;
      out += ((da + db) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  };
  t->neg.resize(Q);
  t->add.resize(static_cast<std::size_t>(Q) * Q);
  for (std::uint32_t a = 0; a < Q; ++a) {
    t->neg[a] = static_cast<std::uint16_t>(digitwise(0, a, true));
    for (std::uint32_t b = 0; b < Q; ++b) {
      t->add[static_cast<std::size_t>(a) * Q + b] = static_cast<std::uint16_t>(digitwise(a, b, false));
    }
  }

  // Primitive element by search; the modulus need not be primitive.
  std::uint32_t gen = 0;
  for (std::uint32_t g = 1; g < Q && gen == 0; ++g) {
    std::uint32_t x = g;
    std::uint32_t order = 1;
    while (x != 1) {
      x = mul_reference(x, g);
      ++order;
    }
    if (order == Q - 1) gen = g;
  }
  if (Q == 2) gen = 1;

  t->exp.assign(2 * (Q - 1), 0);
  t->log.assign(Q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < Q - 1; ++i) {
    t->exp[i] = static_cast<std::uint16_t>(x);
    t->exp[i + Q - 1] = static_cast<std::uint16_t>(x);
    t->log[x] = static_cast<std::uint16_t>(i);
    x = mul_reference(x, gen);
  }
}

FieldSpec FieldSpec::of_order(std::uint32_t q) {
  auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument("FieldSpec: " + std::to_string(q) + " is not a prime power");
  if (q > kMaxOrder) throw std::out_of_range("FieldSpec: field order exceeds 1024");
  return FieldSpec(static_cast<std::uint32_t>(pp->p), pp->k);
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("field inverse of zero");
  const std::uint32_t n = t_->q - 1;
  return t_->exp[(n - t_->log[a]) % n];
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = t_->q - 1;
  return t_->exp[static_cast<std::uint64_t>(t_->log[a]) * (e % n) % n];
}

std::uint32_t FieldSpec::mul_reference(std::uint32_t a, std::uint32_t b) const {
  return encode(poly_mod(poly_mul(coeffs(a), coeffs(b), p()), modulus(), p()));
}

Poly FieldSpec::coeffs(std::uint32_t code) const {
  Poly c(k(), 0);
  for (unsigned i = 0; i < k(); ++i) {
    c[i] = code % p();
    code /= p();
  }
  return c;
}

std::uint32_t FieldSpec::encode(std::span<const std::uint32_t> coeffs) const {
  std::uint32_t code = 0;
  std::uint32_t scale = 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p()) throw std::invalid_argument("coefficient out of range");
    if (i >= k()) {
      if (coeffs[i] != 0) throw std::invalid_argument("coefficient vector longer than extension degree");
      continue;
    }
    code += coeffs[i] * scale;
    scale *= p();
  }
  return code;
}

FieldElement FieldSpec::element(std::uint32_t code) const {
  return FieldElement(*this, code);
}
FieldElement FieldSpec::zero() const { return element(0); }
FieldElement FieldSpec::one() const { return element(1); }
FieldElement FieldSpec::from_coeffs(std::span<const std::uint32_t> c) const { return element(encode(c)); }

std::vector<FieldElement> FieldSpec::elements() const {
  std::vector<FieldElement> out;
  out.reserve(q());
  for (std::uint32_t c = 0; c < q(); ++c) out.emplace_back(*this, c);
  return out;
}

FieldElement::FieldElement(FieldSpec spec, std::uint32_t code) : spec_(std::move(spec)), code_(code) {
  if (code_ >= spec_.q()) throw std::invalid_argument("FieldElement: code out of range");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(spec_ == o.spec_)) throw std::invalid_argument("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {spec_, spec_.add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {spec_, spec_.sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {spec_, spec_.mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {spec_, spec_.mul(code_, spec_.inv(o.code_))};
}
FieldElement FieldElement::operator-() const { return {spec_, spec_.neg(code_)}; }
FieldElement FieldElement::inv() const { return {spec_, spec_.inv(code_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {spec_, spec_.pow(code_, e)}; }

std::string FieldElement::to_string() const {
  const Poly c = coeffs();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace c4lab::field
