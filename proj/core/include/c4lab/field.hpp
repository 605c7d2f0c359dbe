#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace c4lab::field {

/// Polynomial over GF(p), coefficients low degree first.
using Poly = std::vector<std::uint32_t>;

/// Lexicographically least monic irreducible polynomial of degree k over GF(p).
/// Candidates are ordered by their non-leading coefficients compared from the
/// x^(k-1) term downwards. Throws std::invalid_argument for non-prime p or k
/// outside [1, 20].
Poly find_irreducible(std::uint32_t p, unsigned k);

/// Rabin's test. f must have degree >= 1.
bool is_irreducible(const Poly& f, std::uint32_t p);

/// Reference polynomial arithmetic mod p, exposed for cross-checks.
Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p);

/// Carry-less multiply of two packed GF(2^k) elements reduced by the packed
/// modulus (bit i = coefficient of x^i, including the x^k bit).
std::uint32_t gf2_packed_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus_bits, unsigned k);

class FieldElement;

/// GF(p^k) with a fixed modulus. Elements are addressed by their code
/// sum_i c_i p^i, which is also their position in the canonical enumeration
/// (zero first, one second). Copies share immutable tables.
class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxOrder = 1024;

  FieldSpec(std::uint32_t p, unsigned k);

  /// Field of order q; q must be a prime power <= kMaxOrder.
  static FieldSpec of_order(std::uint32_t q);

  std::uint32_t p() const noexcept { return t_->p; }
  unsigned k() const noexcept { return t_->k; }
  std::uint32_t q() const noexcept { return t_->q; }
  const Poly& modulus() const noexcept { return t_->modulus; }

  // Code-level arithmetic. Callers guarantee codes are < q.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return t_->add[a * t_->q + b]; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return t_->neg[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return t_->exp[t_->log[a] + t_->log[b]];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;

  /// Multiplication through coefficient vectors and polynomial reduction.
  /// The semantic definition the tables are checked against.
  std::uint32_t mul_reference(std::uint32_t a, std::uint32_t b) const;

  Poly coeffs(std::uint32_t code) const;
  std::uint32_t encode(std::span<const std::uint32_t> coeffs) const;

  FieldElement element(std::uint32_t code) const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;

  /// All q elements in canonical order.
  std::vector<FieldElement> elements() const;

  /// Same underlying field object.
  bool same_as(const FieldSpec& other) const noexcept { return t_ == other.t_; }
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
  }

 private:
  struct Tables {
    std::uint32_t p = 0;
    unsigned k = 0;
    std::uint32_t q = 0;
    Poly modulus;
    std::vector<std::uint16_t> add;
    std::vector<std::uint16_t> neg;
    std::vector<std::uint16_t> exp;  // length 2(q-1), so log a + log b indexes directly
    std::vector<std::uint16_t> log;
  };
  std::shared_ptr<const Tables> t_;
};

/// Value type bound to its field. Mixing elements of different fields throws
/// std::invalid_argument; inverting zero throws std::domain_error.
class FieldElement {
 public:
  FieldElement(FieldSpec spec, std::uint32_t code);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t code() const noexcept { return code_; }
  Poly coeffs() const { return spec_.coeffs(code_); }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.spec_ == b.spec_ && a.code_ == b.code_;
  }

  std::string to_string() const;

 private:
  void check_same(const FieldElement& o) const;

  FieldSpec spec_;
  std::uint32_t code_;
};

}  // namespace c4lab::field
