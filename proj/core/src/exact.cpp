#include "c4lab/exact.hpp"

#include <stdexcept>

namespace c4lab::exact {

Int ipow(Int base, unsigned exp) {
  Int result = 1;
  while (exp > 0) {
    if (exp & 1) result *= base;
    exp >>= 1;
    if (exp > 0) base *= base;
  }
  return result;
}

Int iroot(const Int& x, unsigned k) {
  if (x < 0) throw std::domain_error("iroot of a negative number");
  if (k == 0) throw std::domain_error("iroot: k must be positive");
  if (x < 2 || k == 1) return x;
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  // 2^ceil(bits/k) is above the root; Newton from above decreases monotonically.
  Int r = Int(1) << ((bits + k - 1) / k);
  while (true) {
    const Int next = ((k - 1) * r + x / ipow(r, k - 1)) / k;
    if (next >= r) break;
    r = next;
  }
  while (ipow(r + 1, k) <= x) ++r;
  while (ipow(r, k) > x) --r;
  return r;
}

Bracket power_bracket(const Int& n, unsigned num, unsigned den, unsigned bits) {
  // floor(n^(num/den) 2^bits) = floor((n^num 2^(bits den))^(1/den))
  const Int scaled = ipow(n, num) << (static_cast<std::size_t>(bits) * den);
  Bracket b;
  b.bits = bits;
  b.lo = iroot(scaled, den);
  b.hi = ipow(b.lo, den) == scaled ? b.lo : b.lo + 1;
  return b;
}

}  // namespace c4lab::exact
