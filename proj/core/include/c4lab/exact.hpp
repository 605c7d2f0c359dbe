#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace c4lab::exact {

using Int = boost::multiprecision::cpp_int;

Int ipow(Int base, unsigned exp);

/// floor(x^(1/k)) for x >= 0, k >= 1.
Int iroot(const Int& x, unsigned k);

/// Fixed-point enclosure of n^(num/den): lo <= n^(num/den) * 2^bits <= hi,
/// with hi - lo <= 1 (hi == lo when the scaled value is an integer).
struct Bracket {
  Int lo;
  Int hi;
  unsigned bits = 0;
};

Bracket power_bracket(const Int& n, unsigned num, unsigned den, unsigned bits);

/// Sign of a quantity known only through an enclosure [lo, hi].
enum class Certainty { True, False, Undecided };

}  // namespace c4lab::exact
