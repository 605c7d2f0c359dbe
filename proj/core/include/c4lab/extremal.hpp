#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "c4lab/exact.hpp"
#include "c4lab/graph.hpp"

namespace c4lab::extremal {

/// floor(n/4 (1 + sqrt(4n-3))), computed with integer square roots.
std::uint64_t reiman_bound(std::uint64_t n);

struct FurediValue {
  std::uint64_t value = 0;  // q(q+1)^2 / 2
  bool excluded_q = false;  // q in {1, 7, 9, 11, 13}
};

FurediValue furedi_value(std::uint64_t q);

struct TuranRecord {
  std::uint32_t n = 0;
  std::uint64_t ex_value = 0;
  std::optional<std::uint64_t> extremal_count;  // up to isomorphism; not computed by the DFS
  std::string method;                            // "bruteforce" or "formula"
  std::vector<graph::Edge> witness;              // first extremal graph found
};

inline constexpr std::uint32_t kMaxTuranBruteforce = 10;
inline constexpr std::uint32_t kMaxSupersatBruteforce = 9;

/// Exact ex(n, C4) by depth-first search over edges in lexicographic order,
/// one pass per maximum degree d with vertex 0 joined to 1..d. An edge is
/// taken only if it closes no 4-cycle and respects the degree cap; a branch
/// is cut when the addable edges or the codegree budget cannot lift it above
/// the incumbent.
TuranRecord turan_bruteforce(std::uint32_t n);

struct SupersatRecord {
  std::uint32_t n = 0;
  std::uint64_t t = 0;
  std::uint64_t edges = 0;     // ex(n, C4) + t
  std::uint64_t min_c4 = 0;    // h(n, t)
  std::vector<graph::Edge> witness;
};

/// h(n, t): the minimum 4-cycle count over n-vertex graphs with ex(n, C4) + t
/// edges, by exhaustive search pruned on the running cycle count.
SupersatRecord h_bruteforce(std::uint32_t n, std::uint64_t t);

struct PrimeWindow {
  std::uint64_t x = 0;
  std::optional<std::uint64_t> prime;  // largest prime <= x
  bool in_window = false;              // prime >= x - x^0.525, i.e. (x-p)^40 <= x^21
};

/// Largest prime at most x and whether it lies in [x - x^0.525, x]. An empty
/// window is reported, not thrown. Throws std::invalid_argument for x < 2.
PrimeWindow prime_in_interval(std::uint64_t x);

struct LowerBoundChain {
  std::uint64_t n = 0;
  std::uint64_t x_floor = 0;       // floor((-1 + sqrt(4n-3)) / 2)
  PrimeWindow window;
  std::uint64_t p = 0;
  exact::Int bound;                // p(p+1)^2 / 2
  double formula_approx = 0.0;     // (n^1.5 - 3 n^1.2625 + n) / 2, for display
  exact::Certainty p_check = exact::Certainty::Undecided;      // p >= sqrt(n) - n^0.2625 - 1
  exact::Certainty bound_check = exact::Certainty::Undecided;  // bound >= formula
  bool chain_holds = false;
};

/// Throws std::domain_error("empty prime window") when no prime <= x exists.
LowerBoundChain turan_lower_bound(std::uint64_t n);

struct CorollaryDecision {
  std::uint64_t q = 0;
  std::uint64_t lambda_lower = 0;
  std::int64_t slack = 0;
  std::int64_t threshold = 0;  // q(q+1)^2/2 - q/2 + slack
  int branch = 0;              // 1: ex = lambda; 2: ex < threshold
  std::int64_t bound = 0;      // max(lambda, threshold)
  std::string statement;
};

/// Case split for even q given a certified lower bound on the largest polarity
/// graph and the caller's stand-in for the o(q) term.
CorollaryDecision corollary_turan_decision(std::uint64_t q, std::uint64_t lambda_lower, std::int64_t slack);

}  // namespace c4lab::extremal
