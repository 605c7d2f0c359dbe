#include "c4lab/extremal.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "c4lab/primes.hpp"

namespace c4lab::extremal {

using exact::Certainty;
using exact::Int;

namespace {

struct EdgeSlot {
  std::uint32_t u;
  std::uint32_t v;
};

std::vector<EdgeSlot> all_pairs(std::uint32_t n) {
  std::vector<EdgeSlot> out;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) out.push_back({u, v});
  }
  return out;
}

// Bitmask graph on at most 16 vertices.
struct SmallGraph {
  std::uint32_t adj[16] = {};

  // 4-cycles that the edge uv would close: paths u-a-b-v.
  std::uint32_t new_cycles(std::uint32_t u, std::uint32_t v) const {
    std::uint32_t total = 0;
    std::uint32_t nu = adj[u] & ~(1u << v);
    const std::uint32_t target = adj[v] & ~(1u << u);
    while (nu) {
      const int a = std::countr_zero(nu);
      nu &= nu - 1;
      total += static_cast<std::uint32_t>(std::popcount(adj[a] & target));
    }
    return total;
  }
  bool closes_c4(std::uint32_t u, std::uint32_t v) const {
    std::uint32_t nu = adj[u] & ~(1u << v);
    const std::uint32_t target = adj[v] & ~(1u << u);
    while (nu) {
      const int a = std::countr_zero(nu);
      nu &= nu - 1;
      if (adj[a] & target) return true;
    }
    return false;
  }
  void add(std::uint32_t u, std::uint32_t v) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  void remove(std::uint32_t u, std::uint32_t v) {
    adj[u] &= ~(1u << v);
    adj[v] &= ~(1u << u);
  }
};

// Vertex 0 is taken to have maximum degree d with N(0) = {1, ..., d}; every
// relabelling of a C4-free graph has this form for some d. The remaining pairs
// are searched depth-first with every degree capped at d.
class TuranSearch {
 public:
  explicit TuranSearch(std::uint32_t n) : n_(n) {
    for (const auto& p : all_pairs(n))
      if (p.u != 0) pairs_.push_back(p);
  }

  void run() {
    if (n_ < 2) return;
    for (std::uint32_t d = n_ - 1; d >= 1; --d) {
      // A graph with maximum degree d has at most n d / 2 edges.
      if (static_cast<std::uint64_t>(n_) * d / 2 <= best_) break;
      cap_ = d;
      g_ = SmallGraph{};
      chosen_.clear();
      for (std::uint32_t v = 1; v <= d; ++v) {
        g_.add(0, v);
        chosen_.push_back({0, v});
      }
      dfs(0, d);
    }
  }
  std::uint64_t best() const { return best_; }
  const std::vector<graph::Edge>& witness() const { return witness_; }

 private:
  std::uint32_t degree(std::uint32_t v) const { return static_cast<std::uint32_t>(std::popcount(g_.adj[v])); }

  bool can_add(std::uint32_t u, std::uint32_t v) const {
    return degree(u) < cap_ && degree(v) < cap_ && !g_.closes_c4(u, v);
  }

  // Each pair of vertices has at most one common neighbor, so sum C(d, 2)
  // stays within C(n, 2). Raising the lowest degrees first is the cheapest
  // way to spend that budget and caps how many edges can still be added.
  std::uint64_t degree_budget_cap() const {
    std::uint32_t deg[16];
    std::int64_t budget = static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
    for (std::uint32_t v = 0; v < n_; ++v) {
      deg[v] = degree(v);
      budget -= static_cast<std::int64_t>(deg[v]) * (deg[v] - (deg[v] > 0)) / 2;
    }
    std::uint64_t increments = 0;
    while (true) {
      std::uint32_t lo = 1;
      for (std::uint32_t v = 2; v < n_; ++v)
        if (deg[v] < deg[lo]) lo = v;
      if (deg[lo] >= cap_ || budget < static_cast<std::int64_t>(deg[lo])) break;
      budget -= deg[lo];
      ++deg[lo];
      ++increments;
    }
    return increments / 2;
  }

  std::uint64_t addable_from(std::size_t idx) const {
    std::uint64_t addable = 0;
    for (std::size_t i = idx; i < pairs_.size(); ++i) {
      if (can_add(pairs_[i].u, pairs_[i].v)) ++addable;
    }
    return addable;
  }

  void dfs(std::size_t idx, std::uint64_t count) {
    if (count > best_) {
      best_ = count;
      witness_ = chosen_;
    }
    if (idx == pairs_.size()) return;
    if (count + degree_budget_cap() <= best_) return;
    if (count + addable_from(idx) <= best_) return;
    for (std::size_t i = idx; i < pairs_.size(); ++i) {
      const auto [u, v] = pairs_[i];
      if (!can_add(u, v)) continue;
      g_.add(u, v);
      chosen_.push_back({u, v});
      dfs(i + 1, count + 1);
      chosen_.pop_back();
      g_.remove(u, v);
      // Skipping edge i: bound the remainder again.
      if (count + addable_from(i + 1) <= best_) return;
    }
  }

  std::uint32_t n_;
  std::uint32_t cap_ = 0;
  std::vector<EdgeSlot> pairs_;
  SmallGraph g_;
  std::vector<graph::Edge> chosen_;
  std::vector<graph::Edge> witness_;
  std::uint64_t best_ = 0;
};

class SupersatSearch {
 public:
  SupersatSearch(std::uint32_t n, std::uint64_t target) : pairs_(all_pairs(n)), target_(target) {}

  void run() { dfs(0, 0, 0); }
  std::uint64_t best() const { return best_; }
  const std::vector<graph::Edge>& witness() const { return witness_; }

 private:
  void dfs(std::size_t idx, std::uint64_t edges, std::uint64_t cycles) {
    if (cycles >= best_) return;
    if (edges == target_) {
      best_ = cycles;
      witness_ = chosen_;
      return;
    }
    if (edges + (pairs_.size() - idx) < target_) return;
    const auto [u, v] = pairs_[idx];
    const std::uint64_t extra = g_.new_cycles(u, v);
    g_.add(u, v);
    chosen_.push_back({u, v});
    dfs(idx + 1, edges + 1, cycles + extra);
    chosen_.pop_back();
    g_.remove(u, v);
    dfs(idx + 1, edges, cycles);
  }

  std::vector<EdgeSlot> pairs_;
  std::uint64_t target_;
  SmallGraph g_;
  std::vector<graph::Edge> chosen_;
  std::vector<graph::Edge> witness_;
  std::uint64_t best_ = std::numeric_limits<std::uint64_t>::max();
};

Int scale(unsigned bits) { return Int(1) << bits; }

}  // namespace

std::uint64_t reiman_bound(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("reiman_bound: n must be >= 1");
  // floor((n + n sqrt(4n-3)) / 4) = floor((n + floor(sqrt(n^2 (4n-3)))) / 4)
  const Int nn = n;
  const Int r = exact::iroot(nn * nn * (4 * nn - 3), 2);
  return static_cast<std::uint64_t>((nn + r) / 4);
}

FurediValue furedi_value(std::uint64_t q) {
  if (q < 1) throw std::invalid_argument("furedi_value: q must be >= 1");
  FurediValue out;
  out.value = q * (q + 1) * (q + 1) / 2;
  out.excluded_q = q == 1 || q == 7 || q == 9 || q == 11 || q == 13;
  return out;
}

TuranRecord turan_bruteforce(std::uint32_t n) {
  if (n > kMaxTuranBruteforce) throw std::invalid_argument("turan_bruteforce: n must be <= 10");
  TuranSearch search(n);
  search.run();
  TuranRecord r;
  r.n = n;
  r.ex_value = search.best();
  r.method = "bruteforce";
  r.witness = search.witness();
  return r;
}

SupersatRecord h_bruteforce(std::uint32_t n, std::uint64_t t) {
  if (n > kMaxSupersatBruteforce) throw std::invalid_argument("h_bruteforce: n must be <= 9");
  const std::uint64_t ex = turan_bruteforce(n).ex_value;
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  if (ex + t > pairs) throw std::invalid_argument("h_bruteforce: ex(n, C4) + t exceeds C(n, 2)");
  SupersatSearch search(n, ex + t);
  search.run();
  SupersatRecord r;
  r.n = n;
  r.t = t;
  r.edges = ex + t;
  r.min_c4 = search.best();
  r.witness = search.witness();
  return r;
}

PrimeWindow prime_in_interval(std::uint64_t x) {
  if (x < 2) throw std::invalid_argument("prime_in_interval: x must be >= 2");
  PrimeWindow w;
  w.x = x;
  w.prime = prev_prime(x);
  if (w.prime) {
    // x - p <= x^(21/40)  <=>  (x - p)^40 <= x^21
    w.in_window = exact::ipow(Int(x - *w.prime), 40) <= exact::ipow(Int(x), 21);
  }
  return w;
}

LowerBoundChain turan_lower_bound(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("turan_lower_bound: n must be >= 3");
  LowerBoundChain c;
  c.n = n;
  const Int nn = n;
  const Int s = exact::iroot(4 * nn - 3, 2);
  c.x_floor = static_cast<std::uint64_t>((s - 1) / 2);
  if (c.x_floor < 2) throw std::domain_error("empty prime window");
  c.window = prime_in_interval(c.x_floor);
  if (!c.window.prime) throw std::domain_error("empty prime window");
  c.p = *c.window.prime;
  const Int p = c.p;
  c.bound = p * (p + 1) * (p + 1) / 2;

  const double nd = static_cast<double>(n);
  c.formula_approx = 0.5 * (std::pow(nd, 1.5) - 3.0 * std::pow(nd, 1.2625) + nd);

  // 1.2625 = 101/80 and 0.2625 = 21/80. Refine the enclosures until each
  // comparison is decided.
  for (unsigned bits = 64; bits <= 1024 && c.p_check == Certainty::Undecided; bits *= 2) {
    const auto root_n = exact::power_bracket(nn, 1, 2, bits);
    const auto small = exact::power_bracket(nn, 21, 80, bits);
    const Int lhs_lo = (p + 1) * scale(bits) + small.lo;
    const Int lhs_hi = (p + 1) * scale(bits) + small.hi;
    if (lhs_lo >= root_n.hi) {
      c.p_check = Certainty::True;
    } else if (lhs_hi < root_n.lo) {
      c.p_check = Certainty::False;
    }
  }
  for (unsigned bits = 64; bits <= 1024 && c.bound_check == Certainty::Undecided; bits *= 2) {
    const auto big = exact::power_bracket(nn, 3, 2, bits);
    const auto mid = exact::power_bracket(nn, 101, 80, bits);
    const Int rhs_hi = big.hi - 3 * mid.lo + nn * scale(bits);
    const Int rhs_lo = big.lo - 3 * mid.hi + nn * scale(bits);
    const Int lhs = 2 * c.bound * scale(bits);
    if (lhs >= rhs_hi) {
      c.bound_check = Certainty::True;
    } else if (lhs < rhs_lo) {
      c.bound_check = Certainty::False;
    }
  }
  c.chain_holds = c.window.in_window && c.p_check == Certainty::True && c.bound_check == Certainty::True;
  return c;
}

CorollaryDecision corollary_turan_decision(std::uint64_t q, std::uint64_t lambda_lower, std::int64_t slack) {
  if (q % 2 != 0 || q == 0) throw std::invalid_argument("corollary_turan_decision: q must be even");
  CorollaryDecision d;
  d.q = q;
  d.lambda_lower = lambda_lower;
  d.slack = slack;
  const auto qi = static_cast<std::int64_t>(q);
  d.threshold = qi * (qi + 1) * (qi + 1) / 2 - qi / 2 + slack;
  const auto lambda = static_cast<std::int64_t>(lambda_lower);
  if (lambda >= d.threshold) {
    d.branch = 1;
    d.bound = lambda;
    d.statement = "ex(q^2+q+1, C4) = lambda(q) = " + std::to_string(lambda);
  } else {
    d.branch = 2;
    d.bound = d.threshold;
    d.statement = "ex(q^2+q+1, C4) < " + std::to_string(d.threshold);
  }
  return d;
}

}  // namespace c4lab::extremal
