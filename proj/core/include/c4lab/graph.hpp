#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "c4lab/geometry.hpp"

namespace c4lab::graph {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Edge with u < v.
inline Edge normalized(Edge e) noexcept { return e.u < e.v ? e : Edge{e.v, e.u}; }

/// Simple undirected graph in CSR layout with sorted neighbor arrays.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Deduplicates and sorts. Throws std::invalid_argument on an endpoint
  /// outside [0, n) or a self-loop.
  static Graph from_edges(std::uint32_t n, std::span<const Edge> edges);

  std::uint32_t n() const noexcept { return n_; }
  std::uint64_t m() const noexcept { return adj_.size() / 2; }
  std::uint32_t degree(Vertex v) const { return static_cast<std::uint32_t>(offsets_.at(v + 1) - offsets_[v]); }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_.at(v), adj_.data() + offsets_.at(v + 1)};
  }
  bool has_edge(Vertex u, Vertex v) const;
  std::uint32_t max_degree() const noexcept;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_edges_added(std::span<const Edge> extra) const;
  Graph with_edges_removed(std::span<const Edge> gone) const;

  /// Canonical edge list: a `# vertices N edges M` comment, then `u v` rows
  /// with u < v sorted by (u, v).
  std::string to_edge_list() const;
  /// Accepts `#` comments and rows `u v` in any order or orientation. The
  /// vertex count comes from the `# vertices N` comment when present,
  /// otherwise from the largest index.
  static Graph from_edge_list(std::string_view text);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.adj_ == b.adj_;
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<Vertex> adj_;
};

/// |N(u) ∩ N(v)|; throws std::invalid_argument if u == v.
std::uint32_t codegree(const Graph& g, Vertex u, Vertex v);

/// Input limits for exact counting with 64-bit accumulation.
inline constexpr std::uint32_t kMaxCountVertices = 1u << 17;
inline constexpr std::uint32_t kMaxCountDegree = 1u << 10;

/// Exact number of 4-cycles, equal to half the sum over pairs u < v of
/// C(codeg(u,v), 2). Each cycle is counted once, at its largest vertex.
/// O(sum_w d(w)^2) time, O(n) scratch per worker. threads == 0 uses the default worker count; the result does not
/// depend on it. Throws std::length_error beyond the input limits.
std::uint64_t count_c4(const Graph& g, unsigned threads = 0);

/// Quadruple enumeration, n <= 64.
std::uint64_t count_c4_bruteforce(const Graph& g);

/// Max codegree <= 1, with early exit.
bool is_c4_free(const Graph& g);

/// Ordered quadruple (u, v, x, y) describes the cycle u-v-x-y-u.
using Cycle4 = std::array<Vertex, 4>;

inline constexpr std::size_t kMaxMaterializedCycles = 1'000'000;

/// All 4-cycles through the edge uv, as (u, v, x, y). Throws
/// std::invalid_argument if uv is not an edge and std::length_error past
/// kMaxMaterializedCycles.
std::vector<Cycle4> c4_through_edge(const Graph& g, Vertex u, Vertex v);

struct GraphStats {
  std::uint32_t q = 0;
  std::vector<std::uint32_t> degrees;
  std::vector<std::uint64_t> degree_histogram;  // index = degree
  std::vector<Vertex> small;                    // S: degree <= q
  std::vector<std::uint32_t> deficiency;        // f(v) = max(q+1-d(v), 0)
  std::uint64_t total_deficiency = 0;
  std::uint64_t two_paths = 0;         // |P2| = sum C(d(v), 2)
  std::uint64_t uncovered_pairs = 0;   // |UP|: pairs with codegree 0
  std::vector<std::uint32_t> uncovered_degree;  // d0(v)

  std::vector<Vertex> of_degree(std::uint32_t d) const;
};

GraphStats up_p2_stats(const Graph& g, std::uint32_t q, unsigned threads = 0);

struct ClaimC4Result {
  std::int64_t lhs = 0;  // 2 #C4
  std::int64_t two_paths_in_a = 0;
  std::int64_t uncovered_in_a = 0;
  std::int64_t rhs = 0;  // |P2 ∩ A| + |UP ∩ A| - C(|A|, 2)
  bool holds = false;
};

/// 2-paths are counted with both endpoints in A and any middle vertex.
ClaimC4Result claim_c4_inequality(const Graph& g, std::span<const Vertex> a);

struct NeighborhoodFamily {
  std::vector<Vertex> small;  // S
  std::vector<Vertex> heavy;  // B: |N(x) ∩ S| >= delta q
  std::vector<Vertex> light;  // A: degree q+1, not in B
  geometry::IncidenceStructure family;  // neighborhoods of A, in A order
  bool one_intersecting = false;
  std::size_t size() const noexcept { return family.n_lines(); }
};

NeighborhoodFamily neighborhood_family(const Graph& g, std::uint32_t q, double delta);

struct ConvexityResult {
  bool preconditions_ok = false;
  std::string precondition_error;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
};

/// Evaluates sum C(a_i, 2) >= m C(k, 2) + r k for nonnegative integers with
/// sum a_i >= k m + r, m, k > 0, r >= -m.
ConvexityResult convexity_bound(std::span<const std::int64_t> a, std::int64_t k, std::int64_t r);

}  // namespace c4lab::graph
