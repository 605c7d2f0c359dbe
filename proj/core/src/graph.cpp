#include "c4lab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "c4lab/parallel.hpp"

namespace c4lab::graph {

namespace {

std::uint64_t choose2(std::uint64_t x) { return x * (x - (x > 0 ? 1 : 0)) / 2; }

void check_count_limits(const Graph& g) {
  if (g.n() > kMaxCountVertices) throw std::length_error("count_c4: more than 2^17 vertices");
  if (g.max_degree() > kMaxCountDegree) throw std::length_error("count_c4: maximum degree above 2^10");
}

// Visits, for a fixed u, every vertex v reachable by a 2-path u-w-v with
// v > lower_bound, accumulating path counts in `scratch` and the distinct
// endpoints in `touched`. Caller resets.
inline void two_path_pass(const Graph& g, Vertex u, Vertex lower_bound, std::vector<std::uint32_t>& scratch,
                          std::vector<Vertex>& touched) {
  for (Vertex w : g.neighbors(u)) {
    const auto nw = g.neighbors(w);
    auto it = std::upper_bound(nw.begin(), nw.end(), lower_bound);
    for (; it != nw.end(); ++it) {
      const Vertex v = *it;
      if (v == u) continue;
      if (scratch[v]++ == 0) touched.push_back(v);
    }
  }
}

}  // namespace

Graph Graph::from_edges(std::uint32_t n, std::span<const Edge> edges) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  arcs.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    arcs.emplace_back(e.u, e.v);
    arcs.emplace_back(e.v, e.u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.adj_.reserve(arcs.size());
  for (const auto& [a, b] : arcs) {
    ++g.offsets_[a + 1];
    g.adj_.push_back(b);
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::uint32_t Graph::max_degree() const noexcept {
  std::uint64_t best = 0;
  for (std::uint32_t v = 0; v < n_; ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return static_cast<std::uint32_t>(best);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::with_edges_added(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return from_edges(n_, all);
}

Graph Graph::with_edges_removed(std::span<const Edge> gone) const {
  std::vector<Edge> drop;
  for (const Edge& e : gone) {
    if (e.u >= n_ || e.v >= n_ || !has_edge(e.u, e.v)) {
      throw std::invalid_argument("cannot remove missing edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")");
    }
    drop.push_back(normalized(e));
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> keep;
  for (const Edge& e : edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) keep.push_back(e);
  }
  return from_edges(n_, keep);
}

std::string Graph::to_edge_list() const {
  std::ostringstream os;
  os << "# vertices " << n_ << " edges " << m() << '\n';
  for (const Edge& e : edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph Graph::from_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  long long declared_n = -1;
  std::uint64_t max_index = 0;
  bool any = false;
  std::size_t row_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(start, end - start);
    start = end + 1;
    ++row_no;
    const auto first = row.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (row[first] == '#') {
      std::istringstream is{std::string(row.substr(first + 1))};
      std::string word;
      long long value = -1;
      if (is >> word >> value && word == "vertices" && value >= 0) declared_n = value;
      continue;
    }
    std::istringstream is{std::string(row)};
    long long u = -1, v = -1;
    std::string rest;
    if (!(is >> u >> v) || u < 0 || v < 0 || (is >> rest)) {
      throw geometry::ParseError("edge list line " + std::to_string(row_no) + ": expected `u v`");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    max_index = std::max<std::uint64_t>(max_index, static_cast<std::uint64_t>(std::max(u, v)));
    any = true;
  }
  const std::uint32_t n = declared_n >= 0 ? static_cast<std::uint32_t>(declared_n)
                                          : (any ? static_cast<std::uint32_t>(max_index + 1) : 0);
  try {
    return from_edges(n, edges);
  } catch (const std::invalid_argument& e) {
    throw geometry::ParseError(e.what());
  }
}

std::uint32_t codegree(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("codegree: u and v must differ");
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::uint32_t n = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

std::uint64_t count_c4(const Graph& g, unsigned threads) {
  check_count_limits(g);
  const unsigned workers = std::max(1u, std::min<unsigned>(resolve_threads(threads), std::max(1u, g.n())));
  std::vector<std::uint64_t> partial(workers, 0);
  // Each cycle is charged to its largest vertex u and the opposite corner v:
  // paths u-w-v with w, v < u. Neighbor lists are sorted, so the inner scan
  // stops at u, and the running count adds C(c+1,2) - C(c,2) = c per path.
  // Scratch slots carry the owning u in the high half, so nothing is reset.
  run_workers(workers, [&](unsigned wk) {
    std::vector<std::uint64_t> scratch(g.n(), 0);
    std::uint64_t sum = 0;
    for (Vertex u = wk; u < g.n(); u += workers) {
      const std::uint64_t stamp = static_cast<std::uint64_t>(u + 1) << 32;
      for (Vertex w : g.neighbors(u)) {
        if (w >= u) break;
        for (Vertex v : g.neighbors(w)) {
          if (v >= u) break;
          const std::uint64_t slot = scratch[v];
          const std::uint64_t c = (slot & ~0xffffffffull) == stamp ? (slot & 0xffffffffull) : 0;
          sum += c;
          scratch[v] = stamp | (c + 1);
        }
      }
    }
    partial[wk] = sum;
  });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

std::uint64_t count_c4_bruteforce(const Graph& g) {
  if (g.n() > 64) throw std::length_error("count_c4_bruteforce: n must be <= 64");
  const std::uint32_t n = g.n();
  std::vector<std::uint64_t> bits(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) bits[v] |= std::uint64_t{1} << w;
  }
  auto adj = [&](Vertex x, Vertex y) { return (bits[x] >> y) & 1; };
  std::uint64_t total = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        for (Vertex d = c + 1; d < n; ++d) {
          // the three cyclic orders of four labelled vertices
          total += adj(a, b) && adj(b, c) && adj(c, d) && adj(d, a);
          total += adj(a, b) && adj(b, d) && adj(d, c) && adj(c, a);
          total += adj(a, c) && adj(c, b) && adj(b, d) && adj(d, a);
        }
      }
    }
  }
  return total;
}

bool is_c4_free(const Graph& g) {
  std::vector<std::uint32_t> scratch(g.n(), 0);
  std::vector<Vertex> touched;
  bool ok = true;
  for (Vertex u = 0; u < g.n() && ok; ++u) {
    two_path_pass(g, u, u, scratch, touched);
    for (Vertex v : touched) {
      if (scratch[v] > 1) ok = false;
      scratch[v] = 0;
    }
    touched.clear();
  }
  return ok;
}

std::vector<Cycle4> c4_through_edge(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.n() || v >= g.n() || u == v || !g.has_edge(u, v)) {
    throw std::invalid_argument("c4_through_edge: (" + std::to_string(u) + ", " + std::to_string(v) + ") is not an edge");
  }
  std::vector<Cycle4> out;
  const auto nu = g.neighbors(u);
  for (Vertex x : g.neighbors(v)) {
    if (x == u) continue;
    const auto nx = g.neighbors(x);
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nx.size()) {
      if (nu[i] < nx[j]) {
        ++i;
      } else if (nx[j] < nu[i]) {
        ++j;
      } else {
        const Vertex y = nu[i];
        if (y != v && y != x) {
          if (out.size() >= kMaxMaterializedCycles) throw std::length_error("c4_through_edge: too many cycles");
          out.push_back({u, v, x, y});
        }
        ++i;
        ++j;
      }
    }
  }
  return out;
}

std::vector<Vertex> GraphStats::of_degree(std::uint32_t d) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < degrees.size(); ++v) {
    if (degrees[v] == d) out.push_back(v);
  }
  return out;
}

GraphStats up_p2_stats(const Graph& g, std::uint32_t q, unsigned threads) {
  GraphStats s;
  s.q = q;
  const std::uint32_t n = g.n();
  s.degrees.resize(n);
  s.deficiency.resize(n);
  s.uncovered_degree.resize(n);
  std::uint32_t max_d = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::uint32_t d = g.degree(v);
    s.degrees[v] = d;
    max_d = std::max(max_d, d);
    s.two_paths += choose2(d);
    if (d <= q) s.small.push_back(v);
    s.deficiency[v] = d >= q + 1 ? 0 : q + 1 - d;
    s.total_deficiency += s.deficiency[v];
  }
  s.degree_histogram.assign(static_cast<std::size_t>(max_d) + 1, 0);
  for (std::uint32_t d : s.degrees) ++s.degree_histogram[d];

  const unsigned workers = std::max(1u, std::min<unsigned>(resolve_threads(threads), std::max(1u, n)));
  run_workers(workers, [&](unsigned w) {
    std::vector<std::uint32_t> scratch(n, 0);
    std::vector<Vertex> touched;
    for (Vertex u = w; u < n; u += workers) {
      // lower bound below every index: all partners v != u
      for (Vertex x : g.neighbors(u)) {
        for (Vertex v : g.neighbors(x)) {
          if (v != u && scratch[v]++ == 0) touched.push_back(v);
        }
      }
      s.uncovered_degree[u] = n - 1 - static_cast<std::uint32_t>(touched.size());
      for (Vertex v : touched) scratch[v] = 0;
      touched.clear();
    }
  });
  std::uint64_t sum_d0 = 0;
  for (std::uint32_t d0 : s.uncovered_degree) sum_d0 += d0;
  s.uncovered_pairs = sum_d0 / 2;
  return s;
}

ClaimC4Result claim_c4_inequality(const Graph& g, std::span<const Vertex> a) {
  const std::uint32_t n = g.n();
  std::vector<std::uint8_t> in_a(n, 0);
  for (Vertex v : a) {
    if (v >= n) throw std::invalid_argument("claim_c4_inequality: vertex out of range");
    in_a[v] = 1;
  }
  std::vector<Vertex> members;
  for (Vertex v = 0; v < n; ++v) {
    if (in_a[v]) members.push_back(v);
  }
  const auto size_a = static_cast<std::int64_t>(members.size());

  ClaimC4Result r;
  for (Vertex w = 0; w < n; ++w) {
    std::int64_t c = 0;
    for (Vertex x : g.neighbors(w)) c += in_a[x];
    r.two_paths_in_a += c * (c - 1) / 2;
  }

  std::int64_t covered = 0;
  std::vector<std::uint32_t> scratch(n, 0);
  std::vector<Vertex> touched;
  for (Vertex u : members) {
    two_path_pass(g, u, u, scratch, touched);
    for (Vertex v : touched) {
      covered += in_a[v];
      scratch[v] = 0;
    }
    touched.clear();
  }
  r.uncovered_in_a = size_a * (size_a - 1) / 2 - covered;
  r.lhs = 2 * static_cast<std::int64_t>(count_c4(g, 1));
  r.rhs = r.two_paths_in_a + r.uncovered_in_a - size_a * (size_a - 1) / 2;
  r.holds = r.lhs >= r.rhs;
  return r;
}

NeighborhoodFamily neighborhood_family(const Graph& g, std::uint32_t q, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("neighborhood_family: delta must lie in (0, 1)");
  const std::uint32_t n = g.n();
  NeighborhoodFamily out;
  std::vector<std::uint8_t> in_s(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) <= q) {
      in_s[v] = 1;
      out.small.push_back(v);
    }
  }
  const double threshold = delta * static_cast<double>(q);
  std::vector<geometry::Line> lines;
  for (Vertex x = 0; x < n; ++x) {
    std::uint32_t hits = 0;
    for (Vertex y : g.neighbors(x)) hits += in_s[y];
    if (static_cast<double>(hits) >= threshold) {
      out.heavy.push_back(x);
    } else if (g.degree(x) == q + 1) {
      out.light.push_back(x);
      const auto nb = g.neighbors(x);
      lines.emplace_back(nb.begin(), nb.end());
    }
  }
  out.family = geometry::IncidenceStructure(n, std::move(lines));
  out.one_intersecting = geometry::is_one_intersecting(out.family).ok;
  return out;
}

ConvexityResult convexity_bound(std::span<const std::int64_t> a, std::int64_t k, std::int64_t r) {
  ConvexityResult out;
  const auto m = static_cast<std::int64_t>(a.size());
  std::int64_t sum = 0;
  for (std::int64_t x : a) {
    if (x < 0) {
      out.precondition_error = "values must be nonnegative";
      return out;
    }
    sum += x;
  }
  if (m <= 0 || k <= 0) {
    out.precondition_error = "m and k must be positive";
    return out;
  }
  if (r < -m) {
    out.precondition_error = "r must be >= -m";
    return out;
  }
  if (sum < k * m + r) {
    out.precondition_error = "sum of values is below k m + r";
    return out;
  }
  out.preconditions_ok = true;
  for (std::int64_t x : a) out.lhs += x * (x - 1) / 2;
  out.rhs = m * (k * (k - 1) / 2) + r * k;
  out.holds = out.lhs >= out.rhs;
  return out;
}

}  // namespace c4lab::graph
