#include "c4lab/polarity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace c4lab::polarity {

namespace {

std::uint64_t isqrt(std::uint64_t x) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

std::string Polarity::to_text() const {
  std::ostringstream os;
  os << q() << '\n';
  for (std::uint32_t s : sigma) os << s << '\n';
  return os.str();
}

Polarity Polarity::from_text(std::string_view text, std::shared_ptr<const geometry::ProjectivePlane> plane) {
  std::istringstream is{std::string(text)};
  std::vector<long long> values;
  std::string tok;
  while (is >> tok) {
    if (tok.starts_with("#")) {
      std::getline(is, tok);
      continue;
    }
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw geometry::ParseError("polarity file: expected an integer, got `" + tok + "`");
    }
  }
  if (values.empty()) throw geometry::ParseError("polarity file: missing order");
  if (values[0] != static_cast<long long>(plane->q)) throw geometry::ParseError("polarity file: order does not match plane");
  if (values.size() - 1 != plane->size()) throw geometry::ParseError("polarity file: sigma has the wrong length");
  Polarity pi{std::move(plane), {}};
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < 0) throw geometry::ParseError("polarity file: negative index");
    pi.sigma.push_back(static_cast<std::uint32_t>(values[i]));
  }
  return pi;
}

Polarity orthogonal_polarity(const field::FieldSpec& spec) {
  auto plane = std::make_shared<const geometry::ProjectivePlane>(geometry::build_pg2(spec));
  std::vector<std::uint32_t> sigma(plane->size());
  std::iota(sigma.begin(), sigma.end(), 0u);
  return Polarity{std::move(plane), std::move(sigma)};
}

PolarityVerdict verify_polarity(const Polarity& pi) {
  PolarityVerdict v;
  const auto& s = pi.plane->structure;
  const std::size_t n = s.n_points();
  if (pi.sigma.size() != n || s.n_lines() != n) {
    v.message = "sigma length does not match the plane";
    return v;
  }
  std::vector<std::uint8_t> seen(n, 0);
  for (std::uint32_t x : pi.sigma) {
    if (x >= n || seen[x]) {
      v.message = "sigma is not a permutation";
      return v;
    }
    seen[x] = 1;
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j : s.line(pi.sigma[i])) {
      if (!s.incident(i, pi.sigma[j])) {
        v.message = "incidence matrix is not symmetric at (" + std::to_string(j) + ", " + std::to_string(i) + ")";
        v.witness = std::make_pair(i, j);
        return v;
      }
    }
  }
  v.ok = true;
  return v;
}

std::uint64_t polarity_edge_count(std::uint64_t q, std::uint64_t m_pi) {
  const std::uint64_t full = q * (q + 1) * (q + 1);
  if (m_pi == 0) return full / 2;
  const std::uint64_t s = isqrt(q);
  if (s * s != q) throw std::invalid_argument("polarity_edge_count: m_pi > 0 needs square q");
  return (full - m_pi * s) / 2;
}

PolarityGraph polarity_graph(const Polarity& pi, bool check_c4_free) {
  const PolarityVerdict pv = verify_polarity(pi);
  if (!pv.ok) throw std::invalid_argument("not a polarity: " + pv.message);
  const auto& s = pi.plane->structure;
  const std::uint32_t n = s.n_points();
  const std::uint64_t q = pi.q();

  PolarityGraph out;
  out.q = pi.q();
  std::vector<graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (q + 1) / 2 + 1);
  for (std::uint32_t y = 0; y < n; ++y) {
    for (std::uint32_t x : s.line(pi.sigma[y])) {
      if (x == y) {
        out.absolute_points.push_back(y);
      } else if (x < y) {
        edges.push_back({x, y});
      }
    }
  }
  out.graph = graph::Graph::from_edges(n, edges);

  const std::uint64_t a = out.absolute_points.size();
  if (a < q + 1) throw BaerViolation("Baer violation: fewer than q+1 absolute points");
  const std::uint64_t excess = a - (q + 1);
  const std::uint64_t root = isqrt(q);
  if (excess == 0) {
    out.m_pi = 0;
  } else if (root * root == q && excess % root == 0) {
    out.m_pi = excess / root;
  } else {
    throw BaerViolation("Baer violation: a(pi) - (q+1) = " + std::to_string(excess) +
                        " is not a multiple of sqrt(q)");
  }

  std::vector<std::uint8_t> absolute(n, 0);
  for (auto v : out.absolute_points) absolute[v] = 1;
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint64_t d = out.graph.degree(v);
    if (d != (absolute[v] ? q : q + 1)) {
      throw BaerViolation("vertex " + std::to_string(v) + " has degree " + std::to_string(d) +
                          " inconsistent with its absolute status");
    }
  }
  if (out.graph.m() != polarity_edge_count(q, out.m_pi)) throw BaerViolation("edge count disagrees with q(q+1)^2/2 - m sqrt(q)/2");
  if (check_c4_free && !graph::is_c4_free(out.graph)) throw BaerViolation("polarity graph contains a 4-cycle");
  return out;
}

PolarityGraph er_graph(std::uint32_t q, bool check_c4_free) {
  return polarity_graph(orthogonal_polarity(field::FieldSpec::of_order(q)), check_c4_free);
}

graph::Vertex special_vertex_w(const PolarityGraph& g) {
  if (g.q % 2 != 0) throw std::invalid_argument("odd order");
  if (!g.orthogonal()) throw std::invalid_argument("special vertex needs an orthogonal polarity graph");
  std::vector<graph::Vertex> low;
  for (graph::Vertex v = 0; v < g.graph.n(); ++v) {
    if (g.graph.degree(v) == g.q) low.push_back(v);
  }
  std::optional<graph::Vertex> found;
  for (graph::Vertex v = 0; v < g.graph.n(); ++v) {
    if (g.graph.degree(v) != g.q + 1) continue;
    const auto nb = g.graph.neighbors(v);
    // N(w) has q+1 vertices and S_q has q+1 for an orthogonal graph, so
    // equality is a straight comparison of the sorted lists.
    if (std::equal(nb.begin(), nb.end(), low.begin(), low.end())) {
      if (found) throw std::logic_error("special vertex is not unique");
      found = v;
    }
  }
  if (!found) throw std::logic_error("special vertex not found");
  return *found;
}

IndependenceVerdict degree_q_independence(const graph::Graph& g, std::uint32_t q) {
  IndependenceVerdict out;
  for (graph::Vertex u = 0; u < g.n(); ++u) {
    if (g.degree(u) != q) continue;
    for (graph::Vertex v : g.neighbors(u)) {
      if (v > u && g.degree(v) == q) {
        out.ok = false;
        out.witness = graph::Edge{u, v};
        return out;
      }
    }
  }
  return out;
}

}  // namespace c4lab::polarity
