#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c4lab/field.hpp"
#include "c4lab/geometry.hpp"
#include "c4lab/graph.hpp"

namespace c4lab::polarity {

/// Pairs point i with line sigma[i] of a plane.
struct Polarity {
  std::shared_ptr<const geometry::ProjectivePlane> plane;
  std::vector<std::uint32_t> sigma;

  std::uint32_t q() const noexcept { return plane->q; }

  /// `q` on the first row, then sigma one index per row.
  std::string to_text() const;
  static Polarity from_text(std::string_view text, std::shared_ptr<const geometry::ProjectivePlane> plane);
};

/// Point [a:b:c] goes to the line ax+by+cz = 0. Because build_pg2 indexes
/// lines by the same triples as points, sigma is the identity.
Polarity orthogonal_polarity(const field::FieldSpec& spec);

struct PolarityVerdict {
  bool ok = false;
  std::string message;
  /// (i, j) with point j on line sigma[i] but point i not on line sigma[j].
  std::optional<std::pair<std::uint32_t, std::uint32_t>> witness;
};

/// Symmetry of the incidence matrix whose columns follow sigma.
PolarityVerdict verify_polarity(const Polarity& pi);

class BaerViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct PolarityGraph {
  std::uint32_t q = 0;
  graph::Graph graph;
  std::vector<graph::Vertex> absolute_points;
  std::uint64_t m_pi = 0;

  std::uint64_t absolute_count() const noexcept { return absolute_points.size(); }
  bool orthogonal() const noexcept { return m_pi == 0; }
};

/// Builds G(pi): x ~ y (x != y) iff x lies on line sigma[y]; absolute points
/// are recorded but never become loops. Throws std::invalid_argument when
/// verify_polarity fails and BaerViolation when a(pi) - (q+1) is not a
/// nonnegative multiple of sqrt(q) or any other structural invariant fails.
/// `check_c4_free` runs the O(q^4) codegree scan.
PolarityGraph polarity_graph(const Polarity& pi, bool check_c4_free = true);

/// Orthogonal polarity graph of order q (the Erdős–Rényi graph ER_q).
PolarityGraph er_graph(std::uint32_t q, bool check_c4_free = true);

/// Edge count of G(pi): q(q+1)^2/2 - m sqrt(q)/2. Requires m = 0 unless q is a square.
std::uint64_t polarity_edge_count(std::uint64_t q, std::uint64_t m_pi);

/// The degree-(q+1) vertex w with N(w) equal to the set of degree-q vertices.
/// Throws std::invalid_argument("odd order") for odd q or non-orthogonal
/// input, and std::logic_error when no unique such vertex exists.
graph::Vertex special_vertex_w(const PolarityGraph& g);

struct IndependenceVerdict {
  bool ok = true;
  std::optional<graph::Edge> witness;
};

/// Degree-q vertices (q taken from the graph) form an independent set.
IndependenceVerdict degree_q_independence(const graph::Graph& g, std::uint32_t q);
inline IndependenceVerdict degree_q_independence(const PolarityGraph& g) { return degree_q_independence(g.graph, g.q); }

}  // namespace c4lab::polarity
