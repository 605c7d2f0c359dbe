#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "c4lab/field.hpp"

namespace c4lab::geometry {

using Line = std::vector<std::uint32_t>;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hypergraph on points [0, n_points). Every line is stored sorted and
/// duplicate-free; the point-to-lines map is its exact transpose. Lines may
/// repeat (families extracted from graphs are multisets).
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  IncidenceStructure(std::uint32_t n_points, std::vector<Line> lines);

  std::uint32_t n_points() const noexcept { return n_points_; }
  std::size_t n_lines() const noexcept { return lines_.size(); }
  const std::vector<Line>& lines() const noexcept { return lines_; }
  const Line& line(std::size_t i) const { return lines_.at(i); }
  const std::vector<std::uint32_t>& lines_through(std::uint32_t point) const { return point_to_lines_.at(point); }

  bool incident(std::uint32_t point, std::size_t line) const;
  std::size_t intersection_size(std::size_t a, std::size_t b) const;

  /// Points and lines swapped.
  IncidenceStructure dual() const;

  /// `points N lines L` followed by one sorted line per row.
  std::string to_text() const;
  static IncidenceStructure from_text(std::string_view text);

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.n_points_ == b.n_points_ && a.lines_ == b.lines_;
  }

 private:
  std::uint32_t n_points_ = 0;
  std::vector<Line> lines_;
  std::vector<std::vector<std::uint32_t>> point_to_lines_;
};

/// If n = q^2+q+1 for some q >= 1, returns q.
std::optional<std::uint32_t> plane_order_for(std::uint64_t n);

enum class Axiom {
  Counts,             // equal point/line counts of the form q^2+q+1
  Uniformity,         // every line has q+1 points
  Regularity,         // every point is on q+1 lines
  LineIntersection,   // two distinct lines share exactly one point
  PointPairCoverage,  // two distinct points lie on exactly one common line
};

std::string_view to_string(Axiom a);

struct AxiomViolation {
  Axiom axiom;
  std::string message;
  std::vector<std::uint64_t> witness;
};

/// All violated axioms in check order; the first entry is the primary verdict.
struct PlaneVerdict {
  std::vector<AxiomViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  const AxiomViolation* first() const noexcept { return violations.empty() ? nullptr : &violations.front(); }
  const AxiomViolation* find(Axiom a) const noexcept;
};

PlaneVerdict verify_projective_plane(const IncidenceStructure& s);

struct IntersectionCheck {
  bool ok = true;
  /// First offending pair (i < j) in lexicographic order and its meet size.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::size_t meet = 0;
};

IntersectionCheck is_one_intersecting(const IncidenceStructure& s);

/// A plane built from homogeneous coordinates. Point i and line i carry the
/// same normalized triple, so the standard dot-product polarity pairs them
/// by index.
struct ProjectivePlane {
  std::uint32_t q = 0;
  IncidenceStructure structure;
  std::vector<std::array<std::uint32_t, 3>> coords;  // empty for planes read from files

  std::size_t size() const noexcept { return structure.n_points(); }

  /// Wraps a verified structure. Throws std::invalid_argument if it is not a
  /// projective plane.
  static ProjectivePlane from_structure(IncidenceStructure s);
};

/// Canonical index of a normalized triple (first nonzero coordinate is 1)
/// over a field of order q.
std::uint32_t triple_index(const std::array<std::uint32_t, 3>& t, std::uint32_t q);

ProjectivePlane build_pg2(const field::FieldSpec& spec);

class ExtensionError : public std::runtime_error {
 public:
  enum class Kind { PreconditionViolated, NoWitnessSunflower, HypothesisViolated };
  ExtensionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

struct Extension {
  IncidenceStructure result;
  /// witnesses[i] holds the q lines h_1..h_q found for the i-th added line.
  std::vector<std::vector<Line>> witnesses;
  /// Common point of each added line with its witnesses.
  std::vector<std::uint32_t> centers;
};

/// Adds the lines of `extra` one at a time to a 1-intersecting (q+1)-uniform
/// family on q^2+q+1 points. Each added line needs q current lines through a
/// common point of it that, together with it, cover every point.
Extension extend_one_intersecting(const IncidenceStructure& base, const std::vector<Line>& extra);

/// q = 1 or 2 (mod 4) and not a sum of two squares.
bool bruck_ryser_excluded(std::uint64_t q);

/// Dense row-major 0/1 matrix.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t i, std::size_t j) const { return data_.at(i * cols_ + j) != 0; }
  void set(std::size_t i, std::size_t j, bool v) { data_.at(i * cols_ + j) = v ? 1 : 0; }
  void flip(std::size_t i, std::size_t j) { set(i, j, !get(i, j)); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

/// Entry (i, j) is 1 iff point i lies on line column_order[j].
BinaryMatrix incidence_matrix(const IncidenceStructure& s, const std::vector<std::uint32_t>& column_order);

struct SymmetryReport {
  bool premise_holds = false;
  bool fully_symmetric = false;
  /// First asymmetric entry (0-based), if any.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  /// Premise held yet the matrix is not symmetric.
  bool contradiction = false;
};

/// Checks whether m_ij = m_ji for all pairs with i or j (1-based) at most
/// q^2-q+3, and whether the whole matrix is symmetric. Throws
/// std::invalid_argument("not a plane incidence matrix") when the row
/// supports, read as lines, do not form a projective plane of order q.
SymmetryReport partial_symmetry_verify(const BinaryMatrix& m, std::uint32_t q);

}  // namespace c4lab::geometry
