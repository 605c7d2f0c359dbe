#include "c4lab/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace c4lab::geometry {

namespace {

struct BadPair {
  std::size_t i;
  std::size_t j;
  std::size_t meet;
};

// Scans pairs (i, j), i < j, of `sets` for a meet size other than one, using
// the transpose to touch only pairs that share an element. O(sum |T(x)|^2 + N^2).
std::optional<BadPair> first_bad_pair(const std::vector<std::vector<std::uint32_t>>& sets,
                                      const std::vector<std::vector<std::uint32_t>>& transpose) {
  const std::size_t n = sets.size();
  std::vector<std::uint32_t> meet(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t x : sets[i]) {
      for (std::uint32_t j : transpose[x]) {
        if (j > i) ++meet[j];
      }
    }
    std::optional<BadPair> bad;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!bad && meet[j] != 1) bad = BadPair{i, j, meet[j]};
      meet[j] = 0;
    }
    if (bad) return bad;
  }
  return std::nullopt;
}

std::vector<std::uint32_t> parse_indices(std::string_view row, std::size_t row_no) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos < row.size()) {
    while (pos < row.size() && (row[pos] == ' ' || row[pos] == '\t' || row[pos] == '\r')) ++pos;
    if (pos >= row.size()) break;
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(row.data() + pos, row.data() + row.size(), v);
    if (ec != std::errc()) throw ParseError("line " + std::to_string(row_no) + ": expected an integer");
    pos = static_cast<std::size_t>(ptr - row.data());
    out.push_back(v);
  }
  return out;
}

std::vector<std::string_view> split_rows(std::string_view text) {
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    rows.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return rows;
}

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

bool is_comment(std::string_view s) {
  const auto p = s.find_first_not_of(" \t");
  return p != std::string_view::npos && s[p] == '#';
}

}  // namespace

IncidenceStructure::IncidenceStructure(std::uint32_t n_points, std::vector<Line> lines)
    : n_points_(n_points), lines_(std::move(lines)), point_to_lines_(n_points) {
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    Line& l = lines_[i];
    std::sort(l.begin(), l.end());
    if (std::adjacent_find(l.begin(), l.end()) != l.end()) {
      throw std::invalid_argument("line " + std::to_string(i) + " repeats a point");
    }
    for (std::uint32_t p : l) {
      if (p >= n_points_) throw std::invalid_argument("line " + std::to_string(i) + " has point index out of range");
      point_to_lines_[p].push_back(static_cast<std::uint32_t>(i));
    }
  }
}

bool IncidenceStructure::incident(std::uint32_t point, std::size_t line) const {
  const Line& l = lines_.at(line);
  return std::binary_search(l.begin(), l.end(), point);
}

std::size_t IncidenceStructure::intersection_size(std::size_t a, std::size_t b) const {
  const Line& x = lines_.at(a);
  const Line& y = lines_.at(b);
  std::size_t i = 0, j = 0, n = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] < y[j]) {
      ++i;
    } else if (y[j] < x[i]) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

IncidenceStructure IncidenceStructure::dual() const {
  std::vector<Line> lines(point_to_lines_.begin(), point_to_lines_.end());
  return IncidenceStructure(static_cast<std::uint32_t>(lines_.size()), std::move(lines));
}

std::string IncidenceStructure::to_text() const {
  std::ostringstream os;
  os << "points " << n_points_ << " lines " << lines_.size() << '\n';
  for (const Line& l : lines_) {
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (i) os << ' ';
      os << l[i];
    }
    os << '\n';
  }
  return os.str();
}

IncidenceStructure IncidenceStructure::from_text(std::string_view text) {
  const auto rows = split_rows(text);
  std::size_t r = 0;
  while (r < rows.size() && (is_blank(rows[r]) || is_comment(rows[r]))) ++r;
  if (r == rows.size()) throw ParseError("missing header `points N lines L`");

  std::istringstream header{std::string(rows[r])};
  std::string w1, w2;
  long long n = -1, l = -1;
  header >> w1 >> n >> w2 >> l;
  if (!header || w1 != "points" || w2 != "lines" || n < 0 || l < 0) {
    throw ParseError("line " + std::to_string(r + 1) + ": malformed header");
  }
  ++r;

  std::vector<Line> lines;
  lines.reserve(static_cast<std::size_t>(l));
  for (; r < rows.size(); ++r) {
    if (is_comment(rows[r])) continue;
    if (lines.size() == static_cast<std::size_t>(l)) {
      if (!is_blank(rows[r])) throw ParseError("line " + std::to_string(r + 1) + ": more lines than declared");
      continue;
    }
    lines.push_back(parse_indices(rows[r], r + 1));
  }
  if (lines.size() != static_cast<std::size_t>(l)) throw ParseError("fewer lines than declared in header");
  try {
    return IncidenceStructure(static_cast<std::uint32_t>(n), std::move(lines));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::optional<std::uint32_t> plane_order_for(std::uint64_t n) {
  for (std::uint64_t q = 1; q * q + q + 1 <= n; ++q) {
    if (q * q + q + 1 == n) return static_cast<std::uint32_t>(q);
  }
  return std::nullopt;
}

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::Counts: return "counts";
    case Axiom::Uniformity: return "uniformity";
    case Axiom::Regularity: return "regularity";
    case Axiom::LineIntersection: return "line-intersection";
    case Axiom::PointPairCoverage: return "point-pair-coverage";
  }
  return "unknown";
}

const AxiomViolation* PlaneVerdict::find(Axiom a) const noexcept {
  for (const auto& v : violations) {
    if (v.axiom == a) return &v;
  }
  return nullptr;
}

PlaneVerdict verify_projective_plane(const IncidenceStructure& s) {
  PlaneVerdict verdict;
  auto fail = [&](Axiom a, std::string msg, std::vector<std::uint64_t> witness) {
    verdict.violations.push_back({a, std::move(msg), std::move(witness)});
  };

  const auto order = plane_order_for(s.n_points());
  if (s.n_points() != s.n_lines() || !order) {
    fail(Axiom::Counts,
         "expected equal point and line counts of the form q^2+q+1, got " + std::to_string(s.n_points()) +
             " points and " + std::to_string(s.n_lines()) + " lines",
         {s.n_points(), s.n_lines()});
  }
  std::uint64_t q = 0;
  if (order) {
    q = *order;
  } else if (s.n_lines() > 0 && !s.line(0).empty()) {
    q = s.line(0).size() - 1;
  }

  for (std::size_t i = 0; i < s.n_lines(); ++i) {
    if (s.line(i).size() != q + 1) {
      fail(Axiom::Uniformity,
           "line " + std::to_string(i) + " has " + std::to_string(s.line(i).size()) + " points, expected " +
               std::to_string(q + 1),
           {i, s.line(i).size()});
      break;
    }
  }
  for (std::uint32_t p = 0; p < s.n_points(); ++p) {
    if (s.lines_through(p).size() != q + 1) {
      fail(Axiom::Regularity,
           "point " + std::to_string(p) + " is on " + std::to_string(s.lines_through(p).size()) +
               " lines, expected " + std::to_string(q + 1),
           {p, s.lines_through(p).size()});
      break;
    }
  }

  std::vector<std::vector<std::uint32_t>> transpose(s.n_points());
  for (std::uint32_t p = 0; p < s.n_points(); ++p) transpose[p] = s.lines_through(p);
  if (auto bad = first_bad_pair(s.lines(), transpose)) {
    fail(Axiom::LineIntersection,
         "two lines share != 1 point: lines " + std::to_string(bad->i) + " and " + std::to_string(bad->j) +
             " meet in " + std::to_string(bad->meet),
         {bad->i, bad->j, bad->meet});
  }
  if (auto bad = first_bad_pair(transpose, s.lines())) {
    fail(Axiom::PointPairCoverage,
         "points " + std::to_string(bad->i) + " and " + std::to_string(bad->j) + " lie on " +
             std::to_string(bad->meet) + " common lines",
         {bad->i, bad->j, bad->meet});
  }
  return verdict;
}

IntersectionCheck is_one_intersecting(const IncidenceStructure& s) {
  std::vector<std::vector<std::uint32_t>> transpose(s.n_points());
  for (std::uint32_t p = 0; p < s.n_points(); ++p) transpose[p] = s.lines_through(p);
  IntersectionCheck out;
  if (auto bad = first_bad_pair(s.lines(), transpose)) {
    out.ok = false;
    out.witness = std::make_pair(bad->i, bad->j);
    out.meet = bad->meet;
  }
  return out;
}

ProjectivePlane ProjectivePlane::from_structure(IncidenceStructure s) {
  const PlaneVerdict v = verify_projective_plane(s);
  if (!v.ok()) throw std::invalid_argument("not a projective plane: " + v.first()->message);
  ProjectivePlane plane;
  plane.q = *plane_order_for(s.n_points());
  plane.structure = std::move(s);
  return plane;
}

std::uint32_t triple_index(const std::array<std::uint32_t, 3>& t, std::uint32_t q) {
  if (t[0] == 0) {
    if (t[1] == 0) return 0;
    return 1 + t[2];
  }
  return 1 + q + t[1] * q + t[2];
}

ProjectivePlane build_pg2(const field::FieldSpec& f) {
  const std::uint32_t q = f.q();
  const std::uint32_t n = q * q + q + 1;

  std::vector<std::array<std::uint32_t, 3>> coords;
  coords.reserve(n);
  coords.push_back({0, 0, 1});
  for (std::uint32_t c = 0; c < q; ++c) coords.push_back({0, 1, c});
  for (std::uint32_t b = 0; b < q; ++b) {
    for (std::uint32_t c = 0; c < q; ++c) coords.push_back({1, b, c});
  }

  auto normalize = [&](std::array<std::uint32_t, 3> t) {
    std::size_t lead = 0;
    while (t[lead] == 0) ++lead;
    const std::uint32_t s = f.inv(t[lead]);
    for (auto& x : t) x = f.mul(x, s);
    return t;
  };

  // Line [a:b:c] is the kernel of the dot product with (a, b, c); two kernel
  // vectors v1, v2 give its points v1 and v2 + l*v1 for every scalar l.
  std::vector<Line> lines(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto [a, b, c] = coords[i];
    std::array<std::uint32_t, 3> v1, v2;
    if (a != 0) {
      const std::uint32_t ia = f.inv(a);
      v1 = {f.neg(f.mul(b, ia)), 1, 0};
      v2 = {f.neg(f.mul(c, ia)), 0, 1};
    } else if (b != 0) {
      v1 = {1, 0, 0};
      v2 = {0, f.neg(f.mul(c, f.inv(b))), 1};
    } else {
      v1 = {1, 0, 0};
      v2 = {0, 1, 0};
    }
    Line& line = lines[i];
    line.reserve(q + 1);
    line.push_back(triple_index(normalize(v1), q));
    for (std::uint32_t l = 0; l < q; ++l) {
      std::array<std::uint32_t, 3> p;
      for (int k = 0; k < 3; ++k) p[k] = f.add(v2[k], f.mul(l, v1[k]));
      line.push_back(triple_index(normalize(p), q));
    }
  }

  ProjectivePlane plane;
  plane.q = q;
  plane.structure = IncidenceStructure(n, std::move(lines));
  plane.coords = std::move(coords);
  return plane;
}

Extension extend_one_intersecting(const IncidenceStructure& base, const std::vector<Line>& extra) {
  using Kind = ExtensionError::Kind;
  const auto order = plane_order_for(base.n_points());
  if (!order) throw ExtensionError(Kind::PreconditionViolated, "vertex count is not of the form q^2+q+1");
  const std::uint32_t q = *order;
  const std::uint32_t n = base.n_points();
  for (const Line& l : base.lines()) {
    if (l.size() != q + 1) throw ExtensionError(Kind::PreconditionViolated, "base family is not (q+1)-uniform");
  }
  if (!is_one_intersecting(base).ok) throw ExtensionError(Kind::PreconditionViolated, "base family is not 1-intersecting");

  std::set<Line> seen(base.lines().begin(), base.lines().end());
  std::vector<Line> candidates;
  for (Line f : extra) {
    std::sort(f.begin(), f.end());
    if (f.size() != q + 1 || std::adjacent_find(f.begin(), f.end()) != f.end() || (!f.empty() && f.back() >= n)) {
      throw ExtensionError(Kind::PreconditionViolated, "added line is not a (q+1)-subset of the points");
    }
    if (!seen.insert(f).second) throw ExtensionError(Kind::PreconditionViolated, "added line already present");
    candidates.push_back(std::move(f));
  }

  std::vector<Line> current = base.lines();
  std::vector<std::vector<std::uint32_t>> through(n);
  for (std::size_t i = 0; i < current.size(); ++i) {
    for (std::uint32_t p : current[i]) through[p].push_back(static_cast<std::uint32_t>(i));
  }

  Extension out;
  std::vector<std::uint8_t> mark(n);
  auto covers = [&](const Line& f, const std::vector<std::uint32_t>& hs, std::uint32_t u) {
    std::fill(mark.begin(), mark.end(), 0);
    for (std::uint32_t p : f) mark[p] = 1;
    for (std::uint32_t h : hs) {
      for (std::uint32_t p : current[h]) mark[p] = 1;
    }
    if (std::find(mark.begin(), mark.end(), 0) != mark.end()) return false;
    // every h passes through u, so the common meet with f is {u} exactly when
    // no other point of f lies on all of them
    for (std::uint32_t p : f) {
      if (p == u) continue;
      bool on_all = true;
      for (std::uint32_t h : hs) {
        if (!std::binary_search(current[h].begin(), current[h].end(), p)) {
          on_all = false;
          break;
        }
      }
      if (on_all) return false;
    }
    return true;
  };

  for (std::size_t fi = 0; fi < candidates.size(); ++fi) {
    const Line& f = candidates[fi];
    bool found = false;
    for (std::uint32_t u : f) {
      const auto& tu = through[u];
      std::vector<std::vector<std::uint32_t>> options;
      if (tu.size() == q) {
        options.push_back(tu);
      } else if (tu.size() == q + 1) {
        for (std::size_t skip = 0; skip < tu.size(); ++skip) {
          std::vector<std::uint32_t> o;
          for (std::size_t j = 0; j < tu.size(); ++j) {
            if (j != skip) o.push_back(tu[j]);
          }
          options.push_back(std::move(o));
        }
      }
      for (const auto& hs : options) {
        if (!covers(f, hs, u)) continue;
        std::vector<Line> w;
        for (std::uint32_t h : hs) w.push_back(current[h]);
        out.witnesses.push_back(std::move(w));
        out.centers.push_back(u);
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) {
      throw ExtensionError(Kind::NoWitnessSunflower, "no witness sunflower for added line " + std::to_string(fi));
    }
    const auto idx = static_cast<std::uint32_t>(current.size());
    current.push_back(f);
    for (std::uint32_t p : f) through[p].push_back(idx);
  }

  out.result = IncidenceStructure(n, std::move(current));
  if (!is_one_intersecting(out.result).ok) {
    throw ExtensionError(Kind::HypothesisViolated, "extended family is not 1-intersecting");
  }
  return out;
}

bool bruck_ryser_excluded(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("bruck_ryser_excluded: q must be >= 2");
  const std::uint64_t r = q % 4;
  if (r != 1 && r != 2) return false;
  for (std::uint64_t a = 0; a * a <= q; ++a) {
    const std::uint64_t rest = q - a * a;
    std::uint64_t b = 0;
    while ((b + 1) * (b + 1) <= rest) ++b;
    if (b * b == rest) return false;
  }
  return true;
}

BinaryMatrix incidence_matrix(const IncidenceStructure& s, const std::vector<std::uint32_t>& column_order) {
  BinaryMatrix m(s.n_points(), column_order.size());
  for (std::size_t j = 0; j < column_order.size(); ++j) {
    for (std::uint32_t p : s.line(column_order[j])) m.set(p, j, true);
  }
  return m;
}

SymmetryReport partial_symmetry_verify(const BinaryMatrix& m, std::uint32_t q) {
  const std::size_t n = static_cast<std::size_t>(q) * q + q + 1;
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("not a plane incidence matrix: wrong dimensions");

  std::vector<Line> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m.get(i, j)) rows[i].push_back(static_cast<std::uint32_t>(j));
    }
  }
  const PlaneVerdict v = verify_projective_plane(IncidenceStructure(static_cast<std::uint32_t>(n), std::move(rows)));
  if (!v.ok()) throw std::invalid_argument("not a plane incidence matrix: " + v.first()->message);

  // 1-based threshold q^2-q+3 becomes the 0-based bound i < threshold.
  const std::size_t threshold = std::min<std::size_t>(n, static_cast<std::size_t>(q) * q - q + 3);
  SymmetryReport out;
  out.premise_holds = true;
  out.fully_symmetric = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m.get(i, j) == m.get(j, i)) continue;
      if (!out.witness) out.witness = std::make_pair(i, j);
      out.fully_symmetric = false;
      if (i < threshold || j < threshold) out.premise_holds = false;
    }
  }
  out.contradiction = out.premise_holds && !out.fully_symmetric;
  return out;
}

}  // namespace c4lab::geometry
