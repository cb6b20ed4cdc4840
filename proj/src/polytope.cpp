#include "mirror/polytope.hpp"

#include <algorithm>
#include <sstream>

#include "mirror/linalg.hpp"

namespace mirror::intersection {

namespace {

Rational dot(const Point& a, const Point& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Supporting hyperplanes {u . x = c} through r affinely independent points
// of the set with every point on the side u . x >= c.
struct Hyperplane {
  Point normal;
  Rational offset;
  std::vector<size_t> on;
};

std::vector<Hyperplane> supporting_hyperplanes(const std::vector<Point>& pts, size_t r) {
  std::vector<Hyperplane> out;
  std::vector<size_t> idx(r);
  auto visit = [&]() {
    Matrix m;
    for (size_t i : idx) {
      auto row = pts[i];
      row.push_back(-1);
      m.push_back(std::move(row));
    }
    const auto ns = null_space(m, r + 1);
    if (ns.size() != 1) return;
    Point u(ns[0].begin(), ns[0].begin() + static_cast<long>(r));
    Rational c = ns[0][r];
    bool below = false;
    bool above = false;
    for (const auto& p : pts) {
      const Rational s = dot(u, p) - c;
      below = below || s < 0;
      above = above || s > 0;
    }
    if (below && above) return;
    if (below) {
      for (auto& x : u) x = -x;
      c = -c;
    }
    Hyperplane h{u, c, {}};
    for (size_t i = 0; i < pts.size(); ++i)
      if (dot(u, pts[i]) == c) h.on.push_back(i);
    for (const auto& seen : out)
      if (seen.on == h.on) return;
    out.push_back(std::move(h));
  };
  auto rec = [&](auto&& self, size_t depth, size_t start) -> void {
    if (depth == r) {
      visit();
      return;
    }
    for (size_t i = start; i < pts.size(); ++i) {
      idx[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace

LatticePolytope LatticePolytope::hull(std::vector<Point> points) {
  if (points.empty()) throw precondition_error("polytope needs at least one point");
  const size_t r = points.front().size();
  if (r == 0) throw precondition_error("polytope in a rank-0 lattice");
  for (const auto& p : points)
    if (p.size() != r) throw precondition_error("points of different dimensions");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  Matrix diffs;
  for (const auto& p : points) {
    Point d(r);
    for (size_t i = 0; i < r; ++i) d[i] = p[i] - points.front()[i];
    diffs.push_back(std::move(d));
  }
  if (rank(diffs) != r) throw precondition_error("polytope is not full-dimensional");

  const auto planes = supporting_hyperplanes(points, r);
  LatticePolytope out;
  out.dimension_ = static_cast<int>(r);
  // A point is extreme iff the facet normals through it span Q^r.
  for (size_t i = 0; i < points.size(); ++i) {
    Matrix normals;
    for (const auto& h : planes)
      if (std::find(h.on.begin(), h.on.end(), i) != h.on.end()) normals.push_back(h.normal);
    if (!normals.empty() && rank(normals) == r) out.vertices_.push_back(points[i]);
  }
  return out;
}

bool LatticePolytope::is_lattice() const {
  for (const auto& v : vertices_)
    for (const auto& x : v)
      if (!is_integer(x)) return false;
  return true;
}

bool LatticePolytope::contains_origin_in_interior() const {
  for (const auto& h : supporting_hyperplanes(vertices_, static_cast<size_t>(dimension_)))
    if (h.offset >= 0) return false;
  return true;
}

std::vector<Facet> LatticePolytope::facets() const {
  std::vector<Facet> out;
  for (const auto& h : supporting_hyperplanes(vertices_, static_cast<size_t>(dimension_))) {
    if (h.offset >= 0) throw precondition_error("origin is not an interior point of the polytope");
    Facet f{h.normal, h.on};
    for (auto& x : f.normal) x /= -h.offset;
    out.push_back(std::move(f));
  }
  return out;
}

LatticePolytope polar_polytope(const LatticePolytope& p) {
  std::vector<Point> normals;
  for (const auto& f : p.facets()) normals.push_back(f.normal);
  return LatticePolytope::hull(std::move(normals));
}

bool is_reflexive(const LatticePolytope& p) { return p.is_lattice() && polar_polytope(p).is_lattice(); }

LatticePolytope read_polytope(std::istream& in) {
  std::vector<Point> points;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    Point p;
    std::string token;
    while (ls >> token) {
      const bool digits = token.find_first_not_of("0123456789", token[0] == '-' || token[0] == '+' ? 1 : 0) ==
                              std::string::npos &&
                          token.size() > (token[0] == '-' || token[0] == '+' ? 1u : 0u);
      if (!digits) throw precondition_error("line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
      p.push_back(Rational(token[0] == '+' ? token.substr(1) : token));
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) throw precondition_error("no vertices in polytope input");
  return LatticePolytope::hull(std::move(points));
}

LatticePolytope parse_polytope(const std::string& text) {
  std::istringstream in(text);
  return read_polytope(in);
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + mirror::to_string(p[i]);
  return out + ")";
}

}  // namespace mirror::intersection
