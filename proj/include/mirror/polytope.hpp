#pragma once

// Convex polytopes given by vertices in Q^r, with facet enumeration and the
// polar dual {x : (x, y) >= -1 for all y in P}.

#include <istream>
#include <string>
#include <vector>

#include "mirror/rational.hpp"

namespace mirror::intersection {

using Point = std::vector<Rational>;

/// Facet {x : normal . x = -1} of a polytope containing the origin in its
/// interior; the polytope lies in normal . x >= -1.
struct Facet {
  Point normal;
  std::vector<size_t> vertex_indices;
};

class LatticePolytope {
 public:
  /// Convex hull of the points; keeps only the extreme points. Throws
  /// precondition_error unless the hull is full-dimensional.
  static LatticePolytope hull(std::vector<Point> points);

  int dimension() const { return dimension_; }
  /// Extreme points, sorted lexicographically.
  const std::vector<Point>& vertices() const { return vertices_; }
  /// True when every vertex has integer coordinates.
  bool is_lattice() const;
  bool contains_origin_in_interior() const;
  /// Requires the origin in the interior.
  std::vector<Facet> facets() const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) { return a.vertices_ == b.vertices_; }

 private:
  int dimension_ = 0;
  std::vector<Point> vertices_;
};

/// Throws precondition_error when the origin is not an interior point.
LatticePolytope polar_polytope(const LatticePolytope& p);
/// P is a lattice polytope whose polar is also a lattice polytope.
bool is_reflexive(const LatticePolytope& p);

/// One vertex per line as space-separated integers; blank lines and lines
/// starting with '#' are skipped.
LatticePolytope read_polytope(std::istream& in);
LatticePolytope parse_polytope(const std::string& text);

std::string to_string(const Point& p);

}  // namespace mirror::intersection
