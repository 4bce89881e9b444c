#pragma once

#include <span>
#include <vector>

#include "pia/geometry.hpp"
#include "pia/search.hpp"
#include "pia/simplex.hpp"

namespace pia {

/// Edge constraint a*x + b*y <= c. (a, b) is the edge's outward unit
/// normal, so for an interior point p, c - (a*p.x + b*p.y) is the
/// perpendicular distance from p to the edge's supporting line.
struct HalfPlane {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  Point inward_normal() const { return {-a, -b}; }
  double distance(Point p) const { return c - (a * p.x + b * p.y); }
};

/// One half-plane per edge. Throws Error(NotConvex) for non-convex input.
std::vector<HalfPlane> edges_to_halfplanes(const Polygon& poly);

/// Variables (x', y', Z) with x = x' + shift.x, y = y' + shift.y, one row
/// a*x' + b*y' + Z <= c - a*shift.x - b*shift.y per half-plane, maximizing Z.
LpProblem build_chebyshev_lp(std::span<const HalfPlane> halfplanes, Point shift);

/// Exact largest inscribed circle of a convex polygon (its Chebyshev
/// center). iterations reports simplex pivots; nodes_evaluated is zero.
PiaResult solve_chebyshev(const Polygon& poly);

}  // namespace pia
