#include "pia/lp_formulation.hpp"

#include <cmath>

#include "pia/error.hpp"

namespace pia {

std::vector<HalfPlane> edges_to_halfplanes(const Polygon& poly) {
  if (!is_convex(poly)) throw Error(ErrorCode::NotConvex, "polygon has a reflex vertex");
  std::vector<HalfPlane> planes;
  planes.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Segment e = poly.edge(i);
    const double dx = e.b.x - e.a.x;
    const double dy = e.b.y - e.a.y;
    const double len = std::hypot(dx, dy);
    // Counter-clockwise order puts the interior on the left; the outward
    // normal is the right-hand perpendicular.
    const double a = dy / len;
    const double b = -dx / len;
    planes.push_back({a, b, a * e.a.x + b * e.a.y});
  }
  return planes;
}

LpProblem build_chebyshev_lp(std::span<const HalfPlane> halfplanes, Point shift) {
  if (halfplanes.empty()) throw Error(ErrorCode::InvalidInput, "no half-planes");
  LpProblem lp;
  lp.objective = {0.0, 0.0, 1.0};
  lp.constraints.reserve(halfplanes.size());
  for (const HalfPlane& h : halfplanes) {
    lp.constraints.push_back({{h.a, h.b, 1.0}, h.c - h.a * shift.x - h.b * shift.y});
  }
  return lp;
}

PiaResult solve_chebyshev(const Polygon& poly) {
  const auto planes = edges_to_halfplanes(poly);
  const Region box = bounding_box(poly);
  const Point shift{box.min_x(), box.min_y()};
  const LpSolution solution = solve_lp(build_chebyshev_lp(planes, shift));
  if (solution.status == LpStatus::Infeasible) {
    throw Error(ErrorCode::Infeasible, "Chebyshev LP infeasible");
  }
  if (solution.status == LpStatus::Unbounded) {
    throw Error(ErrorCode::Unbounded, "Chebyshev LP unbounded");
  }
  PiaResult result;
  result.center = {solution.variables[0] + shift.x, solution.variables[1] + shift.y};
  result.radius = solution.variables[2];
  result.iterations = solution.pivots;
  return result;
}

}  // namespace pia
