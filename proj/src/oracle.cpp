#include "pia/oracle.hpp"

#include <cmath>
#include <limits>

#include "pia/error.hpp"

namespace pia {

ExactCircle triangle_incenter(Point a, Point b, Point c) {
  const double area = 0.5 * std::abs(cross(b - a, c - a));
  if (!(area > 1e-12)) throw Error(ErrorCode::Degenerate, "triangle vertices are collinear");
  // Side lengths opposite each vertex.
  const double la = std::hypot(c.x - b.x, c.y - b.y);
  const double lb = std::hypot(c.x - a.x, c.y - a.y);
  const double lc = std::hypot(b.x - a.x, b.y - a.y);
  const double perimeter = la + lb + lc;
  return {{(la * a.x + lb * b.x + lc * c.x) / perimeter, (la * a.y + lb * b.y + lc * c.y) / perimeter},
          2.0 * area / perimeter};
}

ExactCircle triangle_incenter(const Polygon& triangle) {
  if (triangle.size() != 3) throw Error(ErrorCode::InvalidInput, "incenter needs exactly 3 vertices");
  return triangle_incenter(triangle[0], triangle[1], triangle[2]);
}

ExactCircle brute_force_pia(const Polygon& poly, std::size_t resolution) {
  if (resolution < 100) throw Error(ErrorCode::InvalidInput, "resolution must be at least 100");
  const Region box = bounding_box(poly);
  const double step_x = box.width() / static_cast<double>(resolution - 1);
  const double step_y = box.height() / static_cast<double>(resolution - 1);

  ExactCircle best{{}, -std::numeric_limits<double>::infinity()};
  for (std::size_t j = 0; j < resolution; ++j) {
    const double y = box.min_y() + static_cast<double>(j) * step_y;
    for (std::size_t i = 0; i < resolution; ++i) {
      const Point p{box.min_x() + static_cast<double>(i) * step_x, y};
      if (!point_in_polygon(p, poly)) continue;
      const double c = clearance(p, poly);
      if (c > best.radius) best = {p, c};
    }
  }
  if (!std::isfinite(best.radius)) {
    throw Error(ErrorCode::DegenerateInterior, "no lattice point inside the polygon");
  }
  return best;
}

}  // namespace pia
