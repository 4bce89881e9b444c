#include "pia/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pia/error.hpp"

namespace pia {

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

int orientation(Point a, Point b, Point c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

// Assumes a, b, p collinear.
bool within_box(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

std::string describe(Point p) {
  std::ostringstream os;
  os << '(' << p.x << ", " << p.y << ')';
  return os.str();
}

}  // namespace

Region::Region(double min_x, double max_x, double min_y, double max_y)
    : min_x_(min_x), max_x_(max_x), min_y_(min_y), max_y_(max_y) {
  if (!(min_x < max_x) || !(min_y < max_y)) {
    throw Error(ErrorCode::InvalidInput, "region bounds must satisfy min < max on both axes");
  }
}

double Region::min_dimension() const { return std::min(width(), height()); }

double signed_area(std::span<const Point> ring) {
  double twice = 0.0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    twice += cross(ring[i], ring[(i + 1) % ring.size()]);
  }
  return 0.5 * twice;
}

bool segments_intersect(const Segment& s, const Segment& t) {
  const int o1 = orientation(s.a, s.b, t.a);
  const int o2 = orientation(s.a, s.b, t.b);
  const int o3 = orientation(t.a, t.b, s.a);
  const int o4 = orientation(t.a, t.b, s.b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && within_box(s.a, s.b, t.a)) return true;
  if (o2 == 0 && within_box(s.a, s.b, t.b)) return true;
  if (o3 == 0 && within_box(t.a, t.b, s.a)) return true;
  if (o4 == 0 && within_box(t.a, t.b, s.b)) return true;
  return false;
}

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw Error(ErrorCode::InvalidPolygon, "polygon needs at least 3 vertices");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!finite(vertices_[i])) {
      throw Error(ErrorCode::InvalidPolygon, "non-finite coordinate at vertex " + std::to_string(i));
    }
    if (vertices_[i] == vertices_[(i + 1) % n]) {
      throw Error(ErrorCode::InvalidPolygon, "duplicate consecutive vertex " + describe(vertices_[i]));
    }
  }
  const double area = signed_area(vertices_);
  if (area == 0.0 || !std::isfinite(area)) {
    throw Error(ErrorCode::InvalidPolygon, "polygon has zero area");
  }
  if (area < 0.0) std::reverse(vertices_.begin(), vertices_.end());

  for (std::size_t i = 0; i < n; ++i) {
    const Segment ei = edge(i);
    // Adjacent edges share a vertex; they only conflict when one folds back
    // over the other.
    const Segment next = edge((i + 1) % n);
    const Point d0 = ei.b - ei.a;
    const Point d1 = next.b - next.a;
    if (cross(d0, d1) == 0.0 && dot(d0, d1) < 0.0) {
      throw Error(ErrorCode::InvalidPolygon, "edge folds back at vertex " + describe(ei.b));
    }
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_intersect(ei, edge(j))) {
        throw Error(ErrorCode::InvalidPolygon,
                    "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
      }
    }
  }
}

double Polygon::area() const { return signed_area(vertices_); }

double Polygon::perimeter() const {
  double total = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    const Segment e = edge(i);
    total += std::hypot(e.b.x - e.a.x, e.b.y - e.a.y);
  }
  return total;
}

Polygon Polygon::translated(Point offset) const {
  std::vector<Point> moved(vertices_.begin(), vertices_.end());
  for (Point& p : moved) p = p + offset;
  return Polygon(std::move(moved));
}

Polygon Polygon::scaled(double factor) const {
  std::vector<Point> moved(vertices_.begin(), vertices_.end());
  for (Point& p : moved) p = factor * p;
  return Polygon(std::move(moved));
}

double point_segment_distance(Point p, const Segment& s) {
  const Point d = s.b - s.a;
  const double len2 = dot(d, d);
  Point nearest = s.a;
  if (len2 > 0.0) {
    const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
    nearest = s.a + t * d;
  }
  return std::hypot(p.x - nearest.x, p.y - nearest.y);
}

bool point_in_polygon(Point p, const Polygon& poly) {
  bool inside = false;
  const auto v = poly.vertices();
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    const Point a = v[j];
    const Point b = v[i];
    if (orientation(a, b, p) == 0 && within_box(a, b, p)) return true;
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

double clearance(Point p, const Polygon& poly) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    best = std::min(best, point_segment_distance(p, poly.edge(i)));
  }
  return best;
}

Region bounding_box(const Polygon& poly) {
  const auto v = poly.vertices();
  const auto [min_x, max_x] =
      std::minmax_element(v.begin(), v.end(), [](Point a, Point b) { return a.x < b.x; });
  const auto [min_y, max_y] =
      std::minmax_element(v.begin(), v.end(), [](Point a, Point b) { return a.y < b.y; });
  return Region(min_x->x, max_x->x, min_y->y, max_y->y);
}

bool is_convex(const Polygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly[i];
    const Point b = poly[(i + 1) % n];
    const Point c = poly[(i + 2) % n];
    if (cross(b - a, c - b) < -kCollinearTolerance) return false;
  }
  return true;
}

double great_circle_distance(SphericalPoint a, SphericalPoint b) {
  const double c = std::sin(a.phi) * std::sin(b.phi) +
                   std::cos(a.phi) * std::cos(b.phi) * std::cos(a.lambda - b.lambda);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace pia
