#pragma once

#include <span>
#include <vector>

namespace pia {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

/// Longitude/latitude pair in radians.
struct SphericalPoint {
  double lambda = 0.0;
  double phi = 0.0;
};

struct Segment {
  Point a;
  Point b;
};

/// Axis-aligned rectangle; construction enforces min < max on both axes.
class Region {
 public:
  Region(double min_x, double max_x, double min_y, double max_y);

  double min_x() const { return min_x_; }
  double max_x() const { return max_x_; }
  double min_y() const { return min_y_; }
  double max_y() const { return max_y_; }

  double width() const { return max_x_ - min_x_; }
  double height() const { return max_y_ - min_y_; }
  double min_dimension() const;
  double area() const { return width() * height(); }
  Point center() const { return {0.5 * (min_x_ + max_x_), 0.5 * (min_y_ + max_y_)}; }

  friend bool operator==(const Region&, const Region&) = default;

 private:
  double min_x_;
  double max_x_;
  double min_y_;
  double max_y_;
};

/// Simple polygon with at least three vertices, stored counter-clockwise.
///
/// The constructor rejects non-finite coordinates, consecutive duplicate
/// vertices (including last/first), zero area and self-intersections, and
/// reverses clockwise input.
class Polygon {
 public:
  explicit Polygon(std::vector<Point> vertices);

  std::span<const Point> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }

  /// Edge i runs from vertex i to vertex (i + 1) mod N.
  Segment edge(std::size_t i) const {
    return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
  }

  /// Positive, since vertices are stored counter-clockwise.
  double area() const;
  double perimeter() const;

  Polygon translated(Point offset) const;
  Polygon scaled(double factor) const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point> vertices_;
};

double signed_area(std::span<const Point> ring);

double point_segment_distance(Point p, const Segment& s);

/// Closed containment: points on the boundary count as inside.
bool point_in_polygon(Point p, const Polygon& poly);

/// Distance from p to the nearest edge of poly.
double clearance(Point p, const Polygon& poly);

Region bounding_box(const Polygon& poly);

/// Cross products with magnitude below this are treated as collinear.
inline constexpr double kCollinearTolerance = 1e-12;

bool is_convex(const Polygon& poly);

/// Central angle in radians between two points on the unit sphere
/// (spherical law of cosines).
double great_circle_distance(SphericalPoint a, SphericalPoint b);

bool segments_intersect(const Segment& s, const Segment& t);

}  // namespace pia
