#pragma once

#include <cstddef>

#include "pia/geometry.hpp"

namespace pia {

struct ExactCircle {
  Point center;
  double radius = 0.0;
};

/// Closed-form incircle: center is the side-length-weighted vertex average,
/// radius = 2 * area / perimeter. Throws Error(Degenerate) for collinear or
/// near-collinear input (area <= 1e-12), Error(InvalidInput) if N != 3.
ExactCircle triangle_incenter(const Polygon& triangle);

/// Same, from three raw vertices (no Polygon validation).
ExactCircle triangle_incenter(Point a, Point b, Point c);

/// Exhaustive search over a resolution x resolution lattice spanning the
/// bounding box. Interior nodes only; ties go to the first node in
/// row-major order. Error bound is about bbox extent / resolution.
ExactCircle brute_force_pia(const Polygon& poly, std::size_t resolution);

}  // namespace pia
