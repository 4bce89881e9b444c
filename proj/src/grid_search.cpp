#include "pia/grid_search.hpp"

#include <limits>

#include "pia/error.hpp"
#include "pia/random_search.hpp"
#include "search_internal.hpp"

namespace pia {

namespace {

constexpr int kMaxDensifications = 3;

}  // namespace

void validate(const GridConfig& cfg) {
  if (cfg.n < 2 || cfg.m < 2) throw Error(ErrorCode::InvalidInput, "grid needs n >= 2 and m >= 2");
  if (!(cfg.min_accuracy > 0.0)) throw Error(ErrorCode::InvalidInput, "min_accuracy must be positive");
  if (cfg.max_iterations < 1) throw Error(ErrorCode::InvalidInput, "max_iterations must be at least 1");
}

std::vector<Point> grid_nodes(const Region& r, std::size_t n, std::size_t m) {
  const double step_x = r.width() / static_cast<double>(n - 1);
  const double step_y = r.height() / static_cast<double>(m - 1);
  std::vector<Point> nodes;
  nodes.reserve(n * m);
  for (std::size_t j = 0; j < m; ++j) {
    const double y = r.min_y() + static_cast<double>(j) * step_y;
    for (std::size_t i = 0; i < n; ++i) {
      nodes.push_back({r.min_x() + static_cast<double>(i) * step_x, y});
    }
  }
  return nodes;
}

PiaResult solve_grid(const Polygon& poly, const GridConfig& cfg, SearchObserver* observer) {
  validate(cfg);
  Region region = bounding_box(poly);

  PiaResult result;
  double maximin = -std::numeric_limits<double>::infinity();
  bool have_incumbent = false;

  for (;;) {
    if (observer) observer->on_region(region);
    ++result.iterations;

    std::size_t n = cfg.n;
    std::size_t m = cfg.m;
    for (int attempt = 0; attempt <= kMaxDensifications; ++attempt, n *= 2, m *= 2) {
      bool any_inside = false;
      for (const Point& node : grid_nodes(region, n, m)) {
        ++result.nodes_evaluated;
        const bool inside = point_in_polygon(node, poly);
        if (observer) observer->on_node(node, inside);
        if (!inside) continue;
        // Boundary nodes (zero clearance) are not interior candidates.
        const double c = clearance(node, poly);
        if (!(c > 0.0)) continue;
        any_inside = true;
        // Strict comparison: the first node in row-major order wins ties.
        if (c > maximin) {
          maximin = c;
          result.center = node;
          result.radius = c;
          have_incumbent = true;
          if (observer) observer->on_incumbent(node, c);
        }
      }
      if (any_inside) break;
    }

    if (!have_incumbent) {
      throw Error(ErrorCode::DegenerateInterior, "no lattice node inside the polygon");
    }
    if (region.min_dimension() <= cfg.min_accuracy || result.iterations >= cfg.max_iterations) break;
    const auto next = detail::try_shrink(region, result.center);
    if (!next) break;
    region = *next;
  }
  return result;
}

}  // namespace pia
