#include "pia/random_search.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "pia/error.hpp"
#include "search_internal.hpp"

namespace pia {

void validate(const RandomConfig& cfg) {
  if (cfg.k < 1) throw Error(ErrorCode::InvalidInput, "k must be at least 1");
  if (!(cfg.min_accuracy > 0.0)) throw Error(ErrorCode::InvalidInput, "min_accuracy must be positive");
  if (cfg.sample_cap < cfg.k) throw Error(ErrorCode::InvalidInput, "sample_cap must be at least k");
}

Point sample_point(const Region& r, Rng& rng) {
  const double u = rng.uniform();
  const double v = rng.uniform();
  return {r.min_x() + u * r.width(), r.min_y() + v * r.height()};
}

Region shrink_region(const Region& r, Point incumbent) {
  // Both half-extents come from the bounds before the update.
  const double hx = r.width() / (2.0 * std::numbers::sqrt2);
  const double hy = r.height() / (2.0 * std::numbers::sqrt2);
  return Region(incumbent.x - hx, incumbent.x + hx, incumbent.y - hy, incumbent.y + hy);
}

PiaResult solve_random(const Polygon& poly, const RandomConfig& cfg, SearchObserver* observer) {
  validate(cfg);
  Rng rng(cfg.seed);
  Region region = bounding_box(poly);

  PiaResult result;
  double maximin = -std::numeric_limits<double>::infinity();
  bool have_incumbent = false;

  for (;;) {
    if (observer) observer->on_region(region);
    ++result.iterations;

    std::size_t misses = 0;
    std::size_t drawn = 0;
    while (misses < cfg.k && drawn < cfg.sample_cap) {
      const Point node = sample_point(region, rng);
      ++drawn;
      ++result.nodes_evaluated;
      const bool inside = point_in_polygon(node, poly);
      if (observer) observer->on_node(node, inside);
      if (!inside) continue;
      const double c = clearance(node, poly);
      if (!(c > 0.0)) continue;

      if (c > maximin) {
        maximin = c;
        result.center = node;
        result.radius = c;
        have_incumbent = true;
        misses = 0;
        if (observer) observer->on_incumbent(node, c);
      } else {
        ++misses;
      }
    }

    if (!have_incumbent) {
      throw Error(ErrorCode::DegenerateInterior,
                  "no interior sample among " + std::to_string(drawn) + " draws");
    }
    if (region.min_dimension() <= cfg.min_accuracy) break;
    const auto next = detail::try_shrink(region, result.center);
    if (!next) break;
    region = *next;
  }
  return result;
}

}  // namespace pia
