#pragma once

#include <numbers>
#include <optional>

#include "pia/geometry.hpp"
#include "pia/random_search.hpp"

namespace pia::detail {

// shrink_region, or nullopt once the shrunk region is no longer
// representable (bounds collapse at the incumbent's floating-point spacing).
inline std::optional<Region> try_shrink(const Region& r, Point incumbent) {
  const double hx = r.width() / (2.0 * std::numbers::sqrt2);
  const double hy = r.height() / (2.0 * std::numbers::sqrt2);
  if (!(incumbent.x - hx < incumbent.x + hx) || !(incumbent.y - hy < incumbent.y + hy)) {
    return std::nullopt;
  }
  return shrink_region(r, incumbent);
}

}  // namespace pia::detail
