#pragma once

#include <cstddef>
#include <cstdint>

#include "pia/geometry.hpp"
#include "pia/rng.hpp"
#include "pia/search.hpp"

namespace pia {

struct RandomConfig {
  std::size_t k = 50;  // consecutive interior misses before shrinking
  double min_accuracy = 1e-9;
  std::size_t sample_cap = 10000;  // samples per iteration
  std::uint64_t seed = 0;
};

void validate(const RandomConfig& cfg);

/// Draws u, v uniform in [0, 1) and maps them affinely onto r.
Point sample_point(const Region& r, Rng& rng);

/// Region centered on the incumbent with both extents divided by sqrt(2).
Region shrink_region(const Region& r, Point incumbent);

/// Randomized shrinking-region search. Samples uniform nodes in the region;
/// only interior samples count. The region is shrunk around the incumbent
/// after k consecutive interior samples fail to improve it, or after
/// cfg.sample_cap samples. Deterministic for a given seed.
PiaResult solve_random(const Polygon& poly, const RandomConfig& cfg,
                       SearchObserver* observer = nullptr);

}  // namespace pia
