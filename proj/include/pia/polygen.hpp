#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pia/geometry.hpp"
#include "pia/rng.hpp"

namespace pia {

/// Three uniform points in bounds, redrawn while the triangle's area is
/// below 1e-9 of the bounds area. Throws Error(GenerationFailed) after 100
/// attempts.
Polygon random_triangle(Rng& rng, const Region& bounds);

/// n points on a random axis-aligned ellipse inside bounds, at stratified
/// random angles, each pulled inward by up to 10%. Vertices that end up
/// reflex get their jitter redrawn at half amplitude until the polygon is
/// convex.
Polygon random_convex_polygon(Rng& rng, std::size_t n, const Region& bounds);

enum class CorpusShape { Triangle, Convex };

/// count polygons; polygon i is drawn from Rng::substream(seed, i).
std::vector<Polygon> generate_corpus(CorpusShape shape, std::size_t count, std::uint64_t seed,
                                     std::size_t vertices = 3);

/// [0, 1] x [0, 1]
Region unit_bounds();

}  // namespace pia
