#include "pia/polygen.hpp"

#include <cmath>
#include <numbers>

#include "pia/error.hpp"

namespace pia {

namespace {

constexpr int kMaxAttempts = 100;
constexpr double kMaxJitter = 0.1;
constexpr int kMaxRepairRounds = 200;

Point uniform_in(const Region& r, Rng& rng) {
  const double u = rng.uniform();
  const double v = rng.uniform();
  return {r.min_x() + u * r.width(), r.min_y() + v * r.height()};
}

std::vector<std::size_t> reflex_vertices(const std::vector<Point>& ring) {
  std::vector<std::size_t> out;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point prev = ring[(i + n - 1) % n];
    const Point next = ring[(i + 1) % n];
    if (cross(ring[i] - prev, next - ring[i]) < -kCollinearTolerance) out.push_back(i);
  }
  return out;
}

}  // namespace

Region unit_bounds() { return Region(0.0, 1.0, 0.0, 1.0); }

Polygon random_triangle(Rng& rng, const Region& bounds) {
  const double min_area = 1e-9 * bounds.area();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Point a = uniform_in(bounds, rng);
    const Point b = uniform_in(bounds, rng);
    const Point c = uniform_in(bounds, rng);
    if (0.5 * std::abs(cross(b - a, c - a)) < min_area) continue;
    return Polygon({a, b, c});
  }
  throw Error(ErrorCode::GenerationFailed, "no non-degenerate triangle after 100 attempts");
}

Polygon random_convex_polygon(Rng& rng, std::size_t n, const Region& bounds) {
  if (n < 3) throw Error(ErrorCode::InvalidInput, "convex polygon needs n >= 3");

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // Semi-axes between half and all of the available half-extent; the
    // center is then placed uniformly where the ellipse still fits.
    const double rx = 0.5 * bounds.width() * (0.5 + 0.5 * rng.uniform());
    const double ry = 0.5 * bounds.height() * (0.5 + 0.5 * rng.uniform());
    const Point center{bounds.min_x() + rx + rng.uniform() * (bounds.width() - 2.0 * rx),
                       bounds.min_y() + ry + rng.uniform() * (bounds.height() - 2.0 * ry)};
    const double phase = 2.0 * std::numbers::pi * rng.uniform();

    std::vector<double> angles(n);
    for (std::size_t i = 0; i < n; ++i) {
      angles[i] = phase + 2.0 * std::numbers::pi * (static_cast<double>(i) + 0.8 * rng.uniform()) /
                              static_cast<double>(n);
    }
    std::vector<double> amplitude(n, kMaxJitter);
    std::vector<double> scale(n);
    for (std::size_t i = 0; i < n; ++i) scale[i] = 1.0 - amplitude[i] * rng.uniform();

    auto place = [&](std::size_t i) {
      return Point{center.x + rx * scale[i] * std::cos(angles[i]),
                   center.y + ry * scale[i] * std::sin(angles[i])};
    };
    std::vector<Point> ring(n);
    for (std::size_t i = 0; i < n; ++i) ring[i] = place(i);

    for (int round = 0; round < kMaxRepairRounds; ++round) {
      const auto reflex = reflex_vertices(ring);
      if (reflex.empty()) break;
      for (std::size_t i : reflex) {
        for (std::size_t k : {(i + n - 1) % n, i, (i + 1) % n}) {
          amplitude[k] *= 0.5;
          scale[k] = 1.0 - amplitude[k] * rng.uniform();
          ring[k] = place(k);
        }
      }
    }
    if (!reflex_vertices(ring).empty()) continue;
    try {
      Polygon poly(std::move(ring));
      if (is_convex(poly)) return poly;
    } catch (const Error&) {
      // Degenerate draw; try again.
    }
  }
  throw Error(ErrorCode::GenerationFailed, "could not build a convex polygon");
}

std::vector<Polygon> generate_corpus(CorpusShape shape, std::size_t count, std::uint64_t seed,
                                     std::size_t vertices) {
  std::vector<Polygon> corpus;
  corpus.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = Rng::substream(seed, i);
    corpus.push_back(shape == CorpusShape::Triangle ? random_triangle(rng, unit_bounds())
                                                    : random_convex_polygon(rng, vertices, unit_bounds()));
  }
  return corpus;
}

}  // namespace pia
