#pragma once

#include <cstddef>
#include <vector>

#include "pia/geometry.hpp"
#include "pia/search.hpp"

namespace pia {

struct GridConfig {
  std::size_t n = 12;  // columns
  std::size_t m = 12;  // rows
  double min_accuracy = 1e-9;
  std::size_t max_iterations = 200;
};

void validate(const GridConfig& cfg);

/// n x m lattice spanning r including its corners, row-major (y outer, x inner).
std::vector<Point> grid_nodes(const Region& r, std::size_t n, std::size_t m);

/// Sequential lattice refinement. Each iteration evaluates the lattice over
/// the current region, keeps the interior node with the largest clearance,
/// and recenters a region shrunk by sqrt(2) on it. Stops once the searched
/// region's smaller side is at most cfg.min_accuracy.
///
/// An iteration without interior nodes doubles the lattice density (up to
/// three times). Throws Error(DegenerateInterior) if no interior node has
/// been found at all.
PiaResult solve_grid(const Polygon& poly, const GridConfig& cfg, SearchObserver* observer = nullptr);

}  // namespace pia
