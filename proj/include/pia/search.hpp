#pragma once

#include <cstdint>

#include "pia/geometry.hpp"

namespace pia {

/// Result shared by all three solvers.
struct PiaResult {
  Point center;
  double radius = 0.0;
  std::uint64_t iterations = 0;
  std::uint64_t nodes_evaluated = 0;

  friend bool operator==(const PiaResult&, const PiaResult&) = default;
};

/// Optional hooks into the search loops. Used by tests to check monotonicity
/// and by the CLI to draw evaluated nodes.
class SearchObserver {
 public:
  virtual ~SearchObserver() = default;

  /// Called once per outer iteration with the region about to be searched.
  virtual void on_region(const Region&) {}
  virtual void on_node(Point, bool /*inside*/) {}
  /// Called whenever the incumbent improves.
  virtual void on_incumbent(Point, double /*clearance*/) {}
};

}  // namespace pia
