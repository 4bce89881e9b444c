#pragma once

#include <vector>

#include "pia/search.hpp"

namespace pia::test {

/// Records the incumbent trace and searched regions of one solve.
class TraceRecorder : public SearchObserver {
 public:
  void on_region(const Region& r) override { regions.push_back(r); }
  void on_node(Point p, bool inside) override {
    ++nodes;
    if (!inside) ++outside;
    last_node = p;
  }
  void on_incumbent(Point p, double c) override {
    incumbents.push_back(p);
    clearances.push_back(c);
  }

  bool clearance_non_decreasing() const {
    for (std::size_t i = 1; i < clearances.size(); ++i) {
      if (clearances[i] < clearances[i - 1]) return false;
    }
    return true;
  }

  std::vector<Region> regions;
  std::vector<Point> incumbents;
  std::vector<double> clearances;
  std::size_t nodes = 0;
  std::size_t outside = 0;
  Point last_node;
};

}  // namespace pia::test
