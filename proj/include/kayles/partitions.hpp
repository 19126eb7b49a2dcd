// Integer partitions as kayles positions.
//
// Every position with m pins is a partition of m; enumerating partitions
// visits each multiset exactly once regardless of component order.

#pragma once

#include <cstdint>
#include <vector>

#include "kayles/position.hpp"

namespace kayles {

// Visits the partitions of m in descending-lexicographic order, starting
// with {m} and ending with {1,...,1}. m == 0 visits the empty position once.
template <class Visitor>
void for_each_partition(Length m, Visitor&& visit) {
  if (m == 0) {
    visit(Position{});
    return;
  }
  std::vector<Length> a{m};
  for (;;) {
    visit(Position(a));
    // Strip trailing ones, then lower the last part above one.
    Length ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return;
    const Length v = a.back() - 1;
    a.pop_back();
    Length rest = ones + 1 + v;
    while (rest >= v) {
      a.push_back(v);
      rest -= v;
    }
    if (rest > 0) a.push_back(rest);
  }
}

// All positions with total_pins <= max_pins: m = 0, 1, ..., max_pins,
// descending-lexicographic within each m.
std::vector<Position> positions_up_to(Length max_pins);

// Positions with exactly m pins.
std::vector<Position> positions_with(Length m);

}  // namespace kayles
