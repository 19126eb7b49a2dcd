#include "kayles/partitions.hpp"

namespace kayles {

std::vector<Position> positions_with(Length m) {
  std::vector<Position> out;
  for_each_partition(m, [&](const Position& p) { out.push_back(p); });
  return out;
}

std::vector<Position> positions_up_to(Length max_pins) {
  std::vector<Position> out;
  for (Length m = 0; m <= max_pins; ++m)
    for_each_partition(m, [&](const Position& p) { out.push_back(p); });
  return out;
}

}  // namespace kayles
