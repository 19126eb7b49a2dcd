// Test-only reference solver: plain recursion over unsorted strip lists,
// every cell tried, no memo, no canonical keys. Slow but obviously right;
// keep inputs small.

#pragma once

#include <vector>

namespace naive {

enum class Side { Left, Right };

inline bool wins_first(std::vector<int> strips, Side who) {
  const int width = who == Side::Left ? 1 : 2;
  bool moved = false;
  for (std::size_t s = 0; s < strips.size(); ++s) {
    const int n = strips[s];
    for (int cell = 0; cell + width <= n; ++cell) {
      moved = true;
      std::vector<int> next = strips;
      next.erase(next.begin() + static_cast<long>(s));
      if (cell > 0) next.push_back(cell);
      if (n - cell - width > 0) next.push_back(n - cell - width);
      if (!wins_first(next, who == Side::Left ? Side::Right : Side::Left)) return true;
    }
  }
  return !moved;
}

// 'L', 'R', 'N' or 'P'.
inline char outcome(const std::vector<int>& strips) {
  const bool l = wins_first(strips, Side::Left);
  const bool r = wins_first(strips, Side::Right);
  if (l && r) return 'N';
  if (l) return 'L';
  if (r) return 'R';
  return 'P';
}

// Partition counts by the pentagonal-number recurrence.
inline std::vector<long long> partition_counts(int max_n) {
  std::vector<long long> p(static_cast<std::size_t>(max_n) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    long long total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const long long sign = (k % 2) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p;
}

}  // namespace naive
