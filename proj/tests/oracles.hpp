#pragma once

#include <cstdint>
#include <vector>

// Slow-but-obvious reference implementations used only by tests.  Kept
// independent of the library code on purpose: nothing here calls weylhom.
namespace oracle {

// Pascal's triangle in int64; rows up to 62 stay in range.
inline std::vector<std::vector<long long>> pascal(int nmax) {
  std::vector<std::vector<long long>> t(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    t[n].assign(static_cast<std::size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

inline long long pascal_at(const std::vector<std::vector<long long>>& t, int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace oracle
