#pragma once

#include <vector>

namespace domtree::detail {

/// Visits every k-subset of {0..n-1} in lexicographic order of the
/// sorted index list ({0,1} before {0,2} before {1,2}). The callback
/// returns false to stop early.
template <typename F>
void for_each_combination(int n, int k, F&& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> combo(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) combo[static_cast<size_t>(i)] = i;
  while (true) {
    if (!visit(static_cast<const std::vector<int>&>(combo))) return;
    int i = k - 1;
    while (i >= 0 && combo[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++combo[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace domtree::detail
