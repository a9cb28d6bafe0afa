#pragma once

// Reference implementations used only by tests. They avoid the library's own
// enumeration and parity code paths.

#include <cstdint>
#include <vector>

namespace oracle {

/// All weakly decreasing row sequences in a d x e frame, read off from the
/// binary words of length d + e with exactly d "down" letters.
inline std::vector<std::vector<int>> monotone_sequences(int d, int e) {
  std::vector<std::vector<int>> out;
  const int len = d + e;
  for (std::uint32_t word = 0; word < (1u << len); ++word) {
    if (__builtin_popcount(word) != d) continue;
    // walk from the top-right corner: bit set = step down, clear = step left
    std::vector<int> rows;
    int x = e;
    for (int s = 0; s < len; ++s) {
      if (word & (1u << s)) {
        rows.push_back(x);
      } else {
        --x;
      }
    }
    out.push_back(rows);
  }
  return out;
}

/// Walks the boundary of the diagram from (e, 0) to (0, d) and requires every
/// maximal straight run off the frame border to have even length.
inline bool boundary_even(const std::vector<int>& rows, int d, int e) {
  struct Step {
    bool horizontal;
    bool on_border;
  };
  std::vector<Step> steps;
  int x = e;
  for (int i = 0; i < d; ++i) {
    for (; x > rows[i]; --x) steps.push_back({true, i == 0});
    steps.push_back({false, x == 0 || x == e});
  }
  for (; x > 0; --x) steps.push_back({true, true});

  std::size_t i = 0;
  while (i < steps.size()) {
    std::size_t j = i;
    while (j < steps.size() && steps[j].horizontal == steps[i].horizontal) ++j;
    // a straight run has constant x or y, so it is on the border entirely or not at all
    if (!steps[i].on_border && (j - i) % 2 != 0) return false;
    i = j;
  }
  return true;
}

/// Half the number of unit edges on the boundary of the cell region, mod 2.
inline int half_perimeter_parity(const std::vector<int>& rows) {
  auto filled = [&](int i, int j) {
    return i >= 0 && i < static_cast<int>(rows.size()) && j >= 0 && j < rows[i];
  };
  int edges = 0;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    for (int j = 0; j < rows[i]; ++j) {
      edges += !filled(i - 1, j) + !filled(i + 1, j) + !filled(i, j - 1) + !filled(i, j + 1);
    }
  }
  return (edges / 2) % 2;
}

inline long long pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<long long> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j > 0; --j) row[j] += row[j - 1];
  }
  return row[k];
}

}  // namespace oracle
