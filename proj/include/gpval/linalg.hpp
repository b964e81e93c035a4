#pragma once

#include <cstddef>
#include <vector>

#include "gpval/rational.hpp"

namespace gpval {

using Point = std::vector<Rational>;

/// Rank of a dense rational matrix (rows may have any common length).
inline int matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      Rational f = rows[k][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

/// Dimension of the affine hull of a nonempty point set.
inline int affine_rank(const std::vector<Point>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<std::vector<Rational>> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> d(pts[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return matrix_rank(std::move(diffs));
}

inline Point barycenter(const std::vector<Point>& pts) {
  Point b(pts.front().size(), Rational(0));
  for (const auto& p : pts)
    for (std::size_t j = 0; j < b.size(); ++j) b[j] += p[j];
  Rational n(static_cast<long long>(pts.size()));
  for (auto& v : b) v /= n;
  return b;
}

}  // namespace gpval
