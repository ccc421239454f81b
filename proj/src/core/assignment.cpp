#include "detta/core/assignment.hpp"

#include <algorithm>
#include <limits>

namespace detta {

std::vector<std::pair<std::size_t, std::size_t>> max_weight_assignment(const WeightMatrix& w,
                                                                       double min_weight) {
  std::vector<std::pair<std::size_t, std::size_t>> result;
  if (w.rows == 0 || w.cols == 0) return result;

  // Square cost matrix; ineligible and padding entries cost 0 so they never
  // beat an eligible (negative-cost) pair.
  const std::size_t n = std::max(w.rows, w.cols);
  auto cost = [&](std::size_t r, std::size_t c) -> double {
    if (r >= w.rows || c >= w.cols) return 0.0;
    const double v = w.at(r, c);
    return v >= min_weight ? -v : 0.0;
  };

  // Potentials-based shortest augmenting path, 1-indexed with a sentinel column 0.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t r = p[j] - 1;
    const std::size_t c = j - 1;
    if (r < w.rows && c < w.cols && w.at(r, c) >= min_weight) result.emplace_back(r, c);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace detta
