#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace detta {

/// Row-major dense weight matrix for bipartite assignment.
struct WeightMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  WeightMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Maximum-weight one-to-one assignment (Hungarian / Kuhn-Munkres, O(n^3)).
/// Only pairs with weight >= min_weight are eligible; the result maximizes the
/// summed weight over eligible pairs and lists (row, col) sorted by row.
std::vector<std::pair<std::size_t, std::size_t>> max_weight_assignment(const WeightMatrix& w,
                                                                       double min_weight);

}  // namespace detta
