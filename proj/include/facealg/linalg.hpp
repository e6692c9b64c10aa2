#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "facealg/rational.hpp"

namespace facealg {

  using Matrix = std::vector<std::vector<Rational>>;

  // Exact rank by Gaussian elimination over the rationals.
  inline std::size_t rank(Matrix rows) {
    if (rows.empty()) {
      return 0;
    }
    std::size_t const cols = rows.front().size();
    std::size_t       r    = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
      std::size_t pivot = r;
      while (pivot < rows.size() && rows[pivot][c] == 0) {
        ++pivot;
      }
      if (pivot == rows.size()) {
        continue;
      }
      std::swap(rows[r], rows[pivot]);
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) {
          continue;
        }
        Rational const factor = rows[i][c] / rows[r][c];
        for (std::size_t j = c; j < cols; ++j) {
          if (rows[r][j] != 0) {
            rows[i][j] -= factor * rows[r][j];
          }
        }
      }
      ++r;
    }
    return r;
  }

  inline Matrix matmul(Matrix const& a, Matrix const& b) {
    std::size_t const n = a.size();
    std::size_t const m = b.empty() ? 0 : b.front().size();
    Matrix            out(n, std::vector<Rational>(m));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (a[i][k] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < m; ++j) {
          if (b[k][j] != 0) {
            out[i][j] += a[i][k] * b[k][j];
          }
        }
      }
    }
    return out;
  }

}  // namespace facealg
