// Smith normal form over exact big integers, with pivoting by minimal
// absolute value.
#pragma once

#include <cstddef>
#include <vector>

#include "a2c/rational.hpp"

namespace a2c {

using IntMatrix = std::vector<std::vector<BigInt>>;

struct SmithResult {
  /// Nonzero diagonal entries d1 | d2 | ... (all positive).
  std::vector<BigInt> invariant_factors;
  int rank = 0;
};

inline SmithResult smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  SmithResult result;

  std::size_t k = 0;
  while (k < rows && k < cols) {
    // Locate the minimal-absolute-value nonzero entry in the submatrix.
    std::size_t pr = k, pc = k;
    bool found = false;
    for (std::size_t i = k; i < rows; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        if (!found || boost::multiprecision::abs(a[i][j]) <
                          boost::multiprecision::abs(a[pr][pc])) {
          pr = i;
          pc = j;
          found = true;
        }
      }
    if (!found) break;
    std::swap(a[k], a[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][k], a[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a[i][k] == 0) continue;
        const BigInt q = a[i][k] / a[k][k];
        for (std::size_t j = k; j < cols; ++j) a[i][j] -= q * a[k][j];
        if (a[i][k] != 0) {
          // Remainder has smaller absolute value; make it the pivot.
          std::swap(a[k], a[i]);
          clean = false;
        }
      }
      if (!clean) continue;
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a[k][j] == 0) continue;
        const BigInt q = a[k][j] / a[k][k];
        for (std::size_t i = k; i < rows; ++i) a[i][j] -= q * a[i][k];
        if (a[k][j] != 0) {
          for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][k], a[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Pivot must divide the rest of the submatrix; fold in a violator.
      for (std::size_t i = k + 1; i < rows && clean; ++i)
        for (std::size_t j = k + 1; j < cols && clean; ++j)
          if (a[i][j] % a[k][k] != 0) {
            for (std::size_t c = k; c < cols; ++c) a[k][c] += a[i][c];
            clean = false;
          }
    }
    ++k;
  }

  for (std::size_t i = 0; i < k; ++i) {
    BigInt d = a[i][i];
    if (d < 0) d = -d;
    result.invariant_factors.push_back(d);
  }
  result.rank = static_cast<int>(result.invariant_factors.size());
  return result;
}

}  // namespace a2c
