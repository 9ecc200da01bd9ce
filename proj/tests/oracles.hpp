#pragma once

// Independent reference computations shared by the tests and the acceptance run.

#include "herbert/matrix.hpp"

#include <algorithm>
#include <random>

namespace herbert::oracle {

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t max_dim = 6, int bound = 9) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  return m;
}

// Oracle: the k-th determinantal divisor is the gcd of all k x k minors, and the
// invariant factors are successive quotients.  Brute force over row/column subsets.
inline std::vector<Integer> invariant_factors_by_minors(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<Integer> divisors{1};
  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    Integer g = 0;
    std::vector<bool> rsel(m, false), csel(n, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        IntMatrix minor(k, k);
        std::size_t r = 0;
        for (std::size_t i = 0; i < m; ++i) {
          if (!rsel[i]) continue;
          std::size_t c = 0;
          for (std::size_t j = 0; j < n; ++j)
            if (csel[j]) minor(r, c++) = a(i, j);
          ++r;
        }
        g = gcd(g, abs(determinant(minor)));
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
  return factors;
}

inline bool is_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

}  // namespace herbert::oracle
