#pragma once

#include <initializer_list>
#include <vector>

#include "defk/abelian.hpp"
#include "defk/monoid.hpp"

namespace defk::testing {

inline FgAbelianGroup fg(std::size_t rank, std::initializer_list<int> factors = {}) {
  FgAbelianGroup g;
  g.rank = rank;
  for (int d : factors) g.invariant_factors.push_back(d);
  return g;
}

// exact determinant via cofactor expansion; fine for the small matrices used
// to check unimodularity of the SNF transforms
inline Int determinant(const IntMatrix& m) {
  if (m.rows != m.cols) return 0;
  if (m.rows == 0) return 1;
  if (m.rows == 1) return m.at(0, 0);
  Int det = 0;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (m.at(0, c) == 0) continue;
    IntMatrix minor(m.rows - 1, m.cols - 1);
    for (std::size_t r = 1; r < m.rows; ++r) {
      std::size_t out_c = 0;
      for (std::size_t cc = 0; cc < m.cols; ++cc) {
        if (cc == c) continue;
        minor.at(r - 1, out_c++) = m.at(r, cc);
      }
    }
    Int term = m.at(0, c) * determinant(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

// two-element monoid {e, a} with a*a = a
inline FiniteMonoid idempotent_pair() {
  return validate({"e", "a"}, {0, 1, 1, 1}, 0);
}

}  // namespace defk::testing
