#include "defk/snf.hpp"

#include <cassert>
#include <cstdlib>

namespace defk {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  assert(a.cols == b.rows);
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
}

namespace {

// Elementary operations mirrored on the transform matrices so that
// u * a_original * v stays equal to s at every step.
struct SnfWork {
  IntMatrix s, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < s.cols; ++c) std::swap(s.at(i, c), s.at(j, c));
    for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < s.rows; ++r) std::swap(s.at(r, i), s.at(r, j));
    for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }

  // row i -= q * row j
  void add_row(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < s.cols; ++c) s.at(i, c) -= q * s.at(j, c);
    for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(j, c);
  }

  // col i -= q * col j
  void add_col(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < s.rows; ++r) s.at(r, i) -= q * s.at(r, j);
    for (std::size_t r = 0; r < v.rows; ++r) v.at(r, i) -= q * v.at(r, j);
  }

  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < s.cols; ++c) s.at(i, c) = -s.at(i, c);
    for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }
};

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Smallest nonzero |entry| in the submatrix starting at (t, t); false if none.
bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Int best;
  for (std::size_t r = t; r < s.rows; ++r)
    for (std::size_t c = t; c < s.cols; ++c) {
      const Int& x = s.at(r, c);
      if (x == 0) continue;
      Int a = abs_int(x);
      if (!found || a < best) {
        found = true;
        best = a;
        pr = r;
        pc = c;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  SnfWork w{a, IntMatrix::identity(a.rows), IntMatrix::identity(a.cols)};
  const std::size_t bound = std::min(a.rows, a.cols);

  for (std::size_t t = 0; t < bound; ++t) {
    std::size_t pr = t, pc = t;
    if (!find_pivot(w.s, t, pr, pc)) break;
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    // Reduce until the pivot divides its whole row and column and everything
    // else there is zero. Each remainder swap strictly shrinks |pivot|.
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < w.s.rows; ++r) {
        if (w.s.at(r, t) == 0) continue;
        Int q = w.s.at(r, t) / w.s.at(t, t);
        w.add_row(r, t, q);
        if (w.s.at(r, t) != 0) {  // remainder becomes the new, smaller pivot
          w.swap_rows(t, r);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < w.s.cols; ++c) {
        if (w.s.at(t, c) == 0) continue;
        Int q = w.s.at(t, c) / w.s.at(t, t);
        w.add_col(c, t, q);
        if (w.s.at(t, c) != 0) {
          w.swap_cols(t, c);
          clean = false;
        }
      }
      if (!clean) continue;

      // Row and column are zero outside the pivot; enforce divisibility of the
      // remaining submatrix by folding a bad column onto the pivot column.
      bool divides = true;
      for (std::size_t r = t + 1; r < w.s.rows && divides; ++r)
        for (std::size_t c = t + 1; c < w.s.cols && divides; ++c)
          if (w.s.at(r, c) % w.s.at(t, t) != 0) {
            w.add_col(t, c, Int(-1));  // col t += col c
            divides = false;
          }
      if (divides) break;
    }
  }

  // Positive diagonal.
  for (std::size_t t = 0; t < bound; ++t)
    if (w.s.at(t, t) < 0) w.negate_row(t);

  return SnfResult{std::move(w.s), std::move(w.u), std::move(w.v)};
}

std::vector<Int> snf_diagonal(const SnfResult& snf) {
  std::vector<Int> d(snf.s.rows, Int(0));
  const std::size_t bound = std::min(snf.s.rows, snf.s.cols);
  for (std::size_t t = 0; t < bound; ++t) d[t] = snf.s.at(t, t);
  return d;
}

}  // namespace defk
