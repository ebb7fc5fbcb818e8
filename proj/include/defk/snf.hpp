#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

namespace defk {

/// Exact arbitrary-precision integer. Intermediate Smith-normal-form entries
/// can blow up even on small inputs, so no fixed-width shortcuts anywhere.
using Int = boost::multiprecision::cpp_int;

/// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> entries;  // rows * cols, row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Int& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

  static IntMatrix identity(std::size_t n);
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
bool operator==(const IntMatrix& a, const IntMatrix& b);

/// U * A * V = S with U, V unimodular and S diagonal, d1 | d2 | ..., di >= 0.
struct SnfResult {
  IntMatrix s;
  IntMatrix u;  // rows x rows
  IntMatrix v;  // cols x cols
};

SnfResult smith_normal_form(const IntMatrix& a);

/// Diagonal of the SNF, padded with zeros to `rows` entries (rows beyond the
/// diagonal contribute free summands to the cokernel).
std::vector<Int> snf_diagonal(const SnfResult& snf);

}  // namespace defk
