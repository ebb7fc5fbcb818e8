#pragma once

#include <string>
#include <vector>

#include "defk/snf.hpp"

namespace defk {

/// Finitely generated abelian group in canonical form: free rank plus a
/// divisor chain d1 | d2 | ... with every di >= 2. The chain is the unique
/// canonical representation, so isomorphism is a plain comparison.
struct FgAbelianGroup {
  std::size_t rank = 0;
  std::vector<Int> invariant_factors;  // d1 | d2 | ..., each >= 2

  bool is_trivial() const { return rank == 0 && invariant_factors.empty(); }
  /// Number of elements; only meaningful when rank == 0.
  Int order() const;
};

bool iso(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

/// Renormalizes an arbitrary multiset of torsion orders (>= 1 each) into a
/// divisor chain via repeated gcd/lcm exchanges; 1s are dropped.
std::vector<Int> divisor_chain(std::vector<Int> torsion);

/// Canonical print: "Z^2 + Z/2 + Z/4" (rank first, factors in divisor order),
/// "Z" for rank one, "0" for the trivial group.
std::string to_string(const FgAbelianGroup& g);

/// Cokernel of a: Z^rows / image(a), canonical form. `coords` carries the
/// image of each standard generator of Z^rows in the canonical decomposition:
/// first `rank` free coordinates, then one residue per invariant factor
/// (reduced into [0, di)). This is the unit-map data used by the completion
/// routines.
struct CokernelResult {
  FgAbelianGroup group;
  std::vector<std::vector<Int>> coords;  // rows x (rank + #factors)
};

CokernelResult cokernel_with_coords(const IntMatrix& a);
FgAbelianGroup cokernel(const IntMatrix& a);

}  // namespace defk
