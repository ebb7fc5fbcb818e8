#pragma once

#include <string>
#include <vector>

#include "defk/abelian.hpp"
#include "defk/monoid.hpp"

namespace defk {

/// Bar construction of a discrete monoid, truncated at simplicial degree 2:
/// one 0-cell, 1-cells M, 2-cells M x M with faces d0(a,b) = b,
/// d1(a,b) = a*b, d2(a,b) = a. Degree-1 and h1 need nothing higher.
struct BarTruncation {
  FiniteMonoid monoid;

  int d0(int a, int b) const {
    (void)a;
    return b;
  }
  int d1(int a, int b) const { return monoid.mul(a, b); }
  int d2(int a, int b) const {
    (void)b;
    return a;
  }
};

BarTruncation bar_truncation(const FiniteMonoid& m);

/// Edge-path presentation of pi_1 of the classifying space: one generator per
/// element, relators <a><b><a*b>^-1 for every pair plus <e>. n^2 + 1 relators.
struct GroupPresentation {
  std::vector<std::string> generators;
  // relator = word over generators, letters as (generator index, exponent)
  using Word = std::vector<std::pair<int, int>>;
  std::vector<Word> relators;
};

GroupPresentation pi1_presentation(const FiniteMonoid& m);

/// "< x_a, ... | w1, ... >" with relators as exponent words.
std::string to_string(const GroupPresentation& p);

/// Abelianization of the edge-path group: cokernel of the exponent matrix of
/// the relators. For commutative M this is Gr(M). Throws NotCommutative.
FgAbelianGroup pi1_abelianized(const FiniteMonoid& m);

/// H_1 of the bar construction via normalized integer chains:
/// C1 free on M - {e}, C2 free on pairs with both entries != e,
/// d2(a,b) = [b] - [a*b] + [a] with [e] read as 0, d1 = 0.
/// Throws NotCommutative.
FgAbelianGroup h1_bar(const FiniteMonoid& m);

/// Cross-check variant keeping the degenerate cells; must agree with h1_bar.
FgAbelianGroup h1_bar_unnormalized(const FiniteMonoid& m);

}  // namespace defk
