#pragma once

#include <vector>

#include "defk/abelian.hpp"
#include "defk/monoid.hpp"

namespace defk {

/// Group completion of a finite commutative monoid, together with the unit
/// map M -> Gr(M). unit[x] holds the coordinates of element x in the
/// canonical decomposition of the group (see CokernelResult).
struct CompletionResult {
  FgAbelianGroup group;
  std::vector<std::vector<Int>> unit;
};

/// Relation matrix of the obvious presentation of Gr(M): one generator x_a
/// per element, one column x_a + x_b - x_{a*b} per pair (a, b), plus the
/// explicit column x_e. Keeping x_e as a generator keeps generator indexing
/// aligned with element indexing.
IntMatrix monoid_relation_matrix(const FiniteMonoid& m);

/// Brute-force pairs model of the Grothendieck group: M x M modulo
/// (a,s) ~ (a',s') iff exists c with a*s'*c = a'*s*c, with unit a -> [(a,e)].
/// This is the oracle every other completion route is checked against.
CompletionResult gr_pairs(const FiniteMonoid& m);

/// Generators-and-relations route: cokernel of monoid_relation_matrix.
CompletionResult gr_presentation(const FiniteMonoid& m);

/// Canonical form of a finite abelian group given by its table.
/// Throws NotAbelianGroup.
FgAbelianGroup structure_of_finite_abelian_group(const FiniteMonoid& m);

/// Quotient of a commutative monoid by a submonoid: classes of a ~ a' iff
/// exists b, b' in the submonoid with a*b = a'*b', with the induced operation
/// materialized as a FiniteMonoid so everything downstream applies unchanged.
struct QuotientMonoid {
  FiniteMonoid parent;
  Submonoid sub;
  std::vector<std::vector<int>> classes;  // partition of parent elements
  std::vector<int> class_of;              // element -> class index
  FiniteMonoid carrier;                   // class index == carrier element index
};

QuotientMonoid quotient_monoid(const FiniteMonoid& a, const Submonoid& sub);

/// True iff every class of the quotient has an inverse class.
bool is_quotient_group(const QuotientMonoid& q);

/// Gr(P) modulo the image of Gr(N): relation matrix of P augmented with one
/// column x_n per submonoid member, reduced to canonical form.
FgAbelianGroup rho(const FiniteMonoid& p, const Submonoid& n);

/// rho together with the coordinates of each generator of Gr(P) in it.
CokernelResult rho_presentation(const FiniteMonoid& p, const Submonoid& n);

/// Existence half of the universal property of A -> A/A': a homomorphism f
/// (given element-wise into `target`) that kills the submonoid factors
/// through the quotient iff it is constant on every class. Uniqueness is
/// automatic from surjectivity of the quotient map.
/// Throws NotHomomorphism, SubmonoidNotKilled.
bool universal_property_check(const FiniteMonoid& a, const Submonoid& sub,
                              const FiniteMonoid& target, const std::vector<int>& f);

}  // namespace defk
