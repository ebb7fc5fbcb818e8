#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace defk {

/// Natural number extended with a countable infinity, for wedge
/// multiplicities ("interpreted as colimits of finite wedges").
/// Arithmetic: a + inf = inf; a * inf = inf for a >= 1; 0 * inf = 0.
/// Comparisons are total with inf maximal. No general subtraction.
class ExtNat {
public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t v) : value_(v) {}  // NOLINT(runtime/explicit)
  static constexpr ExtNat infinity() { return ExtNat(kInf, 0); }

  bool is_infinite() const { return value_ == kInf; }
  bool is_zero() const { return value_ == 0; }
  /// Finite value; must not be called on infinity.
  std::uint64_t finite() const;

  ExtNat operator+(ExtNat other) const;
  ExtNat operator*(ExtNat other) const;
  /// Removes one copy (used when splitting off a unit summand); requires a
  /// nonzero value, and infinity - 1 stays infinity.
  ExtNat minus_one() const;

  friend bool operator==(ExtNat a, ExtNat b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    return a.value_ <=> b.value_;
  }

private:
  static constexpr std::uint64_t kInf = ~std::uint64_t{0};
  constexpr ExtNat(std::uint64_t v, int) : value_(v) {}
  std::uint64_t value_ = 0;
};

std::string to_string(ExtNat x);

/// One wedge summand shape: Sigma^i ku (Free) or Sigma^i ku/n (Torsion).
struct KuSummand {
  std::uint32_t suspension = 0;
  std::uint64_t torsion = 0;  // 0 = free summand, n >= 2 = ku/n

  bool is_free() const { return torsion == 0; }
  friend auto operator<=>(const KuSummand&, const KuSummand&) = default;
};

inline KuSummand ku_summand(std::uint32_t suspension = 0) { return {suspension, 0}; }
inline KuSummand ku_mod(std::uint64_t n, std::uint32_t suspension = 0) {
  return {suspension, n};
}

/// Elementary ku-module: formal countable wedge of suspended copies of ku
/// and ku/n, in canonical form (sorted summands, no zero multiplicities,
/// ku/1 normalized away).
class ElementaryKuModule {
public:
  ElementaryKuModule() = default;

  /// Accumulates mult copies of s; ku/1 is contractible and dropped.
  void add(KuSummand s, ExtNat mult);

  bool is_zero() const { return summands_.empty(); }
  const std::map<KuSummand, ExtNat>& summands() const { return summands_; }
  ExtNat multiplicity(KuSummand s) const;

  friend bool operator==(const ElementaryKuModule&, const ElementaryKuModule&) = default;

private:
  std::map<KuSummand, ExtNat> summands_;  // keyed (suspension, free first, n)
};

ElementaryKuModule ku_module(std::initializer_list<std::pair<KuSummand, ExtNat>> parts);

/// One graded piece of the homotopy of a ku-module: free rank plus torsion
/// multiplicities keyed by n.
struct HomotopyGroupData {
  ExtNat rank = 0;
  std::map<std::uint64_t, ExtNat> torsion;

  bool is_zero() const { return rank.is_zero() && torsion.empty(); }
  void add_rank(ExtNat r);
  void add_torsion(std::uint64_t n, ExtNat mult);

  friend bool operator==(const HomotopyGroupData&, const HomotopyGroupData&) = default;
};

/// Prints like the abelian-group format with Z^inf allowed: "Z^9", "Z/2 + Z/2",
/// "(Z/2)^inf", "0".
std::string to_string(const HomotopyGroupData& g);

/// pi_m, summand-wise: Sigma^i ku contributes Z when m >= i and m - i is
/// even; Sigma^i ku/n contributes Z/n under the same condition; everything
/// vanishes in negative degrees (connectivity).
HomotopyGroupData pi(const ElementaryKuModule& x, int m);

/// Cokernel of the Bott map beta: pi_{m-2} -> pi_m. Summand-wise, Sigma^i ku
/// contributes Z exactly at m = i and Sigma^i ku/n contributes Z/n exactly at
/// m = i; Bott is an isomorphism above.
HomotopyGroupData bott_cokernel(const ElementaryKuModule& x, int m);

/// Injectivity of beta in degree m, recomputed from the per-summand
/// bookkeeping (source slots must embed into target slots).
bool bott_injective(const ElementaryKuModule& x, int m);

/// Largest suspension appearing. Throws ZeroModule on the zero module.
std::uint32_t suspension_degree(const ElementaryKuModule& x);

/// Derived smash product over ku, extended bilinearly over wedges:
/// ku ^ ku = ku, ku ^ ku/n = ku/n,
/// ku/n ^ ku/m = ku/gcd ∨ Sigma(ku/gcd) (dropped when gcd = 1);
/// suspensions add, multiplicities multiply.
ElementaryKuModule smash(const ElementaryKuModule& x, const ElementaryKuModule& y);

/// Pushout along ku -> X, ku -> Y: ku ∨ (X minus one ku) ∨ (Y minus one ku).
/// Both arguments need a degree-0 free summand; throws NoUnitSummand.
ElementaryKuModule free_product(const ElementaryKuModule& x, const ElementaryKuModule& y);

/// Wedge of r copies of ku, one per irreducible representation. Throws
/// ZeroModule when r = 0.
ElementaryKuModule kdef_finite_group(std::uint64_t r);

/// Inverts the splitting pi_m(X) = rho_m ⊕ K^{-m}(*): pi with one Z removed
/// in positive even degrees. Requires m >= 1 (NonPositiveDegree) and a
/// degree-0 free summand (NoUnitSummand).
HomotopyGroupData deformation_rho(const ElementaryKuModule& x, int m);

/// Canonical print: "8*ku + S^2(ku)", "ku/2 + S(ku/2)", "inf*ku", "0".
std::string to_string(const ElementaryKuModule& x);

/// Parses the module expression grammar: atoms `ku`, `ku/N`, `0`; suspension
/// `S^i(expr)` and `S(expr)`; wedge `+`; multiplicity `K*expr` / `inf*expr`;
/// parentheses. Throws Error("ParseError", ...) naming the offending token.
ElementaryKuModule parse_ku_expression(const std::string& text);

}  // namespace defk
