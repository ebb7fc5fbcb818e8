#include "defk/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace defk {

Int FgAbelianGroup::order() const {
  Int n = 1;
  for (const Int& d : invariant_factors) n *= d;
  return n;
}

bool iso(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  return a.rank == b.rank && a.invariant_factors == b.invariant_factors;
}

std::vector<Int> divisor_chain(std::vector<Int> torsion) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  // gcd/lcm exchange: each pass moves common factors down the chain; the
  // multiset product is invariant, so this terminates in canonical form.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < torsion.size(); ++i)
      for (std::size_t j = i + 1; j < torsion.size(); ++j) {
        Int g = gcd(torsion[i], torsion[j]);
        if (g == torsion[i] || g == torsion[j]) continue;  // already comparable
        Int l = lcm(torsion[i], torsion[j]);
        torsion[i] = g;
        torsion[j] = l;
        changed = true;
      }
  }
  std::sort(torsion.begin(), torsion.end());
  std::erase_if(torsion, [](const Int& d) { return d <= 1; });
  return torsion;
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  std::vector<Int> torsion = a.invariant_factors;
  torsion.insert(torsion.end(), b.invariant_factors.begin(), b.invariant_factors.end());
  return FgAbelianGroup{a.rank + b.rank, divisor_chain(std::move(torsion))};
}

std::string to_string(const FgAbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (g.rank == 1) {
    out << "Z";
    first = false;
  } else if (g.rank > 1) {
    out << "Z^" << g.rank;
    first = false;
  }
  for (const Int& d : g.invariant_factors) {
    if (!first) out << " + ";
    out << "Z/" << d;
    first = false;
  }
  return out.str();
}

CokernelResult cokernel_with_coords(const IntMatrix& a) {
  SnfResult snf = smith_normal_form(a);
  std::vector<Int> diag = snf_diagonal(snf);
  const std::size_t m = a.rows;

  // Slot j of U*x survives as Z (diag 0) or Z/diag[j] (diag >= 2).
  std::vector<std::size_t> free_slots, torsion_slots;
  for (std::size_t j = 0; j < m; ++j) {
    if (diag[j] == 0)
      free_slots.push_back(j);
    else if (diag[j] >= 2)
      torsion_slots.push_back(j);
  }
  // SNF diagonal is a divisor chain with zeros last, so torsion_slots is
  // already in divisor order.
  FgAbelianGroup group;
  group.rank = free_slots.size();
  for (std::size_t j : torsion_slots) group.invariant_factors.push_back(diag[j]);

  CokernelResult result;
  result.coords.assign(m, std::vector<Int>(free_slots.size() + torsion_slots.size()));
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t slot = 0;
    for (std::size_t j : free_slots) result.coords[i][slot++] = snf.u.at(j, i);
    for (std::size_t j : torsion_slots) {
      Int r = snf.u.at(j, i) % diag[j];
      if (r < 0) r += diag[j];
      result.coords[i][slot++] = r;
    }
  }
  result.group = std::move(group);
  return result;
}

FgAbelianGroup cokernel(const IntMatrix& a) { return cokernel_with_coords(a).group; }

}  // namespace defk
