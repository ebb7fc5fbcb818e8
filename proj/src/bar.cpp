#include "defk/bar.hpp"

#include <sstream>

#include "defk/error.hpp"

namespace defk {

BarTruncation bar_truncation(const FiniteMonoid& m) { return BarTruncation{m}; }

GroupPresentation pi1_presentation(const FiniteMonoid& m) {
  GroupPresentation p;
  p.generators.reserve(m.size());
  for (int i = 0; i < m.size(); ++i) p.generators.push_back("x_" + m.name(i));
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b)
      p.relators.push_back({{a, 1}, {b, 1}, {m.mul(a, b), -1}});
  p.relators.push_back({{m.identity(), 1}});
  return p;
}

std::string to_string(const GroupPresentation& p) {
  std::ostringstream out;
  out << "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out << ", ";
    out << p.generators[i];
  }
  out << " | ";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (r) out << ", ";
    for (const auto& [gen, exp] : p.relators[r]) {
      out << p.generators[gen];
      if (exp != 1) out << "^" << exp;
    }
  }
  out << " >";
  return out.str();
}

namespace {

void require_commutative(const FiniteMonoid& m) {
  if (!is_commutative(m)) raise("NotCommutative", "operation requires a commutative monoid");
}

}  // namespace

FgAbelianGroup pi1_abelianized(const FiniteMonoid& m) {
  require_commutative(m);
  GroupPresentation p = pi1_presentation(m);
  IntMatrix exponents(p.generators.size(), p.relators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const auto& [gen, exp] : p.relators[r]) exponents.at(gen, r) += exp;
  return cokernel(exponents);
}

FgAbelianGroup h1_bar(const FiniteMonoid& m) {
  require_commutative(m);
  const int n = m.size();
  const int e = m.identity();
  // generator index of the C1 basis: elements other than e, in order
  std::vector<int> row(n, -1);
  int rows = 0;
  for (int x = 0; x < n; ++x)
    if (x != e) row[x] = rows++;

  std::vector<std::pair<int, int>> cells;  // nondegenerate 2-cells
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != e && b != e) cells.emplace_back(a, b);

  IntMatrix boundary(rows, cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    auto [a, b] = cells[c];
    boundary.at(row[b], c) += 1;  // d0
    int ab = m.mul(a, b);
    if (ab != e) boundary.at(row[ab], c) -= 1;  // d1, with [e] read as 0
    boundary.at(row[a], c) += 1;                // d2
  }
  return cokernel(boundary);
}

FgAbelianGroup h1_bar_unnormalized(const FiniteMonoid& m) {
  require_commutative(m);
  const int n = m.size();
  IntMatrix boundary(n, static_cast<std::size_t>(n) * n);
  std::size_t c = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b, ++c) {
      boundary.at(b, c) += 1;
      boundary.at(m.mul(a, b), c) -= 1;
      boundary.at(a, c) += 1;
    }
  return cokernel(boundary);
}

}  // namespace defk
