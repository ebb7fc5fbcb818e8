#include "defk/completion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "defk/error.hpp"
#include "defk/kernels.hpp"

namespace defk {

namespace {

void require_commutative(const FiniteMonoid& m) {
  if (!is_commutative(m)) raise("NotCommutative", "operation requires a commutative monoid");
}

void require_submonoid(const FiniteMonoid& m, const Submonoid& s) {
  std::vector<char> in(m.size(), 0);
  for (int x : s.members) {
    if (x < 0 || x >= m.size()) raise("NotSubmonoid", "member index out of range");
    in[x] = 1;
  }
  if (!in[m.identity()]) raise("NotSubmonoid", "submonoid must contain the identity");
  for (int x : s.members)
    for (int y : s.members)
      if (!in[m.mul(x, y)]) raise("NotSubmonoid", "member set is not closed");
}

// Distinct labels in ascending order -> dense class ids.
std::vector<int> dense_ids(const std::vector<int>& label, std::vector<int>& reps) {
  reps.clear();
  for (std::size_t p = 0; p < label.size(); ++p)
    if (label[p] == static_cast<int>(p)) reps.push_back(static_cast<int>(p));
  std::vector<int> id(label.size());
  for (std::size_t p = 0; p < label.size(); ++p) {
    auto it = std::lower_bound(reps.begin(), reps.end(), label[p]);
    id[p] = static_cast<int>(it - reps.begin());
  }
  return id;
}

}  // namespace

IntMatrix monoid_relation_matrix(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  IntMatrix rel(n, n * n + 1);
  std::size_t col = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b, ++col) {
      rel.at(a, col) += 1;
      rel.at(b, col) += 1;
      rel.at(m.mul(static_cast<int>(a), static_cast<int>(b)), col) -= 1;
    }
  rel.at(m.identity(), col) = 1;
  return rel;
}

namespace {

// Same presentation with only the a <= b half of the relation columns; for
// commutative input the other half is redundant and SNF time matters for the
// 64-element structure extraction below.
IntMatrix half_relation_matrix(const FiniteMonoid& m) {
  const std::size_t n = m.size();
  IntMatrix rel(n, n * (n + 1) / 2 + 1);
  std::size_t col = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b, ++col) {
      rel.at(a, col) += 1;
      rel.at(b, col) += 1;
      rel.at(m.mul(static_cast<int>(a), static_cast<int>(b)), col) -= 1;
    }
  rel.at(m.identity(), col) = 1;
  return rel;
}

}  // namespace

FgAbelianGroup structure_of_finite_abelian_group(const FiniteMonoid& m) {
  if (!is_group(m) || !is_commutative(m))
    raise("NotAbelianGroup", "input is not an abelian group");
  return cokernel(half_relation_matrix(m));
}

CompletionResult gr_presentation(const FiniteMonoid& m) {
  require_commutative(m);
  CokernelResult cok = cokernel_with_coords(monoid_relation_matrix(m));
  return CompletionResult{std::move(cok.group), std::move(cok.coords)};
}

CompletionResult gr_pairs(const FiniteMonoid& m) {
  require_commutative(m);
  const int n = m.size();
  std::vector<int> label = kernels::pair_class_labels(m.table(), n);
  std::vector<int> reps;
  std::vector<int> id = dense_ids(label, reps);
  const int k = static_cast<int>(reps.size());

  // induced operation on classes, via representatives
  auto pair_mul = [&](int p, int q) {
    int a = m.mul(p / n, q / n);
    int s = m.mul(p % n, q % n);
    return a * n + s;
  };
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i * k + j] = id[label[pair_mul(reps[i], reps[j])]];
  // well-definedness: products of equivalent pairs land in one class
  for (int p = 0; p < n * n; ++p)
    for (int q = 0; q < n * n; ++q)
      if (id[label[pair_mul(p, q)]] != table[id[label[p]] * k + id[label[q]]])
        throw std::logic_error("pairs relation is not a congruence");

  std::vector<std::string> names;
  names.reserve(k);
  for (int rep : reps)
    names.push_back("(" + m.name(rep / n) + "," + m.name(rep % n) + ")");
  FiniteMonoid carrier =
      validate(std::move(names), std::move(table),
               id[label[m.identity() * n + m.identity()]], static_cast<std::size_t>(k));

  CokernelResult canon = cokernel_with_coords(half_relation_matrix(carrier));
  CompletionResult result;
  result.group = std::move(canon.group);
  result.unit.reserve(n);
  for (int x = 0; x < n; ++x)
    result.unit.push_back(canon.coords[id[label[x * n + m.identity()]]]);
  return result;
}

QuotientMonoid quotient_monoid(const FiniteMonoid& a, const Submonoid& sub) {
  require_commutative(a);
  require_submonoid(a, sub);
  const int n = a.size();

  // reachable sets R_x = { x*b : b in sub }; x ~ y iff the sets meet
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x)
    for (int b : sub.members) reach[x][a.mul(x, b)] = 1;

  // seed, then transitive closure (already transitive for commutative input,
  // closure applied as a safety net)
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    parent[y] = x;
  };
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool meet = false;
      for (int z = 0; z < n && !meet; ++z) meet = reach[x][z] && reach[y][z];
      if (meet) unite(x, y);
    }

  std::vector<int> label(n);
  for (int x = 0; x < n; ++x) label[x] = find(x);
  std::vector<int> reps;
  std::vector<int> class_of = dense_ids(label, reps);
  const int k = static_cast<int>(reps.size());

  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i * k + j] = class_of[a.mul(reps[i], reps[j])];
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (class_of[a.mul(x, y)] != table[class_of[x] * k + class_of[y]])
        throw std::logic_error("quotient relation is not a congruence");

  std::vector<std::vector<int>> classes(k);
  for (int x = 0; x < n; ++x) classes[class_of[x]].push_back(x);

  std::vector<std::string> names;
  names.reserve(k);
  for (int rep : reps) names.push_back(a.name(rep));
  FiniteMonoid carrier = validate(std::move(names), std::move(table),
                                  class_of[a.identity()], static_cast<std::size_t>(k));

  return QuotientMonoid{a, sub, std::move(classes), std::move(class_of),
                        std::move(carrier)};
}

bool is_quotient_group(const QuotientMonoid& q) { return is_group(q.carrier); }

CokernelResult rho_presentation(const FiniteMonoid& p, const Submonoid& n) {
  require_commutative(p);
  require_submonoid(p, n);
  IntMatrix rel = monoid_relation_matrix(p);
  // stack the columns killing the image of Gr(N)
  IntMatrix full(rel.rows, rel.cols + n.members.size());
  for (std::size_t r = 0; r < rel.rows; ++r)
    for (std::size_t c = 0; c < rel.cols; ++c) full.at(r, c) = rel.at(r, c);
  for (std::size_t i = 0; i < n.members.size(); ++i)
    full.at(n.members[i], rel.cols + i) = 1;
  return cokernel_with_coords(full);
}

FgAbelianGroup rho(const FiniteMonoid& p, const Submonoid& n) {
  return rho_presentation(p, n).group;
}

bool universal_property_check(const FiniteMonoid& a, const Submonoid& sub,
                              const FiniteMonoid& target, const std::vector<int>& f) {
  if (f.size() != static_cast<std::size_t>(a.size()))
    raise("NotHomomorphism", "map must be defined on every element");
  for (int y : f)
    if (y < 0 || y >= target.size())
      raise("NotHomomorphism", "map image out of range");
  if (f[a.identity()] != target.identity())
    raise("NotHomomorphism", "map does not preserve the identity");
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (f[a.mul(x, y)] != target.mul(f[x], f[y]))
        raise("NotHomomorphism", "map is not multiplicative at " + a.name(x) + ", " + a.name(y));
  for (int b : sub.members)
    if (f[b] != target.identity())
      raise("SubmonoidNotKilled", "map does not kill " + a.name(b));

  QuotientMonoid q = quotient_monoid(a, sub);
  for (const std::vector<int>& cls : q.classes)
    for (int x : cls)
      if (f[x] != f[cls.front()]) return false;
  return true;
}

}  // namespace defk
