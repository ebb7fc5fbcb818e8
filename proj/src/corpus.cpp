#include "defk/corpus.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace defk {

FiniteMonoid cyclic_group(int n) {
  std::vector<std::string> names;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  return validate(std::move(names), std::move(table), 0);
}

FiniteMonoid saturating_chain(int n) {
  std::vector<std::string> names;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = std::min(i + j, n - 1);
  return validate(std::move(names), std::move(table), 0);
}

FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ai = i / nb, bi = i % nb;
      int aj = j / nb, bj = j % nb;
      table[i * n + j] = a.mul(ai, aj) * nb + b.mul(bi, bj);
    }
  return validate(std::move(names), std::move(table), a.identity() * nb + b.identity(),
                  static_cast<std::size_t>(n));
}

FiniteMonoid random_congruence_quotient(const FiniteMonoid& m, Rng& rng) {
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent[y] = x;
    return true;
  };

  const int seeds = 1 + static_cast<int>(rng.below(2));
  for (int i = 0; i < seeds; ++i)
    unite(static_cast<int>(rng.below(n)), static_cast<int>(rng.below(n)));

  // close under multiplication: a ~ b forces a*c ~ b*c and c*a ~ c*b
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (find(x) != find(y)) continue;
        for (int c = 0; c < n; ++c) {
          changed |= unite(m.mul(x, c), m.mul(y, c));
          changed |= unite(m.mul(c, x), m.mul(c, y));
        }
      }
  }

  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (find(x) == x) reps.push_back(x);
  std::vector<int> id(n);
  for (int x = 0; x < n; ++x)
    id[x] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), find(x)) -
                             reps.begin());
  const int k = static_cast<int>(reps.size());
  std::vector<std::string> names;
  for (int rep : reps) names.push_back(m.name(rep));
  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i * k + j] = id[m.mul(reps[i], reps[j])];
  return validate(std::move(names), std::move(table), id[m.identity()],
                  static_cast<std::size_t>(k));
}

FiniteMonoid symmetric_group_3() {
  // permutations of {0,1,2}, lexicographic; composition (p*q)(i) = p(q(i))
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::string> names;
  for (const auto& q : perms)
    names.push_back(std::to_string(q[0]) + std::to_string(q[1]) + std::to_string(q[2]));
  const int n = 6;
  std::vector<int> table(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::array<int, 3> composed{};
      for (int t = 0; t < 3; ++t) composed[t] = perms[i][perms[j][t]];
      table[i * n + j] = index_of(composed);
    }
  return validate(std::move(names), std::move(table), 0);
}

FiniteMonoid quaternion_group_8() {
  // elements (sign, axis) with axis in {1, i, j, k}
  const char* axis_names[] = {"1", "i", "j", "k"};
  // axis products: axis_mul[a][b] = (sign, axis)
  struct Part {
    int sign;
    int axis;
  };
  const Part axis_mul[4][4] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  auto encode = [](int sign, int axis) { return axis * 2 + (sign < 0 ? 1 : 0); };
  std::vector<std::string> names(8);
  for (int axis = 0; axis < 4; ++axis) {
    names[encode(1, axis)] = axis_names[axis];
    names[encode(-1, axis)] = std::string("-") + axis_names[axis];
  }
  std::vector<int> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sx = (x % 2) ? -1 : 1, ax = x / 2;
      int sy = (y % 2) ? -1 : 1, ay = y / 2;
      Part p = axis_mul[ax][ay];
      table[x * 8 + y] = encode(sx * sy * p.sign, p.axis);
    }
  return validate(std::move(names), std::move(table), 0);
}

std::vector<FiniteMonoid> commutative_corpus(std::uint64_t seed, std::size_t count,
                                             std::size_t max_size) {
  std::vector<FiniteMonoid> corpus;

  std::vector<FiniteMonoid> base;
  for (std::size_t n = 1; n <= max_size; ++n)
    base.push_back(cyclic_group(static_cast<int>(n)));
  for (std::size_t n = 2; n <= max_size; ++n)
    base.push_back(saturating_chain(static_cast<int>(n)));
  corpus = base;

  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      std::size_t product_size =
          static_cast<std::size_t>(base[i].size()) * base[j].size();
      if (product_size >= 2 && product_size <= max_size)
        corpus.push_back(direct_product(base[i], base[j]));
    }

  Rng rng(seed);
  std::size_t source = 0;
  while (corpus.size() < count) {
    const FiniteMonoid& pick = corpus[source % corpus.size()];
    ++source;
    if (pick.size() < 2) continue;
    corpus.push_back(random_congruence_quotient(pick, rng));
  }
  return corpus;
}

Submonoid random_submonoid(const FiniteMonoid& m, Rng& rng) {
  switch (rng.below(6)) {
    case 0:
      return submonoid_generated(m, {});
    case 1: {
      std::vector<int> all(m.size());
      std::iota(all.begin(), all.end(), 0);
      return submonoid(m, std::move(all));
    }
    default: {
      std::vector<int> seed;
      const int generators = 1 + static_cast<int>(rng.below(3));
      for (int i = 0; i < generators; ++i)
        seed.push_back(static_cast<int>(rng.below(m.size())));
      return submonoid_generated(m, seed);
    }
  }
}

}  // namespace defk
