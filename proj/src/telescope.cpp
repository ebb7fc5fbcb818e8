#include "defk/telescope.hpp"

#include <algorithm>
#include <stdexcept>

#include "defk/error.hpp"

namespace defk {

namespace {

void require_commutative(const FiniteMonoid& m) {
  if (!is_commutative(m)) raise("NotCommutative", "operation requires a commutative monoid");
}

// (x, n) ~ (y, m) iff x * m0^(k+m) = y * m0^(k+n) for some k <= 2|M|.
bool pairs_equivalent(const FiniteMonoid& mon, int m0, int x, int level_x, int y,
                      int level_y) {
  int u = x;
  for (int i = 0; i < level_y; ++i) u = mon.mul(u, m0);
  int w = y;
  for (int i = 0; i < level_x; ++i) w = mon.mul(w, m0);
  const int bound = 2 * mon.size();
  for (int k = 0; k <= bound; ++k) {
    if (u == w) return true;
    u = mon.mul(u, m0);
    w = mon.mul(w, m0);
  }
  return u == w;
}

}  // namespace

TelescopeColimit telescope_pi0(const FiniteMonoid& m, int m0) {
  require_commutative(m);
  if (m0 < 0 || m0 >= m.size()) raise("BadIndex", "m0 index out of range");
  const int n = m.size();

  // level-0 classes, labelled by their minimum member
  std::vector<int> label(n);
  for (int x = 0; x < n; ++x) {
    label[x] = x;
    for (int y = 0; y < x; ++y)
      if (pairs_equivalent(m, m0, x, 0, y, 0)) {
        label[x] = y;
        break;
      }
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (label[x] == x) reps.push_back(x);
  std::vector<int> id(n);
  for (int x = 0; x < n; ++x)
    id[x] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), label[x]) -
                             reps.begin());
  const int k = static_cast<int>(reps.size());

  std::vector<int> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) table[i * k + j] = id[label[m.mul(reps[i], reps[j])]];
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (id[label[m.mul(x, y)]] != table[id[label[x]] * k + id[label[y]]])
        throw std::logic_error("telescope relation is not a congruence");

  std::vector<std::string> names;
  names.reserve(k);
  for (int rep : reps) names.push_back(m.name(rep));
  FiniteMonoid carrier = validate(std::move(names), std::move(table), id[m.identity()],
                                  static_cast<std::size_t>(k));

  // eventual image: iterate x -> x * m0 until the image set stabilizes
  std::vector<char> in(n, 1);
  for (;;) {
    std::vector<char> next(n, 0);
    for (int x = 0; x < n; ++x)
      if (in[x]) next[m.mul(x, m0)] = 1;
    if (next == in) break;
    in = std::move(next);
  }
  std::vector<int> eventual;
  for (int x = 0; x < n; ++x)
    if (in[x]) eventual.push_back(x);

  return TelescopeColimit{m, m0, std::move(carrier), std::move(id),
                          std::move(eventual)};
}

int TelescopeColimit::level_map(int level, int x) const {
  if (level < 0) throw std::invalid_argument("telescope level must be >= 0");
  // (x, level) matches the unique level-0 class with an equivalent
  // representative; every class has one.
  for (int c = 0; c < carrier.size(); ++c) {
    // any level-0 element of class c serves as representative
    for (int z = 0; z < parent.size(); ++z) {
      if (class_of_level0[z] != c) continue;
      if (pairs_equivalent(parent, m0, z, 0, x, level)) return c;
      break;  // one representative decides; classes are well-defined
    }
  }
  throw std::logic_error("telescope class without level-0 representative");
}

bool telescope_group_check(const FiniteMonoid& m, int m0) {
  return is_group(telescope_pi0(m, m0).carrier);
}

}  // namespace defk
