#include "defk/monoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "defk/error.hpp"
#include "defk/kernels.hpp"

namespace defk {

std::optional<int> FiniteMonoid::index_of(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

FiniteMonoid validate(std::vector<std::string> names, std::vector<int> table,
                      int identity, std::size_t max_size) {
  const std::size_t n = names.size();
  if (n == 0) raise("BadIndex", "a monoid needs at least one element");
  if (n > max_size) {
    std::ostringstream msg;
    msg << "monoid has " << n << " elements, limit is " << max_size;
    raise("TooLarge", msg.str());
  }
  {
    std::set<std::string> seen;
    for (const std::string& name : names) {
      if (name.empty()) raise("BadName", "element names must be non-empty");
      if (!seen.insert(name).second) raise("BadName", "duplicate element name: " + name);
    }
  }
  if (table.size() != n * n) raise("BadIndex", "table is not n*n");
  for (int entry : table)
    if (entry < 0 || static_cast<std::size_t>(entry) >= n)
      raise("BadIndex", "table entry out of range: " + std::to_string(entry));
  if (identity < 0 || static_cast<std::size_t>(identity) >= n)
    raise("BadIndex", "identity index out of range");

  for (std::size_t i = 0; i < n; ++i)
    if (table[static_cast<std::size_t>(identity) * n + i] != static_cast<int>(i) ||
        table[i * n + identity] != static_cast<int>(i))
      raise("NoIdentity", "element '" + names[identity] + "' is not a two-sided identity");

  long long witness = kernels::first_associativity_violation(table, static_cast<int>(n));
  if (witness >= 0) {
    const long long k = witness % static_cast<long long>(n);
    const long long j = (witness / static_cast<long long>(n)) % static_cast<long long>(n);
    const long long i = witness / (static_cast<long long>(n) * static_cast<long long>(n));
    std::ostringstream msg;
    msg << "(" << names[i] << " * " << names[j] << ") * " << names[k]
        << " != " << names[i] << " * (" << names[j] << " * " << names[k] << ")";
    raise("NotAssociative", msg.str());
  }

  FiniteMonoid m;
  m.names_ = std::move(names);
  m.table_ = std::move(table);
  m.identity_ = identity;
  m.n_ = static_cast<int>(n);
  return m;
}

Submonoid submonoid(const FiniteMonoid& m, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int x : members)
    if (x < 0 || x >= m.size()) raise("NotSubmonoid", "member index out of range");
  std::vector<char> in(m.size(), 0);
  for (int x : members) in[x] = 1;
  if (!in[m.identity()]) raise("NotSubmonoid", "submonoid must contain the identity");
  for (int x : members)
    for (int y : members)
      if (!in[m.mul(x, y)])
        raise("NotSubmonoid", "not closed: " + m.name(x) + " * " + m.name(y) +
                                  " = " + m.name(m.mul(x, y)));
  return Submonoid{std::move(members)};
}

bool is_commutative(const FiniteMonoid& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      if (m.mul(i, j) != m.mul(j, i)) return false;
  return true;
}

bool is_group(const FiniteMonoid& m) {
  for (int x = 0; x < m.size(); ++x) {
    bool has_inverse = false;
    for (int y = 0; y < m.size(); ++y)
      if (m.mul(x, y) == m.identity() && m.mul(y, x) == m.identity()) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) return false;
  }
  return true;
}

int power(const FiniteMonoid& m, int x, std::uint64_t k) {
  int acc = m.identity();
  int base = x;
  while (k > 0) {
    if (k & 1) acc = m.mul(acc, base);
    base = m.mul(base, base);
    k >>= 1;
  }
  return acc;
}

Submonoid submonoid_generated(const FiniteMonoid& m, const std::vector<int>& seed) {
  for (int x : seed)
    if (x < 0 || x >= m.size()) raise("NotSubmonoid", "generator index out of range");
  std::vector<char> in(m.size(), 0);
  std::vector<int> queue;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      queue.push_back(x);
    }
  };
  push(m.identity());
  for (int x : seed) push(x);
  // closure: products of known members, to a fixed point
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t other = 0; other <= head; ++other) {
      push(m.mul(queue[head], queue[other]));
      push(m.mul(queue[other], queue[head]));
    }
  std::vector<int> members;
  for (int x = 0; x < m.size(); ++x)
    if (in[x]) members.push_back(x);
  return Submonoid{std::move(members)};
}

bool is_cofinal(const FiniteMonoid& m, const Submonoid& s) {
  std::vector<char> member(m.size(), 0);
  for (int x : s.members) member[x] = 1;
  return kernels::is_cofinal(m.table(), m.size(), member);
}

bool is_stably_group_like(const FiniteMonoid& m, int m0) {
  return is_cofinal(m, submonoid_generated(m, {m0}));
}

std::vector<int> inverse_table(const FiniteMonoid& m) {
  std::vector<int> inv(m.size(), -1);
  for (int x = 0; x < m.size(); ++x)
    for (int y = 0; y < m.size(); ++y)
      if (m.mul(x, y) == m.identity() && m.mul(y, x) == m.identity()) {
        inv[x] = y;
        break;
      }
  for (int x = 0; x < m.size(); ++x)
    if (inv[x] < 0) raise("NotAGroup", "element '" + m.name(x) + "' has no inverse");
  return inv;
}

std::size_t conjugacy_class_count(const FiniteMonoid& m) {
  std::vector<int> inv = inverse_table(m);
  std::vector<int> label = kernels::conjugacy_labels(m.table(), m.size(), inv);
  std::size_t count = 0;
  for (int g = 0; g < m.size(); ++g)
    if (label[g] == g) ++count;
  return count;
}

}  // namespace defk
