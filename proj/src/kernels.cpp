#include "defk/kernels.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace defk {

namespace kernels {

long long first_associativity_violation(const std::vector<int>& table, int n) {
  const long long nn = n;
  const long long none = std::numeric_limits<long long>::max();
  long long best = none;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (int i = 0; i < n; ++i) {
    long long local = none;
    for (int j = 0; j < n && local == none; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i * n + j] * n + k] != table[i * n + table[j * n + k]]) {
          local = (i * nn + j) * nn + k;
          break;
        }
    best = std::min(best, local);
  }
  return best == none ? -1 : best;
}

bool is_cofinal(const std::vector<int>& table, int n, const std::vector<char>& member) {
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (int x = 0; x < n; ++x) {
    bool hit = false;
    for (int y = 0; y < n; ++y)
      if (member[table[x * n + y]]) {
        hit = true;
        break;
      }
    ok = ok && hit;
  }
  return ok;
}

std::vector<int> conjugacy_labels(const std::vector<int>& table, int n,
                                  const std::vector<int>& inv) {
  std::vector<int> label(n);
#pragma omp parallel for schedule(static)
  for (int g = 0; g < n; ++g) {
    int best = g;
    for (int x = 0; x < n; ++x) {
      int conj = table[table[x * n + g] * n + inv[x]];
      best = std::min(best, conj);
    }
    label[g] = best;
  }
  return label;
}

std::vector<int> pair_class_labels(const std::vector<int>& table, int n) {
  const int np = n * n;
  std::vector<int> label(np);
#pragma omp parallel for schedule(dynamic, 4)
  for (int p = 0; p < np; ++p) {
    const int a1 = p / n, s1 = p % n;
    int found = p;  // p ~ p, so p itself is the fallback label
    for (int q = 0; q < p; ++q) {
      const int a2 = q / n, s2 = q % n;
      const int left = table[a1 * n + s2];
      const int right = table[a2 * n + s1];
      for (int c = 0; c < n; ++c)
        if (table[left * n + c] == table[right * n + c]) {
          found = q;
          break;
        }
      if (found == q) break;
    }
    label[p] = found;
  }
  return label;
}

}  // namespace kernels

namespace reference {

long long first_associativity_violation(const std::vector<int>& table, int n) {
  const long long nn = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i * n + j] * n + k] != table[i * n + table[j * n + k]])
          return (i * nn + j) * nn + k;
  return -1;
}

bool is_cofinal(const std::vector<int>& table, int n, const std::vector<char>& member) {
  for (int x = 0; x < n; ++x) {
    bool hit = false;
    for (int y = 0; y < n && !hit; ++y) hit = member[table[x * n + y]];
    if (!hit) return false;
  }
  return true;
}

std::vector<int> conjugacy_labels(const std::vector<int>& table, int n,
                                  const std::vector<int>& inv) {
  // flood each conjugation orbit, then relabel it by its minimum
  std::vector<int> label(n, -1);
  for (int g = 0; g < n; ++g) {
    if (label[g] >= 0) continue;
    std::vector<int> orbit{g};
    label[g] = g;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      int h = orbit[head];
      for (int x = 0; x < n; ++x) {
        int conj = table[table[x * n + h] * n + inv[x]];
        if (label[conj] < 0) {
          label[conj] = g;
          orbit.push_back(conj);
        }
      }
    }
    int mn = *std::min_element(orbit.begin(), orbit.end());
    for (int h : orbit) label[h] = mn;
  }
  return label;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);  // smaller index stays root, so labels are minima
    parent[b] = a;
  }
};

}  // namespace

std::vector<int> pair_class_labels(const std::vector<int>& table, int n) {
  UnionFind uf(n * n);
  for (int a = 0; a < n; ++a)
    for (int s = 0; s < n; ++s)
      for (int c = 0; c < n; ++c)
        uf.unite(a * n + s, table[a * n + c] * n + table[s * n + c]);
  std::vector<int> label(n * n);
  for (int p = 0; p < n * n; ++p) label[p] = uf.find(p);
  return label;
}

}  // namespace reference

}  // namespace defk
