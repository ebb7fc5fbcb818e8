#pragma once

#include <cstdint>
#include <vector>

namespace defk {

// Exhaustive Cayley-table scans. Each kernel has an OpenMP variant (used by
// the library) and a serial reference twin in defk::reference (kept for
// testing and benchmarked against in tools/bench). Results are deterministic:
// witness searches reduce to the lexicographically smallest hit, so the
// parallel and serial variants agree bit for bit.
//
// Tables are row-major: table[i * n + j] = index of element_i * element_j.

namespace kernels {

/// Lexicographically first triple (i, j, k) with (ij)k != i(jk) as a flat
/// index i*n*n + j*n + k, or -1 if the table is associative.
long long first_associativity_violation(const std::vector<int>& table, int n);

/// True iff for every x there is some y with x*y in the member set.
bool is_cofinal(const std::vector<int>& table, int n, const std::vector<char>& member);

/// For a group table with inverse table inv: orbit label per element under
/// conjugation g -> x g x^-1, the label being the smallest orbit member.
std::vector<int> conjugacy_labels(const std::vector<int>& table, int n,
                                  const std::vector<int>& inv);

/// Class label per pair (a, s) (flat index a*n + s) under the group-completion
/// relation (a,s) ~ (a',s') iff exists c with a*s'*c = a'*s*c. Labels are the
/// smallest equivalent flat index. Requires a commutative table.
std::vector<int> pair_class_labels(const std::vector<int>& table, int n);

}  // namespace kernels

namespace reference {

long long first_associativity_violation(const std::vector<int>& table, int n);
bool is_cofinal(const std::vector<int>& table, int n, const std::vector<char>& member);
std::vector<int> conjugacy_labels(const std::vector<int>& table, int n,
                                  const std::vector<int>& inv);
// Union-find closure over the generating relations (a,s) ~ (a*c, s*c); for a
// commutative table this closure equals the witnessed relation above.
std::vector<int> pair_class_labels(const std::vector<int>& table, int n);

}  // namespace reference

}  // namespace defk
