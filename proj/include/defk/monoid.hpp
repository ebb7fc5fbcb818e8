#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace defk {

constexpr std::size_t kDefaultMaxMonoidSize = 64;

/// Finite monoid given by an explicit multiplication table. Immutable after
/// construction through validate(); every operation on it is a pure function.
class FiniteMonoid {
public:
  int size() const { return n_; }
  int identity() const { return identity_; }
  int mul(int i, int j) const { return table_[static_cast<std::size_t>(i) * n_ + j]; }

  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& table() const { return table_; }

  /// Index of a named element, or nullopt.
  std::optional<int> index_of(const std::string& name) const;

private:
  friend FiniteMonoid validate(std::vector<std::string>, std::vector<int>, int,
                               std::size_t);
  FiniteMonoid() = default;

  std::vector<std::string> names_;
  std::vector<int> table_;  // n*n row-major
  int identity_ = 0;
  int n_ = 0;
};

/// Checks the monoid laws exhaustively and returns the monoid.
/// Throws Error: BadIndex, NoIdentity, NotAssociative (with a witness triple),
/// BadName for duplicate/empty names, TooLarge beyond max_size.
FiniteMonoid validate(std::vector<std::string> names, std::vector<int> table,
                      int identity, std::size_t max_size = kDefaultMaxMonoidSize);

/// Subset of a monoid's elements containing the identity and closed under the
/// operation. Always paired with its parent monoid in the operations below.
struct Submonoid {
  std::vector<int> members;  // sorted, unique
};

/// Validates membership/closure; throws NotSubmonoid.
Submonoid submonoid(const FiniteMonoid& m, std::vector<int> members);

bool is_commutative(const FiniteMonoid& m);
bool is_group(const FiniteMonoid& m);

/// k-fold product of x, with x^0 = identity.
int power(const FiniteMonoid& m, int x, std::uint64_t k);

/// Smallest submonoid containing the seed set (and the identity).
Submonoid submonoid_generated(const FiniteMonoid& m, const std::vector<int>& seed);

/// True iff every x multiplies into the submonoid: exists y with x*y in s.
bool is_cofinal(const FiniteMonoid& m, const Submonoid& s);

/// True iff the submonoid generated by m0 is cofinal.
bool is_stably_group_like(const FiniteMonoid& m, int m0);

/// For groups: inverse table. Throws NotAGroup.
std::vector<int> inverse_table(const FiniteMonoid& m);

/// Number of orbits of the conjugation action g -> x g x^-1. Throws NotAGroup.
std::size_t conjugacy_class_count(const FiniteMonoid& m);

}  // namespace defk
