#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "defk/monoid.hpp"

namespace defk {

/// Deterministic RNG for corpus generation: mt19937_64 (whose sequence the
/// standard pins down) with explicit modulo reduction — library distributions
/// are not reproducible across implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform-ish in [0, n); n >= 1.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
  std::mt19937_64 engine_;
};

constexpr std::uint64_t kDefaultSeed = 20250809;

FiniteMonoid cyclic_group(int n);
FiniteMonoid saturating_chain(int n);
FiniteMonoid direct_product(const FiniteMonoid& a, const FiniteMonoid& b);

/// Quotient of m by a randomly seeded congruence (seeded pairs, closed under
/// multiplication). Stays commutative when m is.
FiniteMonoid random_congruence_quotient(const FiniteMonoid& m, Rng& rng);

/// Symmetric group on three letters / quaternion group, as raw Cayley tables
/// built from permutation composition and quaternion multiplication.
FiniteMonoid symmetric_group_3();
FiniteMonoid quaternion_group_8();

/// Reproducible corpus of at least `count` commutative monoids of size
/// <= max_size: cyclic groups, saturating chains, their direct products, and
/// random congruence quotients. Never random tables — those are almost never
/// associative.
std::vector<FiniteMonoid> commutative_corpus(std::uint64_t seed, std::size_t count,
                                             std::size_t max_size = 12);

/// Random generated submonoid (from up to three random generators; sometimes
/// the trivial or the full one).
Submonoid random_submonoid(const FiniteMonoid& m, Rng& rng);

}  // namespace defk
