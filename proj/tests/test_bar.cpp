#include <doctest.h>

#include "defk/bar.hpp"
#include "defk/completion.hpp"
#include "defk/corpus.hpp"
#include "defk/error.hpp"
#include "helpers.hpp"

using namespace defk;
using testing::fg;

TEST_CASE("bar faces") {
  BarTruncation bar = bar_truncation(cyclic_group(2));
  CHECK(bar.d1(1, 1) == 0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      CHECK(bar.d0(a, b) == b);
      CHECK(bar.d2(a, b) == a);
      CHECK(bar.d1(a, b) == bar.monoid.mul(a, b));
    }
}

TEST_CASE("pi1 presentation shape") {
  GroupPresentation z2 = pi1_presentation(cyclic_group(2));
  CHECK(z2.generators.size() == 2);
  CHECK(z2.relators.size() == 5);  // 4 pairs + identity relator

  GroupPresentation trivial = pi1_presentation(cyclic_group(1));
  CHECK(trivial.generators.size() == 1);
  CHECK(trivial.relators.size() == 2);  // <e><e><e>^-1 and <e>

  CHECK(pi1_presentation(saturating_chain(3)).relators.size() == 10);
}

TEST_CASE("presentation printing") {
  GroupPresentation p = pi1_presentation(cyclic_group(1));
  CHECK(to_string(p) == "< x_0 | x_0x_0x_0^-1, x_0 >");
}

TEST_CASE("pi1 abelianized examples") {
  CHECK(iso(pi1_abelianized(cyclic_group(2)), fg(0, {2})));
  CHECK(pi1_abelianized(saturating_chain(3)).is_trivial());
  CHECK(pi1_abelianized(cyclic_group(1)).is_trivial());
  CHECK_THROWS_AS(pi1_abelianized(symmetric_group_3()), Error);
}

TEST_CASE("h1 examples") {
  // d2(1,1) = [1] - [0] + [1] = 2[1]
  CHECK(iso(h1_bar(cyclic_group(2)), fg(0, {2})));
  // 4x2 boundary matrix, SNF diag(1, 3)
  CHECK(iso(h1_bar(cyclic_group(3)), fg(0, {3})));
  CHECK(h1_bar(cyclic_group(1)).is_trivial());
}

TEST_CASE("normalized and unnormalized chains give the same h1") {
  for (const FiniteMonoid& m : commutative_corpus(53, 40))
    CHECK(iso(h1_bar(m), h1_bar_unnormalized(m)));
}

TEST_CASE("the identity relator is redundant in the abelianization") {
  for (const FiniteMonoid& m : commutative_corpus(59, 25)) {
    GroupPresentation p = pi1_presentation(m);
    IntMatrix with(p.generators.size(), p.relators.size());
    for (std::size_t r = 0; r < p.relators.size(); ++r)
      for (const auto& [gen, exp] : p.relators[r]) with.at(gen, r) += exp;
    IntMatrix without(p.generators.size(), p.relators.size() - 1);
    for (std::size_t r = 0; r + 1 < p.relators.size(); ++r)
      for (const auto& [gen, exp] : p.relators[r]) without.at(gen, r) += exp;
    CHECK(iso(cokernel(with), cokernel(without)));
  }
}

TEST_CASE("all four completion routes agree") {
  for (const FiniteMonoid& m : commutative_corpus(61, 60)) {
    FgAbelianGroup pairs = gr_pairs(m).group;
    CHECK(iso(pairs, gr_presentation(m).group));
    CHECK(iso(pairs, pi1_abelianized(m)));
    CHECK(iso(pairs, h1_bar(m)));
  }
}
