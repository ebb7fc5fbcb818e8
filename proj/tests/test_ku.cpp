#include <doctest.h>

#include "defk/corpus.hpp"
#include "defk/error.hpp"
#include "defk/ku.hpp"

using namespace defk;

namespace {

const ElementaryKuModule kKu = ku_module({{ku_summand(0), 1}});
const ElementaryKuModule kCrystal = ku_module({{ku_summand(0), 8}, {ku_summand(2), 1}});
const ElementaryKuModule kHeisenberg = ku_module(
    {{ku_summand(0), ExtNat::infinity()}, {ku_summand(1), ExtNat::infinity()}});
const ElementaryKuModule kSurface =
    ku_module({{ku_summand(0), 1}, {ku_summand(1), 3}, {ku_mod(2, 0), 1}});

HomotopyGroupData free_part(ExtNat rank) {
  HomotopyGroupData g;
  g.rank = rank;
  return g;
}

ElementaryKuModule random_module(Rng& rng, bool allow_zero) {
  ElementaryKuModule x;
  std::size_t summands = (allow_zero ? 0 : 1) + rng.below(6);
  for (std::size_t i = 0; i < summands; ++i) {
    std::uint32_t susp = static_cast<std::uint32_t>(rng.below(4));
    ExtNat mult = rng.below(8) == 0 ? ExtNat::infinity() : ExtNat(1 + rng.below(3));
    if (rng.below(2))
      x.add(ku_summand(susp), mult);
    else
      x.add(ku_mod(2 + rng.below(11), susp), mult);
  }
  if (!allow_zero && x.is_zero()) x.add(ku_summand(0), 1);
  return x;
}

}  // namespace

TEST_CASE("extended naturals") {
  ExtNat inf = ExtNat::infinity();
  CHECK(ExtNat(3) + inf == inf);
  CHECK(ExtNat(2) * inf == inf);
  CHECK(ExtNat(0) * inf == ExtNat(0));
  CHECK(inf * inf == inf);
  CHECK(ExtNat(5) < inf);
  CHECK(inf.minus_one() == inf);
  CHECK(ExtNat(1).minus_one() == ExtNat(0));
  CHECK(to_string(inf) == "inf");
}

TEST_CASE("pi of elementary modules") {
  CHECK(pi(kKu, 4) == free_part(1));
  CHECK(pi(ku_module({{ku_summand(1), 1}}), 0).is_zero());
  CHECK(pi(kCrystal, 2) == free_part(9));
  CHECK(pi(ku_module({{ku_mod(2, 0), 1}}), 3).is_zero());
  CHECK(pi(kKu, -2).is_zero());
  CHECK(pi(kHeisenberg, 0) == free_part(ExtNat::infinity()));

  HomotopyGroupData mixed = pi(kSurface, 0);
  CHECK(mixed.rank == ExtNat(1));
  CHECK(mixed.torsion.at(2) == ExtNat(1));
}

TEST_CASE("bott cokernel per-summand rule") {
  CHECK(bott_cokernel(kCrystal, 0) == free_part(8));
  CHECK(bott_cokernel(kCrystal, 2) == free_part(1));
  CHECK(bott_cokernel(kCrystal, 1).is_zero());
  CHECK(bott_cokernel(kCrystal, 3).is_zero());
  for (int m = 3; m <= 10; ++m) CHECK(bott_cokernel(kCrystal, m).is_zero());

  CHECK(bott_cokernel(kKu, 2).is_zero());

  CHECK(bott_cokernel(kHeisenberg, 1) == free_part(ExtNat::infinity()));
  for (int m = 2; m <= 10; ++m) CHECK(bott_cokernel(kHeisenberg, m).is_zero());
}

TEST_CASE("bott injectivity") {
  CHECK(bott_injective(kKu, 5));
  CHECK(bott_injective(kCrystal, 4));
  CHECK(bott_injective(ku_module({{ku_mod(2, 0), 1}, {ku_mod(2, 1), 1}}), 3));
}

TEST_CASE("bott cofiber bookkeeping is exact") {
  // |pi_m| = |image beta| + |coker beta| slot by slot; beta injective means
  // the image bookkeeping is pi_{m-2} itself
  Rng rng(83);
  for (int trial = 0; trial < 300; ++trial) {
    ElementaryKuModule x = random_module(rng, true);
    for (int m = 0; m <= 8; ++m) {
      CHECK(bott_injective(x, m));
      HomotopyGroupData source = pi(x, m - 2);
      HomotopyGroupData target = pi(x, m);
      HomotopyGroupData coker = bott_cokernel(x, m);
      CHECK(target.rank == source.rank + coker.rank);
      for (const auto& [n, mult] : target.torsion) {
        ExtNat from_source = source.torsion.count(n) ? source.torsion.at(n) : ExtNat(0);
        ExtNat from_coker = coker.torsion.count(n) ? coker.torsion.at(n) : ExtNat(0);
        CHECK(mult == from_source + from_coker);
      }
    }
  }
}

TEST_CASE("suspension degree") {
  CHECK(suspension_degree(kKu) == 0);
  CHECK(suspension_degree(kCrystal) == 2);
  CHECK(suspension_degree(kSurface) == 1);
  CHECK_THROWS_AS(suspension_degree(ElementaryKuModule{}), Error);
}

TEST_CASE("top nonzero bott cokernel degree is the suspension degree") {
  Rng rng(89);
  for (int trial = 0; trial < 300; ++trial) {
    ElementaryKuModule x = random_module(rng, false);
    int degree = static_cast<int>(suspension_degree(x));
    int top = -1;
    for (int m = 0; m <= degree + 4; ++m)
      if (!bott_cokernel(x, m).is_zero()) top = m;
    CHECK(top == degree);
  }
}

TEST_CASE("smash product formulas") {
  CHECK(smash(kKu, kCrystal) == kCrystal);

  ElementaryKuModule kun = smash(ku_module({{ku_mod(2, 0), 1}}),
                                 ku_module({{ku_mod(4, 0), 1}}));
  CHECK(kun == ku_module({{ku_mod(2, 0), 1}, {ku_mod(2, 1), 1}}));

  CHECK(smash(ku_module({{ku_mod(2, 0), 1}}), ku_module({{ku_mod(3, 0), 1}})).is_zero());

  ElementaryKuModule left = ku_module({{ku_summand(1), 1}, {ku_summand(0), 1}});
  ElementaryKuModule right = ku_module({{ku_summand(1), 1}});
  CHECK(smash(left, right) == ku_module({{ku_summand(2), 1}, {ku_summand(1), 1}}));
}

TEST_CASE("smash is unital, commutative and associative") {
  Rng rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    ElementaryKuModule x = random_module(rng, true);
    ElementaryKuModule y = random_module(rng, true);
    ElementaryKuModule z = random_module(rng, true);
    CHECK(smash(kKu, x) == x);
    CHECK(smash(x, y) == smash(y, x));
    CHECK(smash(smash(x, y), z) == smash(x, smash(y, z)));
  }
}

TEST_CASE("free products") {
  CHECK(free_product(kKu, kKu) == kKu);
  CHECK(free_product(ku_module({{ku_summand(0), 3}}), ku_module({{ku_summand(0), 5}})) ==
        ku_module({{ku_summand(0), 7}}));
  CHECK_THROWS_AS(free_product(ku_module({{ku_summand(2), 1}}), kKu), Error);
  // infinite wedges keep their multiplicity
  CHECK(free_product(kHeisenberg, kKu) == kHeisenberg);
}

TEST_CASE("free product degree is the maximum") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    ElementaryKuModule x = random_module(rng, false);
    ElementaryKuModule y = random_module(rng, false);
    x.add(ku_summand(0), 1);
    y.add(ku_summand(0), 1);
    CHECK(suspension_degree(free_product(x, y)) ==
          std::max(suspension_degree(x), suspension_degree(y)));
  }
}

TEST_CASE("finite group wedges") {
  CHECK(kdef_finite_group(1) == kKu);
  CHECK(kdef_finite_group(3) == ku_module({{ku_summand(0), 3}}));
  CHECK(kdef_finite_group(5) == ku_module({{ku_summand(0), 5}}));
  CHECK_THROWS_AS(kdef_finite_group(0), Error);
}

TEST_CASE("deformation rho inverts the splitting") {
  CHECK(deformation_rho(kKu, 2).is_zero());
  CHECK(deformation_rho(kKu, 1).is_zero());
  CHECK(deformation_rho(kCrystal, 2) == free_part(8));
  CHECK_THROWS_AS(deformation_rho(kKu, 0), Error);
  CHECK_THROWS_AS(deformation_rho(ku_module({{ku_summand(2), 1}}), 2), Error);
}

TEST_CASE("module printing") {
  CHECK(to_string(ElementaryKuModule{}) == "0");
  CHECK(to_string(kCrystal) == "8*ku + S^2(ku)");
  CHECK(to_string(ku_module({{ku_mod(2, 0), 1}, {ku_mod(2, 1), 1}})) ==
        "ku/2 + S(ku/2)");
  CHECK(to_string(kHeisenberg) == "inf*ku + inf*S(ku)");
  CHECK(to_string(kSurface) == "ku + ku/2 + 3*S(ku)");
}

TEST_CASE("homotopy group printing") {
  CHECK(to_string(HomotopyGroupData{}) == "0");
  CHECK(to_string(free_part(1)) == "Z");
  CHECK(to_string(free_part(9)) == "Z^9");
  CHECK(to_string(free_part(ExtNat::infinity())) == "Z^inf");
  HomotopyGroupData g;
  g.add_torsion(2, 2);
  CHECK(to_string(g) == "Z/2 + Z/2");
  g.torsion.clear();
  g.add_torsion(2, ExtNat::infinity());
  CHECK(to_string(g) == "(Z/2)^inf");
  g.add_rank(1);
  CHECK(to_string(g) == "Z + (Z/2)^inf");
}

TEST_CASE("expression parsing") {
  CHECK(parse_ku_expression("ku") == kKu);
  CHECK(parse_ku_expression("8*ku + S^2(ku)") == kCrystal);
  CHECK(parse_ku_expression("inf*ku + inf*S(ku)") == kHeisenberg);
  CHECK(parse_ku_expression("ku + 3*S(ku) + ku/2") == kSurface);
  CHECK(parse_ku_expression("0") == ElementaryKuModule{});
  CHECK(parse_ku_expression("0*ku") == ElementaryKuModule{});
  CHECK(parse_ku_expression("  ku +S( ku/2 )") ==
        ku_module({{ku_summand(0), 1}, {ku_mod(2, 1), 1}}));
  CHECK(parse_ku_expression("2*(ku + S(ku))") ==
        ku_module({{ku_summand(0), 2}, {ku_summand(1), 2}}));
  CHECK(parse_ku_expression("S^0(ku/7)") == ku_module({{ku_mod(7, 0), 1}}));

  CHECK_THROWS_AS(parse_ku_expression("ku/1"), Error);
  CHECK_THROWS_AS(parse_ku_expression("2ku"), Error);
  CHECK_THROWS_AS(parse_ku_expression("ku)"), Error);
  CHECK_THROWS_AS(parse_ku_expression("foo"), Error);
  CHECK_THROWS_AS(parse_ku_expression("S(ku"), Error);
  CHECK_THROWS_AS(parse_ku_expression(""), Error);
}

TEST_CASE("printing and parsing round-trip") {
  Rng rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    ElementaryKuModule x = random_module(rng, true);
    CHECK(parse_ku_expression(to_string(x)) == x);
  }
}
