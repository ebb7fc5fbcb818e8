#include "defk/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "defk/bar.hpp"
#include "defk/completion.hpp"
#include "defk/ku.hpp"
#include "defk/telescope.hpp"

namespace defk {

bool SelftestReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

constexpr std::size_t kCorpusCount = 240;
constexpr std::size_t kQuotientPairs = 120;
constexpr std::size_t kKuExpressions = 500;
constexpr std::size_t kDegreePairs = 200;
constexpr int kVanishingScanLimit = 12;

void add_fact(CheckResult& c, const std::string& key, const std::string& value) {
  c.facts.emplace_back(key, value);
}

void add_count(CheckResult& c, const std::string& key, std::size_t value) {
  add_fact(c, key, std::to_string(value));
}

// criterion: gr_pairs = gr_presentation = pi1_abelianized = h1_bar on the
// whole corpus, exact invariant factors
CheckResult check_oracle_agreement(const std::vector<FiniteMonoid>& corpus) {
  CheckResult c{"oracle_agreement", true, {}};
  std::size_t failures = 0;
  std::vector<char> ok(corpus.size(), 1);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const FiniteMonoid& m = corpus[i];
    FgAbelianGroup pairs = gr_pairs(m).group;
    bool agree = iso(pairs, gr_presentation(m).group) &&
                 iso(pairs, pi1_abelianized(m)) && iso(pairs, h1_bar(m));
    ok[i] = agree ? 1 : 0;
  }
  for (char o : ok)
    if (!o) ++failures;
  add_count(c, "monoids", corpus.size());
  add_count(c, "failures", failures);
  c.pass = failures == 0;
  return c;
}

// criterion: stably-group-like telescopes are groups isomorphic to Gr(M);
// m0 = e on a non-group gives back M itself, not a group
CheckResult check_telescope(const std::vector<FiniteMonoid>& corpus) {
  CheckResult c{"telescope_identification", true, {}};
  std::size_t stable_pairs = 0, identity_cases = 0, failures = 0;
  for (const FiniteMonoid& m : corpus) {
    FgAbelianGroup gr = gr_pairs(m).group;
    for (int m0 = 0; m0 < m.size(); ++m0) {
      if (is_stably_group_like(m, m0)) {
        ++stable_pairs;
        TelescopeColimit tel = telescope_pi0(m, m0);
        if (!is_group(tel.carrier) ||
            !iso(structure_of_finite_abelian_group(tel.carrier), gr))
          ++failures;
      }
    }
    if (!is_group(m)) {
      ++identity_cases;
      if (is_stably_group_like(m, m.identity())) {
        ++failures;
        continue;
      }
      TelescopeColimit tel = telescope_pi0(m, m.identity());
      // classes are singletons, so the carrier must be M with the same table
      bool same = tel.carrier.size() == m.size() && tel.carrier.table() == m.table() &&
                  tel.carrier.identity() == m.identity();
      if (!same || is_group(tel.carrier)) ++failures;
    }
  }
  add_count(c, "stably_group_like_pairs", stable_pairs);
  add_count(c, "identity_on_non_group_cases", identity_cases);
  add_count(c, "failures", failures);
  c.pass = failures == 0;
  return c;
}

// criterion: Gr(P/N) = rho(P, N); when the quotient is a group its order
// equals the order of rho(P, N)
CheckResult check_quotient_compatibility(const std::vector<FiniteMonoid>& corpus,
                                         std::uint64_t seed) {
  CheckResult c{"quotient_compatibility", true, {}};
  Rng rng(seed ^ 0x71d0a1ull);
  std::size_t pairs = 0, group_cases = 0, failures = 0;
  std::size_t pick = 0;
  while (pairs < kQuotientPairs) {
    const FiniteMonoid& p = corpus[pick % corpus.size()];
    ++pick;
    Submonoid n = random_submonoid(p, rng);
    ++pairs;
    QuotientMonoid q = quotient_monoid(p, n);
    FgAbelianGroup via_quotient = gr_pairs(q.carrier).group;
    FgAbelianGroup via_rho = rho(p, n);
    if (!iso(via_quotient, via_rho)) {
      ++failures;
      continue;
    }
    if (is_quotient_group(q)) {
      ++group_cases;
      if (via_rho.rank != 0 || Int(q.carrier.size()) != via_rho.order()) ++failures;
    }
  }
  add_count(c, "pairs", pairs);
  add_count(c, "quotient_group_cases", group_cases);
  add_count(c, "failures", failures);
  c.pass = failures == 0;
  return c;
}

ElementaryKuModule random_ku_module(Rng& rng, bool allow_zero) {
  ElementaryKuModule x;
  const std::size_t summands = (allow_zero ? 0 : 1) + rng.below(6);
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

// criterion: ku/2 ^ ku/4 reproduces exactly; unit, commutativity and
// associativity of the smash product on random expressions
CheckResult check_smash_laws(std::uint64_t seed) {
  CheckResult c{"smash_laws", true, {}};
  std::size_t failures = 0;

  ElementaryKuModule expected =
      ku_module({{ku_mod(2, 0), 1}, {ku_mod(2, 1), 1}});
  if (smash(ku_module({{ku_mod(2, 0), 1}}), ku_module({{ku_mod(4, 0), 1}})) != expected)
    ++failures;

  Rng rng(seed ^ 0x5a51ull);
  std::vector<ElementaryKuModule> expressions;
  expressions.reserve(kKuExpressions);
  for (std::size_t i = 0; i < kKuExpressions; ++i)
    expressions.push_back(random_ku_module(rng, true));

  const ElementaryKuModule unit = ku_module({{ku_summand(0), 1}});
  for (std::size_t i = 0; i < expressions.size(); ++i) {
    const ElementaryKuModule& x = expressions[i];
    const ElementaryKuModule& y = expressions[(i + 1) % expressions.size()];
    const ElementaryKuModule& z = expressions[(i + 2) % expressions.size()];
    if (smash(unit, x) != x) ++failures;
    if (smash(x, y) != smash(y, x)) ++failures;
    if (smash(smash(x, y), z) != smash(x, smash(y, z))) ++failures;
  }
  add_count(c, "expressions", expressions.size());
  add_count(c, "failures", failures);
  c.pass = failures == 0;
  return c;
}

// criterion: top nonzero degree of the Bott cokernel is the suspension
// degree, and the Bott map is injective through suspension degree + 4
CheckResult check_bott_cokernel_degrees(std::uint64_t seed) {
  CheckResult c{"bott_cokernel_degrees", true, {}};
  Rng rng(seed ^ 0xb077ull);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < kKuExpressions; ++i) {
    ElementaryKuModule x = random_ku_module(rng, false);
    const int degree = static_cast<int>(suspension_degree(x));
    int top = -1;
    for (int m = 0; m <= degree + 4; ++m)
      if (!bott_cokernel(x, m).is_zero()) top = m;
    if (top != degree) ++failures;
    for (int m = 0; m <= degree + 4; ++m)
      if (!bott_injective(x, m)) ++failures;
  }
  add_count(c, "modules", kKuExpressions);
  add_count(c, "failures", failures);
  c.pass = failures == 0;
  return c;
}

// criterion: free products take the max of suspension degrees; smash degrees
// add when the max free suspension beats the max torsion suspension
CheckResult check_suspension_degrees(std::uint64_t seed) {
  CheckResult c{"suspension_degrees", true, {}};
  Rng rng(seed ^ 0xde6ull);
  std::size_t failures = 0;

  for (std::size_t i = 0; i < kDegreePairs; ++i) {
    ElementaryKuModule x = random_ku_module(rng, false);
    ElementaryKuModule y = random_ku_module(rng, false);
    x.add(ku_summand(0), 1);  // unit precondition
    y.add(ku_summand(0), 1);
    std::uint32_t expected = std::max(suspension_degree(x), suspension_degree(y));
    if (suspension_degree(free_product(x, y)) != expected) ++failures;
  }

  auto dominant_free = [&rng](ElementaryKuModule x) {
    std::uint32_t torsion_top = 0;
    bool has_torsion = false;
    for (const auto& [s, mult] : x.summands())
      if (!s.is_free()) {
        has_torsion = true;
        torsion_top = std::max(torsion_top, s.suspension);
      }
    std::uint32_t free_top = 0;
    bool has_free = false;
    for (const auto& [s, mult] : x.summands())
      if (s.is_free()) {
        has_free = true;
        free_top = std::max(free_top, s.suspension);
      }
    if (!has_free || (has_torsion && free_top <= torsion_top))
      x.add(ku_summand(torsion_top + 1 + static_cast<std::uint32_t>(rng.below(2))), 1);
    return x;
  };
  for (std::size_t i = 0; i < kDegreePairs; ++i) {
    ElementaryKuModule x = dominant_free(random_ku_module(rng, false));
    ElementaryKuModule y = dominant_free(random_ku_module(rng, false));
    std::uint32_t expected = suspension_degree(x) + suspension_degree(y);
    if (suspension_degree(smash(x, y)) != expected) ++failures;
  }

  add_count(c, "free_product_pairs", kDegreePairs);
  add_count(c, "smash_pairs", kDegreePairs);
  add_count(c, "failures", failures);
  c.pass = failures == 0;
  return c;
}

// criterion: the crystallographic, Heisenberg, and surface example modules
CheckResult check_example_modules() {
  CheckResult c{"example_modules", true, {}};
  std::size_t failures = 0;

  // (V_8 ku) v S^2 ku
  ElementaryKuModule crystal = ku_module({{ku_summand(0), 8}, {ku_summand(2), 1}});
  {
    HomotopyGroupData r0 = bott_cokernel(crystal, 0);
    HomotopyGroupData r2 = bott_cokernel(crystal, 2);
    if (!(r0.rank == ExtNat(8) && r0.torsion.empty())) ++failures;
    if (!(r2.rank == ExtNat(1) && r2.torsion.empty())) ++failures;
    if (!bott_cokernel(crystal, 1).is_zero()) ++failures;
    for (int m = 3; m <= kVanishingScanLimit; ++m)
      if (!bott_cokernel(crystal, m).is_zero()) ++failures;
  }

  // (V_inf ku) v (V_inf S ku)
  ElementaryKuModule heisenberg = ku_module(
      {{ku_summand(0), ExtNat::infinity()}, {ku_summand(1), ExtNat::infinity()}});
  for (int m = 3; m <= kVanishingScanLimit; ++m)
    if (!bott_cokernel(heisenberg, m).is_zero()) ++failures;

  // surface module smashed with itself: ku/2 v S(ku/2) shows up, degree adds
  ElementaryKuModule surface =
      ku_module({{ku_summand(0), 1}, {ku_summand(1), 3}, {ku_mod(2, 0), 1}});
  ElementaryKuModule square = smash(surface, surface);
  if (square.multiplicity(ku_mod(2, 0)).is_zero()) ++failures;
  if (square.multiplicity(ku_mod(2, 1)).is_zero()) ++failures;
  if (suspension_degree(square) != 2) ++failures;

  add_count(c, "failures", failures);
  c.pass = failures == 0;
  return c;
}

// criterion: raw Cayley tables through conjugacy counting into wedges of ku
CheckResult check_finite_group_pipeline() {
  CheckResult c{"finite_group_pipeline", true, {}};
  std::size_t failures = 0;

  struct Case {
    FiniteMonoid group;
    std::uint64_t classes;
  };
  const Case cases[] = {
      {symmetric_group_3(), 3},
      {quaternion_group_8(), 5},
      {cyclic_group(4), 4},
  };
  for (const Case& it : cases) {
    std::uint64_t counted = conjugacy_class_count(it.group);
    if (counted != it.classes) {
      ++failures;
      continue;
    }
    ElementaryKuModule module = kdef_finite_group(counted);
    if (module.multiplicity(ku_summand(0)) != ExtNat(counted)) ++failures;
    HomotopyGroupData k0 = pi(module, 0);
    if (!(k0.rank == ExtNat(counted) && k0.torsion.empty())) ++failures;
    for (int m = 1; m <= kVanishingScanLimit; ++m)
      if (!bott_cokernel(module, m).is_zero()) ++failures;
  }

  add_count(c, "groups", std::size(cases));
  add_count(c, "failures", failures);
  c.pass = failures == 0;
  return c;
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed) {
  SelftestReport report;
  report.seed = seed;
  std::vector<FiniteMonoid> corpus = commutative_corpus(seed, kCorpusCount);
  report.checks.push_back(check_oracle_agreement(corpus));
  report.checks.push_back(check_telescope(corpus));
  report.checks.push_back(check_quotient_compatibility(corpus, seed));
  report.checks.push_back(check_smash_laws(seed));
  report.checks.push_back(check_bott_cokernel_degrees(seed));
  report.checks.push_back(check_suspension_degrees(seed));
  report.checks.push_back(check_example_modules());
  report.checks.push_back(check_finite_group_pipeline());
  return report;
}

std::string format_report(const SelftestReport& report) {
  std::ostringstream out;
  out << "seed = " << report.seed << "\n";
  for (const CheckResult& c : report.checks) {
    for (const auto& [key, value] : c.facts)
      out << c.name << "." << key << " = " << value << "\n";
    out << c.name << " = " << (c.pass ? "PASS" : "FAIL") << "\n";
  }
  out << "selftest = " << (report.all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace defk
