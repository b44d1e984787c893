#include "lefgamma/bounds.hpp"

#include "lefgamma/gamma.hpp"
#include "lefgamma/verification.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace lefgamma;

namespace {

Rational frac(long long num, long long den) { return make_fraction(num, den); }

}  // namespace

TEST_CASE("psi values") {
  CHECK(psi(PsiInput(2, {1}, {2}, false)) == frac(4, 5));
  CHECK(psi(PsiInput(2, {1}, {4}, true)) == frac(8, 7));
  CHECK(psi(PsiInput(1, {1}, {1}, false)) == 2);
  // f=(2,1), r=(3,1): num 2*(6+1), den 1 + (2*3*4/2 + 1*6/2)
  CHECK(psi(PsiInput(2, {2, 1}, {3, 1}, true)) == frac(14, 16));
  CHECK_THROWS_WITH_AS((void)psi(PsiInput(2, {1}, {0}, false)), "trivial subgroup",
                       std::invalid_argument);
}

TEST_CASE("psi input validation") {
  CHECK_THROWS_AS(PsiInput(0, {1}, {1}, false), std::invalid_argument);
  CHECK_THROWS_AS(PsiInput(2, {}, {}, false), std::invalid_argument);
  CHECK_THROWS_AS(PsiInput(2, {1, 1}, {1}, false), std::invalid_argument);
  CHECK_THROWS_AS(PsiInput(2, {0}, {1}, false), std::invalid_argument);
  CHECK_THROWS_AS(PsiInput(2, {1}, {5}, true), std::invalid_argument);   // rank > 2h
  CHECK_THROWS_AS(PsiInput(2, {1}, {3}, false), std::invalid_argument);  // isotropic cap
}

TEST_CASE("closed maxima of psi") {
  const std::vector<unsigned> one{1};
  CHECK(psi_max(2, one, PsiRegime::isotropic) == frac(4, 5));
  CHECK(psi_max(2, one, PsiRegime::full) == frac(8, 7));
  const std::vector<unsigned> two{2};
  CHECK(psi_max(3, two, PsiRegime::full) == frac(24, 31));
  // the isotropic maximum does not depend on the residue degrees
  CHECK(psi_max(3, two, PsiRegime::isotropic) == psi_max(3, one, PsiRegime::isotropic));
}

TEST_CASE("closed maxima agree with exhaustive grids and the 64-bit oracle") {
  for (unsigned h = 1; h <= 6; ++h) {
    for (unsigned e = 1; e <= 3; ++e) {
      const std::vector<unsigned> single{e};
      for (PsiRegime regime : {PsiRegime::isotropic, PsiRegime::full}) {
        const Rational closed = psi_max(h, single, regime);
        CHECK(closed == psi_grid_max(h, single, regime));
        const oracles::Fraction naive =
            oracles::naive_psi_max_single_place(h, e, regime == PsiRegime::full);
        CHECK(closed == make_fraction(naive.num, naive.den));
      }
    }
  }
}

TEST_CASE("prefix maximum") {
  const std::vector<Rational> a1{1, 1}, b1{1, 2};
  const PrefixMaxResult r1 = prefix_max(a1, b1);
  CHECK(r1.value == 1);
  CHECK(r1.k == 1);

  const std::vector<Rational> a2{2}, b2{4};
  const PrefixMaxResult r2 = prefix_max(a2, b2);
  CHECK(r2.value == frac(1, 2));
  CHECK(r2.k == 1);

  const std::vector<Rational> a3{1, 3}, b3{2, 1};
  const PrefixMaxResult r3 = prefix_max(a3, b3);
  CHECK(r3.value == frac(4, 3));
  CHECK(r3.k == 2);

  // ties resolve to the smallest k
  const std::vector<Rational> a4{1, 1}, b4{1, 1};
  CHECK(prefix_max(a4, b4).k == 1);

  CHECK_THROWS_AS((void)prefix_max(std::vector<Rational>{}, std::vector<Rational>{}),
                  std::invalid_argument);
  const std::vector<Rational> short_b{1};
  CHECK_THROWS_AS((void)prefix_max(a1, short_b), std::invalid_argument);
  const std::vector<Rational> neg{-1, 1};
  CHECK_THROWS_AS((void)prefix_max(a1, neg), std::invalid_argument);
}

TEST_CASE("torsion cardinality exponent") {
  CHECK(torsion_card_exponent(FiltrationProfile({{2, 1}}, 1), 2) == 4);
  CHECK(torsion_card_exponent(FiltrationProfile({{1, 3}}, 2), 1) == 6);
  CHECK(torsion_card_exponent(FiltrationProfile{}, 2) == 0);
  // two-step profile: ranks (3, 1) at exponents (1, 2): 2*1 + 1*2 jumps
  CHECK(torsion_card_exponent(FiltrationProfile({{3, 1}, {1, 2}}, 1), 2) ==
        2 * ((3 - 1) * 1 + 1 * 2));
  CHECK_THROWS_AS((void)torsion_card_exponent(FiltrationProfile{}, 0), std::invalid_argument);
}

TEST_CASE("degree lower bound components") {
  const DegreeLowerBound b1 = degree_lower_bound(1, 5);
  CHECK(b1.omega == 0);
  CHECK(b1.principal == 1);
  const DegreeLowerBound b2 = degree_lower_bound(12, 1);
  CHECK(b2.omega == 2);
  CHECK(b2.principal == 144);
  const DegreeLowerBound b3 = degree_lower_bound(30, 2);
  CHECK(b3.omega == 3);
  CHECK(b3.principal == 810000);
  CHECK(degree_lower_bound(2, 10).principal == (Integer(1) << 20));
  CHECK_THROWS_AS((void)degree_lower_bound(0, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)degree_lower_bound(1, 0), std::invalid_argument);
}

TEST_CASE("omega is additive on coprime arguments") {
  CHECK(degree_lower_bound(4 * 9 * 25, 1).omega == 3);
  CHECK(degree_lower_bound(7 * 11 * 13 * 17, 1).omega == 4);
  CHECK(degree_lower_bound(999983ULL * 1000003ULL, 1).omega == 2);
  CHECK(degree_lower_bound((1ULL << 61) - 1, 1).omega == 1);  // Mersenne prime
}

TEST_CASE("asymptotic ratio record holders") {
  CHECK(omega_asymptotic_check(3).argmax == 3);
  CHECK(omega_asymptotic_check(6).argmax == 6);
  CHECK(omega_asymptotic_check(30).argmax == 30);
  CHECK(omega_asymptotic_check(10000).argmax == 2310);
  CHECK(omega_asymptotic_check(30).max_ratio > omega_asymptotic_check(6).max_ratio);
  CHECK_THROWS_AS((void)omega_asymptotic_check(2), std::invalid_argument);
}

TEST_CASE("psi maxima reconcile with gamma for a single type III factor") {
  for (unsigned h = 1; h <= 100; ++h) {
    for (unsigned e = 1; e <= 10; ++e) {
      const std::vector<unsigned> degrees{e};
      const Rational isotropic = psi_max(h, degrees, PsiRegime::isotropic);
      const Rational full = psi_max(h, degrees, PsiRegime::full);
      CHECK(full >= isotropic);
      CHECK(std::max(isotropic, full) == gamma_simple({AlbertType::III, e, h}));
    }
  }
}
