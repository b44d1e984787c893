#include "lefgamma/stabilizer.hpp"

#include <doctest.h>

using namespace lefgamma;

namespace {

std::vector<std::int64_t> e(unsigned n, unsigned i) {
  std::vector<std::int64_t> v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

TEST_CASE("closed formula") {
  CHECK(stabilizer_dim_formula(0, FormKind::symplectic) == 0);
  CHECK(stabilizer_dim_formula(0, FormKind::orthogonal) == 0);
  CHECK(stabilizer_dim_formula(3, FormKind::symplectic) == 6);
  CHECK(stabilizer_dim_formula(3, FormKind::orthogonal) == 3);
}

TEST_CASE("gram matrices") {
  const FormSpace sp(4, FormKind::symplectic);
  const auto j = sp.gram();
  CHECK(j[0][2] == 1);
  CHECK(j[2][0] == -1);
  CHECK(j[0][1] == 0);
  const FormSpace so(4, FormKind::orthogonal);
  const auto g = so.gram();
  CHECK(g[0][3] == 1);
  CHECK(g[3][0] == 1);
  CHECK(g[0][0] == 0);
  CHECK_THROWS_AS(FormSpace(3, FormKind::orthogonal), std::invalid_argument);
  CHECK_THROWS_AS(FormSpace(0, FormKind::orthogonal), std::invalid_argument);
}

TEST_CASE("oracle on the worked cases") {
  // symplectic n=2, W = <e1>: one unipotent parameter remains
  CHECK(stabilizer_dim_oracle(FormSpace(2, FormKind::symplectic), {e(2, 0)}) == 1);
  // orthogonal hyperbolic plane, W = <e1>: the torus direction is forced to zero
  CHECK(stabilizer_dim_oracle(FormSpace(2, FormKind::orthogonal), {e(2, 0)}) == 0);
  // empty W: the whole isometry algebra
  CHECK(stabilizer_dim_oracle(FormSpace(4, FormKind::symplectic), {}) == 10);
  CHECK(stabilizer_dim_oracle(FormSpace(4, FormKind::orthogonal), {}) == 6);
  // orthogonal n=6, dim W = 4 (isotropic-heavy span): d=2 gives 1
  CHECK(stabilizer_dim_oracle(FormSpace(6, FormKind::orthogonal),
                              {e(6, 0), e(6, 1), e(6, 2), e(6, 3)}) == 1);
}

TEST_CASE("oracle matches the formula in exact rational mode") {
  OracleField rational;
  rational.kind = OracleField::Kind::rational;
  for (FormKind kind : {FormKind::symplectic, FormKind::orthogonal}) {
    const FormSpace space(4, kind);
    CHECK(stabilizer_dim_oracle(space, {e(4, 0), e(4, 1)}, rational) ==
          stabilizer_dim_formula(2, kind));
    CHECK(stabilizer_dim_oracle(space, {e(4, 0), e(4, 3)}, rational) ==
          stabilizer_dim_formula(2, kind));
  }
}

TEST_CASE("oracle input validation") {
  const FormSpace space(4, FormKind::symplectic);
  CHECK_THROWS_WITH_AS(
      (void)stabilizer_dim_oracle(space, {e(4, 0), e(4, 0)}), "basis expected",
      std::invalid_argument);
  std::vector<std::int64_t> doubled = e(4, 1);
  doubled[1] = 2;
  CHECK_THROWS_WITH_AS((void)stabilizer_dim_oracle(space, {e(4, 1), doubled}),
                       "basis expected", std::invalid_argument);
  CHECK_THROWS_AS((void)stabilizer_dim_oracle(space, {{1, 0}}), std::invalid_argument);
  OracleField composite;
  composite.p = 10006;
  CHECK_THROWS_AS((void)stabilizer_dim_oracle(space, {e(4, 0)}, composite),
                  std::invalid_argument);
  OracleField tiny;
  tiny.p = 3;
  CHECK_THROWS_AS((void)stabilizer_dim_oracle(space, {e(4, 0)}, tiny), std::invalid_argument);
}

TEST_CASE("filtration profile validation") {
  CHECK_THROWS_AS(FiltrationProfile({{2, 1}, {2, 2}}), std::invalid_argument);  // ranks equal
  CHECK_THROWS_AS(FiltrationProfile({{2, 2}, {1, 1}}), std::invalid_argument);  // exponents
  CHECK_THROWS_AS(FiltrationProfile({{2, 0}}), std::invalid_argument);          // zero exponent
  CHECK_THROWS_AS(FiltrationProfile({{2, 1}}, 0), std::invalid_argument);       // zero degree
  // non-isotropy must propagate to the containing module
  CHECK_THROWS_AS(FiltrationProfile({{2, 1, false}, {1, 2, true}}), std::invalid_argument);
  CHECK_NOTHROW(FiltrationProfile({{2, 1, true}, {1, 2, false}}));
}

TEST_CASE("index exponents") {
  SUBCASE("full-rank single step at level one") {
    const FiltrationProfile profile({{2, 1, true}}, 1);
    const IndexExponents exponents = index_exponent(profile, 1);
    CHECK(exponents.plain == 1);
    CHECK(exponents.delta_augmented == 2);
  }
  SUBCASE("isotropic rank-2 step at level three for h=2") {
    const FiltrationProfile profile({{2, 3, false}}, 1);
    CHECK(index_exponent(profile, 2).plain == 15);  // d = 2*(7-2)/2 = 5
  }
  SUBCASE("rank zero contributes nothing") {
    CHECK(index_exponent(FiltrationProfile({{0, 1}}), 3).plain == 0);
  }
  SUBCASE("residue degree scales both exponents") {
    const FiltrationProfile profile({{2, 1, true}}, 3);
    CHECK(index_exponent(profile, 1).plain == 3);
    CHECK(index_exponent(profile, 1).delta_augmented == 6);
  }
  SUBCASE("errors") {
    CHECK_THROWS_WITH_AS((void)index_exponent(FiltrationProfile({{5, 1}}), 2),
                         "rank exceeds 2h", std::invalid_argument);
    CHECK_THROWS_AS((void)index_exponent(FiltrationProfile{}, 2), std::invalid_argument);
  }
  SUBCASE("telescoping: the exponent splits at any step boundary") {
    const FiltrationProfile profile({{6, 1, true}, {4, 3, false}, {1, 4, false}}, 2);
    const unsigned h = 3;
    const Integer whole = index_exponent(profile, h).plain;
    for (std::size_t split = 1; split < profile.size(); ++split) {
      const FiltrationProfile head(
          {profile.steps.begin(), profile.steps.begin() + split}, 2);
      std::vector<FiltrationStep> tail_steps(profile.steps.begin() + split,
                                             profile.steps.end());
      const unsigned base = profile.steps[split - 1].exponent;
      for (FiltrationStep& step : tail_steps) {
        step.exponent -= base;
      }
      const FiltrationProfile tail(std::move(tail_steps), 2);
      CHECK(whole == index_exponent(head, h).plain + index_exponent(tail, h).plain);
    }
  }
}

TEST_CASE("exhaustive point counts on the toy grid") {
  SUBCASE("worked case: ell=5, level 1, one fixed vector") {
    const PointCountResult r = point_count_index(5, 1, FiltrationProfile({{1, 1}}));
    CHECK(r.group_order == 120);
    CHECK(r.stabilizer_order == 5);
    CHECK(r.index == 24);
    CHECK(r.predicted_exponent == 2);
    CHECK(r.predicted_index == 25);
  }
  SUBCASE("worked case: ell=3") {
    const PointCountResult r = point_count_index(3, 1, FiltrationProfile({{1, 1}}));
    CHECK(r.index == 8);
    CHECK(r.predicted_index == 9);
  }
  SUBCASE("trivial subgroup") {
    const PointCountResult r = point_count_index(2, 1, FiltrationProfile{});
    CHECK(r.index == 1);
    CHECK(r.predicted_index == 1);
  }
  SUBCASE("level-two group orders follow |SL2(Z/l^2)| = l^3 |SL2(F_l)|") {
    const PointCountResult r = point_count_index(3, 2, FiltrationProfile{});
    CHECK(r.group_order == 27 * 24);
    CHECK(r.index == 1);
  }
  SUBCASE("two-step filtration at ell=5") {
    const PointCountResult r = point_count_index(5, 2, FiltrationProfile({{2, 1}, {1, 2}}));
    CHECK(r.group_order == 15000);
    CHECK(r.stabilizer_order == 5);
    CHECK(r.index == 3000);
    CHECK(r.predicted_exponent == 5);  // 3*1 + 2*1
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS((void)point_count_index(7, 1, FiltrationProfile{}), std::invalid_argument);
    CHECK_THROWS_AS((void)point_count_index(5, 3, FiltrationProfile{}), std::invalid_argument);
    CHECK_THROWS_AS((void)point_count_index(5, 1, FiltrationProfile({{3, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)point_count_index(5, 1, FiltrationProfile({{1, 2}})),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)point_count_index(5, 1, FiltrationProfile({{1, 1}}, 2)),
                    std::invalid_argument);
  }
}
