#include "lefgamma/lefschetz.hpp"

#include <doctest.h>

using namespace lefgamma;

TEST_CASE("factor criteria") {
  SUBCASE("type III, odd h outside the exclusions: clause 1") {
    const LefschetzVerdict v = check_factor({AlbertType::III, 2, 5});
    CHECK(v.status == VerdictStatus::proven);
    CHECK(v.criterion == 1);
  }
  SUBCASE("type III with h = 3: both clauses blocked by certificates") {
    const LefschetzVerdict v = check_factor({AlbertType::III, 1, 3});
    CHECK(v.status == VerdictStatus::unknown);
    CHECK_FALSE(v.criterion.has_value());
    REQUIRE(v.certificates.size() == 2);
    CHECK(v.certificates[0].set == SetTag::odd_exclusion);
    CHECK(v.certificates[1].set == SetTag::sigma_prime);
  }
  SUBCASE("type I with h = 2: clause 1") {
    const LefschetzVerdict v = check_factor({AlbertType::I, 1, 2});
    CHECK(v.status == VerdictStatus::proven);
    CHECK(v.criterion == 1);
  }
  SUBCASE("type III with h = 4: even and in sigma-prime") {
    const LefschetzVerdict v = check_factor({AlbertType::III, 1, 4});
    CHECK(v.status == VerdictStatus::unknown);
    REQUIRE(v.certificates.size() == 1);
    CHECK(v.certificates[0].family == "F1");
  }
  SUBCASE("type I with h = 6 and e = 1: clause 2 (6 outside sigma)") {
    const LefschetzVerdict v = check_factor({AlbertType::I, 1, 6});
    CHECK(v.status == VerdictStatus::proven);
    CHECK(v.criterion == 2);
  }
  SUBCASE("type I with h = 4 and e = 1: 4 is in sigma") {
    const LefschetzVerdict v = check_factor({AlbertType::I, 1, 4});
    CHECK(v.status == VerdictStatus::unknown);
    REQUIRE(v.certificates.size() == 1);
    CHECK(v.certificates[0].set == SetTag::sigma);
  }
  SUBCASE("even h with e > 1 leaves both clauses blocked") {
    const LefschetzVerdict v = check_factor({AlbertType::II, 2, 4});
    CHECK(v.status == VerdictStatus::unknown);
    CHECK(v.reasons.size() == 2);
  }
  SUBCASE("clause numbering prefers clause 1") {
    // h = 7 is odd and 7 is outside sigma, so both clauses hold
    const LefschetzVerdict v = check_factor({AlbertType::I, 1, 7});
    CHECK(v.criterion == 1);
  }
}

TEST_CASE("product criteria") {
  const LefschetzVerdict good =
      check_product(VarietyProduct({{AlbertType::I, 1, 2, 1}, {AlbertType::III, 2, 5, 1}}));
  CHECK(good.status == VerdictStatus::proven);

  const LefschetzVerdict bad =
      check_product(VarietyProduct({{AlbertType::I, 1, 2, 1}, {AlbertType::III, 1, 4, 1}}));
  CHECK(bad.status == VerdictStatus::unknown);
  CHECK(bad.certificates.size() == 1);
}

TEST_CASE("clause 1 for type III never conflicts with the exclusion set") {
  for (unsigned h = 1; h <= 2000; ++h) {
    const LefschetzVerdict v = check_factor({AlbertType::III, 2, h});
    if (v.status == VerdictStatus::proven) {
      CHECK(v.criterion == 1);
      CHECK(h % 2 == 1);
      CHECK_FALSE(in_odd_exclusion(h).has_value());
    } else {
      CHECK((h % 2 == 0 || in_odd_exclusion(h).has_value()));
    }
  }
}
