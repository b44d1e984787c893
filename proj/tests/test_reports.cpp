#include "lefgamma/reports.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>

using namespace lefgamma;

namespace {

const char* kSample =
    R"({"factors":[{"type":"I","e":1,"h":1,"n":1},{"type":"III","e":1,"h":5,"n":1}]})";

}  // namespace

TEST_CASE("variety JSON is parsed strictly") {
  const Json good = Json::parse(kSample);
  const VarietyProduct v = variety_from_json(good);
  CHECK(v.factors.size() == 2);
  CHECK(v.factors[1].albert == AlbertType::III);

  // canonical round trip
  CHECK(variety_json(variety_from_json(variety_json(v))) == variety_json(v));

  CHECK_THROWS_WITH_AS((void)variety_from_json(Json::parse(
                           R"({"factors":[{"type":"I","e":1,"h":1,"n":1}],"extra":1})")),
                       "unknown key: extra", std::invalid_argument);
  CHECK_THROWS_WITH_AS((void)variety_from_json(Json::parse(
                           R"({"factors":[{"type":"I","e":1,"h":1,"n":1,"x":2}]})")),
                       "unknown key: x", std::invalid_argument);
  CHECK_THROWS_WITH_AS((void)variety_from_json(Json::parse(
                           R"({"factors":[{"type":"IV","e":1,"h":1,"n":1}]})")),
                       "type IV is out of scope", std::invalid_argument);
  CHECK_THROWS_AS((void)variety_from_json(Json::parse(R"({"factors":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)variety_from_json(Json::parse(
                      R"({"factors":[{"type":"I","e":0,"h":1,"n":1}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)variety_from_json(Json::parse(
                      R"({"factors":[{"type":"I","e":1,"h":-3,"n":1}]})")),
                  std::invalid_argument);
}

TEST_CASE("gamma report carries the worked example") {
  const Json report = gamma_report(Json::parse(kSample), true);
  CHECK(report.at("command") == "gamma");
  CHECK(report.at("version") == Json("0.1.0"));
  CHECK(report.at("results").at("gamma") == Json({{"num", "1"}, {"den", "2"}}));
  CHECK(report.at("results").at("argmax") == Json::array({0}));
  CHECK(report.at("results").at("audit").size() == 3);
  CHECK(report.at("results").at("total_dimension") == Json("11"));

  // the echoed input reproduces the input exactly (canonical JSON)
  CHECK(Json::parse(canonical_dump(report.at("inputs"))) == Json::parse(kSample));
  // reports themselves survive a canonical round trip
  CHECK(Json::parse(canonical_dump(report)) == report);
}

TEST_CASE("lefschetz report") {
  const Json report = lefschetz_report(Json::parse(kSample));
  CHECK(report.at("results").at("product").at("status") == "proven");
  CHECK(report.at("results").at("factors").size() == 2);
  CHECK(report.at("results").at("factors")[0].at("criterion") == "clause-1");

  const Json unknown = lefschetz_report(
      Json::parse(R"({"factors":[{"type":"III","e":1,"h":4,"n":1}]})"));
  CHECK(unknown.at("results").at("product").at("status") == "unknown");
  CHECK(unknown.at("results").at("factors")[0].at("certificates").size() == 1);
}

TEST_CASE("sets report with membership test") {
  SetsQuery query;
  query.set = SetTag::sigma_prime;
  query.test = Integer(5);
  const Json report = sets_report(query);
  CHECK(report.at("results").at("member") == Json(false));
  CHECK(report.at("results").contains("negative"));

  query.test = Integer(35);
  const Json hit = sets_report(query);
  CHECK(hit.at("results").at("member") == Json(true));
  CHECK(hit.at("results").at("certificate").at("family") == "F5");
}

TEST_CASE("doubled sets report diffs against the published list") {
  SetsQuery query;
  query.set = SetTag::sigma_prime;
  query.bound = Integer(1000);
  query.doubled = true;
  const Json report = sets_report(query);
  CHECK(report.at("results").at("count") == 22);
  const Json& diff = report.at("diffs").at("reference_list_1e3");
  CHECK(diff.at("matched").size() == 21);
  CHECK(diff.at("extra") == Json::array({"924"}));
  CHECK(diff.at("missing") == Json::array());
}

TEST_CASE("enumeration cache round trip") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "lefgamma_sets_cache_test.txt";
  std::error_code ec;
  fs::remove(path, ec);

  SetsQuery query;
  query.set = SetTag::sigma;
  query.bound = Integer(1000);
  query.cache_path = path.string();

  const Json first = sets_report(query);
  CHECK_FALSE(first.at("results").contains("cache"));
  REQUIRE(fs::exists(path));
  const Json second = sets_report(query);
  CHECK(second.at("results").at("cache") == Json(path.string()));
  CHECK(second.at("results").at("values") == first.at("results").at("values"));
  CHECK(second.at("results").at("certificates") == first.at("results").at("certificates"));
  fs::remove(path, ec);
}

TEST_CASE("minuscule reports") {
  const Json lookup = minuscule_lookup_report("D", 5, "omega_1");
  CHECK(lookup.at("results").at("entry").at("dimension") == "10");
  CHECK(lookup.at("results").at("entry").at("duality") == 1);

  const Json exclusions = minuscule_exclusions_report(Integer(100));
  CHECK(exclusions.at("results").at("matches_sigma_prime") == Json(true));
  CHECK(exclusions.at("results").at("dimensions")[0] == "4");
}

TEST_CASE("psi and prefix-max reports") {
  const Json psi_out = psi_report(
      Json{{"h", 2}, {"residue_degrees", {1}}, {"ranks", {2}}, {"delta", 0}}, std::nullopt);
  CHECK(psi_out.at("results").at("psi") == Json({{"num", "4"}, {"den", "5"}}));

  const Json max_out =
      psi_report(Json{{"h", 2}, {"residue_degrees", {1}}}, PsiRegime::full);
  CHECK(max_out.at("results").at("psi_max") == Json({{"num", "8"}, {"den", "7"}}));
  CHECK(max_out.at("results").at("agreement") == Json(true));

  const Json prefix =
      prefix_max_report(Json{{"a", {1, 3}}, {"b", {2, 1}}});
  CHECK(prefix.at("results").at("value") == Json({{"num", "4"}, {"den", "3"}}));
  CHECK(prefix.at("results").at("k") == 2);

  const Json with_strings = prefix_max_report(Json{{"a", {"1/2", "3"}}, {"b", {"1", "1/2"}}});
  CHECK(with_strings.at("results").at("value") == Json({{"num", "7"}, {"den", "3"}}));
}

TEST_CASE("degree-bound report") {
  const Json report = degree_bound_report(30, 2);
  CHECK(report.at("results").at("omega") == 3);
  CHECK(report.at("results").at("principal") == "810000");
}

TEST_CASE("human rendering mentions the command") {
  const Json report = gamma_report(Json::parse(kSample), false);
  const std::string text = render_human(report);
  CHECK(text.find("gamma = 1/2") != std::string::npos);
  CHECK(text.find("argmax") != std::string::npos);
}
