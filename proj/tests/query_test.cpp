#include <doctest.h>

#include <algorithm>

#include "smul/dsl.hpp"
#include "smul/error.hpp"
#include "smul/ideal.hpp"
#include "smul/query.hpp"

using smul::Json;
using smul::cli::run_query;

namespace {

Json q(std::string_view cmd, std::vector<std::string> args) { return run_query(cmd, args).body; }

Json strs(std::initializer_list<const char*> xs) {
  Json out = Json::array();
  for (const char* x : xs) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("strongmul on Z6 with S = {1, 3}") {
  const auto j = q("strongmul", {"Zn 6", "<3>"});
  CHECK(j["verdict"] == true);
  CHECK(j["t"] == "3");
  CHECK(j["witness"] == "3");
  CHECK(j["elements"] == strs({"1", "3"}));
  CHECK(j["tests_agree"] == true);
}

TEST_CASE("strongmul on infinite rings") {
  CHECK(q("strongmul", {"Z", "<2>"})["verdict"] == false);
  CHECK(q("strongmul", {"Z", "<-1>"})["verdict"] == true);
  CHECK(q("strongmul", {"Z", "complement (3)"})["verdict"] == false);
  CHECK(q("strongmul", {"Z x Z", "<-1> x <1>"})["verdict"] == true);
  CHECK(q("strongmul", {"Z x Z", "<1> x <5>"})["verdict"] == false);
}

TEST_CASE("sminimal on Z4 x Z9 with S generated by (1,0)") {
  const auto j = q("sminimal", {"Zn 4 x Zn 9", "<(1,0)>"});
  const Json expected = Json::array({Json{{"ideal", "2Z4 x 0"}, {"prime", false}, {"witness", strs({"(0,1)", "(1,0)"})}}});
  CHECK(j["s_minimal_primes"] == expected);
}

TEST_CASE("algorithm1 query") {
  const auto j = q("algorithm1", {"Zn 4 x Zn 9", "<(1,0)>"});
  CHECK(j["applicable"] == true);
  CHECK(j["matches_brute_force"] == true);
  REQUIRE(j["ideals"].size() == 1);
  CHECK(j["ideals"][0]["ideal"] == "2Z4 x 0");
  CHECK(q("algorithm1", {"Zn 6", "<3>"})["applicable"] == false);
}

TEST_CASE("krull on Z6 with S = {1, 3}") {
  const auto j = q("krull", {"Zn 6", "<3>"});
  CHECK(j["found"] == strs({"0", "2", "4"}));
  CHECK(j["maximal"] == true);
  CHECK(j["omega_maximal_all_maximal"] == true);
}

TEST_CASE("sprime, saturate, localize, divides") {
  auto j = q("sprime", {"Zn 6", "<3>", "(0)"});
  CHECK(j["s_prime"] == true);
  CHECK(j["witness"] == "3");
  CHECK(j["prime"] == false);
  // (4) in Z12 with S = {1, 3, 9}: 2 * 2 ∈ (4) but 2s ∉ (4) for every s ∈ S.
  CHECK(q("sprime", {"Zn 12", "<3>", "(4)"})["s_prime"] == false);

  j = q("saturate", {"Zn 6", "<3>"});
  CHECK(j["saturation"] == strs({"1", "3", "5"}));
  CHECK(j["form_matches"] == true);
  CHECK(j["prime_union_matches"] == true);

  // S^-1 Z6 ≅ 3 Z6 ≅ Z2; (2) localizes to 0 and contracts to ((2) : 3) = (2).
  j = q("localize", {"Zn 6", "<3>", "(2)"});
  CHECK(j["t"] == "3");
  CHECK(j["elements"] == strs({"0", "3"}));
  CHECK(j["localized_ideal"] == strs({"0"}));
  CHECK(j["contraction"] == strs({"0", "2", "4"}));

  j = q("divides", {"Zn 6", "2", "4"});
  CHECK(j["divides"] == true);
  CHECK(q("divides", {"Zn 6", "4", "3"})["divides"] == false);
  CHECK(q("divides", {"Z", "3", "12"})["divides"] == true);
}

TEST_CASE("sminimal over Z is the zero ideal") {
  const auto j = q("sminimal", {"Z", "<3>"});
  REQUIRE(j["s_minimal_primes"].size() == 1);
  CHECK(j["s_minimal_primes"][0]["ideal"] == "0");
}

TEST_CASE("audit-one replays") {
  const auto r = run_query("audit-one", {"counterexample2"});
  CHECK(r.ok);
  CHECK(r.body["verdict"] == "PASS");
  for (const char* name : {"counterexample1", "counterexample3", "counterexample4", "colon", "prime-family"})
    CHECK_MESSAGE(run_query("audit-one", {name}).ok, name);
  CHECK_THROWS_AS(run_query("audit-one", {"counterexample9"}), smul::Error);
}

TEST_CASE("query diagnostics") {
  CHECK_THROWS_AS(q("strongmul", {"Zn 4 /", "<1>"}), smul::dsl::ParseError);
  CHECK_THROWS_AS(q("nosuch", {"Zn 4"}), smul::Error);
  CHECK_THROWS_AS(q("strongmul", {"Zn 4"}), smul::Error);
  smul::cli::QueryOptions small;
  small.budget = 10;
  try {
    run_query("strongmul", {"Zn 4 x Zn 9", "<1>"}, small);
    FAIL("expected TooLarge");
  } catch (const smul::Error& e) {
    CHECK(e.kind() == smul::ErrorKind::TooLarge);
  }
  // 0 is not allowed in a multiplicative set.
  CHECK_THROWS_AS(q("strongmul", {"Zn 6", "<2, 3>"}), smul::Error);
}

TEST_CASE("ideal names") {
  const auto r = smul::FiniteRing::product(smul::FiniteRing::zn(4), smul::FiniteRing::zn(9));
  const auto& lat = r->lattice();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < lat.size(); ++i) names.push_back(smul::cli::name_ideal(*r, lat[i]));
  // Ideals of Z4 x Z9 are products of the 3 x 3 ideals of the factors.
  CHECK(names.size() == 9);
  for (const char* n : {"0 x 0", "2Z4 x 0", "Z4 x 3Z9", "Z4 x Z9", "0 x Z9"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
}

TEST_CASE("integer literals in a corner ring are multiples of its identity") {
  // corner(Z12, 4) = {0, 4, 8} with identity 4.
  CHECK(q("strongmul", {"corner(Zn 12, 4)", "<1>"})["elements"] == strs({"4"}));
  CHECK(q("strongmul", {"corner(Zn 12, 4)", "<8>"})["elements"] == strs({"4", "8"}));
  // Tuples are read in the base ring and must lie in the corner.
  CHECK(q("strongmul", {"corner(Zn 4 x Zn 4, (1,0))", "<(1,0)>"})["verdict"] == true);
  CHECK_THROWS_AS(q("strongmul", {"corner(Zn 4 x Zn 4, (1,0))", "<(1,1)>"}), smul::Error);
}
