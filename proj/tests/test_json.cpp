/* Copyright 2026 The mzvgenus Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#include <doctest.h>

#include "mzvgenus/genus.hpp"
#include "mzvgenus/json_io.hpp"
#include "mzvgenus/verify.hpp"

using namespace mzvgenus;

TEST_CASE("rationals") {
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(Rational(-2, 4)) == "-1/2");
  CHECK(parse_fraction("6/4") == Rational(3, 2));
  CHECK(parse_fraction("-7") == -7);
  CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("x"), std::invalid_argument);
  CHECK(to_display_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_json(Rational(1, 3)) == "1/3");
}

TEST_CASE("polynomials round-trip through JSON") {
  const SymPoly f = SymPoly::basis_element(Basis::elementary, Partition({2, 1}), Rational(-3, 4)) +
                    SymPoly::basis_element(Basis::elementary, Partition({3}));
  CHECK(sympoly_from_json(to_json(f)) == f);
  CHECK(sympoly_from_json(Json::parse(to_json(f).dump())) == f);

  const QsymPoly q = stuffle(Word({2}), Word({1, 3}));
  CHECK(qsympoly_from_json(to_json(q)) == q);

  const ZetaPoly z = q_genus(5).coefficient(Partition({2, 1, 1, 1}));
  CHECK(zetapoly_from_json(to_json(z)) == z);
  CHECK_THROWS(zetapoly_from_json(Json::parse(R"([{"monomial":{"bogus":1},"coeff":"1/1"}])")));
}

TEST_CASE("genus schema") {
  const Json j = to_json(q_genus(2));
  CHECK(j.at("degree") == 2);
  REQUIRE(j.at("terms").size() == 2);
  CHECK(j["terms"][0]["c_partition"] == Json::array({2}));
  CHECK(j["terms"][0]["coeff"][0]["monomial"]["pi2"] == 1);
  CHECK(j["terms"][0]["coeff"][0]["coeff"] == "1/6");

  const Json cy = to_json(q_genus_cy(4));
  CHECK(cy["terms"][1]["c_partition"] == Json::array({2, 2}));
  CHECK(cy["terms"][1]["mzv_terms"][0]["args"] == Json::array({2, 2}));
  CHECK(cy["terms"][1]["mzv_terms"][0]["coeff"] == "1/1");

  const Json bv = to_json(BoundedValue{1.5, 1e-9});
  CHECK(bv["value"] == 1.5);
  CHECK(bv["bound"] == 1e-9);
}

TEST_CASE("reports") {
  CHECK(suite_names() == std::vector<std::string>{"all", "symbolic", "numeric", "words"});
  CHECK_THROWS_AS(run_suite("bogus"), std::invalid_argument);
  const Report r = run_suite("words");
  CHECK(r.pass());
  const Json j = r.to_json();
  CHECK(j["suite"] == "words");
  CHECK(j["status"] == "pass");
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("description"));
    CHECK(c["status"] == "pass");
  }
  CHECK(r.to_json().dump() == run_suite("words").to_json().dump());
}
