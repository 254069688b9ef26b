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
#include "mzvgenus/numeric.hpp"

using namespace mzvgenus;

namespace {

const ZetaPoly kGamma = ZetaPoly::gamma();
const ZetaPoly kZeta2 = zeta_gen(2);

Word w(std::vector<int> letters) { return Word(std::move(letters)); }

}  // namespace

TEST_CASE("low-degree examples") {
  const GenusPolynomial q1 = q_genus(1);
  CHECK(q1.coeffs.size() == 1);
  CHECK(q1.coefficient(Partition({1})) == kGamma);
  CHECK(q1.to_string() == "Q_1 = γ·c1");
  CHECK(q1.to_string(true) == "Q_1 = gamma*c1");

  const GenusPolynomial q2 = q_genus(2);
  CHECK(q2.coefficient(Partition({1, 1})) == (kGamma.pow(2) - kZeta2) * Rational(1, 2));
  CHECK(q2.coefficient(Partition({2})) == kZeta2);

  const GenusPolynomial q3 = q_genus(3);
  CHECK(q3.coefficient(Partition({1, 1, 1})) ==
        zeta_gen(3) * Rational(1, 3) - kGamma * kZeta2 * Rational(1, 2) + kGamma.pow(3) * Rational(1, 6));

  CHECK(q_genus(4).coefficient(Partition({2, 2})) == zeta_even(4) * Rational(3, 4));
  CHECK(render_chern_monomial(Partition({2, 1, 1})) == "c2·c1²");
  CHECK(render_chern_monomial(Partition({2, 1, 1}), true) == "c2*c1^2");
}

TEST_CASE("leading coefficients, homogeneity and term counts") {
  for (int i = 1; i <= 10; ++i) {
    const GenusPolynomial q = q_genus(i);
    CHECK(q.degree == i);
    CHECK(q.coefficient(Partition({i})) == (i == 1 ? kGamma : zeta_gen(i)));
    CHECK(q.coeffs.size() == partitions_of(i).size());
    for (const auto& [lambda, c] : q.coeffs) {
      CHECK(lambda.weight() == i);
      CHECK(c.is_homogeneous(i));
    }
  }
}

TEST_CASE("generating product oracle agrees with the coefficient formula") {
  for (int i = 1; i <= kOracleBudget; ++i) CHECK(q_genus_oracle(i) == q_genus(i));
  CHECK_THROWS_AS(q_genus_oracle(0), BudgetError);
  CHECK_THROWS_AS(q_genus_oracle(kOracleBudget + 1), BudgetError);
}

TEST_CASE("parallel and serial genus agree") {
  for (int i = 1; i <= 9; ++i) CHECK(q_genus(i) == q_genus_serial(i));
}

TEST_CASE("budgets") {
  CHECK_THROWS_AS(q_genus(0), BudgetError);
  CHECK_THROWS_AS(q_genus(kDefaultGenusBudget + 1), BudgetError);
  CHECK_THROWS_AS(q_genus(5, 4), BudgetError);
  CHECK_THROWS_AS(q_genus_cy(1), BudgetError);
  CHECK_THROWS_AS(q_genus_cy(kDefaultGenusBudget + 1), BudgetError);
}

TEST_CASE("MZV expansion of Calabi–Yau coefficients") {
  CHECK(mzv_expansion(Partition({2, 2})) == std::vector<MzvTerm>{{1, w({2, 2})}});
  CHECK(mzv_expansion(Partition({6, 2})) == std::vector<MzvTerm>{{1, w({6, 2})}, {1, w({2, 6})}});
  CHECK(mzv_expansion(Partition({4})) == std::vector<MzvTerm>{{1, w({4})}});
  CHECK(mzv_expansion(Partition({3, 2, 2})).size() == 3);
  CHECK_THROWS_AS(mzv_expansion(Partition({2, 1})), std::invalid_argument);

  const CyGenusPolynomial q4 = q_genus_cy(4);
  CHECK(q4.coeffs.size() == 2);
  CHECK(q4.coeffs.at(Partition({4})) == std::vector<MzvTerm>{{1, w({4})}});
  CHECK(q4.coeffs.at(Partition({2, 2})) == std::vector<MzvTerm>{{1, w({2, 2})}});
  CHECK(q4.to_string() == "Q_4|c1=0 = ζ(4)·c4 + ζ(2,2)·c2²");
  CHECK(q_genus_cy(2).coeffs.at(Partition({2})) == std::vector<MzvTerm>{{1, w({2})}});
  CHECK(q_genus_cy(8).coeffs.at(Partition({6, 2})) == mzv_expansion(Partition({6, 2})));

  for (int i = 2; i <= 10; ++i)
    for (const auto& [lambda, terms] : q_genus_cy(i).coeffs) {
      CHECK_FALSE(lambda.contains_part(1));
      for (const auto& t : terms) CHECK(t.args.front() >= 2);
    }
}

TEST_CASE("Calabi–Yau coefficients evaluate to the ring values") {
  const double tol = 1e-6;
  for (int i = 2; i <= 6; ++i)
    for (const auto& [lambda, terms] : q_genus_cy(i).coeffs) {
      BoundedValue sum;
      for (const auto& t : terms) sum = sum + scale(mzv(t.args, tol), t.coeff);
      CHECK(sum.agrees_with(eval_zeta_poly(zeta_of_monomial(lambda))));
    }
}
