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

#include <cmath>
#include <numbers>

#include "mzvgenus/numeric.hpp"

using namespace mzvgenus;

namespace {

// Reference constants; the MZVs are classical closed forms.
constexpr double kGamma = 0.57721566490153286061;
constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6;
constexpr double kZeta3 = 1.20205690315959428540;
constexpr double kPi4 = kZeta2 * kZeta2 * 36;

Word w(std::vector<int> letters) { return Word(std::move(letters)); }

}  // namespace

TEST_CASE("BoundedValue arithmetic") {
  const BoundedValue a{1.0, 0.1}, b{2.0, 0.2};
  CHECK((a + b).value == doctest::Approx(3.0));
  CHECK((a + b).bound >= 0.3);
  CHECK((a * b).bound >= 0.1 * 2.0 + 0.2 * 1.0);
  CHECK(scale(a, Rational(-1, 2)).value == doctest::Approx(-0.5));
  CHECK(scale(a, Rational(-1, 2)).bound >= 0.05);
  CHECK(pow(b, 3).value == doctest::Approx(8.0));
  CHECK(a.agrees_with({1.25, 0.1}, 0.06));
  CHECK_FALSE(a.agrees_with({1.25, 0.1}));
}

TEST_CASE("classical MZV values") {
  // Plain summation converges like N^{1-i_1}, so the reachable tolerance varies.
  struct Case {
    std::vector<int> args;
    double expected;
    double tol;
  };
  const Case cases[] = {
      {{2}, kZeta2, 1e-8},
      {{3}, kZeta3, 1e-10},
      {{2, 1}, kZeta3, 1e-6},
      {{2, 2}, kPi4 / 120, 1e-7},
      {{3, 1}, kPi4 / 360, 1e-8},
      {{4}, kPi4 / 90, 1e-10},
      {{2, 2, 2}, kPi4 * kZeta2 * 6 / 5040, 1e-6},  // π⁶/7!
  };
  for (const auto& c : cases) {
    const BoundedValue v = mzv(w(c.args), c.tol);
    CHECK(v.bound <= c.tol);
    CHECK(std::abs(v.value - c.expected) <= v.bound + 1e-15);
  }
}

TEST_CASE("mzv rejects bad input") {
  CHECK_THROWS_AS(mzv(w({1, 2}), 1e-6), DivergentMzvError);
  CHECK_THROWS_AS(mzv(Word{}, 1e-6), DivergentMzvError);
  CHECK_THROWS_AS(mzv(w({2}), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(mzv(w({2, 1, 1, 1}), 1e-14, MzvOptions{1000}), CutoffBudgetError);
}

TEST_CASE("tail bound is sound") {
  // The reported bound at N must cover the distance to a far longer run.
  for (const auto& args : {w({2}), w({2, 1}), w({3, 1, 1}), w({2, 2}), w({4, 1})}) {
    const BoundedValue shortrun = mzv_truncated(args, 1000);
    const BoundedValue longrun = mzv_truncated(args, 2'000'000);
    CHECK(std::abs(shortrun.value - longrun.value) <= shortrun.bound);
    CHECK(longrun.bound < shortrun.bound);
    CHECK(mzv_tail_bound(args, 1000) <= shortrun.bound);
  }
  CHECK(mzv_cutoff(w({2}), 1e-3) < mzv_cutoff(w({2}), 1e-6));
}

TEST_CASE("stuffle relation holds numerically") {
  // ζ(2)ζ(2) = 2ζ(2,2) + ζ(4); ζ(2)ζ(3) = ζ(2,3) + ζ(3,2) + ζ(5)
  const double tol = 1e-7;
  const BoundedValue z2 = mzv(w({2}), tol), z3 = mzv(w({3}), tol);
  CHECK((z2 * z2).agrees_with(eval_words(stuffle(w({2}), w({2})), tol)));
  CHECK((z2 * z3).agrees_with(eval_words(stuffle(w({2}), w({3})), tol)));
  CHECK_THROWS_AS(eval_words(QsymPoly::word(w({1, 2})), tol), DivergentMzvError);
}

TEST_CASE("regularized zeta is multiplicative") {
  const double tol = 1e-5;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3 - (a == 3); ++b)
      for (const auto& x : words_of_weight(a))
        for (const auto& y : words_of_weight(b)) {
          const BoundedValue lhs = eval_mzv_poly(zeta_word(stuffle(x, y)), tol);
          const BoundedValue rhs = eval_mzv_poly(zeta_word(x), tol) * eval_mzv_poly(zeta_word(y), tol);
          CHECK(lhs.agrees_with(rhs));
        }
}

TEST_CASE("generator values") {
  CHECK(std::abs(generator_value(0).value - kGamma) <= 1e-15);
  CHECK(std::abs(generator_value(1).value - 6 * kZeta2) <= 1e-14);
  const BoundedValue z3 = generator_value(2);
  CHECK(z3.bound <= 1e-12);
  CHECK(std::abs(z3.value - kZeta3) <= z3.bound + 1e-15);
  const auto all = generator_values(9);
  CHECK(all.size() == 6);
  CHECK(all.count("zeta9") == 1);
  CHECK(all.count("gamma") == 1);
}

TEST_CASE("Euler–Maclaurin agrees with direct summation") {
  for (int s = 2; s <= 12; ++s) {
    const BoundedValue em = zeta_euler_maclaurin(s);
    CHECK(em.bound <= 1e-13);
    CHECK(em.agrees_with(mzv(w({s}), s == 2 ? 1e-7 : 1e-10)));
  }
  CHECK(std::abs(zeta_euler_maclaurin(4).value - kPi4 / 90) <= 1e-14);
}

TEST_CASE("ring evaluation") {
  // Second coefficient of 1/Γ(1+z): γ²/2 − π²/12.
  const ZetaPoly g2 = ZetaPoly::gamma().pow(2) * Rational(1, 2) - ZetaPoly::pi_squared() * Rational(1, 12);
  const BoundedValue v = eval_zeta_poly(g2);
  CHECK(v.value == doctest::Approx(-0.6558780715202538).epsilon(1e-12));
  CHECK(eval_zeta_poly(zeta_even(6)).value == doctest::Approx(kPi4 * kZeta2 * 6 / 945).epsilon(1e-13));
  CHECK(eval_zeta_poly(ZetaPoly{}).value == 0.0);
}

TEST_CASE("1/Γ(1+z) series") {
  const auto g = gamma_recip_coeffs(12);
  REQUIRE(g.size() == 13);
  CHECK(g[0].value == 1.0);
  CHECK(g[1].value == doctest::Approx(kGamma));
  CHECK(g[2].value == doctest::Approx(-0.6558780715202538).epsilon(1e-12));
  CHECK(g[3].value == doctest::Approx(-0.0420026350340952).epsilon(1e-10));
  // 1/Γ(3/2) = 2/√π
  const BoundedValue half = reciprocal_gamma_product(0.5);
  CHECK(std::abs(half.value - 2 / std::sqrt(std::numbers::pi)) <= half.bound);
  CHECK(half.bound <= 1e-6);
  for (const auto& c : validate_gamma_recip_series({-0.4, -0.2, 0.1, 0.3, 0.5})) {
    CHECK(c.pass);
    CHECK(std::abs(c.difference) <= 1e-6);
  }
}

TEST_CASE("parallel kernels match serial references") {
  for (int s = 2; s <= 6; ++s)
    for (std::int64_t n : {1, 63, 64, 65, 1000, 123457}) {
      CHECK(power_partial_sum(s, n) == doctest::Approx(power_partial_sum_serial(s, n)).epsilon(1e-15));
      CHECK(power_partial_sum(s, n) == power_partial_sum(s, n));
    }
  const std::vector<Word> args{w({2}), w({3, 1}), w({2, 2}), w({5}), w({3, 1, 1})};
  const auto par = mzv_batch(args, 1e-6), ser = mzv_batch_serial(args, 1e-6);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].value == ser[i].value);
    CHECK(par[i].bound == ser[i].bound);
  }
  CHECK_THROWS_AS(mzv_batch({w({2}), w({1})}, 1e-6), DivergentMzvError);
}
