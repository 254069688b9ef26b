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

#include "mzvgenus/zeta_ring.hpp"

using namespace mzvgenus;

namespace {

// Akiyama–Tanigawa; yields B_1 = +1/2, the other values agree.
Rational bernoulli_oracle(int n) {
  std::vector<Rational> a(n + 1);
  for (int m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
  }
  return a[0];
}

// (k + ½) ζ(2k) = Σ_{j=1}^{k-1} ζ(2j) ζ(2k−2j), starting from ζ(2) = π²/6.
std::vector<ZetaPoly> zeta_even_oracle(int max_k) {
  std::vector<ZetaPoly> z(max_k + 1);
  z[1] = ZetaPoly::pi_squared() * Rational(1, 6);
  for (int k = 2; k <= max_k; ++k) {
    ZetaPoly acc;
    for (int j = 1; j < k; ++j) acc += z[j] * z[k - j];
    z[k] = acc * Rational(2, 2 * k + 1);
  }
  return z;
}

// Newton: n e_n = Σ_{i=1}^{n} (−1)^{i−1} e_{n−i} p_i, pushed through p_1 → γ, p_i → ζ(i).
std::vector<ZetaPoly> zeta_of_elementary_oracle(int max_n) {
  std::vector<ZetaPoly> e(max_n + 1);
  e[0] = ZetaPoly::constant(1);
  for (int n = 1; n <= max_n; ++n) {
    ZetaPoly acc;
    for (int i = 1; i <= n; ++i) {
      const ZetaPoly p = i == 1 ? ZetaPoly::gamma() : zeta_gen(i);
      acc += (i % 2 == 1 ? e[n - i] * p : -(e[n - i] * p));
    }
    e[n] = acc * Rational(1, n);
  }
  return e;
}

Word w(std::vector<int> letters) { return Word(std::move(letters)); }

}  // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(8) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (int n = 2; n <= 40; ++n) CHECK(bernoulli(n) == bernoulli_oracle(n));
}

TEST_CASE("even zeta values") {
  CHECK(zeta_even(2) == ZetaPoly::pi_squared() * Rational(1, 6));
  CHECK(zeta_even(4) == ZetaPoly::pi_squared(2) * Rational(1, 90));
  CHECK(zeta_even(8) == ZetaPoly::pi_squared(4) * Rational(1, 9450));
  CHECK_THROWS_AS(zeta_even(3), std::invalid_argument);
  CHECK_THROWS_AS(zeta_even(0), std::invalid_argument);
  const auto oracle = zeta_even_oracle(12);
  for (int k = 1; k <= 12; ++k) CHECK(zeta_even(2 * k) == oracle[k]);
  CHECK(zeta_gen(3) == ZetaPoly::odd_zeta(3));
  CHECK(zeta_gen(2) == zeta_even(2));
  CHECK(zeta_gen(6) == ZetaPoly::pi_squared(3) * Rational(1, 945));
  CHECK_THROWS_AS(zeta_gen(1), std::invalid_argument);
}

TEST_CASE("generators and rendering") {
  CHECK(generator_weight(0) == 1);
  CHECK(generator_weight(1) == 2);
  CHECK(generator_weight(odd_zeta_generator_index(7)) == 7);
  CHECK(generator_name(0) == "γ");
  CHECK(generator_name(2, true) == "zeta(3)");
  CHECK(generator_json_key(1) == "pi2");
  const ZetaPoly f = ZetaPoly::gamma().pow(3) * Rational(1, 6) - ZetaPoly::gamma() * ZetaPoly::pi_squared() * Rational(1, 12) +
                     ZetaPoly::odd_zeta(3) * Rational(1, 3);
  CHECK(f.is_homogeneous(3));
  CHECK(f.weights() == std::set<int>{3});
  CHECK(f.max_generator() == 2);
  CHECK(!f.to_string(true).empty());
  CHECK((ZetaPoly::gamma() + ZetaPoly::constant(1)).homogeneous_component(1) == ZetaPoly::gamma());
}

TEST_CASE("zeta_hom examples and the Newton oracle") {
  const ZetaPoly e2 = zeta_hom(SymPoly::basis_element(Basis::elementary, Partition({2})));
  CHECK(e2 == ZetaPoly::gamma().pow(2) * Rational(1, 2) - ZetaPoly::pi_squared() * Rational(1, 12));
  CHECK(zeta_of_monomial(Partition({2, 2})) == ZetaPoly::pi_squared(2) * Rational(1, 120));
  CHECK(zeta_of_monomial(Partition({1})) == ZetaPoly::gamma());
  CHECK(zeta_of_monomial(Partition()) == ZetaPoly::constant(1));
  const auto oracle = zeta_of_elementary_oracle(10);
  for (int n = 0; n <= 10; ++n) {
    const ZetaPoly got = zeta_hom(SymPoly::basis_element(Basis::elementary, n == 0 ? Partition() : Partition({n})));
    CHECK(got == oracle[n]);
    CHECK(got.is_homogeneous(n));
  }
}

TEST_CASE("zeta_hom is an algebra map") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (const auto& la : partitions_of(a))
        for (const auto& lb : partitions_of(b)) {
          const SymPoly f = SymPoly::basis_element(Basis::monomial, la);
          const SymPoly g = SymPoly::basis_element(Basis::monomial, lb);
          CHECK(zeta_hom(multiply(f, g)) == zeta_hom(f) * zeta_hom(g));
          CHECK(zeta_of_monomial(la).is_homogeneous(a));
        }
}

TEST_CASE("zeta_word") {
  CHECK(zeta_word(w({3, 2})) == MzvPoly::symbol(w({3, 2})));
  CHECK(zeta_word(w({1})) == MzvPoly::ring(ZetaPoly::gamma()));
  CHECK(zeta_word(Word{}) == MzvPoly::ring(ZetaPoly::constant(1)));
  CHECK_THROWS_AS(MzvPoly::symbol(w({1, 2})), std::invalid_argument);

  // ζ(z_1z_2) = γ ζ(2) − ζ(2,1) − ζ(3)
  const MzvPoly v = zeta_word(w({1, 2}));
  MzvPoly expected = MzvPoly::ring(ZetaPoly::gamma()) * MzvPoly::symbol(w({2}));
  MzvPoly minus = MzvPoly::symbol(w({2, 1})) + MzvPoly::symbol(w({3}));
  minus *= -1;
  expected += minus;
  CHECK(v == expected);

  // Words starting with z_1 go through their Lyndon factors.
  const MzvPoly z1z1 = zeta_word(w({1, 1}));
  MzvPoly half = MzvPoly::ring(ZetaPoly::gamma().pow(2) * Rational(1, 2));
  MzvPoly z2 = MzvPoly::symbol(w({2}));
  z2 *= Rational(-1, 2);
  CHECK(z1z1 == half + z2);
  CHECK(reduce_to_ring(z1z1) == ZetaPoly::gamma().pow(2) * Rational(1, 2) - ZetaPoly::pi_squared() * Rational(1, 12));
}

TEST_CASE("stuffle_reduce and path independence") {
  CHECK(stuffle_reduce(QsymPoly::word(w({2, 2}))) == zeta_of_monomial(Partition({2, 2})));
  CHECK(stuffle_reduce(QsymPoly::word(w({6, 2})) + QsymPoly::word(w({2, 6}))) == zeta_of_monomial(Partition({6, 2})));
  CHECK_FALSE(stuffle_reduce(QsymPoly::word(w({6, 2}))).has_value());
  CHECK(stuffle_reduce(QsymPoly::word(w({1}))) == ZetaPoly::gamma());

  for (int n = 0; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const SymPoly m = SymPoly::basis_element(Basis::monomial, lambda);
      const QsymPoly words = sym_to_words(m);
      CHECK(stuffle_reduce(words) == zeta_of_monomial(lambda));
      if (!lambda.contains_part(1)) CHECK(reduce_to_ring(zeta_word(words)) == zeta_of_monomial(lambda));
    }
  CHECK_FALSE(reduce_to_ring(MzvPoly::symbol(w({3, 2})) * MzvPoly::symbol(w({2, 2}))).has_value());
}
