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

#include <algorithm>
#include <random>

#include "mzvgenus/words.hpp"

using namespace mzvgenus;

namespace {

Word w(std::vector<int> letters) { return Word(std::move(letters)); }

// Quasi-shuffle as a sum over overlapping merges: every position of the result
// takes the next letter of a, of b, or the sum of both.
void merge_all(const Word& a, const Word& b, std::size_t i, std::size_t j, std::vector<int>& cur, QsymPoly& out) {
  if (i == a.letters().size() && j == b.letters().size()) {
    out.add_term(Word(cur), 1);
    return;
  }
  if (i < a.letters().size()) {
    cur.push_back(a.letters()[i]);
    merge_all(a, b, i + 1, j, cur, out);
    cur.pop_back();
  }
  if (j < b.letters().size()) {
    cur.push_back(b.letters()[j]);
    merge_all(a, b, i, j + 1, cur, out);
    cur.pop_back();
  }
  if (i < a.letters().size() && j < b.letters().size()) {
    cur.push_back(a.letters()[i] + b.letters()[j]);
    merge_all(a, b, i + 1, j + 1, cur, out);
    cur.pop_back();
  }
}

QsymPoly stuffle_oracle(const Word& a, const Word& b) {
  QsymPoly out;
  std::vector<int> cur;
  merge_all(a, b, 0, 0, cur, out);
  return out;
}

// Lyndon means strictly smaller than every proper rotation; z_1 is the largest letter.
bool lyndon_oracle(const Word& word) {
  const auto& s = word.letters();
  for (std::size_t r = 1; r < s.size(); ++r) {
    std::vector<int> rot(s.begin() + r, s.end());
    rot.insert(rot.end(), s.begin(), s.begin() + r);
    if (!std::lexicographical_compare(s.begin(), s.end(), rot.begin(), rot.end(), std::greater<>())) return false;
  }
  return true;
}

std::vector<Word> words_up_to(int max_weight) {
  std::vector<Word> out{Word{}};
  for (int n = 1; n <= max_weight; ++n)
    for (const auto& x : words_of_weight(n)) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("word order") {
  CHECK(w({1}) > w({2}));
  CHECK(w({2}) < w({2, 2}));
  CHECK(w({1, 2}) > w({2, 1}));
  CHECK(Word{} < w({5}));
  CHECK_THROWS_AS(w({0}), std::invalid_argument);
  CHECK(w({2, 1}).to_string() == "z_2z_1");
  CHECK(Word{}.to_string() == "1");
  CHECK(w({3, 1}).weight() == 4);
}

TEST_CASE("stuffle examples") {
  CHECK(stuffle(w({1}), w({1})) == QsymPoly::word(w({1, 1}), 2) + QsymPoly::word(w({2})));
  CHECK(stuffle(w({1}), w({2})).to_string() == "z_1z_2 + z_2z_1 + z_3");
  CHECK(stuffle(w({2}), w({2})).to_string() == "2·z_2z_2 + z_4");
  CHECK(stuffle(w({2}), w({2})).to_string(true) == "2*z_2z_2 + z_4");
  CHECK(stuffle(Word{}, w({3, 1})) == QsymPoly::word(w({3, 1})));
}

TEST_CASE("stuffle agrees with the merge oracle") {
  const auto all = words_up_to(4);
  for (const auto& a : all)
    for (const auto& b : all) CHECK(stuffle(a, b) == stuffle_oracle(a, b));
}

TEST_CASE("stuffle is commutative, associative and graded") {
  const auto small = words_up_to(3);
  for (const auto& a : small)
    for (const auto& b : small) {
      const QsymPoly ab = stuffle(a, b);
      CHECK(ab == stuffle(b, a));
      for (const auto& [x, c] : ab.terms()) CHECK(x.weight() == a.weight() + b.weight());
      for (const auto& c : small) {
        CHECK(stuffle(ab, QsymPoly::word(c)) == stuffle(QsymPoly::word(a), stuffle(b, c)));
      }
    }
}

TEST_CASE("words_of_weight counts compositions") {
  for (int n = 1; n <= 10; ++n) CHECK(words_of_weight(n).size() == (std::size_t{1} << (n - 1)));
  CHECK(words_of_weight(0) == std::vector<Word>{Word{}});
}

TEST_CASE("Lyndon words") {
  CHECK(is_lyndon(w({1})));
  CHECK(!is_lyndon(w({1, 1})));
  CHECK(is_lyndon(w({2, 1})));
  CHECK(!is_lyndon(w({1, 2})));
  CHECK_THROWS_AS(is_lyndon(Word{}), std::invalid_argument);
  CHECK(lyndon_words(1) == std::vector<Word>{w({1})});
  CHECK(lyndon_words(2) == std::vector<Word>{w({2})});
  CHECK(lyndon_words(3) == std::vector<Word>{w({2, 1}), w({3})});
  // Lyndon compositions: 1, 1, 2, 3, 6, 9, 18, 30.
  const std::size_t counts[] = {1, 1, 2, 3, 6, 9, 18, 30};
  for (int n = 1; n <= 8; ++n) {
    CHECK(lyndon_words(n).size() == counts[n - 1]);
    for (const auto& x : words_of_weight(n)) CHECK(is_lyndon(x) == lyndon_oracle(x));
  }
}

TEST_CASE("Lyndon factorization") {
  CHECK(lyndon_factorize(w({1, 2})) == std::vector<Word>{w({1}), w({2})});
  CHECK(lyndon_factorize(w({1, 1})) == std::vector<Word>{w({1}), w({1})});
  CHECK(lyndon_factorize(w({2, 1})) == std::vector<Word>{w({2, 1})});
  CHECK_THROWS_AS(lyndon_factorize(Word{}), std::invalid_argument);
  for (int n = 1; n <= 8; ++n)
    for (const auto& x : words_of_weight(n)) {
      const auto factors = lyndon_factorize(x);
      Word joined;
      for (const auto& f : factors) {
        CHECK(lyndon_oracle(f));
        joined = joined.concat(f);
      }
      CHECK(joined == x);
      CHECK(std::is_sorted(factors.begin(), factors.end(), std::greater<>()));
    }
}

TEST_CASE("Lyndon decomposition") {
  // z_1z_2 = z_1 * z_2 − z_2z_1 − z_3
  const LyndonPoly d = lyndon_decompose(QsymPoly::word(w({1, 2})));
  LyndonPoly expected;
  expected.add_term({w({1}), w({2})}, 1);
  expected.add_term({w({2, 1})}, -1);
  expected.add_term({w({3})}, -1);
  CHECK(d == expected);

  // z_1z_1 = ½ (z_1 * z_1 − z_2)
  LyndonPoly half;
  half.add_term({w({1}), w({1})}, Rational(1, 2));
  half.add_term({w({2})}, Rational(-1, 2));
  CHECK(lyndon_decompose(QsymPoly::word(w({1, 1}))) == half);

  for (int n = 1; n <= 7; ++n)
    for (const auto& x : words_of_weight(n)) {
      const QsymPoly q = QsymPoly::word(x);
      CHECK(expand_lyndon(lyndon_decompose(q)) == q);
    }
  CHECK(lyndon_decompose(QsymPoly::word(Word{}, 3)).coefficient({}) == 3);
}

TEST_CASE("Sym embeds as a subalgebra") {
  CHECK(rearrangements(Partition({6, 2})) == std::vector<Word>{w({6, 2}), w({2, 6})});
  CHECK(rearrangements(Partition({2, 2})) == std::vector<Word>{w({2, 2})});
  CHECK(rearrangements(Partition({2, 1, 1})).size() == 3);

  const SymPoly m22 = SymPoly::basis_element(Basis::monomial, Partition({2, 2}));
  CHECK(sym_to_words(m22) == QsymPoly::word(w({2, 2})));
  const SymPoly e2 = SymPoly::basis_element(Basis::elementary, Partition({2}));
  CHECK(sym_to_words(e2) == QsymPoly::word(w({1, 1})));
  const SymPoly p2 = SymPoly::basis_element(Basis::power_sum, Partition({2}));
  CHECK(sym_to_words(p2) == QsymPoly::word(w({2})));

  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (const auto& la : partitions_of(a))
        for (const auto& lb : partitions_of(b)) {
          const SymPoly f = SymPoly::basis_element(Basis::monomial, la);
          const SymPoly g = SymPoly::basis_element(Basis::monomial, lb);
          CHECK(sym_to_words(multiply(f, g)) == stuffle(sym_to_words(f), sym_to_words(g)));
        }
}

TEST_CASE("random stuffle products decompose and re-expand") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> letter(1, 3), len(0, 3);
  auto random_word = [&] {
    std::vector<int> v(len(rng));
    for (auto& x : v) x = letter(rng);
    return Word(v);
  };
  for (int t = 0; t < 30; ++t) {
    const Word a = random_word(), b = random_word(), c = random_word();
    const QsymPoly abc = stuffle(stuffle(a, b), QsymPoly::word(c));
    CHECK(abc == stuffle(QsymPoly::word(a), stuffle(b, c)));
    CHECK(expand_lyndon(lyndon_decompose(abc)) == abc);
  }
}
