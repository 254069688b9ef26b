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
#ifndef MZVGENUS_WORDS_HPP
#define MZVGENUS_WORDS_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mzvgenus/rational.hpp"
#include "mzvgenus/symfunc.hpp"

namespace mzvgenus {

/// A word z_{i_1} z_{i_2} ... z_{i_k} in the letters z_1, z_2, ...
///
/// Words are ordered with z_1 > z_2 > z_3 > ..., extended lexicographically,
/// and a proper prefix sorts before any of its extensions (so z_2 < z_2 z_2).
class Word {
 public:
  Word() = default;
  /// Throws std::invalid_argument on a subscript < 1.
  explicit Word(std::vector<int> letters);

  const std::vector<int>& letters() const noexcept { return letters_; }
  int depth() const noexcept { return static_cast<int>(letters_.size()); }
  int weight() const noexcept { return weight_; }
  bool empty() const noexcept { return letters_.empty(); }
  int front() const { return letters_.front(); }

  Word concat(const Word& tail) const;
  Word prepend(int letter) const;
  /// letters [from, from+count)
  Word subword(std::size_t from, std::size_t count = std::string::npos) const;

  /// "z_2z_1", or "1" for the empty word.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  std::vector<int> letters_;
  int weight_ = 0;
};

/// Rational linear combination of words; an element of H^1.
class QsymPoly {
 public:
  using Terms = std::map<Word, Rational>;

  QsymPoly() = default;
  static QsymPoly word(const Word& w, Rational c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Word& w) const;
  void add_term(const Word& w, const Rational& c);

  /// Largest word in the support under the word order. Requires !is_zero().
  const Word& leading_word() const { return terms_.rbegin()->first; }

  QsymPoly& operator+=(const QsymPoly& o);
  QsymPoly& operator-=(const QsymPoly& o);
  QsymPoly& operator*=(const Rational& s);
  friend QsymPoly operator+(QsymPoly a, const QsymPoly& b) { return a += b; }
  friend QsymPoly operator-(QsymPoly a, const QsymPoly& b) { return a -= b; }
  friend QsymPoly operator*(QsymPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const QsymPoly&, const QsymPoly&) = default;

  /// Terms in descending word order: "z_1z_2 + z_2z_1 + z_3", "2·z_1z_1 + z_2".
  std::string to_string(bool ascii = false) const;

 private:
  Terms terms_;
};

/// The quasi-shuffle product:
///   z_i u * z_j v = z_i (u * z_j v) + z_j (z_i u * v) + z_{i+j} (u * v),
/// with the empty word as unit.
QsymPoly stuffle(const Word& a, const Word& b);
QsymPoly stuffle(const QsymPoly& a, const QsymPoly& b);

/// All words (compositions) of the given weight.
std::vector<Word> words_of_weight(int weight);

/// Throws std::invalid_argument on the empty word.
bool is_lyndon(const Word& w);

/// Lyndon words of the given weight in descending word order.
std::vector<Word> lyndon_words(int weight);

/// Duval's algorithm: w = l_1 l_2 ... l_r with l_1 >= l_2 >= ... >= l_r Lyndon.
/// Throws std::invalid_argument on the empty word.
std::vector<Word> lyndon_factorize(const Word& w);

/// A commutative monomial in Lyndon-word generators, stored as the multiset
/// of generators sorted in descending word order.
using LyndonMonomial = std::vector<Word>;

/// Rational polynomial in commuting Lyndon-word indeterminates.
class LyndonPoly {
 public:
  using Terms = std::map<LyndonMonomial, Rational>;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(LyndonMonomial m, const Rational& c);
  Rational coefficient(const LyndonMonomial& m) const;
  friend bool operator==(const LyndonPoly&, const LyndonPoly&) = default;

 private:
  Terms terms_;
};

/// Stuffle product of a list of generators (1 for the empty list).
QsymPoly stuffle_product(const std::vector<Word>& factors);

/// Evaluates a generator polynomial with stuffle multiplication.
QsymPoly expand_lyndon(const LyndonPoly& p);

/// Writes q as a polynomial in Lyndon words by leading-term elimination: the
/// largest word w of q is the largest word of the stuffle product of its
/// Lyndon factors, so subtracting that product strictly lowers the leading
/// word within each weight.
LyndonPoly lyndon_decompose(const QsymPoly& q);

/// Embeds Sym into H^1: m_λ maps to the sum of the distinct words whose
/// letters are a rearrangement of λ.
QsymPoly sym_to_words(const SymPoly& f);

/// The distinct rearrangements of the parts of λ, largest subscripts first
/// lexicographically: (6,2) gives [z_6z_2, z_2z_6].
std::vector<Word> rearrangements(const Partition& lambda);

}  // namespace mzvgenus

#endif  // MZVGENUS_WORDS_HPP
