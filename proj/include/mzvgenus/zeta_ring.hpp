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
#ifndef MZVGENUS_ZETA_RING_HPP
#define MZVGENUS_ZETA_RING_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mzvgenus/rational.hpp"
#include "mzvgenus/symfunc.hpp"
#include "mzvgenus/words.hpp"

namespace mzvgenus {

/// Generators of the coefficient ring Q[γ, π², ζ(3), ζ(5), ...]. Index 0 is γ,
/// index 1 is π², and index g >= 2 is ζ(2g-1).
int generator_weight(int index);
int odd_zeta_generator_index(int s);
std::string generator_name(int index, bool ascii = false);
/// "gamma", "pi2", "zeta3", ...
std::string generator_json_key(int index);

/// Exponent vector over the generators, trailing zeros trimmed.
using ZetaMonomial = std::vector<int>;

int monomial_weight(const ZetaMonomial& m);

/// Exact polynomial in γ, π² and the odd zeta values, which are treated as
/// algebraically independent. Even zeta values live here as rational multiples
/// of powers of π².
class ZetaPoly {
 public:
  using Terms = std::map<ZetaMonomial, Rational>;

  ZetaPoly() = default;
  static ZetaPoly constant(const Rational& c);
  static ZetaPoly generator(int index, int power = 1);
  static ZetaPoly gamma() { return generator(0); }
  static ZetaPoly pi_squared(int power = 1) { return generator(1, power); }
  /// ζ(s) for odd s >= 3.
  static ZetaPoly odd_zeta(int s);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const ZetaMonomial& m) const;
  void add_term(ZetaMonomial m, const Rational& c);

  std::set<int> weights() const;
  bool is_homogeneous(int weight) const;
  ZetaPoly homogeneous_component(int weight) const;
  /// Highest generator index with a nonzero exponent, or -1.
  int max_generator() const;

  ZetaPoly& operator+=(const ZetaPoly& o);
  ZetaPoly& operator-=(const ZetaPoly& o);
  ZetaPoly& operator*=(const Rational& s);
  friend ZetaPoly operator+(ZetaPoly a, const ZetaPoly& b) { return a += b; }
  friend ZetaPoly operator-(ZetaPoly a, const ZetaPoly& b) { return a -= b; }
  friend ZetaPoly operator-(ZetaPoly a) { return a *= Rational(-1); }
  friend ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b);
  friend ZetaPoly operator*(ZetaPoly a, const Rational& s) { return a *= s; }
  friend ZetaPoly operator*(const Rational& s, ZetaPoly a) { return a *= s; }
  friend bool operator==(const ZetaPoly&, const ZetaPoly&) = default;

  ZetaPoly pow(int e) const;

  /// "1/6·γ³ − 1/12·γ·π² + 1/3·ζ(3)"; ASCII form "1/6*gamma^3 - ...".
  std::string to_string(bool ascii = false) const;

 private:
  Terms terms_;
};

inline bool is_zero(const ZetaPoly& p) { return p.is_zero(); }

/// B_n from Σ_{j=0}^{n} C(n+1, j) B_j = 0, B_0 = 1 (so B_1 = -1/2).
Rational bernoulli(int n);

/// ζ(2k) = (-1)^{k+1} B_{2k} (2π)^{2k} / (2 (2k)!) as a multiple of (π²)^k.
/// Throws std::invalid_argument unless the argument is even and >= 2.
ZetaPoly zeta_even(int two_k);

/// ζ(i) for i >= 2: zeta_even for even i, the odd generator otherwise.
ZetaPoly zeta_gen(int i);

/// The algebra map Sym -> ring with p_1 -> γ and p_i -> ζ(i) for i >= 2.
ZetaPoly zeta_hom(const SymPoly& f);

/// zeta_hom(m_λ) for a single partition.
ZetaPoly zeta_of_monomial(const Partition& lambda);

/// ζ(i_1,...,i_k) with a rational coefficient; i_1 >= 2.
struct MzvTerm {
  Rational coeff;
  Word args;

  friend bool operator==(const MzvTerm&, const MzvTerm&) = default;
};

/// Polynomial in formal convergent MZV symbols with ZetaPoly coefficients.
/// Keys are multisets of symbols (sorted, largest word first); the empty key
/// is the pure-ring part. Symbols are independent atoms here: no relation
/// between them is assumed.
class MzvPoly {
 public:
  using Symbols = std::vector<Word>;
  using Terms = std::map<Symbols, ZetaPoly>;

  MzvPoly() = default;
  static MzvPoly ring(const ZetaPoly& c);
  /// Throws std::invalid_argument if the symbol diverges (first letter 1).
  static MzvPoly symbol(const Word& args);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(Symbols key, const ZetaPoly& c);

  /// Ring part (coefficient of the empty key).
  ZetaPoly ring_part() const;
  /// Terms linear in a single symbol with a rational coefficient, if the whole
  /// non-ring part has that shape.
  std::optional<std::vector<MzvTerm>> linear_terms() const;

  MzvPoly& operator+=(const MzvPoly& o);
  MzvPoly& operator*=(const Rational& s);
  friend MzvPoly operator+(MzvPoly a, const MzvPoly& b) { return a += b; }
  friend MzvPoly operator*(const MzvPoly& a, const MzvPoly& b);
  friend bool operator==(const MzvPoly&, const MzvPoly&) = default;

  std::string to_string(bool ascii = false) const;

 private:
  Terms terms_;
};

/// ζ on H^1. A word with first letter >= 2 maps to its own symbol; otherwise
/// the word is decomposed into Lyndon generators, z_1 maps to γ and every other
/// Lyndon word (necessarily convergent) to its symbol.
MzvPoly zeta_word(const Word& w);
MzvPoly zeta_word(const QsymPoly& q);

/// Rewrites a permutation-invariant combination of words as a polynomial in
/// single letters under the stuffle product (elimination by depth) and maps
/// z_1 -> γ, z_i -> ζ(i). Returns nullopt if q is not permutation invariant.
std::optional<ZetaPoly> stuffle_reduce(const QsymPoly& q);

/// Replaces every symbol by the ring using only stuffle-forced identities:
/// depth-one symbols become ζ(i), and symmetric sums of depth >= 2 symbols
/// (grouped by their coefficient monomial) go through stuffle_reduce.
/// Returns nullopt when some part is not reducible this way.
std::optional<ZetaPoly> reduce_to_ring(const MzvPoly& v);

}  // namespace mzvgenus

#endif  // MZVGENUS_ZETA_RING_HPP
