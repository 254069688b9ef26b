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
#ifndef MZVGENUS_SYMFUNC_HPP
#define MZVGENUS_SYMFUNC_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mzvgenus/multipoly.hpp"
#include "mzvgenus/partition.hpp"
#include "mzvgenus/rational.hpp"

namespace mzvgenus {

enum class Basis { monomial, elementary, power_sum };

/// "m", "e" or "p".
std::string_view basis_tag(Basis b);
Basis parse_basis_tag(std::string_view tag);

/// A symmetric function written in one of the m/e/p bases with exact
/// rational coefficients. Zero coefficients are never stored.
class SymPoly {
 public:
  using Terms = std::map<Partition, Rational>;

  explicit SymPoly(Basis basis) : basis_(basis) {}
  SymPoly(Basis basis, Terms terms);

  static SymPoly basis_element(Basis basis, const Partition& lambda, Rational coeff = 1);

  Basis basis() const noexcept { return basis_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Partition& lambda) const;

  /// The set of weights carrying a nonzero term.
  std::set<int> degrees() const;
  int max_degree() const;

  void add_term(const Partition& lambda, const Rational& c);

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const Rational& s);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Rational& s) { return a *= s; }

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  void require_same_basis(const SymPoly& o) const;

  Basis basis_;
  Terms terms_;
};

/// e_k, p_k and m_λ written out in t_1..t_n.
MultiPoly elementary_in_vars(int k, int nvars);
MultiPoly power_sum_in_vars(int k, int nvars);
MultiPoly monomial_in_vars(const Partition& lambda, int nvars);

/// f(t_1,...,t_n) from the definitions of the basis elements. Requires
/// n >= f.max_degree(); throws std::invalid_argument otherwise.
MultiPoly expand_in_vars(const SymPoly& f, int nvars);

/// Reads off the m-basis form of a symmetric polynomial from its dominant
/// (weakly decreasing exponent) monomials.
SymPoly collect_monomial(const MultiPoly& f);

/// Expansion of a single basis element in the m-basis: X_λ = Σ_μ row[μ] m_μ.
/// Computed by expanding X_λ in |λ| variables, keeping only monomials that
/// divide t^μ. Rows are memoized; the cache is safe to share across threads.
const std::map<Partition, Rational>& monomial_row(Basis basis, const Partition& lambda);

/// Drops every memoized row. Invalidates references returned by monomial_row,
/// so it must not run concurrently with any other call into this module.
void clear_row_cache();

/// Dense square matrix indexed by the partitions of n in the fixed order.
struct RationalMatrix {
  std::vector<Partition> index;
  std::vector<std::vector<Rational>> entries;

  std::size_t size() const noexcept { return index.size(); }
  bool is_symmetric() const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
};

/// Rows X_λ expanded in the m-basis for every λ ⊢ n. Rows are built in
/// parallel (OpenMP); the result does not depend on the thread count.
RationalMatrix transition_to_monomial(Basis basis, int n);

/// Single-threaded reference for transition_to_monomial, bypassing the cache.
RationalMatrix transition_to_monomial_serial(Basis basis, int n);

/// M with e_λ = Σ_μ M_{λμ} m_μ. Throws std::invalid_argument for n < 1.
RationalMatrix e_to_m_matrix(int n);

/// Re-expresses an m-basis expansion with coefficients in C in the target
/// basis by triangular elimination against monomial_row. For e the pivot
/// coefficient is always 1, so C only needs a ring structure; for p the
/// pivots are ∏ (multiplicity)! and C must accept multiplication by Rational.
template <class C>
std::map<Partition, C> solve_from_monomial(std::map<Partition, C> f, Basis target);

SymPoly to_basis(const SymPoly& f, Basis target);

/// Product in the basis of `a` (b is converted first). e and p products are
/// concatenations of partitions; m products go through the p-basis.
SymPoly multiply(const SymPoly& a, const SymPoly& b);

/// m-basis product by expansion in variables and re-collection.
SymPoly multiply_via_expansion(const SymPoly& a, const SymPoly& b);

// -- implementation ---------------------------------------------------------

template <class C>
std::map<Partition, C> solve_from_monomial(std::map<Partition, C> f, Basis target) {
  std::map<Partition, C> out;
  if (target == Basis::monomial) {
    for (auto& [lambda, c] : f)
      if (!is_zero(c)) out.emplace(lambda, std::move(c));
    return out;
  }
  std::erase_if(f, [](const auto& kv) { return is_zero(kv.second); });
  while (!f.empty()) {
    // e_{μ'} = m_μ + (lexicographically smaller terms): eliminate from the top.
    // p_μ = (∏ mult!) m_μ + (lexicographically larger terms): from the bottom.
    auto pick = f.begin();
    for (auto it = f.begin(); it != f.end(); ++it) {
      const bool better = target == Basis::elementary ? lex_less(pick->first, it->first)
                                                      : lex_less(it->first, pick->first);
      if (better) pick = it;
    }
    const Partition pivot = pick->first;
    const Partition source = target == Basis::elementary ? pivot.conjugate() : pivot;
    const auto& row = monomial_row(target, source);
    const Rational& lead = row.at(pivot);
    C factor = pick->second;
    if (lead != 1) factor = factor * Rational(1 / lead);
    for (const auto& [mu, r] : row) {
      auto [it, inserted] = f.try_emplace(mu);
      it->second = it->second - factor * r;
      if (is_zero(it->second)) f.erase(it);
    }
    if (f.count(pivot)) throw std::logic_error("solve_from_monomial: pivot not eliminated");
    auto [it, inserted] = out.try_emplace(source);
    it->second = it->second + factor;
    if (is_zero(it->second)) out.erase(it);
  }
  return out;
}

}  // namespace mzvgenus

#endif  // MZVGENUS_SYMFUNC_HPP
