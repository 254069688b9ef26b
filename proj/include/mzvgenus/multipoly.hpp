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
#ifndef MZVGENUS_MULTIPOLY_HPP
#define MZVGENUS_MULTIPOLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "mzvgenus/rational.hpp"

namespace mzvgenus {

using Exponent = std::vector<int>;

namespace detail {
template <class C>
bool coeff_is_zero(const C& c) {
  return is_zero(c);
}
template <class C>
const C& coeff_canonical(const C& c) {
  return c;
}
inline Rational coeff_canonical(const Rational& c) { return canonical(c); }
}  // namespace detail

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

/// Sparse polynomial in the commuting variables t_1..t_n with coefficients in C.
///
/// This is the brute-force side of every symmetric-function check: basis
/// elements are expanded here from their definitions and compared term by term.
/// C needs +, *, == and a free is_zero(); a value-initialized C is zero.
template <class C>
class MultiPolyT {
 public:
  using Terms = std::map<Exponent, C>;

  explicit MultiPolyT(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("MultiPoly: negative variable count");
  }

  static MultiPolyT constant(int nvars, C c) {
    MultiPolyT p(nvars);
    p.add_term(Exponent(nvars, 0), std::move(c));
    return p;
  }

  int nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponent& e, const C& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("MultiPoly: exponent length mismatch");
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, detail::coeff_canonical(c));
    if (!inserted) {
      it->second = it->second + c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  C coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C{} : it->second;
  }

  MultiPolyT& operator+=(const MultiPolyT& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  friend MultiPolyT operator+(MultiPolyT a, const MultiPolyT& b) { return a += b; }

  friend MultiPolyT operator*(const MultiPolyT& a, const MultiPolyT& b) {
    return a.multiply_if(b, [](const Exponent&) { return true; });
  }

  /// Product keeping only terms of total degree <= max_degree.
  MultiPolyT multiply_truncated(const MultiPolyT& o, int max_degree) const {
    return multiply_if(o, [max_degree](const Exponent& e) { return total_degree(e) <= max_degree; });
  }

  /// Product keeping only terms whose exponent is componentwise <= cap. Since
  /// every factor has nonnegative exponents, discarded terms can never reach
  /// the cap monomial in a later multiplication.
  MultiPolyT multiply_capped(const MultiPolyT& o, const Exponent& cap) const {
    return multiply_if(o, [&cap](const Exponent& e) {
      for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] > cap[j]) return false;
      return true;
    });
  }

  friend bool operator==(const MultiPolyT& a, const MultiPolyT& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const MultiPolyT& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  }

  template <class Keep>
  MultiPolyT multiply_if(const MultiPolyT& o, Keep keep) const {
    check_compatible(o);
    MultiPolyT out(nvars_);
    Exponent e(nvars_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        for (int j = 0; j < nvars_; ++j) e[j] = ea[j] + eb[j];
        if (keep(e)) out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  int nvars_;
  Terms terms_;
};

using MultiPoly = MultiPolyT<Rational>;

}  // namespace mzvgenus

#endif  // MZVGENUS_MULTIPOLY_HPP
