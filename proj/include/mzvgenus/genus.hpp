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
#ifndef MZVGENUS_GENUS_HPP
#define MZVGENUS_GENUS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzvgenus/partition.hpp"
#include "mzvgenus/zeta_ring.hpp"

namespace mzvgenus {

inline constexpr int kDefaultGenusBudget = 12;
inline constexpr int kOracleBudget = 6;

class BudgetError : public std::invalid_argument {
 public:
  explicit BudgetError(const std::string& what) : std::invalid_argument(what) {}
};

/// Q_i = Σ_{λ ⊢ i} coeffs[λ] · c_λ, with c_λ = c_{λ_1} c_{λ_2} ...
struct GenusPolynomial {
  int degree = 0;
  std::map<Partition, ZetaPoly> coeffs;

  const ZetaPoly& coefficient(const Partition& lambda) const { return coeffs.at(lambda); }
  /// "Q_1 = γ·c1"
  std::string to_string(bool ascii = false) const;
  friend bool operator==(const GenusPolynomial&, const GenusPolynomial&) = default;
};

/// Q_i restricted to c_1 = 0; each coefficient a sum of convergent MZVs.
struct CyGenusPolynomial {
  int degree = 0;
  std::map<Partition, std::vector<MzvTerm>> coeffs;

  std::string to_string(bool ascii = false) const;
};

/// "c2·c1²" / "c2*c1^2"
std::string render_chern_monomial(const Partition& lambda, bool ascii = false);

/// The coefficient of c_λ in Q_i is ζ(m_λ). Coefficients are computed in
/// parallel over λ. Throws BudgetError for i < 1 or i > budget.
GenusPolynomial q_genus(int i, int budget = kDefaultGenusBudget);
GenusPolynomial q_genus_serial(int i, int budget = kDefaultGenusBudget);

/// Brute force from the generating product: expand ∏_{j<=i} Σ_d ζ(e_d) t_j^d
/// in i variables up to degree i, collect in the m-basis and solve for the
/// e-basis expansion. Throws BudgetError outside 1..kOracleBudget.
GenusPolynomial q_genus_oracle(int i);

/// One unit-coefficient term per distinct rearrangement of λ. Throws
/// std::invalid_argument if λ has a part equal to 1.
std::vector<MzvTerm> mzv_expansion(const Partition& lambda);

/// Throws BudgetError for i < 2 or i > budget.
CyGenusPolynomial q_genus_cy(int i, int budget = kDefaultGenusBudget);

}  // namespace mzvgenus

#endif  // MZVGENUS_GENUS_HPP
