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
#include "mzvgenus/genus.hpp"

#include "mzvgenus/multipoly.hpp"
#include "mzvgenus/symfunc.hpp"

namespace mzvgenus {

namespace {

void check_budget(int i, int lowest, int budget) {
  if (i < lowest || i > budget)
    throw BudgetError("degree " + std::to_string(i) + " is outside the supported range " + std::to_string(lowest) +
                      ".." + std::to_string(budget));
}

std::string join_terms(const std::vector<std::pair<std::string, bool>>& terms, bool ascii) {
  // Each entry: rendered magnitude, negative flag.
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const auto& [text, negative] = terms[j];
    if (j == 0) {
      out += negative ? (ascii ? "-" : "−") + text : text;
    } else {
      out += negative ? (ascii ? " - " : " − ") : " + ";
      out += text;
    }
  }
  return out;
}

std::string with_factor(const std::string& coeff, const std::string& monomial, bool ascii) {
  if (coeff == "1") return monomial;
  return coeff + (ascii ? "*" : "·") + monomial;
}

}  // namespace

std::string render_chern_monomial(const Partition& lambda, bool ascii) {
  if (lambda.empty()) return "1";
  std::string out;
  const auto& parts = lambda.parts();
  for (std::size_t j = 0; j < parts.size();) {
    std::size_t run = j;
    while (run < parts.size() && parts[run] == parts[j]) ++run;
    const int mult = static_cast<int>(run - j);
    if (!out.empty()) out += ascii ? "*" : "·";
    out += "c" + std::to_string(parts[j]);
    if (mult > 1) {
      if (ascii) {
        out += "^" + std::to_string(mult);
      } else {
        static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
        for (char c : std::to_string(mult)) out += digits[c - '0'];
      }
    }
    j = run;
  }
  return out;
}

std::string GenusPolynomial::to_string(bool ascii) const {
  std::vector<std::pair<std::string, bool>> terms;
  for (const auto& [lambda, c] : coeffs) {
    if (c.is_zero()) continue;
    const std::string mono = render_chern_monomial(lambda, ascii);
    if (c.terms().size() == 1) {
      const bool negative = sgn(c.terms().begin()->second) < 0;
      const ZetaPoly magnitude = negative ? -c : c;
      terms.emplace_back(with_factor(magnitude.to_string(ascii), mono, ascii), negative);
    } else {
      terms.emplace_back("(" + c.to_string(ascii) + ")" + (ascii ? "*" : "·") + mono, false);
    }
  }
  return "Q_" + std::to_string(degree) + " = " + join_terms(terms, ascii);
}

std::string CyGenusPolynomial::to_string(bool ascii) const {
  std::vector<std::pair<std::string, bool>> terms;
  for (const auto& [lambda, list] : coeffs) {
    std::vector<std::pair<std::string, bool>> inner;
    for (const auto& t : list) {
      std::string args;
      for (int i : t.args.letters()) args += (args.empty() ? "" : ",") + std::to_string(i);
      const std::string symbol = (ascii ? "zeta(" : "ζ(") + args + ")";
      inner.emplace_back(with_factor(Rational(abs(t.coeff)).get_str(), symbol, ascii), sgn(t.coeff) < 0);
    }
    const std::string mono = render_chern_monomial(lambda, ascii);
    const std::string sum = join_terms(inner, ascii);
    terms.emplace_back(inner.size() == 1 && !inner.front().second
                           ? with_factor(sum, mono, ascii)
                           : "(" + sum + ")" + (ascii ? "*" : "·") + mono,
                       false);
  }
  return "Q_" + std::to_string(degree) + "|c1=0 = " + join_terms(terms, ascii);
}

GenusPolynomial q_genus(int i, int budget) {
  check_budget(i, 1, budget);
  const auto index = partitions_of(i);
  // Warm the shared m -> p rows outside the parallel region.
  transition_to_monomial(Basis::power_sum, i);
  std::vector<ZetaPoly> values(index.size());
  const auto count = static_cast<long>(index.size());
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < count; ++j) values[j] = zeta_of_monomial(index[j]);
  GenusPolynomial q;
  q.degree = i;
  for (std::size_t j = 0; j < index.size(); ++j) q.coeffs.emplace(index[j], std::move(values[j]));
  return q;
}

GenusPolynomial q_genus_serial(int i, int budget) {
  check_budget(i, 1, budget);
  GenusPolynomial q;
  q.degree = i;
  for (const auto& lambda : partitions_of(i)) q.coeffs.emplace(lambda, zeta_of_monomial(lambda));
  return q;
}

GenusPolynomial q_genus_oracle(int i) {
  check_budget(i, 1, kOracleBudget);
  std::vector<ZetaPoly> series(i + 1);
  series[0] = ZetaPoly::constant(1);
  for (int d = 1; d <= i; ++d) series[d] = zeta_hom(SymPoly::basis_element(Basis::elementary, Partition({d})));

  using ZetaMultiPoly = MultiPolyT<ZetaPoly>;
  ZetaMultiPoly product = ZetaMultiPoly::constant(i, ZetaPoly::constant(1));
  for (int j = 0; j < i; ++j) {
    ZetaMultiPoly factor(i);
    for (int d = 0; d <= i; ++d) {
      Exponent e(i, 0);
      e[j] = d;
      factor.add_term(e, series[d]);
    }
    product = product.multiply_truncated(factor, i);
  }

  std::map<Partition, ZetaPoly> in_m;
  for (const auto& [e, c] : product.terms())
    if (total_degree(e) == i && std::is_sorted(e.begin(), e.end(), std::greater<>()))
      in_m.emplace(Partition::from_unsorted(e), c);

  GenusPolynomial q;
  q.degree = i;
  q.coeffs = solve_from_monomial(std::move(in_m), Basis::elementary);
  // Partitions whose coefficient vanishes still index a term of Q_i.
  for (const auto& lambda : partitions_of(i)) q.coeffs.try_emplace(lambda);
  return q;
}

std::vector<MzvTerm> mzv_expansion(const Partition& lambda) {
  if (lambda.empty() || lambda.contains_part(1))
    throw std::invalid_argument("mzv_expansion: partition " + lambda.to_string() + " must be nonempty with no part 1");
  std::vector<MzvTerm> out;
  for (auto& w : rearrangements(lambda)) out.push_back({Rational(1), std::move(w)});
  return out;
}

CyGenusPolynomial q_genus_cy(int i, int budget) {
  check_budget(i, 2, budget);
  CyGenusPolynomial q;
  q.degree = i;
  for (const auto& lambda : partitions_of(i))
    if (!lambda.contains_part(1)) q.coeffs.emplace(lambda, mzv_expansion(lambda));
  return q;
}

}  // namespace mzvgenus
