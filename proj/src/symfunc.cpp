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
#include "mzvgenus/symfunc.hpp"

#include <mutex>
#include <utility>

namespace mzvgenus {

std::string_view basis_tag(Basis b) {
  switch (b) {
    case Basis::monomial: return "m";
    case Basis::elementary: return "e";
    case Basis::power_sum: return "p";
  }
  return "?";
}

Basis parse_basis_tag(std::string_view tag) {
  if (tag == "m") return Basis::monomial;
  if (tag == "e") return Basis::elementary;
  if (tag == "p") return Basis::power_sum;
  throw std::invalid_argument("unknown basis tag '" + std::string(tag) + "'");
}

SymPoly::SymPoly(Basis basis, Terms terms) : basis_(basis) {
  for (auto& [lambda, c] : terms) add_term(lambda, c);
}

SymPoly SymPoly::basis_element(Basis basis, const Partition& lambda, Rational coeff) {
  SymPoly f(basis);
  f.add_term(lambda, coeff);
  return f;
}

Rational SymPoly::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<int> SymPoly::degrees() const {
  std::set<int> out;
  for (const auto& [lambda, c] : terms_) out.insert(lambda.weight());
  return out;
}

int SymPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.weight(); }

void SymPoly::add_term(const Partition& lambda, const Rational& c) {
  if (mzvgenus::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(lambda, canonical(c));
  if (!inserted) {
    it->second += c;
    if (mzvgenus::is_zero(it->second)) terms_.erase(it);
  }
}

void SymPoly::require_same_basis(const SymPoly& o) const {
  if (o.basis_ != basis_) throw std::invalid_argument("SymPoly: basis mismatch");
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  require_same_basis(o);
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  require_same_basis(o);
  for (const auto& [lambda, c] : o.terms_) add_term(lambda, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& s) {
  if (mzvgenus::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, c] : terms_) c *= s;
  return *this;
}

// -- expansion in variables --------------------------------------------------

namespace {

void squarefree_monomials(int k, int start, Exponent& e, MultiPoly& out) {
  if (k == 0) {
    out.add_term(e, 1);
    return;
  }
  for (int j = start; j <= static_cast<int>(e.size()) - k; ++j) {
    e[j] = 1;
    squarefree_monomials(k - 1, j + 1, e, out);
    e[j] = 0;
  }
}

MultiPoly factor_in_vars(Basis basis, int k, int nvars) {
  return basis == Basis::elementary ? elementary_in_vars(k, nvars) : power_sum_in_vars(k, nvars);
}

MultiPoly basis_element_in_vars(Basis basis, const Partition& lambda, int nvars) {
  if (basis == Basis::monomial) return monomial_in_vars(lambda, nvars);
  MultiPoly out = MultiPoly::constant(nvars, 1);
  for (int k : lambda.parts()) out = out * factor_in_vars(basis, k, nvars);
  return out;
}

Exponent padded(const Partition& mu, int nvars) {
  Exponent e(nvars, 0);
  for (int j = 0; j < mu.length(); ++j) e[j] = mu[j];
  return e;
}

std::map<Partition, Rational> compute_row(Basis basis, const Partition& lambda) {
  std::map<Partition, Rational> row;
  if (basis == Basis::monomial) {
    row.emplace(lambda, 1);
    return row;
  }
  const int n = lambda.weight();
  for (const Partition& mu : partitions_of(n)) {
    const Exponent cap = padded(mu, n);
    MultiPoly acc = MultiPoly::constant(n, 1);
    for (int k : lambda.parts()) acc = acc.multiply_capped(factor_in_vars(basis, k, n), cap);
    Rational c = acc.coefficient(cap);
    if (!is_zero(c)) row.emplace(mu, std::move(c));
  }
  return row;
}

struct RowCache {
  std::mutex mutex;
  std::map<std::pair<Basis, Partition>, std::map<Partition, Rational>> rows;
};

RowCache& row_cache() {
  static RowCache cache;
  return cache;
}

RationalMatrix assemble(const std::vector<Partition>& index, const std::vector<std::map<Partition, Rational>>& rows) {
  RationalMatrix m;
  m.index = index;
  m.entries.assign(index.size(), std::vector<Rational>(index.size()));
  for (std::size_t i = 0; i < index.size(); ++i)
    for (std::size_t j = 0; j < index.size(); ++j) {
      auto it = rows[i].find(index[j]);
      if (it != rows[i].end()) m.entries[i][j] = it->second;
    }
  return m;
}

}  // namespace

MultiPoly elementary_in_vars(int k, int nvars) {
  if (k < 0) throw std::invalid_argument("elementary_in_vars: negative degree");
  MultiPoly out(nvars);
  Exponent e(nvars, 0);
  if (k <= nvars) squarefree_monomials(k, 0, e, out);
  return out;
}

MultiPoly power_sum_in_vars(int k, int nvars) {
  if (k < 1) throw std::invalid_argument("power_sum_in_vars: degree must be positive");
  MultiPoly out(nvars);
  for (int j = 0; j < nvars; ++j) {
    Exponent e(nvars, 0);
    e[j] = k;
    out.add_term(e, 1);
  }
  return out;
}

MultiPoly monomial_in_vars(const Partition& lambda, int nvars) {
  MultiPoly out(nvars);
  if (lambda.length() > nvars) return out;
  // Distinct permutations of the padded exponent = the orbit of t^λ.
  Exponent e = padded(lambda, nvars);
  std::sort(e.begin(), e.end());
  do {
    out.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

MultiPoly expand_in_vars(const SymPoly& f, int nvars) {
  if (nvars < 1) throw std::invalid_argument("expand_in_vars: need at least one variable");
  if (nvars < f.max_degree())
    throw std::invalid_argument("expand_in_vars: " + std::to_string(nvars) +
                                " variables cannot represent degree " + std::to_string(f.max_degree()) + " faithfully");
  MultiPoly out(nvars);
  for (const auto& [lambda, c] : f.terms())
    out += basis_element_in_vars(f.basis(), lambda, nvars) * MultiPoly::constant(nvars, c);
  return out;
}

SymPoly collect_monomial(const MultiPoly& f) {
  SymPoly out(Basis::monomial);
  for (const auto& [e, c] : f.terms())
    if (std::is_sorted(e.begin(), e.end(), std::greater<>())) out.add_term(Partition::from_unsorted(e), c);
  return out;
}

const std::map<Partition, Rational>& monomial_row(Basis basis, const Partition& lambda) {
  RowCache& cache = row_cache();
  const auto key = std::make_pair(basis, lambda);
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.rows.find(key); it != cache.rows.end()) return it->second;
  }
  auto row = compute_row(basis, lambda);
  std::lock_guard lock(cache.mutex);
  return cache.rows.try_emplace(key, std::move(row)).first->second;
}

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (entries[i][j] != entries[j][i]) return false;
  return true;
}

void clear_row_cache() {
  RowCache& cache = row_cache();
  std::lock_guard lock(cache.mutex);
  cache.rows.clear();
}

RationalMatrix transition_to_monomial(Basis basis, int n) {
  const auto index = partitions_of(n);
  std::vector<std::map<Partition, Rational>> rows(index.size());
  const auto count = static_cast<long>(index.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) rows[i] = monomial_row(basis, index[i]);
  return assemble(index, rows);
}

RationalMatrix transition_to_monomial_serial(Basis basis, int n) {
  const auto index = partitions_of(n);
  std::vector<std::map<Partition, Rational>> rows;
  rows.reserve(index.size());
  for (const auto& lambda : index) rows.push_back(compute_row(basis, lambda));
  return assemble(index, rows);
}

RationalMatrix e_to_m_matrix(int n) {
  if (n < 1) throw std::invalid_argument("e_to_m_matrix: n must be positive");
  return transition_to_monomial(Basis::elementary, n);
}

SymPoly to_basis(const SymPoly& f, Basis target) {
  if (f.basis() == target) return f;
  std::map<Partition, Rational> in_m;
  for (const auto& [lambda, c] : f.terms())
    for (const auto& [mu, r] : monomial_row(f.basis(), lambda)) in_m[mu] += c * r;
  return SymPoly(target, solve_from_monomial(std::move(in_m), target));
}

SymPoly multiply(const SymPoly& a, const SymPoly& b) {
  if (a.basis() == Basis::monomial) {
    return to_basis(multiply(to_basis(a, Basis::power_sum), b), Basis::monomial);
  }
  const SymPoly bb = to_basis(b, a.basis());
  SymPoly out(a.basis());
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : bb.terms()) out.add_term(la.merged_with(lb), ca * cb);
  return out;
}

SymPoly multiply_via_expansion(const SymPoly& a, const SymPoly& b) {
  const int n = std::max(1, a.max_degree() + b.max_degree());
  const MultiPoly prod = expand_in_vars(a, n) * expand_in_vars(b, n);
  return collect_monomial(prod);
}

}  // namespace mzvgenus
