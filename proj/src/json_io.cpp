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
#include "mzvgenus/json_io.hpp"

#include <stdexcept>

namespace mzvgenus {

namespace {

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("coefficient must be a \"p/q\" string");
  return parse_fraction(j.get<std::string>());
}

std::vector<int> ints_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("expected an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json to_json(const Rational& q) { return to_fraction_string(q); }

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Word& w) { return Json(w.letters()); }

Json to_json(const SymPoly& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms()) terms.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
  return {{"basis", std::string(basis_tag(f.basis()))}, {"terms", terms}};
}

SymPoly sympoly_from_json(const Json& j) {
  const Json& basis = field(j, "basis");
  if (!basis.is_string()) throw std::invalid_argument("basis must be a string");
  SymPoly f(parse_basis_tag(basis.get<std::string>()));
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw std::invalid_argument("terms must be an array");
  for (const auto& t : terms) f.add_term(Partition(ints_from_json(field(t, "partition"))), rational_from_json(field(t, "coeff")));
  return f;
}

Json to_json(const QsymPoly& q) {
  Json out = Json::array();
  for (auto it = q.terms().rbegin(); it != q.terms().rend(); ++it)
    out.push_back({{"word", to_json(it->first)}, {"coeff", to_json(it->second)}});
  return out;
}

QsymPoly qsympoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("QsymPoly must be an array");
  QsymPoly q;
  for (const auto& t : j) q.add_term(Word(ints_from_json(field(t, "word"))), rational_from_json(field(t, "coeff")));
  return q;
}

Json to_json(const ZetaPoly& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json mono = Json::object();
    for (std::size_t g = 0; g < it->first.size(); ++g)
      if (it->first[g] != 0) mono[generator_json_key(static_cast<int>(g))] = it->first[g];
    out.push_back({{"monomial", mono}, {"coeff", to_json(it->second)}});
  }
  return out;
}

ZetaPoly zetapoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("ZetaPoly must be an array");
  ZetaPoly p;
  for (const auto& t : j) {
    const Json& mono = field(t, "monomial");
    if (!mono.is_object()) throw std::invalid_argument("monomial must be an object");
    ZetaMonomial m;
    for (const auto& [key, e] : mono.items()) {
      int index = -1;
      if (key == "gamma") {
        index = 0;
      } else if (key == "pi2") {
        index = 1;
      } else if (key.rfind("zeta", 0) == 0) {
        index = odd_zeta_generator_index(std::stoi(key.substr(4)));
      } else {
        throw std::invalid_argument("unknown generator '" + key + "'");
      }
      if (!e.is_number_integer() || e.get<int>() < 0) throw std::invalid_argument("exponents must be nonnegative integers");
      if (static_cast<int>(m.size()) <= index) m.resize(index + 1, 0);
      m[index] += e.get<int>();
    }
    p.add_term(std::move(m), rational_from_json(field(t, "coeff")));
  }
  return p;
}

Json to_json(const MzvTerm& t) { return {{"args", to_json(t.args)}, {"coeff", to_json(t.coeff)}}; }

Json to_json(const MzvPoly& p) {
  Json out = Json::array();
  for (const auto& [symbols, c] : p.terms()) {
    Json mzvs = Json::array();
    for (const auto& w : symbols) mzvs.push_back(to_json(w));
    out.push_back({{"mzvs", mzvs}, {"coeff", to_json(c)}});
  }
  return out;
}

Json to_json(const BoundedValue& v) { return {{"value", v.value}, {"bound", v.bound}}; }

Json to_json(const GenusPolynomial& q) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : q.coeffs) terms.push_back({{"c_partition", to_json(lambda)}, {"coeff", to_json(c)}});
  return {{"degree", q.degree}, {"terms", terms}};
}

Json to_json(const CyGenusPolynomial& q) {
  Json terms = Json::array();
  for (const auto& [lambda, list] : q.coeffs) {
    Json mzv_terms = Json::array();
    for (const auto& t : list) mzv_terms.push_back(to_json(t));
    terms.push_back({{"c_partition", to_json(lambda)}, {"mzv_terms", mzv_terms}});
  }
  return {{"degree", q.degree}, {"terms", terms}};
}

}  // namespace mzvgenus
