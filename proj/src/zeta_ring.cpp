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
#include "mzvgenus/zeta_ring.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace mzvgenus {

namespace {

void trim(ZetaMonomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

std::string superscript(int n) {
  static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

std::string render_power(int index, int e, bool ascii) {
  if (index == 1) {
    // (π²)^e renders as π^{2e}.
    if (ascii) return "pi^" + std::to_string(2 * e);
    return "π" + superscript(2 * e);
  }
  std::string base = generator_name(index, ascii);
  if (e == 1) return base;
  return ascii ? base + "^" + std::to_string(e) : base + superscript(e);
}

std::string render_monomial(const ZetaMonomial& m, bool ascii) {
  std::string out;
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (m[g] == 0) continue;
    if (!out.empty()) out += ascii ? "*" : "·";
    out += render_power(static_cast<int>(g), m[g], ascii);
  }
  return out;
}

}  // namespace

int generator_weight(int index) {
  if (index < 0) throw std::invalid_argument("negative generator index");
  if (index == 0) return 1;
  if (index == 1) return 2;
  return 2 * index - 1;
}

int odd_zeta_generator_index(int s) {
  if (s < 3 || s % 2 == 0) throw std::invalid_argument("odd zeta generator needs odd s >= 3");
  return (s + 1) / 2;
}

std::string generator_name(int index, bool ascii) {
  if (index == 0) return ascii ? "gamma" : "γ";
  if (index == 1) return ascii ? "pi^2" : "π²";
  const std::string s = std::to_string(generator_weight(index));
  return ascii ? "zeta(" + s + ")" : "ζ(" + s + ")";
}

std::string generator_json_key(int index) {
  if (index == 0) return "gamma";
  if (index == 1) return "pi2";
  return "zeta" + std::to_string(generator_weight(index));
}

int monomial_weight(const ZetaMonomial& m) {
  int w = 0;
  for (std::size_t g = 0; g < m.size(); ++g) w += m[g] * generator_weight(static_cast<int>(g));
  return w;
}

// -- ZetaPoly ----------------------------------------------------------------

ZetaPoly ZetaPoly::constant(const Rational& c) {
  ZetaPoly p;
  p.add_term({}, c);
  return p;
}

ZetaPoly ZetaPoly::generator(int index, int power) {
  if (index < 0 || power < 0) throw std::invalid_argument("ZetaPoly::generator: negative index or power");
  ZetaMonomial m(index + 1, 0);
  m[index] = power;
  ZetaPoly p;
  p.add_term(std::move(m), 1);
  return p;
}

ZetaPoly ZetaPoly::odd_zeta(int s) { return generator(odd_zeta_generator_index(s)); }

Rational ZetaPoly::coefficient(const ZetaMonomial& m) const {
  ZetaMonomial key = m;
  trim(key);
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ZetaPoly::add_term(ZetaMonomial m, const Rational& c) {
  if (mzvgenus::is_zero(c)) return;
  trim(m);
  auto [it, inserted] = terms_.try_emplace(std::move(m), canonical(c));
  if (!inserted) {
    it->second += c;
    if (mzvgenus::is_zero(it->second)) terms_.erase(it);
  }
}

std::set<int> ZetaPoly::weights() const {
  std::set<int> out;
  for (const auto& [m, c] : terms_) out.insert(monomial_weight(m));
  return out;
}

bool ZetaPoly::is_homogeneous(int weight) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [weight](const auto& kv) { return monomial_weight(kv.first) == weight; });
}

ZetaPoly ZetaPoly::homogeneous_component(int weight) const {
  ZetaPoly out;
  for (const auto& [m, c] : terms_)
    if (monomial_weight(m) == weight) out.terms_.emplace(m, c);
  return out;
}

int ZetaPoly::max_generator() const {
  int g = -1;
  for (const auto& [m, c] : terms_) g = std::max(g, static_cast<int>(m.size()) - 1);
  return g;
}

ZetaPoly& ZetaPoly::operator+=(const ZetaPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ZetaPoly& ZetaPoly::operator-=(const ZetaPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ZetaPoly& ZetaPoly::operator*=(const Rational& s) {
  if (mzvgenus::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

ZetaPoly operator*(const ZetaPoly& a, const ZetaPoly& b) {
  ZetaPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ZetaMonomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t g = 0; g < ma.size(); ++g) m[g] += ma[g];
      for (std::size_t g = 0; g < mb.size(); ++g) m[g] += mb[g];
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

ZetaPoly ZetaPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("ZetaPoly::pow: negative exponent");
  ZetaPoly out = constant(1);
  for (int k = 0; k < e; ++k) out = out * *this;
  return out;
}

std::string ZetaPoly::to_string(bool ascii) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->second;
    if (first) {
      if (sgn(c) < 0) out += ascii ? "-" : "−";
    } else {
      out += sgn(c) < 0 ? (ascii ? " - " : " − ") : " + ";
    }
    c = abs(c);
    const std::string mono = render_monomial(it->first, ascii);
    if (mono.empty()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + (ascii ? "*" : "·");
      out += mono;
    }
    first = false;
  }
  return out;
}

// -- Bernoulli numbers and even zeta values ----------------------------------

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli: negative index");
  static std::mutex mutex;
  static std::vector<Rational> memo{Rational(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(memo.size()) <= n) {
    const int m = static_cast<int>(memo.size());
    // Σ_{j=0}^{m} C(m+1, j) B_j = 0 solved for B_m.
    Rational sum = 0;
    Integer binom = 1;  // C(m+1, 0)
    for (int j = 0; j < m; ++j) {
      sum += binom * memo[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    Rational b = -sum / Rational(m + 1);
    b.canonicalize();
    memo.push_back(b);
  }
  return memo[n];
}

ZetaPoly zeta_even(int two_k) {
  if (two_k < 2 || two_k % 2 != 0) throw std::invalid_argument("zeta_even: argument must be even and >= 2");
  const int k = two_k / 2;
  Integer factorial = 1;
  for (int j = 2; j <= two_k; ++j) factorial *= j;
  Integer two_pow = 1;
  two_pow <<= two_k;
  Rational c = bernoulli(two_k) * Rational(two_pow) / Rational(2 * factorial);
  if (k % 2 == 0) c = -c;
  c.canonicalize();
  return ZetaPoly::pi_squared(k) * c;
}

ZetaPoly zeta_gen(int i) {
  if (i < 2) throw std::invalid_argument("zeta_gen: argument must be >= 2");
  return i % 2 == 0 ? zeta_even(i) : ZetaPoly::odd_zeta(i);
}

namespace {

ZetaPoly zeta_of_power_sum_part(int k) { return k == 1 ? ZetaPoly::gamma() : zeta_gen(k); }

ZetaPoly zeta_of_letters(const std::vector<int>& parts) {
  ZetaPoly out = ZetaPoly::constant(1);
  for (int k : parts) out = out * zeta_of_power_sum_part(k);
  return out;
}

}  // namespace

ZetaPoly zeta_hom(const SymPoly& f) {
  ZetaPoly out;
  const SymPoly in_p = to_basis(f, Basis::power_sum);
  for (const auto& [lambda, c] : in_p.terms()) out += zeta_of_letters(lambda.parts()) * c;
  return out;
}

ZetaPoly zeta_of_monomial(const Partition& lambda) {
  return zeta_hom(SymPoly::basis_element(Basis::monomial, lambda));
}

// -- MZV symbols ---------------------------------------------------------------

MzvPoly MzvPoly::ring(const ZetaPoly& c) {
  MzvPoly p;
  p.add_term({}, c);
  return p;
}

MzvPoly MzvPoly::symbol(const Word& args) {
  if (args.empty() || args.front() < 2)
    throw std::invalid_argument("MZV symbol " + args.to_string() + " diverges: first argument must be >= 2");
  MzvPoly p;
  p.add_term({args}, ZetaPoly::constant(1));
  return p;
}

void MzvPoly::add_term(Symbols key, const ZetaPoly& c) {
  if (c.is_zero()) return;
  std::sort(key.begin(), key.end(), std::greater<>());
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ZetaPoly MzvPoly::ring_part() const {
  auto it = terms_.find({});
  return it == terms_.end() ? ZetaPoly{} : it->second;
}

std::optional<std::vector<MzvTerm>> MzvPoly::linear_terms() const {
  std::vector<MzvTerm> out;
  for (const auto& [key, c] : terms_) {
    if (key.empty()) continue;
    if (key.size() != 1 || c.terms().size() != 1 || !c.terms().begin()->first.empty()) return std::nullopt;
    out.push_back({c.terms().begin()->second, key.front()});
  }
  return out;
}

MzvPoly& MzvPoly::operator+=(const MzvPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

MzvPoly& MzvPoly::operator*=(const Rational& s) {
  if (mzvgenus::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

MzvPoly operator*(const MzvPoly& a, const MzvPoly& b) {
  MzvPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      MzvPoly::Symbols key = ka;
      key.insert(key.end(), kb.begin(), kb.end());
      out.add_term(std::move(key), ca * cb);
    }
  }
  return out;
}

std::string MzvPoly::to_string(bool ascii) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string symbols;
    for (const auto& w : key) {
      if (!symbols.empty()) symbols += ascii ? "*" : "·";
      std::string args;
      for (int i : w.letters()) args += (args.empty() ? "" : ",") + std::to_string(i);
      symbols += (ascii ? "zeta(" : "ζ(") + args + ")";
    }
    if (symbols.empty()) {
      out += c.to_string(ascii);
    } else if (c == ZetaPoly::constant(1)) {
      out += symbols;
    } else {
      out += "(" + c.to_string(ascii) + ")" + (ascii ? "*" : "·") + symbols;
    }
  }
  return out;
}

MzvPoly zeta_word(const Word& w) {
  if (w.empty()) return MzvPoly::ring(ZetaPoly::constant(1));
  if (w.front() >= 2) return MzvPoly::symbol(w);
  MzvPoly out;
  const LyndonPoly generators = lyndon_decompose(QsymPoly::word(w));
  for (const auto& [mono, c] : generators.terms()) {
    MzvPoly term = MzvPoly::ring(ZetaPoly::constant(c));
    for (const auto& l : mono) term = term * (l == Word({1}) ? MzvPoly::ring(ZetaPoly::gamma()) : MzvPoly::symbol(l));
    out += term;
  }
  return out;
}

MzvPoly zeta_word(const QsymPoly& q) {
  MzvPoly out;
  for (const auto& [w, c] : q.terms()) {
    MzvPoly v = zeta_word(w);
    v *= c;
    out += v;
  }
  return out;
}

std::optional<ZetaPoly> stuffle_reduce(const QsymPoly& q) {
  ZetaPoly out;
  QsymPoly rest = q;
  while (!rest.is_zero()) {
    auto deepest = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (it->first.depth() > deepest->first.depth()) deepest = it;
    const Word w = deepest->first;
    const Partition mu = Partition::from_unsorted(w.letters());
    std::vector<Word> letters;
    for (int i : mu.parts()) letters.emplace_back(std::vector<int>{i});
    const QsymPoly product = stuffle_product(letters);
    // The depth-k part of z_{μ_1} * ... * z_{μ_k} is every rearrangement of μ
    // with coefficient ∏ (multiplicity)!.
    const Rational factor = rest.coefficient(w) / product.coefficient(w);
    rest -= product * factor;
    out += zeta_of_letters(mu.parts()) * factor;
    for (const auto& r : rearrangements(mu))
      if (!mzvgenus::is_zero(rest.coefficient(r))) return std::nullopt;
  }
  return out;
}

std::optional<ZetaPoly> reduce_to_ring(const MzvPoly& v) {
  ZetaPoly out;
  std::map<ZetaMonomial, QsymPoly> buckets;
  for (const auto& [key, c] : v.terms()) {
    ZetaPoly coeff = c;
    std::vector<Word> deep;
    for (const auto& w : key) {
      if (w.depth() == 1) {
        coeff = coeff * zeta_gen(w.front());
      } else {
        deep.push_back(w);
      }
    }
    if (deep.empty()) {
      out += coeff;
    } else if (deep.size() == 1) {
      for (const auto& [m, r] : coeff.terms()) buckets[m].add_term(deep.front(), r);
    } else {
      return std::nullopt;
    }
  }
  for (const auto& [m, q] : buckets) {
    auto reduced = stuffle_reduce(q);
    if (!reduced) return std::nullopt;
    ZetaPoly mono;
    mono.add_term(m, 1);
    out += mono * *reduced;
  }
  return out;
}

}  // namespace mzvgenus
