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
#include "mzvgenus/words.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace mzvgenus {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int i : letters_)
    if (i < 1) throw std::invalid_argument("word subscripts must be >= 1");
  weight_ = std::accumulate(letters_.begin(), letters_.end(), 0);
}

Word Word::concat(const Word& tail) const {
  std::vector<int> out = letters_;
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return Word(std::move(out));
}

Word Word::prepend(int letter) const {
  std::vector<int> out;
  out.reserve(letters_.size() + 1);
  out.push_back(letter);
  out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

Word Word::subword(std::size_t from, std::size_t count) const {
  from = std::min(from, letters_.size());
  count = std::min(count, letters_.size() - from);
  return Word(std::vector<int>(letters_.begin() + from, letters_.begin() + from + count));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (int i : letters_) s += "z_" + std::to_string(i);
  return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.letters_.size(), b.letters_.size());
  for (std::size_t j = 0; j < n; ++j) {
    // Smaller subscript means larger letter.
    if (a.letters_[j] != b.letters_[j]) return b.letters_[j] <=> a.letters_[j];
  }
  return a.letters_.size() <=> b.letters_.size();
}

// -- QsymPoly ----------------------------------------------------------------

QsymPoly QsymPoly::word(const Word& w, Rational c) {
  QsymPoly q;
  q.add_term(w, c);
  return q;
}

Rational QsymPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void QsymPoly::add_term(const Word& w, const Rational& c) {
  if (mzvgenus::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w, canonical(c));
  if (!inserted) {
    it->second += c;
    if (mzvgenus::is_zero(it->second)) terms_.erase(it);
  }
}

QsymPoly& QsymPoly::operator+=(const QsymPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

QsymPoly& QsymPoly::operator-=(const QsymPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

QsymPoly& QsymPoly::operator*=(const Rational& s) {
  if (mzvgenus::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

std::string QsymPoly::to_string(bool ascii) const {
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
    if (c != 1) out += c.get_str() + (ascii ? "*" : "·");
    out += it->first.to_string();
    first = false;
  }
  return out;
}

// -- stuffle -----------------------------------------------------------------

namespace {

class StuffleTable {
 public:
  StuffleTable(const Word& a, const Word& b)
      : a_(a.letters()), b_(b.letters()), memo_((a_.size() + 1) * (b_.size() + 1)) {}

  const QsymPoly& get(std::size_t pa, std::size_t pb) {
    auto& slot = memo_[pa * (b_.size() + 1) + pb];
    if (slot) return *slot;
    QsymPoly out;
    if (pa == a_.size()) {
      out.add_term(Word(std::vector<int>(b_.begin() + pb, b_.end())), 1);
    } else if (pb == b_.size()) {
      out.add_term(Word(std::vector<int>(a_.begin() + pa, a_.end())), 1);
    } else {
      prefix_into(out, a_[pa], get(pa + 1, pb));
      prefix_into(out, b_[pb], get(pa, pb + 1));
      prefix_into(out, a_[pa] + b_[pb], get(pa + 1, pb + 1));
    }
    slot = std::move(out);
    return *slot;
  }

 private:
  static void prefix_into(QsymPoly& out, int letter, const QsymPoly& tail) {
    for (const auto& [w, c] : tail.terms()) out.add_term(w.prepend(letter), c);
  }

  const std::vector<int>& a_;
  const std::vector<int>& b_;
  std::vector<std::optional<QsymPoly>> memo_;
};

}  // namespace

QsymPoly stuffle(const Word& a, const Word& b) {
  StuffleTable table(a, b);
  return table.get(0, 0);
}

QsymPoly stuffle(const QsymPoly& a, const QsymPoly& b) {
  QsymPoly out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out += stuffle(wa, wb) * Rational(ca * cb);
  return out;
}

// -- Lyndon words ------------------------------------------------------------

std::vector<Word> words_of_weight(int weight) {
  if (weight < 0) throw std::invalid_argument("words_of_weight: negative weight");
  std::vector<Word> out;
  std::vector<int> prefix;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(prefix);
      return;
    }
    for (int i = 1; i <= remaining; ++i) {
      prefix.push_back(i);
      rec(remaining - i);
      prefix.pop_back();
    }
  };
  rec(weight);
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_lyndon: empty word");
  for (int j = 1; j < w.depth(); ++j)
    if (!(w.subword(j) > w)) return false;
  return true;
}

std::vector<Word> lyndon_words(int weight) {
  if (weight < 1) throw std::invalid_argument("lyndon_words: weight must be positive");
  std::vector<Word> out;
  for (auto& w : words_of_weight(weight))
    if (is_lyndon(w)) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Word> lyndon_factorize(const Word& w) {
  if (w.empty()) throw std::invalid_argument("lyndon_factorize: empty word");
  const auto& s = w.letters();
  // Letter order: z_1 is the largest letter.
  auto less = [](int x, int y) { return x > y; };
  std::vector<Word> out;
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && !less(s[j], s[k])) {
      k = less(s[k], s[j]) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.push_back(w.subword(i, j - k));
      i += j - k;
    }
  }
  return out;
}

void LyndonPoly::add_term(LyndonMonomial m, const Rational& c) {
  if (mzvgenus::is_zero(c)) return;
  std::sort(m.begin(), m.end(), std::greater<>());
  auto [it, inserted] = terms_.try_emplace(std::move(m), canonical(c));
  if (!inserted) {
    it->second += c;
    if (mzvgenus::is_zero(it->second)) terms_.erase(it);
  }
}

Rational LyndonPoly::coefficient(const LyndonMonomial& m) const {
  LyndonMonomial key = m;
  std::sort(key.begin(), key.end(), std::greater<>());
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

QsymPoly stuffle_product(const std::vector<Word>& factors) {
  QsymPoly acc = QsymPoly::word(Word{});
  for (const auto& f : factors) acc = stuffle(acc, QsymPoly::word(f));
  return acc;
}

QsymPoly expand_lyndon(const LyndonPoly& p) {
  QsymPoly out;
  for (const auto& [mono, c] : p.terms()) out += stuffle_product(mono) * c;
  return out;
}

LyndonPoly lyndon_decompose(const QsymPoly& q) {
  LyndonPoly out;
  QsymPoly rest = q;
  while (!rest.is_zero()) {
    const Word lead = rest.leading_word();
    const Rational c = rest.coefficient(lead);
    if (lead.empty()) {
      out.add_term({}, c);
      rest.add_term(lead, -c);
      continue;
    }
    std::vector<Word> factors = lyndon_factorize(lead);
    QsymPoly product = stuffle_product(factors);
    if (product.leading_word() != lead)
      throw std::logic_error("lyndon_decompose: " + lead.to_string() + " is not the leading term of its factor product");
    const Rational scale = c / product.coefficient(lead);
    rest -= product * scale;
    out.add_term(std::move(factors), scale);
  }
  return out;
}

// -- Sym inside H^1 ----------------------------------------------------------

std::vector<Word> rearrangements(const Partition& lambda) {
  std::vector<int> letters = lambda.parts();
  std::vector<Word> out;
  do {
    out.emplace_back(letters);
  } while (std::prev_permutation(letters.begin(), letters.end()));
  return out;
}

QsymPoly sym_to_words(const SymPoly& f) {
  QsymPoly out;
  const SymPoly in_m = to_basis(f, Basis::monomial);
  for (const auto& [lambda, c] : in_m.terms())
    for (const auto& w : rearrangements(lambda)) out.add_term(w, c);
  return out;
}

}  // namespace mzvgenus
