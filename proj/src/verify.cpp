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
#include "mzvgenus/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace mzvgenus {

namespace {

constexpr std::uint64_t kSeed = 0x5eed'2026'0001ULL;

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

class Collector {
 public:
  Collector(Report& report, bool ascii) : report_(report), ascii_(ascii) {}

  bool ascii() const { return ascii_; }

  void exact(std::string id, std::string description, const ZetaPoly& expected, const ZetaPoly& actual) {
    report_.checks.push_back({std::move(id), std::move(description), expected == actual, expected.to_string(ascii_),
                              actual.to_string(ascii_), 0.0});
  }

  void flag(std::string id, std::string description, bool pass, std::string expected = "true",
            std::string actual = "") {
    if (actual.empty()) actual = pass ? "true" : "false";
    report_.checks.push_back({std::move(id), std::move(description), pass, std::move(expected), std::move(actual), 0.0});
  }

  void numeric(std::string id, std::string description, const BoundedValue& expected, const BoundedValue& actual) {
    const double bound = expected.bound + actual.bound;
    report_.checks.push_back({std::move(id), std::move(description), expected.agrees_with(actual),
                              fmt_double(expected.value), fmt_double(actual.value), bound});
  }

 private:
  Report& report_;
  bool ascii_;
};

std::vector<Word> words_up_to(int max_weight, bool include_empty) {
  std::vector<Word> out;
  if (include_empty) out.emplace_back();
  for (int w = 1; w <= max_weight; ++w)
    for (auto& word : words_of_weight(w)) out.push_back(std::move(word));
  return out;
}

bool graded(const QsymPoly& product, const Word& a, const Word& b) {
  return std::all_of(product.terms().begin(), product.terms().end(), [&](const auto& kv) {
    const Word& w = kv.first;
    return w.weight() == a.weight() + b.weight() && w.depth() <= a.depth() + b.depth() &&
           w.depth() >= std::max(a.depth(), b.depth());
  });
}

Word random_word(std::mt19937_64& rng, int max_weight, int min_first = 1, int max_depth = 64) {
  std::uniform_int_distribution<int> weight_dist(1, max_weight);
  for (;;) {
    int remaining = weight_dist(rng);
    std::vector<int> letters;
    while (remaining > 0) {
      std::uniform_int_distribution<int> letter(1, remaining);
      letters.push_back(letter(rng));
      remaining -= letters.back();
    }
    if (letters.front() >= min_first && static_cast<int>(letters.size()) <= max_depth) return Word(std::move(letters));
  }
}

// -- symbolic ----------------------------------------------------------------

void symbolic_checks(Collector& c) {
  const ZetaPoly gamma = ZetaPoly::gamma();
  std::vector<GenusPolynomial> q(11);
  for (int i = 1; i <= 10; ++i) q[i] = q_genus(i);

  {
    GenusPolynomial expected;
    expected.degree = 1;
    expected.coeffs.emplace(Partition({1}), gamma);
    c.flag("q1", "Q_1 = γ·c1", q[1] == expected, expected.to_string(c.ascii()), q[1].to_string(c.ascii()));
  }
  for (int i = 2; i <= 10; ++i)
    c.exact("leading-" + std::to_string(i), "coefficient of c" + std::to_string(i) + " in Q_" + std::to_string(i) + " is ζ(" + std::to_string(i) + ")",
            zeta_gen(i), q[i].coefficient(Partition({i})));
  c.exact("c1^2-in-Q2", "coeff(c_1², Q_2) = ½(γ² − ζ(2))", (gamma * gamma - zeta_gen(2)) * Rational(1, 2),
          q[2].coefficient(Partition({1, 1})));
  c.exact("c1^3-in-Q3", "coeff(c_1³, Q_3) = ⅓ζ(3) − ½γζ(2) + ⅙γ³",
          zeta_gen(3) * Rational(1, 3) - gamma * zeta_gen(2) * Rational(1, 2) + gamma.pow(3) * Rational(1, 6),
          q[3].coefficient(Partition({1, 1, 1})));

  const ZetaPoly m22 = zeta_of_monomial(Partition({2, 2}));
  c.exact("zeta-m22", "ζ(m_22) = ¾ζ(4)", zeta_even(4) * Rational(3, 4), m22);
  c.exact("zeta-m22-pi", "¾ζ(4) = (1/120)(π²)²", ZetaPoly::pi_squared(2) * Rational(1, 120), m22);

  QsymPoly expected_stuffle;
  for (auto letters : {std::vector<int>{2, 6}, {6, 2}, {8}}) expected_stuffle.add_term(Word(letters), 1);
  const QsymPoly s26 = stuffle(Word({2}), Word({6}));
  c.flag("stuffle-2-6", "z_2 * z_6 = z_2z_6 + z_6z_2 + z_8", s26 == expected_stuffle, expected_stuffle.to_string(c.ascii()),
         s26.to_string(c.ascii()));
  const ZetaPoly chain = zeta_gen(2) * zeta_gen(6) - zeta_gen(8);
  c.exact("zeta-m62-chain", "ζ(6,2)+ζ(2,6) = ζ(2)ζ(6) − ζ(8) = ⅔ζ(8)", zeta_even(8) * Rational(2, 3), chain);
  c.exact("zeta-m62-pi", "⅔ζ(8) = (1/14175)(π²)⁴", ZetaPoly::pi_squared(4) * Rational(1, 14175), chain);
  c.exact("zeta-m62-hom", "ζ(m_62) via power sums", chain, zeta_of_monomial(Partition({6, 2})));

  for (int n = 1; n <= 8; ++n)
    c.flag("e-to-m-symmetric-" + std::to_string(n), "e→m transition matrix is symmetric", e_to_m_matrix(n).is_symmetric());

  for (int i = 1; i <= kOracleBudget; ++i) {
    const GenusPolynomial oracle = q_genus_oracle(i);
    c.flag("oracle-" + std::to_string(i), "Q_" + std::to_string(i) + " from the generating product matches", oracle == q[i],
           oracle.to_string(c.ascii()), q[i].to_string(c.ascii()));
  }

  for (int i = 1; i <= 10; ++i) {
    const bool homogeneous = std::all_of(q[i].coeffs.begin(), q[i].coeffs.end(),
                                         [i](const auto& kv) { return kv.second.is_homogeneous(i); });
    c.flag("homogeneous-" + std::to_string(i), "coefficients of Q_" + std::to_string(i) + " have weight " + std::to_string(i),
           homogeneous);
    c.flag("count-" + std::to_string(i), "Q_" + std::to_string(i) + " has p(" + std::to_string(i) + ") coefficients",
           q[i].coeffs.size() == partitions_of(i).size(), std::to_string(partitions_of(i).size()),
           std::to_string(q[i].coeffs.size()));
  }

  for (int n = 2; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      if (lambda.contains_part(1)) continue;
      const auto words = sym_to_words(SymPoly::basis_element(Basis::monomial, lambda));
      const auto reduced = reduce_to_ring(zeta_word(words));
      const ZetaPoly direct = zeta_of_monomial(lambda);
      c.flag("path-" + lambda.to_string(), "ζ(m_λ) via words and stuffle equals ζ(m_λ) via power sums",
             reduced && *reduced == direct, direct.to_string(c.ascii()), reduced ? reduced->to_string(c.ascii()) : "irreducible");
    }
  }

  bool roundtrip = true;
  const Basis bases[] = {Basis::monomial, Basis::elementary, Basis::power_sum};
  for (int n = 0; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (Basis a : bases)
        for (Basis b : bases) {
          const SymPoly x = SymPoly::basis_element(a, lambda);
          roundtrip = roundtrip && to_basis(to_basis(x, b), a) == x;
        }
  c.flag("basis-roundtrip", "m/e/p conversions round-trip for |λ| <= 6", roundtrip);
}

// -- words -------------------------------------------------------------------

void word_checks(Collector& c) {
  const auto small = words_up_to(4, true);
  bool commutative = true, associative = true, grading = true;
  for (const auto& a : small)
    for (const auto& b : small) {
      const QsymPoly ab = stuffle(a, b);
      commutative = commutative && ab == stuffle(b, a);
      grading = grading && graded(ab, a, b);
    }
  const auto tiny = words_up_to(3, false);
  for (const auto& a : tiny)
    for (const auto& b : tiny)
      for (const auto& d : tiny) {
        const QsymPoly left = stuffle(stuffle(QsymPoly::word(a), QsymPoly::word(b)), QsymPoly::word(d));
        const QsymPoly right = stuffle(QsymPoly::word(a), stuffle(QsymPoly::word(b), QsymPoly::word(d)));
        associative = associative && left == right;
      }
  std::mt19937_64 rng(kSeed);
  for (int t = 0; t < 50; ++t) {
    const Word a = random_word(rng, 7), b = random_word(rng, 7), d = random_word(rng, 4);
    const QsymPoly ab = stuffle(a, b);
    commutative = commutative && ab == stuffle(b, a);
    grading = grading && graded(ab, a, b);
    associative = associative && stuffle(ab, QsymPoly::word(d)) == stuffle(QsymPoly::word(a), stuffle(b, d));
  }
  c.flag("stuffle-commutative", "stuffle is commutative (exhaustive weight <= 4, 50 random pairs weight <= 7)", commutative);
  c.flag("stuffle-associative", "stuffle is associative (exhaustive triples weight <= 3, 50 random triples)", associative);
  c.flag("stuffle-graded", "stuffle adds weights and keeps depth within [max, sum]", grading);

  for (int w = 1; w <= 8; ++w) {
    int starting_with_one = 0;
    bool only_z1 = true;
    for (const auto& l : lyndon_words(w))
      if (l.front() == 1) {
        ++starting_with_one;
        only_z1 = only_z1 && l == Word({1});
      }
    c.flag("lyndon-z1-" + std::to_string(w), "only z_1 is a Lyndon word starting with z_1 (weight " + std::to_string(w) + ")",
           only_z1 && starting_with_one == (w == 1 ? 1 : 0));
  }

  bool factor_ok = true;
  for (const auto& w : words_up_to(7, false)) {
    const auto factors = lyndon_factorize(w);
    Word joined;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      joined = joined.concat(factors[j]);
      factor_ok = factor_ok && is_lyndon(factors[j]) && (j == 0 || !(factors[j - 1] < factors[j]));
    }
    factor_ok = factor_ok && joined == w;
  }
  c.flag("lyndon-factorization", "Lyndon factorization is a weakly decreasing Lyndon split (weight <= 7)", factor_ok);

  bool decompose_ok = true;
  for (const auto& w : words_up_to(6, false)) decompose_ok = decompose_ok && expand_lyndon(lyndon_decompose(QsymPoly::word(w))) == QsymPoly::word(w);
  c.flag("lyndon-decomposition", "Lyndon decomposition re-expands to the word (weight <= 6)", decompose_ok);

  bool embedding_ok = true;
  for (int total = 0; total <= 6; ++total)
    for (int left = 0; left <= total; ++left)
      for (const auto& la : partitions_of(left))
        for (const auto& lb : partitions_of(total - left)) {
          const SymPoly ma = SymPoly::basis_element(Basis::monomial, la);
          const SymPoly mb = SymPoly::basis_element(Basis::monomial, lb);
          embedding_ok = embedding_ok && sym_to_words(multiply(ma, mb)) == stuffle(sym_to_words(ma), sym_to_words(mb));
        }
  c.flag("embedding-homomorphism", "Sym → H¹ turns products into stuffle products (weight <= 6)", embedding_ok);
}

// -- numeric -----------------------------------------------------------------

void numeric_checks(Collector& c) {
  constexpr double kTol = 1e-6;
  c.numeric("mzv-2-2", "ζ(2,2) vs ¾ζ(4) = π⁴/120", eval_zeta_poly(ZetaPoly::pi_squared(2) * Rational(1, 120)),
            mzv(Word({2, 2}), kTol));
  c.numeric("mzv-62-26", "ζ(6,2)+ζ(2,6) vs ⅔ζ(8)", eval_zeta_poly(zeta_even(8) * Rational(2, 3)),
            mzv(Word({6, 2}), kTol) + mzv(Word({2, 6}), kTol));

  const auto g = gamma_recip_coeffs(10);
  for (int i = 0; i <= 10; ++i) {
    const ZetaPoly ei = i == 0 ? ZetaPoly::constant(1)
                               : zeta_hom(SymPoly::basis_element(Basis::elementary, Partition({i})));
    c.numeric("eq2-" + std::to_string(i), "ζ(e_" + std::to_string(i) + ") vs Taylor coefficient of 1/Γ(1+z)", g[i],
              eval_zeta_poly(ei));
  }
  for (const auto& check : validate_gamma_recip_series({-0.4, -0.2, 0.1, 0.3, 0.5})) {
    c.flag("gamma-series-" + fmt_double(check.z), "Taylor polynomial of 1/Γ(1+z) matches the product within 1e-6",
           check.pass, fmt_double(check.product.value), fmt_double(check.series.value));
  }

  std::mt19937_64 rng(kSeed + 1);
  for (int t = 0; t < 20; ++t) {
    const Word a = random_word(rng, 8, 2, 2), b = random_word(rng, 8, 2, 2);
    constexpr double kPairTol = 1e-4;
    c.numeric("stuffle-numeric-" + std::to_string(t), "ζ(" + a.to_string() + " * " + b.to_string() + ") vs product",
              mzv(a, kPairTol) * mzv(b, kPairTol), eval_words(stuffle(a, b), kPairTol));
  }

  for (int n = 2; n <= 8; ++n)
    for (const auto& lambda : partitions_of(n)) {
      if (lambda.contains_part(1)) continue;
      QsymPoly sum;
      for (const auto& t : mzv_expansion(lambda)) sum.add_term(t.args, t.coeff);
      c.numeric("cy-" + lambda.to_string(), "MZV sum for c_λ vs ζ(m_λ)", eval_zeta_poly(zeta_of_monomial(lambda)),
                eval_words(sum, kTol));
    }

  for (int k = 1; k <= 6; ++k)
    c.numeric("zeta-even-" + std::to_string(2 * k), "Euler's formula vs direct summation",
              eval_zeta_poly(zeta_even(2 * k)), mzv(Word({2 * k}), 1e-8));

  {
    constexpr int kN = 1'000'000;
    double harmonic = 0.0;
    for (int n = kN; n >= 1; --n) harmonic += 1.0 / n;
    const double estimate = harmonic - std::log(static_cast<double>(kN)) - 1.0 / (2.0 * kN);
    c.numeric("gamma-constant", "stored γ vs H_N − ln N − 1/(2N), N = 10⁶", generator_value(0), {estimate, 1e-7});
    double squares = 0.0;
    for (int n = kN; n >= 1; --n) squares += 1.0 / (static_cast<double>(n) * n);
    const double tail = 1.0 / kN - 1.0 / (2.0 * kN * static_cast<double>(kN));
    c.numeric("pi2-constant", "stored π² vs 6·Σ n⁻² with tail correction", generator_value(1), {6.0 * (squares + tail), 1e-9});
  }
}

}  // namespace

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.pass; });
}

Json Report::to_json() const {
  Json records = Json::array();
  for (const auto& r : checks)
    records.push_back({{"id", r.id},
                       {"description", r.description},
                       {"status", r.pass ? "pass" : "fail"},
                       {"expected", r.expected},
                       {"actual", r.actual},
                       {"bound", r.bound}});
  return {{"suite", suite}, {"status", pass() ? "pass" : "fail"}, {"checks", records}};
}

std::string Report::to_text() const {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : checks) {
    passed += r.pass;
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": " << r.description;
    if (!r.pass) out << "\n       expected " << r.expected << "\n       actual   " << r.actual;
    if (r.bound > 0.0) out << " (bound " << fmt_double(r.bound) << ")";
    out << "\n";
  }
  out << "suite " << suite << ": " << (pass() ? "PASS" : "FAIL") << " (" << passed << "/" << checks.size() << ")\n";
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "symbolic", "numeric", "words"};
  return names;
}

Report run_suite(std::string_view suite, bool ascii) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  Report report;
  report.suite = std::string(suite);
  Collector c(report, ascii);
  if (suite == "all" || suite == "symbolic") symbolic_checks(c);
  if (suite == "all" || suite == "words") word_checks(c);
  if (suite == "all" || suite == "numeric") numeric_checks(c);
  return report;
}

}  // namespace mzvgenus
