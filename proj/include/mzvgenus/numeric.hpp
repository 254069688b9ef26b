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
#ifndef MZVGENUS_NUMERIC_HPP
#define MZVGENUS_NUMERIC_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzvgenus/rational.hpp"
#include "mzvgenus/words.hpp"
#include "mzvgenus/zeta_ring.hpp"

namespace mzvgenus {

/// A double together with an absolute error bound.
struct BoundedValue {
  double value = 0.0;
  double bound = 0.0;

  /// |a - b| <= a.bound + b.bound + slack
  bool agrees_with(const BoundedValue& o, double slack = 0.0) const;
};

BoundedValue operator+(const BoundedValue& a, const BoundedValue& b);
BoundedValue operator-(const BoundedValue& a, const BoundedValue& b);
BoundedValue operator*(const BoundedValue& a, const BoundedValue& b);
BoundedValue scale(const BoundedValue& a, const Rational& c);
BoundedValue scale(const BoundedValue& a, double c);
BoundedValue pow(const BoundedValue& a, int e);

class DivergentMzvError : public std::invalid_argument {
 public:
  explicit DivergentMzvError(const std::string& what) : std::invalid_argument(what) {}
};

class CutoffBudgetError : public std::runtime_error {
 public:
  explicit CutoffBudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct MzvOptions {
  /// Largest outer cutoff mzv() may choose before giving up.
  std::int64_t max_cutoff = 200'000'000;
};

/// Rigorous bound on Σ_{n_1 > N} of the nested series for ζ(args). Inner
/// levels are majorized by ∏ ζ(i_j) for i_j >= 2 and by 1 + ln n for i_j = 1.
double mzv_tail_bound(const Word& args, std::int64_t cutoff);

/// ζ(i_1,...,i_k) = Σ_{n_1 > ... > n_k >= 1} ∏ n_j^{-i_j}, truncated at
/// n_1 <= cutoff. The bound covers the tail and rounding.
BoundedValue mzv_truncated(const Word& args, std::int64_t cutoff);

/// Smallest power-of-two-refined cutoff whose tail plus rounding is <= tol.
std::int64_t mzv_cutoff(const Word& args, double tol, const MzvOptions& options = {});

/// Throws DivergentMzvError if i_1 < 2 (or args empty), CutoffBudgetError if
/// the cutoff needed for tol exceeds options.max_cutoff, and
/// std::invalid_argument for tol <= 0.
BoundedValue mzv(const Word& args, double tol, const MzvOptions& options = {});

/// Evaluates many MZVs; words are independent, so this is an OpenMP loop.
std::vector<BoundedValue> mzv_batch(const std::vector<Word>& args, double tol, const MzvOptions& options = {});
std::vector<BoundedValue> mzv_batch_serial(const std::vector<Word>& args, double tol,
                                           const MzvOptions& options = {});

/// Σ_{n=1}^{cutoff} n^{-s} with compensated summation over 64 fixed chunks
/// reduced in order; the value is identical for every thread count.
double power_partial_sum(int s, std::int64_t cutoff);
/// Plain single-loop reference for power_partial_sum.
double power_partial_sum_serial(int s, std::int64_t cutoff);

/// ζ(s) for integer s >= 2 by Euler–Maclaurin summation; the bound is the
/// first omitted correction term plus rounding.
BoundedValue zeta_euler_maclaurin(int s);

/// Numeric value of a ring generator (index as in generator_weight): γ and π²
/// from stored constants, ζ(2k+1) by direct summation to 1e-12.
BoundedValue generator_value(int index);

/// Values of every generator up to the given weight, keyed by JSON name.
std::map<std::string, BoundedValue> generator_values(int max_weight = 9);

BoundedValue eval_zeta_poly(const ZetaPoly& p);

/// Each symbol evaluated by mzv() at tol.
BoundedValue eval_mzv_poly(const MzvPoly& p, double tol, const MzvOptions& options = {});

/// Σ c_w ζ(w) for a combination of convergent words.
BoundedValue eval_words(const QsymPoly& q, double tol, const MzvOptions& options = {});

/// Taylor coefficients g_0..g_N of 1/Γ(1+z) from
///   log(1/Γ(1+z)) = γ z + Σ_{k>=2} (-1)^{k+1} ζ(k) z^k / k
/// exponentiated by n g_n = Σ_{k=1}^{n} k a_k g_{n-k}. The ζ(k) come from
/// zeta_euler_maclaurin, not from the coefficient ring.
std::vector<BoundedValue> gamma_recip_coeffs(int n);

/// 1/Γ(1+z) for real |z| < 1 from the Weierstrass product truncated at
/// `factors` factors, with the omitted factors bounded analytically.
BoundedValue reciprocal_gamma_product(double z, std::int64_t factors = 10'000'000);

struct SeriesCheck {
  double z = 0.0;
  BoundedValue series;   // Σ_{i<=degree} g_i z^i, bound includes the truncation
  BoundedValue product;  // reciprocal_gamma_product(z)
  double difference = 0.0;
  bool pass = false;
};

/// Compares the degree-`degree` Taylor polynomial with the product at each z.
/// pass requires |difference| within the combined bounds and <= tol.
std::vector<SeriesCheck> validate_gamma_recip_series(const std::vector<double>& points, int degree = 12,
                                                     double tol = 1e-6);

}  // namespace mzvgenus

#endif  // MZVGENUS_NUMERIC_HPP
