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
#include "mzvgenus/numeric.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <optional>

namespace mzvgenus {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 40 significant digits; parsed by the compiler to the nearest double.
constexpr double kEulerGamma = 0.5772156649015328606065120900824024310422;
constexpr double kPi = 3.141592653589793238462643383279502884197;

struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

double inverse_power(std::int64_t n, int s) {
  const double inv = 1.0 / static_cast<double>(n);
  double out = inv;
  for (int j = 1; j < s; ++j) out *= inv;
  return out;
}

// ζ(s) <= Σ_{m<=10} m^{-s} + 10^{1-s}/(s-1), padded for rounding.
double zeta_upper(int s) {
  double sum = 0.0;
  for (int m = 1; m <= 10; ++m) sum += std::pow(static_cast<double>(m), -s);
  sum += std::pow(10.0, 1 - s) / (s - 1);
  return sum * (1.0 + 1e-12);
}

struct TailShape {
  int outer = 0;         // i_1
  int log_factors = 0;   // number of inner letters equal to 1
  double constant = 1;   // ∏ ζ(i_j) over inner letters >= 2
};

TailShape tail_shape(const Word& args) {
  TailShape shape;
  shape.outer = args.front();
  for (int j = 1; j < args.depth(); ++j) {
    const int i = args.letters()[j];
    if (i == 1) {
      ++shape.log_factors;
    } else {
      shape.constant *= zeta_upper(i);
    }
  }
  return shape;
}

// Relative rounding error of the nested compensated summation.
double rounding_factor(const Word& args, std::int64_t cutoff) {
  const double k = args.depth();
  return 2.0 * ((args.weight() + 3.0 * k) * kEps + k * static_cast<double>(cutoff) * kEps * kEps);
}

void require_convergent(const Word& args) {
  if (args.empty()) throw DivergentMzvError("ζ() needs at least one argument");
  if (args.front() < 2)
    throw DivergentMzvError("ζ" + args.to_string() + " diverges: the first argument i_1 must satisfy i_1 > 1");
}

double nested_partial_sum(const Word& args, std::int64_t cutoff) {
  const auto& a = args.letters();
  const std::size_t k = a.size();
  if (k == 1) return power_partial_sum(a[0], cutoff);
  // acc[j] = Σ over chains n_j > ... > n_k with n_j < current n.
  std::vector<Neumaier> acc(k);
  std::vector<double> fresh(k);
  double previous = 0.0;
  for (std::int64_t n = 1; n <= cutoff; ++n) {
    for (std::size_t j = 0; j < k; ++j) {
      const double inner = j + 1 < k ? acc[j + 1].value() : 1.0;
      fresh[j] = inner == 0.0 ? 0.0 : inverse_power(n, a[j]) * inner;
    }
    for (std::size_t j = 0; j < k; ++j) acc[j].add(fresh[j]);
    const double current = acc[0].value();
    if (current < previous) throw std::logic_error("mzv partial sums must be nondecreasing");
    previous = current;
  }
  return acc[0].value();
}

}  // namespace

// -- BoundedValue ------------------------------------------------------------

bool BoundedValue::agrees_with(const BoundedValue& o, double slack) const {
  return std::fabs(value - o.value) <= bound + o.bound + slack;
}

BoundedValue operator+(const BoundedValue& a, const BoundedValue& b) {
  const double v = a.value + b.value;
  return {v, a.bound + b.bound + kEps * std::fabs(v)};
}

BoundedValue operator-(const BoundedValue& a, const BoundedValue& b) {
  const double v = a.value - b.value;
  return {v, a.bound + b.bound + kEps * std::fabs(v)};
}

BoundedValue operator*(const BoundedValue& a, const BoundedValue& b) {
  const double v = a.value * b.value;
  return {v, std::fabs(a.value) * b.bound + std::fabs(b.value) * a.bound + a.bound * b.bound + kEps * std::fabs(v)};
}

BoundedValue scale(const BoundedValue& a, double c) {
  const double v = c * a.value;
  return {v, std::fabs(c) * a.bound + kEps * std::fabs(v)};
}

BoundedValue scale(const BoundedValue& a, const Rational& c) {
  // get_d truncates: relative conversion error below 2 eps.
  const double cd = c.get_d();
  BoundedValue out = scale(a, cd);
  out.bound += 2.0 * kEps * std::fabs(out.value);
  return out;
}

BoundedValue pow(const BoundedValue& a, int e) {
  if (e < 0) throw std::invalid_argument("BoundedValue pow: negative exponent");
  BoundedValue out{1.0, 0.0};
  for (int j = 0; j < e; ++j) out = out * a;
  return out;
}

// -- MZV summation -----------------------------------------------------------

double mzv_tail_bound(const Word& args, std::int64_t cutoff) {
  require_convergent(args);
  if (cutoff < 1) throw std::invalid_argument("mzv cutoff must be positive");
  const TailShape shape = tail_shape(args);
  const int r = shape.log_factors;
  const double s1 = shape.outer - 1.0;
  double n = static_cast<double>(cutoff);
  // x^{-s}(1 + ln x)^r is decreasing once s (1 + ln x) >= r.
  n = std::max(n, std::exp(static_cast<double>(r) / shape.outer));
  const double u0 = 1.0 + std::log(n);
  // ∫_N^∞ x^{-s} (1 + ln x)^r dx = N^{1-s} Σ_{j<=r} r!/j! u0^j / (s-1)^{r-j+1}
  double series = 0.0;
  double ratio = 1.0;  // r!/j!
  for (int j = r; j >= 0; --j) {
    series += ratio * std::pow(u0, j) / std::pow(s1, r - j + 1);
    ratio *= j;
  }
  return shape.constant * std::pow(n, -s1) * series * (1.0 + 1e-12);
}

BoundedValue mzv_truncated(const Word& args, std::int64_t cutoff) {
  require_convergent(args);
  if (cutoff < 1) throw std::invalid_argument("mzv cutoff must be positive");
  const double value = nested_partial_sum(args, cutoff);
  const double bound = mzv_tail_bound(args, cutoff) + rounding_factor(args, cutoff) * value;
  return {value, bound};
}

std::int64_t mzv_cutoff(const Word& args, double tol, const MzvOptions& options) {
  require_convergent(args);
  if (!(tol > 0.0)) throw std::invalid_argument("mzv tolerance must be positive");
  const TailShape shape = tail_shape(args);
  auto total = [&](std::int64_t n) {
    const double log_part = std::pow(1.0 + std::log(static_cast<double>(n)), shape.log_factors);
    const double upper = zeta_upper(shape.outer) * shape.constant * log_part;
    return mzv_tail_bound(args, n) + rounding_factor(args, n) * upper;
  };
  std::int64_t hi = 16;
  while (total(hi) > tol) {
    if (hi > options.max_cutoff)
      throw CutoffBudgetError("ζ" + args.to_string() + " at tolerance " + std::to_string(tol) +
                              " needs a cutoff above the budget of " + std::to_string(options.max_cutoff));
    hi *= 2;
  }
  std::int64_t lo = hi / 2;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    (total(mid) <= tol ? hi : lo) = mid;
  }
  if (hi > options.max_cutoff)
    throw CutoffBudgetError("ζ" + args.to_string() + " at tolerance " + std::to_string(tol) +
                            " needs a cutoff above the budget of " + std::to_string(options.max_cutoff));
  return hi;
}

BoundedValue mzv(const Word& args, double tol, const MzvOptions& options) {
  return mzv_truncated(args, mzv_cutoff(args, tol, options));
}

std::vector<BoundedValue> mzv_batch(const std::vector<Word>& args, double tol, const MzvOptions& options) {
  for (const auto& w : args) mzv_cutoff(w, tol, options);  // surface errors before the parallel region
  std::vector<BoundedValue> out(args.size());
  const auto count = static_cast<long>(args.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) out[i] = mzv(args[i], tol, options);
  return out;
}

std::vector<BoundedValue> mzv_batch_serial(const std::vector<Word>& args, double tol, const MzvOptions& options) {
  std::vector<BoundedValue> out;
  out.reserve(args.size());
  for (const auto& w : args) out.push_back(mzv(w, tol, options));
  return out;
}

double power_partial_sum(int s, std::int64_t cutoff) {
  constexpr int kChunks = 64;
  std::array<Neumaier, kChunks> partial{};
  const std::int64_t span = (cutoff + kChunks - 1) / kChunks;
#pragma omp parallel for schedule(static)
  for (int c = 0; c < kChunks; ++c) {
    const std::int64_t first = 1 + c * span;
    const std::int64_t last = std::min(cutoff, first + span - 1);
    // Smallest terms first.
    for (std::int64_t n = last; n >= first; --n) partial[c].add(inverse_power(n, s));
  }
  Neumaier total;
  for (int c = kChunks - 1; c >= 0; --c) {
    total.add(partial[c].sum);
    total.add(partial[c].comp);
  }
  return total.value();
}

double power_partial_sum_serial(int s, std::int64_t cutoff) {
  Neumaier total;
  for (std::int64_t n = 1; n <= cutoff; ++n) total.add(inverse_power(n, s));
  return total.value();
}

BoundedValue zeta_euler_maclaurin(int s) {
  if (s < 2) throw DivergentMzvError("ζ(" + std::to_string(s) + ") diverges");
  constexpr int kStart = 16;
  constexpr int kCorrections = 10;
  const double m = kStart;
  Neumaier sum;
  for (int n = kStart - 1; n >= 1; --n) sum.add(inverse_power(n, s));
  sum.add(std::pow(m, 1 - s) / (s - 1));
  sum.add(0.5 * std::pow(m, -s));
  // B_{2j}/(2j)! · s(s+1)...(s+2j-2) · M^{-s-2j+1}
  auto correction = [&](int j) {
    double rising = 1.0;
    for (int t = 0; t <= 2 * j - 2; ++t) rising *= s + t;
    double fact = 1.0;
    for (int t = 2; t <= 2 * j; ++t) fact *= t;
    return bernoulli(2 * j).get_d() / fact * rising * std::pow(m, -s - 2 * j + 1);
  };
  for (int j = 1; j <= kCorrections; ++j) sum.add(correction(j));
  const double value = sum.value();
  return {value, std::fabs(correction(kCorrections + 1)) + 8.0 * kEps * value};
}

// -- ring generators ---------------------------------------------------------

BoundedValue generator_value(int index) {
  if (index < 0) throw std::invalid_argument("negative generator index");
  if (index == 0) return {kEulerGamma, kEps * kEulerGamma};
  if (index == 1) {
    const BoundedValue pi{kPi, kEps * kPi};
    return pi * pi;
  }
  static std::mutex mutex;
  static std::map<int, BoundedValue> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(index); it != memo.end()) return it->second;
  }
  const BoundedValue v = mzv(Word({generator_weight(index)}), 1e-12);
  std::lock_guard lock(mutex);
  return memo.emplace(index, v).first->second;
}

std::map<std::string, BoundedValue> generator_values(int max_weight) {
  std::map<std::string, BoundedValue> out;
  for (int g = 0; generator_weight(g) <= max_weight; ++g) out.emplace(generator_json_key(g), generator_value(g));
  return out;
}

BoundedValue eval_zeta_poly(const ZetaPoly& p) {
  BoundedValue out{0.0, 0.0};
  for (const auto& [mono, c] : p.terms()) {
    BoundedValue term{1.0, 0.0};
    for (std::size_t g = 0; g < mono.size(); ++g)
      if (mono[g] != 0) term = term * pow(generator_value(static_cast<int>(g)), mono[g]);
    out = out + scale(term, c);
  }
  return out;
}

BoundedValue eval_mzv_poly(const MzvPoly& p, double tol, const MzvOptions& options) {
  BoundedValue out{0.0, 0.0};
  for (const auto& [symbols, c] : p.terms()) {
    BoundedValue term = eval_zeta_poly(c);
    for (const auto& w : symbols) term = term * mzv(w, tol, options);
    out = out + term;
  }
  return out;
}

BoundedValue eval_words(const QsymPoly& q, double tol, const MzvOptions& options) {
  std::vector<Word> words;
  std::vector<Rational> coeffs;
  for (const auto& [w, c] : q.terms()) {
    words.push_back(w);
    coeffs.push_back(c);
  }
  const auto values = mzv_batch(words, tol, options);
  BoundedValue out{0.0, 0.0};
  for (std::size_t i = 0; i < values.size(); ++i) out = out + scale(values[i], coeffs[i]);
  return out;
}

// -- 1/Γ(1+z) ----------------------------------------------------------------

std::vector<BoundedValue> gamma_recip_coeffs(int n) {
  if (n < 0) throw std::invalid_argument("gamma_recip_coeffs: negative order");
  // a_k: coefficients of log(1/Γ(1+z)).
  std::vector<BoundedValue> a(n + 1);
  if (n >= 1) a[1] = generator_value(0);
  for (int k = 2; k <= n; ++k) {
    const double sign = k % 2 == 0 ? -1.0 : 1.0;
    a[k] = scale(zeta_euler_maclaurin(k), sign / k);
  }
  std::vector<BoundedValue> g(n + 1);
  g[0] = {1.0, 0.0};
  for (int m = 1; m <= n; ++m) {
    BoundedValue acc{0.0, 0.0};
    for (int k = 1; k <= m; ++k) acc = acc + scale(a[k] * g[m - k], static_cast<double>(k));
    g[m] = scale(acc, 1.0 / m);
  }
  return g;
}

BoundedValue reciprocal_gamma_product(double z, std::int64_t factors) {
  if (!(std::fabs(z) < 1.0)) throw std::invalid_argument("reciprocal_gamma_product needs |z| < 1");
  if (factors < 2) throw std::invalid_argument("reciprocal_gamma_product needs at least two factors");
  // log(1/Γ(1+z)) = γ z + Σ_n [log(1 + z/n) - z/n]
  Neumaier log_sum;
  for (std::int64_t n = factors; n >= 1; --n) {
    const double w = z / static_cast<double>(n);
    log_sum.add(std::log1p(w) - w);
  }
  const BoundedValue gamma = generator_value(0);
  const double log_value = log_sum.value() + gamma.value * z;
  const double m = static_cast<double>(factors);
  // |log(1+w) - w| <= w²/(2(1-|w|)) and Σ_{n>M} n^{-2} <= 1/M.
  const double omitted = z * z / (2.0 * m * (1.0 - std::fabs(z) / m));
  // Each term carries an absolute error of a few eps·|z|/n from log1p.
  const double rounding = 4.0 * kEps * std::fabs(z) * (1.0 + std::log(m)) + 4.0 * kEps * (std::fabs(log_value) + 1.0);
  const double log_error = omitted + rounding + gamma.bound * std::fabs(z);
  const double value = std::exp(log_value);
  return {value, value * std::expm1(log_error) + 2.0 * kEps * value};
}

namespace {

// max |1/Γ(1+z)| on |z| = radius from the Weierstrass product.
double reciprocal_gamma_circle_max(double radius) {
  double log_max = kEulerGamma * radius;
  const int split = static_cast<int>(std::ceil(2.0 * radius));
  for (int n = 1; n < split; ++n) log_max += std::log1p(radius / n) + radius / n;
  // |w| <= 1/2: |(1+w) e^{-w}| <= exp(|w|²), Σ_{n>=split} n^{-2} <= 1/(split-1)
  log_max += radius * radius / (split - 1.0);
  return std::exp(log_max) * (1.0 + 1e-12);
}

}  // namespace

std::vector<SeriesCheck> validate_gamma_recip_series(const std::vector<double>& points, int degree, double tol) {
  constexpr int kExtended = 40;
  constexpr double kRadius = 3.0;
  if (degree < 0 || degree >= kExtended) throw std::invalid_argument("validate_gamma_recip_series: degree out of range");
  const auto g = gamma_recip_coeffs(kExtended);
  const double circle_max = reciprocal_gamma_circle_max(kRadius);
  std::vector<SeriesCheck> out;
  for (double z : points) {
    SeriesCheck check;
    check.z = z;
    BoundedValue series{0.0, 0.0};
    double zi = 1.0;
    for (int i = 0; i <= degree; ++i) {
      series = series + scale(g[i], zi);
      zi *= z;
    }
    // Truncation: explicit coefficients up to kExtended, Cauchy estimate beyond.
    double truncation = 0.0;
    double zpow = std::pow(std::fabs(z), degree + 1);
    for (int i = degree + 1; i <= kExtended; ++i) {
      truncation += (std::fabs(g[i].value) + g[i].bound) * zpow;
      zpow *= std::fabs(z);
    }
    const double q = std::fabs(z) / kRadius;
    truncation += circle_max * std::pow(q, kExtended + 1) / (1.0 - q);
    series.bound += truncation;
    check.series = series;
    check.product = reciprocal_gamma_product(z);
    check.difference = series.value - check.product.value;
    check.pass = std::fabs(check.difference) <= series.bound + check.product.bound &&
                 std::fabs(check.difference) <= tol;
    out.push_back(check);
  }
  return out;
}

}  // namespace mzvgenus
