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
#ifndef MZVGENUS_RATIONAL_HPP
#define MZVGENUS_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mzvgenus {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// mpq_class(p, q) does not reduce; containers store reduced values only.
inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

/// Serializes as "p/q" with q >= 1, also for integers ("3/1").
std::string to_fraction_string(const Rational& q);

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_fraction(std::string_view text);

/// Human rendering: "3", "-1/2".
std::string to_display_string(const Rational& q);

}  // namespace mzvgenus

#endif  // MZVGENUS_RATIONAL_HPP
