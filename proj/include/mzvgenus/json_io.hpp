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
#ifndef MZVGENUS_JSON_IO_HPP
#define MZVGENUS_JSON_IO_HPP

#include <json.hpp>

#include "mzvgenus/genus.hpp"
#include "mzvgenus/numeric.hpp"
#include "mzvgenus/symfunc.hpp"
#include "mzvgenus/words.hpp"
#include "mzvgenus/zeta_ring.hpp"

namespace mzvgenus {

using Json = nlohmann::ordered_json;

// Rationals are exact "p/q" strings. Parsers throw std::invalid_argument on
// malformed input.

Json to_json(const Rational& q);
Json to_json(const Partition& p);
Json to_json(const Word& w);

/// {"basis":"m|e|p","terms":[{"partition":[...],"coeff":"p/q"}]}
Json to_json(const SymPoly& f);
SymPoly sympoly_from_json(const Json& j);

/// [{"word":[...],"coeff":"p/q"}]
Json to_json(const QsymPoly& q);
QsymPoly qsympoly_from_json(const Json& j);

/// [{"monomial":{"gamma":e0,"pi2":e1,"zeta3":e2,...},"coeff":"p/q"}], zero
/// exponents omitted.
Json to_json(const ZetaPoly& p);
ZetaPoly zetapoly_from_json(const Json& j);

/// {"args":[i1,...,ik],"coeff":"p/q"}
Json to_json(const MzvTerm& t);

/// [{"mzvs":[[...],...],"coeff":<ZetaPoly>}]
Json to_json(const MzvPoly& p);

/// {"value":v,"bound":b}
Json to_json(const BoundedValue& v);

/// {"degree":i,"terms":[{"c_partition":[...],"coeff":<ZetaPoly>}]}
Json to_json(const GenusPolynomial& q);
/// {"degree":i,"terms":[{"c_partition":[...],"mzv_terms":[<MzvTerm>...]}]}
Json to_json(const CyGenusPolynomial& q);

}  // namespace mzvgenus

#endif  // MZVGENUS_JSON_IO_HPP
