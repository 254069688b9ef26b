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
#ifndef MZVGENUS_VERIFY_HPP
#define MZVGENUS_VERIFY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "mzvgenus/json_io.hpp"

namespace mzvgenus {

struct CheckRecord {
  std::string id;
  std::string description;
  bool pass = false;
  std::string expected;
  std::string actual;
  double bound = 0.0;  // 0 for exact checks
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> checks;

  bool pass() const;
  Json to_json() const;
  std::string to_text() const;
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs "all", "symbolic", "numeric" or "words". Throws std::invalid_argument
/// for any other name.
Report run_suite(std::string_view suite, bool ascii = false);

}  // namespace mzvgenus

#endif  // MZVGENUS_VERIFY_HPP
