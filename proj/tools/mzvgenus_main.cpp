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
// Command-line front end: Q_i tables, MZV evaluation, stuffle products and
// the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
// 3 divergent MZV.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "mzvgenus/genus.hpp"
#include "mzvgenus/json_io.hpp"
#include "mzvgenus/numeric.hpp"
#include "mzvgenus/verify.hpp"
#include "mzvgenus/words.hpp"

namespace {

using namespace mzvgenus;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDivergent = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// "6,2" -> z_6 z_2; "" -> empty word.
Word parse_word(const std::string& text) {
  std::vector<int> letters;
  if (text.empty()) return Word{};
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("cannot parse word literal '" + text + "': expected comma-separated positive integers");
    int value = 0;
    try {
      value = std::stoi(item);
    } catch (const std::out_of_range&) {
      throw UsageError("subscript out of range in '" + text + "'");
    }
    if (value < 1) throw UsageError("subscripts must be >= 1 in '" + text + "'");
    letters.push_back(value);
  }
  if (text.back() == ',') throw UsageError("cannot parse word literal '" + text + "': trailing comma");
  return Word(std::move(letters));
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string mzv_name(const Word& w, bool ascii) {
  std::string args;
  for (int i : w.letters()) args += (args.empty() ? "" : ",") + std::to_string(i);
  return (ascii ? "zeta(" : "ζ(") + args + ")";
}

struct Options {
  std::string format = "text";
  bool ascii = false;
  int max_degree = 0;
  bool cy = false;
  int budget = kDefaultGenusBudget;
  std::string args;
  double tol = 1e-8;
  std::int64_t max_cutoff = MzvOptions{}.max_cutoff;
  std::string left, right;
  std::string suite;
};

int cmd_qgenus(const Options& o) {
  if (o.budget < 1) throw UsageError("--budget must be positive");
  if (o.max_degree < 1 || o.max_degree > o.budget)
    throw UsageError("--max must be in 1.." + std::to_string(o.budget) + " (got " + std::to_string(o.max_degree) + ")");
  Json all = Json::array();
  std::string text;
  if (o.cy) {
    for (int i = 2; i <= o.max_degree; ++i) {
      const auto q = q_genus_cy(i, o.budget);
      all.push_back(to_json(q));
      text += q.to_string(o.ascii) + "\n";
    }
  } else {
    for (int i = 1; i <= o.max_degree; ++i) {
      const auto q = q_genus(i, o.budget);
      all.push_back(to_json(q));
      text += q.to_string(o.ascii) + "\n";
    }
  }
  std::cout << (o.format == "json" ? all.dump(2) + "\n" : text);
  return 0;
}

int cmd_mzv(const Options& o) {
  const Word w = parse_word(o.args);
  if (w.empty()) throw UsageError("--args needs at least one subscript");
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  if (w.front() < 2) {
    std::cerr << "error: " << mzv_name(w, o.ascii)
              << " diverges; the series converges only when the first argument i_1 > 1\n";
    return kExitDivergent;
  }
  MzvOptions options;
  options.max_cutoff = o.max_cutoff;
  BoundedValue v;
  try {
    v = mzv(w, o.tol, options);
  } catch (const CutoffBudgetError& e) {
    throw UsageError(e.what());
  }
  if (o.format == "json") {
    std::cout << to_json(v).dump() << "\n";
  } else {
    std::cout << mzv_name(w, o.ascii) << " = " << format_double(v.value) << (o.ascii ? " +/- " : " ± ")
              << format_double(v.bound) << "\n";
  }
  return 0;
}

int cmd_stuffle(const Options& o) {
  const QsymPoly product = stuffle(parse_word(o.left), parse_word(o.right));
  std::cout << (o.format == "json" ? to_json(product).dump() : product.to_string(o.ascii)) << "\n";
  return 0;
}

int cmd_verify(const Options& o) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end())
    throw UsageError("unknown suite '" + o.suite + "' (expected all, symbolic, numeric or words)");
  const Report report = run_suite(o.suite, o.ascii);
  std::cout << (o.format == "json" ? report.to_json().dump(2) + "\n" : report.to_text());
  return report.pass() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicative sequence of 1/Γ(1+z) in multiple zeta values", "mzvgenus"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--ascii", o.ascii, "Render gamma, pi^2, zeta(3) in ASCII");
  };

  auto* qgenus = app.add_subcommand("qgenus", "Print Q_1..Q_N with coefficients in γ, π² and odd zeta values");
  qgenus->add_option("--max", o.max_degree, "Largest degree N")->required();
  qgenus->add_flag("--cy", o.cy, "Only the c1 = 0 part, as sums of multiple zeta values");
  qgenus->add_option("--budget", o.budget, "Largest degree accepted")->capture_default_str();
  add_format(qgenus);

  auto* mzv_cmd = app.add_subcommand("mzv", "Evaluate ζ(i_1,...,i_k) with an error bound");
  mzv_cmd->add_option("--args", o.args, "Comma-separated arguments, e.g. 2,2")->required();
  mzv_cmd->add_option("--tol", o.tol, "Absolute error tolerance")->capture_default_str();
  mzv_cmd->add_option("--max-cutoff", o.max_cutoff, "Largest summation cutoff")->capture_default_str();
  add_format(mzv_cmd);

  auto* stuffle_cmd = app.add_subcommand("stuffle", "Quasi-shuffle product of two words");
  stuffle_cmd->add_option("--left", o.left, "Word literal, e.g. 6,2 for z_6z_2")->required();
  stuffle_cmd->add_option("--right", o.right, "Word literal")->required();
  add_format(stuffle_cmd);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suite, "all, symbolic, numeric or words")->required();
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == qgenus) return cmd_qgenus(o);
    if (active == mzv_cmd) return cmd_mzv(o);
    if (active == stuffle_cmd) return cmd_stuffle(o);
    return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << active->help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
