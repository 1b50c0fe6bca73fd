/*
 * Copyright 2026 The dynq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// dynq: compute dynamical minors and Pfaffians, run verification suites.
// Exit status: 0 pass, 1 verification failure, 2 usage error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dynq/pfaff.hpp"
#include "dynq/verify.hpp"
#include "json.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr const char* kComputeSchema = "dynq.compute/1";

std::vector<int> parse_indices(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw dynq::UsageError("bad index list '" + s + "'");
    }
    if (used != item.size()) throw dynq::UsageError("bad index list '" + s + "'");
    out.push_back(v);
  }
  return out;
}

struct Options {
  int n = 0, m = 0, t = -1;
  std::string I, J, mode = "exact";
  std::uint64_t seed = dynq::kDefaultSeed;
  int trials = 2;
  int words = 500;
  bool json = false, force = false, timings = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "matrix size, or number of blocks for Pfaffians");
  cmd->add_option("--m", o.m, "block size for (hyper-)Pfaffians");
  cmd->add_option("--I", o.I, "comma-separated row indices");
  cmd->add_option("--J", o.J, "comma-separated column indices");
  cmd->add_flag("--json", o.json, "emit JSON");
  cmd->add_flag("--force", o.force, "lift the exact-mode size guards");
}

int compute(const std::string& object, const Options& o) {
  using namespace dynq;
  std::string text;
  if (object == "det" || object == "minor") {
    int n = o.n ? o.n : 2;
    if (n < 1 || n > kMaxN) throw UsageError("--n must lie in [1, " + std::to_string(kMaxN) + "]");
    if (n > 4 && !o.force) throw UsageError("exact mode refuses n > 4 without --force");
    Algebra A(n);
    if (object == "det") {
      text = A.det().str();
    } else {
      auto I = parse_indices(o.I), J = parse_indices(o.J);
      if (I.empty() || I.size() != J.size()) throw UsageError("minor needs --I and --J of equal length");
      for (int x : I)
        if (x < 1 || x > n) throw UsageError("--I index out of range");
      for (int x : J)
        if (x < 1 || x > n) throw UsageError("--J index out of range");
      text = A.minor_xi(I, J).str();
    }
  } else if (object == "pf" || object == "pf-tilde" || object == "hyper-pf") {
    int m = o.m ? o.m : object == "hyper-pf" ? 3 : 2;
    int n = o.n ? o.n : 2;
    if (m < 2 || n < 1) throw UsageError("need --m >= 2 and --n >= 1");
    if (object != "hyper-pf" && m != 2) throw UsageError("pf and pf-tilde use m = 2; see hyper-pf");
    if (m * n > 6 && !o.force) throw UsageError("exact mode refuses m*n > 6 without --force");
    auto I = parse_indices(o.I);
    bool tilde = object == "pf-tilde";
    PfSum s = tilde ? pf_tilde(m, n, I) : pf(m, n, I);
    text = s.str();
  } else {
    throw UsageError("unknown object '" + object + "'");
  }
  if (o.json) {
    nlohmann::ordered_json j;
    j["schema"] = kComputeSchema;
    j["object"] = object;
    j["n"] = o.n;
    if (o.m) j["m"] = o.m;
    j["value"] = text;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return 0;
}

int verify(const std::string& suite, const Options& o) {
  using namespace dynq;
  SuiteParams p;
  p.n = o.n;
  p.m = o.m ? o.m : 2;
  p.t = o.t;
  if (o.mode == "exact")
    p.mode = Mode::Exact;
  else if (o.mode == "randomized")
    p.mode = Mode::Randomized;
  else
    throw UsageError("--mode must be exact or randomized");
  p.seed = o.seed;
  p.trials = o.trials;
  p.words = o.words;
  p.force = o.force;
  VerificationReport rep = run_suite(suite, p);
  std::cout << (o.json ? rep.json(o.timings) : rep.text(o.timings));
  return rep.pass() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamical quantum minors, Pfaffians and identity checks"};
  app.require_subcommand(1);
  Options o;
  std::string object, suite;

  auto* c = app.add_subcommand("compute", "print det, minor, pf, pf-tilde or hyper-pf");
  c->add_option("object", object, "det|minor|pf|pf-tilde|hyper-pf")->required();
  add_common(c, o);

  auto* v = app.add_subcommand("verify", "run a verification suite");
  v->add_option("suite", suite, "suite name or 'all'")->required();
  add_common(v, o);
  v->add_option("--t", o.t, "Pfaffian Laplace split size (default: all)");
  v->add_option("--mode", o.mode, "exact|randomized");
  v->add_option("--seed", o.seed, "seed for sample points and corpora");
  v->add_option("--trials", o.trials, "sample points per check in randomized mode");
  v->add_option("--words", o.words, "confluence corpus size");
  v->add_flag("--timings", o.timings, "include wall times in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  try {
    if (c->parsed()) return compute(object, o);
    return verify(suite, o);
  } catch (const dynq::UsageError& e) {
    std::cerr << "dynq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "dynq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "dynq: internal error: " << e.what() << "\n";
    return kExitFail;
  }
}
