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

// Acceptance run: one line per criterion. Arguments select criteria by
// number; no arguments runs all of them.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "dynq/verify.hpp"

using namespace dynq;

namespace {

struct Run {
  std::string suite;
  SuiteParams p;
  double budget = 0;  // seconds; 0 means no limit of its own
};

struct Criterion {
  int id;
  std::string what;
  double budget;  // seconds for all runs together; 0 means none
  std::vector<Run> runs;
};

SuiteParams exact(int n, int m = 2) {
  SuiteParams p;
  p.n = n;
  p.m = m;
  return p;
}

SuiteParams sampled(int n, int m = 2, int trials = 2) {
  SuiteParams p = exact(n, m);
  p.mode = Mode::Randomized;
  p.trials = trials;
  return p;
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> out;
  out.push_back({1, "defining relations, n=3", 10, {{"relations", exact(3)}}});
  SuiteParams conf = exact(3);
  conf.words = 500;
  out.push_back({2, "confluence, 500 words, two strategies, n=3", 60, {{"confluence", conf}}});
  out.push_back({3, "xi = eta and rho-independence, n=3", 60, {{"xi-eta", exact(3)}}});
  out.push_back({4, "Laplace expansions, all splittings, n=3", 120, {{"laplace", exact(3)}}});
  out.push_back({5,
                 "cofactor identities, four variants, n<=3",
                 120,
                 {{"cofactor", exact(1)}, {"cofactor", exact(2)}, {"cofactor", exact(3)}}});
  out.push_back({6,
                 "centrality of det, exact n<=3, sampled n=4 at 20 points",
                 0,
                 {{"centrality", exact(1)},
                  {"centrality", exact(2)},
                  {"centrality", exact(3)},
                  {"centrality", sampled(4, 2, 20)}}});
  out.push_back({7, "bialgebra structure, n=3", 0, {{"coalgebra", exact(3)}}});
  out.push_back({8, "coactions against the exterior oracle, n=3", 0, {{"coaction-oracle", exact(3)}}});
  SuiteParams pfl = exact(2, 2);
  out.push_back({9, "Pfaffian Laplace, m=2 n=2, all t, with Omega powers", 60, {{"pf-laplace", pfl}}});
  out.push_back({10,
                 "Pfaffian transform, exact m=2 n=2, sampled m=2 n=3 and m=3 n=2",
                 0,
                 {{"pf-transform", exact(2, 2), 900},
                  {"pf-transform", sampled(3, 2), 300},
                  {"pf-transform", sampled(2, 3), 300}}});
  SuiteParams hyp = sampled(2, 3);
  hyp.t = 1;
  out.push_back({11, "hyper-Pfaffian Laplace, m=3 n=2 t=1, sampled", 60, {{"pf-laplace", hyp}}});
  out.push_back({12, "fraction-free antipode, n<=3", 0, {{"antipode", exact(3)}}});
  out.push_back({13, "coefficient field suite", 30, {{"coeff", exact(3)}}});
  return out;
}

double now() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> pick;
  for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
  int failed = 0, ran = 0;
  for (const auto& c : criteria()) {
    if (!pick.empty() && !pick.count(c.id)) continue;
    ++ran;
    bool ok = true;
    std::string notes;
    double total = 0;
    for (const auto& r : c.runs) {
      double t0 = now();
      VerificationReport rep;
      try {
        rep = run_suite(r.suite, r.p);
      } catch (const std::exception& e) {
        ok = false;
        notes += "  " + r.suite + ": error: " + e.what() + "\n";
        continue;
      }
      double dt = now() - t0;
      total += dt;
      for (const auto& ch : rep.checks)
        if (!ch.pass) {
          ok = false;
          notes += "  " + ch.suite + "/" + ch.name + " n=" + std::to_string(ch.n) + " failed";
          if (!ch.counterexample.empty()) notes += ": " + ch.counterexample;
          notes += "\n";
        }
      if (r.budget > 0 && dt > r.budget) {
        ok = false;
        char buf[160];
        std::snprintf(buf, sizeof buf, "  %s n=%d m=%d took %.1fs, budget %.0fs\n", r.suite.c_str(), r.p.n, r.p.m, dt,
                      r.budget);
        notes += buf;
      }
    }
    if (c.budget > 0 && total > c.budget) {
      ok = false;
      char buf[96];
      std::snprintf(buf, sizeof buf, "  total %.1fs over budget %.0fs\n", total, c.budget);
      notes += buf;
    }
    std::printf("criterion %d: %s  %s (%.1fs)\n", c.id, ok ? "PASS" : "FAIL", c.what.c_str(), total);
    if (!notes.empty()) std::printf("%s", notes.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("%d of %d criteria passed\n", ran - failed, ran);
  return failed ? 1 : 0;
}
