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

#include <set>

#include "doctest.h"
#include "dynq/pfaff.hpp"

using namespace dynq;

namespace {

Coefficient mh(int i, int j) { return -h_fun(i, j, Side::Lambda); }

Coefficient coeff_of(const PfSum& s, const BWord& w) {
  auto it = s.terms.find(w);
  return it == s.terms.end() ? Coefficient() : it->second;
}

}  // namespace

TEST_CASE("small pfaffians") {
  CHECK(pf(2, 1).str() == "b[1,2]");
  CHECK(pf(3, 1).str() == "b[1,2,3]");
  CHECK(pf_tilde(2, 1).str() == "bt[2,1]");
  PfSum p = pf(2, 2);
  CHECK(p.terms.size() == 6);
  CHECK(coeff_of(p, {{1, 2}, {3, 4}}) == Coefficient(1));
  CHECK(coeff_of(p, {{1, 3}, {2, 4}}) == mh(3, 2));
  CHECK(coeff_of(p, {{1, 4}, {2, 3}}) == mh(4, 2) * mh(4, 3));
  CHECK(coeff_of(p, {{3, 4}, {1, 2}}) == mh(3, 1) * mh(3, 2) * mh(4, 1) * mh(4, 2));
  PfSum pt = pf_tilde(2, 2);
  CHECK(pt.terms.size() == 6);
  CHECK(coeff_of(pt, {{4, 3}, {2, 1}}) == Coefficient(1));
  // tilde sign pairs the smaller index first
  CHECK(coeff_of(pt, {{4, 2}, {3, 1}}) == mh(2, 3));
  CHECK_THROWS(pf(2, 2, {1, 2, 3}));
  CHECK_THROWS(pf(2, 2, {2, 1}));
  CHECK(pf(2, 2, {2, 4}).str() == "b[2,4]");
}

TEST_CASE("every pfaffian term uses each index once") {
  for (int m = 2; m <= 3; ++m)
    for (int n = 1; n <= (m == 2 ? 3 : 2); ++n)
      for (auto v : {PfVariant::Plain, PfVariant::Tilde}) {
        PfSum p = v == PfVariant::Plain ? pf(m, n) : pf_tilde(m, n);
        for (const auto& [w, c] : p.terms) {
          std::multiset<int> seen;
          for (const auto& g : w) {
            CHECK(int(g.size()) == m);
            seen.insert(g.begin(), g.end());
          }
          auto full = range_vec(1, m * n);
          CHECK(std::vector<int>(seen.begin(), seen.end()) == full);
        }
      }
}

TEST_CASE("pfaffian laplace expansion") {
  for (auto v : {PfVariant::Plain, PfVariant::Tilde}) {
    for (int n = 1; n <= 3; ++n)
      for (int t = 0; t <= n; ++t) {
        auto [l, r] = pf_laplace_check(2, n, t, v);
        CHECK(l == r);
      }
    auto [l3, r3] = pf_laplace_check(3, 2, 1, v);
    CHECK(l3 == r3);
  }
  CHECK_THROWS(pf_laplace_check(2, 2, 3, PfVariant::Plain));
}

TEST_CASE("sampled pfaffian laplace agrees") {
  ModField f(sample_mod_point(11, 6, 12));
  Verdict v;
  for (auto var : {PfVariant::Plain, PfVariant::Tilde}) {
    auto [l, r] = pf_laplace_sides(f, 3, 2, 1, var);
    compare_pf(f, v, l, r, "m=3");
  }
  CHECK(v.pass());
  CHECK(v.bound < 1e-12);
}

TEST_CASE("exterior power of omega") {
  for (int n = 1; n <= 2; ++n)
    for (auto v : {PfVariant::Plain, PfVariant::Tilde}) {
      OmegaTerms o = omega_power(n, n, v);
      WedgeWord top = range_vec(1, 2 * n);
      if (v == PfVariant::Tilde) std::reverse(top.begin(), top.end());
      PfSum p = v == PfVariant::Plain ? pf(2, n) : pf_tilde(2, n);
      std::map<BWord, Coefficient> bpart;
      for (const auto& [key, c] : o) {
        CHECK(key.first == top);
        bpart[key.second] = c;
      }
      CHECK(bpart == p.terms);
    }
  CHECK(omega_power(2, 3, PfVariant::Plain).empty());
}

TEST_CASE("c entries") {
  Algebra A2(2);
  PfTensor c = c_entry(A2, 2, {1, 2}, PfVariant::Plain);
  REQUIRE(c.parts.size() == 1);
  CHECK(c.parts.begin()->second == A2.det());
  Algebra A4(4);
  CHECK(c_entry(A4, 2, {1, 2}, PfVariant::Plain).parts.size() == 6);
  PfTensor ct = c_entry(A4, 2, {1, 2}, PfVariant::Tilde);
  CHECK(ct.parts.size() == 6);
  CHECK(ct.parts.count({{4, 3}}) == 1);
  CHECK(ct.parts.at({{4, 3}}) == A4.minor_xi({3, 4}, {1, 2}));
  CHECK_THROWS(c_entry(A4, 2, {1}, PfVariant::Plain));
}

TEST_CASE("transform identity, smallest case exact") {
  Algebra A(2);
  for (auto v : {PfVariant::Plain, PfVariant::Tilde}) {
    auto [l, r] = pf_transform_check(A, 2, 1, v);
    CHECK(l == r);
    REQUIRE(l.parts.size() == 1);
    CHECK(l.parts.begin()->second == A.minor_xi({1, 2}, {1, 2}));
  }
  Algebra A3(3);
  auto [l3, r3] = pf_transform_check(A3, 3, 1, PfVariant::Plain);
  CHECK(l3 == r3);
  CHECK_THROWS(pf_transform_check(A3, 2, 2, PfVariant::Plain));
}

TEST_CASE("transform identity sampled at m=2, n=2") {
  for (auto v : {PfVariant::Plain, PfVariant::Tilde}) {
    ModField f(sample_mod_point(5, 4, 12));
    Engine<ModField> e(f, 4);
    Verdict r = pf_transform_verdict(e, 2, 2, v);
    CHECK(r.pass());
    CHECK(r.checked == 36);
    CHECK(r.bound < 1e-12);
  }
}

TEST_CASE("pfaffian signs approach the classical ones as q -> 1") {
  PfSum p = pf(2, 2);
  const std::map<BWord, int> classical = {{{{1, 2}, {3, 4}}, 1},  {{{1, 3}, {2, 4}}, -1}, {{{1, 4}, {2, 3}}, 1},
                                          {{{3, 4}, {1, 2}}, 1},  {{{2, 4}, {1, 3}}, -1}, {{{2, 3}, {1, 4}}, 1}};
  double prev = 1e9;
  for (int k : {10, 100, 1000, 10000, 100000}) {
    std::array<mpq_class, kSlots> x;
    for (auto& s : x) s = 0;
    x[kQSlot] = mpq_class(k + 1, k);
    for (int i = 1; i <= 4; ++i) x[var_slot(Family::Z, i)] = mpq_class(i + 1);
    double worst = 0;
    for (const auto& [w, c] : p.terms) worst = std::max(worst, std::abs(c.eval(x).get_d() - classical.at(w)));
    CHECK(worst < prev);
    prev = worst;
  }
  CHECK(prev < 1e-3);
}
