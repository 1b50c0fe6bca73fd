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

#include <random>

#include "doctest.h"
#include "dynq/engine.hpp"
#include "dynq/factored.hpp"

using namespace dynq;

namespace {

// random products and quotients of h values, plus small polynomials
Coefficient random_value(std::mt19937_64& rng, int n) {
  Coefficient c(long(rng() % 5) + 1);
  for (int k = int(rng() % 4); k > 0; --k) {
    int i = 1 + int(rng() % unsigned(n)), j = 1 + int(rng() % unsigned(n));
    if (i == j) continue;
    Family fam = rng() % 2 ? Family::Z : Family::U;
    Coefficient h = h_shifted(i, j, fam, int(rng() % 5) - 2);
    c = rng() % 2 ? c * h : c / h;
  }
  if (rng() % 3 == 0) c = c + var_z(1 + int(rng() % unsigned(n)));
  return rng() % 2 ? c : -c;
}

}  // namespace

TEST_CASE("factored values round-trip to canonical coefficients") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    Coefficient c = random_value(rng, 3);
    CHECK(FactoredValue::from_coefficient(c).coefficient() == c);
  }
  CHECK(FactoredValue().coefficient() == Coefficient());
  CHECK(FactoredValue(-4).coefficient() == Coefficient(-4));
}

TEST_CASE("factored arithmetic agrees with exact arithmetic") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 300; ++k) {
    Coefficient a = random_value(rng, 3), b = random_value(rng, 3);
    FactoredValue fa = FactoredValue::from_coefficient(a), fb = FactoredValue::from_coefficient(b);
    CHECK((fa + fb).coefficient() == a + b);
    CHECK((fa - fb).coefficient() == a - b);
    CHECK((fa * fb).coefficient() == a * b);
    CHECK(inv(fa).coefficient() == a.inv());
    CHECK((fa - fa).is_zero());
    CHECK((fa * inv(fa)).coefficient() == Coefficient(1));
  }
}

TEST_CASE("inverse of zero is rejected") { CHECK_THROWS_AS(inv(FactoredValue()), std::domain_error); }

TEST_CASE("engine over factored values matches the exact engine") {
  FactoredField ff;
  ExactField fx;
  Engine<FactoredField> ef(ff, 3);
  Engine<ExactField> ex(fx, 3);
  std::mt19937_64 rng(13);
  for (int k = 0; k < 40; ++k) {
    Word w;
    for (int p = 1 + int(rng() % 4); p > 0; --p) w.push_back(gen_code(1 + int(rng() % 3), 1 + int(rng() % 3)));
    auto a = ef.normalize_word(w);
    auto b = ex.normalize_word(w);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].first == b[i].first);
      CHECK(a[i].second.coefficient() == b[i].second);
    }
  }
  auto full = range_vec(1, 3);
  auto d = ef.normalize(xi_raw(full, full));
  auto e = ex.normalize(xi_raw(full, full));
  REQUIRE(d.size() == e.size());
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(d[i].second.coefficient() == e[i].second);
}

TEST_CASE("rewriting strategies agree with the memoized normal form") {
  FactoredField f;
  Engine<FactoredField> e(f, 2);
  std::mt19937_64 rng(14);
  for (int k = 0; k < 30; ++k) {
    Word w;
    for (int p = 1 + int(rng() % 4); p > 0; --p) w.push_back(gen_code(1 + int(rng() % 2), 1 + int(rng() % 2)));
    auto m = e.normalize_word(w);
    auto l = e.normalize_by_strategy(w, [](const std::vector<std::size_t>& pos) { return pos.front(); });
    auto r = e.normalize_by_strategy(w, [](const std::vector<std::size_t>& pos) { return pos.back(); });
    REQUIRE(l.size() == m.size());
    REQUIRE(r.size() == m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      CHECK((l[i].second - m[i].second).is_zero());
      CHECK((r[i].second - m[i].second).is_zero());
    }
  }
}
