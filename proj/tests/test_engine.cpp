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

#include "doctest.h"
#include "dynq/engine.hpp"

using namespace dynq;

namespace {

Coefficient coeff_of(const Terms<Coefficient>& t, const Word& w) {
  for (const auto& [x, c] : t)
    if (x == w) return c;
  return Coefficient();
}

Word t2(int i, int j, int k, int l) { return Word{gen_code(i, j), gen_code(k, l)}; }

}  // namespace

TEST_CASE("straightening of two-letter words") {
  ExactField f;
  Engine<ExactField> e(f, 2);
  auto r1 = e.normalize_word(t2(1, 2, 1, 1));
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].first == t2(1, 1, 1, 2));
  CHECK(r1[0].second == h_fun(1, 2, Side::Mu));

  auto r2 = e.normalize_word(t2(2, 1, 1, 1));
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].second == h_fun(2, 1, Side::Lambda).inv());

  auto r3 = e.normalize_word(t2(2, 2, 1, 1));
  Coefficient gl = g_fun(1, 2, Side::Lambda), gm = g_fun(1, 2, Side::Mu);
  CHECK(coeff_of(r3, t2(1, 1, 2, 2)) == gm / gl);
  CHECK(coeff_of(r3, t2(1, 2, 2, 1)) == -(h_fun(2, 1, Side::Mu) - h_fun(1, 2, Side::Lambda)) / gl);
}

TEST_CASE("xi equals eta for n = 3") {
  ExactField f;
  Engine<ExactField> e(f, 3);
  auto full = range_vec(1, 3);
  for (int r = 1; r <= 3; ++r)
    for (const auto& I : subsets(full, r))
      for (const auto& J : subsets(full, r)) {
        auto x = e.normalize(xi_raw(I, J));
        auto y = e.normalize(eta_raw(I, J));
        CHECK(terms_combine<ExactField>(x, y, Coefficient(-1)).empty());
      }
}
