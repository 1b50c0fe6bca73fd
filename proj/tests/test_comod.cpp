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
#include "dynq/comod.hpp"

using namespace dynq;

TEST_CASE("wedge products") {
  auto w1 = WedgeElement::gen(WedgeTag::W, 2, 1), w2 = WedgeElement::gen(WedgeTag::W, 2, 2);
  CHECK(wedge_mul(w1, w1).is_zero());
  WedgeElement r = wedge_mul(w2, w1);
  REQUIRE(r.terms().size() == 1);
  CHECK(r.terms().begin()->first == WedgeWord{1, 2});
  CHECK(r.terms().begin()->second == -h_fun(2, 1, Side::Lambda));
  auto v1 = WedgeElement::gen(WedgeTag::V, 2, 1), v2 = WedgeElement::gen(WedgeTag::V, 2, 2);
  WedgeElement s = wedge_mul(v1, v2);
  CHECK(s.terms().begin()->first == WedgeWord{2, 1});
  CHECK(s.terms().begin()->second == -h_fun(1, 2, Side::Lambda));
  // coefficient passes the generator with a shift
  WedgeElement t = wedge_mul(w1, WedgeElement::scalar(WedgeTag::W, 2, var_z(1)));
  CHECK(t.terms().begin()->second == var_z(1).shifted(ShiftVector({-1, 0}, {0, 0})));
  CHECK_THROWS(WedgeElement::gen(WedgeTag::W, 2, 3));
}

TEST_CASE("right coaction on generators") {
  Algebra A(2);
  Comodule C(A);
  MixedTensor x = C.coaction_R(WedgeElement::gen(WedgeTag::W, 2, 1));
  CHECK(x.part({1}) == A.gen(1, 1));
  CHECK(x.part({2}) == A.gen(2, 1));
  CHECK(x.parts().size() == 2);
  CHECK(C.minor_oracle({1, 2}, {1, 2}) == A.det());
}

TEST_CASE("coaction respects the wedge relations") {
  for (int n = 2; n <= 3; ++n) {
    Algebra A(n);
    Comodule C(A);
    for (auto tag : {WedgeTag::W, WedgeTag::V}) {
      for (int i = 1; i <= n; ++i) {
        CHECK(C.square_image(tag, i).is_zero());
        for (int j = i + 1; j <= n; ++j) CHECK(C.relation_image(tag, i, j).is_zero());
      }
    }
  }
}

TEST_CASE("minors from the coactions") {
  Algebra A(3);
  Comodule C(A);
  auto full = range_vec(1, 3);
  for (int r = 1; r <= 3; ++r)
    for (const auto& K : subsets(full, r))
      for (const auto& J : subsets(full, r)) {
        CHECK(C.minor_oracle(K, J) == A.minor_xi(K, J));
        CHECK(C.minor_oracle_left(K, J) == A.minor_eta(K, J));
      }
  CHECK(C.minor_oracle(full, full) == A.det());
  CHECK(C.minor_oracle_left(full, full) == A.det());
}

TEST_CASE("coaction is coassociative") {
  for (int n = 2; n <= 3; ++n) {
    Algebra A(n);
    Comodule C(A);
    for (int r = 1; r <= 2; ++r)
      for (const auto& J : subsets(range_vec(1, n), r))
        for (const auto& [l, rr] : C.coassociativity_sides(J)) CHECK(l == rr);
  }
}
