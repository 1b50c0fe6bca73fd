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
#include "dynq/falg.hpp"

using namespace dynq;

namespace {

Word w2(int i, int j, int k, int l) { return Word{gen_code(i, j), gen_code(k, l)}; }

// independent oracle: det for n = 2 from the printed xi sum with rho = id,
// expanded by hand: t11 t22 + S(swap) t21 t12 with S(swap) = -h(l2 - l1)
Element det2_oracle(Algebra& A) {
  return A.normalize({{Coefficient(1), w2(1, 1, 2, 2)}, {-h_fun(2, 1, Side::Lambda), w2(2, 1, 1, 2)}});
}

}  // namespace

TEST_CASE("generators and scalars") {
  Algebra A(2);
  CHECK(A.gen(1, 1).str() == "t[1,1]");
  Element s = A.scalar_l(h_fun(1, 2, Side::Lambda));
  Coefficient q = var_q(), z1 = var_z(1), z2 = var_z(2);
  CHECK(s.coeff(Word()) == (q * z1 - q.inv() * z2) / (z1 - z2));
  Element a = A.mul(A.scalar_l(var_z(1)), A.scalar_r(var_z(2)));
  Element b = A.mul(A.scalar_r(var_z(2)), A.scalar_l(var_z(1)));
  CHECK(a == b);
  CHECK(a.coeff(Word()) == var_z(1) * var_u(2));
  CHECK_THROWS(A.gen(3, 1));
}

TEST_CASE("coefficients move left through words") {
  Algebra A(2);
  CHECK(A.move_coeff_left(Word(1, gen_code(1, 1)), var_z(1)) == var_q() * var_q() * var_z(1));
  CHECK(A.move_coeff_left(Word(), var_z(2)) == var_z(2));
  Word m = w2(1, 2, 2, 1);
  ShiftVector s({-1, -1}, {-1, -1});
  Coefficient f = h_fun(1, 2, Side::Lambda) * var_u(1);
  CHECK(A.move_coeff_left(m, f) == f.shifted(s));
  // gen * scalar = moved scalar * gen
  Element lhs = A.mul(A.gen(1, 1), A.scalar_l(var_z(1)));
  CHECK(lhs == A.gen(1, 1).scaled(A.move_coeff_left(Word(1, gen_code(1, 1)), var_z(1))));
}

TEST_CASE("determinant examples") {
  Algebra A1(1);
  CHECK(A1.det().str() == "t[1,1]");
  Algebra A(2);
  CHECK(A.det() == det2_oracle(A));
  CHECK(A.det().size() == 2);
}

TEST_CASE("element text round trip") {
  Algebra A(3);
  for (const auto& e : {A.det(), A.minor_xi({1, 3}, {2, 3}), A.zero(), A.one(), A.scalar_r(var_z(1))}) {
    Element back = Element::parse(3, e.str());
    CHECK(back == e);
  }
  CHECK_THROWS(Element::parse(3, "t[2,1] t[1,1]"));
}

TEST_CASE("distributivity and grading of products") {
  Algebra A(3);
  std::mt19937 rng(7);
  auto rnd_word = [&](int len) {
    Word w;
    for (int k = 0; k < len; ++k) w.push_back(gen_code(int(rng() % 3) + 1, int(rng() % 3) + 1));
    return w;
  };
  for (int trial = 0; trial < 10; ++trial) {
    Word wa = rnd_word(2), wb = rnd_word(2), wc = rnd_word(1);
    Element a = A.normalize_word(wa), b = A.normalize_word(wb).scaled(var_u(2)), c = A.normalize_word(wc);
    CHECK(A.mul(a + b, c) == A.mul(a, c) + A.mul(b, c));
    CHECK(A.mul(A.mul(a, b), c) == A.mul(a, A.mul(b, c)));
    auto deg = bidegree(wa + wc, 3);
    Element ac = A.mul(a, c);
    for (const auto& [w, x] : ac.terms()) CHECK(bidegree(w, 3) == deg);
  }
}

TEST_CASE("minor rho independence") {
  Algebra A(3);
  auto full = range_vec(1, 3);
  for (int r = 2; r <= 3; ++r)
    for (const auto& I : subsets(full, r))
      for (const auto& J : subsets(full, r)) {
        Element x = A.minor_xi(I, J), y = A.minor_eta(I, J);
        for (const auto& rho : all_permutations(r)) {
          CHECK(A.minor_xi(I, J, rho) == x);
          CHECK(A.minor_eta(I, J, rho) == y);
        }
      }
  CHECK_THROWS(A.minor_xi({1, 2}, {1}));
}

TEST_CASE("laplace expansions") {
  Algebra A(2);
  auto [l, r] = A.laplace({1, 2}, {1}, {2});
  CHECK(l == A.det());
  CHECK(r == A.det());
  auto [l0, r0] = A.laplace({1, 2}, {1, 2}, {});
  CHECK(l0 == A.det());
  CHECK(r0 == A.det());
  Algebra B(3);
  auto [l3, r3] = B.laplace({1, 2, 3}, {1}, {2, 3});
  CHECK(l3 == r3);
  auto [l4, r4] = B.laplace({1, 2, 3}, {2}, {1, 3}, LaplaceKind::Rows);
  CHECK(l4 == r4);
  CHECK_THROWS(B.laplace({1, 2}, {1}, {1}));
}

TEST_CASE("cofactor identities") {
  Algebra A1(1);
  for (int v = 1; v <= 4; ++v) {
    auto [l, r] = A1.cofactor_identity(1, 1, v);
    CHECK(l == A1.gen(1, 1));
    CHECK(r == A1.gen(1, 1));
  }
  Algebra A(2);
  auto [l, r] = A.cofactor_identity(1, 2, 1);
  CHECK(l.is_zero());
  CHECK(r.is_zero());
  Algebra B(3);
  for (int v = 1; v <= 4; ++v) {
    auto [l3, r3] = B.cofactor_identity(2, 2, v);
    CHECK(l3 == r3);
  }
}

TEST_CASE("coproduct and counit") {
  Algebra A(2);
  TensorElement d = A.coproduct(A.gen(1, 1));
  TensorElement expect(2, 2);
  expect.add({Word(1, gen_code(1, 1)), Word(1, gen_code(1, 1))}, Coefficient(1));
  expect.add({Word(1, gen_code(1, 2)), Word(1, gen_code(2, 1))}, Coefficient(1));
  CHECK(d == expect);
  CHECK(A.counit(A.gen(1, 2)).is_zero());
  CHECK(A.counit(A.det()) == ShiftOperatorSum(Coefficient(1), ShiftVector({-1, -1}, {0, 0})));
  CHECK(A.coproduct(A.det()) == A.tensor({{A.det(), A.det()}}));
  // coefficients: Delta(f(lambda)) = f (x) 1, Delta(f(mu)) = 1 (x) f
  TensorElement fl = A.coproduct(A.scalar_l(var_z(1)));
  TensorElement fm = A.coproduct(A.scalar_r(var_z(1)));
  CHECK(fl == A.tensor({{A.scalar_l(var_z(1)), A.one()}}));
  CHECK(fm == A.tensor({{A.one(), A.scalar_r(var_z(1))}}));
}

TEST_CASE("shift operator composition") {
  ShiftVector s({1, 0}, {0, 0}), t({0, 2}, {0, 0});
  ShiftOperatorSum a(var_z(1), s), b(var_z(1) * var_z(2), t);
  ShiftOperatorSum ab = a * b;
  REQUIRE(ab.terms().size() == 1);
  CHECK(ab.terms()[0].first == var_z(1) * (var_z(1) * var_z(2)).shifted(s));
  CHECK(ab.terms()[0].second == s + t);
  CHECK((a + (-a)).is_zero());
}

TEST_CASE("localization at det") {
  Algebra A(2);
  LocElement d{A.det(), 1};
  LocElement m = A.minimize(d);
  CHECK(m.det_power == 0);
  CHECK(m.body == A.one());
  LocElement e{A.gen(1, 2), 1};
  LocElement p = A.loc_mul(e, LocElement{A.det(), 0});
  CHECK(p.det_power == 0);
  CHECK(p.body == A.gen(1, 2));
  LocElement x{A.gen(1, 1), 0}, y{A.gen(2, 2), 0};
  CHECK(A.loc_mul(x, y).body == A.mul(A.gen(1, 1), A.gen(2, 2)));
  LocElement s = A.loc_add(e, LocElement{A.gen(2, 1), 0});
  CHECK(s.det_power == 1);
  CHECK_FALSE(A.minimize(e).det_power == 0);
  Algebra A1(1);
  LocElement s11 = A1.antipode_gen(1, 1);
  CHECK(s11.det_power == 1);
  CHECK(s11.body == A1.one());
  CHECK(A1.loc_mul(s11, LocElement{A1.gen(1, 1), 0}).body == A1.one());
}

TEST_CASE("antipode times generators gives the identity") {
  for (int n = 1; n <= 3; ++n) {
    Algebra A(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        LocElement acc{A.zero(), 0};
        for (int k = 1; k <= n; ++k) acc = A.loc_add(acc, A.loc_mul(A.antipode_gen(i, k), LocElement{A.gen(k, j), 0}));
        CHECK(acc.det_power == 0);
        CHECK(acc.body == (i == j ? A.one() : A.zero()));
      }
  }
}

TEST_CASE("r matrix") {
  RMatrix lit = r_matrix(2, RMode::Literal), std_ = r_matrix(2, RMode::Standard);
  CHECK(lit.at(1, 1, 1, 1) == var_q());
  CHECK(lit.at(1, 1, 2, 2) == Coefficient(1) + h_fun(1, 2, Side::Lambda));
  CHECK(lit.at(2, 2, 1, 1) == g_fun(2, 1, Side::Lambda) + h_fun(2, 1, Side::Lambda));
  CHECK(std_.at(1, 2, 2, 1) == h_fun(1, 2, Side::Lambda));
  CHECK(std_.at(1, 1, 2, 2) == Coefficient(1));
  CHECK(lit.at(1, 2, 2, 1).is_zero());
}

TEST_CASE("normal words of a bidegree") {
  auto ws = normal_words({1, 1}, {1, 1});
  REQUIRE(ws.size() == 2);
  CHECK(ws[0] == w2(1, 1, 2, 2));
  CHECK(ws[1] == w2(1, 2, 2, 1));
  CHECK(normal_words({1, 0}, {0, 0}).empty());
}
