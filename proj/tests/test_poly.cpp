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
#include "dynq/coeff.hpp"
#include "dynq/poly.hpp"

using namespace dynq;

namespace {

Poly random_poly(std::mt19937_64& rng, int nvars, int terms, int maxdeg) {
  std::vector<Term> ts;
  for (int k = 0; k < terms; ++k) {
    Term t;
    for (int v = 0; v < nvars; ++v) {
      int slot = v == 0 ? kQSlot : var_slot(v % 2 ? Family::Z : Family::U, (v + 1) / 2);
      t.e[slot] = std::uint16_t(rng() % (maxdeg + 1));
    }
    t.c = long(rng() % 19) - 9;
    ts.push_back(t);
  }
  return Poly::from_terms(ts);
}

}  // namespace

TEST_CASE("poly arithmetic basics") {
  Poly x = Poly::z(1), y = Poly::z(2), q = Poly::q();
  Poly a = (x + y) * (x - y);
  CHECK(a == x * x - y * y);
  CHECK((a - a).is_zero());
  CHECK(divexact(a, x + y) == x - y);
  Poly quo;
  CHECK_FALSE(divide_exact(a, x + q, quo));
  CHECK(a.degree(var_slot(Family::Z, 1)) == 2);
  CHECK((q * x).total_degree() == 2);
}

TEST_CASE("poly print and parse round trip") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    Poly p = random_poly(rng, 5, 6, 3);
    CHECK(parse_poly(p.str()) == p);
  }
  CHECK(parse_poly("q^2*z1 - z2").str() == "-z2 + q^2*z1");
  CHECK(parse_poly("-3*q*u2 + 7").str() == "-3*q*u2 + 7");
}

TEST_CASE("gcd recovers planted common factors") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 60; ++k) {
    Poly g = random_poly(rng, 5, 3, 2);
    Poly f1 = random_poly(rng, 5, 4, 2);
    Poly f2 = random_poly(rng, 5, 4, 2);
    if (g.is_zero() || f1.is_zero() || f2.is_zero()) continue;
    Poly a = g * f1, b = g * f2;
    Poly d = gcd(a, b);
    Poly tmp;
    REQUIRE(divide_exact(a, d, tmp));
    REQUIRE(divide_exact(b, d, tmp));
    REQUIRE(divide_exact(d, g, tmp));
    // cofactors must be coprime
    Poly ca = divexact(a, d), cb = divexact(b, d);
    CHECK(gcd(ca, cb).is_one());
  }
}

TEST_CASE("gcd of univariate-in-q binomials") {
  Poly x = Poly::z(1), y = Poly::z(2), q = Poly::q();
  Poly a = (q * q * x - y) * (x - y) * (x + q);
  Poly b = (q * q * x - y) * (x + y) * (x - q);
  CHECK(gcd(a, b) == y - q * q * x);
  CHECK(gcd(Poly(6) * x, Poly(4) * x * y) == Poly(2) * x);
}

TEST_CASE("coefficient canonical form") {
  Coefficient a = Coefficient::fraction(Poly::z(1) - Poly::z(2), Poly::z(1) - Poly::q(2) * Poly::z(2));
  Coefficient b(Poly::z(1) - Poly::q(2) * Poly::z(2));
  CHECK(a * b == Coefficient(Poly::z(1) - Poly::z(2)));
  CHECK((a - a).is_zero());
  CHECK(a + Coefficient() == a);
  CHECK(Coefficient::parse(a.str()) == a);
  CHECK(a.den().sign() > 0);
  CHECK_THROWS_AS(Coefficient().inv(), std::domain_error);
}

TEST_CASE("h and g closed forms") {
  Coefficient h12 = h_fun(1, 2, Side::Lambda);
  Coefficient q = var_q(), z1 = var_z(1), z2 = var_z(2);
  Coefficient printed = q * (z1 - z2 / (q * q)) / (z1 - z2);
  CHECK(h12 == printed);
  CHECK(h12 * h_fun(2, 1, Side::Lambda) == g_fun(1, 2, Side::Lambda));
  Coefficient g_printed = (z1 - z2 / (q * q)) * (z1 - q * q * z2) / ((z1 - z2) * (z1 - z2));
  CHECK(g_fun(1, 2, Side::Lambda) == g_printed);
  CHECK(g_fun(1, 2, Side::Mu) == g_fun(2, 1, Side::Mu));
  CHECK_THROWS_AS(h_fun(1, 1, Side::Lambda), PoleError);
  CHECK(h12.inv() == (z1 - z2) / (q * (z1 - z2 / (q * q))));
  CHECK(h12 + h_fun(2, 1, Side::Lambda) == q + q.inv());
  CHECK(h12 + h_fun(2, 1, Side::Lambda) != g_fun(1, 2, Side::Lambda) + Coefficient(1));
}

TEST_CASE("shift substitutes q powers") {
  ShiftVector s(2);
  s.lambda[0] = 1;
  Coefficient z1 = var_z(1), q = var_q();
  CHECK(z1.shifted(s) == z1 / (q * q));
  CHECK(h_shifted(1, 2, Family::Z, 3) == h_fun(1, 2, Side::Lambda).shifted(ShiftVector({3, 0}, {0, 0})));
  CHECK(h_shifted(2, 1, Family::U, -2) == h_fun(2, 1, Side::Mu).shifted(ShiftVector({0, 0}, {0, -2})));
}

TEST_CASE("sign functions") {
  CHECK(sign_S({0, 1}, {1, 2}, Side::Lambda) == Coefficient(1));
  CHECK(sign_S({1, 0}, {1, 2}, Side::Lambda) == -h_fun(2, 1, Side::Lambda));
  CHECK(qsign({1}, {2}, Side::Lambda) == Coefficient(1));
  CHECK(qsign({2}, {1}, Side::Lambda) == -h_fun(2, 1, Side::Lambda));
  CHECK(qsign({1, 3}, {2}, Side::Lambda) == -h_fun(3, 2, Side::Lambda));
  CHECK_THROWS(qsign({1, 2}, {2}, Side::Lambda));
}

TEST_CASE("tilde sign times sign is a product of g") {
  // a uniform shift fixes S, so the tilde sign is not its reciprocal
  Coefficient st = sign_S_tilde({1, 0}, {1, 2}, Side::Lambda), s = sign_S({1, 0}, {1, 2}, Side::Lambda);
  CHECK(st == -h_fun(1, 2, Side::Lambda));
  CHECK(s.shifted(ShiftVector::constant(2, 1)) == s);
  CHECK(st * s == g_fun(1, 2, Side::Lambda));
  CHECK(st * s != Coefficient(1));
  Coefficient g3 = g_fun(1, 2, Side::Lambda) * g_fun(1, 3, Side::Lambda) * g_fun(2, 3, Side::Lambda);
  CHECK(sign_S_tilde({2, 1, 0}, {1, 2, 3}, Side::Lambda) * sign_S({2, 1, 0}, {1, 2, 3}, Side::Lambda) == g3);
}
