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

// Exact rational functions with the denominator kept as a product of
// interned atoms. Every denominator met in the engine is a product of
// binomials x_i q^a - x_j q^b, so sums only need an lcm of factor lists and
// trial division instead of multivariate gcds.

#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "dynq/field.hpp"

namespace dynq {

struct FactoredValue {
  Poly num;                               // zero means the value 0
  mpz_class cden = 1;                     // positive
  Exps mden{};                            // monomial part of the denominator
  std::vector<std::pair<int, int>> atoms;  // (atom id, multiplicity), sorted by id

  FactoredValue() = default;
  FactoredValue(long c) : num(c) {}  // NOLINT(google-explicit-constructor)
  static FactoredValue from_poly(const Poly& p);
  static FactoredValue from_coefficient(const Coefficient& c);

  bool is_zero() const { return num.is_zero(); }
  Poly den() const;
  Coefficient coefficient() const;  // canonical form

  FactoredValue operator-() const;
  friend FactoredValue operator+(const FactoredValue& a, const FactoredValue& b);
  friend FactoredValue operator-(const FactoredValue& a, const FactoredValue& b) { return a + (-b); }
  friend FactoredValue operator*(const FactoredValue& a, const FactoredValue& b);
  FactoredValue& operator+=(const FactoredValue& o) { return *this = *this + o; }
  FactoredValue& operator-=(const FactoredValue& o) { return *this = *this - o; }
  FactoredValue& operator*=(const FactoredValue& o) { return *this = *this * o; }
};

FactoredValue inv(const FactoredValue& a);  // throws std::domain_error on zero

// Engine field over FactoredValue; agrees with ExactField term by term after
// conversion with FactoredValue::coefficient().
class FactoredField {
 public:
  using Scalar = FactoredValue;
  static constexpr bool kExact = true;

  Scalar one() const { return FactoredValue(1); }
  Scalar zero() const { return FactoredValue(); }
  Scalar from_int(long c) const { return FactoredValue(c); }
  static bool is_zero(const Scalar& s) { return s.is_zero(); }
  static bool vanishes(const Scalar& s) { return s.is_zero(); }

  const FactoredValue& h(int i, int j, Family fam, int d);
  Scalar value(const Closed& c, const ShiftVector& at);
  Scalar value(const Closed& c);

 private:
  std::map<std::tuple<int, int, int, int>, FactoredValue> hcache_;
};

}  // namespace dynq
