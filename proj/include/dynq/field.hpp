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

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "dynq/coeff.hpp"

namespace dynq {

// h(x_i - x_j) with x_i -> q^{-2d} x_i, raised to `power` (+1 or -1)
struct HFactor {
  std::uint8_t i = 0, j = 0;
  Family fam = Family::Z;
  int d = 0;
  int power = 1;
};

// A product of closed-form factors kept unexpanded so it can be shifted and
// evaluated cheaply in either scalar field.
struct Closed {
  long scalar = 1;
  std::vector<HFactor> hs;
  std::vector<std::pair<std::shared_ptr<const Coefficient>, ShiftVector>> general;

  Closed() = default;
  Closed(long c) : scalar(c) {}  // NOLINT(google-explicit-constructor)
  static Closed h(int i, int j, Side side, int power = 1);
  static Closed of(const Coefficient& c);

  bool is_zero() const { return scalar == 0; }
  Closed shifted(const ShiftVector& s) const;
  Closed inv() const;
  Closed operator-() const;
  friend Closed operator*(const Closed& a, const Closed& b);
  Coefficient exact() const;
};

// sign products as closed forms
Closed closed_sign_S(const Permutation& sigma, const std::vector<int>& I, Side side);
Closed closed_sign_S_tilde(const Permutation& sigma, const std::vector<int>& I, Side side);
Closed closed_qsign(const std::vector<int>& I1, const std::vector<int>& I2, Side side,
                    SignVariant variant = SignVariant::Plain);

// ---------------------------------------------------------------------------

class ExactField {
 public:
  using Scalar = Coefficient;
  static constexpr bool kExact = true;

  Scalar one() const { return Coefficient(1); }
  Scalar zero() const { return Coefficient(); }
  Scalar from_int(long c) const { return Coefficient(c); }
  static bool is_zero(const Scalar& s) { return s.is_zero(); }
  static bool vanishes(const Scalar& s) { return s.is_zero(); }

  const Coefficient& h(int i, int j, Family fam, int d);
  Scalar value(const Closed& c, const ShiftVector& at);
  Scalar value(const Closed& c);

 private:
  std::map<std::tuple<int, int, int, int>, Coefficient> hcache_;
};

// Value of a rational function at a point over F_p, with bounds on the
// total degree and log2 l1-norm of an (unreduced) numerator and denominator.
struct ModValue {
  std::uint64_t v = 0;
  float dn = 0, dd = 0, hn = 0, hd = 0;
};

std::uint64_t current_prime();

ModValue operator+(const ModValue& a, const ModValue& b);
ModValue operator-(const ModValue& a);
inline ModValue operator-(const ModValue& a, const ModValue& b) { return a + (-b); }
ModValue operator*(const ModValue& a, const ModValue& b);
ModValue inverse(const ModValue& a);
inline ModValue operator/(const ModValue& a, const ModValue& b) { return a * inverse(b); }
inline ModValue inv(const ModValue& a) { return inverse(a); }
inline ModValue& operator+=(ModValue& a, const ModValue& b) { return a = a + b; }
inline ModValue& operator-=(ModValue& a, const ModValue& b) { return a = a - b; }
inline ModValue& operator*=(ModValue& a, const ModValue& b) { return a = a * b; }

struct ModPoint {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> z, u;
  int n = 0;
  bool avoids_poles(int degree_bound) const;
};

inline constexpr double kPrimeGapAllowance = 4096.0;
ModPoint sample_mod_point(std::uint64_t seed, int n, int degree_bound);

class ModField {
 public:
  using Scalar = ModValue;
  static constexpr bool kExact = false;

  explicit ModField(ModPoint pt);
  ~ModField();
  ModField(const ModField&) = delete;
  ModField& operator=(const ModField&) = delete;

  Scalar one() const { return ModValue{1, 0, 0, 0, 0}; }
  Scalar zero() const { return ModValue{0, 0, 0, 0, 0}; }
  Scalar from_int(long c) const;
  // zero-valued terms are kept so that their bounds reach the verdict
  static bool is_zero(const Scalar&) { return false; }
  static bool vanishes(const Scalar& s) { return s.v == 0; }

  ModValue h(int i, int j, Family fam, int d);
  Scalar value(const Closed& c, const ShiftVector& at);
  Scalar value(const Closed& c);
  Scalar value(const Coefficient& c, const ShiftVector& at);

  const ModPoint& point() const { return pt_; }
  // probability that a nonzero rational function with these bounds vanishes
  static double failure_bound(const ModValue& v);

 private:
  ModPoint pt_;
  std::uint64_t prev_prime_;
  std::uint64_t q2_ = 0, q2inv_ = 0, qinv_ = 0;
  std::vector<std::uint64_t> q2pow_, q2invpow_;
  std::uint64_t q2_power(int k);  // q^{2k}
  std::array<std::uint64_t, kSlots> slots_at(const ShiftVector& s);
};

}  // namespace dynq
