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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynq/poly.hpp"

namespace dynq {

// lambda side is the Z family, mu side the U family
enum class Side : std::uint8_t { Lambda, Mu };

inline Family side_family(Side s) { return s == Side::Lambda ? Family::Z : Family::U; }

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ShiftVector {
  std::vector<int> lambda, mu;

  ShiftVector() = default;
  explicit ShiftVector(int n) : lambda(std::size_t(n), 0), mu(std::size_t(n), 0) {}
  ShiftVector(std::vector<int> l, std::vector<int> m) : lambda(std::move(l)), mu(std::move(m)) {}

  int lam(int i) const { return i - 1 < int(lambda.size()) ? lambda[std::size_t(i - 1)] : 0; }
  int mu_at(int i) const { return i - 1 < int(mu.size()) ? mu[std::size_t(i - 1)] : 0; }
  int at(Side s, int i) const { return s == Side::Lambda ? lam(i) : mu_at(i); }
  bool is_zero() const;

  ShiftVector operator+(const ShiftVector& o) const;
  ShiftVector operator-() const;
  ShiftVector operator-(const ShiftVector& o) const { return *this + (-o); }
  bool operator==(const ShiftVector& o) const;
  // all lambda and mu components equal to k on [1,n]
  static ShiftVector constant(int n, int k);
};

// per-slot shift amounts: x_slot -> q^{-2 a[slot]} x_slot
using SlotShift = std::array<int, kSlots>;
SlotShift slot_shift(const ShiftVector& s);

class Coefficient {
 public:
  Coefficient() : den_(1) {}
  Coefficient(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Coefficient(const Poly& p) : num_(p), den_(1) {}
  // canonicalizes; throws std::domain_error on zero denominator
  static Coefficient fraction(const Poly& num, const Poly& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  Coefficient operator-() const;
  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b) { return a * b.inv(); }
  Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
  Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
  Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }
  Coefficient inv() const;

  Coefficient shifted(const ShiftVector& s) const;
  Coefficient shifted(const SlotShift& s) const;
  // rename variables (see Poly::map_slots); recanonicalizes
  Coefficient map_slots(const std::array<int, kSlots>& dest) const;

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }
  friend bool operator<(const Coefficient& a, const Coefficient& b);

  std::uint32_t used_slots() const { return num_.used_slots() | den_.used_slots(); }
  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }
  std::string str() const;
  static Coefficient parse(const std::string& text);

  mpq_class eval(const std::array<mpq_class, kSlots>& x) const;  // throws PoleError

 private:
  Poly num_, den_;
  static Coefficient make_raw(Poly n, Poly d);
};

std::ostream& operator<<(std::ostream& os, const Coefficient& c);

Coefficient add(const Coefficient& a, const Coefficient& b);
Coefficient mul(const Coefficient& a, const Coefficient& b);
Coefficient inv(const Coefficient& a);
Coefficient shift(const Coefficient& a, const ShiftVector& s);

Coefficient var_z(int i);
Coefficient var_u(int i);
Coefficient var_q();

// h(x_i - x_j) = q (x_i - q^-2 x_j) / (x_i - x_j); i == j is a pole
Coefficient h_fun(int i, int j, Side side);
Coefficient g_fun(int i, int j, Side side);
// h evaluated with x_i -> q^{-2d} x_i (shift difference d = s_i - s_j)
Coefficient h_shifted(int i, int j, Family fam, int d);

// sigma maps positions 0..r-1 to positions of I (0-based images)
using Permutation = std::vector<int>;
Coefficient sign_S(const Permutation& sigma, const std::vector<int>& I, Side side);
Coefficient sign_S_tilde(const Permutation& sigma, const std::vector<int>& I, Side side);
enum class SignVariant : std::uint8_t { Plain, Tilde };
Coefficient qsign(const std::vector<int>& I1, const std::vector<int>& I2, Side side,
                  SignVariant variant = SignVariant::Plain);

bool exact_equal(const Coefficient& a, const Coefficient& b);

struct SamplePoint {
  int n = 0;
  mpq_class q;
  std::vector<mpq_class> z, u;
  std::array<mpq_class, kSlots> slots() const;
  // q not a root of unity up to order 2*bound and no ratio x_i/x_j equal to
  // q^{2k} for |k| <= bound, on both sides
  bool avoids_poles(int degree_bound) const;
};

inline constexpr int kSampleBits = 30;
SamplePoint sample_point(std::uint64_t seed, int n, int degree_bound);

struct RandomizedResult {
  bool equal = false;
  int trials = 0;
  double failure_bound = 0.0;  // probability of a false "equal"
};
RandomizedResult randomized_equal(const Coefficient& a, const Coefficient& b, std::uint64_t seed,
                                  int trials);

}  // namespace dynq
