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

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace dynq {

// Variable families. Z carries lambda (left moment map), U carries mu (right
// moment map); W1, W2 are the middle slots of tensor products.
enum class Family : std::uint8_t { Z = 0, U = 1, W1 = 2, W2 = 3 };

inline constexpr int kSlots = 32;
inline constexpr int kMaxIndex = 7;
inline constexpr int kQSlot = kSlots - 1;

// Slot layout: slot 0 is the most significant in the lex order, q is the
// least significant. Significance increases z < w1 < w2 < u, and with the
// index inside a family.
int var_slot(Family f, int index);
Family slot_family(int slot);
int slot_index(int slot);
std::string slot_name(int slot);

using Exps = std::array<std::uint16_t, kSlots>;

struct Term {
  Exps e{};
  mpz_class c;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(long c);
  explicit Poly(const mpz_class& c);

  static Poly var(int slot, int power = 1);
  static Poly q(int power = 1) { return var(kQSlot, power); }
  static Poly z(int i) { return var(var_slot(Family::Z, i)); }
  static Poly u(int i) { return var(var_slot(Family::U, i)); }
  static Poly monomial(const Exps& e, const mpz_class& c);
  // terms need not be sorted or combined
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const { return terms_.front(); }
  int sign() const;  // sign of leading coefficient, 0 for zero

  int degree(int slot) const;
  int min_degree(int slot) const;
  int total_degree() const;
  std::uint32_t used_slots() const;  // bitmask
  mpz_class content() const;         // nonnegative gcd of coefficients
  Exps min_exps() const;
  double log2_norm1() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const mpz_class& c);
  Poly mul_monomial(const Exps& e) const;
  Poly div_monomial(const Exps& e) const;  // requires divisibility
  Poly divexact_scalar(const mpz_class& c) const;
  Poly pow(unsigned k) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  // total order used for deterministic sorting; not an algebraic order
  friend bool operator<(const Poly& a, const Poly& b);

  // coefficients in the variable at `slot`, index = exponent
  std::vector<Poly> coefficients(int slot) const;
  static Poly from_coefficients(const std::vector<Poly>& cs, int slot);

  // substitute x_slot -> q^{k_slot} x_slot; negative q exponents are
  // returned through `qshift` (result = q^{qshift} * returned poly)
  Poly substitute_q_powers(const std::array<int, kSlots>& k, long& qshift) const;

  // evaluation mod p at point (values indexed by slot)
  std::uint64_t eval_mod(const std::array<std::uint64_t, kSlots>& x,
                         std::uint64_t p) const;
  mpq_class eval(const std::array<mpq_class, kSlots>& x) const;

  // move the exponent of slot s to dest[s]; colliding slots add up
  Poly map_slots(const std::array<int, kSlots>& dest) const;

  std::size_t hash() const;
  std::string str() const;

 private:
  std::vector<Term> terms_;  // strictly decreasing exponents, nonzero coeffs
  void normalize_sorted();
  friend struct PolyAccess;
};

// Exact division; returns false if b does not divide a.
bool divide_exact(const Poly& a, const Poly& b, Poly& quot);
Poly divexact(const Poly& a, const Poly& b);  // throws if not divisible
// false only when b certainly does not divide a (one modular evaluation)
bool may_divide(const Poly& a, const Poly& b);

// gcd with positive leading coefficient (gcd(0,0) = 0)
Poly gcd(const Poly& a, const Poly& b);

Poly parse_poly(const std::string& text);

// modular helpers shared with sampled evaluation
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return std::uint64_t((unsigned __int128)a * b % p);
}
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
bool is_prime_u64(std::uint64_t n);

}  // namespace dynq
