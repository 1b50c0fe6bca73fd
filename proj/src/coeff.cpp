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

#include "dynq/coeff.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

namespace dynq {

bool ShiftVector::is_zero() const {
  return std::all_of(lambda.begin(), lambda.end(), [](int x) { return x == 0; }) &&
         std::all_of(mu.begin(), mu.end(), [](int x) { return x == 0; });
}

ShiftVector ShiftVector::operator+(const ShiftVector& o) const {
  ShiftVector r;
  r.lambda.resize(std::max(lambda.size(), o.lambda.size()));
  r.mu.resize(std::max(mu.size(), o.mu.size()));
  for (std::size_t i = 0; i < r.lambda.size(); ++i) r.lambda[i] = lam(int(i) + 1) + o.lam(int(i) + 1);
  for (std::size_t i = 0; i < r.mu.size(); ++i) r.mu[i] = mu_at(int(i) + 1) + o.mu_at(int(i) + 1);
  return r;
}

ShiftVector ShiftVector::operator-() const {
  ShiftVector r = *this;
  for (auto& x : r.lambda) x = -x;
  for (auto& x : r.mu) x = -x;
  return r;
}

bool ShiftVector::operator==(const ShiftVector& o) const {
  std::size_t nl = std::max(lambda.size(), o.lambda.size());
  std::size_t nm = std::max(mu.size(), o.mu.size());
  for (std::size_t i = 0; i < nl; ++i)
    if (lam(int(i) + 1) != o.lam(int(i) + 1)) return false;
  for (std::size_t i = 0; i < nm; ++i)
    if (mu_at(int(i) + 1) != o.mu_at(int(i) + 1)) return false;
  return true;
}

ShiftVector ShiftVector::constant(int n, int k) {
  return ShiftVector(std::vector<int>(std::size_t(n), k), std::vector<int>(std::size_t(n), k));
}

SlotShift slot_shift(const ShiftVector& s) {
  SlotShift a{};
  for (std::size_t i = 0; i < s.lambda.size(); ++i) a[var_slot(Family::Z, int(i) + 1)] = s.lambda[i];
  for (std::size_t i = 0; i < s.mu.size(); ++i) a[var_slot(Family::U, int(i) + 1)] = s.mu[i];
  return a;
}

// ---------------------------------------------------------------------------

Coefficient Coefficient::make_raw(Poly n, Poly d) {
  Coefficient c;
  c.num_ = std::move(n);
  c.den_ = std::move(d);
  if (c.den_.sign() < 0) {
    c.num_ = -c.num_;
    c.den_ = -c.den_;
  }
  return c;
}

Coefficient Coefficient::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) return Coefficient();
  if (den.is_one()) return make_raw(num, den);
  Poly g = gcd(num, den);
  if (g.is_one()) return make_raw(num, den);
  return make_raw(divexact(num, g), divexact(den, g));
}

Coefficient Coefficient::operator-() const {
  Coefficient c = *this;
  c.num_ = -c.num_;
  return c;
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return Coefficient(a.num_ + b.num_);
  if (a.den_ == b.den_) return Coefficient::fraction(a.num_ + b.num_, a.den_);
  // Henrici: only gcd(t, g) can cancel
  Poly g = gcd(a.den_, b.den_);
  if (g.is_one()) {
    Poly t = a.num_ * b.den_ + b.num_ * a.den_;
    if (t.is_zero()) return Coefficient();
    return Coefficient::make_raw(std::move(t), a.den_ * b.den_);
  }
  Poly ad = divexact(a.den_, g), bd = divexact(b.den_, g);
  Poly t = a.num_ * bd + b.num_ * ad;
  if (t.is_zero()) return Coefficient();
  Poly g2 = gcd(t, g);
  if (g2.is_one()) return Coefficient::make_raw(std::move(t), ad * b.den_);
  return Coefficient::make_raw(divexact(t, g2), ad * divexact(b.den_, g2));
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  if (a.is_zero() || b.is_zero()) return Coefficient();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  Poly g1 = a.den_.is_one() ? Poly(1) : gcd(b.num_, a.den_);
  Poly g2 = b.den_.is_one() ? Poly(1) : gcd(a.num_, b.den_);
  Poly an = g2.is_one() ? a.num_ : divexact(a.num_, g2);
  Poly bd = g2.is_one() ? b.den_ : divexact(b.den_, g2);
  Poly bn = g1.is_one() ? b.num_ : divexact(b.num_, g1);
  Poly ad = g1.is_one() ? a.den_ : divexact(a.den_, g1);
  return Coefficient::make_raw(an * bn, ad * bd);
}

Coefficient Coefficient::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero coefficient");
  return make_raw(den_, num_);
}

Coefficient Coefficient::shifted(const ShiftVector& s) const {
  if (s.is_zero()) return *this;
  return shifted(slot_shift(s));
}

Coefficient Coefficient::shifted(const SlotShift& s) const {
  SlotShift k{};
  bool any = false;
  for (int i = 0; i < kSlots; ++i) {
    k[i] = -2 * s[i];
    any = any || k[i] != 0;
  }
  if (!any || is_zero()) return *this;
  long qn = 0, qd = 0;
  Poly n = num_.substitute_q_powers(k, qn);
  Poly d = den_.substitute_q_powers(k, qd);
  // the substitution is an automorphism of the Laurent ring, so only powers
  // of q can become common factors, and those were stripped above
  long e = qn - qd;
  if (e > 0) n = n * Poly::q(int(e));
  if (e < 0) d = d * Poly::q(int(-e));
  return make_raw(std::move(n), std::move(d));
}

Coefficient Coefficient::map_slots(const std::array<int, kSlots>& dest) const {
  return fraction(num_.map_slots(dest), den_.map_slots(dest));
}

bool operator<(const Coefficient& a, const Coefficient& b) {
  if (a.num_ != b.num_) return a.num_ < b.num_;
  return a.den_ < b.den_;
}

std::string Coefficient::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Coefficient Coefficient::parse(const std::string& text) {
  // accept "num" or "(num)/(den)" and anything parse_poly handles around a '/'
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == '/' && depth == 0) {
      if (slash != std::string::npos) throw std::invalid_argument("multiple '/' in coefficient");
      slash = i;
    }
  }
  if (slash == std::string::npos) return Coefficient(parse_poly(text));
  return fraction(parse_poly(text.substr(0, slash)), parse_poly(text.substr(slash + 1)));
}

mpq_class Coefficient::eval(const std::array<mpq_class, kSlots>& x) const {
  mpq_class d = den_.eval(x);
  if (d == 0) throw PoleError("coefficient denominator vanishes at sample point");
  mpq_class r = num_.eval(x) / d;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.str(); }

Coefficient add(const Coefficient& a, const Coefficient& b) { return a + b; }
Coefficient mul(const Coefficient& a, const Coefficient& b) { return a * b; }
Coefficient inv(const Coefficient& a) { return a.inv(); }
Coefficient shift(const Coefficient& a, const ShiftVector& s) { return a.shifted(s); }

Coefficient var_z(int i) { return Coefficient(Poly::z(i)); }
Coefficient var_u(int i) { return Coefficient(Poly::u(i)); }
Coefficient var_q() { return Coefficient(Poly::q()); }

// ---------------------------------------------------------------------------

Coefficient h_shifted(int i, int j, Family fam, int d) {
  if (i == j) throw PoleError("h has a pole at 0");
  Poly xi = Poly::var(var_slot(fam, i)), xj = Poly::var(var_slot(fam, j));
  // x_i -> q^{-2d} x_i: numerator q^{2-2d} x_i - x_j, denominator q^{1-2d} x_i - q x_j
  int a = 2 - 2 * d, b = 0;
  int c = 1 - 2 * d, e = 1;
  int m = std::min({a, b, c, e});
  Poly num = xi * Poly::q(a - m) - xj * Poly::q(b - m);
  Poly den = xi * Poly::q(c - m) - xj * Poly::q(e - m);
  return Coefficient::fraction(num, den);
}

Coefficient h_fun(int i, int j, Side side) { return h_shifted(i, j, side_family(side), 0); }

Coefficient g_fun(int i, int j, Side side) { return h_fun(i, j, side) * h_fun(j, i, side); }

Coefficient sign_S(const Permutation& sigma, const std::vector<int>& I, Side side) {
  if (sigma.size() != I.size()) throw std::invalid_argument("permutation size mismatch");
  Coefficient v(1);
  for (std::size_t k = 0; k < sigma.size(); ++k)
    for (std::size_t l = k + 1; l < sigma.size(); ++l)
      if (sigma[k] > sigma[l]) v = v * -h_fun(I[std::size_t(sigma[k])], I[std::size_t(sigma[l])], side);
  return v;
}

Coefficient sign_S_tilde(const Permutation& sigma, const std::vector<int>& I, Side side) {
  if (sigma.size() != I.size()) throw std::invalid_argument("permutation size mismatch");
  Coefficient v(1);
  for (std::size_t k = 0; k < sigma.size(); ++k)
    for (std::size_t l = k + 1; l < sigma.size(); ++l)
      if (sigma[k] > sigma[l]) v = v * -h_fun(I[std::size_t(sigma[l])], I[std::size_t(sigma[k])], side);
  return v;
}

Coefficient qsign(const std::vector<int>& I1, const std::vector<int>& I2, Side side, SignVariant variant) {
  for (int a : I1)
    for (int b : I2)
      if (a == b) throw std::domain_error("qsign of overlapping index sets");
  Coefficient v(1);
  for (int k : I1)
    for (int l : I2)
      if (variant == SignVariant::Plain ? k > l : k < l) v = v * -h_fun(k, l, side);
  return v;
}

bool exact_equal(const Coefficient& a, const Coefficient& b) { return a == b; }

// ---------------------------------------------------------------------------

std::array<mpq_class, kSlots> SamplePoint::slots() const {
  std::array<mpq_class, kSlots> x;
  for (auto& v : x) v = 0;
  x[kQSlot] = q;
  for (int i = 1; i <= n; ++i) {
    x[var_slot(Family::Z, i)] = z[std::size_t(i - 1)];
    x[var_slot(Family::U, i)] = u[std::size_t(i - 1)];
  }
  return x;
}

bool SamplePoint::avoids_poles(int degree_bound) const {
  mpq_class qq = q * q;
  mpq_class p = 1;
  for (int k = 1; k <= 2 * degree_bound; ++k) {
    p *= q;
    if (p == 1 || p == -1) return false;
  }
  for (const auto* xs : {&z, &u}) {
    for (int i = 0; i < n; ++i) {
      if ((*xs)[std::size_t(i)] == 0) return false;
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        mpq_class r = (*xs)[std::size_t(i)] / (*xs)[std::size_t(j)];
        mpq_class pw = 1;
        for (int k = 0; k <= degree_bound; ++k) {
          if (r == pw || r * pw == 1) return false;
          pw *= qq;
        }
      }
    }
  }
  return true;
}

SamplePoint sample_point(std::uint64_t seed, int n, int degree_bound) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x51ed);
  const std::uint64_t range = 1ull << kSampleBits;
  for (int attempt = 0; attempt < 64; ++attempt) {
    SamplePoint p;
    p.n = n;
    p.q = mpz_class(std::to_string(rng() % (range - 2) + 2));
    for (int i = 0; i < n; ++i) {
      p.z.emplace_back(mpz_class(std::to_string(rng() % range + 1)));
      p.u.emplace_back(mpz_class(std::to_string(rng() % range + 1)));
    }
    if (p.avoids_poles(degree_bound)) return p;
  }
  throw std::runtime_error("sampler failed to find a pole-free point");
}

RandomizedResult randomized_equal(const Coefficient& a, const Coefficient& b, std::uint64_t seed,
                                  int trials) {
  RandomizedResult res;
  int n = 0;
  std::uint32_t used = a.used_slots() | b.used_slots();
  for (int s = 0; s < kQSlot; ++s)
    if ((used >> s) & 1) n = std::max(n, slot_index(s));
  // numerator of a - b before cancellation
  double deg = std::max(a.num().total_degree() + b.den().total_degree(),
                        b.num().total_degree() + a.den().total_degree());
  double per_trial = std::max(deg, 1.0) / double(1ull << kSampleBits);
  res.equal = true;
  res.failure_bound = 1.0;
  std::uint64_t s = seed;
  for (int t = 0; t < trials; ++t) {
    for (int retry = 0;; ++retry) {
      if (retry > 32) throw std::runtime_error("sampler failed: persistent poles");
      SamplePoint p = sample_point(s++, std::max(n, 1), 1);
      auto x = p.slots();
      try {
        mpq_class va = a.eval(x), vb = b.eval(x);
        if (va != vb) {
          res.equal = false;
          res.trials = t + 1;
          res.failure_bound = 0.0;
          return res;
        }
        break;
      } catch (const PoleError&) {
        continue;
      }
    }
    res.failure_bound *= std::min(1.0, per_trial);
    ++res.trials;
  }
  return res;
}

}  // namespace dynq
