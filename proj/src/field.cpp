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

#include "dynq/field.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace dynq {

Closed Closed::h(int i, int j, Side side, int power) {
  if (i == j) throw PoleError("h has a pole at 0");
  Closed c;
  c.hs.push_back(HFactor{std::uint8_t(i), std::uint8_t(j), side_family(side), 0, power});
  return c;
}

Closed Closed::of(const Coefficient& c) {
  if (c.is_zero()) return Closed(0);
  Closed r;
  r.general.emplace_back(std::make_shared<const Coefficient>(c), ShiftVector());
  return r;
}

Closed Closed::shifted(const ShiftVector& s) const {
  if (s.is_zero()) return *this;
  Closed r = *this;
  for (auto& f : r.hs) {
    Side side = f.fam == Family::Z ? Side::Lambda : Side::Mu;
    f.d += s.at(side, f.i) - s.at(side, f.j);
  }
  for (auto& g : r.general) g.second = g.second + s;
  return r;
}

Closed Closed::inv() const {
  if (scalar == 0) throw std::domain_error("inverse of zero closed form");
  if (scalar != 1 && scalar != -1) {
    Closed r = Closed::of(Coefficient(1) / Coefficient(scalar));
    Closed rest = *this;
    rest.scalar = 1;
    return r * rest.inv();
  }
  Closed r = *this;
  for (auto& f : r.hs) f.power = -f.power;
  for (auto& g : r.general) g.first = std::make_shared<const Coefficient>(g.first->inv());
  return r;
}

Closed Closed::operator-() const {
  Closed r = *this;
  r.scalar = -r.scalar;
  return r;
}

Closed operator*(const Closed& a, const Closed& b) {
  if (a.scalar == 0 || b.scalar == 0) return Closed(0);
  Closed r = a;
  r.scalar *= b.scalar;
  r.hs.insert(r.hs.end(), b.hs.begin(), b.hs.end());
  r.general.insert(r.general.end(), b.general.begin(), b.general.end());
  return r;
}

Coefficient Closed::exact() const {
  ExactField f;
  return f.value(*this);
}

Closed closed_sign_S(const Permutation& sigma, const std::vector<int>& I, Side side) {
  Closed v;
  for (std::size_t k = 0; k < sigma.size(); ++k)
    for (std::size_t l = k + 1; l < sigma.size(); ++l)
      if (sigma[k] > sigma[l]) v = v * -Closed::h(I[std::size_t(sigma[k])], I[std::size_t(sigma[l])], side);
  return v;
}

Closed closed_sign_S_tilde(const Permutation& sigma, const std::vector<int>& I, Side side) {
  Closed v;
  for (std::size_t k = 0; k < sigma.size(); ++k)
    for (std::size_t l = k + 1; l < sigma.size(); ++l)
      if (sigma[k] > sigma[l]) v = v * -Closed::h(I[std::size_t(sigma[l])], I[std::size_t(sigma[k])], side);
  return v;
}

Closed closed_qsign(const std::vector<int>& I1, const std::vector<int>& I2, Side side, SignVariant variant) {
  Closed v;
  for (int k : I1)
    for (int l : I2) {
      if (k == l) throw std::domain_error("qsign of overlapping index sets");
      if (variant == SignVariant::Plain ? k > l : k < l) v = v * -Closed::h(k, l, side);
    }
  return v;
}

// ---------------------------------------------------------------------------

const Coefficient& ExactField::h(int i, int j, Family fam, int d) {
  auto key = std::make_tuple(i, j, int(fam), d);
  auto it = hcache_.find(key);
  if (it != hcache_.end()) return it->second;
  return hcache_.emplace(key, h_shifted(i, j, fam, d)).first->second;
}

Coefficient ExactField::value(const Closed& c, const ShiftVector& at) { return value(c.shifted(at)); }

Coefficient ExactField::value(const Closed& c) {
  if (c.scalar == 0) return Coefficient();
  // multiply numerators and denominators separately, one gcd at the end
  Coefficient r(c.scalar);
  for (const auto& f : c.hs) {
    const Coefficient& hv = h(f.i, f.j, f.fam, f.d);
    r = r * (f.power > 0 ? hv : hv.inv());
  }
  for (const auto& g : c.general) r = r * g.first->shifted(g.second);
  return r;
}

// ---------------------------------------------------------------------------

namespace {
thread_local std::uint64_t g_prime = 0;
}

std::uint64_t current_prime() { return g_prime; }

ModValue operator+(const ModValue& a, const ModValue& b) {
  std::uint64_t p = g_prime;
  ModValue r;
  r.v = a.v + b.v;
  if (r.v >= p) r.v -= p;
  r.dn = std::max(a.dn + b.dd, b.dn + a.dd);
  r.dd = a.dd + b.dd;
  r.hn = std::max(a.hn + b.hd, b.hn + a.hd) + 1;
  r.hd = a.hd + b.hd;
  return r;
}

ModValue operator-(const ModValue& a) {
  ModValue r = a;
  r.v = a.v ? g_prime - a.v : 0;
  return r;
}

ModValue operator*(const ModValue& a, const ModValue& b) {
  ModValue r;
  r.v = mulmod(a.v, b.v, g_prime);
  r.dn = a.dn + b.dn;
  r.dd = a.dd + b.dd;
  r.hn = a.hn + b.hn;
  r.hd = a.hd + b.hd;
  return r;
}

ModValue inverse(const ModValue& a) {
  if (a.v == 0) throw PoleError("division by a value vanishing at the sample point");
  ModValue r;
  r.v = invmod(a.v, g_prime);
  r.dn = a.dd;
  r.dd = a.dn;
  r.hn = a.hd;
  r.hd = a.hn;
  return r;
}

bool ModPoint::avoids_poles(int degree_bound) const {
  std::uint64_t pw = 1;
  for (int k = 1; k <= 2 * degree_bound; ++k) {
    pw = mulmod(pw, q, p);
    if (pw == 1 || pw == p - 1) return false;
  }
  std::uint64_t q2 = mulmod(q, q, p);
  for (const auto* xs : {&z, &u}) {
    for (int i = 0; i < n; ++i) {
      if ((*xs)[std::size_t(i)] == 0) return false;
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        std::uint64_t r = mulmod((*xs)[std::size_t(i)], invmod((*xs)[std::size_t(j)], p), p);
        std::uint64_t t = 1;
        for (int k = 0; k <= degree_bound; ++k) {
          if (r == t || mulmod(r, t, p) == 1) return false;
          t = mulmod(t, q2, p);
        }
      }
    }
  }
  return true;
}

ModPoint sample_mod_point(std::uint64_t seed, int n, int degree_bound) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0xd1ce);
  for (int attempt = 0; attempt < 64; ++attempt) {
    ModPoint pt;
    pt.n = n;
    std::uint64_t c = (1ull << 61) + (rng() >> 3);
    c |= 1;
    while (!is_prime_u64(c)) c += 2;
    pt.p = c;
    pt.q = rng() % (c - 3) + 2;
    for (int i = 0; i < n; ++i) {
      pt.z.push_back(rng() % (c - 1) + 1);
      pt.u.push_back(rng() % (c - 1) + 1);
    }
    if (pt.avoids_poles(degree_bound)) return pt;
  }
  throw std::runtime_error("sampler failed to find a pole-free point");
}

ModField::ModField(ModPoint pt) : pt_(std::move(pt)), prev_prime_(g_prime) {
  g_prime = pt_.p;
  q2_ = mulmod(pt_.q, pt_.q, pt_.p);
  q2inv_ = invmod(q2_, pt_.p);
  qinv_ = invmod(pt_.q, pt_.p);
  q2pow_ = {1};
  q2invpow_ = {1};
}

ModField::~ModField() { g_prime = prev_prime_; }

std::uint64_t ModField::q2_power(int k) {
  auto& tab = k >= 0 ? q2pow_ : q2invpow_;
  std::uint64_t base = k >= 0 ? q2_ : q2inv_;
  std::size_t a = std::size_t(k >= 0 ? k : -k);
  while (tab.size() <= a) tab.push_back(mulmod(tab.back(), base, pt_.p));
  return tab[a];
}

ModValue ModField::from_int(long c) const {
  ModValue r;
  std::uint64_t p = pt_.p;
  r.v = c >= 0 ? std::uint64_t(c) % p : (p - std::uint64_t(-c) % p) % p;
  r.hn = c == 0 ? 0.0f : float(std::log2(std::fabs(double(c)))) + 1.0f;
  return r;
}

ModValue ModField::h(int i, int j, Family fam, int d) {
  if (i == j) throw PoleError("h has a pole at 0");
  const auto& xs = fam == Family::Z ? pt_.z : pt_.u;
  std::uint64_t p = pt_.p;
  std::uint64_t xi = mulmod(xs[std::size_t(i - 1)], q2_power(-d), p);
  std::uint64_t xj = xs[std::size_t(j - 1)];
  std::uint64_t num = (mulmod(q2_, xi, p) + p - xj) % p;
  std::uint64_t den = mulmod(pt_.q, (xi + p - xj) % p, p);
  if (den == 0) throw PoleError("h denominator vanishes at the sample point");
  ModValue r;
  r.v = mulmod(num, invmod(den, p), p);
  float deg = 3.0f + 2.0f * float(std::abs(d));
  r.dn = r.dd = deg;
  r.hn = r.hd = 1;
  return r;
}

std::array<std::uint64_t, kSlots> ModField::slots_at(const ShiftVector& s) {
  std::array<std::uint64_t, kSlots> x{};
  x[kQSlot] = pt_.q;
  for (int i = 1; i <= pt_.n; ++i) {
    x[var_slot(Family::Z, i)] = mulmod(pt_.z[std::size_t(i - 1)], q2_power(-s.lam(i)), pt_.p);
    x[var_slot(Family::U, i)] = mulmod(pt_.u[std::size_t(i - 1)], q2_power(-s.mu_at(i)), pt_.p);
  }
  return x;
}

ModValue ModField::value(const Coefficient& c, const ShiftVector& at) {
  auto x = slots_at(at);
  std::uint64_t den = c.den().eval_mod(x, pt_.p);
  if (den == 0) throw PoleError("coefficient denominator vanishes at the sample point");
  ModValue r;
  r.v = mulmod(c.num().eval_mod(x, pt_.p), invmod(den, pt_.p), pt_.p);
  Coefficient s = c.shifted(at);
  r.dn = float(s.num().total_degree());
  r.dd = float(s.den().total_degree());
  r.hn = float(s.num().log2_norm1()) + 1.0f;
  r.hd = float(s.den().log2_norm1()) + 1.0f;
  return r;
}

ModValue ModField::value(const Closed& c, const ShiftVector& at) { return value(c.shifted(at)); }

ModValue ModField::value(const Closed& c) {
  ModValue r = from_int(c.scalar);
  for (const auto& f : c.hs) {
    ModValue hv = h(f.i, f.j, f.fam, f.d);
    r = r * (f.power > 0 ? hv : inverse(hv));
  }
  for (const auto& g : c.general) r = r * value(*g.first, g.second);
  return r;
}

double ModField::failure_bound(const ModValue& v) {
  // Schwartz-Zippel over F_p plus the chance that the random prime divides
  // the integer content of the numerator; doubled to absorb the conditioning
  // on the sample point being pole-free.
  const double p_min = std::ldexp(1.0, 61);
  double b = (std::max(double(v.dn), 1.0) + (double(v.hn) / 61.0 + 1.0) * kPrimeGapAllowance) / p_min;
  return std::min(1.0, 2.0 * b);
}

}  // namespace dynq
