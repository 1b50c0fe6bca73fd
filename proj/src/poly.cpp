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

#include "dynq/poly.hpp"

#include <map>

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dynq {

namespace {

int family_rank(Family f) {
  switch (f) {
    case Family::Z: return 0;
    case Family::W1: return 1;
    case Family::W2: return 2;
    case Family::U: return 3;
  }
  return 0;
}

constexpr Family kRankFamily[4] = {Family::Z, Family::W1, Family::W2, Family::U};

bool exps_greater(const Exps& a, const Exps& b) { return b < a; }

Exps exps_add(const Exps& a, const Exps& b) {
  Exps r;
  for (int i = 0; i < kSlots; ++i) {
    unsigned s = unsigned(a[i]) + b[i];
    if (s > 0xffff) throw std::overflow_error("polynomial exponent overflow");
    r[i] = std::uint16_t(s);
  }
  return r;
}

bool exps_divides(const Exps& a, const Exps& b) {
  for (int i = 0; i < kSlots; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exps exps_sub(const Exps& a, const Exps& b) {
  Exps r;
  for (int i = 0; i < kSlots; ++i) r[i] = std::uint16_t(a[i] - b[i]);
  return r;
}

}  // namespace

int var_slot(Family f, int index) {
  if (index < 1 || index > kMaxIndex) throw std::out_of_range("variable index out of range");
  int rank = family_rank(f) * kMaxIndex + (index - 1);
  return kQSlot - 1 - rank;
}

Family slot_family(int slot) { return kRankFamily[(kQSlot - 1 - slot) / kMaxIndex]; }

int slot_index(int slot) { return (kQSlot - 1 - slot) % kMaxIndex + 1; }

std::string slot_name(int slot) {
  if (slot == kQSlot) return "q";
  static const char* names[4] = {"z", "u", "w", "y"};
  return names[int(slot_family(slot))] + std::to_string(slot_index(slot));
}

// ---------------------------------------------------------------------------

Poly::Poly(long c) {
  if (c != 0) terms_.push_back(Term{Exps{}, mpz_class(c)});
}

Poly::Poly(const mpz_class& c) {
  if (c != 0) terms_.push_back(Term{Exps{}, c});
}

Poly Poly::var(int slot, int power) {
  Exps e{};
  e[slot] = std::uint16_t(power);
  return monomial(e, 1);
}

Poly Poly::monomial(const Exps& e, const mpz_class& c) {
  Poly p;
  if (c != 0) p.terms_.push_back(Term{e, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  std::sort(p.terms_.begin(), p.terms_.end(),
            [](const Term& a, const Term& b) { return exps_greater(a.e, b.e); });
  p.normalize_sorted();
  return p;
}

void Poly::normalize_sorted() {
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i + 1;
    while (j < terms_.size() && terms_[j].e == terms_[i].e) {
      terms_[i].c += terms_[j].c;
      ++j;
    }
    if (terms_[i].c != 0) {
      if (out != i) terms_[out] = std::move(terms_[i]);
      ++out;
    }
    i = j;
  }
  terms_.resize(out);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].e == Exps{} && terms_[0].c == 1;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exps{});
}

int Poly::sign() const { return terms_.empty() ? 0 : sgn(terms_[0].c); }

int Poly::degree(int slot) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, int(t.e[slot]));
  return d;
}

int Poly::min_degree(int slot) const {
  int d = terms_.empty() ? 0 : 0xffff;
  for (const auto& t : terms_) d = std::min(d, int(t.e[slot]));
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto x : t.e) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::uint32_t Poly::used_slots() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_)
    for (int i = 0; i < kSlots; ++i)
      if (t.e[i]) m |= 1u << i;
  return m;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Exps Poly::min_exps() const {
  Exps m{};
  if (terms_.empty()) return m;
  m = terms_[0].e;
  for (const auto& t : terms_)
    for (int i = 0; i < kSlots; ++i) m[i] = std::min(m[i], t.e[i]);
  return m;
}

double Poly::log2_norm1() const {
  if (terms_.empty()) return 0.0;
  mpz_class s = 0;
  for (const auto& t : terms_) s += abs(t.c);
  return double(mpz_sizeinbase(s.get_mpz_t(), 2));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.c = -t.c;
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && exps_greater(a[i].e, b[j].e))) {
      r.push_back(a[i++]);
    } else if (i == a.size() || exps_greater(b[j].e, a[i].e)) {
      r.push_back(b[j++]);
      if (negate_b) r.back().c = -r.back().c;
    } else {
      mpz_class c = negate_b ? mpz_class(a[i].c - b[j].c) : mpz_class(a[i].c + b[j].c);
      if (c != 0) r.push_back(Term{a[i].e, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Poly();
  if (b.terms_.size() == 1) {
    Poly r = a.mul_monomial(b.terms_[0].e);
    r *= b.terms_[0].c;
    return r;
  }
  if (a.terms_.size() == 1) return b * a;
  // accumulate row by row via merges for the small side
  const Poly& big = a.terms_.size() >= b.terms_.size() ? a : b;
  const Poly& small = a.terms_.size() >= b.terms_.size() ? b : a;
  std::vector<Term> prod;
  prod.reserve(big.terms_.size() * small.terms_.size());
  for (const auto& s : small.terms_)
    for (const auto& t : big.terms_) prod.push_back(Term{exps_add(s.e, t.e), s.c * t.c});
  return Poly::from_terms(std::move(prod));
}

Poly& Poly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.c *= c;
  return *this;
}

Poly Poly::mul_monomial(const Exps& e) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.e = exps_add(t.e, e);
  return r;
}

Poly Poly::div_monomial(const Exps& e) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.e = exps_sub(t.e, e);
  return r;
}

Poly Poly::divexact_scalar(const mpz_class& c) const {
  Poly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly r(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
  return true;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].e != b.terms_[i].e) return a.terms_[i].e < b.terms_[i].e;
    int c = cmp(a.terms_[i].c, b.terms_[i].c);
    if (c) return c < 0;
  }
  return false;
}

std::vector<Poly> Poly::coefficients(int slot) const {
  std::vector<Poly> cs(std::size_t(degree(slot) + 1));
  for (const auto& t : terms_) {
    Term s = t;
    s.e[slot] = 0;
    cs[t.e[slot]].terms_.push_back(std::move(s));
  }
  // lex order with one slot zeroed stays sorted within each coefficient
  for (auto& c : cs) c.normalize_sorted();
  return cs;
}

Poly Poly::from_coefficients(const std::vector<Poly>& cs, int slot) {
  std::vector<Term> all;
  for (std::size_t d = 0; d < cs.size(); ++d)
    for (const auto& t : cs[d].terms_) {
      Term s = t;
      s.e[slot] = std::uint16_t(d);
      all.push_back(std::move(s));
    }
  return from_terms(std::move(all));
}

Poly Poly::substitute_q_powers(const std::array<int, kSlots>& k, long& qshift) const {
  if (terms_.empty()) {
    qshift = 0;
    return *this;
  }
  std::vector<long> qe(terms_.size());
  long mn = 0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    long v = terms_[i].e[kQSlot];
    for (int s = 0; s < kQSlot; ++s)
      if (terms_[i].e[s] && k[s]) v += long(k[s]) * terms_[i].e[s];
    qe[i] = v;
    mn = (i == 0) ? v : std::min(mn, v);
  }
  Poly r = *this;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    long v = qe[i] - mn;
    if (v > 0xffff) throw std::overflow_error("q exponent overflow");
    r.terms_[i].e[kQSlot] = std::uint16_t(v);
  }
  qshift = mn;
  // order among terms can change only inside groups sharing all non-q
  // exponents, and those groups shift uniformly, so r is still sorted
  return r;
}

std::uint64_t Poly::eval_mod(const std::array<std::uint64_t, kSlots>& x, std::uint64_t p) const {
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    std::uint64_t c = mpz_fdiv_ui(t.c.get_mpz_t(), p);
    for (int s = 0; s < kSlots && c; ++s)
      if (t.e[s]) c = mulmod(c, powmod(x[s], t.e[s], p), p);
    acc += c;
    if (acc >= p) acc -= p;
  }
  return acc;
}

mpq_class Poly::eval(const std::array<mpq_class, kSlots>& x) const {
  mpq_class acc = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.c;
    for (int s = 0; s < kSlots; ++s)
      if (t.e[s]) {
        mpq_class pw = 1;
        for (int k = 0; k < t.e[s]; ++k) pw *= x[s];
        v *= pw;
      }
    acc += v;
  }
  return acc;
}

Poly Poly::map_slots(const std::array<int, kSlots>& dest) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term s{Exps{}, t.c};
    for (int i = 0; i < kSlots; ++i) {
      if (!t.e[i]) continue;
      unsigned v = unsigned(s.e[dest[i]]) + t.e[i];
      if (v > 0xffff) throw std::overflow_error("polynomial exponent overflow");
      s.e[dest[i]] = std::uint16_t(v);
    }
    ts.push_back(std::move(s));
  }
  return from_terms(std::move(ts));
}

std::size_t Poly::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    for (auto x : t.e) h = h * 1000003u ^ x;
    h = h * 1000003u ^ mpz_fdiv_ui(t.c.get_mpz_t(), 0x7fffffffu);
    h ^= std::size_t(sgn(t.c) + 1) << 7;
  }
  return h;
}

namespace {

// printing order: q, then z1..z7, w*, y*, u*
const std::vector<int>& print_slots() {
  static const std::vector<int> order = [] {
    std::vector<int> v{kQSlot};
    for (Family f : {Family::Z, Family::W1, Family::W2, Family::U})
      for (int i = 1; i <= kMaxIndex; ++i) v.push_back(var_slot(f, i));
    return v;
  }();
  return order;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    mpz_class c = t.c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    std::vector<std::string> factors;
    for (int s : print_slots()) {
      if (!t.e[s]) continue;
      std::string f = slot_name(s);
      if (t.e[s] > 1) f += "^" + std::to_string(t.e[s]);
      factors.push_back(f);
    }
    if (c != 1 || factors.empty()) factors.insert(factors.begin(), c.get_str());
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// parsing: sums of products of integers, variables and powers, with parens

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at " + std::to_string(i) + ": " + what);
  }
  Poly expr() {
    ws();
    Poly acc;
    bool neg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      neg = s[i] == '-';
      ++i;
    }
    Poly t = term();
    acc = neg ? -t : t;
    for (;;) {
      ws();
      if (i >= s.size() || (s[i] != '+' && s[i] != '-')) break;
      bool minus = s[i++] == '-';
      Poly u = term();
      if (minus) acc -= u;
      else acc += u;
    }
    return acc;
  }
  Poly term() {
    Poly acc = factor();
    for (;;) {
      ws();
      if (i >= s.size() || s[i] != '*') break;
      ++i;
      acc = acc * factor();
    }
    return acc;
  }
  Poly factor() {
    ws();
    Poly base;
    if (i < s.size() && s[i] == '(') {
      ++i;
      base = expr();
      ws();
      if (i >= s.size() || s[i] != ')') fail("expected ')'");
      ++i;
    } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      base = Poly(mpz_class(s.substr(i, j - i)));
      i = j;
    } else if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      char c = s[i++];
      if (c == 'q') {
        base = Poly::q();
      } else {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("variable without index");
        int idx = std::stoi(s.substr(i, j - i));
        i = j;
        Family f;
        switch (c) {
          case 'z': f = Family::Z; break;
          case 'u': f = Family::U; break;
          case 'w': f = Family::W1; break;
          case 'y': f = Family::W2; break;
          default: fail(std::string("unknown variable ") + c);
        }
        base = Poly::var(var_slot(f, idx));
      }
    } else {
      fail("unexpected input");
    }
    ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      ws();
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i) fail("expected exponent");
      unsigned k = unsigned(std::stoul(s.substr(i, j - i)));
      i = j;
      base = base.pow(k);
    }
    return base;
  }
};

}  // namespace

Poly parse_poly(const std::string& text) {
  Parser p{text};
  Poly r = p.expr();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return r;
}

// ---------------------------------------------------------------------------
// modular arithmetic

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  // extended Euclid on signed 128-bit values
  __int128 t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    __int128 qt = r / nr;
    __int128 tmp = t - qt * nt;
    t = nt;
    nt = tmp;
    tmp = r - qt * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return std::uint64_t(t);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // deterministic witness set for 64-bit integers
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int k = 1; k < r; ++k) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// exact division

bool divide_exact(const Poly& a, const Poly& b, Poly& quot) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  quot = Poly();
  if (a.is_zero()) return true;
  const Term& lb = b.lead();
  if (b.size() == 1) {
    std::vector<Term> q;
    q.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!exps_divides(lb.e, t.e) || !mpz_divisible_p(t.c.get_mpz_t(), lb.c.get_mpz_t())) return false;
      Term s{exps_sub(t.e, lb.e), 0};
      mpz_divexact(s.c.get_mpz_t(), t.c.get_mpz_t(), lb.c.get_mpz_t());
      q.push_back(std::move(s));
    }
    quot = Poly::from_terms(std::move(q));
    return true;
  }
  // cheap necessary conditions
  for (int s = 0; s < kSlots; ++s)
    if (a.degree(s) < b.degree(s) && a.degree(s) >= 0 && b.degree(s) > 0) return false;
  // remainder kept in an ordered map so each step touches only |b| entries
  std::map<Exps, mpz_class, std::greater<Exps>> r;
  for (const auto& t : a.terms()) r.emplace(t.e, t.c);
  std::vector<Term> q;
  mpz_class prod;
  while (!r.empty()) {
    auto it = r.begin();
    if (!exps_divides(lb.e, it->first) || !mpz_divisible_p(it->second.get_mpz_t(), lb.c.get_mpz_t())) return false;
    Term t{exps_sub(it->first, lb.e), 0};
    mpz_divexact(t.c.get_mpz_t(), it->second.get_mpz_t(), lb.c.get_mpz_t());
    r.erase(it);
    for (std::size_t k = 1; k < b.size(); ++k) {
      const Term& bt = b.terms()[k];
      prod = t.c * bt.c;
      auto [jt, inserted] = r.try_emplace(exps_add(bt.e, t.e));
      jt->second -= prod;
      if (jt->second == 0) r.erase(jt);
    }
    q.push_back(std::move(t));
  }
  quot = Poly::from_terms(std::move(q));
  return true;
}

Poly divexact(const Poly& a, const Poly& b) {
  Poly q;
  if (!divide_exact(a, b, q)) throw std::logic_error("inexact polynomial division");
  return q;
}

// ---------------------------------------------------------------------------
// gcd

namespace {

constexpr std::uint64_t kGcdPrime = 2305843009213693951ull;  // 2^61 - 1

Poly positive(Poly p) { return p.sign() < 0 ? -p : p; }

// univariate polynomial mod p, index = degree
using UMod = std::vector<std::uint64_t>;

void trim(UMod& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int umod_gcd_degree(UMod a, UMod b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a = a mod b
    std::uint64_t inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
      std::uint64_t f = mulmod(a.back(), inv, p);
      std::size_t off = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) {
        std::uint64_t sub = mulmod(f, b[k], p);
        a[off + k] = a[off + k] >= sub ? a[off + k] - sub : a[off + k] + p - sub;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return int(a.size()) - 1;
}

UMod eval_except(const Poly& f, int slot, const std::array<std::uint64_t, kSlots>& x) {
  const std::uint64_t p = kGcdPrime;
  std::uint32_t used = f.used_slots();
  std::array<std::vector<std::uint64_t>, kSlots> pw;
  UMod r(std::size_t(std::max(f.degree(slot), 0) + 1), 0);
  for (const auto& t : f.terms()) {
    std::uint64_t v = mpz_fdiv_ui(t.c.get_mpz_t(), p);
    for (int s = 0; s < kSlots; ++s) {
      if (s == slot || !(used >> s & 1) || t.e[s] == 0) continue;
      auto& tab = pw[std::size_t(s)];
      if (tab.empty()) tab.push_back(1);
      while (tab.size() <= t.e[s]) tab.push_back(mulmod(tab.back(), x[std::size_t(s)], p));
      v = mulmod(v, tab[t.e[s]], p);
    }
    std::uint64_t& acc = r[t.e[slot]];
    acc += v;
    if (acc >= p) acc -= p;
  }
  return r;
}

}  // namespace

bool may_divide(const Poly& a, const Poly& b) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  int slot = -1;
  for (int s = 0; s < kSlots; ++s)
    if (b.degree(s) > 0) {
      slot = s;
      break;
    }
  if (slot < 0) return true;
  static const std::array<std::uint64_t, kSlots> x = [] {
    std::array<std::uint64_t, kSlots> v{};
    std::mt19937_64 rng(0x5eed);
    for (auto& e : v) e = rng() % (kGcdPrime - 2) + 2;
    return v;
  }();
  UMod ub = eval_except(b, slot, x);
  trim(ub);
  if (ub.empty() || ub.back() == 0) return true;
  UMod ua = eval_except(a, slot, x);
  trim(ua);
  if (ua.empty()) return true;
  if (ua.size() < ub.size()) return false;
  std::uint64_t inv = invmod(ub.back(), kGcdPrime);
  const std::uint64_t p = kGcdPrime;
  while (ua.size() >= ub.size()) {
    std::uint64_t f = mulmod(ua.back(), inv, p);
    std::size_t off = ua.size() - ub.size();
    for (std::size_t k = 0; k < ub.size(); ++k) {
      std::uint64_t sub = mulmod(f, ub[k], p);
      ua[off + k] = ua[off + k] >= sub ? ua[off + k] - sub : ua[off + k] + p - sub;
    }
    trim(ua);
    if (ua.empty()) return true;
  }
  return false;
}

namespace {

// True when the gcd of a and b certainly has degree 0 in `slot`.
bool gcd_degree_zero(const Poly& a, const Poly& b, int slot, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::array<std::uint64_t, kSlots> x{};
    for (auto& v : x) v = rng() % (kGcdPrime - 2) + 2;
    UMod ua = eval_except(a, slot, x), ub = eval_except(b, slot, x);
    // leading coefficients must survive the evaluation
    if (ua.empty() || ua.back() == 0 || ub.empty() || ub.back() == 0) continue;
    return umod_gcd_degree(ua, ub, kGcdPrime) == 0;
  }
  return false;
}

Poly gcd_list(std::vector<Poly> ps) {
  std::sort(ps.begin(), ps.end(), [](const Poly& x, const Poly& y) { return x.size() < y.size(); });
  Poly g;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? positive(p) : gcd(g, p);
    if (g.is_one()) break;
  }
  return g;
}

// content in R[x_slot]
Poly content_in(const Poly& f, int slot) {
  return gcd_list(f.coefficients(slot));
}

std::vector<Poly> to_upoly(const Poly& f, int slot) {
  std::vector<Poly> cs = f.coefficients(slot);
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
  return cs;
}

// pseudo-remainder of a by b in R[x]
std::vector<Poly> prem(std::vector<Poly> a, const std::vector<Poly>& b) {
  const Poly& lb = b.back();
  int db = int(b.size()) - 1;
  int delta = int(a.size()) - 1 - db + 1;
  while (int(a.size()) - 1 >= db && !a.empty()) {
    Poly la = a.back();
    std::size_t off = a.size() - b.size();
    for (auto& c : a) c = c * lb;
    for (std::size_t k = 0; k < b.size(); ++k) a[off + k] -= la * b[k];
    --delta;
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  if (delta > 0) {
    Poly f = lb.pow(unsigned(delta));
    for (auto& c : a) c = c * f;
  }
  return a;
}

Poly subresultant_gcd(const Poly& a0, const Poly& b0, int slot) {
  Poly ca = content_in(a0, slot), cb = content_in(b0, slot);
  Poly cg = gcd(ca, cb);
  std::vector<Poly> a = to_upoly(divexact(a0, ca), slot);
  std::vector<Poly> b = to_upoly(divexact(b0, cb), slot);
  if (a.size() < b.size()) std::swap(a, b);
  Poly g(1), h(1);
  for (;;) {
    int d = int(a.size()) - int(b.size());
    std::vector<Poly> r = prem(a, b);
    if (r.empty()) break;
    if (r.size() == 1) return cg;  // constant remainder: primitive parts are coprime
    Poly div = g * h.pow(unsigned(d));
    for (auto& c : r) c = divexact(c, div);
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (d == 0) {
      // h unchanged
    } else if (d == 1) {
      h = g;
    } else {
      h = divexact(g.pow(unsigned(d)), h.pow(unsigned(d - 1)));
    }
  }
  Poly last = Poly::from_coefficients(b, slot);
  Poly pp = divexact(last, content_in(last, slot));
  return positive(cg * pp);
}

Poly gcd_primitive(const Poly& a, const Poly& b, std::mt19937_64& rng) {
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b || a == -b) return positive(a);
  std::uint32_t ua = a.used_slots(), ub = b.used_slots();
  if (ua != ub) {
    // a variable present in only one operand cannot occur in the gcd
    std::uint32_t only = ua ^ ub;
    int slot = std::countr_zero(only);
    const Poly& has = (ua >> slot) & 1 ? a : b;
    const Poly& other = (ua >> slot) & 1 ? b : a;
    std::vector<Poly> cs = has.coefficients(slot);
    cs.push_back(other);
    return gcd_list(std::move(cs));
  }
  Poly q;
  if (a.size() <= b.size() && divide_exact(b, a, q)) return positive(a);
  if (b.size() < a.size() && divide_exact(a, b, q)) return positive(b);
  int best = -1, best_deg = 1 << 30;
  for (int s = 0; s < kSlots; ++s) {
    if (!((ua >> s) & 1)) continue;
    if (gcd_degree_zero(a, b, s, rng)) {
      std::vector<Poly> cs = a.coefficients(s);
      std::vector<Poly> cb = b.coefficients(s);
      cs.insert(cs.end(), cb.begin(), cb.end());
      return gcd_list(std::move(cs));
    }
    int d = std::max(a.degree(s), b.degree(s));
    if (d < best_deg) {
      best_deg = d;
      best = s;
    }
  }
  return subresultant_gcd(a, b, best);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return positive(b);
  if (b.is_zero()) return positive(a);
  mpz_class ca = a.content(), cb = b.content();
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Exps ma = a.min_exps(), mb = b.min_exps(), m;
  for (int i = 0; i < kSlots; ++i) m[i] = std::min(ma[i], mb[i]);
  Poly pa = a.divexact_scalar(ca).div_monomial(ma);
  Poly pb = b.divexact_scalar(cb).div_monomial(mb);
  std::mt19937_64 rng(0x5eed);
  Poly g = gcd_primitive(pa, pb, rng);
  g = g.mul_monomial(m);
  g *= c;
  return positive(g);
}

}  // namespace dynq
