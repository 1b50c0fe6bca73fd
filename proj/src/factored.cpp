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

#include "dynq/factored.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace dynq {

namespace {

// Atoms are primitive, free of monomial factors and have a positive leading
// coefficient. Binomial atoms are irreducible; a leftover cofactor that is
// not already split by known atoms is interned whole.
class AtomTable {
 public:
  const Poly& get(int id) {
    std::lock_guard<std::mutex> lock(mu_);
    return polys_[std::size_t(id)];
  }
  int intern(const Poly& p) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(p);
    if (it != ids_.end()) return it->second;
    int id = int(polys_.size());
    polys_.push_back(p);
    ids_.emplace(p, id);
    return id;
  }
  std::size_t size() {
    std::lock_guard<std::mutex> lock(mu_);
    return polys_.size();
  }

 private:
  std::mutex mu_;
  std::deque<Poly> polys_;  // stable references
  std::map<Poly, int> ids_;
};

AtomTable& atoms() {
  static AtomTable t;
  return t;
}

Exps exps_min(const Exps& a, const Exps& b) {
  Exps r;
  for (int s = 0; s < kSlots; ++s) r[s] = std::min(a[s], b[s]);
  return r;
}

Exps exps_max(const Exps& a, const Exps& b) {
  Exps r;
  for (int s = 0; s < kSlots; ++s) r[s] = std::max(a[s], b[s]);
  return r;
}

Exps exps_diff(const Exps& a, const Exps& b) {
  Exps r;
  for (int s = 0; s < kSlots; ++s) r[s] = std::uint16_t(a[s] - b[s]);
  return r;
}

bool exps_zero(const Exps& a) { return a == Exps{}; }

// strips atoms of `den` out of `num` while they divide it
void cancel_atoms(Poly& num, std::vector<std::pair<int, int>>& den) {
  Poly q;
  for (auto& [id, k] : den) {
    const Poly& a = atoms().get(id);
    while (k > 0 && may_divide(num, a) && divide_exact(num, a, q)) {
      num = std::move(q);
      --k;
    }
  }
  std::erase_if(den, [](const auto& e) { return e.second == 0; });
}

void cancel_scalars(FactoredValue& v) {
  if (v.num.is_zero()) {
    v.cden = 1;
    v.mden = Exps{};
    v.atoms.clear();
    return;
  }
  if (!exps_zero(v.mden)) {
    Exps m = exps_min(v.num.min_exps(), v.mden);
    if (!exps_zero(m)) {
      v.num = v.num.div_monomial(m);
      v.mden = exps_diff(v.mden, m);
    }
  }
  if (v.cden != 1) {
    mpz_class g;
    mpz_class c = v.num.content();
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), v.cden.get_mpz_t());
    if (g != 1) {
      v.num = v.num.divexact_scalar(g);
      v.cden /= g;
    }
  }
}

Poly atom_power_product(const std::vector<std::pair<int, int>>& fs) {
  Poly r(1);
  for (const auto& [id, k] : fs)
    for (int e = 0; e < k; ++e) r = r * atoms().get(id);
  return r;
}

// p = sign * c * x^m * prod atoms; c > 0
struct Split {
  int sign = 1;
  mpz_class c = 1;
  Exps m{};
  std::vector<std::pair<int, int>> fs;
};

Split split_poly(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("division by zero");
  Split s;
  s.c = p.content();
  s.m = p.min_exps();
  Poly r = p.divexact_scalar(s.c).div_monomial(s.m);
  if (r.sign() < 0) {
    s.sign = -1;
    r = -r;
  }
  if (r.is_constant()) return s;
  std::map<int, int> found;
  Poly q;
  std::size_t count = atoms().size();
  for (std::size_t id = 0; id < count && !r.is_constant(); ++id) {
    const Poly& a = atoms().get(int(id));
    while (a.total_degree() <= r.total_degree() && may_divide(r, a) && divide_exact(r, a, q)) {
      r = std::move(q);
      ++found[int(id)];
    }
  }
  if (r.sign() < 0) {
    s.sign = -s.sign;
    r = -r;
  }
  if (!r.is_constant()) ++found[atoms().intern(r)];
  s.fs.assign(found.begin(), found.end());
  return s;
}

std::vector<std::pair<int, int>> merge_add(const std::vector<std::pair<int, int>>& a,
                                           const std::vector<std::pair<int, int>>& b) {
  std::map<int, int> m(a.begin(), a.end());
  for (const auto& [id, k] : b) m[id] += k;
  return {m.begin(), m.end()};
}

}  // namespace

FactoredValue FactoredValue::from_poly(const Poly& p) {
  FactoredValue v;
  v.num = p;
  return v;
}

FactoredValue FactoredValue::from_coefficient(const Coefficient& c) {
  if (c.is_zero()) return FactoredValue();
  FactoredValue d = inv(from_poly(c.den()));
  d.num = d.num * c.num();
  cancel_atoms(d.num, d.atoms);
  cancel_scalars(d);
  return d;
}

Poly FactoredValue::den() const {
  Poly d = atom_power_product(atoms).mul_monomial(mden);
  d *= cden;
  return d;
}

Coefficient FactoredValue::coefficient() const {
  if (num.is_zero()) return Coefficient();
  return Coefficient::fraction(num, den());
}

FactoredValue FactoredValue::operator-() const {
  FactoredValue r = *this;
  r.num = -r.num;
  return r;
}

FactoredValue operator*(const FactoredValue& a, const FactoredValue& b) {
  if (a.is_zero() || b.is_zero()) return FactoredValue();
  // cross-cancel first; both operands are already reduced
  Poly an = a.num, bn = b.num;
  auto ad = a.atoms, bd = b.atoms;
  if (!bd.empty()) cancel_atoms(an, bd);
  if (!ad.empty()) cancel_atoms(bn, ad);
  FactoredValue r;
  r.num = an * bn;
  r.cden = a.cden * b.cden;
  for (int s = 0; s < kSlots; ++s) r.mden[s] = std::uint16_t(a.mden[s] + b.mden[s]);
  r.atoms = merge_add(ad, bd);
  cancel_scalars(r);
  return r;
}

FactoredValue operator+(const FactoredValue& a, const FactoredValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  FactoredValue r;
  mpz_lcm(r.cden.get_mpz_t(), a.cden.get_mpz_t(), b.cden.get_mpz_t());
  r.mden = exps_max(a.mden, b.mden);
  std::map<int, int> la(a.atoms.begin(), a.atoms.end()), lb(b.atoms.begin(), b.atoms.end()), l = la;
  for (const auto& [id, k] : lb) l[id] = std::max(l[id], k);
  std::vector<std::pair<int, int>> fa, fb;
  for (const auto& [id, k] : l) {
    if (k > la[id]) fa.emplace_back(id, k - la[id]);
    if (k > lb[id]) fb.emplace_back(id, k - lb[id]);
  }
  Poly ta = (fa.empty() ? a.num : a.num * atom_power_product(fa)).mul_monomial(exps_diff(r.mden, a.mden));
  Poly tb = (fb.empty() ? b.num : b.num * atom_power_product(fb)).mul_monomial(exps_diff(r.mden, b.mden));
  ta *= mpz_class(r.cden / a.cden);
  tb *= mpz_class(r.cden / b.cden);
  r.num = ta + tb;
  r.atoms.assign(l.begin(), l.end());
  if (r.num.is_zero()) return FactoredValue();
  cancel_atoms(r.num, r.atoms);
  cancel_scalars(r);
  return r;
}

FactoredValue inv(const FactoredValue& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero");
  Split s = split_poly(a.num);
  FactoredValue r;
  r.num = atom_power_product(a.atoms).mul_monomial(a.mden);
  r.num *= mpz_class(a.cden * s.sign);
  r.cden = s.c;
  r.mden = s.m;
  r.atoms = std::move(s.fs);
  cancel_scalars(r);
  return r;
}

const FactoredValue& FactoredField::h(int i, int j, Family fam, int d) {
  auto key = std::make_tuple(i, j, int(fam), d);
  auto it = hcache_.find(key);
  if (it != hcache_.end()) return it->second;
  return hcache_.emplace(key, FactoredValue::from_coefficient(h_shifted(i, j, fam, d))).first->second;
}

FactoredValue FactoredField::value(const Closed& c, const ShiftVector& at) { return value(c.shifted(at)); }

FactoredValue FactoredField::value(const Closed& c) {
  if (c.scalar == 0) return FactoredValue();
  FactoredValue r(c.scalar);
  for (const auto& f : c.hs) {
    const FactoredValue& hv = h(f.i, f.j, f.fam, f.d);
    r = r * (f.power > 0 ? hv : inv(hv));
  }
  for (const auto& g : c.general) r = r * FactoredValue::from_coefficient(g.first->shifted(g.second));
  return r;
}

}  // namespace dynq
