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

#include "dynq/comod.hpp"

#include <stdexcept>

namespace dynq {

bool wedge_normalize(WedgeTag tag, const WedgeWord& w, Coefficient& c, WedgeWord& out) {
  out = w;
  c = Coefficient(1);
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (out[a] == out[b]) return false;
  // adjacent swaps; the emitted h only involves the swapped indices, which
  // the prefix never contains, so moving it left needs no shift
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < out.size(); ++p) {
      int x = out[p], y = out[p + 1];
      if (tag == WedgeTag::W && x > y) {
        c = c * -h_fun(x, y, Side::Lambda);  // w_j w_i = -h(l_j - l_i) w_i w_j
      } else if (tag == WedgeTag::V && x < y) {
        c = c * -h_fun(x, y, Side::Lambda);  // v_i v_j = -h(l_i - l_j) v_j v_i
      } else {
        continue;
      }
      std::swap(out[p], out[p + 1]);
      changed = true;
    }
  }
  return true;
}

std::string wedge_word_str(WedgeTag tag, const WedgeWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int i : w) s += std::string(tag == WedgeTag::W ? "w[" : "v[") + std::to_string(i) + "]";
  return s;
}

WedgeElement WedgeElement::gen(WedgeTag tag, int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("wedge index out of range");
  return word(tag, n, {i});
}

WedgeElement WedgeElement::scalar(WedgeTag tag, int n, const Coefficient& f) { return word(tag, n, {}, f); }

WedgeElement WedgeElement::word(WedgeTag tag, int n, const WedgeWord& w, const Coefficient& c) {
  WedgeElement e(tag, n);
  for (int i : w)
    if (i < 1 || i > n) throw std::invalid_argument("wedge index out of range");
  Coefficient k;
  WedgeWord out;
  if (wedge_normalize(tag, w, k, out)) e.add(out, c * k);
  return e;
}

void WedgeElement::add(const WedgeWord& w, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WedgeElement operator+(const WedgeElement& a, const WedgeElement& b) {
  if (a.tag_ != b.tag_) throw std::invalid_argument("adding V and W elements");
  WedgeElement r = a;
  r.n_ = std::max(a.n_, b.n_);
  for (const auto& [w, c] : b.terms_) r.add(w, c);
  return r;
}

std::string WedgeElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + c.str() + "] " + wedge_word_str(tag_, w);
  }
  return out;
}

WedgeElement wedge_mul(const WedgeElement& a, const WedgeElement& b) {
  if (a.tag() != b.tag()) throw std::invalid_argument("multiplying V and W elements");
  int n = std::max(a.n(), b.n());
  WedgeElement r(a.tag(), n);
  for (const auto& [wa, ca] : a.terms()) {
    // w_i g = g(lambda - omega(i)) w_i
    ShiftVector s(n);
    for (int i : wa) s.lambda[std::size_t(i - 1)] -= 1;
    for (const auto& [wb, cb] : b.terms()) {
      WedgeWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      Coefficient k;
      WedgeWord out;
      if (wedge_normalize(a.tag(), w, k, out)) r.add(out, ca * k * cb.shifted(s));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

Element MixedTensor::part(const WedgeWord& w) const {
  auto it = parts_.find(w);
  return it == parts_.end() ? Element(n_, {}) : it->second;
}

void MixedTensor::add(const WedgeWord& w, const Element& x) {
  if (x.is_zero()) return;
  auto [it, inserted] = parts_.try_emplace(w, x);
  if (!inserted) {
    it->second = it->second + x;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

MixedTensor operator+(const MixedTensor& a, const MixedTensor& b) {
  MixedTensor r = a;
  for (const auto& [w, x] : b.parts_) r.add(w, x);
  return r;
}

MixedTensor MixedTensor::operator-() const {
  MixedTensor r(tag_, n_);
  for (const auto& [w, x] : parts_) r.parts_.emplace(w, -x);
  return r;
}

std::string MixedTensor::str() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& [w, x] : parts_)
    for (const auto& [m, c] : x.terms()) {
      if (!out.empty()) out += " + ";
      std::string ws = wedge_word_str(tag_, w), ts = m.empty() ? "1" : word_str(m);
      out += "[" + c.str() + "] " + (tag_ == WedgeTag::W ? ws + " (x) " + ts : ts + " (x) " + ws);
    }
  return out;
}

MixedTensor Comodule::mul(const MixedTensor& a, const MixedTensor& b) {
  if (a.tag() != b.tag()) throw std::invalid_argument("mixed tensors of different kinds");
  MixedTensor r(a.tag(), A_.n());
  for (const auto& [wa, xa] : a.parts())
    for (const auto& [wb, xb] : b.parts()) {
      WedgeWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      Coefficient k;
      WedgeWord out;
      if (!wedge_normalize(a.tag(), w, k, out)) continue;
      Element prod = A_.mul(xa, xb);
      // f w (x) a = w (x) mu_l(f) a;  a (x) f v = a mu_r(f) (x) v
      r.add(out, a.tag() == WedgeTag::W ? prod.scaled(k) : A_.mul(prod, A_.scalar_r(k)));
    }
  return r;
}

MixedTensor Comodule::scalar(WedgeTag tag, const Coefficient& f) {
  MixedTensor r(tag, A_.n());
  r.add({}, tag == WedgeTag::W ? A_.scalar_r(f) : A_.scalar_l(f));
  return r;
}

MixedTensor Comodule::coaction_gen(WedgeTag tag, int i) {
  MixedTensor r(tag, A_.n());
  for (int j = 1; j <= A_.n(); ++j) r.add({j}, tag == WedgeTag::W ? A_.gen(j, i) : A_.gen(i, j));
  return r;
}

MixedTensor Comodule::coaction_R(const WedgeElement& e) {
  if (e.tag() != WedgeTag::W) throw std::invalid_argument("coaction_R acts on W");
  MixedTensor r(WedgeTag::W, A_.n());
  for (const auto& [w, c] : e.terms()) {
    MixedTensor x = scalar(WedgeTag::W, c);
    for (int i : w) x = mul(x, coaction_gen(WedgeTag::W, i));
    r = r + x;
  }
  return r;
}

MixedTensor Comodule::coaction_L(const WedgeElement& e) {
  if (e.tag() != WedgeTag::V) throw std::invalid_argument("coaction_L acts on V");
  MixedTensor r(WedgeTag::V, A_.n());
  for (const auto& [w, c] : e.terms()) {
    MixedTensor x = scalar(WedgeTag::V, c);
    for (int i : w) x = mul(x, coaction_gen(WedgeTag::V, i));
    r = r + x;
  }
  return r;
}

Element Comodule::minor_oracle(const std::vector<int>& K, const std::vector<int>& J) {
  if (K.size() != J.size()) return A_.zero();
  MixedTensor x = scalar(WedgeTag::W, Coefficient(1));
  for (int j : J) x = mul(x, coaction_gen(WedgeTag::W, j));
  return x.part(K);
}

Element Comodule::minor_oracle_left(const std::vector<int>& I, const std::vector<int>& K) {
  if (K.size() != I.size()) return A_.zero();
  // v_I and v_K both read in storage (descending) order
  MixedTensor x = scalar(WedgeTag::V, Coefficient(1));
  for (auto it = I.rbegin(); it != I.rend(); ++it) x = mul(x, coaction_gen(WedgeTag::V, *it));
  return x.part(WedgeWord(K.rbegin(), K.rend()));
}

MixedTensor Comodule::relation_image(WedgeTag tag, int i, int j) {
  if (!(i < j)) throw std::invalid_argument("relation_image expects i < j");
  MixedTensor gi = coaction_gen(tag, i), gj = coaction_gen(tag, j);
  if (tag == WedgeTag::W)
    return mul(gj, gi) + mul(scalar(tag, h_fun(j, i, Side::Lambda)), mul(gi, gj));
  return mul(gi, gj) + mul(scalar(tag, h_fun(i, j, Side::Lambda)), mul(gj, gi));
}

MixedTensor Comodule::square_image(WedgeTag tag, int i) {
  MixedTensor g = coaction_gen(tag, i);
  return mul(g, g);
}

std::vector<std::pair<TensorElement, TensorElement>> Comodule::coassociativity_sides(const std::vector<int>& J) {
  MixedTensor x = scalar(WedgeTag::W, Coefficient(1));
  for (int j : J) x = mul(x, coaction_gen(WedgeTag::W, j));
  int n = A_.n();
  std::vector<std::pair<TensorElement, TensorElement>> out;
  for (const auto& L : subsets(range_vec(1, n), int(J.size()))) {
    TensorElement lhs = A_.coproduct(x.part(L));
    TensorElement rhs(n, 2);
    for (const auto& [K, AK] : x.parts()) {
      // alpha_R(f w_K) = (1 (x) mu_r(f)) alpha_R(w_K): the lambda side of A_K
      // lands on the mu side of the middle factor, left of its word
      Element Y = minor_oracle(L, K);
      for (const auto& [wy, cy] : Y.terms())
        for (const auto& [wa, ca] : AK.terms()) rhs.add({wy, wa}, to_factor(cy, 0, 2) * to_factor(ca, 1, 2));
    }
    out.emplace_back(std::move(lhs), std::move(rhs));
  }
  return out;
}

}  // namespace dynq
