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

#include "dynq/pfaff.hpp"

#include <algorithm>

namespace dynq {

std::string bword_str(const BWord& w, PfVariant v) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& g : w) {
    if (!s.empty()) s += " ";
    s += v == PfVariant::Tilde ? "bt[" : "b[";
    for (std::size_t k = 0; k < g.size(); ++k) s += (k ? "," : "") + std::to_string(g[k]);
    s += "]";
  }
  return s;
}

std::vector<Permutation> block_ascending(int m, int blocks) {
  if (m < 1 || blocks < 0) throw std::invalid_argument("block_ascending: bad sizes");
  std::vector<Permutation> out;
  Permutation cur;
  std::vector<bool> used(std::size_t(m * blocks), false);
  std::function<void()> rec = [&]() {
    if (int(cur.size()) == m * blocks) {
      out.push_back(cur);
      return;
    }
    std::vector<int> free;
    for (int p = 0; p < m * blocks; ++p)
      if (!used[std::size_t(p)]) free.push_back(p);
    for (const auto& B : subsets(free, m)) {
      for (int p : B) {
        used[std::size_t(p)] = true;
        cur.push_back(p);
      }
      rec();
      for (int p : B) {
        used[std::size_t(p)] = false;
        cur.pop_back();
      }
    }
  };
  rec();
  return out;
}

std::vector<std::pair<BWord, Closed>> pf_closed(int m, const std::vector<int>& I, PfVariant v) {
  if (m < 1 || I.size() % std::size_t(m) != 0) throw std::invalid_argument("pf: |I| must be divisible by m");
  if (!std::is_sorted(I.begin(), I.end()) || std::adjacent_find(I.begin(), I.end()) != I.end())
    throw std::invalid_argument("pf: I must be strictly increasing");
  int blocks = int(I.size()) / m;
  std::vector<std::pair<BWord, Closed>> out;
  for (const auto& sigma : block_ascending(m, blocks)) {
    BWord w;
    auto at = [&](int pos) { return I[std::size_t(sigma[std::size_t(pos)])]; };
    if (v == PfVariant::Plain) {
      for (int k = 0; k < blocks; ++k) {
        BGen g;
        for (int r = 0; r < m; ++r) g.push_back(at(k * m + r));
        w.push_back(g);
      }
      out.emplace_back(std::move(w), closed_sign_S(sigma, I, Side::Lambda));
    } else {
      for (int k = blocks - 1; k >= 0; --k) {
        BGen g;
        for (int r = m - 1; r >= 0; --r) g.push_back(at(k * m + r));
        w.push_back(g);
      }
      out.emplace_back(std::move(w), closed_sign_S_tilde(sigma, I, Side::Lambda));
    }
  }
  return out;
}

void require_indices_within(const Closed& c, const std::vector<int>& allowed) {
  auto ok = [&](int i) { return std::find(allowed.begin(), allowed.end(), i) != allowed.end(); };
  for (const auto& hf : c.hs)
    if (!ok(hf.i) || !ok(hf.j)) throw std::logic_error("coefficient would have to pass a b-generator it depends on");
  if (!c.general.empty()) throw std::logic_error("unexpected general coefficient in a Pfaffian sign");
}

// ---------------------------------------------------------------------------

std::string PfSum::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms) {
    if (!out.empty()) out += " + ";
    if (w.empty()) {
      out += "[" + c.str() + "]";
    } else {
      if (c != Coefficient(1)) out += "[" + c.str() + "] ";
      out += bword_str(w, variant);
    }
  }
  return out;
}

namespace {

PfSum make_sum(int m, int n, const std::vector<int>& I, PfVariant v) {
  ExactField f;
  PfSum s;
  s.variant = v;
  s.m = m;
  auto idx = I.empty() ? range_vec(1, m * n) : I;
  for (int i : idx)
    if (i < 1 || i > m * n) throw std::invalid_argument("pf: index out of range");
  for (auto& [w, c] : pf_terms(f, m, idx, v))
    if (!c.is_zero()) s.terms.emplace(w, std::move(c));
  return s;
}

PfSum to_sum(int m, PfVariant v, PfTerms<Coefficient>&& t) {
  PfSum s;
  s.variant = v;
  s.m = m;
  for (auto& [w, c] : t)
    if (!c.is_zero()) s.terms.emplace(w, std::move(c));
  return s;
}

}  // namespace

PfSum pf(int m, int n, const std::vector<int>& I) { return make_sum(m, n, I, PfVariant::Plain); }
PfSum pf_tilde(int m, int n, const std::vector<int>& I) { return make_sum(m, n, I, PfVariant::Tilde); }

std::pair<PfSum, PfSum> pf_laplace_check(int m, int n, int t, PfVariant v) {
  ExactField f;
  auto [l, r] = pf_laplace_sides(f, m, n, t, v);
  return {to_sum(m, v, std::move(l)), to_sum(m, v, std::move(r))};
}

// ---------------------------------------------------------------------------

void PfTensor::add(const BWord& w, const Element& x) {
  if (x.is_zero()) return;
  auto [it, inserted] = parts.try_emplace(w, x);
  if (!inserted) {
    it->second = it->second + x;
    if (it->second.is_zero()) parts.erase(it);
  }
}

std::string PfTensor::str() const {
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& [w, x] : parts)
    for (const auto& [m, c] : x.terms()) {
      if (!out.empty()) out += " + ";
      std::string ts = m.empty() ? "1" : word_str(m), bs = bword_str(w, variant);
      out += "[" + c.str() + "] " + (variant == PfVariant::Plain ? ts + " (x) " + bs : bs + " (x) " + ts);
    }
  return out;
}

PfTensor c_entry(Algebra& A, int m, const std::vector<int>& K, PfVariant v) {
  if (int(K.size()) != m) throw std::invalid_argument("c_entry: K must have m indices");
  PfTensor t;
  t.variant = v;
  t.N = A.n();
  for (const auto& J : subsets(range_vec(1, A.n()), m)) {
    if (v == PfVariant::Plain)
      t.add({J}, A.minor_xi(K, J));
    else
      t.add({BGen(J.rbegin(), J.rend())}, A.minor_xi(J, K));
  }
  return t;
}

std::pair<PfTensor, PfTensor> pf_transform_check(Algebra& A, int m, int n, PfVariant v) {
  if (A.n() != m * n) throw std::invalid_argument("pf_transform_check: algebra size must be m*n");
  PfTensor lhs, rhs;
  lhs.variant = rhs.variant = v;
  lhs.N = rhs.N = A.n();
  pf_transform_leaves(A.engine(), m, n, v, [&](const BWord& w, const ExactTerms& l, const ExactTerms& r) {
    lhs.add(w, Element(A.n(), l));
    rhs.add(w, Element(A.n(), r));
  });
  return {std::move(lhs), std::move(rhs)};
}

// ---------------------------------------------------------------------------

OmegaTerms omega_power(int n, int k, PfVariant v) {
  if (n < 1 || 2 * n > kMaxN || k < 0) throw std::invalid_argument("omega_power: bad sizes");
  const int N = 2 * n;
  const WedgeTag tag = v == PfVariant::Plain ? WedgeTag::W : WedgeTag::V;
  OmegaTerms omega;
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      if (v == PfVariant::Plain)
        omega[{{i, j}, {{i, j}}}] = Coefficient(1);
      else
        omega[{{j, i}, {{j, i}}}] = Coefficient(1);
    }
  OmegaTerms acc;
  acc[{{}, {}}] = Coefficient(1);
  for (int step = 0; step < k; ++step) {
    OmegaTerms next;
    for (const auto& [k1, c1] : acc) {
      // c2 passes the first wedge word (equivalently, the first b-word)
      ShiftVector s(N);
      for (int i : k1.first) s.lambda[std::size_t(i - 1)] -= 1;
      for (const auto& [k2, c2] : omega) {
        WedgeWord w = k1.first;
        w.insert(w.end(), k2.first.begin(), k2.first.end());
        Coefficient kc;
        WedgeWord out;
        if (!wedge_normalize(tag, w, kc, out)) continue;
        BWord b = k1.second;
        b.insert(b.end(), k2.second.begin(), k2.second.end());
        Coefficient val = c1 * kc * c2.shifted(s);
        auto [it, inserted] = next.try_emplace({out, b}, val);
        if (!inserted) {
          it->second += val;
          if (it->second.is_zero()) next.erase(it);
        }
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace dynq
