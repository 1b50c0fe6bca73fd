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

// Pfaffians and hyper-Pfaffians over the free algebras of b-generators.
// b-words are never reordered; every coefficient sits on the far left.

#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dynq/comod.hpp"
#include "dynq/verdict.hpp"

namespace dynq {

enum class PfVariant : std::uint8_t { Plain, Tilde };

// b_I as its index tuple in printed order (ascending for b, descending for bt)
using BGen = std::vector<int>;
using BWord = std::vector<BGen>;

template <class S>
using PfTerms = std::map<BWord, S>;

std::string bword_str(const BWord& w, PfVariant v);

// permutations of 0..m*blocks-1 ascending inside each block of size m
std::vector<Permutation> block_ascending(int m, int blocks);

// Pf_m(B_I) (or the tilde form) with closed-form coefficients; I ascending,
// |I| divisible by m, the empty set giving 1
std::vector<std::pair<BWord, Closed>> pf_closed(int m, const std::vector<int>& I, PfVariant v);

template <class F>
PfTerms<typename F::Scalar> pf_terms(F& f, int m, const std::vector<int>& I, PfVariant v) {
  PfTerms<typename F::Scalar> out;
  for (const auto& [w, c] : pf_closed(m, I, v)) out.emplace(w, f.value(c));
  return out;
}

// throws unless every h factor of c involves only indices of `allowed`; the
// Laplace sums need this to move a coefficient left past b-generators
void require_indices_within(const Closed& c, const std::vector<int>& allowed);

// (Pf(B), sum over |I| = m t of sign(I;I^c) Pf(B_I) Pf(B_{I^c})); the tilde
// variant uses the tilde sign and tilde Pfaffians
template <class F>
std::pair<PfTerms<typename F::Scalar>, PfTerms<typename F::Scalar>> pf_laplace_sides(F& f, int m, int n, int t,
                                                                                     PfVariant v) {
  using S = typename F::Scalar;
  if (m < 1 || n < 0 || t < 0 || t > n) throw std::invalid_argument("pf_laplace: need 0 <= t <= n");
  auto full = range_vec(1, m * n);
  PfTerms<S> lhs = pf_terms(f, m, full, v), rhs;
  for (const auto& I : subsets(full, m * t)) {
    auto Ic = complement_in(full, I);
    Closed s = closed_qsign(I, Ic, Side::Lambda, v == PfVariant::Tilde ? SignVariant::Tilde : SignVariant::Plain);
    auto left = pf_closed(m, I, v), right = pf_closed(m, Ic, v);
    for (const auto& [w2, c2] : right) require_indices_within(c2, Ic);
    for (const auto& [w1, c1] : left)
      for (const auto& [w2, c2] : right) {
        BWord w = w1;
        w.insert(w.end(), w2.begin(), w2.end());
        S val = f.value(s * c1 * c2);
        auto [it, inserted] = rhs.try_emplace(w, val);
        if (!inserted) it->second += val;
      }
  }
  return {std::move(lhs), std::move(rhs)};
}

template <class F>
void compare_pf(F& f, Verdict& v, const PfTerms<typename F::Scalar>& a, const PfTerms<typename F::Scalar>& b,
                const std::string& label) {
  ++v.checked;
  v.terms += long(a.size() + b.size());
  PfTerms<typename F::Scalar> d = a;
  for (const auto& [w, c] : b) {
    auto [it, inserted] = d.try_emplace(w, f.zero());
    it->second -= c;
  }
  for (const auto& [w, c] : d)
    if (!vanishes_into<F>(v, c)) {
      v.fail(label + ": coefficient of " + bword_str(w, PfVariant::Plain) + " differs by " + scalar_str(c));
      return;
    }
}

// Transform identity, expanded block by block. For every choice of column
// tuples J_1..J_n the coefficient of b_{J_1}...b_{J_n} on each side is handed
// to `leaf(bword, lhs, rhs)`.
//   plain: Pf_m(C) with c_I = sum_J xi^I_J (x) b_J against det (x) Pf_m(B)
//   tilde: with c_I = sum_J bt_J (x) xi^J_I against Pft_m(Bt) (x) det
// The sign S(sigma) factors over blocks as qsign(earlier rows; new block),
// so a partial product over row set U is sum_B qsign(U\B;B) P(U\B) xi^B_J.
template <class F, class Leaf>
void pf_transform_leaves(Engine<F>& e, int m, int n, PfVariant v, Leaf&& leaf) {
  using S = typename F::Scalar;
  int N = m * n;
  if (e.n() != N) throw std::invalid_argument("pf_transform: engine size must be m*n");
  if (N > 31) throw std::invalid_argument("pf_transform: too many indices");
  F& f = e.field();
  const bool tilde = v == PfVariant::Tilde;
  auto full = range_vec(1, N);
  auto tups = subsets(full, m);
  std::vector<unsigned> tmask;
  for (const auto& B : tups) {
    unsigned bm = 0;
    for (int x : B) bm |= 1u << (x - 1);
    tmask.push_back(bm);
  }
  Terms<S> det = e.normalize(xi_raw(full, full));
  std::vector<std::size_t> chosen(std::size_t(n), 0);
  std::vector<std::map<unsigned, Terms<S>>> level(std::size_t(n) + 1);
  level[0][0] = e.unit();
  const unsigned all = N == 32 ? ~0u : (1u << N) - 1;

  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      BWord w;
      std::vector<int> flat, cat;
      for (int b = 0; b < n; ++b) {
        const auto& J = tups[chosen[std::size_t(b)]];
        w.push_back(tilde ? BGen(J.rbegin(), J.rend()) : J);
        flat.insert(flat.end(), J.begin(), J.end());
      }
      for (int b = n - 1; b >= 0; --b) {
        const auto& J = tups[chosen[std::size_t(b)]];
        cat.insert(cat.end(), J.begin(), J.end());
      }
      auto sorted = flat;
      std::sort(sorted.begin(), sorted.end());
      Terms<S> rhs;
      if (sorted == full) {
        Permutation p;
        for (int x : tilde ? cat : flat) p.push_back(x - 1);
        // det (x) S b = mu_r(S) det (x) b, and a uniform shift fixes S
        Closed c = tilde ? closed_sign_S_tilde(p, full, Side::Lambda) : closed_sign_S(p, full, Side::Mu);
        rhs = terms_scale(det, f.value(c));
      }
      auto it = level[std::size_t(n)].find(all);
      leaf(w, it == level[std::size_t(n)].end() ? Terms<S>{} : it->second, rhs);
      return;
    }
    for (std::size_t ji = 0; ji < tups.size(); ++ji) {
      chosen[std::size_t(k)] = ji;
      auto& next = level[std::size_t(k) + 1];
      next.clear();
      for (const auto& [mask, prev] : level[std::size_t(k)]) {
        std::vector<int> rest;
        for (int x = 1; x <= N; ++x)
          if (mask >> (x - 1) & 1) rest.push_back(x);
        for (std::size_t bi = 0; bi < tups.size(); ++bi) {
          if (tmask[bi] & mask) continue;
          const auto& B = tups[bi];
          Closed sg = tilde ? closed_qsign(rest, B, Side::Mu, SignVariant::Tilde) : closed_qsign(rest, B, Side::Lambda);
          RawSum x = tilde ? xi_raw(tups[ji], B) : xi_raw(B, tups[ji]);
          Terms<S> prod = terms_scale(e.mul_raw(prev, x), f.value(sg));
          auto& tgt = next[mask | tmask[bi]];
          tgt = terms_combine<F>(tgt, prod, f.one());
        }
      }
      rec(k + 1);
    }
  };
  rec(0);
}

template <class F>
Verdict pf_transform_verdict(Engine<F>& e, int m, int n, PfVariant v) {
  Verdict out;
  pf_transform_leaves(e, m, n, v, [&](const BWord& w, const auto& lhs, const auto& rhs) {
    compare_terms(e.field(), out, lhs, rhs, "coefficient of " + bword_str(w, v));
  });
  return out;
}

// ---------------------------------------------------------------------------
// exact front end

struct PfSum {
  PfVariant variant = PfVariant::Plain;
  int m = 2;
  std::map<BWord, Coefficient> terms;

  std::string str() const;
  friend bool operator==(const PfSum& a, const PfSum& b) {
    return a.variant == b.variant && a.terms == b.terms;
  }
};

// I empty means the full index set [1, m n]
PfSum pf(int m, int n, const std::vector<int>& I = {});
PfSum pf_tilde(int m, int n, const std::vector<int>& I = {});
std::pair<PfSum, PfSum> pf_laplace_check(int m, int n, int t, PfVariant v);

// F (x) B (plain) or Bt (x) F (tilde), keyed by b-word; the F part carries the
// coefficients on the far left of its word
struct PfTensor {
  PfVariant variant = PfVariant::Plain;
  int N = 0;
  std::map<BWord, Element> parts;

  void add(const BWord& w, const Element& x);
  std::string str() const;
  friend bool operator==(const PfTensor& a, const PfTensor& b) {
    return a.variant == b.variant && a.parts == b.parts;
  }
};

// c_K = sum_J xi^K_J (x) b_J, or sum_J bt_J (x) xi^J_K; minors in F_R(M(A.n()))
PfTensor c_entry(Algebra& A, int m, const std::vector<int>& K, PfVariant v);
// both sides of the transform identity; A.n() must be m n
std::pair<PfTensor, PfTensor> pf_transform_check(Algebra& A, int m, int n, PfVariant v);

// Omega^k with Omega = sum_{i<j} w_i w_j (x) b_ij (plain) or
// sum_{i>j} bt_ij (x) v_i v_j (tilde), over 2n indices
using OmegaTerms = std::map<std::pair<WedgeWord, BWord>, Coefficient>;
OmegaTerms omega_power(int n, int k, PfVariant v);

}  // namespace dynq
