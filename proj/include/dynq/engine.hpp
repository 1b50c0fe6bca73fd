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

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynq/field.hpp"

namespace dynq {

// Generator t_ij is the byte 16*i + j, so byte order is the row-major order
// used for normal forms.
using Word = std::string;
inline constexpr int kMaxN = 7;

inline char gen_code(int i, int j) { return char(16 * i + j); }
inline int gen_row(char c) { return static_cast<unsigned char>(c) >> 4; }
inline int gen_col(char c) { return static_cast<unsigned char>(c) & 15; }
inline bool is_normal(const Word& w) { return std::is_sorted(w.begin(), w.end()); }

inline bool word_less(const Word& a, const Word& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

// sign * (row content, column content) of w as a shift vector of size n
inline ShiftVector word_shift(const Word& w, int n, int sign = -1) {
  ShiftVector s(n);
  for (char c : w) {
    s.lambda[std::size_t(gen_row(c) - 1)] += sign;
    s.mu[std::size_t(gen_col(c) - 1)] += sign;
  }
  return s;
}

template <class S>
using Terms = std::vector<std::pair<Word, S>>;

struct RawTerm {
  Closed c;
  Word w;
};
using RawSum = std::vector<RawTerm>;

template <class S>
class Accum {
 public:
  void add(const Word& w, const S& c) {
    auto [it, inserted] = m_.try_emplace(w, c);
    if (!inserted) it->second += c;
  }
  void add_all(const Terms<S>& t) {
    for (const auto& [w, c] : t) add(w, c);
  }
  template <class F>
  Terms<S> take() {
    Terms<S> out;
    out.reserve(m_.size());
    for (auto& [w, c] : m_)
      if (!F::is_zero(c)) out.emplace_back(w, std::move(c));
    m_.clear();
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return word_less(a.first, b.first); });
    return out;
  }
  std::size_t size() const { return m_.size(); }
  const std::unordered_map<Word, S>& map() const { return m_; }

 private:
  std::unordered_map<Word, S> m_;
};

template <class F, class S>
Terms<S> terms_combine(const Terms<S>& a, const Terms<S>& b, const S& cb) {
  Accum<S> acc;
  acc.add_all(a);
  for (const auto& [w, c] : b) acc.add(w, cb * c);
  return acc.template take<F>();
}

template <class S>
Terms<S> terms_scale(const Terms<S>& a, const S& c) {
  Terms<S> out;
  out.reserve(a.size());
  for (const auto& [w, v] : a) out.emplace_back(w, c * v);
  return out;
}

// Normal-ordering engine over one scalar field. All elements are stored with
// coefficients on the left, evaluated at the unshifted base point.
template <class F>
class Engine {
 public:
  using S = typename F::Scalar;

  struct Rule {
    int count = 0;
    S c[2];
    char y[2] = {0, 0}, z[2] = {0, 0};
  };

  Engine(F& f, int n) : f_(f), n_(n) {
    if (n < 1 || n > kMaxN) throw std::invalid_argument("n out of range");
  }

  F& field() { return f_; }
  int n() const { return n_; }
  std::size_t memo_size() const { return memo_.size(); }

  // rewrite of a*x with a > x, coefficients valid to the left of `prefix*a*x`
  // once moved past `prefix`
  const Rule& rule(char a, char x, const Word& prefix) {
    int j = gen_row(a), l = gen_col(a), i = gen_row(x), k = gen_col(x);
    int rows[kMaxN + 1] = {0}, cols[kMaxN + 1] = {0};
    for (char c : prefix) {
      ++rows[gen_row(c)];
      ++cols[gen_col(c)];
    }
    // context shift is minus the content, so differences flip sign
    int dl = rows[j] - rows[i];  // shift(i) - shift(j)
    int dm = cols[l] - cols[k];  // shift(k) - shift(l)
    std::uint32_t key = std::uint32_t(std::uint8_t(a)) | std::uint32_t(std::uint8_t(x)) << 8 |
                        std::uint32_t(dl + 128) << 16 | std::uint32_t(dm + 128) << 24;
    auto it = rules_.find(key);
    if (it != rules_.end()) return it->second;

    auto hl = [&](int p, int r) -> S { return f_.h(p, r, Family::Z, p == i ? dl : -dl); };
    auto hm = [&](int p, int r) -> S { return f_.h(p, r, Family::U, p == k ? dm : -dm); };
    Rule rule;
    if (j == i) {
      rule.count = 1;
      rule.c[0] = hm(k, l);
      rule.y[0] = x;
      rule.z[0] = a;
    } else if (l == k) {
      rule.count = 1;
      rule.c[0] = inv(hl(j, i));
      rule.y[0] = x;
      rule.z[0] = a;
    } else {
      S gl = hl(i, j) * hl(j, i);
      rule.count = 2;
      if (l > k) {
        S gm = hm(k, l) * hm(l, k);
        S c2 = hm(l, k) - hl(i, j);
        S igl = inv(gl);
        rule.c[0] = gm * igl;
        rule.c[1] = -(c2 * igl);
        rule.y[0] = gen_code(i, k);
        rule.z[0] = gen_code(j, l);
        rule.y[1] = gen_code(i, l);
        rule.z[1] = gen_code(j, k);
      } else {
        // a = t_jK, x = t_iL with K = l < L = k
        int K = l, L = k;
        S hKL = f_.h(K, L, Family::U, -dm), hLK = f_.h(L, K, Family::U, dm);
        S gm = hKL * hLK;
        S c2 = hLK - hl(i, j);
        S d = hl(j, i) - hKL;
        S igl = inv(gl), id = inv(d);
        rule.c[0] = (f_.one() - gm * igl) * id;
        rule.c[1] = c2 * igl * id;
        rule.y[0] = gen_code(i, K);
        rule.z[0] = gen_code(j, L);
        rule.y[1] = gen_code(i, L);
        rule.z[1] = gen_code(j, K);
      }
    }
    return rules_.emplace(key, std::move(rule)).first->second;
  }

  // acc += c * NF(m x) for a normal word m
  void apply(const Word& m, char x, const S& c, Accum<S>& acc) {
    if (m.empty() || static_cast<unsigned char>(m.back()) <= static_cast<unsigned char>(x)) {
      Word w = m;
      w.push_back(x);
      acc.add(w, c);
      return;
    }
    for (const auto& [w, v] : insert(m, x)) acc.add(w, c * v);
  }

  // NF(m x) for a normal word m whose last letter exceeds x
  const Terms<S>& insert(const Word& m, char x) {
    Word key = m;
    key.push_back(x);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Word p = m.substr(0, m.size() - 1);
    const Rule& r = rule(m.back(), x, p);
    Accum<S> acc;
    for (int k = 0; k < r.count; ++k) {
      Accum<S> mid;
      apply(p, r.y[k], r.c[k], mid);
      for (const auto& [w1, c1] : mid.map()) apply(w1, r.z[k], c1, acc);
    }
    return memo_.emplace(std::move(key), acc.template take<F>()).first->second;
  }

  // a * b where a is normalized and b is given by closed-form coefficients
  Terms<S> mul_raw(const Terms<S>& a, const RawSum& b) {
    Accum<S> total;
    std::unordered_map<std::string, std::vector<S>> shifted;
    auto values_for = [&](const Word& m) -> const std::vector<S>& {
      std::string sig(std::size_t(2 * n_), '\0');
      for (char c : m) {
        ++sig[std::size_t(gen_row(c) - 1)];
        ++sig[std::size_t(n_ + gen_col(c) - 1)];
      }
      auto it = shifted.find(sig);
      if (it != shifted.end()) return it->second;
      ShiftVector s = word_shift(m, n_);
      std::vector<S> vals;
      vals.reserve(b.size());
      for (const auto& t : b) vals.push_back(f_.value(t.c, s));
      return shifted.emplace(sig, std::move(vals)).first->second;
    };
    for (std::size_t r = 0; r < b.size(); ++r) {
      if (b[r].c.is_zero()) continue;
      Accum<S> cur;
      for (const auto& [m, alpha] : a) {
        S c = alpha * values_for(m)[r];
        if (!F::is_zero(c)) cur.add(m, c);
      }
      for (char x : b[r].w) {
        Accum<S> next;
        for (const auto& [m, c] : cur.map()) apply(m, x, c, next);
        cur = std::move(next);
      }
      for (const auto& [w, c] : cur.map()) total.add(w, c);
    }
    return total.template take<F>();
  }

  Terms<S> unit() { return Terms<S>{{Word(), f_.one()}}; }
  Terms<S> normalize(const RawSum& raw) { return mul_raw(unit(), raw); }
  Terms<S> normalize_word(const Word& w) { return normalize(RawSum{{Closed(1), w}}); }

  // Rewrites one word by repeatedly resolving an inversion chosen by `pick`
  // (given the list of inversion positions); no memoization. Every rewrite
  // lowers the word lexicographically, so equal words are merged by always
  // expanding the largest pending one.
  template <class Pick>
  Terms<S> normalize_by_strategy(const Word& w, Pick&& pick) {
    Accum<S> out;
    std::map<Word, S, std::greater<>> work;
    work.emplace(w, f_.one());
    while (!work.empty()) {
      auto node = work.extract(work.begin());
      const Word& cur = node.key();
      const S& c = node.mapped();
      if (F::is_zero(c)) continue;
      std::vector<std::size_t> inv_pos;
      for (std::size_t p = 0; p + 1 < cur.size(); ++p)
        if (static_cast<unsigned char>(cur[p]) > static_cast<unsigned char>(cur[p + 1])) inv_pos.push_back(p);
      if (inv_pos.empty()) {
        out.add(cur, c);
        continue;
      }
      std::size_t p = pick(inv_pos);
      const Rule& r = rule(cur[p], cur[p + 1], cur.substr(0, p));
      for (int k = 0; k < r.count; ++k) {
        Word nw = cur;
        nw[p] = r.y[k];
        nw[p + 1] = r.z[k];
        if (!(nw < cur)) throw std::logic_error("normalize_by_strategy: rewrite did not lower the word");
        S val = c * r.c[k];
        auto [it, inserted] = work.try_emplace(std::move(nw), val);
        if (!inserted) it->second += val;
      }
    }
    return out.template take<F>();
  }

 private:
  F& f_;
  int n_;
  std::unordered_map<std::uint32_t, Rule> rules_;
  std::unordered_map<Word, Terms<S>> memo_;
};

// ---------------------------------------------------------------------------
// closed-form raw sums

std::vector<Permutation> all_permutations(int r);
bool is_identity(const Permutation& p);

// xi^I_J(rho) and eta^I_J(rho) before normalization; empty rho = identity
RawSum xi_raw(const std::vector<int>& I, const std::vector<int>& J, Permutation rho = {});
RawSum eta_raw(const std::vector<int>& I, const std::vector<int>& J, Permutation rho = {});
RawSum scaled(const RawSum& r, const Closed& c);
RawSum operator+(RawSum a, const RawSum& b);

std::vector<int> complement(const std::vector<int>& I, int n);
std::vector<int> complement_in(const std::vector<int>& from, const std::vector<int>& I);
std::vector<int> range_vec(int lo, int hi);  // [lo, hi]
std::vector<std::vector<int>> subsets(const std::vector<int>& from, int k);

}  // namespace dynq
