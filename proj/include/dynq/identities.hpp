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

// Both sides of the algebra identities, generic over the scalar field so the
// same builders serve exact and sampled verification.

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "dynq/engine.hpp"

namespace dynq {

template <class S>
using SidePair = std::pair<Terms<S>, Terms<S>>;

enum class LaplaceKind : std::uint8_t {
  Columns,  // split the column set of xi^I_J
  Rows,     // split the row set of xi^J_I, middle coefficients
};

inline std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> u = a;
  u.insert(u.end(), b.begin(), b.end());
  std::sort(u.begin(), u.end());
  if (std::adjacent_find(u.begin(), u.end()) != u.end()) throw std::invalid_argument("index sets overlap");
  return u;
}

inline Word single(int i, int j) { return Word(1, gen_code(i, j)); }

template <class F>
SidePair<typename F::Scalar> laplace_sides(Engine<F>& e, const std::vector<int>& I, const std::vector<int>& J1,
                                           const std::vector<int>& J2, LaplaceKind kind) {
  using S = typename F::Scalar;
  F& f = e.field();
  std::vector<int> J = sorted_union(J1, J2);
  if (I.size() != J.size()) throw std::invalid_argument("laplace: |I| must equal |J1| + |J2|");
  Terms<S> rhs;
  if (kind == LaplaceKind::Columns) {
    Terms<S> lhs = terms_scale(e.normalize(xi_raw(I, J)), f.value(closed_qsign(J1, J2, Side::Mu)));
    for (const auto& I1 : subsets(I, int(J1.size()))) {
      std::vector<int> I2 = complement_in(I, I1);
      Terms<S> part = e.mul_raw(e.normalize(xi_raw(I1, J1)), xi_raw(I2, J2));
      rhs = terms_combine<F>(rhs, part, f.value(closed_qsign(I1, I2, Side::Lambda)));
    }
    return {std::move(lhs), std::move(rhs)};
  }
  Terms<S> lhs = e.normalize(xi_raw(J, I));
  for (const auto& I1 : subsets(I, int(J1.size()))) {
    std::vector<int> I2 = complement_in(I, I1);
    Closed mid = closed_qsign(J2, J1, Side::Lambda) * closed_qsign(I2, I1, Side::Mu).inv();
    Terms<S> part = e.mul_raw(e.normalize(xi_raw(J1, I1)), scaled(xi_raw(J2, I2), mid));
    rhs = terms_combine<F>(rhs, part, f.one());
  }
  return {std::move(lhs), std::move(rhs)};
}

// (delta_ij det, cofactor sum) for the four cofactor displays
template <class F>
SidePair<typename F::Scalar> cofactor_sides(Engine<F>& e, int i, int j, int variant) {
  using S = typename F::Scalar;
  F& f = e.field();
  int n = e.n();
  if (i < 1 || i > n || j < 1 || j > n) throw std::invalid_argument("cofactor: index out of range");
  std::vector<int> full = range_vec(1, n);
  Terms<S> lhs;
  if (i == j) lhs = e.normalize(xi_raw(full, full));
  std::vector<int> ih = complement(std::vector<int>{i}, n);
  std::vector<int> si{i};
  Terms<S> rhs;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> kh = complement(std::vector<int>{k}, n);
    std::vector<int> sk{k};
    Terms<S> part;
    switch (variant) {
      case 1: {
        Closed c = closed_qsign(sk, kh, Side::Lambda) * closed_qsign(si, ih, Side::Mu).inv();
        part = terms_scale(e.mul_raw(e.normalize_word(single(k, j)), xi_raw(kh, ih)), f.value(c));
        break;
      }
      case 2: {
        Closed c = closed_qsign(ih, si, Side::Lambda) * closed_qsign(kh, sk, Side::Mu).inv();
        part = e.mul_raw(e.normalize_word(single(j, k)), scaled(xi_raw(ih, kh), c));
        break;
      }
      case 3: {
        Closed c = closed_qsign(kh, sk, Side::Lambda) * closed_qsign(ih, si, Side::Mu).inv();
        part = terms_scale(e.mul_raw(e.normalize(xi_raw(kh, ih)), RawSum{{Closed(1), single(k, j)}}), f.value(c));
        break;
      }
      case 4: {
        Closed c = closed_qsign(si, ih, Side::Lambda) * closed_qsign(sk, kh, Side::Mu).inv();
        part = e.mul_raw(e.normalize(xi_raw(ih, kh)), RawSum{{c, single(j, k)}});
        break;
      }
      default:
        throw std::invalid_argument("cofactor variant must be 1..4");
    }
    rhs = terms_combine<F>(rhs, part, f.one());
  }
  return {std::move(lhs), std::move(rhs)};
}

// Instances of the four printed relations as raw sums LHS - RHS.
struct RelationInstance {
  int kind = 0;  // 1..4
  int i = 0, j = 0, k = 0, l = 0;
  RawSum difference;
};

inline std::vector<RelationInstance> relation_instances(int n) {
  std::vector<RelationInstance> out;
  auto w = [](int a, int b, int c, int d) { return Word{gen_code(a, b), gen_code(c, d)}; };
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k)
      for (int l = k + 1; l <= n; ++l)
        out.push_back({1, i, i, k, l, {{Closed::h(k, l, Side::Mu), w(i, k, i, l)}, {Closed(-1), w(i, l, i, k)}}});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        out.push_back({2, i, j, k, k, {{Closed::h(j, i, Side::Lambda), w(j, k, i, k)}, {Closed(-1), w(i, k, j, k)}}});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          out.push_back({3, i, j, k, l,
                         {{Closed(1), w(i, k, j, l)},
                          {Closed(-1), w(j, l, i, k)},
                          {-Closed::h(j, i, Side::Lambda), w(j, k, i, l)},
                          {Closed::h(k, l, Side::Mu), w(j, k, i, l)}}});
          Closed gm = Closed::h(k, l, Side::Mu) * Closed::h(l, k, Side::Mu);
          Closed gl = Closed::h(i, j, Side::Lambda) * Closed::h(j, i, Side::Lambda);
          out.push_back({4, i, j, k, l,
                         {{gm, w(i, k, j, l)},
                          {-gl, w(j, l, i, k)},
                          {-Closed::h(l, k, Side::Mu), w(i, l, j, k)},
                          {Closed::h(i, j, Side::Lambda), w(i, l, j, k)}}});
        }
  return out;
}

// f t_ij - t_ij f(shifted by omega(i) or omega(j)) for a test coefficient f
template <class F>
Terms<typename F::Scalar> commutation_difference(Engine<F>& e, int i, int j, const Coefficient& fz, Side side) {
  F& f = e.field();
  int n = e.n();
  ShiftVector s(n);
  (side == Side::Lambda ? s.lambda : s.mu)[std::size_t((side == Side::Lambda ? i : j) - 1)] = 1;
  auto left = e.normalize(RawSum{{Closed::of(fz), single(i, j)}});
  auto right = e.mul_raw(e.normalize_word(single(i, j)), RawSum{{Closed::of(fz.shifted(s)), Word()}});
  return terms_combine<F>(left, right, f.from_int(-1));
}

// x * raw - raw * x for a normalized x
template <class F>
Terms<typename F::Scalar> commutator(Engine<F>& e, const Terms<typename F::Scalar>& x, const RawSum& raw,
                                     const RawSum& x_raw) {
  auto a = e.mul_raw(x, raw);
  auto b = e.mul_raw(e.normalize(raw), x_raw);
  return terms_combine<F>(a, b, e.field().from_int(-1));
}

}  // namespace dynq
