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

#include <numeric>

#include "dynq/engine.hpp"

namespace dynq {

std::vector<Permutation> all_permutations(int r) {
  Permutation p(static_cast<std::size_t>(r));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_identity(const Permutation& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != int(k)) return false;
  return true;
}

namespace {

void check_minor_args(const std::vector<int>& I, const std::vector<int>& J, Permutation& rho) {
  if (I.size() != J.size()) throw std::invalid_argument("minor index sets differ in size");
  if (!std::is_sorted(I.begin(), I.end()) || !std::is_sorted(J.begin(), J.end()) ||
      std::adjacent_find(I.begin(), I.end()) != I.end() || std::adjacent_find(J.begin(), J.end()) != J.end())
    throw std::invalid_argument("minor index sets must be strictly increasing");
  if (rho.empty()) {
    rho.resize(I.size());
    std::iota(rho.begin(), rho.end(), 0);
  }
  if (rho.size() != I.size()) throw std::invalid_argument("permutation size mismatch");
}

}  // namespace

RawSum xi_raw(const std::vector<int>& I, const std::vector<int>& J, Permutation rho) {
  check_minor_args(I, J, rho);
  std::size_t r = I.size();
  Closed pre = closed_sign_S(rho, J, Side::Mu).inv();
  RawSum out;
  for (const auto& sigma : all_permutations(int(r))) {
    Word w;
    for (std::size_t k = 0; k < r; ++k) w.push_back(gen_code(I[std::size_t(sigma[k])], J[std::size_t(rho[k])]));
    out.push_back({pre * closed_sign_S(sigma, I, Side::Lambda), std::move(w)});
  }
  return out;
}

RawSum eta_raw(const std::vector<int>& I, const std::vector<int>& J, Permutation rho) {
  check_minor_args(I, J, rho);
  std::size_t r = I.size();
  Closed pre = closed_sign_S_tilde(rho, I, Side::Lambda).inv();
  RawSum out;
  for (const auto& sigma : all_permutations(int(r))) {
    Word w;
    for (std::size_t k = r; k-- > 0;) w.push_back(gen_code(I[std::size_t(rho[k])], J[std::size_t(sigma[k])]));
    out.push_back({pre * closed_sign_S_tilde(sigma, J, Side::Mu), std::move(w)});
  }
  return out;
}

RawSum scaled(const RawSum& r, const Closed& c) {
  RawSum out;
  out.reserve(r.size());
  for (const auto& t : r) out.push_back({c * t.c, t.w});
  return out;
}

RawSum operator+(RawSum a, const RawSum& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<int> complement(const std::vector<int>& I, int n) {
  std::vector<int> out;
  for (int k = 1; k <= n; ++k)
    if (std::find(I.begin(), I.end(), k) == I.end()) out.push_back(k);
  return out;
}

std::vector<int> complement_in(const std::vector<int>& from, const std::vector<int>& I) {
  std::vector<int> out;
  for (int k : from)
    if (std::find(I.begin(), I.end(), k) == I.end()) out.push_back(k);
  return out;
}

std::vector<int> range_vec(int lo, int hi) {
  std::vector<int> out;
  for (int k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

std::vector<std::vector<int>> subsets(const std::vector<int>& from, int k) {
  std::vector<std::vector<int>> out;
  int m = int(from.size());
  if (k < 0 || k > m) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<int> s;
    for (int i : idx) s.push_back(from[std::size_t(i)]);
    out.push_back(std::move(s));
    int p = k - 1;
    while (p >= 0 && idx[std::size_t(p)] == m - k + p) --p;
    if (p < 0) break;
    ++idx[std::size_t(p)];
    for (int q = p + 1; q < k; ++q) idx[std::size_t(q)] = idx[std::size_t(q - 1)] + 1;
  }
  return out;
}

}  // namespace dynq
