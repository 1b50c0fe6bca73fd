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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dynq/falg.hpp"

namespace dynq {

// W words are stored ascending, V words descending.
enum class WedgeTag : std::uint8_t { V, W };
using WedgeWord = std::vector<int>;

// Rewrites a word of distinct-or-repeated indices into storage order.
// Returns false when the word vanishes; otherwise c is the coefficient
// (lambda side, on the left) and `out` the stored word.
bool wedge_normalize(WedgeTag tag, const WedgeWord& w, Coefficient& c, WedgeWord& out);

class WedgeElement {
 public:
  WedgeElement() = default;
  WedgeElement(WedgeTag tag, int n) : tag_(tag), n_(n) {}
  static WedgeElement gen(WedgeTag tag, int n, int i);
  static WedgeElement scalar(WedgeTag tag, int n, const Coefficient& f);
  // c * (w as written), normalized
  static WedgeElement word(WedgeTag tag, int n, const WedgeWord& w, const Coefficient& c = Coefficient(1));

  WedgeTag tag() const { return tag_; }
  int n() const { return n_; }
  const std::map<WedgeWord, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const WedgeWord& w, const Coefficient& c);
  friend WedgeElement operator+(const WedgeElement& a, const WedgeElement& b);
  friend bool operator==(const WedgeElement& a, const WedgeElement& b) {
    return a.tag_ == b.tag_ && a.terms_ == b.terms_;
  }
  std::string str() const;

 private:
  WedgeTag tag_ = WedgeTag::W;
  int n_ = 0;
  std::map<WedgeWord, Coefficient> terms_;
};

WedgeElement wedge_mul(const WedgeElement& a, const WedgeElement& b);
std::string wedge_word_str(WedgeTag tag, const WedgeWord& w);

// W (x) F (tag W) or F (x) V (tag V), keyed by wedge word, with the F part a
// normalized Element whose coefficients carry everything.
class MixedTensor {
 public:
  MixedTensor() = default;
  MixedTensor(WedgeTag tag, int n) : tag_(tag), n_(n) {}
  WedgeTag tag() const { return tag_; }
  int n() const { return n_; }
  const std::map<WedgeWord, Element>& parts() const { return parts_; }
  Element part(const WedgeWord& w) const;
  bool is_zero() const { return parts_.empty(); }
  void add(const WedgeWord& w, const Element& x);
  friend MixedTensor operator+(const MixedTensor& a, const MixedTensor& b);
  MixedTensor operator-() const;
  friend bool operator==(const MixedTensor& a, const MixedTensor& b) {
    return a.tag_ == b.tag_ && a.parts_ == b.parts_;
  }
  std::string str() const;

 private:
  WedgeTag tag_ = WedgeTag::W;
  int n_ = 0;
  std::map<WedgeWord, Element> parts_;
};

class Comodule {
 public:
  explicit Comodule(Algebra& A) : A_(A) {}
  Algebra& algebra() { return A_; }

  MixedTensor mul(const MixedTensor& a, const MixedTensor& b);
  // W-side scalar f in W (x) F is 1 (x) mu_r(f); V-side is mu_l(f) (x) 1
  MixedTensor scalar(WedgeTag tag, const Coefficient& f);
  MixedTensor coaction_gen(WedgeTag tag, int i);
  MixedTensor coaction_R(const WedgeElement& e);
  MixedTensor coaction_L(const WedgeElement& e);

  // coefficient of w_K in alpha_R(w_J)
  Element minor_oracle(const std::vector<int>& K, const std::vector<int>& J);
  // coefficient of v_K in alpha_L(v_I), both taken as descending products
  Element minor_oracle_left(const std::vector<int>& I, const std::vector<int>& K);

  // alpha_R(w_j) alpha_R(w_i) + (1 (x) h(mu_j - mu_i)) alpha_R(w_i) alpha_R(w_j), i < j,
  // and the V analogue; zero when the coaction respects the relations
  MixedTensor relation_image(WedgeTag tag, int i, int j);
  MixedTensor square_image(WedgeTag tag, int i);

  // for each wedge word L: (id (x) Delta) and (alpha_R (x) id) of alpha_R(w_J)
  std::vector<std::pair<TensorElement, TensorElement>> coassociativity_sides(const std::vector<int>& J);

 private:
  Algebra& A_;
};

}  // namespace dynq
