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
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dynq/engine.hpp"
#include "dynq/identities.hpp"

namespace dynq {

using ExactTerms = Terms<Coefficient>;

// Sum of coefficient * normal word, coefficient on the left, sorted by
// word_less with no zero coefficients.
class Element {
 public:
  Element() = default;
  Element(int n, ExactTerms terms);

  int n() const { return n_; }
  const ExactTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Coefficient coeff(const Word& w) const;  // zero when absent

  Element operator-() const;
  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b) { return a + (-b); }
  friend bool operator==(const Element& a, const Element& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
  // f * this, f on the far left
  Element scaled(const Coefficient& f) const;

  // `[coeff] t[1,1] t[2,2] + ...`; coefficient 1 is omitted on nonempty words
  std::string str() const;
  static Element parse(int n, const std::string& text);

 private:
  int n_ = 0;
  ExactTerms terms_;
};

std::string word_str(const Word& w);
Word word_of(const std::vector<std::pair<int, int>>& gens);
// (row content, column content)
std::pair<std::vector<int>, std::vector<int>> bidegree(const Word& w, int n);

// Counit codomain: sum of f * T_s with composition (f,S)(g,T) = (f shift(g,S), S+T).
class ShiftOperatorSum {
 public:
  ShiftOperatorSum() = default;
  ShiftOperatorSum(const Coefficient& f, const ShiftVector& s);

  const std::vector<std::pair<Coefficient, ShiftVector>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend ShiftOperatorSum operator+(const ShiftOperatorSum& a, const ShiftOperatorSum& b);
  friend ShiftOperatorSum operator*(const ShiftOperatorSum& a, const ShiftOperatorSum& b);
  ShiftOperatorSum operator-() const;
  friend bool operator==(const ShiftOperatorSum& a, const ShiftOperatorSum& b) { return a.terms_ == b.terms_; }
  std::string str() const;

 private:
  std::vector<std::pair<Coefficient, ShiftVector>> terms_;  // sorted by shift, merged
  void canonicalize();
};

// Tensor product of 2 or 3 copies over the base. Coefficients sit on the far
// left in the families Z, W1, (W2,) U: factor f has its lambda side in family
// f and its mu side in family f+1 of that list.
class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(int n, int factors) : n_(n), factors_(factors) {}

  int n() const { return n_; }
  int factors() const { return factors_; }
  const std::map<std::vector<Word>, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const std::vector<Word>& words, const Coefficient& c);
  friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
  TensorElement operator-() const;
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.factors_ == b.factors_ && a.terms_ == b.terms_;
  }
  std::string str() const;

 private:
  int n_ = 0, factors_ = 2;
  std::map<std::vector<Word>, Coefficient> terms_;
};

// families used by a tensor with `factors` factors, left to right
std::vector<Family> tensor_families(int factors);
// move a single-copy coefficient (z, u) into factor `f` of a tensor
Coefficient to_factor(const Coefficient& c, int f, int factors);

// body * det^{-k}
struct LocElement {
  Element body;
  int det_power = 0;
};

struct RMatrix {
  int n = 0;
  std::vector<Coefficient> entries;  // e_ij (x) e_kl at ((i-1)n + j-1) n^2 + (k-1)n + l-1
  const Coefficient& at(int i, int j, int k, int l) const;
};
enum class RMode : std::uint8_t { Literal, Standard };
RMatrix r_matrix(int n, RMode mode);

// The bialgebroid for a fixed n, exact coefficients. Holds the rewrite
// caches; not safe for concurrent use.
class Algebra {
 public:
  explicit Algebra(int n);
  int n() const { return n_; }
  Engine<ExactField>& engine() { return *engine_; }

  Element zero() const { return Element(n_, {}); }
  Element one() const;
  Element gen(int i, int j) const;
  Element scalar_l(const Coefficient& f) const;  // f in z variables
  Element scalar_r(const Coefficient& f) const;  // f in z variables, placed on the mu side
  Coefficient move_coeff_left(const Word& m, const Coefficient& f) const;

  Element normalize(const std::vector<std::pair<Coefficient, Word>>& raw);
  Element normalize_word(const Word& w);
  Element mul(const Element& a, const Element& b);
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element pow(const Element& a, int k);

  Element minor_xi(const std::vector<int>& I, const std::vector<int>& J, const Permutation& rho = {});
  Element minor_eta(const std::vector<int>& I, const std::vector<int>& J, const Permutation& rho = {});
  const Element& det();

  std::pair<Element, Element> laplace(const std::vector<int>& I, const std::vector<int>& J1,
                                      const std::vector<int>& J2, LaplaceKind kind = LaplaceKind::Columns);
  std::pair<Element, Element> cofactor_identity(int i, int j, int variant);

  TensorElement coproduct(const Element& x);
  // apply the coproduct to factor `f` of a two-factor tensor
  TensorElement coproduct_on(const TensorElement& x, int f);
  // sum of a_k (x) b_k over the given pairs, coefficients moved to the far left
  TensorElement tensor(const std::vector<std::pair<Element, Element>>& pairs) const;
  TensorElement tensor_normalize(const std::vector<std::pair<Coefficient, std::vector<Word>>>& raw, int factors);

  ShiftOperatorSum counit(const Element& x) const;
  ShiftOperatorSum counit_gen(int i, int j) const;
  ShiftOperatorSum counit_coeff(const Coefficient& f) const;

  LocElement antipode_gen(int i, int j);
  LocElement loc_mul(const LocElement& a, const LocElement& b);
  LocElement loc_add(const LocElement& a, const LocElement& b);
  LocElement minimize(const LocElement& a);
  // C with C * det = x, if it exists
  bool divide_by_det(const Element& x, Element& quotient);

 private:
  int n_;
  std::unique_ptr<ExactField> field_;
  std::unique_ptr<Engine<ExactField>> engine_;
  std::unique_ptr<Element> det_;
  Element wrap(ExactTerms t) const { return Element(n_, std::move(t)); }
  RawSum raw_of(const Element& x) const;
};

// normal words with the given row and column content
std::vector<Word> normal_words(const std::vector<int>& rows, const std::vector<int>& cols);

}  // namespace dynq
