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
#include <map>
#include <string>

#include "dynq/engine.hpp"
#include "dynq/factored.hpp"
#include "dynq/field.hpp"

namespace dynq {

// Outcome of comparing many identity instances at one evaluation point.
// `bound` is the largest probability that a nonzero difference evaluated to
// zero; it stays 0 in exact mode.
struct Verdict {
  long checked = 0;
  long failed = 0;
  long terms = 0;
  double bound = 0.0;
  std::string first_failure;

  bool pass() const { return failed == 0; }
  void merge(const Verdict& o) {
    checked += o.checked;
    failed += o.failed;
    terms += o.terms;
    bound = std::max(bound, o.bound);
    if (first_failure.empty()) first_failure = o.first_failure;
  }
  void fail(const std::string& what) {
    ++failed;
    if (first_failure.empty()) first_failure = what;
  }
};

inline std::string scalar_str(const Coefficient& c) { return c.str(); }
inline std::string scalar_str(const FactoredValue& c) { return c.coefficient().str(); }
inline std::string scalar_str(const ModValue& c) { return std::to_string(c.v) + " mod p"; }

inline std::string word_text(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (char c : w) {
    if (!s.empty()) s += " ";
    s += "t[" + std::to_string(gen_row(c)) + "," + std::to_string(gen_col(c)) + "]";
  }
  return s;
}

// the nonzero part of a difference, truncated for reports
template <class F, class S>
std::string difference_str(const Terms<S>& d, std::size_t limit = 2000) {
  std::string out;
  for (const auto& [w, c] : d) {
    if (F::vanishes(c)) continue;
    if (!out.empty()) out += " + ";
    out += "[" + scalar_str(c) + "] " + word_text(w);
    if (out.size() > limit) return out.substr(0, limit) + " ...";
  }
  return out;
}

// true when the difference is (evaluates to) zero; widens v.bound
template <class F>
bool vanishes_into(Verdict& v, const typename F::Scalar& d) {
  if (!F::vanishes(d)) return false;
  if constexpr (!F::kExact) v.bound = std::max(v.bound, F::failure_bound(d));
  return true;
}

// one instance: a == b termwise
template <class F, class S>
void compare_terms(F& f, Verdict& v, const Terms<S>& a, const Terms<S>& b, const std::string& label) {
  ++v.checked;
  v.terms += long(a.size() + b.size());
  Terms<S> d = terms_combine<F>(a, b, f.from_int(-1));
  for (const auto& [w, c] : d)
    if (!vanishes_into<F>(v, c)) {
      v.fail(label + ": difference " + difference_str<F>(d));
      return;
    }
}

}  // namespace dynq
