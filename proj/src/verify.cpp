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

#include "dynq/verify.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <type_traits>

#include "dynq/comod.hpp"
#include "dynq/factored.hpp"
#include "dynq/identities.hpp"
#include "dynq/pfaff.hpp"
#include "dynq/verdict.hpp"
#include "json.hpp"

namespace dynq {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t mix(std::uint64_t seed, const std::string& tag, int trial) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (char c : tag) {
    h ^= std::uint8_t(c);
    h *= 1099511628211ull;
  }
  return seed ^ (h + 0x9e3779b97f4a7c15ull * std::uint64_t(trial + 1));
}

std::string clip(const std::string& s, std::size_t limit = 2000) {
  return s.size() > limit ? s.substr(0, limit) + " ..." : s;
}

template <class T>
void expect_equal(Verdict& v, const T& a, const T& b, const std::string& label) {
  ++v.checked;
  if (!(a == b)) v.fail(label + ": difference " + clip((a + (-b)).str()));
}

std::string set_str(const std::vector<int>& I) {
  std::string s = "{";
  for (std::size_t k = 0; k < I.size(); ++k) s += (k ? "," : "") + std::to_string(I[k]);
  return s + "}";
}

class Runner {
 public:
  Runner(VerificationReport& rep, std::string suite, int n, int m)
      : rep_(rep), p_(rep.params), suite_(std::move(suite)), n_(n), m_(m) {}

  // body(field, verdict) runs exactly, or once per sample point
  template <class Body>
  void check(const std::string& name, int size, Body&& body) {
    auto t0 = Clock::now();
    CheckRecord r = base(name);
    Verdict v;
    if (p_.mode == Mode::Exact) {
      guard(v, [&] {
        FactoredField f;
        body(f, v);
      });
    } else {
      r.sampled = true;
      double bound = 1.0;
      for (int t = 0; t < std::max(1, p_.trials); ++t) {
        Verdict vt;
        guard(vt, [&] {
          ModField f(sample_mod_point(mix(p_.seed, suite_ + "/" + name, t), size, 4 * size + 8));
          body(f, vt);
        });
        if (t == 0) {
          v.checked = vt.checked;
          v.terms = vt.terms;
        }
        v.failed += vt.failed;
        if (v.first_failure.empty()) v.first_failure = vt.first_failure;
        bound *= vt.bound;
        if (!vt.pass()) break;
      }
      r.bound = v.failed ? 0.0 : bound;
      if (v.failed == 0 && bound > kMaxFailureBound) v.fail("false-pass bound exceeds 2^-40; increase --trials");
    }
    finish(r, v, t0);
  }

  // symbolic objects without a sampled form
  template <class Body>
  void exact_check(const std::string& name, Body&& body) {
    auto t0 = Clock::now();
    CheckRecord r = base(name);
    Verdict v;
    guard(v, [&] { body(v); });
    finish(r, v, t0);
  }

  const SuiteParams& params() const { return p_; }

 private:
  VerificationReport& rep_;
  const SuiteParams& p_;
  std::string suite_;
  int n_, m_;

  CheckRecord base(const std::string& name) const {
    CheckRecord r;
    r.suite = suite_;
    r.name = name;
    r.n = n_;
    r.m = m_;
    return r;
  }

  template <class Fn>
  static void guard(Verdict& v, Fn&& fn) {
    try {
      fn();
    } catch (const PoleError& ex) {
      v.fail(std::string("pole at the evaluation point: ") + ex.what());
    } catch (const std::exception& ex) {
      v.fail(std::string("error: ") + ex.what());
    }
  }

  void finish(CheckRecord& r, const Verdict& v, Clock::time_point t0) {
    r.pass = v.pass();
    r.instances = v.checked;
    r.terms = v.terms;
    r.counterexample = v.first_failure;
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    rep_.checks.push_back(std::move(r));
  }
};

template <class F>
using ScalarOf = typename std::decay_t<F>::Scalar;

// ---------------------------------------------------------------------------
// algebra suites

std::vector<Coefficient> test_coefficients(int n, Side side) {
  auto x = [&](int i) { return side == Side::Lambda ? var_z(i) : var_u(i); };
  std::vector<Coefficient> out = {x(1), x(n) * var_q() + Coefficient(1), x(1) * x(n) / (x(1) + var_q() * x(n))};
  if (n >= 2) out.push_back(h_fun(1, 2, side));
  return out;
}

void suite_relations(Runner& R, int n) {
  R.check("relation-kernel", n, [&](auto& f, Verdict& v) {
    using F = std::decay_t<decltype(f)>;
    Engine<F> e(f, n);
    for (const auto& ri : relation_instances(n))
      compare_terms(f, v, e.normalize(ri.difference), Terms<ScalarOf<F>>{},
                    "relation " + std::to_string(ri.kind) + " at (" + std::to_string(ri.i) + "," +
                        std::to_string(ri.j) + "," + std::to_string(ri.k) + "," + std::to_string(ri.l) + ")");
  });
  for (Side side : {Side::Lambda, Side::Mu}) {
    const char* tag = side == Side::Lambda ? "lambda" : "mu";
    R.check(std::string("commutation-") + tag, n, [&](auto& f, Verdict& v) {
      using F = std::decay_t<decltype(f)>;
      Engine<F> e(f, n);
      auto tests = test_coefficients(n, side);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (std::size_t k = 0; k < tests.size(); ++k)
            compare_terms(f, v, commutation_difference(e, i, j, tests[k], side), Terms<ScalarOf<F>>{},
                          "f t[" + std::to_string(i) + "," + std::to_string(j) + "] with f #" + std::to_string(k));
    });
  }
}

void suite_confluence(Runner& R, int n) {
  int words = R.params().words;
  std::uint64_t corpus_seed = mix(R.params().seed, "confluence-corpus", 0);
  R.check("strategies-agree", n, [&](auto& f, Verdict& v) {
    using F = std::decay_t<decltype(f)>;
    Engine<F> e(f, n);
    std::mt19937_64 rng(corpus_seed);
    for (int k = 0; k < words; ++k) {
      int len = 1 + int(rng() % 5);
      Word w;
      for (int p = 0; p < len; ++p) w.push_back(gen_code(1 + int(rng() % unsigned(n)), 1 + int(rng() % unsigned(n))));
      auto left = e.normalize_by_strategy(w, [](const std::vector<std::size_t>& pos) { return pos.front(); });
      auto right = e.normalize_by_strategy(w, [](const std::vector<std::size_t>& pos) { return pos.back(); });
      compare_terms(f, v, left, right, "word " + word_text(w));
      compare_terms(f, v, left, e.normalize_word(w), "word " + word_text(w) + " against the memoized form");
    }
  });
}

void suite_xi_eta(Runner& R, int n) {
  auto full = range_vec(1, n);
  R.check("xi-equals-eta", n, [&](auto& f, Verdict& v) {
    using F = std::decay_t<decltype(f)>;
    Engine<F> e(f, n);
    for (int r = 1; r <= n; ++r)
      for (const auto& I : subsets(full, r))
        for (const auto& J : subsets(full, r))
          compare_terms(f, v, e.normalize(xi_raw(I, J)), e.normalize(eta_raw(I, J)),
                        "I=" + set_str(I) + " J=" + set_str(J));
  });
  R.check("rho-independence", n, [&](auto& f, Verdict& v) {
    using F = std::decay_t<decltype(f)>;
    Engine<F> e(f, n);
    for (int r = 2; r <= n; ++r)
      for (const auto& I : subsets(full, r))
        for (const auto& J : subsets(full, r)) {
          auto x = e.normalize(xi_raw(I, J)), y = e.normalize(eta_raw(I, J));
          for (const auto& rho : all_permutations(r)) {
            if (is_identity(rho)) continue;
            std::string lab = "I=" + set_str(I) + " J=" + set_str(J) + " rho=" + set_str(rho);
            compare_terms(f, v, e.normalize(xi_raw(I, J, rho)), x, "xi " + lab);
            compare_terms(f, v, e.normalize(eta_raw(I, J, rho)), y, "eta " + lab);
          }
        }
  });
}

void suite_laplace(Runner& R, int n) {
  auto full = range_vec(1, n);
  for (LaplaceKind kind : {LaplaceKind::Columns, LaplaceKind::Rows}) {
    R.check(kind == LaplaceKind::Columns ? "columns" : "rows", n, [&](auto& f, Verdict& v) {
      using F = std::decay_t<decltype(f)>;
      Engine<F> e(f, n);
      for (int r = 1; r <= n; ++r)
        for (const auto& I : subsets(full, r))
          for (const auto& J : subsets(full, r))
            for (int r1 = 0; r1 <= r; ++r1)
              for (const auto& J1 : subsets(J, r1)) {
                auto J2 = complement_in(J, J1);
                auto [l, rr] = laplace_sides(e, I, J1, J2, kind);
                compare_terms(f, v, l, rr, "I=" + set_str(I) + " J1=" + set_str(J1) + " J2=" + set_str(J2));
              }
    });
  }
}

void suite_cofactor(Runner& R, int n) {
  for (int variant = 1; variant <= 4; ++variant)
    R.check("variant-" + std::to_string(variant), n, [&](auto& f, Verdict& v) {
      using F = std::decay_t<decltype(f)>;
      Engine<F> e(f, n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          auto [l, r] = cofactor_sides(e, i, j, variant);
          compare_terms(f, v, l, r, "i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
    });
}

void suite_centrality(Runner& R, int n) {
  auto full = range_vec(1, n);
  R.check("det-generators", n, [&](auto& f, Verdict& v) {
    using F = std::decay_t<decltype(f)>;
    Engine<F> e(f, n);
    RawSum det_raw = xi_raw(full, full);
    auto det = e.normalize(det_raw);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        compare_terms(f, v, commutator(e, det, RawSum{{Closed(1), single(i, j)}}, det_raw), Terms<ScalarOf<F>>{},
                      "[det, t[" + std::to_string(i) + "," + std::to_string(j) + "]]");
  });
  if (n >= 3)
    R.check("det-minors", n, [&](auto& f, Verdict& v) {
      using F = std::decay_t<decltype(f)>;
      Engine<F> e(f, n);
      RawSum det_raw = xi_raw(full, full);
      auto det = e.normalize(det_raw);
      for (int r = 2; r < n; ++r)
        for (const auto& I : subsets(full, r))
          for (const auto& J : subsets(full, r))
            compare_terms(f, v, commutator(e, det, xi_raw(I, J), det_raw), Terms<ScalarOf<F>>{},
                          "[det, xi^" + set_str(I) + "_" + set_str(J) + "]");
    });
}

ShiftOperatorSum counit_raw(const Algebra& A, const RawSum& raw) {
  ShiftOperatorSum out;
  for (const auto& t : raw) {
    ShiftOperatorSum x = A.counit_coeff(t.c.exact());
    for (char g : t.w) x = x * A.counit_gen(gen_row(g), gen_col(g));
    out = out + x;
  }
  return out;
}

void suite_coalgebra(Runner& R, int n) {
  auto full = range_vec(1, n);
  R.exact_check("coassociativity", [&](Verdict& v) {
    Algebra A(n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        TensorElement d = A.coproduct(A.gen(i, j));
        expect_equal(v, A.coproduct_on(d, 0), A.coproduct_on(d, 1),
                     "t[" + std::to_string(i) + "," + std::to_string(j) + "]");
      }
  });
  R.exact_check("coproduct-minors", [&](Verdict& v) {
    Algebra A(n);
    for (int r = 1; r <= std::min(2, n); ++r)
      for (const auto& I : subsets(full, r))
        for (const auto& J : subsets(full, r)) {
          std::vector<std::pair<Element, Element>> pairs;
          for (const auto& K : subsets(full, r)) pairs.emplace_back(A.minor_xi(I, K), A.minor_xi(K, J));
          expect_equal(v, A.coproduct(A.minor_xi(I, J)), A.tensor(pairs), "I=" + set_str(I) + " J=" + set_str(J));
        }
  });
  R.exact_check("coproduct-det", [&](Verdict& v) {
    Algebra A(n);
    expect_equal(v, A.coproduct(A.det()), A.tensor({{A.det(), A.det()}}), "det");
  });
  R.exact_check("counit-relations", [&](Verdict& v) {
    Algebra A(n);
    for (const auto& ri : relation_instances(n))
      expect_equal(v, counit_raw(A, ri.difference), ShiftOperatorSum(),
                   "relation " + std::to_string(ri.kind) + " at (" + std::to_string(ri.i) + "," +
                       std::to_string(ri.j) + "," + std::to_string(ri.k) + "," + std::to_string(ri.l) + ")");
  });
}

void suite_coaction(Runner& R, int n) {
  auto full = range_vec(1, n);
  int rmax = std::min(n, 3);
  R.exact_check("right-oracle", [&](Verdict& v) {
    Algebra A(n);
    Comodule C(A);
    for (int r = 1; r <= rmax; ++r)
      for (const auto& K : subsets(full, r))
        for (const auto& J : subsets(full, r))
          expect_equal(v, C.minor_oracle(K, J), A.minor_xi(K, J), "K=" + set_str(K) + " J=" + set_str(J));
  });
  R.exact_check("left-oracle", [&](Verdict& v) {
    Algebra A(n);
    Comodule C(A);
    for (int r = 1; r <= rmax; ++r)
      for (const auto& I : subsets(full, r))
        for (const auto& K : subsets(full, r))
          expect_equal(v, C.minor_oracle_left(I, K), A.minor_eta(I, K), "I=" + set_str(I) + " K=" + set_str(K));
  });
  R.exact_check("top-wedge", [&](Verdict& v) {
    Algebra A(n);
    Comodule C(A);
    expect_equal(v, C.minor_oracle(full, full), A.det(), "w_1...w_n");
    expect_equal(v, C.minor_oracle_left(full, full), A.det(), "v_n...v_1");
  });
  R.exact_check("coaction-respects-relations", [&](Verdict& v) {
    Algebra A(n);
    Comodule C(A);
    for (auto tag : {WedgeTag::W, WedgeTag::V}) {
      const char* t = tag == WedgeTag::W ? "w" : "v";
      for (int i = 1; i <= n; ++i) {
        expect_equal(v, C.square_image(tag, i), MixedTensor(tag, n), std::string(t) + " square " + std::to_string(i));
        for (int j = i + 1; j <= n; ++j)
          expect_equal(v, C.relation_image(tag, i, j), MixedTensor(tag, n),
                       std::string(t) + " relation " + std::to_string(i) + "," + std::to_string(j));
      }
    }
  });
  R.exact_check("coaction-coassociativity", [&](Verdict& v) {
    Algebra A(n);
    Comodule C(A);
    for (int r = 1; r <= std::min(2, n); ++r)
      for (const auto& J : subsets(full, r)) {
        auto sides = C.coassociativity_sides(J);
        for (std::size_t k = 0; k < sides.size(); ++k)
          expect_equal(v, sides[k].first, sides[k].second, "J=" + set_str(J) + " part " + std::to_string(k));
      }
  });
}

void suite_antipode(Runner& R, int n) {
  R.check("fraction-free", n, [&](auto& f, Verdict& v) {
    using F = std::decay_t<decltype(f)>;
    for (int s = 1; s <= n; ++s) {
      Engine<F> e(f, s);
      for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) {
          auto [l, r] = cofactor_sides(e, i, j, 3);
          compare_terms(f, v, l, r, "n=" + std::to_string(s) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
        }
    }
  });
  R.exact_check("localized", [&](Verdict& v) {
    for (int s = 1; s <= n; ++s) {
      Algebra A(s);
      for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= s; ++j) {
          LocElement acc{A.zero(), 0};
          for (int k = 1; k <= s; ++k) acc = A.loc_add(acc, A.loc_mul(A.antipode_gen(i, k), LocElement{A.gen(k, j), 0}));
          acc = A.minimize(acc);
          ++v.checked;
          Element expect = i == j ? A.one() : A.zero();
          if (acc.det_power != 0 || acc.body != expect)
            v.fail("n=" + std::to_string(s) + " sum_k S(t_ik) t_kj at i=" + std::to_string(i) + " j=" +
                   std::to_string(j) + " gives " + clip(acc.body.str()) + " det^-" + std::to_string(acc.det_power));
        }
    }
  });
}

// ---------------------------------------------------------------------------
// Pfaffian suites

void suite_pf_laplace(Runner& R, int m, int n) {
  int tlo = R.params().t < 0 ? 0 : R.params().t, thi = R.params().t < 0 ? n : R.params().t;
  if (tlo > n) throw UsageError("--t must lie in [0, n]");
  for (auto var : {PfVariant::Plain, PfVariant::Tilde}) {
    R.check(var == PfVariant::Plain ? "plain" : "tilde", m * n, [&](auto& f, Verdict& v) {
      for (int t = tlo; t <= thi; ++t) {
        auto [l, r] = pf_laplace_sides(f, m, n, t, var);
        compare_pf(f, v, l, r, "t=" + std::to_string(t));
      }
    });
  }
  if (m == 2 && n <= 3)
    for (auto var : {PfVariant::Plain, PfVariant::Tilde})
      R.exact_check(var == PfVariant::Plain ? "omega-power-plain" : "omega-power-tilde", [&](Verdict& v) {
        for (int k = 1; k <= n; ++k) {
          OmegaTerms o = omega_power(k, k, var);
          WedgeWord top = range_vec(1, 2 * k);
          if (var == PfVariant::Tilde) std::reverse(top.begin(), top.end());
          PfSum p = var == PfVariant::Plain ? pf(2, k) : pf_tilde(2, k);
          PfSum got;
          got.variant = var;
          bool stray = false;
          for (const auto& [key, c] : o) {
            if (key.first != top) stray = true;
            got.terms[key.second] = c;
          }
          ++v.checked;
          if (stray || !(got == p))
            v.fail("n=" + std::to_string(k) + ": Omega^n gives " + clip(got.str()) + " against " + clip(p.str()));
        }
      });
}

void suite_pf_transform(Runner& R, int m, int n) {
  for (auto var : {PfVariant::Plain, PfVariant::Tilde}) {
    R.check(var == PfVariant::Plain ? "plain" : "tilde", m * n, [&](auto& f, Verdict& v) {
      using F = std::decay_t<decltype(f)>;
      Engine<F> e(f, m * n);
      v.merge(pf_transform_verdict(e, m, n, var));
    });
  }
}

// ---------------------------------------------------------------------------
// coefficient field

Coefficient random_coefficient(std::mt19937_64& rng, int n) {
  auto var = [&]() {
    int k = int(rng() % unsigned(2 * n + 1));
    return k == 0 ? var_q() : k <= n ? var_z(k) : var_u(k - n);
  };
  auto poly = [&]() {
    Coefficient p(long(rng() % 7) - 3);
    for (int t = 0; t < 2; ++t) {
      Coefficient mono(long(rng() % 5) + 1);
      for (int d = int(rng() % 3); d > 0; --d) mono = mono * var();
      p = p + mono;
    }
    return p;
  };
  Coefficient num = poly(), den = poly();
  if (den.is_zero()) den = Coefficient(1);
  return num / den;
}

ShiftVector random_shift(std::mt19937_64& rng, int n) {
  ShiftVector s(n);
  for (int i = 0; i < n; ++i) {
    s.lambda[std::size_t(i)] = int(rng() % 5) - 2;
    s.mu[std::size_t(i)] = int(rng() % 5) - 2;
  }
  return s;
}

void suite_coeff(Runner& R) {
  const int n = 3;
  std::uint64_t seed = R.params().seed;
  R.exact_check("field-axioms", [&](Verdict& v) {
    std::mt19937_64 rng(mix(seed, "field-axioms", 0));
    for (int k = 0; k < 60; ++k) {
      Coefficient a = random_coefficient(rng, n), b = random_coefficient(rng, n), c = random_coefficient(rng, n);
      std::string lab = "triple " + std::to_string(k);
      expect_equal(v, (a + b) + c, a + (b + c), lab + " additive associativity");
      expect_equal(v, (a * b) * c, a * (b * c), lab + " multiplicative associativity");
      expect_equal(v, a + b, b + a, lab + " additive commutativity");
      expect_equal(v, a * b, b * a, lab + " multiplicative commutativity");
      expect_equal(v, a * (b + c), a * b + a * c, lab + " distributivity");
      expect_equal(v, a + (-a), Coefficient(), lab + " additive inverse");
      if (!a.is_zero()) expect_equal(v, a * a.inv(), Coefficient(1), lab + " multiplicative inverse");
    }
  });
  R.exact_check("shift-laws", [&](Verdict& v) {
    std::mt19937_64 rng(mix(seed, "shift-laws", 0));
    for (int k = 0; k < 60; ++k) {
      Coefficient a = random_coefficient(rng, n), b = random_coefficient(rng, n);
      ShiftVector s = random_shift(rng, n), t = random_shift(rng, n);
      std::string lab = "pair " + std::to_string(k);
      expect_equal(v, (a * b).shifted(s), a.shifted(s) * b.shifted(s), lab + " product");
      expect_equal(v, (a + b).shifted(s), a.shifted(s) + b.shifted(s), lab + " sum");
      expect_equal(v, a.shifted(s).shifted(t), a.shifted(s + t), lab + " composition");
      expect_equal(v, a.shifted(ShiftVector(n)), a, lab + " zero shift");
    }
  });
  R.exact_check("g-equals-hh", [&](Verdict& v) {
    for (Side side : {Side::Lambda, Side::Mu})
      for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
          if (i != j)
            expect_equal(v, g_fun(i, j, side), h_fun(i, j, side) * h_fun(j, i, side),
                         "i=" + std::to_string(i) + " j=" + std::to_string(j));
  });
  R.exact_check("sign-reciprocity", [&](Verdict& v) {
    auto full = range_vec(1, 4);
    for (int r = 1; r <= 4; ++r)
      for (const auto& I : subsets(full, r)) {
        ShiftVector s(4);
        for (int i : I) s.lambda[std::size_t(i - 1)] = 1;
        for (const auto& sigma : all_permutations(r))
          expect_equal(v, sign_S_tilde(sigma, I, Side::Lambda) * sign_S(sigma, I, Side::Lambda).shifted(s),
                       Coefficient(1), "I=" + set_str(I) + " sigma=" + set_str(sigma));
      }
  });
  // what the product does equal: one g per inversion
  R.exact_check("sign-product", [&](Verdict& v) {
    auto full = range_vec(1, 4);
    for (int r = 1; r <= 4; ++r)
      for (const auto& I : subsets(full, r))
        for (const auto& sigma : all_permutations(r)) {
          Coefficient g(1);
          for (int k = 0; k < r; ++k)
            for (int l = k + 1; l < r; ++l)
              if (sigma[std::size_t(k)] > sigma[std::size_t(l)])
                g *= g_fun(I[std::size_t(sigma[std::size_t(k)])], I[std::size_t(sigma[std::size_t(l)])], Side::Lambda);
          expect_equal(v, sign_S_tilde(sigma, I, Side::Lambda) * sign_S(sigma, I, Side::Lambda), g,
                       "I=" + set_str(I) + " sigma=" + set_str(sigma));
        }
  });
  R.exact_check("randomized-agrees-with-exact", [&](Verdict& v) {
    std::mt19937_64 rng(mix(seed, "randomized-agreement", 0));
    for (int k = 0; k < 1000; ++k) {
      Coefficient a = random_coefficient(rng, n), b;
      if (k % 2 == 0) {
        Coefficient c = random_coefficient(rng, n);
        b = c.is_zero() ? a : (a * c) / c;
      } else {
        b = a + Coefficient(long(rng() % 3) + 1) * random_coefficient(rng, n);
      }
      RandomizedResult res = randomized_equal(a, b, mix(seed, "randomized-point", k), 2);
      ++v.checked;
      if (res.equal != (a == b)) v.fail("pair " + std::to_string(k) + ": " + a.str() + " vs " + b.str());
      else if (res.equal && res.failure_bound > kMaxFailureBound)
        v.fail("pair " + std::to_string(k) + ": failure bound " + std::to_string(res.failure_bound));
    }
  });
}

// ---------------------------------------------------------------------------

bool is_pf_suite(const std::string& s) { return s == "pf-laplace" || s == "pf-transform"; }

void run_one(VerificationReport& rep, const std::string& suite) {
  const SuiteParams& p = rep.params;
  const bool exact = p.mode == Mode::Exact;
  if (suite == "coeff") {
    Runner R(rep, suite, 3, 0);
    suite_coeff(R);
    return;
  }
  if (is_pf_suite(suite)) {
    int m = p.m, n = p.n ? p.n : 2;
    if (m < 2 || n < 1) throw UsageError("Pfaffian suites need m >= 2 and n >= 1");
    if (m * n > kMaxN) throw UsageError("m*n exceeds the supported size " + std::to_string(kMaxN));
    if (exact && m * n > 6 && !p.force) throw UsageError("exact mode refuses m*n > 6 without --force");
    Runner R(rep, suite, n, m);
    if (suite == "pf-laplace")
      suite_pf_laplace(R, m, n);
    else
      suite_pf_transform(R, m, n);
    return;
  }
  int n = p.n ? p.n : 3;
  if (n < 1 || n > kMaxN) throw UsageError("n must lie in [1, " + std::to_string(kMaxN) + "]");
  if (exact && n > 4 && !p.force) throw UsageError("exact mode refuses n > 4 without --force");
  Runner R(rep, suite, n, 0);
  if (suite == "relations")
    suite_relations(R, n);
  else if (suite == "confluence")
    suite_confluence(R, n);
  else if (suite == "xi-eta")
    suite_xi_eta(R, n);
  else if (suite == "laplace")
    suite_laplace(R, n);
  else if (suite == "cofactor")
    suite_cofactor(R, n);
  else if (suite == "centrality")
    suite_centrality(R, n);
  else if (suite == "coalgebra")
    suite_coalgebra(R, n);
  else if (suite == "coaction-oracle")
    suite_coaction(R, n);
  else if (suite == "antipode")
    suite_antipode(R, n);
  else
    throw UsageError("unknown suite '" + suite + "'");
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations", "confluence",      "xi-eta",     "laplace",
                                                 "cofactor",  "centrality",      "coalgebra",  "coaction-oracle",
                                                 "antipode",  "pf-laplace",      "pf-transform", "coeff"};
  return names;
}

VerificationReport run_suite(const std::string& suite, const SuiteParams& params) {
  VerificationReport rep;
  rep.suite = suite;
  rep.params = params;
  if (params.trials < 1) throw UsageError("--trials must be positive");
  if (suite == "all") {
    for (const auto& s : suite_names()) run_one(rep, s);
  } else {
    run_one(rep, suite);
  }
  return rep;
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

std::string VerificationReport::json(bool with_timings) const {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["suite"] = suite;
  j["params"] = {{"n", params.n},
                 {"m", params.m},
                 {"t", params.t},
                 {"mode", params.mode == Mode::Exact ? "exact" : "randomized"},
                 {"seed", params.seed},
                 {"trials", params.trials}};
  auto arr = nlohmann::ordered_json::array();
  double total = 0;
  for (const auto& c : checks) {
    nlohmann::ordered_json r;
    r["suite"] = c.suite;
    r["check"] = c.name;
    r["n"] = c.n;
    if (c.m) r["m"] = c.m;
    r["status"] = c.pass ? "pass" : "fail";
    r["evaluation"] = c.sampled ? "sampled" : "exact";
    r["instances"] = c.instances;
    r["terms"] = c.terms;
    if (c.sampled) r["failure_bound"] = fmt_double(c.bound);
    if (with_timings) r["seconds"] = fmt_double(c.seconds);
    if (!c.pass) r["counterexample"] = c.counterexample;
    total += c.seconds;
    arr.push_back(std::move(r));
  }
  j["checks"] = std::move(arr);
  if (with_timings) j["seconds"] = fmt_double(total);
  j["verdict"] = pass() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string VerificationReport::text(bool with_timings) const {
  std::ostringstream os;
  os << "# " << kReportSchema << " suite=" << suite << " mode=" << (params.mode == Mode::Exact ? "exact" : "randomized");
  if (params.mode == Mode::Randomized) os << " seed=" << params.seed << " trials=" << params.trials;
  os << "\n";
  for (const auto& c : checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.suite << "/" << c.name << " n=" << c.n;
    if (c.m) os << " m=" << c.m;
    os << " instances=" << c.instances << " terms=" << c.terms;
    if (c.sampled) os << " bound=" << fmt_double(c.bound);
    if (with_timings) os << " time=" << fmt_double(c.seconds) << "s";
    os << "\n";
    if (!c.pass) os << "  counterexample: " << c.counterexample << "\n";
  }
  os << "verdict: " << (pass() ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace dynq
