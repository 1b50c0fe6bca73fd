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

#include "dynq/falg.hpp"

#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace dynq {

namespace {

void canonicalize(ExactTerms& t) {
  Accum<Coefficient> acc;
  acc.add_all(t);
  t = acc.take<ExactField>();
}

// u_i -> z_i
Coefficient mu_to_lambda(const Coefficient& c) {
  std::array<int, kSlots> dest;
  for (int s = 0; s < kSlots; ++s) dest[std::size_t(s)] = s;
  for (int i = 1; i <= kMaxIndex; ++i) dest[std::size_t(var_slot(Family::U, i))] = var_slot(Family::Z, i);
  return c.map_slots(dest);
}

Coefficient lambda_to_mu(const Coefficient& c) {
  std::array<int, kSlots> dest;
  for (int s = 0; s < kSlots; ++s) dest[std::size_t(s)] = s;
  for (int i = 1; i <= kMaxIndex; ++i) dest[std::size_t(var_slot(Family::Z, i))] = var_slot(Family::U, i);
  return c.map_slots(dest);
}

bool shift_less(const ShiftVector& a, const ShiftVector& b) {
  return a.lambda != b.lambda ? a.lambda < b.lambda : a.mu < b.mu;
}

// split text at top-level occurrences of `sep`
std::vector<std::string> split_top(const std::string& text, const std::string& sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '[' || c == '(') ++depth;
    else if (c == ']' || c == ')') --depth;
    else if (depth == 0 && text.compare(i, sep.size(), sep) == 0) {
      out.push_back(text.substr(start, i - start));
      start = i + sep.size();
      i = start - 1;
    }
  }
  out.push_back(text.substr(start));
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

void add_word_shift(SlotShift& a, const Word& w, Family lam, Family mu) {
  for (char c : w) {
    a[std::size_t(var_slot(lam, gen_row(c)))] -= 1;
    a[std::size_t(var_slot(mu, gen_col(c)))] -= 1;
  }
}

void check_index(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("generator index out of range");
}

}  // namespace

// ---------------------------------------------------------------------------
// Element

Element::Element(int n, ExactTerms terms) : n_(n), terms_(std::move(terms)) {
  if (!std::is_sorted(terms_.begin(), terms_.end(),
                      [](const auto& a, const auto& b) { return word_less(a.first, b.first); }))
    canonicalize(terms_);
  for (const auto& [w, c] : terms_)
    if (c.is_zero()) {
      canonicalize(terms_);
      break;
    }
}

Coefficient Element::coeff(const Word& w) const {
  for (const auto& [x, c] : terms_)
    if (x == w) return c;
  return Coefficient();
}

Element Element::operator-() const {
  ExactTerms t = terms_;
  for (auto& [w, c] : t) c = -c;
  return Element(n_, std::move(t));
}

Element operator+(const Element& a, const Element& b) {
  if (a.n_ != b.n_ && !a.is_zero() && !b.is_zero()) throw std::invalid_argument("elements of different algebras");
  return Element(std::max(a.n_, b.n_), terms_combine<ExactField>(a.terms_, b.terms_, Coefficient(1)));
}

Element Element::scaled(const Coefficient& f) const {
  if (f.is_zero()) return Element(n_, {});
  return Element(n_, terms_scale(terms_, f));
}

std::string word_str(const Word& w) {
  std::string s;
  for (char c : w) {
    if (!s.empty()) s += ' ';
    s += "t[" + std::to_string(gen_row(c)) + "," + std::to_string(gen_col(c)) + "]";
  }
  return s;
}

Word word_of(const std::vector<std::pair<int, int>>& gens) {
  Word w;
  for (auto [i, j] : gens) {
    check_index(i, kMaxN);
    check_index(j, kMaxN);
    w.push_back(gen_code(i, j));
  }
  return w;
}

std::pair<std::vector<int>, std::vector<int>> bidegree(const Word& w, int n) {
  std::vector<int> r(std::size_t(n), 0), c(std::size_t(n), 0);
  for (char x : w) {
    ++r[std::size_t(gen_row(x) - 1)];
    ++c[std::size_t(gen_col(x) - 1)];
  }
  return {r, c};
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c.is_one() && !w.empty()) {
      out += word_str(w);
    } else {
      out += "[" + c.str() + "]";
      if (!w.empty()) out += " " + word_str(w);
    }
  }
  return out;
}

Element Element::parse(int n, const std::string& text) {
  std::string t = trim(text);
  if (t == "0" || t.empty()) return Element(n, {});
  ExactTerms terms;
  for (const auto& part : split_top(t, " + ")) {
    std::string p = trim(part);
    Coefficient c(1);
    std::size_t pos = 0;
    if (!p.empty() && p[0] == '[') {
      int depth = 0;
      std::size_t end = 0;
      for (; end < p.size(); ++end) {
        if (p[end] == '[') ++depth;
        else if (p[end] == ']' && --depth == 0) break;
      }
      if (end == p.size()) throw std::invalid_argument("unterminated coefficient in element text");
      c = Coefficient::parse(p.substr(1, end - 1));
      pos = end + 1;
    }
    Word w;
    std::istringstream is(p.substr(pos));
    std::string tok;
    while (is >> tok) {
      int i = 0, j = 0;
      char tail = 0;
      if (std::sscanf(tok.c_str(), "t[%d,%d%c", &i, &j, &tail) != 3 || tail != ']')
        throw std::invalid_argument("bad generator token: " + tok);
      check_index(i, n);
      check_index(j, n);
      w.push_back(gen_code(i, j));
    }
    if (!is_normal(w)) throw std::invalid_argument("element text must use normal words");
    terms.emplace_back(w, c);
  }
  ExactTerms merged = terms;
  canonicalize(merged);
  return Element(n, std::move(merged));
}

// ---------------------------------------------------------------------------
// ShiftOperatorSum

ShiftOperatorSum::ShiftOperatorSum(const Coefficient& f, const ShiftVector& s) {
  if (!f.is_zero()) terms_.emplace_back(f, s);
}

void ShiftOperatorSum::canonicalize() {
  std::stable_sort(terms_.begin(), terms_.end(), [](const auto& a, const auto& b) { return shift_less(a.second, b.second); });
  std::vector<std::pair<Coefficient, ShiftVector>> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().second == t.second) out.back().first += t.first;
    else out.push_back(std::move(t));
  }
  terms_.clear();
  for (auto& t : out)
    if (!t.first.is_zero()) terms_.push_back(std::move(t));
}

ShiftOperatorSum operator+(const ShiftOperatorSum& a, const ShiftOperatorSum& b) {
  ShiftOperatorSum r = a;
  r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
  r.canonicalize();
  return r;
}

ShiftOperatorSum operator*(const ShiftOperatorSum& a, const ShiftOperatorSum& b) {
  ShiftOperatorSum r;
  for (const auto& [f, s] : a.terms_)
    for (const auto& [g, t] : b.terms_) r.terms_.emplace_back(f * g.shifted(s), s + t);
  r.canonicalize();
  return r;
}

ShiftOperatorSum ShiftOperatorSum::operator-() const {
  ShiftOperatorSum r = *this;
  for (auto& t : r.terms_) t.first = -t.first;
  return r;
}

std::string ShiftOperatorSum::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [f, s] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + f.str() + "] T(";
    for (std::size_t i = 0; i < s.lambda.size(); ++i) out += (i ? "," : "") + std::to_string(s.lambda[i]);
    out += ")";
  }
  return out;
}

// ---------------------------------------------------------------------------
// TensorElement

std::vector<Family> tensor_families(int factors) {
  if (factors == 1) return {Family::Z, Family::U};
  if (factors == 2) return {Family::Z, Family::W1, Family::U};
  if (factors == 3) return {Family::Z, Family::W1, Family::W2, Family::U};
  throw std::invalid_argument("tensors have 1 to 3 factors");
}

namespace {

Coefficient remap(const Coefficient& c, Family to_z, Family to_u) {
  std::array<int, kSlots> dest;
  for (int s = 0; s < kSlots; ++s) dest[std::size_t(s)] = s;
  for (int i = 1; i <= kMaxIndex; ++i) {
    dest[std::size_t(var_slot(Family::Z, i))] = var_slot(to_z, i);
    dest[std::size_t(var_slot(Family::U, i))] = var_slot(to_u, i);
  }
  return c.map_slots(dest);
}

}  // namespace

Coefficient to_factor(const Coefficient& c, int f, int factors) {
  auto fam = tensor_families(factors);
  if (f < 0 || f >= factors) throw std::invalid_argument("tensor factor out of range");
  return remap(c, fam[std::size_t(f)], fam[std::size_t(f + 1)]);
}

void TensorElement::add(const std::vector<Word>& words, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(words, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  TensorElement r = a;
  for (const auto& [w, c] : b.terms_) r.add(w, c);
  return r;
}

TensorElement TensorElement::operator-() const {
  TensorElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [ws, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + c.str() + "]";
    for (std::size_t k = 0; k < ws.size(); ++k) {
      out += k ? " (x) " : " ";
      out += ws[k].empty() ? "1" : word_str(ws[k]);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// R-matrix

const Coefficient& RMatrix::at(int i, int j, int k, int l) const {
  auto idx = [&](int a, int b) { return std::size_t((a - 1) * n + (b - 1)); };
  return entries[idx(i, j) * std::size_t(n * n) + idx(k, l)];
}

RMatrix r_matrix(int n, RMode mode) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("n out of range");
  RMatrix r;
  r.n = n;
  std::size_t N = std::size_t(n * n);
  r.entries.assign(N * N, Coefficient());
  auto set = [&](int i, int j, int k, int l, const Coefficient& c) {
    std::size_t a = std::size_t((i - 1) * n + (j - 1)), b = std::size_t((k - 1) * n + (l - 1));
    r.entries[a * N + b] += c;
  };
  for (int i = 1; i <= n; ++i) {
    set(i, i, i, i, var_q());
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      set(i, i, j, j, i < j ? Coefficient(1) : g_fun(i, j, Side::Lambda));
      if (mode == RMode::Literal) set(i, i, j, j, h_fun(i, j, Side::Lambda));
      else set(i, j, j, i, h_fun(i, j, Side::Lambda));
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Algebra

Algebra::Algebra(int n)
    : n_(n), field_(std::make_unique<ExactField>()), engine_(std::make_unique<Engine<ExactField>>(*field_, n)) {}

Element Algebra::one() const { return Element(n_, {{Word(), Coefficient(1)}}); }

Element Algebra::gen(int i, int j) const {
  check_index(i, n_);
  check_index(j, n_);
  return Element(n_, {{single(i, j), Coefficient(1)}});
}

Element Algebra::scalar_l(const Coefficient& f) const { return Element(n_, {{Word(), f}}); }

Element Algebra::scalar_r(const Coefficient& f) const { return Element(n_, {{Word(), lambda_to_mu(f)}}); }

Coefficient Algebra::move_coeff_left(const Word& m, const Coefficient& f) const { return f.shifted(word_shift(m, n_)); }

RawSum Algebra::raw_of(const Element& x) const {
  RawSum r;
  r.reserve(x.size());
  for (const auto& [w, c] : x.terms()) r.push_back({Closed::of(c), w});
  return r;
}

Element Algebra::normalize(const std::vector<std::pair<Coefficient, Word>>& raw) {
  RawSum r;
  for (const auto& [c, w] : raw) {
    for (char x : w) {
      check_index(gen_row(x), n_);
      check_index(gen_col(x), n_);
    }
    r.push_back({Closed::of(c), w});
  }
  return wrap(engine_->normalize(r));
}

Element Algebra::normalize_word(const Word& w) { return normalize({{Coefficient(1), w}}); }

Element Algebra::mul(const Element& a, const Element& b) { return wrap(engine_->mul_raw(a.terms(), raw_of(b))); }

Element Algebra::pow(const Element& a, int k) {
  Element r = one();
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

Element Algebra::minor_xi(const std::vector<int>& I, const std::vector<int>& J, const Permutation& rho) {
  return wrap(engine_->normalize(xi_raw(I, J, rho)));
}

Element Algebra::minor_eta(const std::vector<int>& I, const std::vector<int>& J, const Permutation& rho) {
  return wrap(engine_->normalize(eta_raw(I, J, rho)));
}

const Element& Algebra::det() {
  if (!det_) {
    auto full = range_vec(1, n_);
    det_ = std::make_unique<Element>(minor_xi(full, full));
  }
  return *det_;
}

std::pair<Element, Element> Algebra::laplace(const std::vector<int>& I, const std::vector<int>& J1,
                                             const std::vector<int>& J2, LaplaceKind kind) {
  auto [l, r] = laplace_sides(*engine_, I, J1, J2, kind);
  return {wrap(std::move(l)), wrap(std::move(r))};
}

std::pair<Element, Element> Algebra::cofactor_identity(int i, int j, int variant) {
  auto [l, r] = cofactor_sides(*engine_, i, j, variant);
  return {wrap(std::move(l)), wrap(std::move(r))};
}

TensorElement Algebra::tensor_normalize(const std::vector<std::pair<Coefficient, std::vector<Word>>>& raw,
                                        int factors) {
  auto fam = tensor_families(factors);
  TensorElement out(n_, factors);
  for (const auto& [c0, words] : raw) {
    if (int(words.size()) != factors) throw std::invalid_argument("tensor word count mismatch");
    struct Partial {
      Coefficient c;
      std::vector<Word> ws;
      SlotShift shift;
    };
    std::vector<Partial> cur{{c0, {}, SlotShift{}}};
    for (int g = 0; g < factors; ++g) {
      const ExactTerms nf = engine_->normalize_word(words[std::size_t(g)]);
      std::vector<Partial> next;
      for (const auto& p : cur)
        for (const auto& [w, d] : nf) {
          Partial q{p.c * to_factor(d, g, factors).shifted(p.shift), p.ws, p.shift};
          if (q.c.is_zero()) continue;
          q.ws.push_back(w);
          add_word_shift(q.shift, w, fam[std::size_t(g)], fam[std::size_t(g + 1)]);
          next.push_back(std::move(q));
        }
      cur = std::move(next);
    }
    for (const auto& p : cur) out.add(p.ws, p.c);
  }
  return out;
}

namespace {

// all ways to write prod t_{i_r j_r} as (prod t_{i_r k_r}) (x) (prod t_{k_r j_r})
std::vector<std::pair<Word, Word>> split_word(const Word& w, int n) {
  std::vector<std::pair<Word, Word>> out{{Word(), Word()}};
  for (char c : w) {
    std::vector<std::pair<Word, Word>> next;
    for (const auto& [a, b] : out)
      for (int k = 1; k <= n; ++k) next.emplace_back(a + gen_code(gen_row(c), k), b + gen_code(k, gen_col(c)));
    out = std::move(next);
  }
  return out;
}

}  // namespace

TensorElement Algebra::coproduct(const Element& x) {
  std::vector<std::pair<Coefficient, std::vector<Word>>> raw;
  for (const auto& [w, c] : x.terms()) {
    Coefficient outer = remap(c, Family::Z, Family::U);
    for (auto& [a, b] : split_word(w, n_)) raw.push_back({outer, {a, b}});
  }
  return tensor_normalize(raw, 2);
}

TensorElement Algebra::coproduct_on(const TensorElement& x, int f) {
  if (x.factors() != 2) throw std::invalid_argument("coproduct_on expects a two-factor tensor");
  std::array<int, kSlots> dest;
  for (int s = 0; s < kSlots; ++s) dest[std::size_t(s)] = s;
  if (f == 0)
    for (int i = 1; i <= kMaxIndex; ++i) dest[std::size_t(var_slot(Family::W1, i))] = var_slot(Family::W2, i);
  std::vector<std::pair<Coefficient, std::vector<Word>>> raw;
  for (const auto& [ws, c] : x.terms()) {
    Coefficient c3 = c.map_slots(dest);
    for (auto& [a, b] : split_word(ws[std::size_t(f)], n_)) {
      std::vector<Word> v = f == 0 ? std::vector<Word>{a, b, ws[1]} : std::vector<Word>{ws[0], a, b};
      raw.push_back({c3, std::move(v)});
    }
  }
  return tensor_normalize(raw, 3);
}

TensorElement Algebra::tensor(const std::vector<std::pair<Element, Element>>& pairs) const {
  TensorElement out(n_, 2);
  for (const auto& [A, B] : pairs)
    for (const auto& [wa, ca] : A.terms()) {
      SlotShift s{};
      add_word_shift(s, wa, Family::Z, Family::W1);
      Coefficient left = to_factor(ca, 0, 2);
      for (const auto& [wb, cb] : B.terms()) out.add({wa, wb}, left * to_factor(cb, 1, 2).shifted(s));
    }
  return out;
}

ShiftOperatorSum Algebra::counit_gen(int i, int j) const {
  check_index(i, n_);
  check_index(j, n_);
  if (i != j) return {};
  ShiftVector s(n_);
  s.lambda[std::size_t(i - 1)] = -1;
  return ShiftOperatorSum(Coefficient(1), s);
}

ShiftOperatorSum Algebra::counit_coeff(const Coefficient& f) const { return ShiftOperatorSum(mu_to_lambda(f), ShiftVector(n_)); }

ShiftOperatorSum Algebra::counit(const Element& x) const {
  ShiftOperatorSum out;
  for (const auto& [w, c] : x.terms()) {
    ShiftOperatorSum t = counit_coeff(c);
    for (char g : w) t = t * counit_gen(gen_row(g), gen_col(g));
    out = out + t;
  }
  return out;
}

// ---------------------------------------------------------------------------
// localization at det

LocElement Algebra::antipode_gen(int i, int j) {
  check_index(i, n_);
  check_index(j, n_);
  std::vector<int> ih = complement({i}, n_), jh = complement({j}, n_);
  Closed ratio = closed_qsign(jh, {j}, Side::Lambda) * closed_qsign(ih, {i}, Side::Mu).inv();
  // det^{-1} f = shift(f, +1) det^{-1}
  ratio = ratio.shifted(ShiftVector::constant(n_, 1));
  ExactTerms body = terms_scale(engine_->normalize(xi_raw(jh, ih)), field_->value(ratio));
  return {wrap(std::move(body)), 1};
}

LocElement Algebra::loc_mul(const LocElement& a, const LocElement& b) {
  ShiftVector s = ShiftVector::constant(n_, a.det_power);
  ExactTerms moved;
  for (const auto& [w, c] : b.body.terms()) moved.emplace_back(w, c.shifted(s));
  return minimize({mul(a.body, wrap(std::move(moved))), a.det_power + b.det_power});
}

LocElement Algebra::loc_add(const LocElement& a, const LocElement& b) {
  const LocElement& lo = a.det_power <= b.det_power ? a : b;
  const LocElement& hi = a.det_power <= b.det_power ? b : a;
  Element lifted = mul(lo.body, pow(det(), hi.det_power - lo.det_power));
  return minimize({lifted + hi.body, hi.det_power});
}

LocElement Algebra::minimize(const LocElement& a) {
  LocElement r = a;
  if (r.body.is_zero()) return {zero(), 0};
  Element q;
  while (r.det_power > 0 && divide_by_det(r.body, q)) {
    r.body = q;
    --r.det_power;
  }
  return r;
}

std::vector<Word> normal_words(const std::vector<int>& rows, const std::vector<int>& cols) {
  std::size_t n = rows.size();
  std::vector<Word> out;
  for (int x : rows)
    if (x < 0) return out;
  for (int x : cols)
    if (x < 0) return out;
  std::vector<int> colleft = cols;
  std::vector<int> M(n * n, 0);
  // fill row by row, column by column
  std::function<void(std::size_t, std::size_t, int)> rec = [&](std::size_t i, std::size_t j, int rowleft) {
    if (i == n) {
      for (int c : colleft)
        if (c) return;
      Word w;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) w.append(std::size_t(M[a * n + b]), gen_code(int(a) + 1, int(b) + 1));
      out.push_back(std::move(w));
      return;
    }
    if (j == n) {
      if (rowleft == 0) rec(i + 1, 0, i + 1 < n ? rows[i + 1] : 0);
      return;
    }
    for (int v = std::min(rowleft, colleft[j]); v >= 0; --v) {
      M[i * n + j] = v;
      colleft[j] -= v;
      rec(i, j + 1, rowleft - v);
      colleft[j] += v;
    }
    M[i * n + j] = 0;
  };
  if (n) rec(0, 0, rows[0]);
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

bool Algebra::divide_by_det(const Element& x, Element& quotient) {
  // group by bidegree; det is homogeneous of bidegree (1..1; 1..1)
  std::map<std::pair<std::vector<int>, std::vector<int>>, ExactTerms> parts;
  for (const auto& t : x.terms()) parts[bidegree(t.first, n_)].push_back(t);
  ExactTerms result;
  RawSum det_raw = raw_of(det());
  for (const auto& [deg, target] : parts) {
    std::vector<int> r = deg.first, c = deg.second;
    for (auto& v : r) --v;
    for (auto& v : c) --v;
    std::vector<Word> cand = normal_words(r, c);
    if (cand.empty()) return false;
    // columns: NF(w det) for each candidate
    std::vector<ExactTerms> cols;
    std::map<Word, std::size_t> row_of;
    for (const auto& w : cand) {
      cols.push_back(engine_->mul_raw(ExactTerms{{w, Coefficient(1)}}, det_raw));
      for (const auto& t : cols.back()) row_of.try_emplace(t.first, row_of.size());
    }
    for (const auto& t : target)
      if (!row_of.count(t.first)) return false;
    std::size_t R = row_of.size(), C = cand.size();
    std::vector<std::vector<Coefficient>> A(R, std::vector<Coefficient>(C + 1));
    for (std::size_t k = 0; k < C; ++k)
      for (const auto& [w, v] : cols[k]) A[row_of[w]][k] = v;
    for (const auto& [w, v] : target) A[row_of[w]][C] = v;
    // Gaussian elimination
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t k = 0; k < C && row < R; ++k) {
      std::size_t p = row;
      while (p < R && A[p][k].is_zero()) ++p;
      if (p == R) continue;
      std::swap(A[p], A[row]);
      Coefficient iv = A[row][k].inv();
      for (std::size_t m = k; m <= C; ++m) A[row][m] = A[row][m] * iv;
      for (std::size_t o = 0; o < R; ++o) {
        if (o == row || A[o][k].is_zero()) continue;
        Coefficient fct = A[o][k];
        for (std::size_t m = k; m <= C; ++m)
          if (!A[row][m].is_zero()) A[o][m] = A[o][m] - fct * A[row][m];
      }
      pivot_col.push_back(k);
      ++row;
    }
    for (std::size_t o = row; o < R; ++o)
      if (!A[o][C].is_zero()) return false;
    for (std::size_t p = 0; p < pivot_col.size(); ++p)
      if (!A[p][C].is_zero()) result.emplace_back(cand[pivot_col[p]], A[p][C]);
  }
  quotient = Element(n_, std::move(result));
  return true;
}

}  // namespace dynq
