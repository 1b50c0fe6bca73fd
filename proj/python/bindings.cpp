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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dynq/falg.hpp"
#include "dynq/pfaff.hpp"
#include "dynq/verify.hpp"

namespace py = pybind11;
using namespace dynq;

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxN) throw UsageError("n must lie in [1, " + std::to_string(kMaxN) + "]");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dynamical quantum minors, Pfaffians and identity checks";
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

  m.def(
      "det",
      [](int n) {
        check_n(n);
        Algebra A(n);
        return A.det().str();
      },
      py::arg("n"));
  m.def(
      "minor",
      [](int n, const std::vector<int>& I, const std::vector<int>& J) {
        check_n(n);
        if (I.empty() || I.size() != J.size()) throw UsageError("I and J must be nonempty and of equal size");
        for (int x : I)
          if (x < 1 || x > n) throw UsageError("row index out of range");
        for (int x : J)
          if (x < 1 || x > n) throw UsageError("column index out of range");
        Algebra A(n);
        return A.minor_xi(I, J).str();
      },
      py::arg("n"), py::arg("I"), py::arg("J"));
  m.def(
      "pf",
      [](int m_, int n, const std::vector<int>& I, bool tilde) {
        if (m_ < 1 || n < 1 || m_ * n > kMaxN) throw UsageError("need m, n >= 1 and m*n <= 7");
        return (tilde ? pf_tilde(m_, n, I) : pf(m_, n, I)).str();
      },
      py::arg("m"), py::arg("n"), py::arg("I") = std::vector<int>{}, py::arg("tilde") = false);

  m.def("suite_names", &suite_names);
  m.def(
      "verify_json",
      [](const std::string& suite, int n, int m_, int t, const std::string& mode, std::uint64_t seed, int trials,
         int words, bool force, bool timings) {
        SuiteParams p;
        p.n = n;
        p.m = m_;
        p.t = t;
        if (mode == "exact")
          p.mode = Mode::Exact;
        else if (mode == "randomized")
          p.mode = Mode::Randomized;
        else
          throw UsageError("mode must be 'exact' or 'randomized'");
        p.seed = seed;
        p.trials = trials;
        p.words = words;
        p.force = force;
        VerificationReport rep;
        {
          py::gil_scoped_release release;
          rep = run_suite(suite, p);
        }
        return rep.json(timings);
      },
      py::arg("suite"), py::arg("n") = 0, py::arg("m") = 2, py::arg("t") = -1, py::arg("mode") = "exact",
      py::arg("seed") = kDefaultSeed, py::arg("trials") = 2, py::arg("words") = 500, py::arg("force") = false,
      py::arg("timings") = false);
  m.attr("REPORT_SCHEMA") = kReportSchema;
  m.attr("DEFAULT_SEED") = kDefaultSeed;
}
