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

// Named verification suites and their reports.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dynq {

inline constexpr const char* kReportSchema = "dynq.verification/1";
inline constexpr std::uint64_t kDefaultSeed = 20260101;
// largest accepted false-pass probability in sampled mode
inline constexpr double kMaxFailureBound = 9.094947017729282e-13;  // 2^-40

enum class Mode : std::uint8_t { Exact, Randomized };

// bad parameters (unknown suite, size guard, out-of-range indices)
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SuiteParams {
  int n = 0;   // 0: the suite default (3 for algebra suites, 2 blocks for Pfaffians)
  int m = 2;
  int t = -1;  // Pfaffian Laplace split; -1 runs every t
  Mode mode = Mode::Exact;
  std::uint64_t seed = kDefaultSeed;
  int trials = 2;  // sample points per check in randomized mode
  int words = 500;  // confluence corpus size
  bool force = false;
};

struct CheckRecord {
  std::string suite;
  std::string name;
  int n = 0, m = 0;
  bool pass = false;
  bool sampled = false;
  long instances = 0;
  long terms = 0;
  double bound = 0.0;  // false-pass probability, sampled checks only
  double seconds = 0.0;
  std::string counterexample;
};

struct VerificationReport {
  std::string suite;
  SuiteParams params;
  std::vector<CheckRecord> checks;

  bool pass() const;
  // canonical JSON; wall times appear only when asked for, so that identical
  // invocations give identical reports
  std::string json(bool with_timings = false) const;
  std::string text(bool with_timings = false) const;
};

const std::vector<std::string>& suite_names();  // without "all"
VerificationReport run_suite(const std::string& suite, const SuiteParams& params);

}  // namespace dynq
