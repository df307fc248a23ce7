// Copyright 2026 The kred authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KRED_PERIODICITY_HPP
#define KRED_PERIODICITY_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kred/exact.hpp"
#include "kred/reduction.hpp"

namespace kred {

// Purely syntactic detection outcome. NOT_FOUND never claims aperiodicity;
// it only says no candidate met the margin inside this window.
struct DetectionOutcome {
  bool found = false;
  std::size_t preperiod = 0;
  std::size_t period = 0;
  std::size_t confirmed_length = 0;
};

// Scans candidate periods t = 1..max_period, smallest t first, taking for
// each the smallest preperiod s with a[n+t] == a[n] on [s, W-t). A candidate
// is accepted only when confirmed_length = W-t-s >= max(3t, t+64): at least
// three cycles and at least 64 matched positions.
DetectionOutcome detect_eventual_period(std::span<const ExactInt> seq, std::size_t max_period);

enum class CertificateStatus { Proved, Unproved, NotAttempted };

std::string certificate_status_name(CertificateStatus s);

struct PeriodReport {
  Theory theory;
  ExactInt p;
  std::size_t window;
  DetectionOutcome outcome;
  CertificateStatus certificate = CertificateStatus::NotAttempted;
};

// Persisted engine state. Text format, line oriented:
//   KREDSTATE 1
//   theory=<complex|real> p=<int> mode=<self|base> target=<int> done=<int>
//   <one decimal coefficient per line: balanced prefix, then raw tail>
//   sha256=<hex digest of all preceding bytes>
struct ScanState {
  Theory theory;
  ExactInt p;
  SubstitutionMode mode;
  std::size_t target = 0;
  std::size_t done = 0;
  std::vector<ExactInt> coefficients;
};

std::string serialize_state(const ScanState& state);
ScanState parse_state(const std::string& text);  // throws StateCorruption

// Atomic write (temp file + rename).
void save_state(const std::filesystem::path& path, const ScanState& state);
ScanState load_state(const std::filesystem::path& path);  // throws StateCorruption

std::filesystem::path default_state_path(const std::filesystem::path& dir, Theory theory,
                                         const ExactInt& p, SubstitutionMode mode);

struct ScanOptions {
  SubstitutionMode mode = SubstitutionMode::SelfSnapshot;
  // State directory; no persistence when empty.
  std::optional<std::filesystem::path> state_dir;
  // Explicit state file, only meaningful for a single prime.
  std::optional<std::filesystem::path> state_file;
  std::size_t max_period = 0;  // 0: derive from the window
  bool parallel = true;
};

// For each prime: load-or-compute the complete reduction to `order` terms
// (resumable), detect a period, and try to certify FOUND candidates.
// Reports come back in input order; the whole scan is deterministic.
std::vector<PeriodReport> scan(Theory theory, const std::vector<ExactInt>& primes,
                               std::size_t order, const ScanOptions& options = {});

}  // namespace kred

#endif  // KRED_PERIODICITY_HPP
