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

#ifndef KRED_REFERENCE_HPP
#define KRED_REFERENCE_HPP

#include <string>
#include <vector>

namespace kred::reference {

enum class CheckStatus { Pass, Fail, SuspectedPaperTypo };

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

// Recomputes every published reference value (series prefixes, reduction
// displays, closed-form tables, periods, congruences, the Bernoulli limit,
// realification) and compares. Finite-identity checks that fail divisibility
// are reported as SuspectedPaperTypo rather than Fail.
std::vector<CheckResult> run_published_value_checks();

// False only if some check has status Fail (typo findings do not force
// failure by themselves).
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace kred::reference

#endif  // KRED_REFERENCE_HPP
