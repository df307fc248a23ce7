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

#ifndef KRED_ERRORS_HPP
#define KRED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kred {

// Usage/validation problems (bad `p`, bad flags). CLI exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A quantity that must be an exact integer came out fractional. This is
// always a transcription or programming bug, never a data condition.
// CLI exit code 1.
struct IntegralityViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Two presentations of the same object disagree. CLI exit code 1.
struct ConsistencyViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct NonMonicDivisor : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonUnitConstantTerm : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A state file failed its digest or structural checks. Never resumed from.
// CLI exit code 3.
struct StateCorruption : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace kred

#endif  // KRED_ERRORS_HPP
