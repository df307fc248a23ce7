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

#ifndef KRED_FORMULAS_HPP
#define KRED_FORMULAS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "kred/exact.hpp"
#include "kred/poly.hpp"
#include "kred/reduction.hpp"

namespace kred {

// K_n(p) or M_n(p) as an exact element of Q[p], with the smallest prime the
// closed form is valid for.
struct FormulaEntry {
  Theory theory;
  std::size_t n;
  PolynomialInP formula;  // canonical expanded form
  unsigned long min_valid_p;
};

// C(p, k) as the polynomial p(p-1)...(p-k+1)/k!.
PolynomialInP binomial_in_p(std::size_t k);

// Coefficient n of the inverse of the generic complex denominator over Q[p],
// negated. Valid for primes >= n+2 (n >= 1); k_formula(0) is -1 always.
FormulaEntry k_formula(std::size_t n);

// Real analog; valid for primes >= 2n+3.
FormulaEntry m_formula(std::size_t n);

// Canonical expanded display, e.g. "(p^2 - p)/2" -> "1/2*p^2 - 1/2*p" style.
std::string format_in_p(const PolynomialInP& f);

// Best-effort factored display in the style of the published tables
// (content extracted, then factors p^2-1, p^2-9, p-1, p+1 detected).
// Display only; equality is always on the expanded form.
std::string format_in_p_factored(const PolynomialInP& f);

struct TableCheckEntry {
  Theory theory;
  std::size_t n;
  bool match;
  PolynomialInP computed;
  PolynomialInP published;
};

// Compares k_formula(1..6) and m_formula(1..3) against transcriptions of the
// nine published closed forms, on canonical expanded form.
std::vector<TableCheckEntry> paper_table_check();

struct ScanMismatch {
  Theory theory;
  unsigned long p;
  std::size_t n;
  std::string formula_value;
  ExactInt direct_value;
};

struct BelowThresholdRecord {
  Theory theory;
  unsigned long p;
  std::size_t n;
  std::string formula_value;  // possibly non-integral
  bool integral;
  bool equals_direct;
  ExactInt direct_value;
};

struct FormulaScanReport {
  bool all_match = true;
  std::size_t checks = 0;
  std::vector<ScanMismatch> mismatches;
  std::vector<BelowThresholdRecord> below_threshold;  // informational only
};

// For every odd prime p <= p_max and n <= n_max with p >= min_valid_p(n),
// asserts formula(n)(p) equals the directly computed series coefficient.
// Below-threshold evaluations are recorded, never asserted.
FormulaScanReport formula_vs_direct_scan(Theory theory, std::size_t n_max, unsigned long p_max);

struct BernoulliValue {
  std::size_t n;
  ExactRat value;
};

// -n! times the coefficient of p^n in k_formula(n); equals B_n with the
// B_1 = -1/2 convention.
BernoulliValue bernoulli_from_k(std::size_t n);

// Independent ground truth: sum_{k=0}^{m} C(m+1,k) B_k = 0, B_0 = 1.
BernoulliValue bernoulli_oracle(std::size_t n);

}  // namespace kred

#endif  // KRED_FORMULAS_HPP
