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

#ifndef KRED_REDUCTION_HPP
#define KRED_REDUCTION_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kred/exact.hpp"
#include "kred/poly.hpp"
#include "kred/series.hpp"

namespace kred {

// Complex: the ring Z[u]/((1+u)^p - 1), generator exponent base p, carry
// shift p-1. Real: Z[w]/(w f_p(w)), base (p+1)/2, shift (p-1)/2.
enum class Theory { Complex, Real };

enum class SubstitutionMode { SelfSnapshot, BaseSeries };

std::string theory_name(Theory t);
std::string mode_name(SubstitutionMode m);

std::size_t base_exponent(Theory t, const OddPrime& p);
std::size_t carry_shift(Theory t, const OddPrime& p);

// (1+u)^p - 1: degree p, zero constant term, coefficient of u^k is C(p,k).
IntPoly complex_relation(const OddPrime& p);

// D(u) = ((1+u)^p - 1 - u^p) / (pu) = 1 + sum_{k=2}^{p-1} (C(p,k)/p) u^{k-1}.
IntPoly complex_denominator(const OddPrime& p);

// f_p(w) = p + sum_{j=1}^{(p-3)/2} [p(p^2-1)(p^2-9)...(p^2-(2j-1)^2) /
// (2^{2j} (2j+1)!)] w^j + w^{(p-1)/2}. Monic, constant term p; every
// coefficient is checked to be integral.
IntPoly f_polynomial(const OddPrime& p);

// p w + sum_{j=2}^{(p-1)/2} [p(p^2-1)...(p^2-(2j-3)^2)/(2^{2j-2}(2j-1)!)] w^j
// + w^{(p+1)/2}. Cross-checked coefficientwise against w * f_p(w).
IntPoly ko_relation_expanded(const OddPrime& p);

// (w f_p(w) - w^{(p+1)/2}) / (pw); constant term 1.
IntPoly ko_denominator(const OddPrime& p);

IntPoly relation_polynomial(Theory t, const OddPrime& p);
IntPoly theory_denominator(Theory t, const OddPrime& p);

// sum K_{p,n} u^n = -pu / ((1+u)^p - 1 - u^p), to order N.
IntSeries k_series(const OddPrime& p, std::size_t order);

// sum M_{p,n} w^n = -pw / (w f_p(w) - w^{(p+1)/2}), to order N.
IntSeries m_series(const OddPrime& p, std::size_t order);

IntSeries base_series(Theory t, const OddPrime& p, std::size_t order);

// The coefficient stream of p*X = sum c_n X^{base_exponent+n}, |c_n| bounded
// by (p-1)/2 on the balanced prefix.
struct ReductionSeries {
  Theory theory;
  ExactInt p;
  std::size_t base_exponent;
  SubstitutionMode mode;
  std::vector<ExactInt> coefficients;
  std::size_t balanced_len;
};

// Left-to-right rewrite engine. Position n is rebalanced to the band
// [-(p-1)/2, (p-1)/2]; the carry q is pushed forward through the
// substitution series S at positions n + shift + m. S is the working array
// as it stood at the start of the step (SelfSnapshot) or the untouched base
// series (BaseSeries). Carries beyond the order are dropped; they can only
// affect positions >= order, so the balanced prefix is final.
class ReductionEngine {
 public:
  ReductionEngine(Theory theory, const OddPrime& p, std::size_t order, SubstitutionMode mode);
  // Resume from a persisted working array with `done` positions already
  // balanced. The array must be a valid engine state for (theory, p, mode).
  ReductionEngine(Theory theory, const OddPrime& p, SubstitutionMode mode,
                  std::vector<ExactInt> working, std::size_t done);

  void run_to(std::size_t n_stop);
  void run() { run_to(order()); }

  Theory theory() const { return theory_; }
  const OddPrime& prime() const { return p_; }
  SubstitutionMode mode() const { return mode_; }
  std::size_t order() const { return c_.size(); }
  std::size_t done() const { return done_; }
  const std::vector<ExactInt>& working() const { return c_; }

  ReductionSeries to_series() const;

 private:
  Theory theory_;
  OddPrime p_;
  SubstitutionMode mode_;
  std::size_t shift_;
  std::size_t done_ = 0;
  std::vector<ExactInt> c_;
  std::vector<ExactInt> base_;  // only populated in BaseSeries mode
};

ReductionSeries complete_reduce(Theory theory, const OddPrime& p, std::size_t order,
                                SubstitutionMode mode = SubstitutionMode::SelfSnapshot);

// One (exponent, coefficient) term of a finite identity display.
struct Term {
  std::size_t exponent;
  ExactInt coefficient;
};

// Runs the rewrite with exact bookkeeping: the working array is seeded with
// the order-N closure (so the initial finite identity is exact, not just
// exact-up-to-truncation) and carries are never dropped. Balancing stops at
// n_stop; the returned term list satisfies p*X = sum(terms) in the ring,
// which verify_finite_identity can confirm. Requires order >= base exponent.
std::vector<Term> exact_reduction_terms(Theory theory, const OddPrime& p, std::size_t order,
                                        std::size_t n_stop,
                                        SubstitutionMode mode = SubstitutionMode::SelfSnapshot);

// True iff p*X - sum coeff*X^exponent is exactly divisible by the theory's
// relation polynomial. Exponents must be distinct.
bool verify_finite_identity(Theory theory, const OddPrime& p, std::span<const Term> terms);

// Claimed eventual period: preperiod P then cycle C repeating forever.
struct PeriodCertificate {
  Theory theory;
  ExactInt p;
  std::vector<ExactInt> preperiod;
  std::vector<ExactInt> cycle;
};

// Exact divisibility witness for p*X*(1 - X^t) - (1 - X^t)*sum P_n X^{e+n}
// - sum C_m X^{e+s+m}. A true result proves eventual periodicity for this
// prime and theory; a false result proves nothing.
bool certify_period(const PeriodCertificate& cert);

// a_n == K_n (mod p) for 0 <= n <= p (Complex) resp. a_n == M_n (mod p) for
// 0 <= n <= (p-1)/2 (Real), with a the balanced complete reduction.
bool prefix_congruence_check(Theory theory, const OddPrime& p);

enum class RealificationStatus {
  ExactClosedForm,  // w f_p(w) at w = x + 1/x - 2 equals x^{-(p+1)/2}(x-1)(x^p-1)
  DivisibleOnly,    // closed form failed but x^p - 1 still divides
  Failed,
};

RealificationStatus realification_check(const OddPrime& p);

}  // namespace kred

#endif  // KRED_REDUCTION_HPP
