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

#include "kred/reduction.hpp"

#include <algorithm>
#include <set>

namespace kred {

std::string theory_name(Theory t) { return t == Theory::Complex ? "complex" : "real"; }

std::string mode_name(SubstitutionMode m) {
  return m == SubstitutionMode::SelfSnapshot ? "self" : "base";
}

std::size_t base_exponent(Theory t, const OddPrime& p) {
  return t == Theory::Complex ? p.value().get_ui() : (p.value().get_ui() + 1) / 2;
}

std::size_t carry_shift(Theory t, const OddPrime& p) {
  return t == Theory::Complex ? p.value().get_ui() - 1 : (p.value().get_ui() - 1) / 2;
}

IntPoly complex_relation(const OddPrime& p) {
  const unsigned long pu = p.as_ulong();
  std::vector<ExactInt> c(pu + 1, ExactInt(0));
  for (unsigned long k = 1; k <= pu; ++k) c[k] = binomial(p.value(), k);
  return IntPoly(std::move(c));
}

IntPoly complex_denominator(const OddPrime& p) {
  const unsigned long pu = p.as_ulong();
  std::vector<ExactInt> c(pu - 1, ExactInt(0));
  c[0] = 1;
  for (unsigned long k = 2; k <= pu - 1; ++k) {
    ExactInt b = binomial(p.value(), k);
    ExactInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t(), p.value().get_mpz_t());
    if (sgn(r) != 0)
      throw IntegralityViolation("C(p,k) not divisible by p at k=" + std::to_string(k));
    c[k - 1] = std::move(q);
  }
  return IntPoly(std::move(c));
}

IntPoly f_polynomial(const OddPrime& p) {
  const unsigned long pu = p.as_ulong();
  const unsigned long half = (pu - 1) / 2;
  std::vector<ExactRat> c(half + 1, ExactRat(0));
  c[0] = ExactRat(p.value());
  ExactRat running(p.value());  // p * prod_{i<=j} (p^2 - (2i-1)^2)
  const ExactRat p2(p.value() * p.value());
  for (unsigned long j = 1; j + 1 <= half; ++j) {
    const ExactInt odd = ExactInt(2 * j - 1);
    running = running * (p2 - ExactRat(ExactInt(odd * odd)));
    ExactInt den = factorial(2 * j + 1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * j);
    c[j] = running * ExactRat(ExactInt(1), den);
  }
  c[half] = ExactRat(1);
  RatPoly f(std::move(c));
  try {
    return to_int_poly(f);
  } catch (const IntegralityViolation&) {
    throw IntegralityViolation("f_polynomial coefficient is not integral for p=" +
                               to_string(p.value()));
  }
}

IntPoly ko_relation_expanded(const OddPrime& p) {
  const unsigned long pu = p.as_ulong();
  const unsigned long top = (pu + 1) / 2;
  std::vector<ExactRat> c(top + 1, ExactRat(0));
  c[1] = ExactRat(p.value());
  ExactRat running(p.value());  // p * prod_{i<j} (p^2 - (2i-1)^2)
  const ExactRat p2(p.value() * p.value());
  for (unsigned long j = 2; j < top; ++j) {
    const ExactInt odd = ExactInt(2 * j - 3);
    running = running * (p2 - ExactRat(ExactInt(odd * odd)));
    ExactInt den = factorial(2 * j - 1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * j - 2);
    c[j] = running * ExactRat(ExactInt(1), den);
  }
  c[top] = ExactRat(1);
  IntPoly rel;
  try {
    rel = to_int_poly(RatPoly(std::move(c)));
  } catch (const IntegralityViolation&) {
    throw IntegralityViolation("expanded KO relation coefficient is not integral for p=" +
                               to_string(p.value()));
  }
  if (rel != f_polynomial(p).shifted(1))
    throw ConsistencyViolation("expanded KO relation differs from w*f_p(w) for p=" +
                               to_string(p.value()));
  return rel;
}

IntPoly ko_denominator(const OddPrime& p) {
  IntPoly rel = ko_relation_expanded(p);
  const unsigned long top = (p.as_ulong() + 1) / 2;
  std::vector<ExactInt> c(top - 1, ExactInt(0));
  for (unsigned long j = 1; j < top; ++j) {
    ExactInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rel.coeff(j).get_mpz_t(),
                p.value().get_mpz_t());
    if (sgn(r) != 0)
      throw IntegralityViolation("KO relation coefficient not divisible by p at j=" +
                                 std::to_string(j));
    c[j - 1] = std::move(q);
  }
  return IntPoly(std::move(c));
}

IntPoly relation_polynomial(Theory t, const OddPrime& p) {
  return t == Theory::Complex ? complex_relation(p) : ko_relation_expanded(p);
}

IntPoly theory_denominator(Theory t, const OddPrime& p) {
  return t == Theory::Complex ? complex_denominator(p) : ko_denominator(p);
}

IntSeries k_series(const OddPrime& p, std::size_t order) {
  if (order == 0) throw UsageError("series order must be >= 1");
  return -series_from_poly<IntCoefficients>(complex_denominator(p), order).inverse();
}

IntSeries m_series(const OddPrime& p, std::size_t order) {
  if (order == 0) throw UsageError("series order must be >= 1");
  return -series_from_poly<IntCoefficients>(ko_denominator(p), order).inverse();
}

IntSeries base_series(Theory t, const OddPrime& p, std::size_t order) {
  return t == Theory::Complex ? k_series(p, order) : m_series(p, order);
}

ReductionEngine::ReductionEngine(Theory theory, const OddPrime& p, std::size_t order,
                                 SubstitutionMode mode)
    : theory_(theory), p_(p), mode_(mode), shift_(carry_shift(theory, p)) {
  c_ = base_series(theory, p, order).coefficients();
  if (mode_ == SubstitutionMode::BaseSeries) base_ = c_;
}

ReductionEngine::ReductionEngine(Theory theory, const OddPrime& p, SubstitutionMode mode,
                                 std::vector<ExactInt> working, std::size_t done)
    : theory_(theory),
      p_(p),
      mode_(mode),
      shift_(carry_shift(theory, p)),
      done_(done),
      c_(std::move(working)) {
  if (done_ > c_.size()) throw StateCorruption("balanced length exceeds working array");
  if (mode_ == SubstitutionMode::BaseSeries)
    base_ = base_series(theory, p, c_.size()).coefficients();
}

void ReductionEngine::run_to(std::size_t n_stop) {
  n_stop = std::min(n_stop, c_.size());
  for (std::size_t n = done_; n < n_stop; ++n) {
    auto [r, q] = balanced_residue(c_[n], p_);
    if (sgn(q) != 0) {
      // The substitution series is the array as it stood before this step
      // (position n still carrying r + p*q), or the base series. Walking m
      // downward keeps every read ahead of every write, so no copy is made.
      const std::vector<ExactInt>& s = mode_ == SubstitutionMode::SelfSnapshot ? c_ : base_;
      if (c_.size() > n + shift_) {
        for (std::size_t m = c_.size() - n - shift_; m-- > 0;)
          mpz_addmul(c_[n + shift_ + m].get_mpz_t(), q.get_mpz_t(), s[m].get_mpz_t());
      }
    }
    c_[n] = std::move(r);
  }
  done_ = std::max(done_, n_stop);
}

ReductionSeries ReductionEngine::to_series() const {
  return ReductionSeries{theory_, p_.value(), base_exponent(theory_, p_),
                         mode_,   c_,         done_};
}

ReductionSeries complete_reduce(Theory theory, const OddPrime& p, std::size_t order,
                                SubstitutionMode mode) {
  ReductionEngine engine(theory, p, order, mode);
  engine.run();
  return engine.to_series();
}

std::vector<Term> exact_reduction_terms(Theory theory, const OddPrime& p, std::size_t order,
                                        std::size_t n_stop, SubstitutionMode mode) {
  const std::size_t e = base_exponent(theory, p);
  if (order + 1 < e)
    throw UsageError("exact_reduction_terms needs order >= base exponent - 1");
  const std::size_t shift = carry_shift(theory, p);
  const IntPoly den = theory_denominator(theory, p);
  const IntSeries s = base_series(theory, p, order);

  // Closure: with E the truncated inverse (E = -s), D*E = 1 + X^order * H.
  // Seeding -p*H_j at position order+1-e+j makes the initial identity exact.
  IntPoly inv_prefix(std::vector<ExactInt>(s.coefficients().begin(), s.coefficients().end()));
  IntPoly prod = den * (-inv_prefix);
  if (prod.coeff(0) != 1)
    throw ConsistencyViolation("inverse prefix does not start at 1");
  for (std::size_t i = 1; i < order; ++i)
    if (sgn(prod.coeff(i)) != 0)
      throw ConsistencyViolation("inverse prefix fails below the truncation order");

  std::vector<ExactInt> c = s.coefficients();
  const std::size_t grow_hint = order + 8 * (shift + 1);
  c.reserve(grow_hint);
  auto at = [&c](std::size_t i) -> ExactInt& {
    if (i >= c.size()) c.resize(i + 1, ExactInt(0));
    return c[i];
  };
  const int prod_deg = prod.degree();
  for (std::size_t idx = order; prod_deg >= 0 && idx <= static_cast<std::size_t>(prod_deg);
       ++idx) {
    const ExactInt h = prod.coeff(idx);
    if (sgn(h) != 0) at(idx + 1 - e) -= p.value() * h;
  }
  std::vector<ExactInt> base;
  if (mode == SubstitutionMode::BaseSeries) base = c;

  n_stop = std::min(n_stop, order);
  for (std::size_t n = 0; n < n_stop; ++n) {
    auto [r, q] = balanced_residue(c[n], p);
    if (sgn(q) != 0) {
      const std::vector<ExactInt>& s_arr = mode == SubstitutionMode::SelfSnapshot ? c : base;
      const std::size_t len = s_arr.size();
      at(n + shift + len - 1);  // grow once; carries are never dropped here
      for (std::size_t m = len; m-- > 0;)
        mpz_addmul(c[n + shift + m].get_mpz_t(), q.get_mpz_t(), s_arr[m].get_mpz_t());
    }
    c[n] = std::move(r);
  }

  std::vector<Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) terms.push_back(Term{e + i, c[i]});
  return terms;
}

bool verify_finite_identity(Theory theory, const OddPrime& p, std::span<const Term> terms) {
  std::set<std::size_t> seen;
  std::size_t max_exp = 1;
  for (const Term& t : terms) {
    if (!seen.insert(t.exponent).second) throw UsageError("duplicate exponent in term list");
    max_exp = std::max(max_exp, t.exponent);
  }
  std::vector<ExactInt> c(max_exp + 1, ExactInt(0));
  c[1] = p.value();
  for (const Term& t : terms) c[t.exponent] -= t.coefficient;
  auto [quot, rem] = poly_divrem_monic(IntPoly(std::move(c)), relation_polynomial(theory, p));
  (void)quot;
  return rem.is_zero();
}

bool certify_period(const PeriodCertificate& cert) {
  const OddPrime p(cert.p);
  const Theory theory = cert.theory;
  const std::size_t e = base_exponent(theory, p);
  const std::size_t s = cert.preperiod.size();
  const std::size_t t = cert.cycle.size();
  if (t == 0) throw UsageError("certificate cycle must be nonempty");

  // Q = p X (1 - X^t) - (1 - X^t) sum_{n<s} P_n X^{e+n} - sum_{m<t} C_m X^{e+s+m}
  IntPoly one_minus_xt = IntPoly{ExactInt(1)} - IntPoly::monomial(ExactInt(1), t);
  std::vector<ExactInt> pref(e + s, ExactInt(0));
  for (std::size_t n = 0; n < s; ++n) pref[e + n] = cert.preperiod[n];
  std::vector<ExactInt> cyc(e + s + t, ExactInt(0));
  for (std::size_t m = 0; m < t; ++m) cyc[e + s + m] = cert.cycle[m];
  IntPoly q_poly = IntPoly::monomial(cert.p, 1) * one_minus_xt -
                   one_minus_xt * IntPoly(std::move(pref)) - IntPoly(std::move(cyc));
  auto [quot, rem] = poly_divrem_monic(q_poly, relation_polynomial(theory, p));
  (void)quot;
  return rem.is_zero();
}

bool prefix_congruence_check(Theory theory, const OddPrime& p) {
  const std::size_t n_max =
      theory == Theory::Complex ? p.as_ulong() : (p.as_ulong() - 1) / 2;
  const IntSeries s = base_series(theory, p, n_max + 1);
  const ReductionSeries a = complete_reduce(theory, p, n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (balanced_residue(s.coeff(n), p).first != a.coefficients[n]) return false;
  }
  return true;
}

RealificationStatus realification_check(const OddPrime& p) {
  const long e = static_cast<long>((p.as_ulong() + 1) / 2);
  const LaurentIntPoly lhs = laurent_substitute_w(ko_relation_expanded(p));

  // x^{-(p+1)/2} (x - 1)(x^p - 1)
  IntPoly x_minus_1{ExactInt(-1), ExactInt(1)};
  IntPoly xp_minus_1 = IntPoly::monomial(ExactInt(1), p.as_ulong()) - IntPoly{ExactInt(1)};
  const LaurentIntPoly closed = LaurentIntPoly::from_poly(x_minus_1 * xp_minus_1).shifted(-e);
  if (lhs == closed) return RealificationStatus::ExactClosedForm;

  if (!lhs.is_zero()) {
    const IntPoly as_poly(std::vector<ExactInt>(lhs.coefficients()));
    auto [quot, rem] = poly_divrem_monic(as_poly, xp_minus_1);
    (void)quot;
    if (rem.is_zero()) return RealificationStatus::DivisibleOnly;
  }
  return RealificationStatus::Failed;
}

}  // namespace kred
