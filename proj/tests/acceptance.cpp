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

// Acceptance suite: one pass/fail line per criterion. Every expected value
// and tolerance is pinned here; exit status is the number of failed
// criteria. Known divergences between the published tables and the series
// definitions fail honestly rather than being patched over.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "kred/formulas.hpp"
#include "kred/periodicity.hpp"
#include "kred/reduction.hpp"

using namespace kred;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++failures;
}

std::vector<ExactInt> ints(std::initializer_list<long> values) {
  std::vector<ExactInt> v;
  for (long x : values) v.emplace_back(x);
  return v;
}

std::string diff_detail(const std::vector<ExactInt>& got, const std::vector<ExactInt>& want) {
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (i >= got.size() || got[i] != want[i]) {
      std::ostringstream out;
      out << "index " << i << ": computed "
          << (i < got.size() ? to_string(got[i]) : std::string("<missing>")) << ", expected "
          << to_string(want[i]);
      return out.str();
    }
  }
  return "match";
}

void criterion_1() {
  Timer t;
  const std::vector<ExactInt> got = k_series(OddPrime(23), 7).coefficients();
  const auto want = ints({-1, 11, -44, 22, 374, -572, -10494});
  const bool values_ok = got == want;
  const bool time_ok = t.seconds() < 1.0;
  std::ostringstream detail;
  detail << diff_detail(got, want) << " (t=" << t.seconds() << "s, limit 1s)";
  report(1, "k-series p=23 equals the published K_1..K_6 row", values_ok && time_ok,
         detail.str());
}

void criterion_2() {
  Timer t;
  const auto got = complete_reduce(Theory::Complex, OddPrime(7), 28).coefficients;
  const auto want = ints({-1, 3, 3, 2, 2, 3, 1, -2, 0, 1, 1, -2, -2, 0,
                          3, -1, 2, 1, -3, -1, 3, 0, 2, 0, 2, -1, -2, 1});
  const bool ok = got == want && t.seconds() < 1.0;
  report(2, "complex reduction p=7 equals the published 28 coefficients", ok,
         diff_detail(got, want));
}

void criterion_3() {
  Timer t;
  const auto got = complete_reduce(Theory::Real, OddPrime(7), 16).coefficients;
  const auto want = ints({-1, 2, -3, -3, 2, -1, -1, -3, -1, -1, 1, 1, 1, 1, -1, -3});
  const bool ok = got == want && t.seconds() < 1.0;
  report(3, "real reduction p=7 equals the published 16 coefficients", ok,
         diff_detail(got, want));
}

void criterion_4() {
  const auto got_c = complete_reduce(Theory::Complex, OddPrime(23), 7).coefficients;
  const auto want_c = ints({-1, 11, 2, -1, 6, 3, -6});
  const auto got_r = complete_reduce(Theory::Real, OddPrime(23), 4).coefficients;
  const auto want_r = ints({-1, -1, 4, -1});
  const bool ok = got_c == want_c && got_r == want_r;
  report(4, "p=23 reduction prefixes match the published examples", ok,
         "complex: " + diff_detail(got_c, want_c) + "; real: " + diff_detail(got_r, want_r));
}

void criterion_5() {
  const OddPrime p7(7);
  std::vector<Term> complex_terms;
  const auto bal28 = ints({-1, 3, 3, 2, 2, 3, 1, -2, 0, 1, 1, -2, -2, 0,
                           3, -1, 2, 1, -3, -1, 3, 0, 2, 0, 2, -1, -2, 1});
  for (std::size_t i = 0; i < bal28.size(); ++i)
    complex_terms.push_back(Term{7 + i, bal28[i]});
  const long tail_c[][2] = {{35, -653}, {36, -3662}, {37, -5800},
                            {38, -4373}, {39, -1651}, {40, -253}};
  for (const auto& [e, c] : tail_c)
    complex_terms.push_back(Term{static_cast<std::size_t>(e), ExactInt(c)});

  std::vector<Term> real_terms;
  const auto bal16 = ints({-1, 2, -3, -3, 2, -1, -1, -3, -1, -1, 1, 1, 1, 1, -1, -3});
  for (std::size_t i = 0; i < bal16.size(); ++i) real_terms.push_back(Term{4 + i, bal16[i]});
  const long tail_r[][2] = {{20, -2481}, {21, -1627}, {22, -266}};
  for (const auto& [e, c] : tail_r)
    real_terms.push_back(Term{static_cast<std::size_t>(e), ExactInt(c)});

  const bool complex_exact = verify_finite_identity(Theory::Complex, p7, complex_terms);
  const bool real_exact = verify_finite_identity(Theory::Real, p7, real_terms);

  // The checker itself is validated on an exact term list produced by the
  // engine's closed-bookkeeping mode.
  const bool checker_ok =
      verify_finite_identity(Theory::Complex, p7, exact_reduction_terms(Theory::Complex, p7, 34, 28)) &&
      verify_finite_identity(Theory::Real, p7, exact_reduction_terms(Theory::Real, p7, 19, 16));

  if (complex_exact && real_exact && checker_ok) {
    report(5, "published p=7 identities divide exactly", true, "");
    return;
  }
  // The criterion's own fallback: a false outcome is reported as a suspected
  // typo in the published display; criteria 2-3 stay the binding check.
  std::ostringstream detail;
  detail << "SUSPECTED-PAPER-TYPO: published displays divide exactly = ["
         << (complex_exact ? "true" : "false") << ", " << (real_exact ? "true" : "false")
         << "]; engine-generated exact term lists verify = " << (checker_ok ? "true" : "false")
         << "; balanced-prefix criteria 2-3 remain the binding check";
  report(5, "published p=7 identities divide exactly", checker_ok, detail.str());
}

void criterion_6() {
  const auto table = paper_table_check();
  std::size_t matches = 0;
  std::string bad;
  for (const auto& row : table) {
    if (row.match) {
      ++matches;
    } else {
      if (!bad.empty()) bad += ", ";
      bad += (row.theory == Theory::Complex ? "K_" : "M_") + std::to_string(row.n);
    }
  }
  std::ostringstream detail;
  detail << matches << "/9 match";
  if (!bad.empty()) detail << " (mismatched: " << bad << ")";
  report(6, "closed-form tables match the nine published polynomials", matches == 9,
         detail.str());
}

void criterion_7() {
  Timer t;
  const auto complex_report = formula_vs_direct_scan(Theory::Complex, 6, 101);
  const auto real_report = formula_vs_direct_scan(Theory::Real, 3, 101);
  const bool ok = complex_report.all_match && real_report.all_match && t.seconds() < 10.0;
  std::ostringstream detail;
  detail << complex_report.checks << "+" << real_report.checks << " in-range checks"
         << " (t=" << t.seconds() << "s, limit 10s)";
  report(7, "closed forms equal direct coefficients for all primes <= 101", ok, detail.str());
}

void criterion_8() {
  Timer t;
  bool ok = true;
  std::string bad;
  for (std::size_t n = 1; n <= 12; ++n) {
    if (!(bernoulli_from_k(n).value == bernoulli_oracle(n).value)) {
      ok = false;
      bad = "mismatch at n=" + std::to_string(n);
      break;
    }
  }
  ok = ok && bernoulli_from_k(1).value == ExactRat(ExactInt(-1), ExactInt(2)) &&
       bernoulli_from_k(2).value == ExactRat(ExactInt(1), ExactInt(6)) &&
       bernoulli_from_k(4).value == ExactRat(ExactInt(-1), ExactInt(30)) &&
       bernoulli_from_k(6).value == ExactRat(ExactInt(1), ExactInt(42)) &&
       bernoulli_from_k(3).value.is_zero() && bernoulli_from_k(5).value.is_zero();
  const bool time_ok = t.seconds() < 5.0;
  std::ostringstream detail;
  detail << (bad.empty() ? "B_1..B_12 equal the recurrence oracle" : bad) << " (t=" << t.seconds()
         << "s, limit 5s)";
  report(8, "Bernoulli extraction matches the recurrence for n = 1..12", ok && time_ok,
         detail.str());
}

void criterion_9() {
  const auto complex_reports = scan(Theory::Complex, {ExactInt(3), ExactInt(5)}, 100, {});
  const auto real_reports = scan(Theory::Real, {ExactInt(3), ExactInt(5)}, 100, {});
  auto proved = [](const PeriodReport& r, std::size_t s, std::size_t t) {
    return r.outcome.found && r.outcome.preperiod == s && r.outcome.period == t &&
           r.certificate == CertificateStatus::Proved;
  };
  const auto real3 = complete_reduce(Theory::Real, OddPrime(3), 50).coefficients;
  const bool real3_stream = real3[0] == -1 &&
                            std::all_of(real3.begin() + 1, real3.end(),
                                        [](const ExactInt& c) { return sgn(c) == 0; });
  const auto real5 = complete_reduce(Theory::Real, OddPrime(5), 100).coefficients;
  const bool real5_cycle = real5[0] == -1 && real5[1] == 1;

  const auto p7 = scan(Theory::Complex, {ExactInt(7)}, 28, {});
  const bool ok = proved(complex_reports[0], 0, 2) && proved(complex_reports[1], 0, 6) &&
                  proved(real_reports[0], 1, 1) && real3_stream &&
                  proved(real_reports[1], 0, 2) && real5_cycle && !p7[0].outcome.found &&
                  p7[0].certificate == CertificateStatus::NotAttempted;
  report(9, "periods: complex (0,2)/(0,6) and real p=3/p=5 proved; p=7 window 28 NOT_FOUND",
         ok, "");
}

void criterion_10() {
  bool ok = true;
  for (long pv : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
    const OddPrime p(pv);
    ok = ok && prefix_congruence_check(Theory::Complex, p) &&
         prefix_congruence_check(Theory::Real, p);
  }
  report(10, "prefix congruences a_n = K_n resp. M_n (mod p) for primes <= 31", ok, "");
}

void criterion_11() {
  bool ok = true;
  std::string bad;
  auto fail = [&](const std::string& what) {
    ok = false;
    if (bad.empty()) bad = what;
  };

  for (long pv : {3L, 5L, 7L, 11L, 13L}) {
    const OddPrime p(pv);
    for (Theory th : {Theory::Complex, Theory::Real}) {
      const auto base = complete_reduce(th, p, 50).coefficients;
      for (std::size_t delta : {std::size_t(1), static_cast<std::size_t>(pv), std::size_t(100)}) {
        const auto longer = complete_reduce(th, p, 50 + delta).coefficients;
        if (!std::equal(base.begin(), base.end(), longer.begin()))
          fail("truncation stability " + theory_name(th) + " p=" + std::to_string(pv));
      }
    }
  }

  for (long pv : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
    const OddPrime p(pv);
    for (Theory th : {Theory::Complex, Theory::Real}) {
      if (complete_reduce(th, p, 200, SubstitutionMode::SelfSnapshot).coefficients !=
          complete_reduce(th, p, 200, SubstitutionMode::BaseSeries).coefficients)
        fail("mode agreement " + theory_name(th) + " p=" + std::to_string(pv));
    }
  }

  for (long pv : {3L, 5L, 7L, 11L, 23L}) {
    const OddPrime p(pv);
    for (Theory th : {Theory::Complex, Theory::Real}) {
      const IntSeries s = base_series(th, p, 30);
      const IntSeries d = series_from_poly<IntCoefficients>(theory_denominator(th, p), 30);
      const IntSeries prod = s * d;
      bool good = prod.coeff(0) == -1;
      for (std::size_t i = 1; i < 30; ++i) good = good && sgn(prod.coeff(i)) == 0;
      if (!good) fail("series x denominator " + theory_name(th) + " p=" + std::to_string(pv));
    }
  }

  for (long pv = 3; pv <= 101; pv += 2) {
    if (!is_odd_prime(ExactInt(pv))) continue;
    if (ko_relation_expanded(OddPrime(pv)) != f_polynomial(OddPrime(pv)).shifted(1))
      fail("ko relation vs w*f_p at p=" + std::to_string(pv));
  }

  for (long pv : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
    if (realification_check(OddPrime(pv)) != RealificationStatus::ExactClosedForm)
      fail("realification closed form p=" + std::to_string(pv));
  }

  std::mt19937_64 rng(20260809);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int i = 0; i < 200 && ok; ++i) {
    const std::size_t order = 1 + static_cast<std::size_t>(rng() % 10);
    IntSeries s(order);
    s.coeff(0) = (rng() & 1) ? 1 : -1;
    for (std::size_t k = 1; k < order; ++k) s.coeff(k) = coeff(rng);
    const IntSeries prod = s * s.inverse();
    bool good = prod.coeff(0) == 1;
    for (std::size_t k = 1; k < order; ++k) good = good && sgn(prod.coeff(k)) == 0;
    if (!good) fail("series inverse multiply-back");

    std::vector<ExactInt> dc(1 + rng() % 5, ExactInt(0));
    for (auto& v : dc) v = coeff(rng);
    dc.push_back(ExactInt(1));
    const IntPoly divisor(std::move(dc));
    std::vector<ExactInt> nc(1 + rng() % 9, ExactInt(0));
    for (auto& v : nc) v = coeff(rng) * 97;
    const IntPoly dividend(std::move(nc));
    auto [quot, rem] = poly_divrem_monic(dividend, divisor);
    if (quot * divisor + rem != dividend) fail("division multiply-back");
  }

  report(11, "property suites (stability, mode agreement, ring identities, multiply-backs)",
         ok, bad);
}

void criterion_12() {
  Timer t;
  const OddPrime p(7);
  const std::size_t n = 5000;
  ReductionEngine straight(Theory::Complex, p, n, SubstitutionMode::SelfSnapshot);
  straight.run();
  const double reduce_seconds = t.seconds();

  ReductionEngine half(Theory::Complex, p, n, SubstitutionMode::SelfSnapshot);
  half.run_to(n / 2);
  const ScanState checkpoint{Theory::Complex, p.value(), SubstitutionMode::SelfSnapshot,
                             half.order(), half.done(), half.working()};
  const ScanState reloaded = parse_state(serialize_state(checkpoint));
  ReductionEngine resumed(Theory::Complex, p, SubstitutionMode::SelfSnapshot,
                          reloaded.coefficients, reloaded.done);
  resumed.run();

  const ScanState final_a{Theory::Complex, p.value(), SubstitutionMode::SelfSnapshot, n, n,
                          straight.working()};
  const ScanState final_b{Theory::Complex, p.value(), SubstitutionMode::SelfSnapshot, n, n,
                          resumed.working()};
  const bool byte_identical = serialize_state(final_a) == serialize_state(final_b);
  const bool ok = reduce_seconds < 60.0 && byte_identical;
  std::ostringstream detail;
  detail << "complete_reduce(complex, 7, 5000) took " << reduce_seconds
         << "s (limit 60s); resume byte-identical = " << (byte_identical ? "true" : "false");
  report(12, "performance and resume equivalence", ok, detail.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures;
}
