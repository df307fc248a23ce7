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

#include "kred/exact.hpp"

#include <array>

namespace kred {

std::string to_string(const ExactInt& v) { return v.get_str(10); }

ExactRat::ExactRat(const ExactInt& num, const ExactInt& den) {
  if (sgn(den) == 0) throw UsageError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

ExactRat ExactRat::operator-() const {
  ExactRat r;
  r.q_ = -q_;
  return r;
}

ExactRat operator/(const ExactRat& a, const ExactRat& b) {
  if (b.is_zero()) throw UsageError("rational division by zero");
  return ExactRat(mpq_class(a.q_ / b.q_), ExactRat::Canonical{});
}

std::string ExactRat::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

namespace {

// Deterministic Miller-Rabin bound for the base battery below
// (Sorenson & Webster): 3,317,044,064,679,887,385,961,981.
const ExactInt& deterministic_bound() {
  static const ExactInt bound("3317044064679887385961981");
  return bound;
}

constexpr std::array<unsigned long, 12> kBases = {2,  3,  5,  7,  11, 13,
                                                  17, 19, 23, 29, 31, 37};

bool miller_rabin_witness(const ExactInt& n, unsigned long base) {
  // n odd, n > base. Returns true if `base` witnesses compositeness.
  ExactInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  ExactInt x;
  ExactInt b(base);
  mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_odd_prime(const ExactInt& n) {
  if (n < 3 || mpz_even_p(n.get_mpz_t())) return false;
  for (unsigned long q : kBases) {
    if (n == q) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return false;
  }
  if (n >= deterministic_bound())
    throw UsageError("primality check beyond the deterministic range");
  for (unsigned long base : kBases) {
    if (miller_rabin_witness(n, base)) return false;
  }
  return true;
}

OddPrime::OddPrime(ExactInt value) : v_(std::move(value)) {
  if (!is_odd_prime(v_)) throw UsageError("p must be an odd prime");
  half_ = (v_ - 1) / 2;
}

std::pair<ExactInt, ExactInt> balanced_residue(const ExactInt& c, const OddPrime& p) {
  ExactInt q, r;
  // Floor division: 0 <= r < p, then fold the upper half down.
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), p.value().get_mpz_t());
  if (r > p.half()) {
    r -= p.value();
    q += 1;
  }
  return {std::move(r), std::move(q)};
}

ExactInt binomial(const ExactInt& n, unsigned long k) {
  ExactInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

ExactInt factorial(unsigned long n) {
  ExactInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace kred
