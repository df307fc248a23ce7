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

#ifndef KRED_EXACT_HPP
#define KRED_EXACT_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "kred/errors.hpp"

namespace kred {

// Arbitrary-precision integer. All arithmetic in this project is exact;
// there is no floating point anywhere.
using ExactInt = mpz_class;

inline bool is_zero(const ExactInt& v) { return sgn(v) == 0; }

std::string to_string(const ExactInt& v);

// Exact rational, always in lowest terms with positive denominator.
// Equality is structural on the canonical form.
class ExactRat {
 public:
  ExactRat() : q_(0) {}
  ExactRat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  ExactRat(const ExactInt& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  ExactRat(const ExactInt& num, const ExactInt& den);

  const ExactInt num() const { return ExactInt(q_.get_num()); }
  const ExactInt den() const { return ExactInt(q_.get_den()); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  ExactRat operator-() const;
  friend ExactRat operator+(const ExactRat& a, const ExactRat& b) {
    return ExactRat(mpq_class(a.q_ + b.q_), Canonical{});
  }
  friend ExactRat operator-(const ExactRat& a, const ExactRat& b) {
    return ExactRat(mpq_class(a.q_ - b.q_), Canonical{});
  }
  friend ExactRat operator*(const ExactRat& a, const ExactRat& b) {
    return ExactRat(mpq_class(a.q_ * b.q_), Canonical{});
  }
  friend ExactRat operator/(const ExactRat& a, const ExactRat& b);
  ExactRat& operator+=(const ExactRat& b) { q_ += b.q_; return *this; }
  ExactRat& operator-=(const ExactRat& b) { q_ -= b.q_; return *this; }
  ExactRat& operator*=(const ExactRat& b) { q_ *= b.q_; return *this; }

  friend bool operator==(const ExactRat& a, const ExactRat& b) { return a.q_ == b.q_; }
  friend bool operator!=(const ExactRat& a, const ExactRat& b) { return a.q_ != b.q_; }
  friend bool operator<(const ExactRat& a, const ExactRat& b) { return a.q_ < b.q_; }

  std::string str() const;  // "n" or "n/d"

 private:
  struct Canonical {};
  ExactRat(mpq_class q, Canonical) : q_(std::move(q)) {}
  mpq_class q_;
};

inline bool is_zero(const ExactRat& v) { return v.is_zero(); }

// Odd prime, validated on construction. The balanced band (p-1)/2 is
// unambiguous exactly because p is odd.
class OddPrime {
 public:
  explicit OddPrime(ExactInt value);
  explicit OddPrime(long value) : OddPrime(ExactInt(value)) {}

  const ExactInt& value() const { return v_; }
  const ExactInt& half() const { return half_; }  // (p-1)/2
  // Dense relation/series code sizes arrays by p.
  unsigned long as_ulong() const {
    if (!v_.fits_ulong_p()) throw UsageError("p is too large for dense computation");
    return v_.get_ui();
  }

  friend bool operator==(const OddPrime& a, const OddPrime& b) { return a.v_ == b.v_; }

 private:
  ExactInt v_;
  ExactInt half_;
};

// Deterministic primality: trial division plus the fixed Miller-Rabin base
// battery {2,...,37}, deterministic for n < 3.317e24. Larger inputs throw;
// nothing here may rest on a probabilistic answer.
bool is_odd_prime(const ExactInt& n);

// The unique (r, q) with c = r + p*q and |r| <= (p-1)/2.
std::pair<ExactInt, ExactInt> balanced_residue(const ExactInt& c, const OddPrime& p);

// Exact C(n, k); 0 when 0 <= n < k, generalized product formula for n < 0.
ExactInt binomial(const ExactInt& n, unsigned long k);

ExactInt factorial(unsigned long n);

}  // namespace kred

#endif  // KRED_EXACT_HPP
