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

#ifndef KRED_POLY_HPP
#define KRED_POLY_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "kred/errors.hpp"
#include "kred/exact.hpp"

namespace kred {

// Dense univariate polynomial, coefficients low-to-high. Canonical form:
// no stored leading zero (the zero polynomial stores nothing).
template <typename T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly monomial(T coeff, std::size_t k) {
    if (kred::is_zero(coeff)) return Poly();
    std::vector<T> c(k + 1, T(0));
    c[k] = std::move(coeff);
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const { return c_; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return Poly(std::move(r));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  Poly operator-() const {
    std::vector<T> r(c_.size(), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }

  Poly scaled(const T& s) const {
    if (kred::is_zero(s)) return Poly();
    std::vector<T> r(c_.size(), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return Poly(std::move(r));
  }

  // Multiply by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return Poly();
    std::vector<T> r(c_.size() + k, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return Poly(std::move(r));
  }

  template <typename U>
  U eval(const U& x) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && kred::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<ExactInt>;
using RatPoly = Poly<ExactRat>;

// Element of Q[p]; same representation as RatPoly, the indeterminate is
// understood to be the prime p.
using PolynomialInP = RatPoly;

// dividend = quotient * divisor + remainder with deg(remainder) < deg(divisor).
// The divisor must be monic so every step stays in exact integers.
std::pair<IntPoly, IntPoly> poly_divrem_monic(const IntPoly& dividend, const IntPoly& divisor);

RatPoly to_rat_poly(const IntPoly& f);
// Exact conversion back; throws IntegralityViolation on fractional coefficients.
IntPoly to_int_poly(const RatPoly& f);

// Dense Laurent polynomial: coefficients from min_exponent upward, trimmed
// at both ends.
class LaurentIntPoly {
 public:
  LaurentIntPoly() : min_exp_(0) {}
  LaurentIntPoly(long min_exponent, std::vector<ExactInt> coeffs);
  static LaurentIntPoly from_poly(const IntPoly& f) {
    return LaurentIntPoly(0, f.coefficients());
  }

  bool is_zero() const { return c_.empty(); }
  long min_exponent() const { return min_exp_; }
  long max_exponent() const { return min_exp_ + static_cast<long>(c_.size()) - 1; }
  ExactInt coeff(long e) const;
  const std::vector<ExactInt>& coefficients() const { return c_; }

  friend LaurentIntPoly operator+(const LaurentIntPoly& a, const LaurentIntPoly& b);
  friend LaurentIntPoly operator*(const LaurentIntPoly& a, const LaurentIntPoly& b);
  LaurentIntPoly scaled(const ExactInt& s) const;
  LaurentIntPoly shifted(long k) const;  // multiply by x^k

  friend bool operator==(const LaurentIntPoly& a, const LaurentIntPoly& b) {
    return a.is_zero() == b.is_zero() && (a.is_zero() || (a.min_exp_ == b.min_exp_ && a.c_ == b.c_));
  }
  friend bool operator!=(const LaurentIntPoly& a, const LaurentIntPoly& b) { return !(a == b); }

 private:
  void trim();
  long min_exp_;
  std::vector<ExactInt> c_;
};

// f(w) evaluated at w = x + x^{-1} - 2, as an exact Laurent polynomial.
LaurentIntPoly laurent_substitute_w(const IntPoly& f_in_w);

}  // namespace kred

#endif  // KRED_POLY_HPP
