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

#ifndef KRED_SERIES_HPP
#define KRED_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "kred/errors.hpp"
#include "kred/exact.hpp"
#include "kred/poly.hpp"

namespace kred {

// A coefficient domain supplies {zero, one, add, neg, mul, is_unit,
// exact_div_by_unit}; one series engine then serves exact integers,
// rationals, and Q[p].

struct IntCoefficients {
  using Value = ExactInt;
  static Value zero() { return 0; }
  static Value one() { return 1; }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static bool is_unit(const Value& v) { return v == 1 || v == -1; }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value neg(const Value& a) { return -a; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value exact_div_by_unit(const Value& v, const Value& u) { return u == 1 ? v : Value(-v); }
};

struct RatCoefficients {
  using Value = ExactRat;
  static Value zero() { return ExactRat(0); }
  static Value one() { return ExactRat(1); }
  static bool is_zero(const Value& v) { return v.is_zero(); }
  static bool is_unit(const Value& v) { return !v.is_zero(); }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value neg(const Value& a) { return -a; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value exact_div_by_unit(const Value& v, const Value& u) { return v / u; }
};

// Coefficients that are themselves polynomials in p over Q. Units are the
// nonzero constants.
struct PolyInPCoefficients {
  using Value = PolynomialInP;
  static Value zero() { return {}; }
  static Value one() { return Value{ExactRat(1)}; }
  static bool is_zero(const Value& v) { return v.is_zero(); }
  static bool is_unit(const Value& v) { return v.degree() == 0; }
  static Value add(const Value& a, const Value& b) { return a + b; }
  static Value neg(const Value& a) { return -a; }
  static Value mul(const Value& a, const Value& b) { return a * b; }
  static Value exact_div_by_unit(const Value& v, const Value& u) {
    return v.scaled(ExactRat(1) / u.coeff(0));
  }
};

// Order-N prefix of a formal power series: exactly N stored coefficients.
template <typename Dom>
class TruncatedSeries {
 public:
  using Value = typename Dom::Value;

  explicit TruncatedSeries(std::size_t order) : c_(order, Dom::zero()) {}
  TruncatedSeries(std::size_t order, std::vector<Value> coeffs) : c_(std::move(coeffs)) {
    c_.resize(order, Dom::zero());
  }

  std::size_t order() const { return c_.size(); }
  const Value& coeff(std::size_t i) const { return c_[i]; }
  Value& coeff(std::size_t i) { return c_[i]; }
  const std::vector<Value>& coefficients() const { return c_; }

  TruncatedSeries truncated(std::size_t m) const {
    std::vector<Value> c(c_.begin(), c_.begin() + static_cast<long>(std::min(m, c_.size())));
    return TruncatedSeries(std::min(m, c_.size()), std::move(c));
  }

  TruncatedSeries operator-() const {
    std::vector<Value> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(Dom::neg(v));
    const std::size_t n = c.size();
    return TruncatedSeries(n, std::move(c));
  }

  // Results carry the min of the operand orders.
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Value> c(n, Dom::zero());
    for (std::size_t i = 0; i < n; ++i) c[i] = Dom::add(a.c_[i], b.c_[i]);
    return TruncatedSeries(n, std::move(c));
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Value> c(n, Dom::zero());
    for (std::size_t i = 0; i < n && i < a.c_.size(); ++i) {
      if (Dom::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j < n && j < b.c_.size(); ++j)
        c[i + j] = Dom::add(c[i + j], Dom::mul(a.c_[i], b.c_[j]));
    }
    return TruncatedSeries(n, std::move(c));
  }

  // Prepend k zeros, keeping the order.
  TruncatedSeries shifted(std::size_t k) const {
    std::vector<Value> c(c_.size(), Dom::zero());
    for (std::size_t i = 0; i + k < c_.size(); ++i) c[i + k] = c_[i];
    return TruncatedSeries(c_.size(), std::move(c));
  }

  // Multiplicative inverse to this order, by the standard linear recurrence.
  // Requires a unit constant term.
  TruncatedSeries inverse() const {
    if (c_.empty() || !Dom::is_unit(c_[0]))
      throw NonUnitConstantTerm("series constant term is not a unit");
    std::vector<Value> s(c_.size(), Dom::zero());
    s[0] = Dom::exact_div_by_unit(Dom::one(), c_[0]);
    for (std::size_t n = 1; n < c_.size(); ++n) {
      Value acc = Dom::zero();
      for (std::size_t k = 1; k <= n; ++k) {
        if (!Dom::is_zero(c_[k])) acc = Dom::add(acc, Dom::mul(c_[k], s[n - k]));
      }
      s[n] = Dom::exact_div_by_unit(Dom::neg(acc), c_[0]);
    }
    const std::size_t n = s.size();
    return TruncatedSeries(n, std::move(s));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }

 private:
  std::vector<Value> c_;
};

using IntSeries = TruncatedSeries<IntCoefficients>;
using RatSeries = TruncatedSeries<RatCoefficients>;
using PolyInPSeries = TruncatedSeries<PolyInPCoefficients>;

template <typename Dom>
TruncatedSeries<Dom> series_from_poly(const Poly<typename Dom::Value>& f, std::size_t order) {
  std::vector<typename Dom::Value> c = f.coefficients();
  c.resize(std::max<std::size_t>(order, c.size()), Dom::zero());
  c.resize(order);
  return TruncatedSeries<Dom>(order, std::move(c));
}

}  // namespace kred

#endif  // KRED_SERIES_HPP
