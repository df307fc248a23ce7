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

#include "kred/poly.hpp"

#include <algorithm>

namespace kred {

std::pair<IntPoly, IntPoly> poly_divrem_monic(const IntPoly& dividend, const IntPoly& divisor) {
  if (divisor.is_zero()) throw NonMonicDivisor("division by the zero polynomial");
  if (divisor.leading() != 1) throw NonMonicDivisor("divisor is not monic");
  const int dd = divisor.degree();
  std::vector<ExactInt> rem = dividend.coefficients();
  if (dividend.degree() < dd) return {IntPoly(), dividend};
  std::vector<ExactInt> quot(dividend.degree() - dd + 1, ExactInt(0));
  for (int i = dividend.degree(); i >= dd; --i) {
    ExactInt c = rem[i];
    if (sgn(c) == 0) continue;
    quot[i - dd] = c;
    // rem -= c * divisor * x^{i-dd}
    for (int j = 0; j <= dd; ++j)
      mpz_submul(rem[i - dd + j].get_mpz_t(), c.get_mpz_t(),
                 divisor.coefficients()[j].get_mpz_t());
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

RatPoly to_rat_poly(const IntPoly& f) {
  std::vector<ExactRat> c;
  c.reserve(f.coefficients().size());
  for (const auto& v : f.coefficients()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

IntPoly to_int_poly(const RatPoly& f) {
  std::vector<ExactInt> c;
  c.reserve(f.coefficients().size());
  for (const auto& v : f.coefficients()) {
    if (!v.is_integer())
      throw IntegralityViolation("fractional coefficient where an integer is required: " + v.str());
    c.push_back(v.num());
  }
  return IntPoly(std::move(c));
}

LaurentIntPoly::LaurentIntPoly(long min_exponent, std::vector<ExactInt> coeffs)
    : min_exp_(min_exponent), c_(std::move(coeffs)) {
  trim();
}

void LaurentIntPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && sgn(c_[lead]) == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    min_exp_ += static_cast<long>(lead);
  }
  if (c_.empty()) min_exp_ = 0;
}

ExactInt LaurentIntPoly::coeff(long e) const {
  if (e < min_exp_ || e > max_exponent()) return 0;
  return c_[static_cast<std::size_t>(e - min_exp_)];
}

LaurentIntPoly operator+(const LaurentIntPoly& a, const LaurentIntPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long lo = std::min(a.min_exp_, b.min_exp_);
  const long hi = std::max(a.max_exponent(), b.max_exponent());
  std::vector<ExactInt> c(static_cast<std::size_t>(hi - lo + 1), ExactInt(0));
  for (long e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
  return LaurentIntPoly(lo, std::move(c));
}

LaurentIntPoly operator*(const LaurentIntPoly& a, const LaurentIntPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentIntPoly();
  std::vector<ExactInt> c(a.c_.size() + b.c_.size() - 1, ExactInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  return LaurentIntPoly(a.min_exp_ + b.min_exp_, std::move(c));
}

LaurentIntPoly LaurentIntPoly::scaled(const ExactInt& s) const {
  std::vector<ExactInt> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return LaurentIntPoly(min_exp_, std::move(c));
}

LaurentIntPoly LaurentIntPoly::shifted(long k) const {
  if (is_zero()) return LaurentIntPoly();
  return LaurentIntPoly(min_exp_ + k, c_);
}

LaurentIntPoly laurent_substitute_w(const IntPoly& f_in_w) {
  // Horner over Laurent polynomials with w = x + x^{-1} - 2.
  const LaurentIntPoly w(-1, {ExactInt(1), ExactInt(-2), ExactInt(1)});
  LaurentIntPoly acc;
  const auto& c = f_in_w.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * w + LaurentIntPoly(0, {c[i]});
  }
  return acc;
}

}  // namespace kred
