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

#include "kred/formulas.hpp"

#include <sstream>

#include "kred/series.hpp"

namespace kred {

namespace {

PolynomialInP poly_p() { return PolynomialInP{ExactRat(0), ExactRat(1)}; }

// (p-1)(p-2)...(p-k+1)/k!, i.e. binomial_in_p(k) with the leading p factor
// removed exactly.
PolynomialInP binomial_in_p_over_p(std::size_t k) {
  PolynomialInP f{ExactRat(1)};
  for (std::size_t i = 1; i < k; ++i)
    f = f * (poly_p() - PolynomialInP{ExactRat(ExactInt(i))});
  return f.scaled(ExactRat(ExactInt(1), factorial(static_cast<unsigned long>(k))));
}

// Generic real-theory denominator coefficient of w^{j-1}:
// (p^2-1)(p^2-9)...(p^2-(2j-3)^2) / (2^{2j-2} (2j-1)!), j >= 2.
PolynomialInP real_denominator_coeff(std::size_t j) {
  PolynomialInP f{ExactRat(1)};
  const PolynomialInP p2 = poly_p() * poly_p();
  for (std::size_t i = 1; i + 1 <= j; ++i) {
    const ExactInt odd(2 * i - 1);
    f = f * (p2 - PolynomialInP{ExactRat(ExactInt(odd * odd))});
  }
  ExactInt den = factorial(static_cast<unsigned long>(2 * j - 1));
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2 * j - 2);
  return f.scaled(ExactRat(ExactInt(1), den));
}

PolynomialInP generic_series_coefficient(Theory theory, std::size_t n) {
  // Inverting the generic denominator at order n+1; entries beyond index n
  // cannot affect coefficient n.
  PolyInPSeries den(n + 1);
  den.coeff(0) = PolynomialInP{ExactRat(1)};
  for (std::size_t k = 2; k <= n + 1; ++k) {
    den.coeff(k - 1) = theory == Theory::Complex ? binomial_in_p_over_p(k)
                                                 : real_denominator_coeff(k);
  }
  return (-den.inverse()).coeff(n);
}

}  // namespace

PolynomialInP binomial_in_p(std::size_t k) {
  PolynomialInP f{ExactRat(1)};
  for (std::size_t i = 0; i < k; ++i)
    f = f * (poly_p() - PolynomialInP{ExactRat(ExactInt(i))});
  return f.scaled(ExactRat(ExactInt(1), factorial(static_cast<unsigned long>(k))));
}

FormulaEntry k_formula(std::size_t n) {
  const unsigned long min_p = n == 0 ? 3 : static_cast<unsigned long>(n) + 2;
  return FormulaEntry{Theory::Complex, n, generic_series_coefficient(Theory::Complex, n), min_p};
}

FormulaEntry m_formula(std::size_t n) {
  const unsigned long min_p = n == 0 ? 3 : 2 * static_cast<unsigned long>(n) + 3;
  return FormulaEntry{Theory::Real, n, generic_series_coefficient(Theory::Real, n), min_p};
}

std::string format_in_p(const PolynomialInP& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const ExactRat c = f.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    const ExactRat a = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out << "-";
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    const bool unit = a == ExactRat(1);
    if (i == 0) {
      out << a.str();
    } else {
      if (!unit) out << a.str() << "*";
      out << "p";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

namespace {

std::string format_primitive_int_poly(const IntPoly& g) {
  std::ostringstream out;
  bool first = true;
  for (int i = g.degree(); i >= 0; --i) {
    const ExactInt c = g.coeff(static_cast<std::size_t>(i));
    if (sgn(c) == 0) continue;
    const ExactInt a = sgn(c) < 0 ? ExactInt(-c) : c;
    if (first) {
      if (sgn(c) < 0) out << "-";
      first = false;
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    if (i == 0) {
      out << to_string(a);
    } else {
      if (a != 1) out << to_string(a);
      out << "p";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace

std::string format_in_p_factored(const PolynomialInP& f) {
  if (f.is_zero()) return "0";
  // f = sign * (num/den) * g with g primitive, positive leading coefficient.
  ExactInt num(0), den(1);
  for (const auto& c : f.coefficients()) {
    if (c.is_zero()) continue;
    ExactInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), c.num().get_mpz_t());
    num = g;
    ExactInt l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
    den = l;
  }
  std::vector<ExactInt> gc(f.coefficients().size(), ExactInt(0));
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
    const ExactRat scaled = f.coeff(i) * ExactRat(den, num);
    gc[i] = scaled.num();  // exact by construction of num/den
  }
  IntPoly g(std::move(gc));
  bool negative = sgn(g.leading()) < 0;
  if (negative) g = -g;

  const std::vector<std::pair<IntPoly, std::string>> known = {
      {IntPoly{ExactInt(-1), ExactInt(0), ExactInt(1)}, "(p^2-1)"},
      {IntPoly{ExactInt(-9), ExactInt(0), ExactInt(1)}, "(p^2-9)"},
      {IntPoly{ExactInt(-1), ExactInt(1)}, "(p-1)"},
      {IntPoly{ExactInt(1), ExactInt(1)}, "(p+1)"},
  };
  std::string factors;
  bool progress = true;
  while (progress && g.degree() > 0) {
    progress = false;
    for (const auto& [factor, name] : known) {
      if (g.degree() < factor.degree()) continue;
      auto [quot, rem] = poly_divrem_monic(g, factor);
      if (rem.is_zero() && !quot.is_zero()) {
        factors += name;
        g = quot;
        progress = true;
        break;
      }
    }
  }

  // g stays primitive after extracting monic factors, so a constant g is 1.
  std::string body;
  if (num != 1) body += to_string(num);
  body += factors;
  if (g.degree() > 0) body += "(" + format_primitive_int_poly(g) + ")";
  if (body.empty()) body = "1";

  std::ostringstream out;
  if (negative) out << "-";
  out << body;
  if (den != 1) out << "/" << to_string(den);
  return out.str();
}

namespace {

PolynomialInP transcribed(std::vector<long> primitive_low_to_high, long denominator) {
  std::vector<ExactRat> c;
  c.reserve(primitive_low_to_high.size());
  for (long v : primitive_low_to_high)
    c.emplace_back(ExactInt(v), ExactInt(denominator));
  return PolynomialInP(std::move(c));
}

}  // namespace

std::vector<TableCheckEntry> paper_table_check() {
  // The nine published closed forms, expanded at transcription time.
  const PolynomialInP p2m1 = transcribed({-1, 0, 1}, 1);
  const PolynomialInP p2m9 = transcribed({-9, 0, 1}, 1);
  const PolynomialInP p2m19 = transcribed({-19, 0, 1}, 1);
  struct Row {
    Theory theory;
    std::size_t n;
    PolynomialInP published;
  };
  const std::vector<Row> rows = {
      {Theory::Complex, 1, transcribed({-1, 1}, 2)},
      {Theory::Complex, 2, -p2m1.scaled(ExactRat(ExactInt(1), ExactInt(12)))},
      {Theory::Complex, 3, p2m1.scaled(ExactRat(ExactInt(1), ExactInt(24)))},
      {Theory::Complex, 4, (p2m1 * p2m19).scaled(ExactRat(ExactInt(1), ExactInt(720)))},
      {Theory::Complex, 5, -(p2m1 * p2m9).scaled(ExactRat(ExactInt(1), ExactInt(480)))},
      {Theory::Complex, 6,
       -(transcribed({-1, 1}, 1) *
         transcribed({15263, -17617, 8375, -1825, 122, 2}, 1))
            .scaled(ExactRat(ExactInt(1), ExactInt(60480)))},
      {Theory::Real, 1, p2m1.scaled(ExactRat(ExactInt(1), ExactInt(24)))},
      {Theory::Real, 2,
       -(p2m1 * transcribed({17, 0, 7}, 1)).scaled(ExactRat(ExactInt(1), ExactInt(5760)))},
      {Theory::Real, 3,
       (p2m1 * transcribed({169, 0, -34, 0, 57}, 1))
           .scaled(ExactRat(ExactInt(1), ExactInt(322560)))},
  };
  std::vector<TableCheckEntry> result;
  result.reserve(rows.size());
  for (const Row& row : rows) {
    const FormulaEntry computed =
        row.theory == Theory::Complex ? k_formula(row.n) : m_formula(row.n);
    result.push_back(TableCheckEntry{row.theory, row.n, computed.formula == row.published,
                                     computed.formula, row.published});
  }
  return result;
}

FormulaScanReport formula_vs_direct_scan(Theory theory, std::size_t n_max, unsigned long p_max) {
  FormulaScanReport report;
  std::vector<FormulaEntry> formulas;
  formulas.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n)
    formulas.push_back(theory == Theory::Complex ? k_formula(n) : m_formula(n));

  for (unsigned long pv = 3; pv <= p_max; pv += 2) {
    if (!is_odd_prime(ExactInt(pv))) continue;
    const OddPrime p(static_cast<long>(pv));
    // Real-theory streams only have (p-1)/2 denominator entries; the series
    // itself is still defined to any order.
    const IntSeries direct = base_series(theory, p, n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
      const FormulaEntry& entry = formulas[n];
      const ExactRat value = entry.formula.eval(ExactRat(ExactInt(pv)));
      if (pv >= entry.min_valid_p) {
        ++report.checks;
        if (!value.is_integer() || value.num() != direct.coeff(n)) {
          report.all_match = false;
          report.mismatches.push_back(
              ScanMismatch{theory, pv, n, value.str(), direct.coeff(n)});
        }
      } else {
        report.below_threshold.push_back(BelowThresholdRecord{
            theory, pv, n, value.str(), value.is_integer(),
            value.is_integer() && value.num() == direct.coeff(n), direct.coeff(n)});
      }
    }
  }
  return report;
}

BernoulliValue bernoulli_from_k(std::size_t n) {
  if (n == 0) throw UsageError("bernoulli_from_k requires n >= 1");
  const FormulaEntry entry = k_formula(n);
  ExactRat lead(0);
  if (entry.formula.degree() == static_cast<int>(n)) lead = entry.formula.coeff(n);
  return BernoulliValue{n, -ExactRat(factorial(static_cast<unsigned long>(n))) * lead};
}

BernoulliValue bernoulli_oracle(std::size_t n) {
  std::vector<ExactRat> b(n + 1, ExactRat(0));
  b[0] = ExactRat(1);
  for (std::size_t m = 1; m <= n; ++m) {
    ExactRat acc(0);
    for (std::size_t k = 0; k < m; ++k)
      acc += ExactRat(binomial(ExactInt(m + 1), static_cast<unsigned long>(k))) * b[k];
    b[m] = -acc / ExactRat(ExactInt(m + 1));
  }
  return BernoulliValue{n, b[n]};
}

}  // namespace kred
