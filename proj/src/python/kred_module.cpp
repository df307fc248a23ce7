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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kred/formulas.hpp"
#include "kred/periodicity.hpp"
#include "kred/reduction.hpp"
#include "kred/version.hpp"

namespace py = pybind11;
using namespace kred;

namespace {

// Big integers cross the boundary as decimal strings and come back as
// native python ints.
py::int_ to_py(const ExactInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(v).c_str(), nullptr, 10));
}

py::object to_py(const ExactRat& v) {
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(v.num()), to_py(v.den()));
}

py::list to_py(const std::vector<ExactInt>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_py(v));
  return out;
}

ExactInt from_py(const py::int_& v) {
  return ExactInt(static_cast<std::string>(py::str(static_cast<py::object>(v))));
}

std::vector<ExactInt> ints_from_py(const py::iterable& seq) {
  std::vector<ExactInt> out;
  for (py::handle h : seq) out.push_back(from_py(py::cast<py::int_>(h)));
  return out;
}

Theory theory_from_py(const std::string& name) {
  if (name == "complex") return Theory::Complex;
  if (name == "real") return Theory::Real;
  throw UsageError("theory must be 'complex' or 'real'");
}

SubstitutionMode mode_from_py(const std::string& name) {
  if (name == "self") return SubstitutionMode::SelfSnapshot;
  if (name == "base") return SubstitutionMode::BaseSeries;
  throw UsageError("mode must be 'self' or 'base'");
}

py::dict formula_to_py(const FormulaEntry& entry) {
  py::dict out;
  out["theory"] = theory_name(entry.theory);
  out["n"] = entry.n;
  out["min_valid_p"] = entry.min_valid_p;
  out["display"] = format_in_p_factored(entry.formula);
  py::list coeffs;
  for (const auto& c : entry.formula.coefficients()) coeffs.append(to_py(c));
  out["coefficients"] = coeffs;
  return out;
}

}  // namespace

PYBIND11_MODULE(_kred, m) {
  m.doc() = "Exact complete reductions in the K- and KO-rings of odd-prime lens spaces";
  m.attr("__version__") = kVersion;

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<StateCorruption>(m, "StateCorruption", PyExc_RuntimeError);
  py::register_exception<IntegralityViolation>(m, "IntegralityViolation", PyExc_ArithmeticError);

  m.def("is_odd_prime",
        [](const py::int_& n) { return is_odd_prime(from_py(n)); },
        py::arg("n"));

  m.def("balanced_residue",
        [](const py::int_& c, long p) {
          auto [r, q] = balanced_residue(from_py(c), OddPrime(p));
          return py::make_tuple(to_py(r), to_py(q));
        },
        py::arg("c"), py::arg("p"), "The unique (r, q) with c = r + p*q, |r| <= (p-1)/2");

  m.def("binomial",
        [](const py::int_& n, unsigned long k) { return to_py(binomial(from_py(n), k)); },
        py::arg("n"), py::arg("k"));

  m.def("k_series",
        [](long p, std::size_t n) { return to_py(k_series(OddPrime(p), n).coefficients()); },
        py::arg("p"), py::arg("n"));

  m.def("m_series",
        [](long p, std::size_t n) { return to_py(m_series(OddPrime(p), n).coefficients()); },
        py::arg("p"), py::arg("n"));

  m.def("complete_reduce",
        [](const std::string& theory, long p, std::size_t n, const std::string& mode) {
          const ReductionSeries r =
              complete_reduce(theory_from_py(theory), OddPrime(p), n, mode_from_py(mode));
          py::dict out;
          out["theory"] = theory;
          out["p"] = p;
          out["offset"] = r.base_exponent;
          out["coefficients"] = to_py(r.coefficients);
          return out;
        },
        py::arg("theory"), py::arg("p"), py::arg("n"), py::arg("mode") = "self",
        "Balanced coefficients of p*X as a series in X^(offset+i)");

  m.def("verify_finite_identity",
        [](const std::string& theory, long p,
           const std::vector<std::pair<std::size_t, py::int_>>& terms) {
          std::vector<Term> ts;
          ts.reserve(terms.size());
          for (const auto& [e, c] : terms) ts.push_back(Term{e, from_py(c)});
          return verify_finite_identity(theory_from_py(theory), OddPrime(p), ts);
        },
        py::arg("theory"), py::arg("p"), py::arg("terms"),
        "terms: list of (exponent, coefficient)");

  m.def("certify_period",
        [](const std::string& theory, long p, const py::iterable& preperiod,
           const py::iterable& cycle) {
          return certify_period(PeriodCertificate{theory_from_py(theory), ExactInt(p),
                                                  ints_from_py(preperiod), ints_from_py(cycle)});
        },
        py::arg("theory"), py::arg("p"), py::arg("preperiod"), py::arg("cycle"));

  m.def("detect_eventual_period",
        [](const py::iterable& seq, std::size_t max_period) {
          const auto stream = ints_from_py(seq);
          const auto outcome = detect_eventual_period(stream, max_period);
          py::dict out;
          out["found"] = outcome.found;
          if (outcome.found) {
            out["preperiod"] = outcome.preperiod;
            out["period"] = outcome.period;
            out["confirmed_length"] = outcome.confirmed_length;
          }
          return out;
        },
        py::arg("seq"), py::arg("max_period"));

  m.def("prefix_congruence_check",
        [](const std::string& theory, long p) {
          return prefix_congruence_check(theory_from_py(theory), OddPrime(p));
        },
        py::arg("theory"), py::arg("p"));

  m.def("realification_check",
        [](long p) {
          switch (realification_check(OddPrime(p))) {
            case RealificationStatus::ExactClosedForm:
              return "exact-closed-form";
            case RealificationStatus::DivisibleOnly:
              return "divisible-only";
            default:
              return "failed";
          }
        },
        py::arg("p"));

  m.def("k_formula", [](std::size_t n) { return formula_to_py(k_formula(n)); }, py::arg("n"));
  m.def("m_formula", [](std::size_t n) { return formula_to_py(m_formula(n)); }, py::arg("n"));

  m.def("bernoulli",
        [](std::size_t n) { return to_py(bernoulli_from_k(n).value); }, py::arg("n"),
        "B_n extracted from the closed form of K_n (B_1 = -1/2 convention)");
  m.def("bernoulli_oracle",
        [](std::size_t n) { return to_py(bernoulli_oracle(n).value); }, py::arg("n"));
}
