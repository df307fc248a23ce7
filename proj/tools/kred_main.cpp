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

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "kred/formulas.hpp"
#include "kred/periodicity.hpp"
#include "kred/reduction.hpp"
#include "kred/reference.hpp"
#include "kred/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace kred;

namespace {

// Exit codes: 0 success, 1 internal invariant violation, 2 usage/validation,
// 3 state corruption.
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitState = 3;

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Integers as decimal strings: consumers with 64-bit number types must not
// corrupt big coefficients.
json envelope(const std::string& command, const std::vector<std::string>& argv,
              const std::optional<std::string>& theory, const std::optional<ExactInt>& p,
              const std::optional<std::size_t>& offset, json payload, long long ms) {
  json env;
  env["tool"] = "kred";
  env["version"] = kVersion;
  env["command"] = command;
  env["argv"] = argv;
  env["theory"] = theory ? json(*theory) : json(nullptr);
  env["p"] = p ? json(to_string(*p)) : json(nullptr);
  env["offset"] = offset ? json(*offset) : json(nullptr);
  env["payload"] = std::move(payload);
  env["timing_ms"] = ms;
  return env;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void emit_coefficients_text(const std::vector<ExactInt>& coeffs, std::size_t offset) {
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    std::cout << "X^" << offset + i << "\t" << to_string(coeffs[i]) << "\n";
}

void emit_coefficients_csv(const std::vector<ExactInt>& coeffs, std::size_t offset) {
  std::cout << "index,exponent,coefficient\n";
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    std::cout << i << "," << offset + i << "," << to_string(coeffs[i]) << "\n";
}

json coefficients_payload(const std::vector<ExactInt>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(to_string(c));
  return json{{"coefficients", arr}};
}

Theory theory_from_flag(const std::string& s) {
  if (s == "complex") return Theory::Complex;
  if (s == "real") return Theory::Real;
  throw UsageError("theory must be 'complex' or 'real'");
}

SubstitutionMode mode_from_flag(const std::string& s) {
  if (s == "self") return SubstitutionMode::SelfSnapshot;
  if (s == "base") return SubstitutionMode::BaseSeries;
  throw UsageError("mode must be 'self' or 'base'");
}

json formula_payload(const FormulaEntry& entry) {
  json coeffs = json::array();
  for (const auto& c : entry.formula.coefficients())
    coeffs.push_back(json{{"num", to_string(c.num())}, {"den", to_string(c.den())}});
  return json{{"n", entry.n},
              {"display", format_in_p_factored(entry.formula)},
              {"expanded", format_in_p(entry.formula)},
              {"coefficients", coeffs},
              {"min_valid_p", entry.min_valid_p}};
}

std::optional<fs::path> state_dir_from_env() {
  if (const char* dir = std::getenv("KRED_STATE_DIR"); dir && *dir) return fs::path(dir);
  return std::nullopt;
}

struct CommonSeriesArgs {
  std::string p_text;
  std::size_t n = 0;
  std::string format = "text";
};

void add_series_options(CLI::App* cmd, CommonSeriesArgs& args) {
  cmd->add_option("-p", args.p_text, "odd prime")->required();
  cmd->add_option("-n", args.n, "number of terms")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--format", args.format, "text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

OddPrime parse_prime(const std::string& text) {
  ExactInt v;
  try {
    v = ExactInt(text);
  } catch (const std::exception&) {
    throw UsageError("p must be an integer");
  }
  return OddPrime(v);  // throws UsageError("p must be an odd prime") if not
}

int run(int argc, char** argv) {
  const std::vector<std::string> argv_echo(argv, argv + argc);
  CLI::App app{"Exact complete reductions, integer sequences and periodicity certificates"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonSeriesArgs kseries_args;
  CLI::App* kseries_cmd = app.add_subcommand("kseries", "coefficients of the complex base series");
  add_series_options(kseries_cmd, kseries_args);

  CommonSeriesArgs mseries_args;
  CLI::App* mseries_cmd = app.add_subcommand("mseries", "coefficients of the real base series");
  add_series_options(mseries_cmd, mseries_args);

  CommonSeriesArgs reduce_args;
  std::string reduce_theory = "complex";
  std::string reduce_mode = "self";
  std::string reduce_state;
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "balanced complete reduction");
  add_series_options(reduce_cmd, reduce_args);
  reduce_cmd->add_option("--theory", reduce_theory, "complex|real")
      ->check(CLI::IsMember({"complex", "real"}));
  reduce_cmd->add_option("--mode", reduce_mode, "self|base substitution")
      ->check(CLI::IsMember({"self", "base"}));
  reduce_cmd->add_option("--state", reduce_state, "resumable state file");

  std::string formula_theory = "complex";
  std::size_t formula_n = 0;
  std::string formula_format = "text";
  CLI::App* formula_cmd = app.add_subcommand("formula", "closed form of coefficient n in Q[p]");
  formula_cmd->add_option("--theory", formula_theory, "complex|real")
      ->check(CLI::IsMember({"complex", "real"}));
  formula_cmd->add_option("-n", formula_n, "coefficient index")->required();
  formula_cmd->add_option("--format", formula_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  std::size_t bernoulli_n = 0;
  bool bernoulli_check = false;
  std::string bernoulli_format = "text";
  CLI::App* bernoulli_cmd = app.add_subcommand("bernoulli", "Bernoulli number from the K limit");
  bernoulli_cmd->add_option("-n", bernoulli_n, "index")->required()->check(CLI::PositiveNumber);
  bernoulli_cmd->add_flag("--check", bernoulli_check, "also compare with the recurrence");
  bernoulli_cmd->add_option("--format", bernoulli_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string period_theory = "complex";
  std::vector<std::string> period_primes;
  std::size_t period_terms = 0;
  std::string period_mode = "self";
  std::string period_state;
  std::string period_state_dir;
  std::size_t period_max = 0;
  std::string period_format = "text";
  CLI::App* period_cmd = app.add_subcommand("period", "detect and certify eventual periodicity");
  period_cmd->add_option("--theory", period_theory, "complex|real")
      ->check(CLI::IsMember({"complex", "real"}));
  period_cmd->add_option("-p", period_primes, "odd prime (repeatable)")->required();
  period_cmd->add_option("--max-terms", period_terms, "window length")
      ->required()
      ->check(CLI::PositiveNumber);
  period_cmd->add_option("--mode", period_mode, "self|base")
      ->check(CLI::IsMember({"self", "base"}));
  period_cmd->add_option("--state", period_state, "state file (single prime only)");
  period_cmd->add_option("--state-dir", period_state_dir,
                         "state directory (defaults to KRED_STATE_DIR)");
  period_cmd->add_option("--max-period", period_max, "largest candidate period to try");
  period_cmd->add_option("--format", period_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string realification_p;
  std::string realification_format = "text";
  CLI::App* realification_cmd =
      app.add_subcommand("realification", "cyclotomic closed form of the real relation");
  realification_cmd->add_option("-p", realification_p, "odd prime")->required();
  realification_cmd->add_option("--format", realification_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* verify_cmd =
      app.add_subcommand("verify-paper", "recompute every published reference value");
  (void)verify_cmd;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Clock clock;

  if (kseries_cmd->parsed() || mseries_cmd->parsed()) {
    const bool complex = kseries_cmd->parsed();
    const CommonSeriesArgs& args = complex ? kseries_args : mseries_args;
    const OddPrime p = parse_prime(args.p_text);
    const IntSeries s = complex ? k_series(p, args.n) : m_series(p, args.n);
    const std::size_t offset = 0;  // series coefficients are indexed from X^0
    if (args.format == "json") {
      emit_json(envelope(complex ? "kseries" : "mseries", argv_echo,
                         theory_name(complex ? Theory::Complex : Theory::Real), p.value(),
                         offset, coefficients_payload(s.coefficients()), clock.ms()));
    } else if (args.format == "csv") {
      emit_coefficients_csv(s.coefficients(), offset);
    } else {
      emit_coefficients_text(s.coefficients(), offset);
    }
    return 0;
  }

  if (reduce_cmd->parsed()) {
    const OddPrime p = parse_prime(reduce_args.p_text);
    const Theory theory = theory_from_flag(reduce_theory);
    const SubstitutionMode mode = mode_from_flag(reduce_mode);
    std::optional<ReductionEngine> engine;
    if (!reduce_state.empty() && fs::exists(reduce_state)) {
      const ScanState state = load_state(reduce_state);
      if (state.theory != theory || state.p != p.value() || state.mode != mode)
        throw StateCorruption("state file belongs to a different computation");
      if (state.target == reduce_args.n)
        engine.emplace(theory, p, mode, state.coefficients, state.done);
    }
    if (!engine) engine.emplace(theory, p, reduce_args.n, mode);
    engine->run();
    if (!reduce_state.empty())
      save_state(reduce_state, ScanState{theory, p.value(), mode, engine->order(),
                                         engine->done(), engine->working()});
    const std::size_t offset = base_exponent(theory, p);
    if (reduce_args.format == "json") {
      json payload = coefficients_payload(engine->working());
      payload["balanced_len"] = engine->done();
      payload["mode"] = mode_name(mode);
      emit_json(envelope("reduce", argv_echo, theory_name(theory), p.value(), offset,
                         std::move(payload), clock.ms()));
    } else if (reduce_args.format == "csv") {
      emit_coefficients_csv(engine->working(), offset);
    } else {
      emit_coefficients_text(engine->working(), offset);
    }
    return 0;
  }

  if (formula_cmd->parsed()) {
    const Theory theory = theory_from_flag(formula_theory);
    const FormulaEntry entry =
        theory == Theory::Complex ? k_formula(formula_n) : m_formula(formula_n);
    if (formula_format == "json") {
      emit_json(envelope("formula", argv_echo, theory_name(theory), std::nullopt, std::nullopt,
                         formula_payload(entry), clock.ms()));
    } else {
      std::cout << (theory == Theory::Complex ? "K_" : "M_") << entry.n << " = "
                << format_in_p_factored(entry.formula) << "   (valid for p >= "
                << entry.min_valid_p << ")\n";
    }
    return 0;
  }

  if (bernoulli_cmd->parsed()) {
    const BernoulliValue value = bernoulli_from_k(bernoulli_n);
    bool oracle_match = true;
    if (bernoulli_check) oracle_match = value.value == bernoulli_oracle(bernoulli_n).value;
    if (bernoulli_format == "json") {
      json payload{{"n", value.n},
                   {"value", value.value.str()},
                   {"oracle_checked", bernoulli_check},
                   {"oracle_match", bernoulli_check ? json(oracle_match) : json(nullptr)}};
      emit_json(envelope("bernoulli", argv_echo, std::nullopt, std::nullopt, std::nullopt,
                         std::move(payload), clock.ms()));
    } else {
      std::cout << "B_" << value.n << " = " << value.value.str();
      if (bernoulli_check)
        std::cout << "   recurrence oracle: " << (oracle_match ? "MATCH" : "MISMATCH");
      std::cout << "\n";
    }
    return oracle_match ? 0 : kExitInternal;
  }

  if (period_cmd->parsed()) {
    const Theory theory = theory_from_flag(period_theory);
    ScanOptions opts;
    opts.mode = mode_from_flag(period_mode);
    opts.max_period = period_max;
    if (!period_state.empty()) opts.state_file = fs::path(period_state);
    if (!period_state_dir.empty())
      opts.state_dir = fs::path(period_state_dir);
    else if (period_state.empty())
      opts.state_dir = state_dir_from_env();
    std::vector<ExactInt> primes;
    for (const std::string& text : period_primes)
      primes.push_back(parse_prime(text).value());
    const auto reports = scan(theory, primes, period_terms, opts);
    if (period_format == "json") {
      json arr = json::array();
      for (const auto& r : reports) {
        json item{{"p", to_string(r.p)},
                  {"window", r.window},
                  {"outcome", r.outcome.found ? "FOUND" : "NOT_FOUND"},
                  {"preperiod", r.outcome.found ? json(r.outcome.preperiod) : json(nullptr)},
                  {"period", r.outcome.found ? json(r.outcome.period) : json(nullptr)},
                  {"confirmed_length",
                   r.outcome.found ? json(r.outcome.confirmed_length) : json(nullptr)},
                  {"certificate", certificate_status_name(r.certificate)}};
        arr.push_back(std::move(item));
      }
      emit_json(envelope("period", argv_echo, theory_name(theory), std::nullopt, std::nullopt,
                         json{{"reports", arr}}, clock.ms()));
    } else {
      for (const auto& r : reports) {
        std::cout << "p=" << to_string(r.p) << " window=" << r.window << " ";
        if (r.outcome.found) {
          std::cout << "FOUND preperiod=" << r.outcome.preperiod
                    << " period=" << r.outcome.period
                    << " confirmed=" << r.outcome.confirmed_length;
        } else {
          std::cout << "NOT_FOUND";
        }
        std::cout << " certificate=" << certificate_status_name(r.certificate) << "\n";
      }
    }
    return 0;
  }

  if (realification_cmd->parsed()) {
    const OddPrime p = parse_prime(realification_p);
    const RealificationStatus status = realification_check(p);
    const std::string text = status == RealificationStatus::ExactClosedForm
                                 ? "EXACT-CLOSED-FORM"
                                 : (status == RealificationStatus::DivisibleOnly
                                        ? "DIVISIBLE-ONLY"
                                        : "FAILED");
    if (realification_format == "json") {
      emit_json(envelope("realification", argv_echo, "real", p.value(), std::nullopt,
                         json{{"status", text}}, clock.ms()));
    } else {
      std::cout << "w*f_p(w) at w = x + 1/x - 2 vs x^{-(p+1)/2}(x-1)(x^p-1): " << text << "\n";
    }
    return status == RealificationStatus::Failed ? kExitInternal : 0;
  }

  if (verify_cmd->parsed()) {
    const auto results = reference::run_published_value_checks();
    std::size_t pass = 0, fail = 0, typo = 0;
    for (const auto& r : results) {
      const char* status = r.status == reference::CheckStatus::Pass
                               ? "PASS"
                               : (r.status == reference::CheckStatus::Fail
                                      ? "FAIL"
                                      : "SUSPECTED-PAPER-TYPO");
      if (r.status == reference::CheckStatus::Pass) ++pass;
      if (r.status == reference::CheckStatus::Fail) ++fail;
      if (r.status == reference::CheckStatus::SuspectedPaperTypo) ++typo;
      std::cout << "[" << status << "] " << r.name << " -- " << r.detail << "\n";
    }
    std::cout << pass << " passed, " << fail << " failed, " << typo
              << " suspected typos in the published values\n";
    return reference::all_passed(results) ? 0 : kExitInternal;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StateCorruption& e) {
    std::cerr << "state error: " << e.what() << "\n";
    return kExitState;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
