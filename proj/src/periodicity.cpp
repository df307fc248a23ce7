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

#include "kred/periodicity.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <future>
#include <sstream>

namespace kred {

DetectionOutcome detect_eventual_period(std::span<const ExactInt> seq, std::size_t max_period) {
  const std::size_t w = seq.size();
  for (std::size_t t = 1; t <= max_period && t < w; ++t) {
    // Smallest s with a[n+t] == a[n] for all n in [s, w-t).
    std::size_t s = w - t;
    while (s > 0 && seq[s - 1 + t] == seq[s - 1]) --s;
    const std::size_t confirmed = w - t - s;
    const std::size_t margin = std::max(3 * t, t + 64);
    if (confirmed >= margin) return DetectionOutcome{true, s, t, confirmed};
  }
  return DetectionOutcome{};
}

std::string certificate_status_name(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Proved:
      return "PROVED";
    case CertificateStatus::Unproved:
      return "UNPROVED";
    default:
      return "NOT_ATTEMPTED";
  }
}

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

Theory parse_theory(const std::string& s) {
  if (s == "complex") return Theory::Complex;
  if (s == "real") return Theory::Real;
  throw StateCorruption("unknown theory in state file: " + s);
}

SubstitutionMode parse_mode(const std::string& s) {
  if (s == "self") return SubstitutionMode::SelfSnapshot;
  if (s == "base") return SubstitutionMode::BaseSeries;
  throw StateCorruption("unknown mode in state file: " + s);
}

std::string expect_field(std::istringstream& in, const std::string& key) {
  std::string token;
  if (!(in >> token) || token.rfind(key + "=", 0) != 0)
    throw StateCorruption("malformed state header, expected " + key + "=");
  return token.substr(key.size() + 1);
}

}  // namespace

std::string serialize_state(const ScanState& state) {
  std::ostringstream out;
  out << "KREDSTATE 1\n";
  out << "theory=" << theory_name(state.theory) << " p=" << to_string(state.p)
      << " mode=" << mode_name(state.mode) << " target=" << state.target
      << " done=" << state.done << "\n";
  for (const ExactInt& c : state.coefficients) out << to_string(c) << "\n";
  const std::string body = out.str();
  return body + "sha256=" + sha256_hex(body) + "\n";
}

ScanState parse_state(const std::string& text) {
  const std::string marker = "sha256=";
  const std::size_t tail = text.rfind(marker);
  if (tail == std::string::npos || text.back() != '\n')
    throw StateCorruption("state file has no digest line");
  const std::string digest = text.substr(tail + marker.size(), text.size() - tail - marker.size() - 1);
  if (digest != sha256_hex(text.substr(0, tail)))
    throw StateCorruption("state file digest mismatch");

  std::istringstream in(text.substr(0, tail));
  std::string line;
  if (!std::getline(in, line) || line != "KREDSTATE 1")
    throw StateCorruption("unsupported state file version");
  if (!std::getline(in, line)) throw StateCorruption("missing state header");
  std::istringstream header(line);
  ScanState state;
  try {
    state.theory = parse_theory(expect_field(header, "theory"));
    state.p = ExactInt(expect_field(header, "p"));
    state.mode = parse_mode(expect_field(header, "mode"));
    state.target = std::stoull(expect_field(header, "target"));
    state.done = std::stoull(expect_field(header, "done"));
    if (state.done > state.target) throw StateCorruption("done exceeds target");
    state.coefficients.reserve(state.target);
    while (std::getline(in, line)) {
      if (line.empty()) throw StateCorruption("blank coefficient line");
      state.coefficients.emplace_back(line);
    }
  } catch (const StateCorruption&) {
    throw;
  } catch (const std::exception& e) {
    throw StateCorruption(std::string("malformed state content: ") + e.what());
  }
  if (state.coefficients.size() != state.target)
    throw StateCorruption("coefficient count does not match target");
  return state;
}

void save_state(const std::filesystem::path& path, const ScanState& state) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write state file " + tmp.string());
    out << serialize_state(state);
  }
  std::filesystem::rename(tmp, path);
}

ScanState load_state(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StateCorruption("cannot read state file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_state(buf.str());
  } catch (const StateCorruption& e) {
    throw StateCorruption(path.string() + ": " + e.what());
  }
}

std::filesystem::path default_state_path(const std::filesystem::path& dir, Theory theory,
                                         const ExactInt& p, SubstitutionMode mode) {
  return dir / ("kred_" + theory_name(theory) + "_p" + to_string(p) + "_" + mode_name(mode) +
                ".state");
}

namespace {

PeriodReport scan_one(Theory theory, const ExactInt& pv, std::size_t order,
                      const ScanOptions& options) {
  const OddPrime p(pv);
  std::optional<std::filesystem::path> state_path = options.state_file;
  if (!state_path && options.state_dir)
    state_path = default_state_path(*options.state_dir, theory, pv, options.mode);

  std::optional<ReductionEngine> engine;
  if (state_path && std::filesystem::exists(*state_path)) {
    const ScanState state = load_state(*state_path);
    if (state.theory != theory || state.p != pv || state.mode != options.mode)
      throw StateCorruption("state file " + state_path->string() +
                            " belongs to a different computation");
    // Resume only toward the same target; otherwise recompute from scratch.
    if (state.target == order)
      engine.emplace(theory, p, options.mode, state.coefficients, state.done);
  }
  if (!engine) engine.emplace(theory, p, order, options.mode);
  engine->run();
  if (state_path) {
    save_state(*state_path, ScanState{theory, pv, options.mode, engine->order(),
                                      engine->done(), engine->working()});
  }

  const std::vector<ExactInt>& stream = engine->working();
  const std::size_t max_period = options.max_period > 0 ? options.max_period : stream.size();
  PeriodReport report{theory, pv, stream.size(), detect_eventual_period(stream, max_period),
                      CertificateStatus::NotAttempted};
  if (report.outcome.found) {
    const std::size_t s = report.outcome.preperiod;
    const std::size_t t = report.outcome.period;
    PeriodCertificate cert{theory, pv,
                           std::vector<ExactInt>(stream.begin(), stream.begin() + s),
                           std::vector<ExactInt>(stream.begin() + s, stream.begin() + s + t)};
    report.certificate =
        certify_period(cert) ? CertificateStatus::Proved : CertificateStatus::Unproved;
  }
  return report;
}

}  // namespace

std::vector<PeriodReport> scan(Theory theory, const std::vector<ExactInt>& primes,
                               std::size_t order, const ScanOptions& options) {
  if (options.state_file && primes.size() > 1)
    throw UsageError("an explicit state file only works with a single prime");
  std::vector<PeriodReport> reports;
  reports.reserve(primes.size());
  if (!options.parallel || primes.size() <= 1) {
    for (const ExactInt& pv : primes) reports.push_back(scan_one(theory, pv, order, options));
    return reports;
  }
  std::vector<std::future<PeriodReport>> futures;
  futures.reserve(primes.size());
  for (const ExactInt& pv : primes) {
    futures.push_back(std::async(std::launch::async, [&, pv] {
      return scan_one(theory, pv, order, options);
    }));
  }
  for (auto& f : futures) reports.push_back(f.get());
  return reports;
}

}  // namespace kred
