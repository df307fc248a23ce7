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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kred/exact.hpp"

using namespace kred;

TEST_CASE("balanced residue, pinned examples") {
  const OddPrime p23(23);
  auto [r1, q1] = balanced_residue(ExactInt(-44), p23);
  CHECK(r1 == 2);
  CHECK(q1 == -2);

  auto [r2, q2] = balanced_residue(ExactInt(374), p23);
  CHECK(r2 == 6);
  CHECK(q2 == 16);

  for (long pv : {3L, 5L, 7L, 23L}) {
    auto [r, q] = balanced_residue(ExactInt(0), OddPrime(pv));
    CHECK(r == 0);
    CHECK(q == 0);
  }
}

TEST_CASE("balanced residue recomposes and stays in the band") {
  std::mt19937_64 rng(20260809);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (long pv : {3L, 5L, 7L, 11L, 23L, 101L}) {
    const OddPrime p(pv);
    for (int i = 0; i < 500; ++i) {
      const ExactInt c(dist(rng));
      auto [r, q] = balanced_residue(c, p);
      CHECK(c == r + p.value() * q);
      CHECK(abs(r) <= p.half());
    }
  }
}

TEST_CASE("balanced residue is invariant under shifts by p") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-100000, 100000);
  const OddPrime p(13);
  for (int i = 0; i < 200; ++i) {
    const ExactInt c(dist(rng));
    const ExactInt k(dist(rng) % 50);
    CHECK(balanced_residue(c, p).first == balanced_residue(c + p.value() * k, p).first);
  }
}

TEST_CASE("odd prime detection") {
  CHECK(is_odd_prime(ExactInt(23)));
  CHECK_FALSE(is_odd_prime(ExactInt(2)));
  CHECK_FALSE(is_odd_prime(ExactInt(9)));
  CHECK_FALSE(is_odd_prime(ExactInt(1)));
  CHECK_FALSE(is_odd_prime(ExactInt(-7)));
  CHECK(is_odd_prime(ExactInt(3)));
  CHECK(is_odd_prime(ExactInt("1000000007")));
  CHECK_FALSE(is_odd_prime(ExactInt("1000000007") * ExactInt("1000000009")));
  // Battery bases themselves.
  CHECK(is_odd_prime(ExactInt(37)));
  CHECK_FALSE(is_odd_prime(ExactInt(37 * 41)));
}

TEST_CASE("OddPrime rejects invalid input") {
  CHECK_THROWS_AS(OddPrime(9), UsageError);
  CHECK_THROWS_AS(OddPrime(2), UsageError);
  CHECK_NOTHROW(OddPrime(31));
}

TEST_CASE("binomials") {
  CHECK(binomial(ExactInt(7), 3) == 35);
  CHECK(binomial(ExactInt(23), 0) == 1);
  CHECK(binomial(ExactInt(23), 2) == 253);
  CHECK(binomial(ExactInt(4), 7) == 0);
  CHECK(binomial(ExactInt(-3), 2) == 6);  // generalized: (-3)(-4)/2

  // Pascal identity on a random strip.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> dist(1, 60);
  for (int i = 0; i < 100; ++i) {
    const long n = dist(rng);
    const unsigned long k = static_cast<unsigned long>(dist(rng)) % (n + 1);
    CHECK(binomial(ExactInt(n + 1), k + 1) ==
          binomial(ExactInt(n), k) + binomial(ExactInt(n), k + 1));
  }
}

TEST_CASE("prime divides its inner binomials") {
  for (long pv : {3L, 5L, 7L, 13L, 31L, 101L}) {
    const OddPrime p(pv);
    for (unsigned long k = 1; k < static_cast<unsigned long>(pv); ++k) {
      CHECK(mpz_divisible_p(binomial(p.value(), k).get_mpz_t(), p.value().get_mpz_t()));
    }
  }
}

TEST_CASE("rationals normalize on construction") {
  const ExactRat a(ExactInt(6), ExactInt(-8));
  CHECK(a.num() == -3);
  CHECK(a.den() == 4);
  CHECK(a == ExactRat(ExactInt(-3), ExactInt(4)));
  CHECK(a.str() == "-3/4");

  const ExactRat b = ExactRat(1) / ExactRat(ExactInt(3));
  CHECK((a + b).str() == "-5/12");
  CHECK((a * b) == ExactRat(ExactInt(-1), ExactInt(4)));
  CHECK_THROWS_AS(ExactRat(ExactInt(1), ExactInt(0)), UsageError);
  CHECK_THROWS_AS(ExactRat(1) / ExactRat(0), UsageError);
  CHECK(ExactRat(ExactInt(4), ExactInt(2)).is_integer());
}
