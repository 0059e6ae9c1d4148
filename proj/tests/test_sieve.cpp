#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "wglab/sieve.hpp"

using namespace wglab;

TEST_CASE("build_sieve small tables") {
  auto t = build_sieve(10);
  CHECK(t.primes() == std::vector<int64_t>{2, 3, 5, 7});
  CHECK(t.pi(10) == 4);

  auto t2 = build_sieve(2);
  CHECK(t2.primes() == std::vector<int64_t>{2});
  CHECK(t2.is_prime(2));
  CHECK_FALSE(t2.is_prime(1));

  CHECK_THROWS_AS(build_sieve(1), std::invalid_argument);
  CHECK_THROWS_AS(t.is_prime(11), std::out_of_range);
}

namespace {
bool trial_division_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("pi(100) against trial division") {
  auto t = build_sieve(100);
  int64_t count = 0;
  for (int64_t n = 2; n <= 100; ++n) {
    bool expect = trial_division_prime(n);
    CHECK(t.is_prime(n) == expect);
    if (expect) ++count;
  }
  CHECK(count == 25);
  CHECK(t.pi(100) == 25);
}

TEST_CASE("segment size does not change the table") {
  auto a = build_sieve(50000);
  auto b = build_sieve(50000, 512);
  REQUIRE(a.primes() == b.primes());
  CHECK(a.pi(49999) == b.pi(49999));
}

TEST_CASE("prefix counts match the primes list at random points") {
  auto t = build_sieve(200000);
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<int64_t> dist(0, 200000);
  for (int rep = 0; rep < 1000; ++rep) {
    int64_t x = dist(rng);
    auto it = std::upper_bound(t.primes().begin(), t.primes().end(), x);
    CHECK(t.pi(x) == it - t.primes().begin());
  }
}

TEST_CASE("von Mangoldt values") {
  CHECK(von_mangoldt(8) == Catch::Approx(std::log(2.0)));
  CHECK(von_mangoldt(6) == 0.0);
  CHECK(von_mangoldt(97) == Catch::Approx(std::log(97.0)));
  CHECK(von_mangoldt(1) == 0.0);
  CHECK_THROWS_AS(von_mangoldt(0), std::invalid_argument);
}

TEST_CASE("Chebyshev identity sum_{d|n} Lambda(d) = log n") {
  auto sieve = build_sieve(10000);
  auto lam = von_mangoldt_table(sieve, 10000);
  for (int64_t n = 2; n <= 10000; ++n) {
    double s = 0.0;
    for (int64_t d = 1; d * d <= n; ++d) {
      if (n % d) continue;
      s += lam[static_cast<size_t>(d)];
      if (d != n / d) s += lam[static_cast<size_t>(n / d)];
    }
    REQUIRE(std::fabs(s - std::log(static_cast<double>(n))) < 1e-9);
  }
}

TEST_CASE("von Mangoldt table agrees with the single-value function") {
  auto sieve = build_sieve(2048);
  auto lam = von_mangoldt_table(sieve, 2048);
  for (int64_t n = 1; n <= 2048; ++n) {
    REQUIRE(lam[static_cast<size_t>(n)] == Catch::Approx(von_mangoldt(n)).margin(1e-12));
  }
}
