#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "wglab/arith.hpp"
#include "wglab/hecke.hpp"
#include "wglab/sieve.hpp"

using namespace wglab;

namespace {

// Independent oracle: truncated product prod_{n<=L} (1-q^n)^24 by repeated
// sparse multiplication, no eta identities involved.
std::vector<int128> eta24_direct(int64_t L) {
  std::vector<int128> poly(static_cast<size_t>(L), 0);
  poly[0] = 1;
  for (int64_t n = 1; n < L; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int64_t i = L - 1; i >= n; --i) {
        poly[static_cast<size_t>(i)] -= poly[static_cast<size_t>(i - n)];
      }
    }
  }
  return poly;
}

const SieveTable& sieve40k() {
  static SieveTable s = build_sieve(40960);
  return s;
}

const HeckeTable& hecke40k() {
  static HeckeTable t = build_hecke(sieve40k(), 40960);
  return t;
}

}  // namespace

TEST_CASE("tau against the direct eta-product oracle") {
  const int64_t L = 1200;
  auto oracle = eta24_direct(L);
  const auto& t = hecke40k();
  for (int64_t n = 1; n <= L; ++n) {
    REQUIRE(t.tau(n) == oracle[static_cast<size_t>(n - 1)]);
  }
  CHECK(t.tau(1) == 1);
  CHECK(t.tau(2) == -24);
  CHECK(t.tau(3) == 252);
  CHECK(t.tau(6) == -6048);
  CHECK(t.tau(6) == t.tau(2) * t.tau(3));
}

TEST_CASE("Hecke recurrence tau(p^2) = tau(p)^2 - p^11") {
  const auto& t = hecke40k();
  for (int64_t p : t.primes()) {
    if (p > 200) break;
    int128 p11 = 1;
    for (int i = 0; i < 11; ++i) p11 *= p;
    REQUIRE(t.tau(p * p) == t.tau(p) * t.tau(p) - p11);
  }
}

TEST_CASE("tau multiplicativity on coprime pairs") {
  const auto& t = hecke40k();
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int64_t> dist(2, 200);
  int done = 0;
  while (done < 500) {
    int64_t m = dist(rng), n = dist(rng);
    if (std::gcd(m, n) != 1 || m * n > t.limit()) continue;
    REQUIRE(t.tau(m * n) == t.tau(m) * t.tau(n));
    ++done;
  }
}

TEST_CASE("Deligne and Ramanujan-Petersson bounds") {
  const auto& t = hecke40k();
  for (int64_t p : t.primes()) {
    REQUIRE(std::fabs(t.lambda(p)) < 2.0);  // equality would mean theta in {0, pi}
    double th = t.theta(p);
    REQUIRE(th >= 0.0);
    REQUIRE(th <= std::acos(-1.0));
    REQUIRE(t.lambda(p) == Catch::Approx(2.0 * std::cos(th)).margin(1e-12));
  }
  for (int64_t n = 1; n <= 10000; ++n) {
    REQUIRE(std::fabs(t.lambda(n)) <= static_cast<double>(divisor_count(n)) + 1e-9);
  }
}

TEST_CASE("sym_coeff basics") {
  const auto& t = hecke40k();
  for (int64_t p : {int64_t{2}, int64_t{3}, int64_t{11}, int64_t{101}}) {
    CHECK(sym_coeff(t, 0, p) == 1.0);
    CHECK(sym_coeff(t, 1, p) == Catch::Approx(t.lambda(p)).margin(1e-12));
  }
  // U_2(cos theta_p) = lambda(p)^2 - 1 = lambda(p^2) at level 1.
  double l2 = t.lambda(2);
  CHECK(sym_coeff(t, 2, 2) == Catch::Approx(l2 * l2 - 1.0).margin(1e-12));
  CHECK(sym_coeff(t, 2, 2) == Catch::Approx(t.lambda(4)).margin(1e-10));
  CHECK(sym_coeff(t, 3, 5) == Catch::Approx(t.lambda(125)).margin(1e-10));

  CHECK_THROWS_AS(sym_coeff(t, 1, 40961), std::out_of_range);
  CHECK_THROWS_AS(sym_coeff(t, 1, 15), std::out_of_range);  // not prime
  CHECK_THROWS_AS(sym_coeff(t, -1, 2), std::invalid_argument);
}

TEST_CASE("rankin_selberg_coeff identities") {
  const auto& t = hecke40k();
  auto j0 = rankin_selberg_coeff(t, 0, 7);
  CHECK(j0.tensor == 1.0);
  CHECK(j0.adjoint == 0.0);

  // tensor = sum_{r<=j} U_{2r}(cos theta_p)  (Clebsch-Gordan for sym^j x sym^j)
  for (int64_t j : {int64_t{1}, int64_t{2}, int64_t{3}, int64_t{5}}) {
    for (int64_t p : {int64_t{2}, int64_t{5}, int64_t{13}, int64_t{997}}) {
      auto rs = rankin_selberg_coeff(t, j, p);
      double sum = 0.0;
      for (int64_t r = 0; r <= j; ++r) sum += sym_coeff(t, 2 * r, p);
      REQUIRE(rs.tensor == Catch::Approx(sum).margin(1e-9));
      REQUIRE(rs.tensor - rs.adjoint == Catch::Approx(1.0).margin(1e-12));
    }
  }
}

TEST_CASE("Chebyshev square identity at random points") {
  std::mt19937_64 rng(20240808);
  std::uniform_real_distribution<double> uc(-1.0, 1.0);
  std::uniform_int_distribution<int64_t> uj(0, 20);
  auto cheb = [](int64_t j, double c) {
    double u0 = 1.0, u1 = 2.0 * c;
    if (j == 0) return u0;
    for (int64_t i = 1; i < j; ++i) {
      double u2 = 2.0 * c * u1 - u0;
      u0 = u1;
      u1 = u2;
    }
    return u1;
  };
  for (int rep = 0; rep < 1000; ++rep) {
    double c = uc(rng);
    int64_t j = uj(rng);
    double lhs = cheb(j, c) * cheb(j, c);
    double rhs = 0.0;
    for (int64_t r = 0; r <= j; ++r) rhs += cheb(2 * r, c);
    REQUIRE(lhs == Catch::Approx(rhs).margin(1e-9));
  }
}

TEST_CASE("satake power sums reduce to sym_coeff at r = 1") {
  const auto& t = hecke40k();
  for (int64_t p : {int64_t{2}, int64_t{3}, int64_t{31}}) {
    for (int64_t j = 0; j <= 6; ++j) {
      CHECK(satake_power_sum(t, j, p, 1) == Catch::Approx(sym_coeff(t, j, p)).margin(1e-9));
    }
  }
  // a_{sym^j}(p^r) = sum of r-th powers of the Satake parameters.
  const double th = t.theta(7);
  for (int64_t j = 1; j <= 4; ++j) {
    for (int64_t r = 1; r <= 4; ++r) {
      std::complex<double> sum{0, 0};
      for (int64_t m = 0; m <= j; ++m) {
        sum += std::exp(std::complex<double>(0, (2.0 * m - j) * r * th));
      }
      REQUIRE(satake_power_sum(t, j, 7, r) == Catch::Approx(sum.real()).margin(1e-9));
      REQUIRE(std::fabs(sum.imag()) < 1e-9);
    }
  }
}

TEST_CASE("build_hecke preconditions") {
  CHECK_THROWS_AS(build_hecke(sieve40k(), 1), std::invalid_argument);
  CHECK_THROWS_AS(build_hecke(sieve40k(), 50000), std::out_of_range);
}
