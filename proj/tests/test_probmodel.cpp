#include <catch2/catch_amalgamated.hpp>

#include "wglab/probmodel.hpp"

using namespace wglab;
using Catch::Approx;

namespace {
const SieveTable& sieve() {
  static SieveTable s = build_sieve(4000);
  return s;
}
const CountTable& pairs() {
  static CountTable t = goldbach_pair_table(sieve(), 4000);
  return t;
}
}  // namespace

TEST_CASE("event counts at N = 9") {
  auto e = event_counts(sieve(), pairs(), 9);
  CHECK(e.omega_size == 28);
  CHECK(e.count_A == 15);
  CHECK(e.count_Aprime == 6);
  CHECK(e.count_both == 4);
  CHECK(e.count_both == count_ternary(sieve(), 9));
  CHECK(conjecture_ratio(e) == Approx(112.0 / 90.0).margin(1e-12));
}

TEST_CASE("omega equals compositions of N into three parts") {
  for (int64_t N = 9; N <= 199; N += 2) {
    auto e = event_counts(sieve(), pairs(), N);
    int64_t direct = 0;
    for (int64_t a = 1; a <= N - 2; ++a) {
      for (int64_t b = 1; b <= N - a - 1; ++b) {
        ++direct;  // c = N - a - b >= 1
      }
    }
    REQUIRE(e.omega_size == direct);
  }
}

TEST_CASE("count_A against direct enumeration of the event") {
  for (int64_t N = 9; N <= 199; N += 2) {
    auto e = event_counts(sieve(), pairs(), N);
    int64_t direct_a = 0, direct_ap = 0, direct_both = 0;
    for (int64_t a = 1; a <= N - 2; ++a) {
      for (int64_t b = 1; b <= N - a - 1; ++b) {
        int64_t c = N - a - b;
        if (sieve().is_prime(a)) ++direct_a;
        if (a >= 2 && sieve().is_prime(b) && sieve().is_prime(c)) ++direct_ap;
        if (sieve().is_prime(a) && sieve().is_prime(b) && sieve().is_prime(c)) ++direct_both;
      }
    }
    REQUIRE(e.count_A == direct_a);
    REQUIRE(e.count_Aprime == direct_ap);
    REQUIRE(e.count_both == direct_both);
  }
}

TEST_CASE("probability bounds") {
  for (int64_t N = 9; N <= 3999; N += 202) {
    auto e = event_counts(sieve(), pairs(), N);
    double omega = static_cast<double>(e.omega_size);
    double pa = e.count_A / omega, pap = e.count_Aprime / omega, pboth = e.count_both / omega;
    REQUIRE(pa >= 0.0);
    REQUIRE(pa <= 1.0);
    REQUIRE(pap >= 0.0);
    REQUIRE(pap <= 1.0);
    REQUIRE(pboth <= pa);
    REQUIRE(pboth <= pap);
  }
}

TEST_CASE("goldbach average check") {
  auto g = goldbach_average_check(sieve(), pairs(), 11, 1000);
  CHECK(g.lhs == 2);  // #J2(4) + #J2(6) = 1 + 1
  auto series = singular_series_ternary(sieve(), 11, 1000);
  double ln = std::log(11.0);
  CHECK(g.rhs == Approx(series.value * 121.0 / (2.0 * ln * ln)).epsilon(1e-9));
  CHECK(g.ratio == Approx(static_cast<double>(g.lhs) / g.rhs).epsilon(1e-12));

  CHECK_THROWS_AS(goldbach_average_check(sieve(), pairs(), 10, 1000), std::invalid_argument);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(event_counts(sieve(), pairs(), 8), std::invalid_argument);
  CHECK_THROWS_AS(event_counts(sieve(), pairs(), 7), std::invalid_argument);
  CHECK_THROWS_AS(event_counts(sieve(), pairs(), 4001), std::out_of_range);
}
