#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

#include "wglab/arith.hpp"

using namespace wglab;

TEST_CASE("dirichlet_approx on exact and irrational inputs") {
  auto r = dirichlet_approx(1.0 / 3.0, 10);
  CHECK(r.a == 1);
  CHECK(r.q == 3);
  CHECK(std::fabs(r.offset) < 1e-15);

  auto z = dirichlet_approx(0.0, 100);
  CHECK(z.a == 0);
  CHECK(z.q == 1);
  CHECK(z.offset == 0.0);

  double alpha = std::sqrt(2.0) - 1.0;
  auto s = dirichlet_approx(alpha, 12);
  CHECK(s.a == 5);
  CHECK(s.q == 12);
  CHECK(s.offset == Catch::Approx(-0.0024531).margin(1e-6));

  // Exhaustive oracle: no q <= 12 gives a closer admissible center, and the
  // returned convergent satisfies the constraint.
  CHECK(std::fabs(alpha - 5.0 / 12.0) <= 1.0 / (12.0 * 12.0));
  for (int64_t q = 1; q <= 12; ++q) {
    auto a = static_cast<int64_t>(std::llround(alpha * static_cast<double>(q)));
    if (std::gcd(a, q) != 1) continue;
    double diff = std::fabs(alpha - static_cast<double>(a) / static_cast<double>(q));
    if (diff <= 1.0 / (static_cast<double>(q) * 12.0)) CHECK(q <= s.q);
  }

  CHECK_THROWS_AS(dirichlet_approx(0.5, 0), std::invalid_argument);
}

TEST_CASE("dirichlet_approx constraints on random samples") {
  std::mt19937_64 rng(987654321);
  std::uniform_real_distribution<double> ua(0.0, 1.0);
  std::uniform_int_distribution<int64_t> uq(1, 1000000);
  for (int rep = 0; rep < 10000; ++rep) {
    double alpha = ua(rng);
    int64_t Q = uq(rng);
    auto r = dirichlet_approx(alpha, Q);
    REQUIRE(r.q >= 1);
    REQUIRE(r.q <= Q);
    REQUIRE(std::gcd(r.a, r.q) == 1);
    long double lhs = std::fabs(static_cast<long double>(r.offset)) * r.q * Q;
    REQUIRE(lhs <= 1.0L + 1e-9L);
    long double recon = static_cast<long double>(r.a) / r.q + r.offset;
    REQUIRE(std::fabs(static_cast<long double>(alpha) - recon) < 1e-15L);
  }
}

TEST_CASE("classify_arc examples") {
  auto m = classify_arc(1.0 / 3.0, 10, 1000);
  CHECK(m.kind == ArcKind::Major);
  CHECK(m.q == 3);
  CHECK(m.a == 1);

  auto g = classify_arc((1.0 + std::sqrt(5.0)) / 2.0 - 1.0, 5, 50);
  CHECK(g.kind == ArcKind::Minor);

  auto h = classify_arc(0.5 + 5e-7, 10, 10000);
  CHECK(h.kind == ArcKind::Major);
  CHECK(h.q == 2);
  CHECK(h.a == 1);

  auto zero = classify_arc(0.0, 10, 1000);
  CHECK(zero.kind == ArcKind::Major);
  CHECK(zero.q == 1);
  CHECK(zero.a == 0);

  CHECK_THROWS_AS(classify_arc(0.3, 10, 20), std::invalid_argument);
  CHECK_THROWS_AS(classify_arc(0.3, 0, 20), std::invalid_argument);
}

TEST_CASE("classify_arc agrees with a full (q, a) scan") {
  const int64_t P = 7, Q = 61;
  const int grid = 10000;
  for (int i = 0; i < grid; ++i) {
    double alpha = static_cast<double>(i) / grid;
    auto label = classify_arc(alpha, P, Q);
    int certifiers = 0;
    int64_t cq = 0, ca = 0;
    for (int64_t q = 1; q <= P; ++q) {
      for (int64_t a = 0; a <= q; ++a) {
        if (std::gcd(a, q) != 1 && !(a == 0 && q == 1)) continue;
        long double diff = std::fabs(static_cast<long double>(alpha) -
                                     static_cast<long double>(a) / q);
        if (diff * q * Q <= 1.0L) {
          int64_t canon_a = (a == q) ? 0 : a;
          if (certifiers == 0 || q < cq) {
            cq = q;
            ca = canon_a;
          }
          ++certifiers;
        }
      }
    }
    // Arcs with q <= P < Q/2 are pairwise disjoint (one wrap pair allowed
    // for a = 0 vs a = q at q = 1).
    REQUIRE(certifiers <= 2);
    if (certifiers > 0) {
      REQUIRE(label.kind == ArcKind::Major);
      REQUIRE(label.q == cq);
      REQUIRE(label.a == ca);
    } else {
      REQUIRE(label.kind == ArcKind::Minor);
    }
  }
}

TEST_CASE("characters mod small q") {
  auto c1 = characters_mod(1);
  REQUIRE(c1.size() == 1);
  CHECK(c1[0](0) == std::complex<double>(1.0, 0.0));
  CHECK(c1[0](5) == std::complex<double>(1.0, 0.0));

  auto c3 = characters_mod(3);
  REQUIRE(c3.size() == 2);
  bool found_principal = false, found_quadratic = false;
  for (const auto& chi : c3) {
    if (std::abs(chi(2) - std::complex<double>(1, 0)) < 1e-12) found_principal = true;
    if (std::abs(chi(2) - std::complex<double>(-1, 0)) < 1e-12) found_quadratic = true;
    CHECK(std::abs(chi(1) - std::complex<double>(1, 0)) < 1e-12);
    CHECK(std::abs(chi(3)) == 0.0);
  }
  CHECK(found_principal);
  CHECK(found_quadratic);

  auto c8 = characters_mod(8);
  REQUIRE(c8.size() == 4);
  for (const auto& chi : c8) {
    for (int64_t r = 0; r < 8; ++r) CHECK(std::fabs(chi(r).imag()) < 1e-12);
  }

  CHECK_THROWS_AS(characters_mod(0), std::invalid_argument);
}

TEST_CASE("character orthogonality for q <= 60") {
  for (int64_t q = 1; q <= 60; ++q) {
    auto chars = characters_mod(q);
    auto phi = static_cast<double>(euler_phi(q));
    REQUIRE(static_cast<int64_t>(chars.size()) == euler_phi(q));

    // Multiplicativity and unit modulus on units.
    for (const auto& chi : chars) {
      for (int64_t m = 1; m < std::min<int64_t>(q, 20); ++m) {
        for (int64_t n = 1; n < std::min<int64_t>(q, 20); ++n) {
          if (std::gcd(m, q) != 1 || std::gcd(n, q) != 1) continue;
          REQUIRE(std::abs(chi(m * n) - chi(m) * chi(n)) < 1e-10);
        }
      }
    }

    // Sum over characters.
    for (int64_t m = 0; m < q; ++m) {
      for (int64_t n = 0; n < q; ++n) {
        std::complex<double> s{0, 0};
        for (const auto& chi : chars) s += chi(m) * std::conj(chi(n));
        double expect = (m % q == n % q && std::gcd(m, q) == 1) ? phi : 0.0;
        REQUIRE(std::abs(s - expect) < 1e-10);
      }
    }

    // Sum over residues.
    for (size_t i = 0; i < chars.size(); ++i) {
      for (size_t j = 0; j < chars.size(); ++j) {
        std::complex<double> s{0, 0};
        for (int64_t r = 0; r < q; ++r) s += chars[i](r) * std::conj(chars[j](r));
        double expect = (i == j) ? phi : 0.0;
        REQUIRE(std::abs(s - expect) < 1e-10);
      }
    }

    // Closed under conjugation.
    for (const auto& chi : chars) {
      bool found = false;
      for (const auto& psi : chars) {
        double d = 0.0;
        for (int64_t r = 0; r < q; ++r) d = std::max(d, std::abs(psi(r) - std::conj(chi(r))));
        if (d < 1e-10) {
          found = true;
          break;
        }
      }
      REQUIRE(found);
    }
  }
}

TEST_CASE("gauss_parseval_check examples and sweep") {
  auto [l1, r1] = gauss_parseval_check(5, 1, 1, 1);
  CHECK(r1 == 16.0);
  CHECK(l1 == Catch::Approx(16.0).epsilon(1e-9));

  auto [l2, r2] = gauss_parseval_check(12, 3, 5, 2);
  CHECK(r2 == 4.0);
  CHECK(l2 == Catch::Approx(4.0).epsilon(1e-9));

  auto [l3, r3] = gauss_parseval_check(9, 9, 1, 1);
  CHECK(r3 == 1.0);
  CHECK(l3 == Catch::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(gauss_parseval_check(10, 2, 5, 1), std::invalid_argument);

  for (int64_t q = 1; q <= 40; ++q) {
    for (int64_t d = 1; d <= q; ++d) {
      if (q % d) continue;
      for (int64_t a = 1; a <= q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        for (int k = 1; k <= 2; ++k) {
          auto [lhs, rhs] = gauss_parseval_check(q, d, a, k);
          REQUIRE(std::fabs(lhs - rhs) <= 1e-6 * rhs);
        }
      }
    }
  }
}

TEST_CASE("euler_phi, mobius, divisor_count") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(12) == 6);
  CHECK(divisor_count(97) == 2);
}
