#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "wglab/arith.hpp"
#include "wglab/sieve.hpp"

namespace wglab {

/// A truncated Euler product with a certified relative truncation error:
/// the true value lies in [value (1 - tail_bound), value (1 + tail_bound)].
struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
  int64_t cutoff = 0;
};

namespace detail {

// P(s) = sum_p p^{-s} via Moebius inversion of log zeta.
inline double prime_zeta(double s) {
  double sum = 0.0;
  for (int j = 1; j * s <= 128.0; ++j) {
    int mu = mobius(j);
    if (mu == 0) continue;
    double zs = j * s;
    double lz;
    if (zs < 20.0) {
      lz = std::log(std::riemann_zeta(zs));
    } else {
      double zm1 = 0.0;
      for (int n = 2; n <= 64; ++n) {
        double t = std::pow(static_cast<double>(n), -zs);
        zm1 += t;
        if (t < 1e-30) break;
      }
      lz = std::log1p(zm1);
    }
    sum += mu * lz / j;
  }
  return sum;
}

// log of prod_{p > x0} (1 - 1/(p-1)^2) through the expansion
// log(1 - 1/(p-1)^2) = -sum_{k>=2} (2^k - 2)/k p^{-k}; the k-loop stops once
// the geometric term estimate drops below 1e-19, keeping the error
// amplification of the P(k) cancellation under ~1e-13.
inline long double twin_tail_log(const SieveTable& sieve, int64_t x0) {
  long double acc = 0.0L;
  for (int k = 2; k <= 64; ++k) {
    double est = std::pow(2.0, k) / k * std::pow(static_cast<double>(x0), 1.0 - k);
    if (est < 1e-19) break;
    long double below = 0.0L;
    for (int64_t p : sieve.primes()) {
      if (p > x0) break;
      below += std::pow(static_cast<long double>(p), static_cast<long double>(-k));
    }
    long double tail = static_cast<long double>(prime_zeta(k)) - below;
    acc -= (std::pow(2.0L, k) - 2.0L) / k * tail;
  }
  return acc;
}

}  // namespace detail

/// Twin prime constant C2 = prod_{p >= 3} (1 - 1/(p-1)^2): partial product up
/// to x0 plus the prime-zeta accelerated tail; accurate to ~1e-13.
inline double twin_prime_constant(const SieveTable& sieve, int64_t x0) {
  if (x0 < 100 || x0 > sieve.limit()) throw std::invalid_argument("twin_prime_constant: bad crossover");
  long double lnc = 0.0L;
  for (int64_t p : sieve.primes()) {
    if (p > x0) break;
    if (p == 2) continue;
    long double pm1 = static_cast<long double>(p - 1);
    lnc += std::log(1.0L - 1.0L / (pm1 * pm1));
  }
  lnc += detail::twin_tail_log(sieve, x0);
  return static_cast<double>(std::exp(lnc));
}

inline double twin_prime_constant() {
  static const double c2 = [] {
    auto sieve = build_sieve(10000);
    return twin_prime_constant(sieve, 10000);
  }();
  return c2;
}

/// Ternary singular series G_{1,3}(N): product over p | N of 1 - 1/(p-1)^2
/// and over p not dividing N of 1 + 1/(p-1)^3.  Factors at primes dividing N
/// are always taken exactly (N is factorized), so the truncation tail covers
/// only the 1/(p-1)^3 branch.
inline SeriesValue singular_series_ternary(const SieveTable& sieve, int64_t N, int64_t cutoff,
                                           bool zero_for_even = false) {
  if (N < 1) throw std::invalid_argument("singular_series_ternary: N must be >= 1");
  if (cutoff < 100) throw std::invalid_argument("singular_series_ternary: cutoff must be >= 100");
  if (cutoff > sieve.limit()) throw std::out_of_range("singular_series_ternary: cutoff beyond sieve");
  if (N % 2 == 0) {
    if (zero_for_even) return {0.0, 0.0, cutoff};
    throw std::invalid_argument("singular_series_ternary: N must be odd (factor at p = 2 vanishes)");
  }
  long double v = 1.0L;
  for (int64_t p : sieve.primes()) {
    if (p > cutoff) break;
    long double pm1 = static_cast<long double>(p - 1);
    if (N % p == 0) {
      v *= 1.0L - 1.0L / (pm1 * pm1);
    } else {
      v *= 1.0L + 1.0L / (pm1 * pm1 * pm1);
    }
  }
  for (auto [p, e] : factorize(N)) {
    if (p <= cutoff) continue;
    long double pm1 = static_cast<long double>(p - 1);
    v *= 1.0L - 1.0L / (pm1 * pm1);
  }
  // sum_{p > x} 1/(p-1)^3 <= 1.95/(x^2 log x) by partial summation with
  // pi(t) <= 1.3 t / log t; doubled as a safety factor.
  double x = static_cast<double>(cutoff);
  double tail = 3.9 / (x * x * std::log(x));
  return {static_cast<double>(v), std::expm1(tail), cutoff};
}

/// Hardy-Littlewood binary main term 2 C2 M/(log M)^2 prod_{odd p | M} (p-1)/(p-2).
inline SeriesValue hl_binary(const SieveTable& sieve, int64_t M, int64_t cutoff) {
  if (M < 6 || M % 2 != 0) throw std::invalid_argument("hl_binary: M must be even and >= 6");
  if (cutoff < 100) throw std::invalid_argument("hl_binary: cutoff must be >= 100");
  int64_t x0 = std::min<int64_t>({cutoff, sieve.limit(), 20000});
  double c2 = twin_prime_constant(sieve, x0);
  long double prod = 1.0L;
  for (auto [p, e] : factorize(M)) {
    if (p == 2) continue;
    prod *= static_cast<long double>(p - 1) / static_cast<long double>(p - 2);
  }
  double lm = std::log(static_cast<double>(M));
  double value = static_cast<double>(2.0L * c2 * static_cast<long double>(M) / (lm * lm) * prod);
  return {value, 1e-11, cutoff};
}

namespace detail {

// sigma_p for x1^2+...+x5^2 = N with unit coordinates: (m/phi(m))^5 m^{-4}
// times the number of unit solutions modulo m (m = p odd, or m = 8).
inline double quinary_local_density(int64_t m, int64_t N) {
  std::vector<int64_t> v(static_cast<size_t>(m), 0);
  int64_t units = 0;
  for (int64_t x = 1; x < m; ++x) {
    if (std::gcd(x, m) != 1) continue;
    ++units;
    v[static_cast<size_t>(x * x % m)] += 1;
  }
  std::vector<int64_t> w = v;
  for (int rep = 0; rep < 3; ++rep) {
    std::vector<int64_t> next(static_cast<size_t>(m), 0);
    for (int64_t i = 0; i < m; ++i) {
      if (!w[static_cast<size_t>(i)]) continue;
      for (int64_t j = 0; j < m; ++j) {
        if (!v[static_cast<size_t>(j)]) continue;
        next[static_cast<size_t>((i + j) % m)] += w[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
      }
    }
    w.swap(next);
  }
  int64_t count = 0;
  {
    // final convolution evaluated only at the needed residue
    int64_t target = N % m;
    for (int64_t i = 0; i < m; ++i) {
      if (!w[static_cast<size_t>(i)]) continue;
      int64_t j = (target - i) % m;
      if (j < 0) j += m;
      count += w[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    }
  }
  double ratio = static_cast<double>(m) / static_cast<double>(units);
  return std::pow(ratio, 5.0) * static_cast<double>(count) /
         std::pow(static_cast<double>(m), 4.0);
}

}  // namespace detail

/// Quinary singular series G_{2,5}(N) as the product of stabilized local
/// densities sigma_p over p <= cutoff (p = 2 handled modulo 8).
inline SeriesValue singular_series_quinary(const SieveTable& sieve, int64_t N, int64_t cutoff) {
  if (N % 24 != 5) throw std::invalid_argument("singular_series_quinary: need N = 5 (mod 24)");
  if (cutoff < 100) throw std::invalid_argument("singular_series_quinary: cutoff must be >= 100");
  if (cutoff > sieve.limit()) throw std::out_of_range("singular_series_quinary: cutoff beyond sieve");
  long double v = detail::quinary_local_density(8, N);
  for (int64_t p : sieve.primes()) {
    if (p > cutoff) break;
    if (p == 2) continue;
    v *= detail::quinary_local_density(p, N);
  }
  // |sigma_p - 1| <= 16/p^2 from the exact Gauss-sum error p^{(m-1)/2} of the
  // diagonal form counts; tail by partial summation, safety factor 2.
  double x = static_cast<double>(cutoff);
  double tail = 2.0 * 16.0 * 2.6 / (x * std::log(x));
  return {static_cast<double>(v), std::expm1(tail), cutoff};
}

namespace detail {

// 16-point Gauss-Legendre nodes/weights on [-1, 1], computed once by Newton
// iteration on P_16.
inline const std::array<std::pair<double, double>, 16>& gauss16() {
  static const auto table = [] {
    std::array<std::pair<double, double>, 16> t{};
    const int n = 16;
    for (int i = 0; i < n / 2; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 64; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double dx = p1 / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-15) break;
      }
      double w = 2.0 / ((1.0 - x * x) * dp * dp);
      t[static_cast<size_t>(i)] = {-x, w};
      t[static_cast<size_t>(n - 1 - i)] = {x, w};
    }
    return t;
  }();
  return table;
}

template <typename F>
double gauss_panel(F&& f, double lo, double hi) {
  double mid = (lo + hi) / 2.0, half = (hi - lo) / 2.0;
  double s = 0.0;
  for (auto [x, w] : gauss16()) s += w * f(mid + half * x);
  return s * half;
}

// Composite integration on geometric panels between lo and hi.
template <typename F>
double gauss_geometric(F&& f, double lo, double hi, double ratio = 1.5) {
  if (hi <= lo) return 0.0;
  double s = 0.0;
  double a = lo;
  while (a < hi) {
    double b = std::min(hi, a * ratio + 1.0);
    s += gauss_panel(f, a, b);
    a = b;
  }
  return s;
}

// I(w) = int_2^{w-2} dv / (log v log(w - v)); symmetric around w/2.
inline double ternary_inner(double w) {
  if (w < 4.5) return 0.0;
  auto f = [w](double v) { return 1.0 / (std::log(v) * std::log(w - v)); };
  return 2.0 * gauss_geometric(f, 2.0, w / 2.0);
}

// Simplex integral int int_{u,v >= 2, N-u-v >= 2} du dv / (log u log v log(N-u-v)).
inline double ternary_simplex_integral(double N) {
  auto f = [N](double u) { return ternary_inner(N - u) / std::log(u); };
  return gauss_geometric(f, 2.0, N - 4.0, 1.25);
}

}  // namespace detail

enum class MainTermKind { TernaryLog, TernaryIntegral, Quinary };

/// Main-term asymptotics: G N^2/(2 log^3 N), the logarithmic-integral
/// refinement, and the quinary pi^2 N^{3/2}/(24 log^5 N) form.
inline double main_term(const SieveTable& sieve, int64_t N, MainTermKind kind,
                        int64_t cutoff = 10000) {
  if (N < 100) throw std::invalid_argument("main_term: N must be >= 100");
  double nd = static_cast<double>(N);
  double ln = std::log(nd);
  switch (kind) {
    case MainTermKind::TernaryLog: {
      auto g = singular_series_ternary(sieve, N, cutoff);
      return g.value * nd * nd / (2.0 * ln * ln * ln);
    }
    case MainTermKind::TernaryIntegral: {
      auto g = singular_series_ternary(sieve, N, cutoff);
      return g.value * detail::ternary_simplex_integral(nd);
    }
    case MainTermKind::Quinary: {
      auto g = singular_series_quinary(sieve, N, std::min<int64_t>(cutoff, 500));
      return g.value * std::numbers::pi * std::numbers::pi * std::pow(nd, 1.5) /
             (24.0 * ln * ln * ln * ln * ln);
    }
  }
  return 0.0;
}

}  // namespace wglab
