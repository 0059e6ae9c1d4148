#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "wglab/hecke.hpp"
#include "wglab/repcount.hpp"
#include "wglab/util.hpp"

namespace wglab {

/// Closed subinterval of [0, pi] of Sato-Tate angles.
struct AngleInterval {
  double lo = 0.0;
  double hi = 0.0;
};

inline void validate(const AngleInterval& I) {
  if (!(0.0 <= I.lo && I.lo <= I.hi && I.hi <= std::numbers::pi + 1e-12))
    throw std::invalid_argument("AngleInterval: need 0 <= lo <= hi <= pi");
}

/// mu_ST(I) for the measure (2/pi) sin^2(theta) dtheta.
inline double st_measure(const AngleInterval& I) {
  validate(I);
  return (I.hi - I.lo) / std::numbers::pi -
         (std::sin(2.0 * I.hi) - std::sin(2.0 * I.lo)) / (2.0 * std::numbers::pi);
}

/// pi_{f,I}(x): primes p <= x with theta_p in I (endpoints included).
inline int64_t count_angles(const HeckeTable& table, int64_t x, const AngleInterval& I) {
  validate(I);
  if (x < 0 || x > table.limit()) throw std::out_of_range("count_angles: x beyond Hecke table");
  int64_t c = 0;
  const auto& primes = table.primes();
  for (size_t i = 0; i < primes.size() && primes[i] <= x; ++i) {
    double th = table.theta(primes[i]);
    if (I.lo <= th && th <= I.hi) ++c;
  }
  return c;
}

enum class TwistMode { Sym, Tensor, Adjoint };

namespace detail {
inline double twist_weight(const HeckeTable& table, int64_t j, int64_t p, TwistMode mode) {
  double u = sym_coeff(table, j, p);
  switch (mode) {
    case TwistMode::Sym:
      return u;
    case TwistMode::Tensor:
      return u * u;
    case TwistMode::Adjoint:
      return u * u - 1.0;
  }
  return 0.0;
}
}  // namespace detail

/// r-type sums over J_{1,3}(N): sum of the chosen coefficient at p1 over all
/// ordered triples, by weighted convolution against the pair table.
inline double twisted_sum(const HeckeTable& table, const CountTable& pairs, int64_t N, int64_t j,
                          TwistMode mode) {
  if (pairs.kind != CountKind::Goldbach2) throw std::invalid_argument("twisted_sum: pair table required");
  if (N < 0 || N > pairs.limit) throw std::out_of_range("twisted_sum: N beyond pair table");
  long double acc = 0.0L;
  const auto& primes = table.primes();
  for (size_t i = 0; i < primes.size(); ++i) {
    int64_t p = primes[i];
    if (p + 4 > N) break;
    int64_t c = pairs.counts[static_cast<size_t>(N - p)];
    if (c) acc += static_cast<long double>(detail::twist_weight(table, j, p, mode)) * c;
  }
  return static_cast<double>(acc);
}

/// w-type sums over J_{2,5}(N), same weighting against the quadruple table.
inline double twisted_sum(const HeckeTable& table, const QuinaryTable& quin, int64_t N, int64_t j,
                          TwistMode mode) {
  if (N < 0 || N > quin.limit) throw std::out_of_range("twisted_sum: N beyond quinary table");
  long double acc = 0.0L;
  const auto& primes = table.primes();
  for (size_t i = 0; i < primes.size(); ++i) {
    int64_t p = primes[i];
    int64_t ps = p * p;
    if (ps > N) break;
    int64_t c = quin.c4[static_cast<size_t>(N - ps)];
    if (c) acc += static_cast<long double>(detail::twist_weight(table, j, p, mode)) * c;
  }
  return static_cast<double>(acc);
}

/// #J_{1,3,f,I}(N): ordered triples with the angle constraint on p1 only.
inline int64_t count_J_with_angle(const HeckeTable& table, const CountTable& pairs, int64_t N,
                                  const AngleInterval& I) {
  validate(I);
  if (pairs.kind != CountKind::Goldbach2) throw std::invalid_argument("count_J_with_angle: pair table required");
  if (N < 0 || N > pairs.limit) throw std::out_of_range("count_J_with_angle: N beyond pair table");
  int64_t c = 0;
  const auto& primes = table.primes();
  for (size_t i = 0; i < primes.size(); ++i) {
    int64_t p = primes[i];
    if (p + 4 > N) break;
    double th = table.theta(p);
    if (I.lo <= th && th <= I.hi) c += pairs.counts[static_cast<size_t>(N - p)];
  }
  return c;
}

enum class SmoothingSide { Majorant, Minorant };

/// Beurling-Selberg style majorant/minorant of an angle-interval indicator:
/// the circle indicator of the delta'-widened (narrowed) interval convolved
/// with an R-fold box kernel of total width delta'.  Everything downstream
/// evaluates the even symmetrization g(theta/2pi) + g(-theta/2pi), whose sine
/// coefficients cancel, so only cosine data is stored.
struct SmoothingFunction {
  SmoothingSide side = SmoothingSide::Majorant;
  double delta = 0.0;  // delta' of the construction
  int R = 1;
  double a = 0.0, b = 0.0;  // shifted interval on the circle (units of 1)
  double base = 0.0;        // b - a: constant Fourier term of the one-bump g
  double tail_bound = 0.0;  // certified bound on the dropped coefficient tail
  std::vector<double> a_coeffs;    // a_n = 2 Re g^(n), n = 1 .. n_max(+2)
  std::vector<double> cheb_coeffs; // c_n = a_n - a_{n+2}; c_0 = a_0 - a_2
  size_t n_max = 0;

  /// Lemma bound min{2(b-a), 2/(n pi), (2/(n pi)) (R/(pi n delta'))^R}.
  double coeff_bound(int64_t n) const {
    double npi = static_cast<double>(n) * std::numbers::pi;
    double v = std::min(2.0 * base, 2.0 / npi);
    return std::min(v, 2.0 / npi * std::pow(R / (npi * delta), static_cast<double>(R)));
  }

  // CDF of the R-fold convolution of boxes on [-delta/(2R), delta/(2R)].
  double kernel_cdf(double x) const {
    double w = delta / (2.0 * R);
    if (x <= -delta / 2.0) return 0.0;
    if (x >= delta / 2.0) return 1.0;
    double u = (x + delta / 2.0) / (2.0 * w);  // in (0, R)
    double s = 0.0, binom = 1.0, fact = 1.0;
    for (int i = 2; i <= R; ++i) fact *= i;
    for (int i = 0; i <= static_cast<int>(u); ++i) {
      double term = binom * std::pow(u - i, R);
      s += (i % 2 == 0) ? term : -term;
      binom = binom * (R - i) / (i + 1);
    }
    return s / fact;
  }

  /// Closed-form value of the one-bump g at circle position y.
  double indicator_smooth(double y) const {
    double mid = (a + b) / 2.0;
    double t = y - std::round(y - mid);  // reduce into [mid - 1/2, mid + 1/2)
    return kernel_cdf(t - a) - kernel_cdf(t - b);
  }

  /// g(theta/2pi) + g(-theta/2pi) via the stored cosine coefficients.
  double eval_theta(double theta) const {
    double s = 2.0 * base;
    for (size_t n = 1; n < a_coeffs.size(); ++n) {
      s += 2.0 * a_coeffs[n] * std::cos(static_cast<double>(n) * theta);
    }
    return s;
  }

  /// Same value through the Chebyshev-U expansion.
  double eval_theta_cheb(double theta) const {
    double c = std::cos(theta);
    double s = cheb_coeffs.empty() ? 0.0 : cheb_coeffs[0];
    double u0 = 1.0, u1 = 2.0 * c;
    for (size_t n = 1; n < cheb_coeffs.size(); ++n) {
      s += cheb_coeffs[n] * u1;
      double u2 = 2.0 * c * u1 - u0;
      u0 = u1;
      u1 = u2;
    }
    return s;
  }
};

/// Builds the smoothing pair for chi_I per the majorant/minorant interval
/// shifts a = lo/2pi -+ delta/2, b = hi/2pi +- delta/2.
inline SmoothingFunction vaaler_smoothing(const AngleInterval& I, double delta, int R,
                                          SmoothingSide side) {
  validate(I);
  if (!(delta > 0.0 && delta < 0.5)) throw std::invalid_argument("vaaler_smoothing: delta' in (0, 1/2)");
  if (R < 1) throw std::invalid_argument("vaaler_smoothing: R >= 1");
  double A = I.lo / (2.0 * std::numbers::pi);
  double B = I.hi / (2.0 * std::numbers::pi);
  SmoothingFunction g;
  g.side = side;
  g.delta = delta;
  g.R = R;
  if (side == SmoothingSide::Majorant) {
    g.a = A - delta / 2.0;
    g.b = B + delta / 2.0;
  } else {
    g.a = A + delta / 2.0;
    g.b = B - delta / 2.0;
  }
  if (!(delta <= g.b - g.a && g.b - g.a <= 1.0 - delta))
    throw std::invalid_argument("vaaler_smoothing: need delta' <= b - a <= 1 - delta'");
  g.base = g.b - g.a;

  // Truncation index: tail of the third coefficient bound below 1e-9.
  double lead = 2.0 / (std::numbers::pi * R) *
                std::pow(R / (std::numbers::pi * delta), static_cast<double>(R));
  double target = 1e-9;
  auto n_max = static_cast<size_t>(std::ceil(std::pow(lead / target, 1.0 / R))) + 1;
  n_max = std::clamp<size_t>(n_max, 16, size_t{1} << 22);
  g.n_max = n_max;
  g.tail_bound = lead * std::pow(static_cast<double>(n_max), -static_cast<double>(R));

  g.a_coeffs.assign(n_max + 3, 0.0);
  for (size_t n = 1; n <= n_max + 2; ++n) {
    double nd = static_cast<double>(n);
    double z = std::numbers::pi * nd * delta / R;
    double fhat = std::pow(std::sin(z) / z, static_cast<double>(R));
    // 2 Re[(e(-na) - e(-nb)) / (2 pi i n)] = (sin(2 pi n b) - sin(2 pi n a)) / (pi n)
    double hre = (std::sin(2.0 * std::numbers::pi * nd * g.b) -
                  std::sin(2.0 * std::numbers::pi * nd * g.a)) /
                 (std::numbers::pi * nd);
    g.a_coeffs[n] = hre * fhat;
  }
  g.cheb_coeffs.assign(n_max + 1, 0.0);
  g.cheb_coeffs[0] = 2.0 * g.base - g.a_coeffs[2];
  for (size_t n = 1; n <= n_max; ++n) g.cheb_coeffs[n] = g.a_coeffs[n] - g.a_coeffs[n + 2];
  return g;
}

/// delta' choice mirroring the squarefree-level smoothing setup, clamped so
/// both majorant and minorant preconditions stay satisfiable for I.
inline double default_smoothing_delta(const AngleInterval& I, int64_t N, double weight_k1 = 12.0,
                                      double level_n1 = 1.0) {
  validate(I);
  if (N < 16) throw std::invalid_argument("default_smoothing_delta: N too small");
  double width = (I.hi - I.lo) / (2.0 * std::numbers::pi);
  double lN = std::log(static_cast<double>(N));
  double raw = std::log(weight_k1 * level_n1 * lN) / std::sqrt(lN);
  double cap = std::min({0.499, 0.98 * width / 2.0, 0.98 * (1.0 - width) / 2.0});
  if (cap <= 1e-6) throw std::invalid_argument("default_smoothing_delta: interval too degenerate");
  return std::clamp(raw, 1e-3, cap);
}

struct EquidistRow {
  int64_t N = 0;
  int64_t count_J = 0;
  int64_t count_JI = 0;
  double ratio = 0.0;        // count_JI / count_J
  double prime_ratio = 0.0;  // pi_{f,I}(N) / pi(N)
  double st = 0.0;           // mu_ST(I)
  double discrepancy = 0.0;  // |ratio - st|
};

/// Per-N equidistribution table for the angle constraint at the p1 slot.
inline std::vector<EquidistRow> equidistribution_report(const HeckeTable& table,
                                                        const CountTable& pairs,
                                                        const std::vector<int64_t>& N_list,
                                                        const AngleInterval& I,
                                                        unsigned threads = 1) {
  validate(I);
  double st = st_measure(I);
  std::vector<EquidistRow> rows(N_list.size());
  parallel_for(static_cast<int64_t>(N_list.size()), threads, [&](int64_t idx) {
    int64_t N = N_list[static_cast<size_t>(idx)];
    EquidistRow r;
    r.N = N;
    r.count_JI = count_J_with_angle(table, pairs, N, I);
    r.count_J = 0;
    const auto& primes = table.primes();
    for (size_t i = 0; i < primes.size(); ++i) {
      if (primes[i] + 4 > N) break;
      r.count_J += pairs.counts[static_cast<size_t>(N - primes[i])];
    }
    r.ratio = r.count_J > 0 ? static_cast<double>(r.count_JI) / static_cast<double>(r.count_J) : 0.0;
    auto it = std::upper_bound(primes.begin(), primes.end(), N);
    auto piN = static_cast<double>(it - primes.begin());
    r.prime_ratio = piN > 0 ? static_cast<double>(count_angles(table, std::min(N, table.limit()), I)) / piN : 0.0;
    r.st = st;
    r.discrepancy = std::fabs(r.ratio - st);
    rows[static_cast<size_t>(idx)] = r;
  });
  return rows;
}

}  // namespace wglab
