#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wglab/arith.hpp"
#include "wglab/repcount.hpp"
#include "wglab/sieve.hpp"
#include "wglab/util.hpp"

namespace wglab {

/// Weight attached to a prime (or integer) summand; an empty function means
/// the constant weight 1.
using CoeffFn = std::function<double(int64_t)>;

/// H_{k,u'}(N, alpha) = sum over primes p^k <= N of e(p^k alpha).
inline std::complex<double> h_sum(const SieveTable& sieve, int64_t N, int k, double alpha) {
  if (N < 2 || k < 1) throw std::invalid_argument("h_sum: need N >= 2, k >= 1");
  int64_t cap = iroot(N, k);
  if (cap > sieve.limit()) throw std::out_of_range("h_sum: sieve smaller than N^{1/k}");
  std::complex<double> s{0.0, 0.0};
  for (int64_t p : sieve.primes()) {
    if (p > cap) break;
    int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    s += unit_phase(frac_mul(pk, alpha));
  }
  return s;
}

/// T_{k,1}(N, alpha) = sum over primes p^k <= N of coeff(p) e(p^k alpha).
inline std::complex<double> t_sum(const SieveTable& sieve, int64_t N, int k, double alpha,
                                  const CoeffFn& coeff) {
  if (N < 2 || k < 1) throw std::invalid_argument("t_sum: need N >= 2, k >= 1");
  if (!coeff) return h_sum(sieve, N, k, alpha);
  int64_t cap = iroot(N, k);
  if (cap > sieve.limit()) throw std::out_of_range("t_sum: sieve smaller than N^{1/k}");
  std::complex<double> s{0.0, 0.0};
  for (int64_t p : sieve.primes()) {
    if (p > cap) break;
    int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    s += coeff(p) * unit_phase(frac_mul(pk, alpha));
  }
  return s;
}

/// sum_{n <= x} Lambda(n) coeff(n) e(n^k alpha); coeff defaults to 1.
inline std::complex<double> lambda_weighted_sum(const SieveTable& sieve, int64_t x, int k,
                                                double alpha, const CoeffFn& coeff = nullptr) {
  if (x < 2 || k < 1) throw std::invalid_argument("lambda_weighted_sum: need x >= 2, k >= 1");
  auto lam = von_mangoldt_table(sieve, x);
  std::complex<double> s{0.0, 0.0};
  for (int64_t n = 2; n <= x; ++n) {
    double w = lam[static_cast<size_t>(n)];
    if (w == 0.0) continue;
    if (coeff) w *= coeff(n);
    int64_t nk = 1;
    for (int i = 0; i < k; ++i) nk *= n;
    s += w * unit_phase(frac_mul(nk, alpha));
  }
  return s;
}

/// Evaluated shapes of the minor-arc bounds; diagnostic quantities with all
/// implied constants set to 1, never asserted as inequalities.
struct MinorArcBounds {
  double vinogradov = 0.0;
  double harman = 0.0;
  double ren = 0.0;
};

struct BoundParams {
  double epsilon1 = 0.01;  // the epsilon of the k >= 2 Weyl-type bound
  double c_harman = 1.0;   // log-power in the (log x)^{c'} factor
  double c_ren = 1.0;      // log-power in the (log x)^{c''} factor
};

inline MinorArcBounds eval_minor_bounds(double x, int k, int64_t q, double offset,
                                        const BoundParams& params = {}) {
  if (x < 16.0 || q < 1 || k < 1) throw std::invalid_argument("eval_minor_bounds: need x >= 16, q >= 1, k >= 1");
  double lx = std::log(x);
  double xk = std::pow(x, static_cast<double>(k));
  double qd = static_cast<double>(q);
  double core = 1.0 / qd + 1.0 / std::sqrt(x) + qd / xk;

  MinorArcBounds b;
  if (k == 1) {
    double core1 = 1.0 / qd + std::pow(x, -0.4) + qd / x;
    b.vinogradov = x * lx * lx * lx * std::sqrt(core1);
  } else {
    double K = std::ldexp(1.0, k - 1);  // K = 2^{k-1}
    b.vinogradov = std::pow(x, 1.0 + params.epsilon1) * std::pow(core, 1.0 / (K * K));
  }
  {
    double K = std::ldexp(1.0, k - 1);
    b.harman = x * std::pow(lx, params.c_harman) * std::pow(core, 1.0 / (2.0 * K * K));
  }
  {
    double gamma_k = 0.5 + std::log(static_cast<double>(k)) / std::log(2.0);
    double s = std::sqrt(qd * (1.0 + std::fabs(offset) * xk));
    b.ren = std::pow(static_cast<double>(divisor_count(q)), gamma_k) *
            (std::sqrt(x) * s + std::pow(x, 0.8) + x / s) * std::pow(lx, params.c_ren);
  }
  return b;
}

/// Arc system sizes for the circle-method experiments.  k = 1 follows the
/// P = N^{(2/3)(1-delta)} choice; k = 2 uses P = N^{(1/3)(1-delta)} with the
/// refined second split at P' = N^{1/3}.
struct ArcParameters {
  int64_t P = 0, Q = 0;
  int64_t P_refined = 0, Q_refined = 0;
};

inline ArcParameters choose_arc_parameters(int64_t N, int k, double delta = 0.5) {
  if (N < 32 || (k != 1 && k != 2)) throw std::invalid_argument("choose_arc_parameters: need N >= 32, k in {1,2}");
  if (!(delta >= 0.5 && delta < 1.0)) throw std::invalid_argument("choose_arc_parameters: delta in [1/2, 1)");
  double nd = static_cast<double>(N);
  double expo = (k == 1 ? 2.0 / 3.0 : 1.0 / 3.0) * (1.0 - delta);
  ArcParameters a;
  a.P = std::max<int64_t>(2, static_cast<int64_t>(std::pow(nd, expo) * (1.0 + 1e-12) + 1e-9));
  a.Q = std::max<int64_t>(2 * a.P + 1, N / a.P);
  a.P_refined = std::max<int64_t>(2, iroot(N, 3));
  a.Q_refined = std::max<int64_t>(2 * a.P_refined + 1, N / a.P_refined);
  return a;
}

/// One grid point of an arc experiment.
struct ExpSumSample {
  double alpha = 0.0;
  int k = 1;
  std::complex<double> value;  // T_{k,1}
  double h_abs = 0.0;          // |H_{k,u'}|
  ArcLabel primary;
  std::optional<ArcLabel> refined;  // second-level split, minor points only
  RationalApprox approx;
  MinorArcBounds bounds;
};

/// Classifies and evaluates T/H on the grid alpha = j/grid_size, recording
/// the two-level arc split and the minor-arc bound shapes.
inline std::vector<ExpSumSample> arc_experiment(const SieveTable& sieve, int64_t N, int k,
                                                int64_t P, int64_t Q, int64_t grid_size,
                                                const CoeffFn& coeff = nullptr,
                                                unsigned threads = 1,
                                                const BoundParams& params = {}) {
  if (grid_size < 2) throw std::invalid_argument("arc_experiment: grid_size must be >= 2");
  if (!(1 < 2 * P && 2 * P < Q)) throw std::invalid_argument("arc_experiment: need 1 < 2P < Q");
  int64_t Pref = std::max<int64_t>(2, iroot(N, 3));
  int64_t Qref = std::max<int64_t>(2 * Pref + 1, N / Pref);
  double x = std::pow(static_cast<double>(N), 1.0 / k);

  std::vector<ExpSumSample> rows(static_cast<size_t>(grid_size));
  parallel_for(grid_size, threads, [&](int64_t j) {
    double alpha = static_cast<double>(j) / static_cast<double>(grid_size);
    ExpSumSample s;
    s.alpha = alpha;
    s.k = k;
    s.primary = classify_arc(alpha, P, Q);
    if (s.primary.kind == ArcKind::Minor) {
      s.refined = classify_arc(alpha, Pref, Qref, ArcLevel::Refined);
    }
    s.approx = dirichlet_approx(alpha, Q);
    s.value = t_sum(sieve, N, k, alpha, coeff);
    s.h_abs = std::abs(h_sum(sieve, N, k, alpha));
    s.bounds = eval_minor_bounds(std::max(16.0, x), k, s.approx.q, s.approx.offset, params);
    rows[static_cast<size_t>(j)] = s;
  });
  return rows;
}

struct ParsevalResult {
  std::complex<double> exact;
  std::complex<double> dft;
};

/// Circle integral int_0^1 T_{k,1} prod H_{k,u'} e(-N alpha) d alpha two ways:
/// exact convolution over J_{k,u}(N) versus a discrete average over M >= uN+1
/// equispaced points, which integrates trigonometric polynomials of degree
/// <= uN exactly.
inline ParsevalResult parseval_count(const SieveTable& sieve, int64_t N, int k, int u,
                                     const CoeffFn& coeff = nullptr, int64_t M = 0) {
  if (!((k == 1 && u == 3) || (k == 2 && u == 5)))
    throw std::invalid_argument("parseval_count: supported pairs are (k,u) = (1,3), (2,5)");
  if (N < 2 || N > sieve.limit()) throw std::out_of_range("parseval_count: N beyond sieve limit");
  if (M == 0) M = u * N + 2;
  if (M < u * N + 1) throw std::invalid_argument("parseval_count: M below uN + 1 would alias");

  std::complex<double> exact{0.0, 0.0};
  if (k == 1) {
    auto pairs = goldbach_pair_table(sieve, N);
    for (int64_t p : sieve.primes()) {
      if (p > N) break;
      auto c = static_cast<double>(pairs.counts[static_cast<size_t>(N - p)]);
      if (c != 0.0) exact += (coeff ? coeff(p) : 1.0) * c;
    }
  } else {
    auto qt = build_quinary_table(sieve, N);
    for (int64_t p : sieve.primes()) {
      int64_t ps = p * p;
      if (ps > N) break;
      auto c = static_cast<double>(qt.c4[static_cast<size_t>(N - ps)]);
      if (c != 0.0) exact += (coeff ? coeff(p) : 1.0) * c;
    }
  }

  std::complex<double> dft{0.0, 0.0};
  for (int64_t j = 0; j < M; ++j) {
    double alpha = static_cast<double>(j) / static_cast<double>(M);
    auto t = t_sum(sieve, N, k, alpha, coeff);
    auto h = h_sum(sieve, N, k, alpha);
    std::complex<double> prod = t;
    for (int i = 1; i < u; ++i) prod *= h;
    dft += prod * unit_phase(-frac_mul(N, alpha));
  }
  dft /= static_cast<double>(M);
  return {exact, dft};
}

}  // namespace wglab
