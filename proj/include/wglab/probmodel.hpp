#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "wglab/repcount.hpp"
#include "wglab/sieve.hpp"
#include "wglab/singular.hpp"

namespace wglab {

/// Counts over the uniform space of ordered triples of positive integers
/// summing to N: the prime-first event A, the prime-pair event A', and their
/// intersection J_{1,3}(N).
struct EventCounts {
  int64_t N = 0;
  int64_t omega_size = 0;   // (N^2 - 3N + 2)/2
  int64_t count_A = 0;      // (p1, n2, n3), n2, n3 >= 1
  int64_t count_Aprime = 0; // (n1, p2, p3), 2 <= n1 <= N - 4
  int64_t count_both = 0;   // ordered prime triples
};

inline EventCounts event_counts(const SieveTable& sieve, const CountTable& pairs, int64_t N) {
  if (N < 9 || N % 2 == 0) throw std::invalid_argument("event_counts: N must be odd and >= 9");
  if (pairs.kind != CountKind::Goldbach2) throw std::invalid_argument("event_counts: pair table required");
  if (N - 2 > pairs.limit || N > sieve.limit()) throw std::out_of_range("event_counts: N beyond tables");
  EventCounts e;
  e.N = N;
  e.omega_size = (N * N - 3 * N + 2) / 2;
  for (int64_t p : sieve.primes()) {
    if (p > N - 2) break;
    e.count_A += N - p - 1;
  }
  for (int64_t m = 4; m <= N - 2; ++m) e.count_Aprime += pairs.counts[static_cast<size_t>(m)];
  for (int64_t p : sieve.primes()) {
    if (p + 4 > N) break;
    e.count_both += pairs.counts[static_cast<size_t>(N - p)];
  }
  return e;
}

/// P(A and A') / (P(A) P(A')) = count_both * omega / (count_A * count_Aprime).
inline double conjecture_ratio(const EventCounts& e) {
  if (e.count_A == 0 || e.count_Aprime == 0)
    throw std::domain_error("conjecture_ratio: undefined, an event has probability zero");
  return static_cast<double>(e.count_both) * static_cast<double>(e.omega_size) /
         (static_cast<double>(e.count_A) * static_cast<double>(e.count_Aprime));
}

inline double conjecture_ratio(const SieveTable& sieve, const CountTable& pairs, int64_t N) {
  return conjecture_ratio(event_counts(sieve, pairs, N));
}

struct GoldbachAverage {
  int64_t lhs = 0;    // sum_{n=2}^{(N-5)/2} #J_{1,2}(2n), exact
  double rhs = 0.0;   // G_{1,3}(N) N^2 / (2 log^2 N)
  double ratio = 0.0;
};

/// Goldbach-on-average comparison of the exact pair-count sum against the
/// singular-series prediction.
inline GoldbachAverage goldbach_average_check(const SieveTable& sieve, const CountTable& pairs,
                                              int64_t N, int64_t cutoff = 10000) {
  if (N < 9 || N % 2 == 0) throw std::invalid_argument("goldbach_average_check: N must be odd and >= 9");
  if (N - 5 > pairs.limit) throw std::out_of_range("goldbach_average_check: N beyond pair table");
  GoldbachAverage g;
  for (int64_t n = 2; n <= (N - 5) / 2; ++n) g.lhs += pairs.counts[static_cast<size_t>(2 * n)];
  auto series = singular_series_ternary(sieve, N, cutoff);
  double ln = std::log(static_cast<double>(N));
  g.rhs = series.value * static_cast<double>(N) * static_cast<double>(N) / (2.0 * ln * ln);
  g.ratio = static_cast<double>(g.lhs) / g.rhs;
  return g;
}

}  // namespace wglab
