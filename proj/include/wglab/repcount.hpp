#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wglab/sieve.hpp"
#include "wglab/util.hpp"

namespace wglab {

enum class CountKind { Goldbach2, Ternary, QuinarySquares };

/// Exact representation counts indexed by N; ordered tuples throughout.
struct CountTable {
  CountKind kind = CountKind::Goldbach2;
  int64_t limit = 0;
  std::vector<int64_t> counts;

  int64_t at(int64_t N) const {
    if (N < 0 || N > limit) throw std::out_of_range("CountTable::at: N beyond table limit");
    return counts[static_cast<size_t>(N)];
  }
};

/// Ordered prime pairs (p1, p2) with p1 + p2 = M.
inline int64_t count_goldbach2(const SieveTable& sieve, int64_t M) {
  if (M < 0) return 0;
  if (M > sieve.limit()) throw std::out_of_range("count_goldbach2: M beyond sieve limit");
  int64_t c = 0;
  for (int64_t p : sieve.primes()) {
    if (2 * p > M) break;
    if (sieve.is_prime(M - p)) c += (2 * p == M) ? 1 : 2;
  }
  return c;
}

/// counts[m] = #ordered prime pairs summing to m, for every m <= X.
inline CountTable goldbach_pair_table(const SieveTable& sieve, int64_t X) {
  if (X < 0 || X > sieve.limit()) throw std::out_of_range("goldbach_pair_table: X beyond sieve limit");
  CountTable t{CountKind::Goldbach2, X, std::vector<int64_t>(static_cast<size_t>(X) + 1, 0)};
  const auto& primes = sieve.primes();
  for (size_t i = 0; i < primes.size(); ++i) {
    int64_t p = primes[i];
    if (2 * p > X) break;
    for (size_t j = i; j < primes.size(); ++j) {
      int64_t s = p + primes[j];
      if (s > X) break;
      t.counts[static_cast<size_t>(s)] += (i == j) ? 1 : 2;
    }
  }
  return t;
}

/// Ordered prime triples summing to N, straight from the definition.
inline int64_t count_ternary(const SieveTable& sieve, int64_t N) {
  if (N < 0) return 0;
  if (N > sieve.limit()) throw std::out_of_range("count_ternary: N beyond sieve limit");
  int64_t c = 0;
  for (int64_t p1 : sieve.primes()) {
    if (p1 + 4 > N) break;
    for (int64_t p2 : sieve.primes()) {
      int64_t r = N - p1 - p2;
      if (r < 2) break;
      if (sieve.is_prime(r)) ++c;
    }
  }
  return c;
}

/// Ternary counts for every N <= X by double self-convolution of the prime
/// indicator.  Parallelizes over disjoint output blocks.
inline CountTable count_ternary_range(const SieveTable& sieve, int64_t X, unsigned threads = 1) {
  if (X < 6) throw std::invalid_argument("count_ternary_range: X must be >= 6");
  if (X > sieve.limit()) throw std::out_of_range("count_ternary_range: X beyond sieve limit");
  CountTable pairs = goldbach_pair_table(sieve, X);
  CountTable t{CountKind::Ternary, X, std::vector<int64_t>(static_cast<size_t>(X) + 1, 0)};
  const auto& primes = sieve.primes();
  parallel_for(X + 1, threads, [&](int64_t n) {
    int64_t c = 0;
    for (int64_t p : primes) {
      if (p + 4 > n) break;
      c += pairs.counts[static_cast<size_t>(n - p)];
    }
    t.counts[static_cast<size_t>(n)] = c;
  });
  return t;
}

/// Unordered (multiset) ternary count, exposed for diagnostics.
inline int64_t count_ternary_multisets(const SieveTable& sieve, int64_t N) {
  if (N < 0) return 0;
  if (N > sieve.limit()) throw std::out_of_range("count_ternary_multisets: N beyond sieve limit");
  int64_t c = 0;
  const auto& primes = sieve.primes();
  for (size_t i = 0; i < primes.size() && 3 * primes[i] <= N; ++i) {
    for (size_t j = i; j < primes.size(); ++j) {
      int64_t r = N - primes[i] - primes[j];
      if (r < primes[j]) break;
      if (sieve.is_prime(r)) ++c;
    }
  }
  return c;
}

/// Convolution tables for five prime squares: r2(m) counts ordered pairs of
/// prime squares summing to m, c4 = r2 * r2.
struct QuinaryTable {
  int64_t limit = 0;
  std::vector<int64_t> prime_squares;  // p^2 <= limit
  std::vector<int64_t> r2;
  std::vector<int64_t> c4;
};

inline QuinaryTable build_quinary_table(const SieveTable& sieve, int64_t X) {
  if (X < 0) throw std::invalid_argument("build_quinary_table: X must be >= 0");
  if (iroot(X, 2) > sieve.limit()) throw std::out_of_range("build_quinary_table: sieve too small");
  QuinaryTable t;
  t.limit = X;
  for (int64_t p : sieve.primes()) {
    if (p > X / p) break;
    t.prime_squares.push_back(p * p);
  }
  t.r2.assign(static_cast<size_t>(X) + 1, 0);
  for (size_t i = 0; i < t.prime_squares.size(); ++i) {
    for (size_t j = i; j < t.prime_squares.size(); ++j) {
      int64_t s = t.prime_squares[i] + t.prime_squares[j];
      if (s > X) break;
      t.r2[static_cast<size_t>(s)] += (i == j) ? 1 : 2;
    }
  }
  // Meet in the middle: convolve the sparse support of r2 with itself.
  std::vector<std::pair<int64_t, int64_t>> support;
  for (int64_t m = 0; m <= X; ++m) {
    if (t.r2[static_cast<size_t>(m)]) support.emplace_back(m, t.r2[static_cast<size_t>(m)]);
  }
  t.c4.assign(static_cast<size_t>(X) + 1, 0);
  for (size_t i = 0; i < support.size(); ++i) {
    auto [mi, vi] = support[i];
    if (2 * mi > X) break;
    t.c4[static_cast<size_t>(2 * mi)] += vi * vi;
    for (size_t j = i + 1; j < support.size(); ++j) {
      int64_t s = mi + support[j].first;
      if (s > X) break;
      t.c4[static_cast<size_t>(s)] += 2 * vi * support[j].second;
    }
  }
  return t;
}

/// Ordered 5-tuples of primes with p1^2 + ... + p5^2 = N.
inline int64_t count_quinary_squares(const QuinaryTable& table, int64_t N) {
  if (N < 0) return 0;
  if (N > table.limit) throw std::out_of_range("count_quinary_squares: N beyond table limit");
  int64_t c = 0;
  for (int64_t ps : table.prime_squares) {
    if (ps > N) break;
    c += table.c4[static_cast<size_t>(N - ps)];
  }
  return c;
}

inline int64_t count_quinary_squares(const SieveTable& sieve, int64_t N) {
  if (N < 0) return 0;
  return count_quinary_squares(build_quinary_table(sieve, N), N);
}

inline CountTable quinary_range(const QuinaryTable& table, unsigned threads = 1) {
  CountTable t{CountKind::QuinarySquares, table.limit,
               std::vector<int64_t>(static_cast<size_t>(table.limit) + 1, 0)};
  parallel_for(table.limit + 1, threads, [&](int64_t n) {
    int64_t c = 0;
    for (int64_t ps : table.prime_squares) {
      if (ps > n) break;
      c += table.c4[static_cast<size_t>(n - ps)];
    }
    t.counts[static_cast<size_t>(n)] = c;
  });
  return t;
}

struct FourSquareDiag {
  int64_t total = 0;    // ordered (p1,p2,p3,p4), all <= X, p1^2+p2^2 = p3^2+p4^2
  int64_t offdiag = 0;  // total minus the 2 pi(X)^2 - pi(X) diagonal tuples
};

inline FourSquareDiag count_foursquare_diag(const SieveTable& sieve, int64_t X) {
  if (X < 2) throw std::invalid_argument("count_foursquare_diag: X must be >= 2");
  if (X > sieve.limit()) throw std::out_of_range("count_foursquare_diag: X beyond sieve limit");
  std::vector<int64_t> sums;
  const auto& primes = sieve.primes();
  size_t np = 0;
  while (np < primes.size() && primes[np] <= X) ++np;
  sums.reserve(np * np);
  for (size_t i = 0; i < np; ++i) {
    for (size_t j = 0; j < np; ++j) sums.push_back(primes[i] * primes[i] + primes[j] * primes[j]);
  }
  std::sort(sums.begin(), sums.end());
  FourSquareDiag r;
  for (size_t i = 0; i < sums.size();) {
    size_t j = i;
    while (j < sums.size() && sums[j] == sums[i]) ++j;
    auto mult = static_cast<int64_t>(j - i);
    r.total += mult * mult;
    i = j;
  }
  auto pi = static_cast<int64_t>(np);
  r.offdiag = r.total - (2 * pi * pi - pi);
  return r;
}

}  // namespace wglab
