#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wglab/util.hpp"

namespace wglab {

/// Primes, primality flags and prime-counting prefix up to a fixed limit.
/// Immutable after construction; shared freely across threads.
class SieveTable {
 public:
  int64_t limit() const { return limit_; }
  const std::vector<int64_t>& primes() const { return primes_; }

  bool is_prime(int64_t n) const {
    if (n < 0 || n > limit_) throw std::out_of_range("SieveTable::is_prime: n beyond table limit");
    return (words_[static_cast<size_t>(n >> 6)] >> (n & 63)) & 1u;
  }

  /// pi(n): number of primes <= n.
  int64_t pi(int64_t n) const {
    if (n < 0 || n > limit_) throw std::out_of_range("SieveTable::pi: n beyond table limit");
    size_t w = static_cast<size_t>(n >> 6);
    uint64_t mask = (n & 63) == 63 ? ~0ull : ((1ull << ((n & 63) + 1)) - 1);
    return static_cast<int64_t>(rank_[w]) + std::popcount(words_[w] & mask);
  }

  friend SieveTable build_sieve(int64_t limit, int64_t segment_size);

 private:
  int64_t limit_ = 0;
  std::vector<uint64_t> words_;   // bit n set iff n prime
  std::vector<uint32_t> rank_;    // rank_[w] = #primes below word w
  std::vector<int64_t> primes_;
};

/// Segmented Eratosthenes sieve; memory during marking is bounded by the
/// segment size regardless of the limit.
inline SieveTable build_sieve(int64_t limit, int64_t segment_size = 1 << 20) {
  if (limit < 2) throw std::invalid_argument("build_sieve: limit must be >= 2");
  if (segment_size < 64) segment_size = 64;

  // Base primes up to sqrt(limit) by plain sieve.
  int64_t root = iroot(limit, 2);
  std::vector<uint8_t> base(static_cast<size_t>(root) + 1, 1);
  std::vector<int64_t> base_primes;
  for (int64_t i = 2; i <= root; ++i) {
    if (!base[static_cast<size_t>(i)]) continue;
    base_primes.push_back(i);
    for (int64_t j = i * i; j <= root; j += i) base[static_cast<size_t>(j)] = 0;
  }

  SieveTable t;
  t.limit_ = limit;
  size_t nwords = static_cast<size_t>(limit >> 6) + 1;
  t.words_.assign(nwords, 0);
  std::vector<uint8_t> seg(static_cast<size_t>(segment_size));
  for (int64_t lo = 0; lo <= limit; lo += segment_size) {
    int64_t hi = std::min(limit, lo + segment_size - 1);
    int64_t len = hi - lo + 1;
    std::fill(seg.begin(), seg.begin() + len, 1);
    if (lo == 0) {
      seg[0] = 0;
      if (len > 1) seg[1] = 0;
    }
    for (int64_t p : base_primes) {
      if (p * p > hi) break;
      int64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (int64_t j = start; j <= hi; j += p) seg[static_cast<size_t>(j - lo)] = 0;
    }
    for (int64_t n = lo; n <= hi; ++n) {
      if (!seg[static_cast<size_t>(n - lo)]) continue;
      t.words_[static_cast<size_t>(n >> 6)] |= 1ull << (n & 63);
      t.primes_.push_back(n);
    }
  }

  t.rank_.assign(nwords, 0);
  uint32_t acc = 0;
  for (size_t w = 0; w < nwords; ++w) {
    t.rank_[w] = acc;
    acc += static_cast<uint32_t>(std::popcount(t.words_[w]));
  }
  return t;
}

/// von Mangoldt function: log p on prime powers p^j, 0 otherwise.
inline double von_mangoldt(int64_t n) {
  if (n < 1) throw std::invalid_argument("von_mangoldt: n must be >= 1");
  if (n == 1) return 0.0;
  int64_t m = n;
  int64_t p = 0;
  if (m % 2 == 0) {
    p = 2;
  } else {
    for (int64_t d = 3; d * d <= m; d += 2) {
      if (m % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) p = m;  // n prime
  }
  while (m % p == 0) m /= p;
  return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

/// Table of Lambda(n) for n <= x, built from a sieve covering x.
inline std::vector<double> von_mangoldt_table(const SieveTable& sieve, int64_t x) {
  if (x < 1 || x > sieve.limit()) throw std::out_of_range("von_mangoldt_table: x beyond sieve limit");
  std::vector<double> lam(static_cast<size_t>(x) + 1, 0.0);
  for (int64_t p : sieve.primes()) {
    if (p > x) break;
    double lp = std::log(static_cast<double>(p));
    for (int64_t q = p; q <= x; q *= p) {
      lam[static_cast<size_t>(q)] = lp;
      if (q > x / p) break;  // next power would overflow past x
    }
  }
  return lam;
}

}  // namespace wglab
