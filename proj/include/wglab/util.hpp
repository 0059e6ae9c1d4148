#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace wglab {

using int128 = __int128;

inline std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::reverse(s.begin(), s.end());
  return s;
}

/// Largest r >= 0 with r^k <= n.
inline int64_t iroot(int64_t n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("iroot: need n >= 0, k >= 1");
  if (k == 1 || n < 2) return n;
  auto pow_le = [&](int64_t r, int64_t bound) {
    int128 acc = 1;
    for (int i = 0; i < k; ++i) {
      acc *= r;
      if (acc > bound) return false;
    }
    return true;
  };
  auto r = static_cast<int64_t>(std::pow(static_cast<double>(n), 1.0 / k));
  while (r > 0 && !pow_le(r, n)) --r;
  while (pow_le(r + 1, n)) ++r;
  return r;
}

// frac(m * alpha) in [0,1).  A bare double product loses ~log2(m) low bits of
// the phase; the fma recovers them, so the result is accurate to a few ulp.
inline double frac_mul(int64_t m, double alpha) {
  double md = static_cast<double>(m);
  double hi = md * alpha;
  double lo = std::fma(md, alpha, -hi);
  double f = hi - std::floor(hi) + lo;
  f -= std::floor(f);
  if (f >= 1.0) f -= 1.0;
  if (f < 0.0) f += 1.0;
  return f;
}

/// e(t) = exp(2*pi*i*t).
inline std::complex<double> unit_phase(double t) {
  double w = 2.0 * std::numbers::pi * t;
  return {std::cos(w), std::sin(w)};
}

/// Locale-independent formatting with 12 significant digits.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

// Static block partition; each worker owns a contiguous index range, so
// callers writing result[i] from fn(i) stay race-free and deterministic.
template <typename Fn>
void parallel_for(int64_t total, unsigned threads, Fn&& fn) {
  if (total <= 0) return;
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned workers = std::min<unsigned>(std::min(threads, hw), static_cast<unsigned>(total));
  if (workers <= 1) {
    for (int64_t i = 0; i < total; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  int64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    int64_t lo = static_cast<int64_t>(w) * chunk;
    int64_t hi = std::min<int64_t>(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (int64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace wglab
