#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wglab/sieve.hpp"
#include "wglab/util.hpp"

namespace wglab {
namespace detail {

// Two NTT-friendly primes whose product covers the tau(n) range
// (|tau(n)| <= d(n) n^{11/2} < 2.5e35 for n <= 1e6, well under p1*p2/2).
inline constexpr uint64_t kNttP1 = 4179340454199820289ull;  // 29 * 2^57 + 1
inline constexpr uint64_t kNttG1 = 3;
inline constexpr uint64_t kNttP2 = 1945555039024054273ull;  // 27 * 2^56 + 1
inline constexpr uint64_t kNttG2 = 5;

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

inline void ntt_inplace(std::vector<uint64_t>& a, bool invert, uint64_t mod, uint64_t g) {
  size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    uint64_t w = powmod_u64(g, (mod - 1) / len, mod);
    if (invert) w = powmod_u64(w, mod - 2, mod);
    for (size_t i = 0; i < n; i += len) {
      uint64_t wn = 1;
      for (size_t k = 0; k < len / 2; ++k) {
        uint64_t u = a[i + k];
        uint64_t v = mulmod_u64(a[i + k + len / 2], wn, mod);
        uint64_t s = u + v;
        a[i + k] = s >= mod ? s - mod : s;
        a[i + k + len / 2] = u >= v ? u - v : u + mod - v;
        wn = mulmod_u64(wn, w, mod);
      }
    }
  }
  if (invert) {
    uint64_t ninv = powmod_u64(n % mod, mod - 2, mod);
    for (auto& x : a) x = mulmod_u64(x, ninv, mod);
  }
}

// Residues mod `mod` of the first out_len coefficients of a*a.  The
// transform covers the full product, so no wrap-around correction is needed.
template <typename Int>
std::vector<uint64_t> ntt_square_mod(const std::vector<Int>& a, size_t out_len, uint64_t mod,
                                     uint64_t g) {
  size_t n = std::bit_ceil(2 * a.size() - 1);
  std::vector<uint64_t> f(n, 0);
  auto m = static_cast<int64_t>(mod);
  for (size_t i = 0; i < a.size(); ++i) {
    auto r = static_cast<int64_t>(a[i] % m);
    if (r < 0) r += m;
    f[i] = static_cast<uint64_t>(r);
  }
  ntt_inplace(f, false, mod, g);
  for (auto& x : f) x = mulmod_u64(x, x, mod);
  ntt_inplace(f, true, mod, g);
  f.resize(out_len);
  return f;
}

// Balanced CRT lift from residues mod p1, p2 to a signed value in
// (-p1 p2 / 2, p1 p2 / 2].
inline int128 crt_balanced(uint64_t r1, uint64_t r2) {
  static const uint64_t inv_p1 = powmod_u64(kNttP1 % kNttP2, kNttP2 - 2, kNttP2);
  uint64_t d = (r2 + kNttP2 - r1 % kNttP2) % kNttP2;
  uint64_t t = mulmod_u64(d, inv_p1, kNttP2);
  auto v = static_cast<unsigned __int128>(kNttP1) * t + r1;
  auto m = static_cast<unsigned __int128>(kNttP1) * kNttP2;
  if (v > m / 2) return static_cast<int128>(v) - static_cast<int128>(m);
  return static_cast<int128>(v);
}

/// Signed product coefficients of a*a (exact, CRT over both primes).
template <typename Int>
std::vector<int128> square_exact(const std::vector<Int>& a, size_t out_len) {
  auto r1 = ntt_square_mod(a, out_len, kNttP1, kNttG1);
  auto r2 = ntt_square_mod(a, out_len, kNttP2, kNttG2);
  std::vector<int128> out(out_len);
  for (size_t i = 0; i < out_len; ++i) out[i] = crt_balanced(r1[i], r2[i]);
  return out;
}

}  // namespace detail

/// Ramanujan tau, normalized eigenvalues and Sato-Tate angles for the
/// weight-12 level-1 form Delta.  Immutable after construction.
class HeckeTable {
 public:
  int64_t limit() const { return limit_; }

  /// tau(n), exact.
  int128 tau(int64_t n) const {
    if (n < 1 || n > limit_) throw std::out_of_range("HeckeTable::tau: n beyond table limit");
    return tau_[static_cast<size_t>(n)];
  }

  /// lambda_f(n) = tau(n) / n^{11/2}.
  double lambda(int64_t n) const {
    if (n < 1 || n > limit_) throw std::out_of_range("HeckeTable::lambda: n beyond table limit");
    return lambda_[static_cast<size_t>(n)];
  }

  const std::vector<int64_t>& primes() const { return primes_; }

  /// theta_p = arccos(lambda_f(p)/2) in [0, pi].
  double theta(int64_t p) const {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it == primes_.end() || *it != p)
      throw std::out_of_range("HeckeTable::theta: p not a prime within the table");
    return theta_[static_cast<size_t>(it - primes_.begin())];
  }

  double cos_theta(int64_t p) const {
    if (!std::binary_search(primes_.begin(), primes_.end(), p))
      throw std::out_of_range("HeckeTable::cos_theta: p not a prime within the table");
    return std::clamp(lambda(p) / 2.0, -1.0, 1.0);
  }

  friend HeckeTable build_hecke(const SieveTable& sieve, int64_t limit);

 private:
  int64_t limit_ = 0;
  std::vector<int128> tau_;
  std::vector<double> lambda_;
  std::vector<int64_t> primes_;
  std::vector<double> theta_;
};

/// Expands Delta = q prod (1-q^n)^24 through the cube-of-eta identity:
/// prod (1-q^n)^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2} is squared three times
/// (eta^3 -> eta^6 -> eta^12 -> eta^24), the last two by exact NTT/CRT
/// convolution.
inline HeckeTable build_hecke(const SieveTable& sieve, int64_t limit) {
  if (limit < 2) throw std::invalid_argument("build_hecke: limit must be >= 2");
  if (limit > sieve.limit()) throw std::out_of_range("build_hecke: sieve smaller than limit");
  auto L = static_cast<size_t>(limit);  // coefficients 0 .. L-1 of the eta powers

  // eta^3: sparse, O(sqrt(L)) terms.
  std::vector<int64_t> tri;
  std::vector<int64_t> val;
  for (int64_t k = 0;; ++k) {
    int64_t t = k * (k + 1) / 2;
    if (t >= static_cast<int64_t>(L)) break;
    tri.push_back(t);
    val.push_back((k % 2 == 0 ? 1 : -1) * (2 * k + 1));
  }

  // eta^6 by direct sparse convolution.
  std::vector<int64_t> f6(L, 0);
  for (size_t i = 0; i < tri.size(); ++i) {
    int64_t ti = tri[i], vi = val[i];
    if (2 * ti < static_cast<int64_t>(L)) f6[static_cast<size_t>(2 * ti)] += vi * vi;
    for (size_t j = i + 1; j < tri.size(); ++j) {
      int64_t s = ti + tri[j];
      if (s >= static_cast<int64_t>(L)) break;
      f6[static_cast<size_t>(s)] += 2 * vi * val[j];
    }
  }

  auto f12big = detail::square_exact(f6, L);
  std::vector<int64_t> f12(L);
  for (size_t i = 0; i < L; ++i) f12[i] = static_cast<int64_t>(f12big[i]);
  auto f24 = detail::square_exact(f12, L);

  HeckeTable t;
  t.limit_ = limit;
  t.tau_.assign(L + 1, 0);
  t.lambda_.assign(L + 1, 0.0);
  t.lambda_[1] = 1.0;
  t.tau_[1] = 1;
  for (int64_t n = 1; n <= limit; ++n) {
    t.tau_[static_cast<size_t>(n)] = f24[static_cast<size_t>(n - 1)];
    auto num = static_cast<long double>(t.tau_[static_cast<size_t>(n)]);
    t.lambda_[static_cast<size_t>(n)] =
        static_cast<double>(num / std::pow(static_cast<long double>(n), 5.5L));
  }
  for (int64_t p : sieve.primes()) {
    if (p > limit) break;
    t.primes_.push_back(p);
    double c = std::clamp(t.lambda_[static_cast<size_t>(p)] / 2.0, -1.0, 1.0);
    t.theta_.push_back(std::acos(c));
  }
  return t;
}

/// lambda_{sym^j f}(p) = U_j(cos theta_p), Chebyshev of the second kind;
/// at theta_p in {0, pi} this is the limit value +-(j+1).
inline double sym_coeff(const HeckeTable& table, int64_t j, int64_t p) {
  if (j < 0) throw std::invalid_argument("sym_coeff: j must be >= 0");
  double c = table.cos_theta(p);
  if (c == 1.0) return static_cast<double>(j + 1);
  if (c == -1.0) return (j % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(j + 1);
  double u0 = 1.0, u1 = 2.0 * c;
  if (j == 0) return u0;
  for (int64_t i = 1; i < j; ++i) {
    double u2 = 2.0 * c * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

struct RankinSelbergCoeff {
  double tensor = 0.0;   // lambda_{pi x pi~}(p) = U_j(cos theta_p)^2
  double adjoint = 0.0;  // lambda_{Ad pi}(p) = tensor - 1
};

inline RankinSelbergCoeff rankin_selberg_coeff(const HeckeTable& table, int64_t j, int64_t p) {
  double u = sym_coeff(table, j, p);
  return {u * u, u * u - 1.0};
}

/// Prime-power coefficient of -L'/L for sym^j: a_{sym^j}(p^r) = U_j(cos r theta_p).
inline double satake_power_sum(const HeckeTable& table, int64_t j, int64_t p, int64_t r) {
  if (j < 0 || r < 1) throw std::invalid_argument("satake_power_sum: need j >= 0, r >= 1");
  double c = std::cos(static_cast<double>(r) * table.theta(p));
  if (c >= 1.0) return static_cast<double>(j + 1);
  if (c <= -1.0) return (j % 2 == 0 ? 1.0 : -1.0) * static_cast<double>(j + 1);
  double u0 = 1.0, u1 = 2.0 * c;
  if (j == 0) return u0;
  for (int64_t i = 1; i < j; ++i) {
    double u2 = 2.0 * c * u1 - u0;
    u0 = u1;
    u1 = u2;
  }
  return u1;
}

}  // namespace wglab
