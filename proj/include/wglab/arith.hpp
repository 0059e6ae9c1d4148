#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wglab/util.hpp"

namespace wglab {

inline int64_t mulmod(int64_t a, int64_t b, int64_t m) {
  return static_cast<int64_t>(static_cast<int128>(a) * b % m);
}

inline int64_t powmod(int64_t a, int64_t e, int64_t m) {
  int64_t r = 1 % m;
  a %= m;
  if (a < 0) a += m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

inline std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<std::pair<int64_t, int>> f;
  for (int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    f.emplace_back(d, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

inline int64_t euler_phi(int64_t n) {
  int64_t r = n;
  for (auto [p, e] : factorize(n)) r -= r / p;
  return r;
}

inline int mobius(int64_t n) {
  int m = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

inline int64_t divisor_count(int64_t n) {
  int64_t d = 1;
  for (auto [p, e] : factorize(n)) d *= e + 1;
  return d;
}

/// alpha = a/q + offset with (a,q)=1, q <= Q and |offset| <= 1/(qQ).
struct RationalApprox {
  int64_t a = 0;
  int64_t q = 1;
  double offset = 0.0;
};

// Continued-fraction convergents of the exact binary rational behind the
// double.  Returns the convergent with the largest q <= Q; the next
// convergent has denominator > Q, which forces |alpha - a/q| < 1/(qQ).
inline RationalApprox dirichlet_approx(double alpha, int64_t Q) {
  if (Q < 1) throw std::invalid_argument("dirichlet_approx: Q must be >= 1");
  if (!std::isfinite(alpha)) throw std::invalid_argument("dirichlet_approx: alpha must be finite");
  double whole = std::floor(alpha);
  double y = alpha - whole;
  if (y == 0.0) return {static_cast<int64_t>(whole), 1, 0.0};

  int e = 0;
  double mant = std::frexp(y, &e);  // y = mant * 2^e, mant in [0.5, 1)
  auto num0 = static_cast<int64_t>(std::ldexp(mant, 53));
  int shift = 53 - e;
  if (shift > 126) {
    // y < 2^-73: a = 0, q = 1 already satisfies the constraint for any
    // representable Q.
    return {static_cast<int64_t>(whole), 1, y};
  }

  unsigned __int128 num = static_cast<uint64_t>(num0);
  unsigned __int128 den = static_cast<unsigned __int128>(1) << shift;
  int64_t hm1 = 1, hm2 = 0;  // numerators of convergents i-1, i-2
  int64_t km1 = 0, km2 = 1;  // denominators
  int64_t best_a = 0, best_q = 1;
  while (den != 0) {
    unsigned __int128 term = num / den;
    unsigned __int128 rem = num % den;
    if (km1 >= 1 && term > static_cast<unsigned __int128>(Q)) {
      break;  // next convergent denominator would exceed Q
    }
    auto ai = static_cast<int64_t>(term);
    int128 knew = static_cast<int128>(ai) * km1 + km2;
    if (knew > Q) break;
    int64_t hnew = ai * hm1 + hm2;
    hm2 = hm1;
    hm1 = hnew;
    km2 = km1;
    km1 = static_cast<int64_t>(knew);
    best_a = hm1;
    best_q = km1;
    num = den;
    den = rem;
  }
  long double off = static_cast<long double>(y) - static_cast<long double>(best_a) / best_q;
  return {best_a + static_cast<int64_t>(whole) * best_q, best_q, static_cast<double>(off)};
}

enum class ArcKind { Major, Minor };
enum class ArcLevel { Primary, Refined };

/// Classification of a point of the unit circle against a (P, Q) arc system.
/// Major arcs carry the certifying center a/q; the refined level records the
/// second-pass split of the minor arcs.
struct ArcLabel {
  ArcKind kind = ArcKind::Minor;
  ArcLevel level = ArcLevel::Primary;
  int64_t q = 0;
  int64_t a = 0;
};

// Major(q,a) iff some q <= P, (a,q)=1 has |alpha - a/q| <= 1/(qQ).  Arcs with
// q <= P < Q/2 are pairwise disjoint, so the first certifier found is the
// only one.
inline ArcLabel classify_arc(double alpha, int64_t P, int64_t Q,
                             ArcLevel level = ArcLevel::Primary) {
  if (!(1 < 2 * P && 2 * P < Q)) throw std::invalid_argument("classify_arc: need 1 < 2P < Q");
  double y = alpha - std::floor(alpha);
  for (int64_t q = 1; q <= P; ++q) {
    auto a = static_cast<int64_t>(std::llround(y * static_cast<double>(q)));
    long double diff = std::fabs(static_cast<long double>(y) - static_cast<long double>(a) / q);
    if (diff * q * Q > 1.0L) continue;
    if (a == q) a = 0;  // wrap-around: the arc around 1 is the arc around 0
    if (std::gcd(a, q) != 1) continue;
    return {ArcKind::Major, level, q, a};
  }
  return {ArcKind::Minor, level, 0, 0};
}

/// A Dirichlet character mod q as its full value table (0 off units).
struct DirichletCharacter {
  int64_t modulus = 1;
  std::vector<std::complex<double>> values;

  std::complex<double> operator()(int64_t n) const {
    int64_t r = n % modulus;
    if (r < 0) r += modulus;
    return values[static_cast<size_t>(r)];
  }
};

namespace detail {

// One prime-power block of (Z/q)^* together with discrete logarithms.
// Odd p^e is cyclic; 2^e (e >= 3) splits as <-1> x <5>.
struct UnitBlock {
  int64_t mod = 1;
  std::vector<int64_t> orders;                // cyclic factor orders
  std::vector<std::vector<int32_t>> dlogs;    // per factor, indexed by residue
};

inline int64_t primitive_root_odd(int64_t p, int e) {
  std::vector<int64_t> qs;
  for (auto [f, k] : factorize(p - 1)) qs.push_back(f);
  int64_t g = 2;
  for (;; ++g) {
    bool ok = true;
    for (int64_t f : qs) {
      if (powmod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) break;
  }
  if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
  return g;
}

inline UnitBlock unit_block(int64_t p, int e) {
  UnitBlock b;
  int64_t m = 1;
  for (int i = 0; i < e; ++i) m *= p;
  b.mod = m;
  if (p == 2) {
    if (e == 1) return b;  // trivial group
    if (e == 2) {
      b.orders = {2};
      b.dlogs = {std::vector<int32_t>(4, -1)};
      b.dlogs[0][1] = 0;
      b.dlogs[0][3] = 1;
      return b;
    }
    int64_t half = m >> 2;  // order of 5 mod 2^e
    b.orders = {2, half};
    b.dlogs.assign(2, std::vector<int32_t>(static_cast<size_t>(m), -1));
    int64_t v = 1;
    for (int64_t j = 0; j < half; ++j) {
      b.dlogs[0][static_cast<size_t>(v)] = 0;
      b.dlogs[1][static_cast<size_t>(v)] = static_cast<int32_t>(j);
      int64_t w = m - v;  // -5^j
      b.dlogs[0][static_cast<size_t>(w)] = 1;
      b.dlogs[1][static_cast<size_t>(w)] = static_cast<int32_t>(j);
      v = mulmod(v, 5, m);
    }
    return b;
  }
  int64_t ord = m / p * (p - 1);
  int64_t g = primitive_root_odd(p, e);
  b.orders = {ord};
  b.dlogs.assign(1, std::vector<int32_t>(static_cast<size_t>(m), -1));
  int64_t v = 1;
  for (int64_t j = 0; j < ord; ++j) {
    b.dlogs[0][static_cast<size_t>(v)] = static_cast<int32_t>(j);
    v = mulmod(v, g, m);
  }
  return b;
}

}  // namespace detail

/// All phi(q) Dirichlet characters mod q, principal character included,
/// closed under conjugation.  Values are exact roots of unity up to fp
/// round-off.
inline std::vector<DirichletCharacter> characters_mod(int64_t q) {
  if (q < 1) throw std::invalid_argument("characters_mod: q must be >= 1");
  if (q == 1) {
    DirichletCharacter chi;
    chi.modulus = 1;
    chi.values = {std::complex<double>(1.0, 0.0)};
    return {chi};
  }
  std::vector<detail::UnitBlock> blocks;
  std::vector<int64_t> orders;  // flattened cyclic factor orders
  for (auto [p, e] : factorize(q)) {
    auto b = detail::unit_block(p, e);
    for (int64_t o : b.orders) orders.push_back(o);
    blocks.push_back(std::move(b));
  }

  // Discrete log tuple for each residue coprime to q (CRT per block).
  size_t nfac = orders.size();
  std::vector<std::vector<int32_t>> dlog_of(static_cast<size_t>(q));
  for (int64_t r = 0; r < q; ++r) {
    if (std::gcd(r, q) != 1) continue;
    std::vector<int32_t> t;
    t.reserve(nfac);
    bool ok = true;
    for (const auto& b : blocks) {
      int64_t rb = r % b.mod;
      for (size_t i = 0; i < b.orders.size(); ++i) {
        int32_t d = b.dlogs[i][static_cast<size_t>(rb)];
        if (d < 0) ok = false;
        t.push_back(d);
      }
    }
    if (ok) dlog_of[static_cast<size_t>(r)] = std::move(t);
  }

  int64_t phi = 1;
  for (int64_t o : orders) phi *= o;
  std::vector<DirichletCharacter> chars;
  chars.reserve(static_cast<size_t>(phi));
  std::vector<int64_t> idx(nfac, 0);
  for (int64_t c = 0; c < phi; ++c) {
    DirichletCharacter chi;
    chi.modulus = q;
    chi.values.assign(static_cast<size_t>(q), std::complex<double>(0.0, 0.0));
    for (int64_t r = 0; r < q; ++r) {
      if (std::gcd(r, q) != 1) continue;
      const auto& t = dlog_of[static_cast<size_t>(r)];
      double phase = 0.0;
      for (size_t i = 0; i < nfac; ++i) {
        phase += static_cast<double>(idx[i]) * t[i] / static_cast<double>(orders[i]);
      }
      chi.values[static_cast<size_t>(r)] = unit_phase(phase - std::floor(phase));
    }
    chars.push_back(std::move(chi));
    for (size_t i = 0; i < nfac; ++i) {  // mixed-radix increment
      if (++idx[i] < orders[i]) break;
      idx[i] = 0;
    }
  }
  return chars;
}

/// Parseval identity behind the character-sum reduction:
/// sum_chi |sum_{(h,q/d)=1} conj(chi(h)) e(a d^k h^k / q)|^2 = phi(q/d)^2.
/// Returns (lhs by direct double summation, rhs).
inline std::pair<double, double> gauss_parseval_check(int64_t q, int64_t d, int64_t a, int k) {
  if (q < 1 || d < 1 || q % d != 0) throw std::invalid_argument("gauss_parseval_check: need d | q");
  if (std::gcd(a, q) != 1) throw std::invalid_argument("gauss_parseval_check: need gcd(a, q) = 1");
  if (k < 1) throw std::invalid_argument("gauss_parseval_check: need k >= 1");
  int64_t qd = q / d;
  auto chars = characters_mod(qd);

  // e(a d^k h^k / q) for each h; exponent reduced mod q in exact arithmetic.
  std::vector<std::complex<double>> phase(static_cast<size_t>(qd));
  int64_t dk = powmod(d % q, k, q);
  for (int64_t h = 1; h <= qd; ++h) {
    if (std::gcd(h, qd) != 1) continue;
    int64_t num = mulmod(mulmod(a % q, dk, q), powmod(h, k, q), q);
    phase[static_cast<size_t>(h % qd)] = unit_phase(static_cast<double>(num) / static_cast<double>(q));
  }

  double lhs = 0.0;
  for (const auto& chi : chars) {
    std::complex<double> s{0.0, 0.0};
    for (int64_t h = 1; h <= qd; ++h) {
      if (std::gcd(h, qd) != 1) continue;
      s += std::conj(chi(h)) * phase[static_cast<size_t>(h % qd)];
    }
    lhs += std::norm(s);
  }
  auto phi = static_cast<double>(euler_phi(qd));
  return {lhs, phi * phi};
}

}  // namespace wglab
