#pragma once

#include <algorithm>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "wglab/arith.hpp"
#include "wglab/experiment.hpp"
#include "wglab/expsum.hpp"
#include "wglab/hecke.hpp"
#include "wglab/probmodel.hpp"
#include "wglab/repcount.hpp"
#include "wglab/report.hpp"
#include "wglab/satotate.hpp"
#include "wglab/sieve.hpp"
#include "wglab/singular.hpp"

namespace wglab {

inline std::vector<int64_t> read_n_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open N-list file: " + path);
  std::vector<int64_t> out;
  std::string line;
  while (std::getline(in, line)) {
    size_t pos = line.find('#');
    if (pos != std::string::npos) line.resize(pos);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    out.push_back(std::stoll(line.substr(a)));
  }
  if (out.empty()) throw std::invalid_argument("N-list file is empty: " + path);
  return out;
}

namespace detail {

inline Report run_sieve(const ExperimentConfig& c) {
  auto sieve = build_sieve(c.limit);
  Report r({"p"});
  for (int64_t p : sieve.primes()) r.begin_row().cell(p);
  return r;
}

inline Report run_count(const ExperimentConfig& c) {
  Report r({"N", "count"});
  if (c.range > 0) {
    if (c.kind == "ternary") {
      auto sieve = build_sieve(std::max<int64_t>(2, c.range));
      auto table = count_ternary_range(sieve, c.range, c.threads);
      for (int64_t n = 2; n <= c.range; ++n) r.begin_row().cell(n).cell(table.at(n));
    } else if (c.kind == "goldbach2") {
      auto sieve = build_sieve(std::max<int64_t>(2, c.range));
      auto table = goldbach_pair_table(sieve, c.range);
      for (int64_t n = 2; n <= c.range; ++n) r.begin_row().cell(n).cell(table.at(n));
    } else if (c.kind == "quinary") {
      auto sieve = build_sieve(std::max<int64_t>(2, iroot(c.range, 2)));
      auto table = quinary_range(build_quinary_table(sieve, c.range), c.threads);
      for (int64_t n = 2; n <= c.range; ++n) r.begin_row().cell(n).cell(table.at(n));
    } else {
      throw std::invalid_argument("count: unknown kind " + c.kind);
    }
    return r;
  }
  int64_t n = c.N;
  if (n < 0) throw std::invalid_argument("count: N must be >= 0");
  int64_t value = 0;
  if (c.kind == "ternary") {
    auto sieve = build_sieve(std::max<int64_t>(2, n));
    value = c.unordered ? count_ternary_multisets(sieve, n) : count_ternary(sieve, n);
  } else if (c.kind == "goldbach2") {
    auto sieve = build_sieve(std::max<int64_t>(2, n));
    if (c.unordered) {
      for (int64_t p : sieve.primes()) {
        if (2 * p > n) break;
        if (sieve.is_prime(n - p)) ++value;
      }
    } else {
      value = count_goldbach2(sieve, n);
    }
  } else if (c.kind == "quinary") {
    auto sieve = build_sieve(std::max<int64_t>(2, iroot(n, 2)));
    if (c.unordered) {
      const auto& ps = sieve.primes();
      for (size_t i1 = 0; i1 < ps.size(); ++i1)
        for (size_t i2 = i1; i2 < ps.size(); ++i2)
          for (size_t i3 = i2; i3 < ps.size(); ++i3)
            for (size_t i4 = i3; i4 < ps.size(); ++i4)
              for (size_t i5 = i4; i5 < ps.size(); ++i5) {
                int64_t t = ps[i1] * ps[i1] + ps[i2] * ps[i2] + ps[i3] * ps[i3] +
                            ps[i4] * ps[i4] + ps[i5] * ps[i5];
                if (t == n) ++value;
                if (t > n) break;
              }
    } else {
      value = count_quinary_squares(sieve, n);
    }
  } else {
    throw std::invalid_argument("count: unknown kind " + c.kind);
  }
  r.begin_row().cell(n).cell(value);
  return r;
}

inline Report run_arcs(const ExperimentConfig& c) {
  int64_t P = c.P, Q = c.Q;
  if (P == 0 || Q == 0) {
    auto params = choose_arc_parameters(c.N, 1, c.delta_hypothesis);
    if (P == 0) P = params.P;
    if (Q == 0) Q = params.Q;
  }
  if (c.grid < 2) throw std::invalid_argument("arcs: grid must be >= 2");
  Report r({"alpha", "kind", "q", "a", "offset"});
  for (int64_t i = 0; i < c.grid; ++i) {
    double alpha = static_cast<double>(i) / static_cast<double>(c.grid);
    auto label = classify_arc(alpha, P, Q);
    int64_t q, a;
    double offset;
    if (label.kind == ArcKind::Major) {
      q = label.q;
      a = label.a;
      offset = static_cast<double>(static_cast<long double>(alpha) -
                                   static_cast<long double>(a) / q);
    } else {
      auto approx = dirichlet_approx(alpha, Q);
      q = approx.q;
      a = approx.a;
      offset = approx.offset;
    }
    r.begin_row()
        .cell(alpha)
        .cell(std::string(label.kind == ArcKind::Major ? "major" : "minor"))
        .cell(q)
        .cell(a)
        .cell(offset);
  }
  return r;
}

inline Report run_expsum(const ExperimentConfig& c) {
  int64_t P = c.P, Q = c.Q;
  if (P == 0 || Q == 0) {
    auto params = choose_arc_parameters(c.N, c.k, c.delta_hypothesis);
    if (P == 0) P = params.P;
    if (Q == 0) Q = params.Q;
  }
  int64_t cap = iroot(c.N, c.k);
  auto sieve = build_sieve(std::max<int64_t>(2, cap));
  CoeffFn coeff;
  HeckeTable hecke;
  if (c.coeff == "sym1") {
    hecke = build_hecke(sieve, std::max<int64_t>(2, cap));
    coeff = [&hecke](int64_t p) { return hecke.lambda(p); };
  } else if (c.coeff != "one") {
    throw std::invalid_argument("expsum: coeff must be one or sym1");
  }
  BoundParams params;
  params.epsilon1 = c.epsilon1;
  auto rows = arc_experiment(sieve, c.N, c.k, P, Q, c.grid, coeff, c.threads, params);
  Report r({"alpha", "re", "im", "abs", "arckind", "q", "a", "vino", "harman", "ren"});
  for (const auto& s : rows) {
    r.begin_row()
        .cell(s.alpha)
        .cell(s.value.real())
        .cell(s.value.imag())
        .cell(std::abs(s.value))
        .cell(std::string(s.primary.kind == ArcKind::Major ? "major" : "minor"))
        .cell(s.approx.q)
        .cell(s.approx.a)
        .cell(s.bounds.vinogradov)
        .cell(s.bounds.harman)
        .cell(s.bounds.ren);
  }
  return r;
}

inline Report run_tau(const ExperimentConfig& c) {
  auto sieve = build_sieve(std::max<int64_t>(2, c.limit));
  auto hecke = build_hecke(sieve, c.limit);
  Report r({"n", "tau", "lambda", "theta"});
  for (int64_t n = 1; n <= c.limit; ++n) {
    r.begin_row().cell(n).cell(hecke.tau(n)).cell(hecke.lambda(n));
    if (n >= 2 && sieve.is_prime(n)) r.cell(hecke.theta(n));
    else r.cell(std::string());
  }
  return r;
}

inline Report run_satotate(const ExperimentConfig& c) {
  auto ns = read_n_list(c.n_list_path);
  int64_t maxN = *std::max_element(ns.begin(), ns.end());
  auto sieve = build_sieve(std::max<int64_t>(2, maxN));
  auto pairs = goldbach_pair_table(sieve, maxN);
  auto hecke = build_hecke(sieve, maxN);
  AngleInterval I{c.interval_lo, c.interval_hi};
  auto rows = equidistribution_report(hecke, pairs, ns, I, c.threads);
  Report r({"N", "count_J", "count_J_I", "ratio", "prime_ratio", "st_measure", "discrepancy"});
  for (const auto& row : rows) {
    r.begin_row()
        .cell(row.N)
        .cell(row.count_J)
        .cell(row.count_JI)
        .cell(row.ratio)
        .cell(row.prime_ratio)
        .cell(row.st)
        .cell(row.discrepancy);
  }
  return r;
}

inline Report run_twisted(const ExperimentConfig& c) {
  TwistMode mode;
  if (c.mode == "sym") mode = TwistMode::Sym;
  else if (c.mode == "tensor") mode = TwistMode::Tensor;
  else if (c.mode == "adjoint") mode = TwistMode::Adjoint;
  else throw std::invalid_argument("twisted: mode must be sym, tensor or adjoint");

  double value = 0.0;
  if (c.k == 1) {
    auto sieve = build_sieve(std::max<int64_t>(2, c.N));
    auto pairs = goldbach_pair_table(sieve, c.N);
    auto hecke = build_hecke(sieve, std::max<int64_t>(2, c.N));
    value = twisted_sum(hecke, pairs, c.N, c.j, mode);
  } else if (c.k == 2) {
    auto sieve = build_sieve(std::max<int64_t>(2, iroot(c.N, 2)));
    auto quin = build_quinary_table(sieve, c.N);
    auto hecke = build_hecke(sieve, std::max<int64_t>(2, iroot(c.N, 2)));
    value = twisted_sum(hecke, quin, c.N, c.j, mode);
  } else {
    throw std::invalid_argument("twisted: k must be 1 or 2");
  }
  Report r({"N", "k", "j", "mode", "value"});
  r.begin_row().cell(c.N).cell(static_cast<int64_t>(c.k)).cell(c.j).cell(c.mode).cell(value);
  return r;
}

inline Report run_singular(const ExperimentConfig& c) {
  SeriesValue v;
  if (c.kind == "ternary") {
    auto sieve = build_sieve(std::max<int64_t>(2, c.cutoff));
    v = singular_series_ternary(sieve, c.N, c.cutoff);
  } else if (c.kind == "binary") {
    auto sieve = build_sieve(std::max<int64_t>(200, std::min<int64_t>(c.cutoff, 20000)));
    v = hl_binary(sieve, c.N, c.cutoff);
  } else if (c.kind == "quinary") {
    auto sieve = build_sieve(std::max<int64_t>(2, c.cutoff));
    v = singular_series_quinary(sieve, c.N, c.cutoff);
  } else {
    throw std::invalid_argument("singular: kind must be ternary, binary or quinary");
  }
  Report r({"N", "value", "tail_bound"});
  r.begin_row().cell(c.N).cell(v.value).cell(v.tail_bound);
  return r;
}

inline Report run_conjecture(const ExperimentConfig& c) {
  auto ns = read_n_list(c.n_list_path);
  int64_t maxN = *std::max_element(ns.begin(), ns.end());
  auto sieve = build_sieve(std::max<int64_t>({2, maxN, c.cutoff}));
  auto pairs = goldbach_pair_table(sieve, maxN);
  Report r({"N", "P_A", "P_Aprime", "P_both", "ratio", "goldbach_lhs", "goldbach_rhs"});
  for (int64_t n : ns) {
    auto e = event_counts(sieve, pairs, n);
    auto omega = static_cast<double>(e.omega_size);
    auto g = goldbach_average_check(sieve, pairs, n, c.cutoff);
    r.begin_row()
        .cell(n)
        .cell(static_cast<double>(e.count_A) / omega)
        .cell(static_cast<double>(e.count_Aprime) / omega)
        .cell(static_cast<double>(e.count_both) / omega)
        .cell(conjecture_ratio(e))
        .cell(g.lhs)
        .cell(g.rhs);
  }
  return r;
}

}  // namespace detail

/// Dispatches one configured experiment to the library and returns its
/// report; identical configs produce identical reports.
inline Report run_experiment(const ExperimentConfig& c) {
  if (c.command == "sieve") return detail::run_sieve(c);
  if (c.command == "count") return detail::run_count(c);
  if (c.command == "arcs") return detail::run_arcs(c);
  if (c.command == "expsum") return detail::run_expsum(c);
  if (c.command == "tau") return detail::run_tau(c);
  if (c.command == "satotate") return detail::run_satotate(c);
  if (c.command == "twisted") return detail::run_twisted(c);
  if (c.command == "singular") return detail::run_singular(c);
  if (c.command == "conjecture") return detail::run_conjecture(c);
  throw std::invalid_argument("unknown command: " + c.command);
}

/// Renders per the configured format; CSV headers are written only when the
/// report goes to a file.
inline std::string render_report(const Report& report, const ExperimentConfig& c) {
  if (c.format == "json") return report.to_json();
  if (c.format != "csv") throw std::invalid_argument("format must be csv or json");
  return report.to_csv(!c.out_path.empty());
}

}  // namespace wglab
