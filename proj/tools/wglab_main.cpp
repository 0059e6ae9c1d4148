// Command-line front end; all numeric work lives in the library headers.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wglab/run.hpp"

namespace {

unsigned env_threads() {
  const char* env = std::getenv("WGLAB_THREADS");
  if (!env) return 1;
  long v = std::strtol(env, nullptr, 10);
  return v > 0 ? static_cast<unsigned>(v) : 1;
}

void add_common(CLI::App* sub, wglab::ExperimentConfig& cfg) {
  sub->add_option("--out", cfg.out_path, "output file (stdout if omitted)");
  sub->add_option("--threads", cfg.threads, "worker thread cap");
  sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

std::pair<double, double> parse_interval(const std::string& text) {
  size_t comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--interval", "expected lo,hi");
  return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wglab: circle-method and Waring-Goldbach experiments"};
  app.require_subcommand(1);

  wglab::ExperimentConfig cfg;
  cfg.threads = env_threads();
  std::string interval_text;

  auto* sieve = app.add_subcommand("sieve", "emit primes up to a limit");
  sieve->add_option("--limit", cfg.limit, "sieve limit")->required();
  add_common(sieve, cfg);

  auto* count = app.add_subcommand("count", "exact representation counts");
  count->add_option("--kind", cfg.kind, "ternary, goldbach2 or quinary")->required();
  count->add_option("--N", cfg.N, "single target N");
  count->add_option("--range", cfg.range, "tabulate all N <= range");
  count->add_flag("--unordered", cfg.unordered, "multiset diagnostics instead of ordered tuples");
  add_common(count, cfg);

  auto* arcs = app.add_subcommand("arcs", "major/minor arc classification on a grid");
  arcs->add_option("--N", cfg.N, "derive P, Q from N when not given");
  arcs->add_option("--P", cfg.P, "major-arc denominator bound");
  arcs->add_option("--Q", cfg.Q, "approximation quality");
  arcs->add_option("--grid", cfg.grid, "grid size")->required();
  arcs->add_option("--delta", cfg.delta_hypothesis, "zero-free exponent knob in [1/2, 1)");
  add_common(arcs, cfg);

  auto* expsum = app.add_subcommand("expsum", "exponential sums over the arc grid");
  expsum->add_option("--N", cfg.N)->required();
  expsum->add_option("--k", cfg.k, "power (1 or 2)");
  expsum->add_option("--P", cfg.P);
  expsum->add_option("--Q", cfg.Q);
  expsum->add_option("--grid", cfg.grid)->required();
  expsum->add_option("--coeff", cfg.coeff, "one or sym1")->check(CLI::IsMember({"one", "sym1"}));
  expsum->add_option("--delta", cfg.delta_hypothesis);
  expsum->add_option("--epsilon1", cfg.epsilon1);
  add_common(expsum, cfg);

  auto* tau = app.add_subcommand("tau", "Ramanujan tau / eigenvalue table");
  tau->add_option("--limit", cfg.limit)->required();
  add_common(tau, cfg);

  auto* satotate = app.add_subcommand("satotate", "angle equidistribution over prime triples");
  satotate->add_option("--N-list", cfg.n_list_path, "file with one N per line")->required();
  satotate->add_option("--interval", interval_text, "angle interval lo,hi")->required();
  add_common(satotate, cfg);

  auto* twisted = app.add_subcommand("twisted", "coefficient sums over representation tuples");
  twisted->add_option("--N", cfg.N)->required();
  twisted->add_option("--k", cfg.k, "1 (ternary) or 2 (quinary)");
  twisted->add_option("--j", cfg.j, "symmetric power");
  twisted->add_option("--mode", cfg.mode, "sym, tensor or adjoint");
  add_common(twisted, cfg);

  auto* singular = app.add_subcommand("singular", "singular series and main terms");
  singular->add_option("--kind", cfg.kind, "ternary, binary or quinary")->required();
  singular->add_option("--N", cfg.N)->required();
  singular->add_option("--cutoff", cfg.cutoff, "Euler-product cutoff");
  add_common(singular, cfg);

  auto* conjecture = app.add_subcommand("conjecture", "probability-space ratios per N");
  conjecture->add_option("--N-list", cfg.n_list_path)->required();
  conjecture->add_option("--cutoff", cfg.cutoff);
  add_common(conjecture, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (!interval_text.empty()) {
    try {
      auto [lo, hi] = parse_interval(interval_text);
      cfg.interval_lo = lo;
      cfg.interval_hi = hi;
    } catch (const std::exception&) {
      std::cerr << "error: --interval expects lo,hi\n";
      return 2;
    }
  }

  try {
    auto report = wglab::run_experiment(cfg);
    auto text = wglab::render_report(report, cfg);
    if (cfg.out_path.empty()) {
      std::cout << text;
    } else {
      wglab::write_file(cfg.out_path, text);
    }
  } catch (const std::out_of_range& e) {
    std::cerr << "error (out of range): " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
