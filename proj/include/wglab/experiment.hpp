#pragma once

#include <numbers>
#include <string>

#include <json.hpp>

namespace wglab {

/// Full parameter set of one CLI invocation; serializes losslessly so runs
/// can be reproduced from their recorded configuration.
struct ExperimentConfig {
  std::string command;
  int64_t N = 0;
  int k = 1;
  int u = 3;
  int64_t j = 1;
  int64_t P = 0;
  int64_t Q = 0;
  int64_t grid = 0;
  int64_t cutoff = 10000;
  int64_t limit = 0;
  int64_t range = 0;
  bool unordered = false;
  std::string kind;
  std::string mode = "sym";
  std::string coeff = "one";
  double interval_lo = 0.0;
  double interval_hi = std::numbers::pi;
  std::string n_list_path;
  std::string out_path;
  unsigned threads = 1;
  double delta_hypothesis = 0.5;  // the zero-free exponent knob
  double epsilon1 = 0.01;
  std::string format = "csv";

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

inline void to_json(nlohmann::ordered_json& j, const ExperimentConfig& c) {
  j = nlohmann::ordered_json{{"command", c.command},
                             {"N", c.N},
                             {"k", c.k},
                             {"u", c.u},
                             {"j", c.j},
                             {"P", c.P},
                             {"Q", c.Q},
                             {"grid", c.grid},
                             {"cutoff", c.cutoff},
                             {"limit", c.limit},
                             {"range", c.range},
                             {"unordered", c.unordered},
                             {"kind", c.kind},
                             {"mode", c.mode},
                             {"coeff", c.coeff},
                             {"interval_lo", c.interval_lo},
                             {"interval_hi", c.interval_hi},
                             {"n_list_path", c.n_list_path},
                             {"out_path", c.out_path},
                             {"threads", c.threads},
                             {"delta_hypothesis", c.delta_hypothesis},
                             {"epsilon1", c.epsilon1},
                             {"format", c.format}};
}

inline void from_json(const nlohmann::ordered_json& j, ExperimentConfig& c) {
  j.at("command").get_to(c.command);
  j.at("N").get_to(c.N);
  j.at("k").get_to(c.k);
  j.at("u").get_to(c.u);
  j.at("j").get_to(c.j);
  j.at("P").get_to(c.P);
  j.at("Q").get_to(c.Q);
  j.at("grid").get_to(c.grid);
  j.at("cutoff").get_to(c.cutoff);
  j.at("limit").get_to(c.limit);
  j.at("range").get_to(c.range);
  j.at("unordered").get_to(c.unordered);
  j.at("kind").get_to(c.kind);
  j.at("mode").get_to(c.mode);
  j.at("coeff").get_to(c.coeff);
  j.at("interval_lo").get_to(c.interval_lo);
  j.at("interval_hi").get_to(c.interval_hi);
  j.at("n_list_path").get_to(c.n_list_path);
  j.at("out_path").get_to(c.out_path);
  j.at("threads").get_to(c.threads);
  j.at("delta_hypothesis").get_to(c.delta_hypothesis);
  j.at("epsilon1").get_to(c.epsilon1);
  j.at("format").get_to(c.format);
}

}  // namespace wglab
