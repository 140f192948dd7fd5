#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vfc/config_io.hpp"
#include "vfc/game.hpp"
#include "vfc/stage_game.hpp"

namespace vfc_test {

inline vfc::GameConfig game_from(const std::string& game_json) {
  return vfc::parse_config(R"({"name": "t", "game": )" + game_json + "}", true).base;
}

inline std::string list_json(const std::vector<double>& xs) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ", " : "") << xs[i];
  os << ']';
  return os.str();
}

// Same instance as the reference model: two VFNs of 6 and 4 GHz, one epoch.
inline vfc::GameConfig physical_game(int agents, vfc::Round horizon, std::uint64_t seed,
                                     const std::string& learner = "{}") {
  std::ostringstream os;
  os << R"({"num_agents": )" << agents << R"(, "horizon": )" << horizon << R"(, "seed": )" << seed
     << R"(, "env": {"vfn_cpu_ghz": [6, 4]}, "agent": {"learner": )" << learner << "}}";
  return game_from(os.str());
}

// Tabular costs comm[k] + comp[k] m sqrt(c) with the adversary scaling fixed at 1.
inline vfc::GameConfig tabular_game(int agents, const std::vector<double>& comm, const std::vector<double>& comp,
                                    vfc::Round horizon, std::uint64_t seed, const std::string& agent = "{}") {
  std::ostringstream os;
  os << R"({"num_agents": )" << agents << R"(, "horizon": )" << horizon << R"(, "seed": )" << seed
     << R"(, "env": {"model": "tabular", "tabular": {"comm": )" << list_json(comm) << R"(, "comp": )"
     << list_json(comp) << R"(}, "adversary": {"phases": [{"rounds": )" << horizon << R"(, "means": )"
     << list_json(std::vector<double>(comm.size(), 1.0)) << R"(}], "noise_halfwidth": 0}}, "agent": )" << agent
     << "}";
  return game_from(os.str());
}

// Hand-rolled generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  std::uint64_t seed() { return eng_(); }

  std::vector<double> simplex(std::size_t k) {
    std::vector<double> p(k);
    double total = 0.0;
    for (double& x : p) total += x = -std::log(uniform(1e-12, 1.0));
    for (double& x : p) x /= total;
    return p;
  }

  // Congestion game: cost(n, k, c) = base[n][k] + slope[n][k] (c - 1)^power,
  // nondecreasing in c, all values in [0, 1].
  vfc::StageGame congestion_game(int agents, int arms, bool linear = false) {
    std::vector<std::vector<vfc::ArmId>> cands(static_cast<std::size_t>(agents));
    for (auto& c : cands) {
      for (int k = 0; k < arms; ++k) c.push_back(k);
    }
    std::vector<double> table;
    const double power = linear ? 1.0 : uniform(0.5, 2.0);
    for (int n = 0; n < agents; ++n)
      for (int k = 0; k < arms; ++k) {
        table.push_back(uniform(0.05, 0.5));
        table.push_back(uniform(0.0, 0.5 / std::pow(std::max(1, agents - 1), power)));
      }
    return vfc::StageGame(cands, arms, [table, arms, power](vfc::AgentId n, vfc::ArmId k, int c) {
      const auto i = 2 * (static_cast<std::size_t>(n) * static_cast<std::size_t>(arms) + static_cast<std::size_t>(k));
      return table[i] + table[i + 1] * std::pow(c - 1.0, power);
    });
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace vfc_test
