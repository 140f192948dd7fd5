#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vfc/game.hpp"

namespace vfc {

struct Variant {
  std::string name;
  GameConfig game;  // seed filled in per replication
};

struct ExperimentSpec {
  std::string name;
  std::string description;
  GameConfig base;
  std::vector<Variant> variants;
  std::uint64_t master_seed = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> metrics;
  std::string output_dir;
  std::optional<std::size_t> trace_limit;  // nullopt keeps every trace
  double xi_window = 0.2;
  std::string canonical_json;  // sorted-key dump of the source document
  std::vector<std::string> warnings;

  // Replaces the seed list with `count` seeds derived from master_seed.
  void set_replications(std::size_t count);
};

const std::vector<std::string>& known_metrics();

ExperimentSpec parse_config(const std::string& text, bool strict, const std::string& source = "<config>");
ExperimentSpec load_config(const std::filesystem::path& path, bool strict);

// Self-contained JSON form of one game, as embedded in trace headers.
std::string game_to_json(const GameConfig& config);
GameConfig game_from_json(const std::string& text);

std::uint64_t fnv1a64(const std::string& bytes);

// Human-readable key reference.
std::string config_schema();

}  // namespace vfc
