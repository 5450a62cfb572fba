#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "tii/graph.hpp"

namespace tii {

// Stochastic block model: pair (i, j) is an edge with probability
// W(labels[i], labels[j]).
struct SbmParams {
  std::size_t n = 0;
  std::vector<std::size_t> labels;
  Eigen::MatrixXd W;
  std::optional<Eigen::VectorXd> alpha;  // informational; labels are fixed

  void validate() const;  // throws ParameterError
};

// Equal contiguous blocks: first n/C nodes in community 0, and so on.
std::vector<std::size_t> block_labels(std::size_t n, std::size_t communities);

// One Bernoulli draw per unordered pair, pairs visited row-major (i < j).
// A pair is an edge when uniform01(rng) < p, with rng = mt19937_64(seed).
Snapshot sbm_sample(const SbmParams& params, std::uint64_t seed);

enum class ScenarioKind { merge, move, periodic };

std::string to_string(ScenarioKind kind);
ScenarioKind parse_scenario(const std::string& name);

struct MergeParams {
  double within = 0.9;
  double between_start = 0.1;
  double between_end = 0.9;
};

enum class MoveMode {
  // Community-1 nodes take over community 0's row of W: 0.9 to community 0,
  // cross probability to everyone else (including former community-1 peers).
  adopt_row,
  // Community-1 nodes are relabelled as community 0 (one merged block).
  relabel,
};

struct MoveParams {
  double within = 0.9;
  double cross = 0.05;
  MoveMode mode = MoveMode::adopt_row;
};

// p_in(t)  = mid + amp * sin(2 pi t / period), spanning [in_low, in_high]
// p_out(t) = clamp(out_offset - p_in(t), out_min, out_max)
// period   = T / cycles
struct PeriodicParams {
  double in_low = 0.2;
  double in_high = 0.9;
  double out_offset = 1.0;
  double out_min = 0.05;
  double out_max = 0.9;
  std::size_t cycles = 5;
};

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::merge;
  std::size_t n = 300;
  std::size_t T = 100;
  std::uint64_t seed = 0;
  MergeParams merge;
  MoveParams move;
  PeriodicParams periodic;

  void validate() const;  // throws ParameterError
};

// Block model in force at snapshot t.
SbmParams scenario_params(const ScenarioConfig& cfg, std::size_t t);

// Snapshot t is sbm_sample(scenario_params(cfg, t), stream_seed(cfg.seed, t)).
DynamicGraph generate_scenario(const ScenarioConfig& cfg);

DynamicGraph scenario_merge(ScenarioConfig cfg);
DynamicGraph scenario_move(ScenarioConfig cfg);
DynamicGraph scenario_periodic(ScenarioConfig cfg);

nlohmann::json scenario_params_json(const ScenarioConfig& cfg);

// On-disk dataset: <dir>/meta.json {n, T, scenario, seed, params} and one
// <dir>/t<index>.edges per snapshot with sorted "u,v" lines, u < v.
struct DatasetInfo {
  std::string scenario = "external";
  std::optional<std::uint64_t> seed;
  nlohmann::json params = nlohmann::json::object();
};

struct Dataset {
  DynamicGraph graph;
  DatasetInfo info;
};

std::string format_edges(const Snapshot& snapshot);
void save_dataset(const DynamicGraph& graph, const std::filesystem::path& dir,
                  const DatasetInfo& info);
Dataset load_dataset(const std::filesystem::path& dir);

}  // namespace tii
