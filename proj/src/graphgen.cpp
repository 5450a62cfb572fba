#include "tii/graphgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string_view>

#include "fileio.hpp"
#include "tii/error.hpp"
#include "tii/rng.hpp"

namespace tii {

void SbmParams::validate() const {
  if (W.rows() != W.cols() || W.rows() == 0) {
    throw ParameterError("W must be a nonempty square matrix");
  }
  if (labels.size() != n) {
    throw ParameterError("labels must have length n");
  }
  const auto C = static_cast<std::size_t>(W.rows());
  for (Eigen::Index a = 0; a < W.rows(); ++a) {
    for (Eigen::Index b = 0; b < W.cols(); ++b) {
      const double p = W(a, b);
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ParameterError("W entry outside [0,1]");
      }
      if (p != W(b, a)) throw ParameterError("W is not symmetric");
    }
  }
  for (auto c : labels) {
    if (c >= C) throw ParameterError("label outside [0, C)");
  }
  if (alpha) {
    if (static_cast<std::size_t>(alpha->size()) != C) {
      throw ParameterError("alpha must have length C");
    }
    if ((alpha->array() < 0.0).any() ||
        std::abs(alpha->sum() - 1.0) > 1e-9) {
      throw ParameterError("alpha must be a probability vector");
    }
  }
}

std::vector<std::size_t> block_labels(std::size_t n, std::size_t communities) {
  if (communities == 0 || n % communities != 0) {
    throw ParameterError("n=" + std::to_string(n) +
                         " is not divisible by the community count " +
                         std::to_string(communities));
  }
  std::vector<std::size_t> labels(n);
  const std::size_t block = n / communities;
  for (std::size_t i = 0; i < n; ++i) labels[i] = i / block;
  return labels;
}

Snapshot sbm_sample(const SbmParams& params, std::uint64_t seed) {
  params.validate();
  Rng rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < params.n; ++i) {
    const auto li = static_cast<Eigen::Index>(params.labels[i]);
    for (std::size_t j = i + 1; j < params.n; ++j) {
      const double p = params.W(li, static_cast<Eigen::Index>(params.labels[j]));
      if (uniform01(rng) < p) {
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
  }
  return Snapshot(params.n, std::move(edges));
}

std::string to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::merge: return "merge";
    case ScenarioKind::move: return "move";
    case ScenarioKind::periodic: return "periodic";
  }
  return "unknown";
}

ScenarioKind parse_scenario(const std::string& name) {
  if (name == "merge") return ScenarioKind::merge;
  if (name == "move") return ScenarioKind::move;
  if (name == "periodic") return ScenarioKind::periodic;
  throw ParameterError("unknown scenario '" + name + "'");
}

namespace {

void check_probability(double p, std::string_view what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ParameterError(std::string(what) + " must lie in [0,1]");
  }
}

std::size_t community_count(ScenarioKind kind) {
  return kind == ScenarioKind::move ? 3 : 2;
}

Eigen::MatrixXd two_block(double within, double between) {
  Eigen::MatrixXd W(2, 2);
  W << within, between, between, within;
  return W;
}

}  // namespace

void ScenarioConfig::validate() const {
  if (T < 2) throw ParameterError("T must be at least 2");
  const std::size_t C = community_count(kind);
  if (n == 0 || n % C != 0) {
    throw ParameterError(to_string(kind) + " scenario needs n divisible by " +
                         std::to_string(C) + ", got n=" + std::to_string(n));
  }
  switch (kind) {
    case ScenarioKind::merge:
      check_probability(merge.within, "merge within probability");
      check_probability(merge.between_start, "merge start probability");
      check_probability(merge.between_end, "merge end probability");
      break;
    case ScenarioKind::move:
      check_probability(move.within, "move within probability");
      check_probability(move.cross, "move cross probability");
      break;
    case ScenarioKind::periodic:
      if (periodic.cycles == 0 || T % periodic.cycles != 0) {
        throw ParameterError("periodic scenario needs T divisible by " +
                             std::to_string(periodic.cycles) +
                             ", got T=" + std::to_string(T));
      }
      if (T / periodic.cycles < 2) {
        throw ParameterError("periodic cycle must span at least 2 steps");
      }
      check_probability(periodic.in_low, "periodic in_low");
      check_probability(periodic.in_high, "periodic in_high");
      check_probability(periodic.out_min, "periodic out_min");
      check_probability(periodic.out_max, "periodic out_max");
      if (periodic.in_low > periodic.in_high ||
          periodic.out_min > periodic.out_max) {
        throw ParameterError("periodic bounds are inverted");
      }
      break;
  }
}

SbmParams scenario_params(const ScenarioConfig& cfg, std::size_t t) {
  cfg.validate();
  if (t >= cfg.T) throw ParameterError("timestep beyond T");
  const std::size_t C = community_count(cfg.kind);
  SbmParams params;
  params.n = cfg.n;
  params.labels = block_labels(cfg.n, C);
  params.alpha = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(C),
                                           1.0 / static_cast<double>(C));

  switch (cfg.kind) {
    case ScenarioKind::merge: {
      const auto& m = cfg.merge;
      const double frac =
          static_cast<double>(t) / static_cast<double>(cfg.T - 1);
      const double between =
          m.between_start + (m.between_end - m.between_start) * frac;
      params.W = two_block(m.within, between);
      break;
    }
    case ScenarioKind::move: {
      const auto& m = cfg.move;
      Eigen::MatrixXd W = Eigen::MatrixXd::Constant(3, 3, m.cross);
      W.diagonal().setConstant(m.within);
      const bool moved = 2 * t >= cfg.T;
      if (moved && m.mode == MoveMode::adopt_row) {
        // Community 1 takes community 0's connection pattern.
        const Eigen::RowVectorXd pattern = W.row(0);
        W.row(1) = pattern;
        W.col(1) = pattern.transpose();
        W(1, 1) = pattern(1);
      } else if (moved) {
        for (auto& label : params.labels) {
          if (label == 1) label = 0;
        }
      }
      params.W = W;
      break;
    }
    case ScenarioKind::periodic: {
      const auto& p = cfg.periodic;
      const std::size_t period = cfg.T / p.cycles;
      const double mid = 0.5 * (p.in_low + p.in_high);
      const double amp = 0.5 * (p.in_high - p.in_low);
      // Phase from t mod period keeps the schedule exactly periodic.
      const double phase = 2.0 * std::numbers::pi *
                           static_cast<double>(t % period) /
                           static_cast<double>(period);
      const double p_in = mid + amp * std::sin(phase);
      const double p_out = std::clamp(p.out_offset - p_in, p.out_min, p.out_max);
      params.W = two_block(p_in, p_out);
      break;
    }
  }
  return params;
}

DynamicGraph generate_scenario(const ScenarioConfig& cfg) {
  cfg.validate();
  std::vector<Snapshot> snapshots;
  snapshots.reserve(cfg.T);
  for (std::size_t t = 0; t < cfg.T; ++t) {
    snapshots.push_back(
        sbm_sample(scenario_params(cfg, t), stream_seed(cfg.seed, t)));
  }
  return DynamicGraph(std::move(snapshots));
}

DynamicGraph scenario_merge(ScenarioConfig cfg) {
  cfg.kind = ScenarioKind::merge;
  return generate_scenario(cfg);
}

DynamicGraph scenario_move(ScenarioConfig cfg) {
  cfg.kind = ScenarioKind::move;
  return generate_scenario(cfg);
}

DynamicGraph scenario_periodic(ScenarioConfig cfg) {
  cfg.kind = ScenarioKind::periodic;
  return generate_scenario(cfg);
}

nlohmann::json scenario_params_json(const ScenarioConfig& cfg) {
  switch (cfg.kind) {
    case ScenarioKind::merge:
      return {{"within", cfg.merge.within},
              {"between_start", cfg.merge.between_start},
              {"between_end", cfg.merge.between_end}};
    case ScenarioKind::move:
      return {{"within", cfg.move.within},
              {"cross", cfg.move.cross},
              {"mode", cfg.move.mode == MoveMode::adopt_row ? "adopt_row"
                                                            : "relabel"}};
    case ScenarioKind::periodic:
      return {{"in_low", cfg.periodic.in_low},
              {"in_high", cfg.periodic.in_high},
              {"out_offset", cfg.periodic.out_offset},
              {"out_min", cfg.periodic.out_min},
              {"out_max", cfg.periodic.out_max},
              {"cycles", cfg.periodic.cycles}};
  }
  return nlohmann::json::object();
}

std::string format_edges(const Snapshot& snapshot) {
  std::string out;
  out.reserve(snapshot.edge_count() * 8);
  for (const auto& [u, v] : snapshot.edges()) {
    out += std::to_string(u);
    out += ',';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

namespace {

std::filesystem::path edges_path(const std::filesystem::path& dir,
                                 std::size_t t) {
  return dir / ("t" + std::to_string(t) + ".edges");
}

Snapshot parse_edges(const std::filesystem::path& path, std::size_t n) {
  const std::string text = detail::read_file(path);
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto where = path.string() + ":" + std::to_string(line_no);
    const auto comma = line.find(',');
    NodeId u = 0;
    NodeId v = 0;
    if (comma == std::string_view::npos ||
        !detail::parse_int(line.substr(0, comma), u) ||
        !detail::parse_int(line.substr(comma + 1), v)) {
      throw FormatError(where + ": expected 'u,v'");
    }
    if (u >= v) throw FormatError(where + ": expected u < v");
    if (v >= n) throw FormatError(where + ": node id out of range");
    edges.emplace_back(u, v);
  }
  try {
    return Snapshot(n, std::move(edges));
  } catch (const InputError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace

void save_dataset(const DynamicGraph& graph, const std::filesystem::path& dir,
                  const DatasetInfo& info) {
  detail::ensure_directory(dir);
  for (std::size_t t = 0; t < graph.T(); ++t) {
    detail::write_file_atomic(edges_path(dir, t), format_edges(graph[t]));
  }
  nlohmann::ordered_json meta;
  meta["n"] = graph.n();
  meta["T"] = graph.T();
  meta["scenario"] = info.scenario;
  meta["seed"] = info.seed ? nlohmann::ordered_json(*info.seed)
                           : nlohmann::ordered_json(nullptr);
  meta["params"] = info.params;
  detail::write_file_atomic(dir / "meta.json", meta.dump(2) + "\n");
}

Dataset load_dataset(const std::filesystem::path& dir) {
  const auto meta_path = dir / "meta.json";
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(detail::read_file(meta_path));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(meta_path.string() + ": " + e.what());
  }
  std::size_t n = 0;
  std::size_t T = 0;
  try {
    n = meta.at("n").get<std::size_t>();
    T = meta.at("T").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(meta_path.string() + ": " + e.what());
  }
  std::vector<Snapshot> snapshots;
  snapshots.reserve(T);
  for (std::size_t t = 0; t < T; ++t) {
    const auto path = edges_path(dir, t);
    if (!std::filesystem::exists(path)) {
      throw FormatError(path.string() + ": missing snapshot file (meta T=" +
                        std::to_string(T) + ")");
    }
    snapshots.push_back(parse_edges(path, n));
  }
  if (std::filesystem::exists(edges_path(dir, T))) {
    throw FormatError(dir.string() + ": more snapshot files than meta T=" +
                      std::to_string(T));
  }
  DatasetInfo info;
  info.scenario = meta.value("scenario", std::string("external"));
  if (meta.contains("seed") && meta["seed"].is_number_unsigned()) {
    info.seed = meta["seed"].get<std::uint64_t>();
  }
  if (meta.contains("params")) info.params = meta["params"];
  try {
    return Dataset{DynamicGraph(std::move(snapshots)), std::move(info)};
  } catch (const Error& e) {
    throw FormatError(dir.string() + ": " + e.what());
  }
}

}  // namespace tii
