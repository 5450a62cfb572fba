#include "tii/evaluation.hpp"

#include <algorithm>
#include <numeric>

#include "tii/error.hpp"
#include "tii/kernels.hpp"
#include "tii/log.hpp"

namespace tii {

std::map<std::string, double> gap_statistics(const ModelScores& tii_by_model,
                                             const std::set<std::string>& stable,
                                             const std::string& shuffled) {
  const auto base = tii_by_model.find(shuffled);
  if (base == tii_by_model.end()) {
    throw ConfigError("shuffled baseline '" + shuffled + "' not among models");
  }
  if (stable.empty()) throw ConfigError("no stable model designated");
  std::map<std::string, double> gaps;
  for (const auto& name : stable) {
    const auto it = tii_by_model.find(name);
    if (it == tii_by_model.end()) {
      throw ConfigError("stable model '" + name + "' not among models");
    }
    gaps[name] = it->second - base->second;
  }
  return gaps;
}

std::size_t win_count(const std::vector<ModelScores>& per_scenario,
                      const std::set<std::string>& stable) {
  if (per_scenario.empty()) throw InputError("no scenarios");
  std::size_t wins = 0;
  for (const auto& scores : per_scenario) {
    if (scores.empty()) throw InputError("scenario has no models");
    double best = scores.begin()->second;
    for (const auto& [name, v] : scores) best = std::max(best, v);
    const bool stable_on_top = std::any_of(
        scores.begin(), scores.end(), [&](const auto& kv) {
          return kv.second == best && stable.count(kv.first) > 0;
        });
    if (stable_on_top) ++wins;
  }
  return wins;
}

ValidationEntry judge_index(const std::string& spec, std::vector<NamedGap> gaps,
                            std::size_t wins, std::size_t scenario_count,
                            const ValidationThresholds& thresholds) {
  ValidationEntry entry;
  entry.spec = spec;
  entry.gaps = std::move(gaps);
  entry.win_count = wins;
  entry.scenario_count = scenario_count;
  for (const auto& g : entry.gaps) {
    if (!(g.gap >= thresholds.gap)) {
      entry.reasons.push_back("gap below threshold (" + g.model + ", scenario " +
                              std::to_string(g.scenario) + ": " +
                              std::to_string(g.gap) + ")");
    }
  }
  const std::size_t required = thresholds.wins.value_or(scenario_count);
  if (wins < required) {
    entry.reasons.push_back("win count " + std::to_string(wins) + "/" +
                            std::to_string(scenario_count) + " below " +
                            std::to_string(required));
  }
  entry.passed = entry.reasons.empty();
  return entry;
}

ValidationEntry validate_index(const std::string& spec,
                               const std::vector<ModelScores>& per_scenario,
                               const std::set<std::string>& stable,
                               const std::string& shuffled,
                               const ValidationThresholds& thresholds) {
  std::vector<NamedGap> gaps;
  for (std::size_t s = 0; s < per_scenario.size(); ++s) {
    for (const auto& [model, gap] : gap_statistics(per_scenario[s], stable, shuffled)) {
      gaps.push_back({model, s, gap});
    }
  }
  return judge_index(spec, std::move(gaps), win_count(per_scenario, stable),
                     per_scenario.size(), thresholds);
}

double roc_auc(std::span<const double> scores,
               std::span<const std::uint8_t> labels) {
  if (scores.size() != labels.size()) {
    throw DimensionError("scores and labels differ in length");
  }
  const auto positives = static_cast<double>(
      std::count_if(labels.begin(), labels.end(), [](auto l) { return l != 0; }));
  const double negatives = static_cast<double>(labels.size()) - positives;
  if (positives == 0.0 || negatives == 0.0) {
    throw InputError("AUC needs both positive and negative labels");
  }
  const auto ranks = average_ranks(scores);
  double rank_sum = 0.0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (labels[i] != 0) rank_sum += ranks[i];
  }
  return (rank_sum - positives * (positives + 1.0) / 2.0) / (positives * negatives);
}

AucResult link_prediction_auc(const EmbeddingSeries& e, const DynamicGraph& g) {
  if (e.T() != g.T() || e.n() != g.n()) {
    throw DimensionError("embedding shape does not match graph");
  }
  const std::size_t n = g.n();
  const std::size_t pairs = n * (n - 1) / 2;
  AucResult out;
  std::vector<double> scores(pairs);
  std::vector<std::uint8_t> labels(pairs);
  for (std::size_t t = 0; t + 1 < g.T(); ++t) {
    const auto& next = g[t + 1];
    if (next.edge_count() == 0 || next.edge_count() == pairs) {
      warn("link prediction: snapshot " + std::to_string(t + 1) +
           " has no edges or every edge; AUC undefined, step skipped");
      out.skipped.push_back(t);
      continue;
    }
    const Eigen::MatrixXd gram = e[t] * e[t].transpose();
    const Eigen::MatrixXd adj = next.adjacency();
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++k) {
        const auto ii = static_cast<Eigen::Index>(i);
        const auto jj = static_cast<Eigen::Index>(j);
        scores[k] = gram(ii, jj);
        labels[k] = adj(ii, jj) != 0.0 ? 1 : 0;
      }
    }
    out.steps.push_back(t);
    out.per_step.push_back(roc_auc(scores, labels));
  }
  if (!out.per_step.empty()) {
    out.mean = std::accumulate(out.per_step.begin(), out.per_step.end(), 0.0) /
               static_cast<double>(out.per_step.size());
  } else {
    warn("link prediction: no step had a defined AUC");
  }
  return out;
}

double spearman_rank_correlation(std::span<const double> xs,
                                 std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw DimensionError("rank correlation inputs differ in length");
  }
  if (xs.size() < 2) throw DimensionError("rank correlation needs at least 2 points");
  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v[0]; });
  };
  if (constant(xs) || constant(ys)) {
    warn("rank correlation undefined for constant input; tie convention applied");
  }
  return spearman_rho(xs, ys);
}

}  // namespace tii
