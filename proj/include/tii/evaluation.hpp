#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "tii/embedding.hpp"
#include "tii/graph.hpp"

namespace tii {

using ModelScores = std::map<std::string, double>;

// stable TII - shuffled TII for each stable model (signed).
std::map<std::string, double> gap_statistics(const ModelScores& tii_by_model,
                                             const std::set<std::string>& stable,
                                             const std::string& shuffled);

// Scenarios whose top-scoring model is stable. A tie for the top counts as a
// win when a stable model is among the tied.
std::size_t win_count(const std::vector<ModelScores>& per_scenario,
                      const std::set<std::string>& stable);

struct ValidationThresholds {
  double gap = 0.25;
  // Required wins; unset means every scenario.
  std::optional<std::size_t> wins;
};

struct NamedGap {
  std::string model;
  std::size_t scenario = 0;
  double gap = 0.0;
};

struct ValidationEntry {
  std::string spec;
  std::vector<NamedGap> gaps;
  std::size_t win_count = 0;
  std::size_t scenario_count = 0;
  bool passed = false;
  std::vector<std::string> reasons;  // failing criteria
};

// passed <=> every gap >= thresholds.gap and wins >= required wins.
ValidationEntry judge_index(const std::string& spec, std::vector<NamedGap> gaps,
                            std::size_t wins, std::size_t scenario_count,
                            const ValidationThresholds& thresholds);

// Gaps of every stable model in every scenario, plus the win count.
ValidationEntry validate_index(const std::string& spec,
                               const std::vector<ModelScores>& per_scenario,
                               const std::set<std::string>& stable,
                               const std::string& shuffled,
                               const ValidationThresholds& thresholds);

// Area under the ROC curve with mid-rank ties; labels are 0/1. Needs at least
// one positive and one negative label.
double roc_auc(std::span<const double> scores, std::span<const std::uint8_t> labels);

struct AucResult {
  std::vector<std::size_t> steps;   // t of each defined AUC (scored against G_{t+1})
  std::vector<double> per_step;
  std::vector<std::size_t> skipped; // G_{t+1} had no edges or every edge
  double mean = 0.0;
};

// For t < T-1, scores every pair i < j by <R_t[i], R_t[j]> against the edges
// of G_{t+1}.
AucResult link_prediction_auc(const EmbeddingSeries& e, const DynamicGraph& g);

// Average-rank Spearman rho. When either list is constant the correlation is
// undefined: it is reported as 1 if the rank vectors coincide (e.g. both
// constant) and 0 otherwise, with a warning.
double spearman_rank_correlation(std::span<const double> xs,
                                 std::span<const double> ys);

}  // namespace tii
