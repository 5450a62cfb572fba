#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tii/evaluation.hpp"
#include "tii/integrity.hpp"

namespace tii {

inline constexpr const char* kScoreSchema = "tii.score.v1";
inline constexpr const char* kValidationSchema = "tii.validation.v1";
inline constexpr const char* kEvaluationSchema = "tii.evaluation.v1";

enum class ReportFormat { csv, json };

ReportFormat parse_format(const std::string& name);

// One row per (alignment, index spec, model).
// CSV columns: aligned,delta_g,delta_r,kernel,spec,model,tii,error
struct ScoreRow {
  bool aligned = false;
  std::string delta_g;   // DeltaCon | Spectral | Euclidean | NSpectral-k
  std::string delta_r;   // Cosine | Euclidean
  std::string kernel;    // Sym | Gauss | KL | Pearson | Spearman | Xcorr | DTW
  std::string spec;      // canonical graph:repr:kernel
  std::string model;
  std::optional<double> tii;
  std::string error;

  friend bool operator==(const ScoreRow&, const ScoreRow&) = default;
};

struct ScoreReport {
  std::string dataset;
  std::vector<ScoreRow> rows;
};

std::vector<ScoreRow> score_rows(const SweepTable& table);

std::string to_csv(const ScoreReport& report);
std::string to_json(const ScoreReport& report);
// Accepts either serialization (JSON is detected by a leading '{').
ScoreReport parse_score_report(const std::string& text);

struct ValidationReport {
  std::vector<std::string> scenarios;  // source report per scenario
  std::vector<std::string> stable;
  std::string shuffled;
  ValidationThresholds thresholds;
  // entry.spec holds "<aligned>|<spec>", e.g. "No|euclidean:euclidean:pearson"
  std::vector<ValidationEntry> entries;

  std::vector<std::string> passing() const;
};

// CSV columns: aligned,spec,gaps,win_count,scenario_count,passed,reasons
std::string to_csv(const ValidationReport& report);
std::string to_json(const ValidationReport& report);

struct EvaluationRow {
  std::string model;
  double tii = 0.0;
  double mean_auc = 0.0;
  std::size_t auc_steps = 0;
};

struct EvaluationReport {
  std::string dataset;
  std::string spec;
  bool aligned = false;
  std::vector<EvaluationRow> rows;
  std::optional<double> spearman_rho;  // needs >= 2 models
};

// CSV columns: model,tii,mean_auc,auc_steps,spearman_rho (rho repeated per row)
std::string to_csv(const EvaluationReport& report);
std::string to_json(const EvaluationReport& report);

}  // namespace tii
