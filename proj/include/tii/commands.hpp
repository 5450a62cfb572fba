#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tii/report.hpp"

namespace tii {

struct GenerateOptions {
  std::string scenario = "merge";
  std::size_t n = 300;
  std::size_t T = 100;
  std::uint64_t seed = 0;
  std::filesystem::path out;
};

// Writes the dataset and returns its total edge count.
std::size_t cmd_generate(const GenerateOptions& opt, std::ostream& msg);

struct EmbedOptions {
  std::string method = "uase";  // uase | shuffle
  std::size_t d = 64;
  std::uint64_t seed = 0;
  std::filesystem::path in;     // dataset (uase) or embedding directory (shuffle)
  std::filesystem::path out;
  std::string model_name;       // default: UASE, or <input name>-shuffled
};

void cmd_embed(const EmbedOptions& opt, std::ostream& msg);

enum class AlignedMode { off, on, both };

AlignedMode parse_aligned_mode(const std::string& text);

// "NAME=PATH"
std::pair<std::string, std::filesystem::path> parse_model_arg(const std::string& text);

struct ScoreOptions {
  std::filesystem::path dataset;
  std::vector<std::pair<std::string, std::filesystem::path>> models;
  AlignedMode aligned = AlignedMode::off;
  std::vector<std::string> specs;  // graph:repr:kernel filters; empty = all
  bool include_normalized_spectral = false;
  std::size_t k = 10;
  ReportFormat format = ReportFormat::csv;
  std::filesystem::path out;       // empty = stdout
};

ScoreReport build_score_report(const ScoreOptions& opt);
void cmd_score(const ScoreOptions& opt, std::ostream& out, std::ostream& msg);

struct ValidateOptions {
  std::vector<std::filesystem::path> reports;
  std::vector<std::string> stable;
  std::string shuffled;
  ValidationThresholds thresholds;
  ReportFormat format = ReportFormat::csv;
  std::filesystem::path out;
};

ValidationReport build_validation_report(const std::vector<ScoreReport>& reports,
                                         const ValidateOptions& opt);
// Returns the exit code: 0 when some spec passes, 2 otherwise.
int cmd_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& msg);

struct EvaluateOptions {
  std::filesystem::path dataset;
  std::vector<std::pair<std::string, std::filesystem::path>> models;
  std::string spec = "euclidean:euclidean:pearson";
  bool aligned = false;
  ReportFormat format = ReportFormat::csv;
  std::filesystem::path out;
};

EvaluationReport build_evaluation_report(const EvaluateOptions& opt, std::ostream& msg);
void cmd_evaluate(const EvaluateOptions& opt, std::ostream& out, std::ostream& msg);

}  // namespace tii
