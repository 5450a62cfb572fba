#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tii/embedding.hpp"
#include "tii/graph.hpp"
#include "tii/graph_change.hpp"
#include "tii/kernels.hpp"

namespace tii {

// One point of the design space: graph change x representation change x kernel.
struct IndexSpec {
  GraphMeasureSpec graph;
  ReprMeasureSpec repr;
  KernelSpec kernel;

  void validate() const;
  // "Euclidean/Euclidean/Pearson"; alignment is reported separately.
  std::string label() const;
  friend bool operator==(const IndexSpec&, const IndexSpec&) = default;
};

// Parses "graph:repr:kernel", e.g. "euclidean:euclidean:pearson".
// graph: euclidean | deltacon | spectral | nspectral[-k]
// repr: cosine | euclidean
// kernel: sym | gauss | kl | pearson | spearman | xcorr | dtw
// Parameters not carried by the string (sigma, eps, lag, alignment) come from
// `base`.
IndexSpec parse_index_spec(const std::string& text, const IndexSpec& base = {});
std::string format_index_spec(const IndexSpec& spec);

struct IntegrityResult {
  IndexSpec spec;
  double tii = 0.0;
  // I_t per step; present for pointwise kernels only, and then tii is its mean.
  std::optional<std::vector<double>> per_step;
};

// Applies the kernel to precomputed change series.
IntegrityResult integrity_from_series(const ChangeSeries& graph_change,
                                      const ChangeSeries& repr_change,
                                      const IndexSpec& spec);

IntegrityResult total_integrity(const DynamicGraph& g, const EmbeddingSeries& e,
                                const IndexSpec& spec);

struct DefaultSpecOptions {
  bool aligned = false;
  // Adds a fourth graph-measure block using normalized_spectral_k.
  bool include_normalized_spectral = false;
  std::size_t k = 10;
  double sigma = 0.1;
  double kl_eps = 1e-8;
  std::size_t max_lag = 3;
  std::optional<double> deltacon_epsilon;
};

// {DeltaCon, Spectral, Euclidean} x {Cosine, Euclidean} x
// {Sym, Gauss, KL, Pearson, Spearman, Xcorr, DTW}: 42 specs in table order.
std::vector<IndexSpec> default_index_specs(const DefaultSpecOptions& options = {});

using NamedEmbedding = std::pair<std::string, EmbeddingSeries>;

struct SweepCell {
  std::string model;
  std::size_t spec_index = 0;
  std::optional<IntegrityResult> result;
  std::string error;  // set when result is empty
};

// Cells are ordered spec-major, then by model in input order.
struct SweepTable {
  std::vector<IndexSpec> specs;
  std::vector<std::string> models;
  std::vector<SweepCell> cells;

  const SweepCell& at(std::size_t spec_index, std::size_t model_index) const {
    return cells[spec_index * models.size() + model_index];
  }
};

// Each graph-change series is computed once per distinct graph measure and each
// representation-change series once per (model, measure). Failures are recorded
// in the affected cells and the sweep continues.
SweepTable sweep(const DynamicGraph& g, const std::vector<NamedEmbedding>& models,
                 const std::vector<IndexSpec>& specs);

}  // namespace tii
