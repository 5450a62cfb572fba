#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tii/graph.hpp"

namespace tii {

// Per-step change scalars, each in [0,1]; length T-1 for a T-snapshot series.
class ChangeSeries {
 public:
  ChangeSeries() = default;
  explicit ChangeSeries(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const ChangeSeries&, const ChangeSeries&) = default;

 private:
  std::vector<double> values_;
};

enum class GraphMeasureKind {
  euclidean,
  deltacon,
  laplacian_spectral,
  normalized_spectral_k,
};

struct GraphMeasureSpec {
  GraphMeasureKind kind = GraphMeasureKind::euclidean;
  // DeltaCon diffusion parameter. Unset: 1 / (1 + max degree over both graphs).
  std::optional<double> epsilon;
  // Eigenvalue count for normalized_spectral_k.
  std::size_t k = 10;

  void validate() const;
  // Short label used in reports: DeltaCon, Spectral, Euclidean, NSpectral-k.
  std::string label() const;
  friend bool operator==(const GraphMeasureSpec&, const GraphMeasureSpec&) = default;
};

// ||A - B||_F / sqrt(n(n-1)).
double euclidean_adjacency_distance(const Snapshot& a, const Snapshot& b);

// Node-affinity matrix (I + eps^2 D - eps A)^{-1}.
Eigen::MatrixXd fabp_affinity(const Snapshot& g, double epsilon);

double default_deltacon_epsilon(const Snapshot& a, const Snapshot& b);

// 1 - 1 / (1 + ||sqrt(S_a) - sqrt(S_b)||_F), exact inversion.
double deltacon_distance(const Snapshot& a, const Snapshot& b, double epsilon);
double deltacon_distance(const Snapshot& a, const Snapshot& b);

// Ascending spectrum of D - A.
Eigen::VectorXd laplacian_spectrum(const Snapshot& g);

// Ascending spectrum of the normalized Laplacian I - D^-1/2 A D^-1/2, with
// all-zero rows and columns for isolated vertices.
Eigen::VectorXd normalized_laplacian_spectrum(const Snapshot& g);

// ||lambda(a) - lambda(b)||_2 / (n sqrt(n-1)) over full combinatorial spectra.
double laplacian_spectral_distance(const Snapshot& a, const Snapshot& b);

// Distance between the first k nonzero normalized-Laplacian eigenvalues,
// divided by 2 sqrt(k). Throws DegenerateSpectrumError if either graph has
// fewer than k nonzero eigenvalues.
double normalized_spectral_distance_k(const Snapshot& a, const Snapshot& b,
                                      std::size_t k);

double graph_distance(const Snapshot& a, const Snapshot& b,
                      const GraphMeasureSpec& spec);

// values[t] = graph_distance(G_t, G_{t+1}); errors carry the step index.
ChangeSeries graph_change_series(const DynamicGraph& g,
                                 const GraphMeasureSpec& spec);

}  // namespace tii
