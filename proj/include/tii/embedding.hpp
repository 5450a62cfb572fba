#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tii/graph_change.hpp"

namespace tii {

// Per-snapshot n x d node embeddings; row i of matrix t is node i at time t.
// Shapes are constant across snapshots and all entries are finite.
class EmbeddingSeries {
 public:
  EmbeddingSeries() = default;
  explicit EmbeddingSeries(std::vector<Eigen::MatrixXd> matrices);

  std::size_t T() const noexcept { return matrices_.size(); }
  std::size_t n() const noexcept;
  std::size_t d() const noexcept;
  const Eigen::MatrixXd& operator[](std::size_t t) const { return matrices_[t]; }
  std::span<const Eigen::MatrixXd> matrices() const noexcept { return matrices_; }

  friend bool operator==(const EmbeddingSeries& a, const EmbeddingSeries& b);

 private:
  std::vector<Eigen::MatrixXd> matrices_;
};

enum class ReprMeasureKind { row_cosine, row_unit_euclidean };

struct ReprMeasureSpec {
  ReprMeasureKind kind = ReprMeasureKind::row_unit_euclidean;
  // Procrustes-align snapshot t onto t+1 before measuring.
  bool align = false;
  // Drift charged to a node whose row is zero in exactly one snapshot. A node
  // that is zero in both snapshots contributes 0.
  double zero_row_drift = 1.0;

  void validate() const;
  std::string label() const;  // Cosine | Euclidean
  friend bool operator==(const ReprMeasureSpec&, const ReprMeasureSpec&) = default;
};

// Orthogonal Q minimizing ||from Q - to||_F: U V^T from the SVD of from^T to.
Eigen::MatrixXd procrustes_rotation(const Eigen::MatrixXd& from,
                                    const Eigen::MatrixXd& to);

// from * procrustes_rotation(from, to).
Eigen::MatrixXd procrustes_align(const Eigen::MatrixXd& from,
                                 const Eigen::MatrixXd& to);

// Mean over nodes of (1 - cos(e1_i, e2_i)) / 2.
double row_cosine_change(const Eigen::MatrixXd& e1, const Eigen::MatrixXd& e2,
                         double zero_row_drift = 1.0);

// Mean over nodes of ||e1_i/|e1_i| - e2_i/|e2_i| || / 2.
double row_unit_euclidean_change(const Eigen::MatrixXd& e1,
                                 const Eigen::MatrixXd& e2,
                                 double zero_row_drift = 1.0);

double repr_change(const Eigen::MatrixXd& e1, const Eigen::MatrixXd& e2,
                   const ReprMeasureSpec& spec);

ChangeSeries repr_change_series(const EmbeddingSeries& e,
                                const ReprMeasureSpec& spec);

}  // namespace tii
