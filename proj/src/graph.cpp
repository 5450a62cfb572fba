#include "tii/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tii/error.hpp"

namespace tii {

Snapshot::Snapshot(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v) {
      throw InputError("self-loop on node " + std::to_string(u));
    }
    if (u >= n_ || v >= n_) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") out of range for n=" + std::to_string(n_));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InputError("duplicate edge");
  }
}

Snapshot Snapshot::from_adjacency(const Eigen::MatrixXd& adjacency) {
  if (adjacency.rows() != adjacency.cols()) {
    throw DimensionError("adjacency matrix is not square");
  }
  const auto n = static_cast<std::size_t>(adjacency.rows());
  std::vector<Edge> edges;
  for (Eigen::Index i = 0; i < adjacency.rows(); ++i) {
    if (adjacency(i, i) != 0.0) throw InputError("nonzero diagonal entry");
    for (Eigen::Index j = i + 1; j < adjacency.cols(); ++j) {
      const double a = adjacency(i, j);
      if (a != adjacency(j, i)) throw InputError("adjacency is not symmetric");
      if (a == 1.0) {
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
      } else if (a != 0.0) {
        throw InputError("adjacency entry outside {0,1}");
      }
    }
  }
  return Snapshot(n, std::move(edges));
}

Snapshot Snapshot::complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n ? n - 1 : 0) / 2);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Snapshot(n, std::move(edges));
}

bool Snapshot::has_edge(NodeId u, NodeId v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Eigen::MatrixXd Snapshot::adjacency() const {
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : edges_) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

Eigen::VectorXd Snapshot::degrees() const {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_));
  for (const auto& [u, v] : edges_) {
    d(u) += 1.0;
    d(v) += 1.0;
  }
  return d;
}

std::size_t Snapshot::max_degree() const {
  if (n_ == 0) return 0;
  return static_cast<std::size_t>(degrees().maxCoeff());
}

Snapshot Snapshot::permuted(std::span<const NodeId> perm) const {
  if (perm.size() != n_) throw DimensionError("permutation size mismatch");
  std::vector<NodeId> inverse(n_, static_cast<NodeId>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    if (perm[i] >= n_ || inverse[perm[i]] != n_) {
      throw InputError("not a permutation");
    }
    inverse[perm[i]] = static_cast<NodeId>(i);
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& [u, v] : edges_) edges.emplace_back(inverse[u], inverse[v]);
  return Snapshot(n_, std::move(edges));
}

std::size_t symmetric_difference_size(const Snapshot& a, const Snapshot& b) {
  if (a.n() != b.n()) {
    throw DimensionError("snapshots have different node counts (" +
                         std::to_string(a.n()) + " vs " +
                         std::to_string(b.n()) + ")");
  }
  std::size_t common = 0;
  auto ia = a.edges().begin();
  auto ib = b.edges().begin();
  while (ia != a.edges().end() && ib != b.edges().end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  return a.edge_count() + b.edge_count() - 2 * common;
}

DynamicGraph::DynamicGraph(std::vector<Snapshot> snapshots)
    : snapshots_(std::move(snapshots)) {
  if (snapshots_.size() < 2) {
    throw InputError("a dynamic graph needs at least 2 snapshots");
  }
  for (const auto& s : snapshots_) {
    if (s.n() != snapshots_.front().n()) {
      throw DimensionError("snapshots have different node counts");
    }
  }
}

std::size_t DynamicGraph::total_edges() const {
  return std::accumulate(
      snapshots_.begin(), snapshots_.end(), std::size_t{0},
      [](std::size_t acc, const Snapshot& s) { return acc + s.edge_count(); });
}

}  // namespace tii
