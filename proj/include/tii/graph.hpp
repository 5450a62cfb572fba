#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace tii {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Undirected simple graph on nodes 0..n-1. Stored as a sorted edge list with
// u < v for every edge, which makes symmetry, a zero diagonal and binary
// entries hold by construction; the dense adjacency is materialized on demand.
class Snapshot {
 public:
  Snapshot() = default;

  // Accepts edges in any order and orientation. Self-loops, duplicates and
  // out-of-range endpoints are rejected with InputError.
  Snapshot(std::size_t n, std::vector<Edge> edges);

  // Validates symmetry, zero diagonal and {0,1} entries.
  static Snapshot from_adjacency(const Eigen::MatrixXd& adjacency);

  static Snapshot empty(std::size_t n) { return Snapshot(n, {}); }
  static Snapshot complete(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_edge(NodeId u, NodeId v) const;

  Eigen::MatrixXd adjacency() const;
  Eigen::VectorXd degrees() const;
  std::size_t max_degree() const;

  // Node relabelling: node i of the result is node perm[i] of this graph.
  Snapshot permuted(std::span<const NodeId> perm) const;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// Number of undirected edges present in exactly one of the two graphs.
std::size_t symmetric_difference_size(const Snapshot& a, const Snapshot& b);

// Ordered snapshots on a fixed node set; T >= 2.
class DynamicGraph {
 public:
  explicit DynamicGraph(std::vector<Snapshot> snapshots);

  std::size_t n() const noexcept { return snapshots_.front().n(); }
  std::size_t T() const noexcept { return snapshots_.size(); }
  const Snapshot& operator[](std::size_t t) const { return snapshots_[t]; }
  std::span<const Snapshot> snapshots() const noexcept { return snapshots_; }
  std::size_t total_edges() const;

  friend bool operator==(const DynamicGraph&, const DynamicGraph&) = default;

 private:
  std::vector<Snapshot> snapshots_;
};

}  // namespace tii
