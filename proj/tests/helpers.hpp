#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <Eigen/Dense>

#include "oracles.hpp"
#include "tii/embedding.hpp"
#include "tii/graph.hpp"

namespace testutil {

inline tii::Snapshot random_snapshot(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<tii::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return tii::Snapshot(n, std::move(edges));
}

inline tii::DynamicGraph random_graph(std::size_t n, std::size_t T, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density(0.1, 0.9);
  std::vector<tii::Snapshot> s;
  for (std::size_t t = 0; t < T; ++t) s.push_back(random_snapshot(n, density(rng), rng));
  return tii::DynamicGraph(std::move(s));
}

inline Eigen::MatrixXd gaussian_matrix(std::size_t n, std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd m(n, d);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = g(rng);
  return m;
}

inline tii::EmbeddingSeries random_embedding(std::size_t n, std::size_t d, std::size_t T,
                                             std::mt19937_64& rng) {
  std::vector<Eigen::MatrixXd> ms;
  for (std::size_t t = 0; t < T; ++t) ms.push_back(gaussian_matrix(n, d, rng));
  return tii::EmbeddingSeries(std::move(ms));
}

// Haar-ish random orthogonal matrix from the QR of a Gaussian matrix.
inline Eigen::MatrixXd random_orthogonal(std::size_t d, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(gaussian_matrix(d, d, rng));
  return qr.householderQ() * Eigen::MatrixXd::Identity(d, d);
}

inline oracle::Dense dense(const tii::Snapshot& s) {
  oracle::Dense a = oracle::zeros(s.n(), s.n());
  for (auto [u, v] : s.edges()) {
    a[u][v] = 1.0;
    a[v][u] = 1.0;
  }
  return a;
}

inline std::vector<double> to_vector(std::span<const double> s) {
  return {s.begin(), s.end()};
}

class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("tii_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spit(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace testutil
