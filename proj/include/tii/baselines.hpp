#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tii/embedding.hpp"
#include "tii/graph.hpp"

namespace tii {

struct UaseConfig {
  std::size_t d = 64;
};

// Rank-d factorization of the unfolded matrix [A_1 | ... | A_T] = U S V^T.
// left = U S^{1/2}; right block t = V_t S^{1/2}, so A_t ~ left * right[t]^T.
struct UaseDecomposition {
  Eigen::MatrixXd left;
  EmbeddingSeries right;
  Eigen::VectorXd singular_values;  // descending, length d (zeros past rank)
  std::size_t rank = 0;             // nonzero singular values retained
};

// Computes the left singular pairs from the n x n Gram matrix sum_t A_t^2 and
// recovers each right block as A_t U S^{-1/2}. Singular directions beyond the
// numerical rank are returned as zero columns with a warning.
UaseDecomposition uase_decompose(const DynamicGraph& g, const UaseConfig& cfg);

// The per-snapshot (right) UASE embeddings.
EmbeddingSeries uase_embed(const DynamicGraph& g, const UaseConfig& cfg);

// Uniform random permutation of 0..T-1 (Fisher-Yates on mt19937_64(seed)).
std::vector<std::size_t> snapshot_permutation(std::size_t T, std::uint64_t seed);

// Snapshot t of the result is snapshot perm[t] of the input.
EmbeddingSeries shuffle_snapshots(const EmbeddingSeries& e, std::uint64_t seed);

// On-disk embeddings: <dir>/meta.json {n, d, T, model_name} and one
// <dir>/t<index>.emb per snapshot with n lines of d space-separated decimals.
struct EmbeddingMeta {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t T = 0;
  std::string model_name;
};

void save_embeddings(const EmbeddingSeries& e, const std::filesystem::path& dir,
                     const std::string& model_name);
EmbeddingMeta read_embedding_meta(const std::filesystem::path& dir);
EmbeddingSeries load_embeddings(const std::filesystem::path& dir);

}  // namespace tii
