#include "tii/baselines.hpp"

#include <cmath>
#include <numeric>
#include <regex>

#include <Eigen/Sparse>
#include <json.hpp>

#include "fileio.hpp"
#include "tii/error.hpp"
#include "tii/log.hpp"
#include "tii/rng.hpp"

namespace tii {
namespace {

Eigen::SparseMatrix<double> sparse_adjacency(const Snapshot& s) {
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(2 * s.edge_count());
  for (const auto& [u, v] : s.edges()) {
    entries.emplace_back(u, v, 1.0);
    entries.emplace_back(v, u, 1.0);
  }
  const auto n = static_cast<Eigen::Index>(s.n());
  Eigen::SparseMatrix<double> a(n, n);
  a.setFromTriplets(entries.begin(), entries.end());
  return a;
}

}  // namespace

UaseDecomposition uase_decompose(const DynamicGraph& g, const UaseConfig& cfg) {
  const std::size_t n = g.n();
  if (cfg.d == 0 || cfg.d > n) {
    throw ParameterError("UASE dimension d=" + std::to_string(cfg.d) +
                         " must lie in [1, n=" + std::to_string(n) + "]");
  }
  const auto nn = static_cast<Eigen::Index>(n);
  const auto d = static_cast<Eigen::Index>(cfg.d);

  std::vector<Eigen::SparseMatrix<double>> adj;
  adj.reserve(g.T());
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(nn, nn);
  for (const auto& s : g.snapshots()) {
    adj.push_back(sparse_adjacency(s));
    gram += Eigen::MatrixXd(adj.back() * adj.back());
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("UASE eigendecomposition did not converge");
  }
  // Ascending eigenvalues of the Gram matrix are squared singular values.
  const Eigen::VectorXd eigvals = solver.eigenvalues().reverse();
  const Eigen::MatrixXd eigvecs = solver.eigenvectors().rowwise().reverse();
  const double top = std::max(eigvals(0), 0.0);
  const double cutoff = top * 1e-12;

  UaseDecomposition out;
  out.singular_values = Eigen::VectorXd::Zero(d);
  Eigen::MatrixXd u_scaled = Eigen::MatrixXd::Zero(nn, d);  // U S^{-1/2}
  out.left = Eigen::MatrixXd::Zero(nn, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    if (!(eigvals(k) > cutoff) || top == 0.0) break;
    const double sigma = std::sqrt(eigvals(k));
    out.singular_values(k) = sigma;
    u_scaled.col(k) = eigvecs.col(k) / std::sqrt(sigma);
    out.left.col(k) = eigvecs.col(k) * std::sqrt(sigma);
    ++out.rank;
  }
  if (out.rank < cfg.d) {
    warn("UASE: unfolded matrix has numerical rank " + std::to_string(out.rank) +
         " < d=" + std::to_string(cfg.d) + "; trailing columns are zero");
  }

  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(g.T());
  for (const auto& a : adj) blocks.emplace_back(a * u_scaled);
  out.right = EmbeddingSeries(std::move(blocks));
  return out;
}

EmbeddingSeries uase_embed(const DynamicGraph& g, const UaseConfig& cfg) {
  return uase_decompose(g, cfg).right;
}

std::vector<std::size_t> snapshot_permutation(std::size_t T, std::uint64_t seed) {
  std::vector<std::size_t> perm(T);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rng rng(seed);
  shuffle(std::span<std::size_t>(perm), rng);
  return perm;
}

EmbeddingSeries shuffle_snapshots(const EmbeddingSeries& e, std::uint64_t seed) {
  if (e.T() < 2) throw InputError("need at least 2 snapshots to shuffle");
  const auto perm = snapshot_permutation(e.T(), seed);
  std::vector<Eigen::MatrixXd> out;
  out.reserve(e.T());
  for (auto src : perm) out.push_back(e[src]);
  return EmbeddingSeries(std::move(out));
}

namespace {

std::filesystem::path emb_path(const std::filesystem::path& dir, std::size_t t) {
  return dir / ("t" + std::to_string(t) + ".emb");
}

std::string format_matrix(const Eigen::MatrixXd& m) {
  std::string out;
  out.reserve(static_cast<std::size_t>(m.size()) * 22);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += detail::format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

Eigen::MatrixXd parse_matrix(const std::filesystem::path& path, std::size_t n,
                             std::size_t d) {
  const std::string text = detail::read_file(path);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  std::size_t row = 0;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto where = path.string() + ":" + std::to_string(line_no);
    if (line.find_first_not_of(" \t") == std::string_view::npos) {
      throw FormatError(where + ": blank line");
    }
    if (row >= n) {
      throw FormatError(where + ": more than n=" + std::to_string(n) + " rows");
    }
    std::size_t col = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      double value = 0.0;
      if (!detail::parse_double(line.substr(i, j - i), value)) {
        throw FormatError(where + ": cannot parse '" +
                          std::string(line.substr(i, j - i)) + "'");
      }
      if (!std::isfinite(value)) throw FormatError(where + ": non-finite value");
      if (col < d) {
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = value;
      }
      ++col;
      i = j;
    }
    if (col != d) {
      throw FormatError(where + ": expected " + std::to_string(d) +
                        " values, got " + std::to_string(col));
    }
    ++row;
  }
  if (row != n) {
    throw FormatError(path.string() + ": expected " + std::to_string(n) +
                      " rows, got " + std::to_string(row));
  }
  return m;
}

}  // namespace

void save_embeddings(const EmbeddingSeries& e, const std::filesystem::path& dir,
                     const std::string& model_name) {
  detail::ensure_directory(dir);
  for (std::size_t t = 0; t < e.T(); ++t) {
    detail::write_file_atomic(emb_path(dir, t), format_matrix(e[t]));
  }
  nlohmann::ordered_json meta;
  meta["n"] = e.n();
  meta["d"] = e.d();
  meta["T"] = e.T();
  meta["model_name"] = model_name;
  detail::write_file_atomic(dir / "meta.json", meta.dump(2) + "\n");
}

EmbeddingMeta read_embedding_meta(const std::filesystem::path& dir) {
  const auto path = dir / "meta.json";
  try {
    const auto meta = nlohmann::json::parse(detail::read_file(path));
    EmbeddingMeta out;
    out.n = meta.at("n").get<std::size_t>();
    out.d = meta.at("d").get<std::size_t>();
    out.T = meta.at("T").get<std::size_t>();
    out.model_name = meta.value("model_name", std::string());
    if (out.n == 0 || out.d == 0 || out.T == 0) {
      throw FormatError(path.string() + ": n, d and T must be positive");
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

EmbeddingSeries load_embeddings(const std::filesystem::path& dir) {
  const auto meta = read_embedding_meta(dir);
  static const std::regex kSnapshotName(R"(t(\d+)\.emb)");
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (std::regex_match(entry.path().filename().string(), kSnapshotName)) ++files;
  }
  if (files != meta.T) {
    throw FormatError(dir.string() + ": meta T=" + std::to_string(meta.T) +
                      " but found " + std::to_string(files) + " snapshot files");
  }
  std::vector<Eigen::MatrixXd> matrices;
  matrices.reserve(meta.T);
  for (std::size_t t = 0; t < meta.T; ++t) {
    const auto path = emb_path(dir, t);
    if (!std::filesystem::exists(path)) {
      throw FormatError(path.string() + ": missing snapshot file");
    }
    matrices.push_back(parse_matrix(path, meta.n, meta.d));
  }
  return EmbeddingSeries(std::move(matrices));
}

}  // namespace tii
