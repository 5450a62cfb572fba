#include "tii/graph_change.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tii/error.hpp"
#include "tii/parallel.hpp"

namespace tii {

ChangeSeries::ChangeSeries(std::vector<double> values)
    : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0 && values_[i] <= 1.0)) {
      throw InputError("change value at step " + std::to_string(i) +
                       " outside [0,1]: " + std::to_string(values_[i]));
    }
  }
}

void GraphMeasureSpec::validate() const {
  if (kind == GraphMeasureKind::deltacon && epsilon && !(*epsilon > 0.0)) {
    throw ParameterError("DeltaCon epsilon must be positive");
  }
  if (kind == GraphMeasureKind::normalized_spectral_k && k == 0) {
    throw ParameterError("k must be at least 1");
  }
}

std::string GraphMeasureSpec::label() const {
  switch (kind) {
    case GraphMeasureKind::euclidean: return "Euclidean";
    case GraphMeasureKind::deltacon: return "DeltaCon";
    case GraphMeasureKind::laplacian_spectral: return "Spectral";
    case GraphMeasureKind::normalized_spectral_k:
      return "NSpectral-" + std::to_string(k);
  }
  return "unknown";
}

namespace {

void require_same_n(const Snapshot& a, const Snapshot& b) {
  if (a.n() != b.n()) {
    throw DimensionError("snapshots have different node counts (" +
                         std::to_string(a.n()) + " vs " +
                         std::to_string(b.n()) + ")");
  }
}

double unit_clamp(double x) { return std::clamp(x, 0.0, 1.0); }

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigensolver did not converge");
  }
  return solver.eigenvalues();  // ascending
}

}  // namespace

double euclidean_adjacency_distance(const Snapshot& a, const Snapshot& b) {
  require_same_n(a, b);
  const double n = static_cast<double>(a.n());
  if (a.n() < 2) return 0.0;
  // Each differing undirected edge flips two symmetric entries.
  const double diff = 2.0 * static_cast<double>(symmetric_difference_size(a, b));
  return unit_clamp(std::sqrt(diff) / std::sqrt(n * (n - 1.0)));
}

Eigen::MatrixXd fabp_affinity(const Snapshot& g, double epsilon) {
  if (!(epsilon > 0.0)) throw ParameterError("DeltaCon epsilon must be positive");
  const auto n = static_cast<Eigen::Index>(g.n());
  Eigen::MatrixXd m = -epsilon * g.adjacency();
  m.diagonal().array() += 1.0 + epsilon * epsilon * g.degrees().array();
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() == Eigen::Success) return llt.solve(identity);
  // Not positive definite (epsilon above the FaBP bound); try a general solve.
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  if (!lu.isInvertible()) {
    throw NumericalError("DeltaCon system matrix is singular for epsilon=" +
                         std::to_string(epsilon));
  }
  return lu.inverse();
}

double default_deltacon_epsilon(const Snapshot& a, const Snapshot& b) {
  const auto maxdeg = std::max(a.max_degree(), b.max_degree());
  return 1.0 / (1.0 + static_cast<double>(maxdeg));
}

double deltacon_distance(const Snapshot& a, const Snapshot& b, double epsilon) {
  require_same_n(a, b);
  const Eigen::MatrixXd sa = fabp_affinity(a, epsilon);
  const Eigen::MatrixXd sb = fabp_affinity(b, epsilon);
  constexpr double kNegativeTolerance = -1e-12;
  auto root = [&](const Eigen::MatrixXd& s) {
    if (s.minCoeff() < kNegativeTolerance) {
      throw NumericalError("negative affinity entry " +
                           std::to_string(s.minCoeff()) +
                           " (epsilon too large?)");
    }
    return s.cwiseMax(0.0).cwiseSqrt().eval();
  };
  const double root_distance = (root(sa) - root(sb)).norm();
  return unit_clamp(1.0 - 1.0 / (1.0 + root_distance));
}

double deltacon_distance(const Snapshot& a, const Snapshot& b) {
  return deltacon_distance(a, b, default_deltacon_epsilon(a, b));
}

Eigen::VectorXd laplacian_spectrum(const Snapshot& g) {
  Eigen::MatrixXd lap = -g.adjacency();
  lap.diagonal() += g.degrees();
  return symmetric_eigenvalues(lap);
}

Eigen::VectorXd normalized_laplacian_spectrum(const Snapshot& g) {
  const auto n = static_cast<Eigen::Index>(g.n());
  const Eigen::VectorXd deg = g.degrees();
  Eigen::VectorXd inv_sqrt(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    inv_sqrt(i) = deg(i) > 0.0 ? 1.0 / std::sqrt(deg(i)) : 0.0;
  }
  Eigen::MatrixXd lap =
      -(inv_sqrt.asDiagonal() * g.adjacency() * inv_sqrt.asDiagonal());
  for (Eigen::Index i = 0; i < n; ++i) {
    lap(i, i) = deg(i) > 0.0 ? 1.0 : 0.0;
  }
  return symmetric_eigenvalues(lap);
}

namespace {

Eigen::VectorXd first_nonzero(const Eigen::VectorXd& spectrum, std::size_t k,
                              const char* which) {
  constexpr double kZeroTolerance = 1e-9;
  Eigen::VectorXd out(static_cast<Eigen::Index>(k));
  std::size_t found = 0;
  for (Eigen::Index i = 0; i < spectrum.size() && found < k; ++i) {
    if (spectrum(i) > kZeroTolerance) {
      out(static_cast<Eigen::Index>(found++)) = spectrum(i);
    }
  }
  if (found < k) {
    throw DegenerateSpectrumError(
        std::string(which) + " graph has only " + std::to_string(found) +
        " nonzero normalized-Laplacian eigenvalues, need k=" +
        std::to_string(k));
  }
  return out;
}

double full_spectrum_distance(const Eigen::VectorXd& la,
                              const Eigen::VectorXd& lb, std::size_t n) {
  if (n < 2) return 0.0;
  const double nn = static_cast<double>(n);
  return unit_clamp((la - lb).norm() / (nn * std::sqrt(nn - 1.0)));
}

double first_k_distance(const Eigen::VectorXd& sa, const Eigen::VectorXd& sb,
                        std::size_t k) {
  const auto la = first_nonzero(sa, k, "first");
  const auto lb = first_nonzero(sb, k, "second");
  return unit_clamp((la - lb).norm() /
                    (2.0 * std::sqrt(static_cast<double>(k))));
}

}  // namespace

double laplacian_spectral_distance(const Snapshot& a, const Snapshot& b) {
  require_same_n(a, b);
  return full_spectrum_distance(laplacian_spectrum(a), laplacian_spectrum(b),
                                a.n());
}

double normalized_spectral_distance_k(const Snapshot& a, const Snapshot& b,
                                      std::size_t k) {
  require_same_n(a, b);
  if (k == 0) throw ParameterError("k must be at least 1");
  return first_k_distance(normalized_laplacian_spectrum(a),
                          normalized_laplacian_spectrum(b), k);
}

double graph_distance(const Snapshot& a, const Snapshot& b,
                      const GraphMeasureSpec& spec) {
  switch (spec.kind) {
    case GraphMeasureKind::euclidean:
      return euclidean_adjacency_distance(a, b);
    case GraphMeasureKind::deltacon:
      return spec.epsilon ? deltacon_distance(a, b, *spec.epsilon)
                          : deltacon_distance(a, b);
    case GraphMeasureKind::laplacian_spectral:
      return laplacian_spectral_distance(a, b);
    case GraphMeasureKind::normalized_spectral_k:
      return normalized_spectral_distance_k(a, b, spec.k);
  }
  throw ParameterError("unknown graph measure");
}

ChangeSeries graph_change_series(const DynamicGraph& g,
                                 const GraphMeasureSpec& spec) {
  spec.validate();
  std::vector<double> values(g.T() - 1);
  if (spec.kind == GraphMeasureKind::laplacian_spectral ||
      spec.kind == GraphMeasureKind::normalized_spectral_k) {
    // Each snapshot's spectrum is shared by two consecutive pairs.
    const bool full = spec.kind == GraphMeasureKind::laplacian_spectral;
    std::vector<Eigen::VectorXd> spectra(g.T());
    parallel_for(g.T(), [&](std::size_t t) {
      spectra[t] = at_step(t, [&] {
        return full ? laplacian_spectrum(g[t])
                    : normalized_laplacian_spectrum(g[t]);
      });
    });
    for (std::size_t t = 0; t + 1 < g.T(); ++t) {
      values[t] = at_step(t, [&] {
        return full ? full_spectrum_distance(spectra[t], spectra[t + 1], g.n())
                    : first_k_distance(spectra[t], spectra[t + 1], spec.k);
      });
    }
    return ChangeSeries(std::move(values));
  }
  parallel_for(values.size(), [&](std::size_t t) {
    values[t] = at_step(t, [&] { return graph_distance(g[t], g[t + 1], spec); });
  });
  return ChangeSeries(std::move(values));
}

}  // namespace tii
