#include "tii/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "tii/error.hpp"
#include "tii/parallel.hpp"

namespace tii {

EmbeddingSeries::EmbeddingSeries(std::vector<Eigen::MatrixXd> matrices)
    : matrices_(std::move(matrices)) {
  if (matrices_.empty()) throw InputError("embedding series is empty");
  const auto rows = matrices_.front().rows();
  const auto cols = matrices_.front().cols();
  if (rows == 0 || cols == 0) throw InputError("embedding matrices are empty");
  for (std::size_t t = 0; t < matrices_.size(); ++t) {
    if (matrices_[t].rows() != rows || matrices_[t].cols() != cols) {
      throw DimensionError("embedding snapshot " + std::to_string(t) +
                           " has a different shape");
    }
    if (!matrices_[t].allFinite()) {
      throw InputError("embedding snapshot " + std::to_string(t) +
                       " has non-finite entries");
    }
  }
}

std::size_t EmbeddingSeries::n() const noexcept {
  return matrices_.empty() ? 0 : static_cast<std::size_t>(matrices_[0].rows());
}

std::size_t EmbeddingSeries::d() const noexcept {
  return matrices_.empty() ? 0 : static_cast<std::size_t>(matrices_[0].cols());
}

bool operator==(const EmbeddingSeries& a, const EmbeddingSeries& b) {
  if (a.T() != b.T()) return false;
  for (std::size_t t = 0; t < a.T(); ++t) {
    if (a[t].rows() != b[t].rows() || a[t].cols() != b[t].cols() ||
        a[t] != b[t]) {
      return false;
    }
  }
  return true;
}

void ReprMeasureSpec::validate() const {
  if (!(zero_row_drift >= 0.0 && zero_row_drift <= 1.0)) {
    throw ParameterError("zero_row_drift must lie in [0,1]");
  }
}

std::string ReprMeasureSpec::label() const {
  return kind == ReprMeasureKind::row_cosine ? "Cosine" : "Euclidean";
}

namespace {

void require_same_shape(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("embedding matrices have different shapes");
  }
  if (a.size() == 0) throw InputError("embedding matrices are empty");
}

void require_finite(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (!a.allFinite() || !b.allFinite()) {
    throw InputError("embedding has non-finite entries");
  }
}

// Averages per-node drift(unit_a, unit_b) after projecting rows to the unit
// sphere, applying the zero-row convention.
template <typename Drift>
double mean_row_drift(const Eigen::MatrixXd& e1, const Eigen::MatrixXd& e2,
                      double zero_row_drift, Drift drift) {
  require_same_shape(e1, e2);
  require_finite(e1, e2);
  if (!(zero_row_drift >= 0.0 && zero_row_drift <= 1.0)) {
    throw ParameterError("zero_row_drift must lie in [0,1]");
  }
  if (e1.isZero(0.0) || e2.isZero(0.0)) {
    throw InputError("embedding matrix is entirely zero");
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < e1.rows(); ++i) {
    const double n1 = e1.row(i).norm();
    const double n2 = e2.row(i).norm();
    if (n1 == 0.0 || n2 == 0.0) {
      total += (n1 == 0.0 && n2 == 0.0) ? 0.0 : zero_row_drift;
      continue;
    }
    const double v = drift(e1.row(i) / n1, e2.row(i) / n2);
    total += std::clamp(v, 0.0, 1.0);
  }
  return std::clamp(total / static_cast<double>(e1.rows()), 0.0, 1.0);
}

}  // namespace

Eigen::MatrixXd procrustes_rotation(const Eigen::MatrixXd& from,
                                    const Eigen::MatrixXd& to) {
  require_same_shape(from, to);
  require_finite(from, to);
  const Eigen::MatrixXd cross = from.transpose() * to;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(cross,
                                     Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("Procrustes SVD did not converge");
  }
  return svd.matrixU() * svd.matrixV().transpose();
}

Eigen::MatrixXd procrustes_align(const Eigen::MatrixXd& from,
                                 const Eigen::MatrixXd& to) {
  return from * procrustes_rotation(from, to);
}

double row_cosine_change(const Eigen::MatrixXd& e1, const Eigen::MatrixXd& e2,
                         double zero_row_drift) {
  return mean_row_drift(e1, e2, zero_row_drift, [](const auto& a, const auto& b) {
    const double cos = std::clamp(a.dot(b), -1.0, 1.0);
    return 0.5 * (1.0 - cos);
  });
}

double row_unit_euclidean_change(const Eigen::MatrixXd& e1,
                                 const Eigen::MatrixXd& e2,
                                 double zero_row_drift) {
  return mean_row_drift(e1, e2, zero_row_drift, [](const auto& a, const auto& b) {
    return 0.5 * (a - b).norm();
  });
}

double repr_change(const Eigen::MatrixXd& e1, const Eigen::MatrixXd& e2,
                   const ReprMeasureSpec& spec) {
  const Eigen::MatrixXd from = spec.align ? procrustes_align(e1, e2) : e1;
  return spec.kind == ReprMeasureKind::row_cosine
             ? row_cosine_change(from, e2, spec.zero_row_drift)
             : row_unit_euclidean_change(from, e2, spec.zero_row_drift);
}

ChangeSeries repr_change_series(const EmbeddingSeries& e,
                                const ReprMeasureSpec& spec) {
  spec.validate();
  if (e.T() < 2) throw InputError("need at least 2 embedding snapshots");
  std::vector<double> values(e.T() - 1);
  parallel_for(values.size(), [&](std::size_t t) {
    values[t] = at_step(t, [&] { return repr_change(e[t], e[t + 1], spec); });
  });
  return ChangeSeries(std::move(values));
}

}  // namespace tii
