#include "tii/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "tii/error.hpp"

namespace tii {

void KernelSpec::validate() const {
  if (kind == KernelKind::gauss && !(sigma > 0.0)) {
    throw ParameterError("gauss sigma must be positive");
  }
  if (kind == KernelKind::kl && !(eps > 0.0)) {
    throw ParameterError("kl eps must be positive");
  }
}

std::string KernelSpec::label() const {
  switch (kind) {
    case KernelKind::sym: return "Sym";
    case KernelKind::gauss: return "Gauss";
    case KernelKind::kl: return "KL";
    case KernelKind::pearson: return "Pearson";
    case KernelKind::spearman: return "Spearman";
    case KernelKind::xcorr: return "Xcorr";
    case KernelKind::dtw: return "DTW";
  }
  return "unknown";
}

bool is_pointwise(KernelKind kind) {
  return kind == KernelKind::sym || kind == KernelKind::gauss ||
         kind == KernelKind::kl;
}

namespace {

void require_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InputError(std::string(name) + " outside [0,1]: " + std::to_string(x));
  }
}

// x * ln(x / y) with 0 ln(0 / y) = 0.
double xlogx_over(double x, double y) {
  return x == 0.0 ? 0.0 : x * std::log(x / y);
}

void require_equal_lengths(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DimensionError("series lengths differ (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
  }
}

void require_min_length(std::span<const double> a, std::size_t min) {
  if (a.size() < min) {
    throw DimensionError("series needs at least " + std::to_string(min) +
                         " points, got " + std::to_string(a.size()));
  }
}

bool is_constant(std::span<const double> x) {
  return std::all_of(x.begin(), x.end(), [&](double v) { return v == x[0]; });
}

double to_index(double rho) { return std::clamp(0.5 * (rho + 1.0), 0.0, 1.0); }

}  // namespace

double sym_kernel(double dg, double dr) {
  require_unit(dg, "graph change");
  require_unit(dr, "representation change");
  return 1.0 - std::abs(dr - dg);
}

double gauss_kernel(double dg, double dr, double sigma) {
  if (!(sigma > 0.0)) throw ParameterError("gauss sigma must be positive");
  require_unit(dg, "graph change");
  require_unit(dr, "representation change");
  const double diff = dr - dg;
  return std::exp(-diff * diff / (2.0 * sigma * sigma));
}

double kl_kernel(double dg, double dr, double eps) {
  if (!(eps > 0.0)) throw ParameterError("kl eps must be positive");
  require_unit(dg, "graph change");
  require_unit(dr, "representation change");
  const double divergence =
      xlogx_over(dg, dr + eps) + xlogx_over(1.0 - dg, 1.0 - dr + eps);
  return std::clamp(1.0 - divergence, 0.0, 1.0);
}

double pointwise_kernel(const KernelSpec& spec, double dg, double dr) {
  switch (spec.kind) {
    case KernelKind::sym: return sym_kernel(dg, dr);
    case KernelKind::gauss: return gauss_kernel(dg, dr, spec.sigma);
    case KernelKind::kl: return kl_kernel(dg, dr, spec.eps);
    default: throw ParameterError(spec.label() + " is not a pointwise kernel");
  }
}

std::vector<double> average_ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> ranks(xs.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double mid = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
    i = j + 1;
  }
  return ranks;
}

double pearson_rho(std::span<const double> x, std::span<const double> y) {
  require_equal_lengths(x, y);
  require_min_length(x, 2);
  if (std::equal(x.begin(), x.end(), y.begin())) return 1.0;
  if (is_constant(x) || is_constant(y)) return 0.0;
  const double m = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / m;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / m;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman_rho(std::span<const double> x, std::span<const double> y) {
  require_equal_lengths(x, y);
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson_rho(rx, ry);
}

double pearson_index(std::span<const double> sg, std::span<const double> sr) {
  return to_index(pearson_rho(sg, sr));
}

double spearman_index(std::span<const double> sg, std::span<const double> sr) {
  return to_index(spearman_rho(sg, sr));
}

double xcorr_index(std::span<const double> sg, std::span<const double> sr,
                   std::size_t max_lag) {
  require_equal_lengths(sg, sr);
  require_min_length(sg, 2);
  const std::size_t m = sg.size();
  const std::size_t lag_limit = std::min(max_lag, m - 2);
  double best = -1.0;
  for (std::size_t lag = 0; lag <= lag_limit; ++lag) {
    const std::size_t len = m - lag;
    best = std::max(best, pearson_rho(sg.subspan(0, len), sr.subspan(lag, len)));
    if (lag > 0) {
      best = std::max(best, pearson_rho(sr.subspan(0, len), sg.subspan(lag, len)));
    }
  }
  return to_index(best);
}

double dtw_distance(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InputError("DTW needs nonempty series");
  constexpr double inf = std::numeric_limits<double>::infinity();
  // Rolling rows of the (|a|+1) x (|b|+1) cumulative-cost table.
  std::vector<double> prev(b.size() + 1, inf);
  std::vector<double> cur(b.size() + 1, inf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = inf;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const double cost = std::abs(a[i - 1] - b[j - 1]);
      cur[j] = cost + std::min({prev[j], cur[j - 1], prev[j - 1]});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double dtw_index(std::span<const double> sg, std::span<const double> sr) {
  require_equal_lengths(sg, sr);
  const double dist = dtw_distance(sg, sr);
  return std::clamp(1.0 - dist / static_cast<double>(sg.size()), 0.0, 1.0);
}

double series_kernel(const KernelSpec& spec, std::span<const double> sg,
                     std::span<const double> sr) {
  spec.validate();
  switch (spec.kind) {
    case KernelKind::pearson: return pearson_index(sg, sr);
    case KernelKind::spearman: return spearman_index(sg, sr);
    case KernelKind::xcorr: return xcorr_index(sg, sr, spec.max_lag);
    case KernelKind::dtw: return dtw_index(sg, sr);
    default: throw ParameterError(spec.label() + " is not a series kernel");
  }
}

}  // namespace tii
