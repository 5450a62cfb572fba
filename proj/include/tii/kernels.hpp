#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tii {

enum class KernelKind { sym, gauss, kl, pearson, spearman, xcorr, dtw };

struct KernelSpec {
  KernelKind kind = KernelKind::pearson;
  double sigma = 0.1;        // gauss
  double eps = 1e-8;         // kl
  std::size_t max_lag = 3;   // xcorr

  void validate() const;
  std::string label() const;  // Sym, Gauss, KL, Pearson, Spearman, Xcorr, DTW
  friend bool operator==(const KernelSpec&, const KernelSpec&) = default;
};

// sym, gauss and kl score each step; the others score whole series.
bool is_pointwise(KernelKind kind);

double sym_kernel(double dg, double dr);
double gauss_kernel(double dg, double dr, double sigma);
// 1 - KL(Bern(dg) || Bern(dr)) with eps smoothing in the denominators, clamped
// to [0,1]. dg is the reference distribution.
double kl_kernel(double dg, double dr, double eps);

double pointwise_kernel(const KernelSpec& spec, double dg, double dr);

// Average (mid) ranks, 1-based.
std::vector<double> average_ranks(std::span<const double> xs);

// Pearson rho in [-1,1]. Zero-variance convention: rho = 1 if the series are
// elementwise equal, otherwise 0 when either series is constant.
double pearson_rho(std::span<const double> x, std::span<const double> y);
double spearman_rho(std::span<const double> x, std::span<const double> y);

// (rho + 1) / 2.
double pearson_index(std::span<const double> sg, std::span<const double> sr);
double spearman_index(std::span<const double> sg, std::span<const double> sr);

// Best Pearson rho over lags in [-max_lag, max_lag], mapped to [0,1]. Lag l >= 0
// pairs sg[0 : m-l] with sr[l : m]; negative lags swap the roles. Lags leaving
// fewer than two overlapping points are skipped.
double xcorr_index(std::span<const double> sg, std::span<const double> sr,
                   std::size_t max_lag);

// Classic DTW with |a_i - b_j| local cost over the full window.
double dtw_distance(std::span<const double> a, std::span<const double> b);

// max(0, 1 - dtw(sg, sr) / T), T the series length.
double dtw_index(std::span<const double> sg, std::span<const double> sr);

double series_kernel(const KernelSpec& spec, std::span<const double> sg,
                     std::span<const double> sr);

}  // namespace tii
