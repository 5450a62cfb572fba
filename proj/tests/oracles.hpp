#pragma once

// Independent reference implementations. Nothing here calls into the library
// beyond reading plain data, so agreement is meaningful.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense zeros(std::size_t n, std::size_t m) {
  return Dense(n, std::vector<double>(m, 0.0));
}

inline Dense adjacency(std::size_t n,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  Dense a = zeros(n, n);
  for (auto [u, v] : edges) {
    a[u][v] = 1.0;
    a[v][u] = 1.0;
  }
  return a;
}

// Cyclic Jacobi rotations; returns ascending eigenvalues of a symmetric matrix.
inline std::vector<double> jacobi_eigenvalues(Dense a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Gauss-Jordan with partial pivoting.
inline Dense inverse(Dense a) {
  const std::size_t n = a.size();
  Dense inv = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-14) throw std::runtime_error("singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const double d = a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      a[col][k] /= d;
      inv[col][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

inline std::size_t max_degree(const Dense& a) {
  std::size_t best = 0;
  for (const auto& row : a) {
    std::size_t d = 0;
    for (double x : row) d += x != 0.0;
    best = std::max(best, d);
  }
  return best;
}

// DeltaCon from the textbook definition: S = (I + eps^2 D - eps A)^{-1},
// distance = 1 - 1/(1 + rootED(S_a, S_b)).
inline double deltacon(const Dense& a, const Dense& b, double eps) {
  const std::size_t n = a.size();
  auto affinity = [&](const Dense& g) {
    Dense m = zeros(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      double deg = 0.0;
      for (double x : g[i]) deg += x;
      for (std::size_t j = 0; j < n; ++j) m[i][j] = -eps * g[i][j];
      m[i][i] += 1.0 + eps * eps * deg;
    }
    return inverse(m);
  };
  const Dense sa = affinity(a), sb = affinity(b);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double d = std::sqrt(std::max(0.0, sa[i][j])) -
                       std::sqrt(std::max(0.0, sb[i][j]));
      sum += d * d;
    }
  return 1.0 - 1.0 / (1.0 + std::sqrt(sum));
}

inline double deltacon(const Dense& a, const Dense& b) {
  const double eps =
      1.0 / (1.0 + static_cast<double>(std::max(max_degree(a), max_degree(b))));
  return deltacon(a, b, eps);
}

// Recursive definition without memoization, so every monotone path is
// explored: D(i,j) = |a_i - b_j| + min(D(i-1,j), D(i,j-1), D(i-1,j-1)).
inline double dtw_recursive(const std::vector<double>& a, const std::vector<double>& b,
                            std::size_t i, std::size_t j) {
  const double here = std::abs(a[i] - b[j]);
  if (i == 0 && j == 0) return here;
  double best = std::numeric_limits<double>::infinity();
  if (i > 0) best = std::min(best, dtw_recursive(a, b, i - 1, j));
  if (j > 0) best = std::min(best, dtw_recursive(a, b, i, j - 1));
  if (i > 0 && j > 0) best = std::min(best, dtw_recursive(a, b, i - 1, j - 1));
  return here + best;
}

inline double dtw_exhaustive(const std::vector<double>& a, const std::vector<double>& b) {
  return dtw_recursive(a, b, a.size() - 1, b.size() - 1);
}

// Mid ranks by counting: 1 + #smaller + (#equal - 1) / 2.
inline std::vector<double> ranks(const std::vector<double>& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double less = 0.0, equal = 0.0;
    for (double y : x) {
      less += y < x[i];
      equal += y == x[i];
    }
    r[i] = 1.0 + less + (equal - 1.0) / 2.0;
  }
  return r;
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

inline double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  return pearson(ranks(x), ranks(y));
}

// Fraction of (positive, negative) pairs ordered correctly, ties count 1/2.
inline double auc_pairs(const std::vector<double>& scores,
                        const std::vector<int>& labels) {
  double good = 0.0, total = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!labels[i]) continue;
    for (std::size_t j = 0; j < scores.size(); ++j) {
      if (labels[j]) continue;
      total += 1.0;
      if (scores[i] > scores[j]) good += 1.0;
      else if (scores[i] == scores[j]) good += 0.5;
    }
  }
  return good / total;
}

}  // namespace oracle
