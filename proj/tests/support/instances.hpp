#pragma once

// Seeded random instance generators and independent reference computations
// shared by the unit and acceptance suites. Nothing here calls into the solver
// code paths it is used to check.

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "leontief/linalg.hpp"
#include "leontief/model.hpp"

namespace leontief::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline DenseMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                 double lo = -1.0, double hi = 1.0) {
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, lo, hi);
  return m;
}

inline DenseVector random_vector(Rng& rng, std::size_t n, double lo = -1.0,
                                 double hi = 1.0) {
  DenseVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = uniform(rng, lo, hi);
  return v;
}

// Nonnegative technology matrix with every row sum equal to a random value
// in [0, max_row_sum].
inline DenseMatrix random_technology(Rng& rng, std::size_t rows, std::size_t cols,
                                     double max_row_sum) {
  DenseMatrix t(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      t(r, c) = uniform(rng, 0.0, 1.0);
      sum += t(r, c);
    }
    const double target = uniform(rng, 0.0, max_row_sum);
    for (std::size_t c = 0; c < cols; ++c) t(r, c) *= target / sum;
  }
  return t;
}

// Open Leontief LCP: M = I - T with T >= 0, row sums <= max_row_sum, and a
// demand of mixed sign.
inline LcpInstance random_m_matrix_lcp(Rng& rng, std::size_t n,
                                       double max_row_sum = 0.9) {
  const DenseMatrix t = random_technology(rng, n, n, max_row_sum);
  DenseMatrix m = DenseMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) -= t(r, c);
  return LcpInstance{m, random_vector(rng, n, -10.0, 10.0)};
}

// Random well-conditioned P-matrix: strictly diagonally dominant with positive
// diagonal.
inline DenseMatrix random_p_matrix(Rng& rng, std::size_t n) {
  DenseMatrix m = random_matrix(rng, n, n, -1.0, 1.0);
  for (std::size_t r = 0; r < n; ++r) {
    double off = 0.0;
    for (std::size_t c = 0; c < n; ++c)
      if (c != r) off += std::abs(m(r, c));
    m(r, r) = off + uniform(rng, 0.5, 2.0);
  }
  return m;
}

inline std::vector<std::size_t> random_block_sizes(Rng& rng, std::size_t k,
                                                   std::size_t max_block) {
  std::vector<std::size_t> sizes(k);
  for (auto& s : sizes) s = uniform_index(rng, 1, max_block);
  return sizes;
}

// Generalized Leontief instance: block j is e_j' - A^j with A^j >= 0 and row
// sums below 0.9.
inline VlcpInstance random_leontief_vlcp(Rng& rng, std::size_t k,
                                         std::size_t max_block) {
  std::vector<DenseMatrix> blocks;
  std::vector<double> q;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t m = uniform_index(rng, 1, max_block);
    DenseMatrix block = random_technology(rng, m, k, 0.9);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < k; ++c) block(r, c) = (c == j ? 1.0 : 0.0) - block(r, c);
      q.push_back(uniform(rng, -10.0, 10.0));
    }
    blocks.push_back(block);
  }
  return VlcpInstance{VerticalBlockMatrix(blocks), DenseVector(q)};
}

// Vertical instance with unstructured entries in [-1, 1].
inline VlcpInstance random_generic_vlcp(Rng& rng, std::size_t k, std::size_t max_block) {
  const auto sizes = random_block_sizes(rng, k, max_block);
  std::size_t m = 0;
  for (auto s : sizes) m += s;
  return VlcpInstance{VerticalBlockMatrix(random_matrix(rng, m, k), sizes),
                      random_vector(rng, m, -1.0, 1.0)};
}

// --- independent reference computations ------------------------------------

// Laplace expansion along the first row.
inline double laplace_determinant(const std::vector<std::vector<double>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1.0;
  if (n == 1) return a[0][0];
  double det = 0.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<double>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(a[r][cc]);
      minor.push_back(row);
    }
    det += ((c % 2 == 0) ? 1.0 : -1.0) * a[0][c] * laplace_determinant(minor);
  }
  return det;
}

inline std::vector<std::vector<double>> to_nested(const DenseMatrix& m) {
  std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

// Smallest principal minor over all index subsets.
inline double min_principal_minor_laplace(const DenseMatrix& m) {
  const std::size_t n = m.rows();
  double best = INFINITY;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    std::vector<std::vector<double>> sub(idx.size(), std::vector<double>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = m(idx[a], idx[b]);
    best = std::min(best, laplace_determinant(sub));
  }
  return best;
}

// sum_j a_ij v_j by plain loops.
inline std::vector<double> naive_mat_vec(const DenseMatrix& a, const DenseVector& v) {
  std::vector<double> out(a.rows(), 0.0);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r] += a(r, c) * v[c];
  return out;
}

// sqrt(|w - M z - q|^2 + |z o w|^2) by plain summation.
inline double naive_merit(const DenseVector& z, const DenseVector& w,
                          const LcpInstance& lcp) {
  const auto mz = naive_mat_vec(lcp.M, z);
  double s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double r = w[i] - mz[i] - lcp.q[i];
    s += r * r + (z[i] * w[i]) * (z[i] * w[i]);
  }
  return std::sqrt(s);
}

}  // namespace leontief::testing
