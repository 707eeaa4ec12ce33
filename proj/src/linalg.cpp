#include "leontief/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "leontief/errors.hpp"

namespace leontief {
namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw NonFiniteValue(std::string(what) + " contains a non-finite entry");
    }
  }
}

void require_same_size(const DenseVector& a, const DenseVector& b,
                       const char* op) {
  if (a.size() != b.size()) {
    throw DimensionMismatch(std::string(op) + ": vector sizes " +
                            std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
  }
}

}  // namespace

DenseVector::DenseVector(std::size_t size, double value)
    : entries_(size, value) {
  require_finite(entries_, "vector");
}

DenseVector::DenseVector(std::vector<double> entries)
    : entries_(std::move(entries)) {
  require_finite(entries_, "vector");
}

DenseVector::DenseVector(std::initializer_list<double> entries)
    : entries_(entries) {
  require_finite(entries_, "vector");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, double value)
    : rows_(rows), cols_(cols), entries_(rows * cols, value) {
  require_finite(entries_, "matrix");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("matrix entry count " +
                            std::to_string(entries_.size()) + " != " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  }
  require_finite(entries_, "matrix");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  require_finite(entries_, "matrix");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> diag) {
  DenseMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  require_finite(m.entries_, "matrix");
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<double> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionMismatch("ragged matrix rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return DenseMatrix(rows.size(), cols, std::move(entries));
}

DenseVector DenseMatrix::column(std::size_t c) const {
  DenseVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::abs(v));
  return m;
}

DenseMatrix DenseMatrix::select(std::span<const std::size_t> row_idx,
                                std::span<const std::size_t> col_idx) const {
  DenseMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      out(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
  }
  return out;
}

LuFactorization::LuFactorization(const DenseMatrix& a) : lu_(a) {
  if (!a.is_square()) {
    throw DimensionMismatch("LU factorization needs a square matrix, got " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
  }
  const std::size_t n = a.rows();
  perm_.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

  const double scale = a.max_abs();
  const double threshold = kSingularityThreshold * scale;
  if (n > 0 && scale == 0.0) throw SingularMatrix("zero matrix");

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(lu_(r, k)) > best) {
        best = std::abs(lu_(r, k));
        pivot = r;
      }
    }
    if (best < threshold || best == 0.0) {
      std::ostringstream os;
      os << "pivot " << best << " in column " << k << " below threshold "
         << threshold;
      throw SingularMatrix(os.str());
    }
    if (pivot != k) {
      std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(),
                       lu_.row(pivot).begin());
      std::swap(perm_[k], perm_[pivot]);
    }
    const double inv = 1.0 / lu_(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = lu_(r, k) * inv;
      lu_(r, k) = f;
      if (f == 0.0) continue;
      for (std::size_t c = k + 1; c < n; ++c) lu_(r, c) -= f * lu_(k, c);
    }
  }
}

DenseVector LuFactorization::solve(const DenseVector& rhs) const {
  const std::size_t n = size();
  if (rhs.size() != n) {
    throw DimensionMismatch("rhs length " + std::to_string(rhs.size()) +
                            " != " + std::to_string(n));
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[perm_[i]];
  for (std::size_t i = 0; i < n; ++i) {
    double s = x[i];
    for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
    x[i] = s / lu_(i, i);
  }
  return DenseVector(std::move(x));
}

DenseVector lu_solve(const DenseMatrix& a, const DenseVector& rhs) {
  if (rhs.size() != a.rows()) {
    throw DimensionMismatch("rhs length " + std::to_string(rhs.size()) +
                            " != " + std::to_string(a.rows()));
  }
  return LuFactorization(a).solve(rhs);
}

double determinant(const DenseMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  DenseMatrix m = a;
  const std::size_t n = m.rows();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(m(r, k)) > std::abs(m(pivot, k))) pivot = r;
    }
    if (m(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      std::swap_ranges(m.row(k).begin(), m.row(k).end(), m.row(pivot).begin());
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = m(r, k) / m(k, k);
      for (std::size_t c = k + 1; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return det;
}

double euclidean_norm(const DenseVector& v) {
  // Scaled accumulation so that huge iterates do not overflow.
  double scale = 0.0;
  double ssq = 1.0;
  for (double x : v) {
    if (x == 0.0) continue;
    const double ax = std::abs(x);
    if (scale < ax) {
      ssq = 1.0 + ssq * (scale / ax) * (scale / ax);
      scale = ax;
    } else {
      ssq += (ax / scale) * (ax / scale);
    }
  }
  return scale * std::sqrt(ssq);
}

double inf_norm(const DenseVector& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(const DenseVector& a, const DenseVector& b) {
  require_same_size(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

DenseVector mat_vec(const DenseMatrix& a, const DenseVector& v) {
  if (a.cols() != v.size()) {
    throw DimensionMismatch("mat_vec: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " times " +
                            std::to_string(v.size()));
  }
  DenseVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    double s = 0.0;
    const auto row = a.row(r);
    for (std::size_t c = 0; c < a.cols(); ++c) s += row[c] * v[c];
    out[r] = s;
  }
  return out;
}

DenseMatrix mat_mat(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("mat_mat: inner dimensions " +
                            std::to_string(a.cols()) + " and " +
                            std::to_string(b.rows()));
  }
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  }
  return out;
}

DenseVector hadamard(const DenseVector& a, const DenseVector& b) {
  require_same_size(a, b, "hadamard");
  DenseVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

DenseVector operator+(const DenseVector& a, const DenseVector& b) {
  return axpy(a, 1.0, b);
}

DenseVector operator-(const DenseVector& a, const DenseVector& b) {
  return axpy(a, -1.0, b);
}

DenseVector operator-(const DenseVector& a) { return -1.0 * a; }

DenseVector operator*(double s, const DenseVector& v) {
  DenseVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix sum of different shapes");
  }
  DenseMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  }
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix difference of different shapes");
  }
  DenseMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  }
  return out;
}

DenseVector axpy(const DenseVector& a, double s, const DenseVector& b) {
  require_same_size(a, b, "axpy");
  DenseVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
  return out;
}

double min_entry(const DenseVector& v) {
  double m = std::numeric_limits<double>::infinity();
  for (double x : v) m = std::min(m, x);
  return m;
}

}  // namespace leontief
