#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace leontief {

// Dense real vector. Entries are always finite.
class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(std::size_t size, double value = 0.0);
  explicit DenseVector(std::vector<double> entries);
  DenseVector(std::initializer_list<double> entries);

  static DenseVector ones(std::size_t size) { return DenseVector(size, 1.0); }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  double operator[](std::size_t i) const { return entries_[i]; }
  double& operator[](std::size_t i) { return entries_[i]; }

  std::span<const double> values() const { return entries_; }
  std::span<double> values() { return entries_; }
  const std::vector<double>& to_vector() const { return entries_; }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool operator==(const DenseVector&) const = default;

 private:
  std::vector<double> entries_;
};

// Dense real matrix stored row-major. Entries are always finite.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double value = 0.0);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> diag);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  double operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  double& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }

  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(entries_).subspan(r * cols_, cols_);
  }
  std::span<double> row(std::size_t r) {
    return std::span<double>(entries_).subspan(r * cols_, cols_);
  }
  DenseVector column(std::size_t c) const;

  std::span<const double> values() const { return entries_; }

  // Largest absolute entry, 0 for an empty matrix.
  double max_abs() const;

  // Copy of the rows / columns selected by the given index lists.
  DenseMatrix select(std::span<const std::size_t> row_idx,
                     std::span<const std::size_t> col_idx) const;

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

// LU factorization with partial pivoting, P A = L U.
//
// Factoring fails with SingularMatrix when the magnitude of a pivot falls below
// `kSingularityThreshold * max|A_ij|`, so detection does not depend on the
// overall scale of A.
class LuFactorization {
 public:
  static constexpr double kSingularityThreshold = 1e-12;

  explicit LuFactorization(const DenseMatrix& a);

  std::size_t size() const { return lu_.rows(); }
  DenseVector solve(const DenseVector& rhs) const;

 private:
  DenseMatrix lu_;
  std::vector<std::size_t> perm_;
};

// Solves A x = rhs. Throws SingularMatrix or DimensionMismatch.
DenseVector lu_solve(const DenseMatrix& a, const DenseVector& rhs);

// Determinant by Gaussian elimination with partial pivoting. Never throws on
// singular input; returns 0 when an exact zero pivot column is met.
double determinant(const DenseMatrix& a);

double euclidean_norm(const DenseVector& v);
double inf_norm(const DenseVector& v);
double dot(const DenseVector& a, const DenseVector& b);

DenseVector mat_vec(const DenseMatrix& a, const DenseVector& v);
DenseMatrix mat_mat(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);
DenseVector hadamard(const DenseVector& a, const DenseVector& b);

DenseVector operator+(const DenseVector& a, const DenseVector& b);
DenseVector operator-(const DenseVector& a, const DenseVector& b);
DenseVector operator-(const DenseVector& a);
DenseVector operator*(double s, const DenseVector& v);
DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);

// a + s * b
DenseVector axpy(const DenseVector& a, double s, const DenseVector& b);

double min_entry(const DenseVector& v);

}  // namespace leontief
