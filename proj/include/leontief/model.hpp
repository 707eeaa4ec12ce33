#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "leontief/errors.hpp"
#include "leontief/linalg.hpp"

namespace leontief {

/// Row-partitioned m x k matrix of type (m_1, ..., m_k). Block j holds m_j rows,
/// all blocks have k columns and sum(m_j) = m >= k.
class VerticalBlockMatrix {
 public:
  VerticalBlockMatrix() = default;
  /// Stacks the given blocks top to bottom. Throws DimensionMismatch unless
  /// there are exactly k = cols blocks, each non-empty.
  explicit VerticalBlockMatrix(const std::vector<DenseMatrix>& blocks);
  /// Wraps an already stacked matrix with the given block sizes.
  VerticalBlockMatrix(DenseMatrix stacked, std::vector<std::size_t> block_sizes);

  std::size_t rows() const { return stacked_.rows(); }
  std::size_t cols() const { return stacked_.cols(); }
  std::size_t block_count() const { return block_sizes_.size(); }
  const std::vector<std::size_t>& block_sizes() const { return block_sizes_; }
  std::size_t block_size(std::size_t j) const { return block_sizes_[j]; }
  /// Index of the first row of block j in the stacked matrix.
  std::size_t block_offset(std::size_t j) const { return offsets_[j]; }
  /// Block that stacked row i belongs to.
  std::size_t block_of_row(std::size_t i) const;

  DenseMatrix block(std::size_t j) const;
  const DenseMatrix& stacked() const { return stacked_; }

 private:
  DenseMatrix stacked_;
  std::vector<std::size_t> block_sizes_;
  std::vector<std::size_t> offsets_;
};

/// LCP(q, M): find z >= 0 with w = q + M z >= 0 and z'w = 0.
struct LcpInstance {
  DenseMatrix M;
  DenseVector q;

  std::size_t size() const { return q.size(); }
  /// Throws DimensionMismatch unless M is square and matches q.
  void validate() const;
};

/// VLCP(q, N): find x >= 0 with s = q + N x >= 0 and, for every block j,
/// x_j * prod_i s^j_i = 0.
struct VlcpInstance {
  VerticalBlockMatrix N;
  DenseVector q;

  void validate() const;
  /// Demand vector b = -q.
  DenseVector demand() const { return -q; }
};

/// Per-sector technology blocks A^j (m_j x n) and demands b^j (m_j).
struct GeneralizedLeontiefModel {
  std::size_t sectors = 0;
  std::vector<DenseMatrix> technology_blocks;
  std::vector<DenseVector> demand_blocks;

  void validate() const;
  /// True when every sector has exactly one technology.
  bool is_single_technology() const;
};

struct VlcpSolution {
  DenseVector x;
  DenseVector slack;
  /// Largest positive min-slack over the blocks whose x_j exceeds tol.
  double complementarity_residual = 0.0;
  /// max(0, -min x, -min slack).
  double feasibility_residual = 0.0;
};

struct BlockDiagnostic {
  std::size_t block = 0;
  double x = 0.0;
  double min_slack = 0.0;
  bool nonnegative = true;
  bool feasible = true;
  bool complementary = true;
};

struct VerificationReport {
  bool ok = true;
  std::vector<BlockDiagnostic> blocks;
  double complementarity_residual = 0.0;
  double feasibility_residual = 0.0;

  std::string summary() const;
};

/// Open Leontief model as LCP: M = I - T, q = -b.
LcpInstance build_open_leontief_lcp(const DenseMatrix& T, const DenseVector& b);

struct MMatrixVerdict {
  bool is_nonsingular_m_matrix = false;
  std::string diagnostic;
};

/// Nonsingular M-matrix test: Z-pattern, nonsingular, inverse entrywise >= -1e-9.
MMatrixVerdict m_matrix_diagnose(const DenseMatrix& a);
bool m_matrix_check(const DenseMatrix& a);

inline constexpr std::uint64_t kDefaultRepresentativeCap = 1'000'000;
inline constexpr std::size_t kMaxMinorOrder = 12;

/// Number of representative submatrices, prod(m_j). Saturates at UINT64_MAX.
std::uint64_t representative_count(const VerticalBlockMatrix& n);

/// All k x k representative submatrices in lexicographic order of row choices.
/// Throws EnumerationCapExceeded when prod(m_j) > cap.
std::vector<DenseMatrix> representative_submatrices(
    const VerticalBlockMatrix& n, std::uint64_t cap = kDefaultRepresentativeCap);

/// Calls visit(choice, submatrix) for each representative, in the same order as
/// representative_submatrices. `choice[j]` is the row inside block j. Stops early
/// when visit returns false.
template <typename Visitor>
void for_each_representative(const VerticalBlockMatrix& n, Visitor&& visit,
                             std::uint64_t cap = kDefaultRepresentativeCap);

struct PrincipalMinorReport {
  bool is_p = true;
  bool is_p0 = true;
  double min_minor = 0.0;
};

/// Enumerates every principal minor. A minor counts as zero when its magnitude is
/// below 1e-12 * max|a_ij|^order. Throws EnumerationCapExceeded above order 12.
PrincipalMinorReport principal_minors(const DenseMatrix& a);

struct VerticalBlockReport {
  bool is_p = true;
  bool is_p0 = true;
  std::uint64_t representatives = 0;
  /// Row choice of the first representative that is not P (empty if none).
  std::vector<std::size_t> first_non_p;
  std::vector<std::size_t> first_non_p0;
};

VerticalBlockReport classify_vertical_block(
    const VerticalBlockMatrix& n, std::uint64_t cap = kDefaultRepresentativeCap);
bool is_vertical_block_P(const VerticalBlockMatrix& n,
                         std::uint64_t cap = kDefaultRepresentativeCap);
bool is_vertical_block_P0(const VerticalBlockMatrix& n,
                          std::uint64_t cap = kDefaultRepresentativeCap);

/// m x m matrix whose column block j is m_j copies of column j of N.
DenseMatrix equivalent_square_matrix(const VerticalBlockMatrix& n);

LcpInstance lift_vlcp_to_lcp(const VlcpInstance& v);

/// Maps an LCP(q, M) iterate on the lifted problem back to the vertical problem:
/// x_j is the sum of z over the copies of column j; slack = N x - b.
VlcpSolution recover_vlcp_solution(const VlcpInstance& v, const DenseVector& z,
                                   const DenseVector& w, double tol);

/// Checks x >= -tol, N x - b >= -tol and, per block, x_j <= tol or
/// min slack <= tol.
VerificationReport verify_vlcp_solution(const VlcpInstance& v,
                                        const DenseVector& x, double tol);

/// Evaluates slack and residuals of x without judging it.
VlcpSolution evaluate_vlcp_point(const VlcpInstance& v, const DenseVector& x,
                                 double tol);

/// N = E - A, q = -b.
VlcpInstance build_generalized_leontief_vlcp(const GeneralizedLeontiefModel& model);

// ---------------------------------------------------------------------------

template <typename Visitor>
void for_each_representative(const VerticalBlockMatrix& n, Visitor&& visit,
                             std::uint64_t cap) {
  if (representative_count(n) > cap) {
    throw EnumerationCapExceeded(
        "representative submatrix count " +
        std::to_string(representative_count(n)) + " exceeds cap " +
        std::to_string(cap));
  }
  const std::size_t k = n.block_count();
  std::vector<std::size_t> choice(k, 0);
  std::vector<std::size_t> rows(k);
  std::vector<std::size_t> cols(n.cols());
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  while (true) {
    for (std::size_t j = 0; j < k; ++j) rows[j] = n.block_offset(j) + choice[j];
    if (!visit(static_cast<const std::vector<std::size_t>&>(choice),
               n.stacked().select(rows, cols))) {
      return;
    }
    // Odometer increment, last block fastest.
    std::size_t j = k;
    while (j > 0) {
      --j;
      if (++choice[j] < n.block_size(j)) break;
      choice[j] = 0;
      if (j == 0) return;
    }
    if (k == 0) return;
  }
}

}  // namespace leontief
