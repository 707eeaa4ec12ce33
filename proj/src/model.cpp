#include "leontief/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>

namespace leontief {
namespace {

constexpr double kZPatternTolerance = 1e-12;
constexpr double kInverseNonnegTolerance = -1e-9;
constexpr double kMinorZeroTolerance = 1e-12;

std::string shape(const DenseMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

VerticalBlockMatrix::VerticalBlockMatrix(const std::vector<DenseMatrix>& blocks) {
  if (blocks.empty()) throw DimensionMismatch("vertical block matrix has no blocks");
  const std::size_t k = blocks.front().cols();
  std::vector<double> entries;
  std::size_t m = 0;
  for (const auto& b : blocks) {
    if (b.cols() != k) {
      throw DimensionMismatch("block of shape " + shape(b) + " in a matrix with " +
                              std::to_string(k) + " columns");
    }
    if (b.rows() == 0) throw DimensionMismatch("empty block");
    entries.insert(entries.end(), b.values().begin(), b.values().end());
    block_sizes_.push_back(b.rows());
    m += b.rows();
  }
  if (blocks.size() != k) {
    throw DimensionMismatch(std::to_string(blocks.size()) + " blocks for " +
                            std::to_string(k) + " columns");
  }
  stacked_ = DenseMatrix(m, k, std::move(entries));
  std::size_t offset = 0;
  for (std::size_t size : block_sizes_) {
    offsets_.push_back(offset);
    offset += size;
  }
}

VerticalBlockMatrix::VerticalBlockMatrix(DenseMatrix stacked,
                                         std::vector<std::size_t> block_sizes)
    : stacked_(std::move(stacked)), block_sizes_(std::move(block_sizes)) {
  if (block_sizes_.size() != stacked_.cols()) {
    throw DimensionMismatch(std::to_string(block_sizes_.size()) + " blocks for " +
                            std::to_string(stacked_.cols()) + " columns");
  }
  std::size_t offset = 0;
  for (std::size_t size : block_sizes_) {
    if (size == 0) throw DimensionMismatch("empty block");
    offsets_.push_back(offset);
    offset += size;
  }
  if (offset != stacked_.rows()) {
    throw DimensionMismatch("block sizes sum to " + std::to_string(offset) +
                            " but matrix has " + std::to_string(stacked_.rows()) +
                            " rows");
  }
}

std::size_t VerticalBlockMatrix::block_of_row(std::size_t i) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i);
  return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

DenseMatrix VerticalBlockMatrix::block(std::size_t j) const {
  DenseMatrix out(block_sizes_[j], cols());
  for (std::size_t r = 0; r < block_sizes_[j]; ++r) {
    const auto src = stacked_.row(offsets_[j] + r);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

void LcpInstance::validate() const {
  if (!M.is_square() || M.rows() != q.size()) {
    throw DimensionMismatch("LCP with M " + shape(M) + " and q of length " +
                            std::to_string(q.size()));
  }
}

void VlcpInstance::validate() const {
  if (N.rows() != q.size()) {
    throw DimensionMismatch("VLCP with N " + shape(N.stacked()) +
                            " and q of length " + std::to_string(q.size()));
  }
}

void GeneralizedLeontiefModel::validate() const {
  if (sectors == 0) throw DimensionMismatch("model has no sectors");
  if (technology_blocks.size() != sectors || demand_blocks.size() != sectors) {
    throw DimensionMismatch("model declares " + std::to_string(sectors) +
                            " sectors but has " +
                            std::to_string(technology_blocks.size()) +
                            " technology and " +
                            std::to_string(demand_blocks.size()) + " demand blocks");
  }
  for (std::size_t j = 0; j < sectors; ++j) {
    const auto& a = technology_blocks[j];
    if (a.rows() == 0) {
      throw DimensionMismatch("sector " + std::to_string(j) + " has no technology");
    }
    if (a.cols() != sectors) {
      throw DimensionMismatch("sector " + std::to_string(j) +
                              " technology block is " + shape(a));
    }
    if (demand_blocks[j].size() != a.rows()) {
      throw DimensionMismatch("sector " + std::to_string(j) + " has " +
                              std::to_string(a.rows()) + " technologies but " +
                              std::to_string(demand_blocks[j].size()) +
                              " demands");
    }
  }
}

bool GeneralizedLeontiefModel::is_single_technology() const {
  return std::all_of(technology_blocks.begin(), technology_blocks.end(),
                     [](const DenseMatrix& a) { return a.rows() == 1; });
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << (ok ? "verified" : "NOT verified")
     << " (feasibility residual " << feasibility_residual
     << ", complementarity residual " << complementarity_residual << ")\n";
  for (const auto& b : blocks) {
    os << "  block " << b.block << ": x=" << b.x << " min_slack=" << b.min_slack;
    if (!b.nonnegative) os << " [x negative]";
    if (!b.feasible) os << " [infeasible]";
    if (!b.complementary) os << " [not complementary]";
    os << '\n';
  }
  return os.str();
}

LcpInstance build_open_leontief_lcp(const DenseMatrix& T, const DenseVector& b) {
  if (!T.is_square() || T.rows() != b.size()) {
    throw DimensionMismatch("open Leontief model with T " + shape(T) +
                            " and demand of length " + std::to_string(b.size()));
  }
  return LcpInstance{DenseMatrix::identity(T.rows()) - T, -b};
}

MMatrixVerdict m_matrix_diagnose(const DenseMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("M-matrix test on " + shape(a));
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && a(i, j) > kZPatternTolerance) {
        std::ostringstream os;
        os << "not a Z-matrix: entry (" << i << "," << j << ") = " << a(i, j);
        return {false, os.str()};
      }
    }
  }
  std::optional<LuFactorization> lu;
  try {
    lu.emplace(a);
  } catch (const SingularMatrix& e) {
    return {false, std::string("singular: ") + e.what()};
  }
  double min_inv = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < n; ++c) {
    DenseVector unit(n);
    unit[c] = 1.0;
    min_inv = std::min(min_inv, min_entry(lu->solve(unit)));
  }
  if (n > 0 && min_inv < kInverseNonnegTolerance) {
    std::ostringstream os;
    os << "inverse has negative entry " << min_inv;
    return {false, os.str()};
  }
  return {true, "nonsingular M-matrix"};
}

bool m_matrix_check(const DenseMatrix& a) {
  return m_matrix_diagnose(a).is_nonsingular_m_matrix;
}

std::uint64_t representative_count(const VerticalBlockMatrix& n) {
  std::uint64_t count = 1;
  for (std::size_t m : n.block_sizes()) {
    if (count > std::numeric_limits<std::uint64_t>::max() / m) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= m;
  }
  return count;
}

std::vector<DenseMatrix> representative_submatrices(const VerticalBlockMatrix& n,
                                                    std::uint64_t cap) {
  std::vector<DenseMatrix> out;
  for_each_representative(
      n,
      [&](const std::vector<std::size_t>&, DenseMatrix sub) {
        out.push_back(std::move(sub));
        return true;
      },
      cap);
  return out;
}

PrincipalMinorReport principal_minors(const DenseMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("principal minors of " + shape(a));
  const std::size_t n = a.rows();
  if (n > kMaxMinorOrder) {
    throw EnumerationCapExceeded("principal minor enumeration limited to order " +
                                 std::to_string(kMaxMinorOrder) + ", got " +
                                 std::to_string(n));
  }
  const double scale = a.max_abs();
  PrincipalMinorReport report;
  report.min_minor = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> idx;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    idx.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) idx.push_back(i);
    }
    const double minor = determinant(a.select(idx, idx));
    const double zero_tol =
        kMinorZeroTolerance * std::pow(scale, static_cast<double>(idx.size()));
    report.min_minor = std::min(report.min_minor, minor);
    if (minor <= zero_tol) report.is_p = false;
    if (minor < -zero_tol) report.is_p0 = false;
  }
  if (n == 0) report.min_minor = 0.0;
  return report;
}

VerticalBlockReport classify_vertical_block(const VerticalBlockMatrix& n,
                                            std::uint64_t cap) {
  if (n.cols() > kMaxMinorOrder) {
    throw EnumerationCapExceeded("principal minor enumeration limited to order " +
                                 std::to_string(kMaxMinorOrder));
  }
  VerticalBlockReport report;
  for_each_representative(
      n,
      [&](const std::vector<std::size_t>& choice, const DenseMatrix& sub) {
        ++report.representatives;
        const auto minors = principal_minors(sub);
        if (!minors.is_p && report.is_p) {
          report.is_p = false;
          report.first_non_p = choice;
        }
        if (!minors.is_p0 && report.is_p0) {
          report.is_p0 = false;
          report.first_non_p0 = choice;
        }
        return true;
      },
      cap);
  return report;
}

bool is_vertical_block_P(const VerticalBlockMatrix& n, std::uint64_t cap) {
  return classify_vertical_block(n, cap).is_p;
}

bool is_vertical_block_P0(const VerticalBlockMatrix& n, std::uint64_t cap) {
  return classify_vertical_block(n, cap).is_p0;
}

DenseMatrix equivalent_square_matrix(const VerticalBlockMatrix& n) {
  const std::size_t m = n.rows();
  DenseMatrix out(m, m);
  for (std::size_t j = 0; j < n.block_count(); ++j) {
    const std::size_t first = n.block_offset(j);
    for (std::size_t copy = 0; copy < n.block_size(j); ++copy) {
      for (std::size_t i = 0; i < m; ++i) out(i, first + copy) = n.stacked()(i, j);
    }
  }
  return out;
}

LcpInstance lift_vlcp_to_lcp(const VlcpInstance& v) {
  v.validate();
  return LcpInstance{equivalent_square_matrix(v.N), v.q};
}

VlcpSolution evaluate_vlcp_point(const VlcpInstance& v, const DenseVector& x,
                                 double tol) {
  v.validate();
  if (x.size() != v.N.cols()) {
    throw DimensionMismatch("x of length " + std::to_string(x.size()) +
                            " for a VLCP with " + std::to_string(v.N.cols()) +
                            " columns");
  }
  VlcpSolution sol;
  sol.x = x;
  sol.slack = mat_vec(v.N.stacked(), x) + v.q;
  double infeas = std::max(0.0, -min_entry(x));
  infeas = std::max(infeas, -min_entry(sol.slack));
  sol.feasibility_residual = std::max(0.0, infeas);
  for (std::size_t j = 0; j < v.N.block_count(); ++j) {
    if (x[j] <= tol) continue;
    double min_slack = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < v.N.block_size(j); ++r) {
      min_slack = std::min(min_slack, sol.slack[v.N.block_offset(j) + r]);
    }
    sol.complementarity_residual =
        std::max(sol.complementarity_residual, std::max(0.0, min_slack));
  }
  return sol;
}

VlcpSolution recover_vlcp_solution(const VlcpInstance& v, const DenseVector& z,
                                   const DenseVector& w, double tol) {
  if (z.size() != v.N.rows() || w.size() != v.N.rows()) {
    throw DimensionMismatch("lifted iterate of length " + std::to_string(z.size()) +
                            "/" + std::to_string(w.size()) + " for " +
                            std::to_string(v.N.rows()) + " rows");
  }
  DenseVector x(v.N.cols());
  for (std::size_t j = 0; j < v.N.block_count(); ++j) {
    double sum = 0.0;
    for (std::size_t c = 0; c < v.N.block_size(j); ++c) {
      sum += z[v.N.block_offset(j) + c];
    }
    x[j] = sum;
  }
  return evaluate_vlcp_point(v, x, tol);
}

VerificationReport verify_vlcp_solution(const VlcpInstance& v, const DenseVector& x,
                                        double tol) {
  const VlcpSolution sol = evaluate_vlcp_point(v, x, tol);
  VerificationReport report;
  report.feasibility_residual = sol.feasibility_residual;
  report.complementarity_residual = sol.complementarity_residual;
  for (std::size_t j = 0; j < v.N.block_count(); ++j) {
    BlockDiagnostic d;
    d.block = j;
    d.x = x[j];
    d.min_slack = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < v.N.block_size(j); ++r) {
      d.min_slack = std::min(d.min_slack, sol.slack[v.N.block_offset(j) + r]);
    }
    d.nonnegative = x[j] >= -tol;
    d.feasible = d.min_slack >= -tol;
    d.complementary = std::abs(x[j]) <= tol || d.min_slack <= tol;
    report.ok = report.ok && d.nonnegative && d.feasible && d.complementary;
    report.blocks.push_back(d);
  }
  return report;
}

VlcpInstance build_generalized_leontief_vlcp(const GeneralizedLeontiefModel& model) {
  model.validate();
  std::vector<DenseMatrix> blocks;
  std::vector<double> q;
  for (std::size_t j = 0; j < model.sectors; ++j) {
    const DenseMatrix& a = model.technology_blocks[j];
    DenseMatrix block(a.rows(), model.sectors);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < model.sectors; ++c) {
        block(r, c) = (c == j ? 1.0 : 0.0) - a(r, c);
      }
      q.push_back(-model.demand_blocks[j][r]);
    }
    blocks.push_back(std::move(block));
  }
  return VlcpInstance{VerticalBlockMatrix(blocks), DenseVector(std::move(q))};
}

}  // namespace leontief
