#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "leontief/linalg.hpp"
#include "leontief/model.hpp"

namespace leontief {

// Brute-force reference solvers for small problems.

struct OracleSolution {
  DenseVector z;
  DenseVector w;
  std::vector<std::size_t> support;  ///< indices with z_i > 0
  double complementarity_residual = 0.0;  ///< max |z_i w_i|
  double equation_residual = 0.0;         ///< |w - q - M z|_inf
};

inline constexpr std::size_t kDefaultLcpOrderCap = 16;
inline constexpr std::uint64_t kDefaultVlcpCap = std::uint64_t{1} << 16;
inline constexpr double kOracleSignTolerance = 1e-9;

/// Tries all 2^n complementary supports S: z_S solves M_SS z_S = -q_S,
/// w_S = 0, z outside S = 0. Keeps sign-feasible results, one per distinct
/// support, ordered by the bitmask rank of S. Throws EnumerationCapExceeded for
/// n > n_cap.
std::vector<OracleSolution> enumerate_lcp_solutions(
    const LcpInstance& lcp, std::size_t n_cap = kDefaultLcpOrderCap);

/// For every sector either x_j = 0 or one binding row of block j is chosen; the
/// resulting square system is solved and kept if it verifies at 1e-9. Throws
/// EnumerationCapExceeded when prod(m_j) * 2^k > cap.
std::vector<VlcpSolution> enumerate_vlcp_solutions(const VlcpInstance& v,
                                                   std::uint64_t cap = kDefaultVlcpCap);

}  // namespace leontief
