#include "leontief/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "leontief/errors.hpp"

namespace leontief {
namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

}  // namespace

std::vector<OracleSolution> enumerate_lcp_solutions(const LcpInstance& lcp,
                                                    std::size_t n_cap) {
  lcp.validate();
  const std::size_t n = lcp.size();
  if (n > n_cap || n >= 63) {
    throw EnumerationCapExceeded("LCP of order " + std::to_string(n) +
                                 " exceeds enumeration cap " + std::to_string(n_cap));
  }

  std::vector<OracleSolution> out;
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> in_support;
  std::vector<double> neg_q;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    in_support.clear();
    neg_q.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        in_support.push_back(i);
        neg_q.push_back(-lcp.q[i]);
      }
    }

    DenseVector z(n);
    if (!in_support.empty()) {
      DenseVector z_s;
      try {
        z_s = lu_solve(lcp.M.select(in_support, in_support), DenseVector(neg_q));
      } catch (const SingularMatrix&) {
        continue;
      }
      for (std::size_t a = 0; a < in_support.size(); ++a) z[in_support[a]] = z_s[a];
    }
    DenseVector w = lcp.q + mat_vec(lcp.M, z);
    for (std::size_t i : in_support) w[i] = 0.0;

    if (min_entry(z) < -kOracleSignTolerance || min_entry(w) < -kOracleSignTolerance) {
      continue;
    }
    OracleSolution sol;
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = std::max(z[i], 0.0);
      w[i] = std::max(w[i], 0.0);
      if (z[i] > kOracleSignTolerance) sol.support.push_back(i);
    }
    if (!seen.insert(sol.support).second) continue;

    sol.equation_residual = inf_norm(w - lcp.q - mat_vec(lcp.M, z));
    sol.complementarity_residual = inf_norm(hadamard(z, w));
    sol.z = std::move(z);
    sol.w = std::move(w);
    out.push_back(std::move(sol));
  }
  return out;
}

std::vector<VlcpSolution> enumerate_vlcp_solutions(const VlcpInstance& v,
                                                   std::uint64_t cap) {
  v.validate();
  const VerticalBlockMatrix& N = v.N;
  const std::size_t k = N.block_count();
  std::uint64_t budget = k >= 63 ? std::numeric_limits<std::uint64_t>::max()
                                 : saturating_mul(representative_count(N),
                                                  std::uint64_t{1} << k);
  if (budget > cap) {
    throw EnumerationCapExceeded("VLCP enumeration size " + std::to_string(budget) +
                                 " exceeds cap " + std::to_string(cap));
  }

  const DenseVector b = v.demand();
  std::vector<VlcpSolution> out;
  // choice[j] == 0: x_j = 0; choice[j] == r + 1: row r of block j binds.
  std::vector<std::size_t> choice(k, 0);
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<double> rhs;
  while (true) {
    rows.clear();
    cols.clear();
    rhs.clear();
    for (std::size_t j = 0; j < k; ++j) {
      if (choice[j] == 0) continue;
      rows.push_back(N.block_offset(j) + choice[j] - 1);
      cols.push_back(j);
      rhs.push_back(b[rows.back()]);
    }

    bool solved = true;
    DenseVector x(k);
    if (!rows.empty()) {
      try {
        const DenseVector x_active =
            lu_solve(N.stacked().select(rows, cols), DenseVector(rhs));
        for (std::size_t a = 0; a < cols.size(); ++a) x[cols[a]] = x_active[a];
      } catch (const SingularMatrix&) {
        solved = false;
      }
    }
    if (solved && verify_vlcp_solution(v, x, kOracleSignTolerance).ok) {
      const bool duplicate = std::any_of(out.begin(), out.end(), [&](const auto& s) {
        return inf_norm(s.x - x) <= kOracleSignTolerance * (1.0 + inf_norm(x));
      });
      if (!duplicate) out.push_back(evaluate_vlcp_point(v, x, kOracleSignTolerance));
    }

    std::size_t j = k;
    bool done = true;
    while (j > 0) {
      --j;
      if (++choice[j] <= N.block_size(j)) {
        done = false;
        break;
      }
      choice[j] = 0;
    }
    if (done) break;
  }
  return out;
}

}  // namespace leontief
