#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "leontief/linalg.hpp"
#include "leontief/model.hpp"

namespace leontief {

/// Tunables of the infeasible interior-point descent method.
struct SolverConfig {
  double delta = 1e-6;        ///< stop once merit <= delta
  double beta = 0.25;         ///< Armijo constant, (0, 1/2]
  double gamma = 1e-3;        ///< centrality constant, (0, 1)
  double gamma_prime = 1.0;   ///< gap / residual coupling, > 0
  double sigma = 0.5;         ///< centering parameter, [0, 1)
  double epsilon = 1e-8;      ///< residual acceptance in the neighborhood
  double omega_star = 1e12;   ///< iterate norm cap (diagnostic only)
  std::size_t max_iterations = 500;
  double backtrack_ratio = 0.5;
  std::size_t max_backtracks = 60;
  /// Starting point z0 = w0 = start_scale * e. Zero picks max(10, |q|_inf).
  double start_scale = 0.0;

  void validate() const;
  double epsilon_bar() const;
  double resolved_start_scale(const DenseVector& q) const;
};

/// Point (z, w) of the trajectory together with the quantities derived from it.
struct IterateState {
  DenseVector z;
  DenseVector w;
  double mu = 0.0;
  double merit = 0.0;
  DenseVector residual;  ///< w - M z - q
  double gap = 0.0;      ///< z'w
};

/// Fills residual, gap, merit and mu = sigma * gap / n.
IterateState make_state(DenseVector z, DenseVector w, const LcpInstance& lcp,
                        double sigma);

struct Direction {
  DenseVector d_z;
  DenseVector d_w;
  double mu = 0.0;
  /// max_i |dz_i dw_i - gamma dz'dw / n|
  double eta1 = 0.0;
  /// |dz'dw|
  double eta2 = 0.0;
  double step_floor = 0.0;
};

enum class SolveStatus {
  kConverged,
  kIterationLimit,
  kLineSearchFailure,
  kSingularNewtonSystem,
  kRecoveryVerificationFailed,
};

std::string_view to_string(SolveStatus status);

struct TraceRecord {
  std::size_t k = 0;
  double mu = 0.0;
  double alpha = 0.0;
  double merit = 0.0;
  double gap = 0.0;
  double residual_norm = 0.0;
  double step_floor = 0.0;
};

struct SolveReport {
  SolveStatus status = SolveStatus::kIterationLimit;
  std::size_t iterations = 0;
  IterateState final;
  std::vector<TraceRecord> trace;
  std::vector<std::string> warnings;
  std::string message;

  bool converged() const { return status == SolveStatus::kConverged; }
};

/// Everything a caller may want to audit about one accepted step.
struct IterationEvent {
  std::size_t k = 0;
  const IterateState& before;
  const Direction& direction;
  double alpha = 0.0;
  const IterateState& after;
};

using IterationObserver = std::function<void(const IterationEvent&)>;

/// sqrt(|w - M z - q|^2 + |ZWe|^2)
double merit(const DenseVector& z, const DenseVector& w, const LcpInstance& lcp);

/// Newton step on F(z, w) = (w - M z - q, ZWe - mu e) with mu = sigma z'w / n.
/// d_z solves (ZM + W) d_z = -(Z q + Z M z - mu e); d_w = M (z + d_z) - w + q.
/// eta1 / eta2 use `gamma`; step_floor is left for step_length to fill.
Direction newton_direction(const IterateState& state, const LcpInstance& lcp,
                           double sigma, double gamma = SolverConfig{}.gamma);

/// Directional derivative of the merit along (d_z, d_w). Throws ZeroMerit when
/// the merit vanishes.
double grad_merit_dot_direction(const IterateState& state, const LcpInstance& lcp,
                                const Direction& dir);

bool neighborhood_contains(const DenseVector& z, const DenseVector& w,
                           const LcpInstance& lcp, const SolverConfig& config);

struct StepLength {
  double alpha = 0.0;
  /// min{1, sigma eps_bar (1 - gamma) / (n eta1), mu / eta2}
  double step_floor = 0.0;
  std::size_t trials = 0;
};

/// min{1, sigma * eps_bar * (1 - gamma) / (n * eta1), mu / eta2}
double theoretical_step_floor(const Direction& dir, std::size_t n,
                              const SolverConfig& config);

/// Backtracks from min(1, 0.9995 * positivity limit) by backtrack_ratio until the
/// trial point is positive, in the neighborhood and meets the Armijo test.
/// Throws LineSearchFailure after max_backtracks trials.
StepLength step_length(const IterateState& state, const Direction& dir,
                       const LcpInstance& lcp, const SolverConfig& config);

SolveReport solve_lcp(const LcpInstance& lcp, const SolverConfig& config = {},
                      const IterationObserver& observer = {});

struct VlcpSolveResult {
  SolveReport report;
  VlcpSolution solution;
  VerificationReport verification;
  double verification_tol = 0.0;
};

/// Lifts to the equivalent square LCP, solves it and maps the result back. A
/// converged run whose recovered x fails verification at max(10 delta, 1e-6)
/// reports kRecoveryVerificationFailed.
VlcpSolveResult solve_vlcp(const VlcpInstance& v, const SolverConfig& config = {},
                           const IterationObserver& observer = {});

}  // namespace leontief
