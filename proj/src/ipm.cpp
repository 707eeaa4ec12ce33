#include "leontief/ipm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "leontief/errors.hpp"

namespace leontief {
namespace {

constexpr double kPositivityClip = 0.9995;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_conformant(const DenseVector& z, const DenseVector& w,
                        const LcpInstance& lcp) {
  lcp.validate();
  if (z.size() != lcp.size() || w.size() != lcp.size()) {
    throw DimensionMismatch("iterate of length " + std::to_string(z.size()) + "/" +
                            std::to_string(w.size()) + " for an LCP of order " +
                            std::to_string(lcp.size()));
  }
}

DenseVector residual_of(const DenseVector& z, const DenseVector& w,
                        const LcpInstance& lcp) {
  return w - mat_vec(lcp.M, z) - lcp.q;
}

bool strictly_positive(const DenseVector& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x > 0.0; });
}

bool is_zero(const DenseVector& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

// Largest alpha keeping x + alpha d >= 0, infinity if d >= 0.
double positivity_limit(const DenseVector& x, const DenseVector& d) {
  double limit = kInf;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (d[i] < 0.0) limit = std::min(limit, -x[i] / d[i]);
  }
  return limit;
}

void require_range(bool ok, const char* what) {
  if (!ok) throw InvalidConfig(std::string("invalid solver config: ") + what);
}

}  // namespace

void SolverConfig::validate() const {
  require_range(std::isfinite(delta) && delta > 0.0, "delta must be > 0");
  require_range(beta > 0.0 && beta <= 0.5, "beta must lie in (0, 1/2]");
  require_range(gamma > 0.0 && gamma < 1.0, "gamma must lie in (0, 1)");
  require_range(std::isfinite(gamma_prime) && gamma_prime > 0.0,
                "gamma_prime must be > 0");
  require_range(sigma >= 0.0 && sigma < 1.0, "sigma must lie in [0, 1)");
  require_range(std::isfinite(epsilon) && epsilon > 0.0, "epsilon must be > 0");
  require_range(omega_star > 0.0, "omega_star must be > 0");
  require_range(backtrack_ratio > 0.0 && backtrack_ratio < 1.0,
                "backtrack_ratio must lie in (0, 1)");
  require_range(max_backtracks >= 1, "max_backtracks must be >= 1");
  require_range(std::isfinite(start_scale) && start_scale >= 0.0,
                "start_scale must be >= 0 (0 selects the default)");
}

double SolverConfig::epsilon_bar() const {
  return std::min(epsilon, gamma_prime * epsilon);
}

double SolverConfig::resolved_start_scale(const DenseVector& q) const {
  if (start_scale > 0.0) return start_scale;
  return std::max(10.0, inf_norm(q));
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kConverged:
      return "Converged";
    case SolveStatus::kIterationLimit:
      return "IterationLimit";
    case SolveStatus::kLineSearchFailure:
      return "LineSearchFailure";
    case SolveStatus::kSingularNewtonSystem:
      return "SingularNewtonSystem";
    case SolveStatus::kRecoveryVerificationFailed:
      return "RecoveryVerificationFailed";
  }
  return "Unknown";
}

double merit(const DenseVector& z, const DenseVector& w, const LcpInstance& lcp) {
  require_conformant(z, w, lcp);
  return std::hypot(euclidean_norm(residual_of(z, w, lcp)),
                    euclidean_norm(hadamard(z, w)));
}

IterateState make_state(DenseVector z, DenseVector w, const LcpInstance& lcp,
                        double sigma) {
  require_conformant(z, w, lcp);
  IterateState s;
  s.residual = residual_of(z, w, lcp);
  s.gap = dot(z, w);
  s.merit = std::hypot(euclidean_norm(s.residual), euclidean_norm(hadamard(z, w)));
  s.mu = z.empty() ? 0.0 : sigma * s.gap / static_cast<double>(z.size());
  s.z = std::move(z);
  s.w = std::move(w);
  return s;
}

Direction newton_direction(const IterateState& state, const LcpInstance& lcp,
                           double sigma, double gamma) {
  const DenseVector& z = state.z;
  const DenseVector& w = state.w;
  require_conformant(z, w, lcp);
  const std::size_t n = z.size();
  const double nd = static_cast<double>(n);

  Direction dir;
  dir.mu = sigma * dot(z, w) / nd;

  // (ZM + W) d_z = -(Z q + Z M z - mu e)
  DenseMatrix jac(n, n);
  const DenseVector mz = mat_vec(lcp.M, z);
  DenseVector rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) jac(i, j) = z[i] * lcp.M(i, j);
    jac(i, i) += w[i];
    rhs[i] = -(z[i] * (lcp.q[i] + mz[i]) - dir.mu);
  }
  try {
    dir.d_z = lu_solve(jac, rhs);
  } catch (const SingularMatrix& e) {
    throw SingularNewtonSystem(std::string("ZM + W is singular: ") + e.what());
  }
  dir.d_w = mat_vec(lcp.M, z + dir.d_z) - w + lcp.q;

  const double dzdw = dot(dir.d_z, dir.d_w);
  dir.eta2 = std::abs(dzdw);
  for (std::size_t i = 0; i < n; ++i) {
    dir.eta1 = std::max(dir.eta1,
                        std::abs(dir.d_z[i] * dir.d_w[i] - gamma * dzdw / nd));
  }
  return dir;
}

double grad_merit_dot_direction(const IterateState& state, const LcpInstance& lcp,
                                const Direction& dir) {
  require_conformant(state.z, state.w, lcp);
  const DenseVector r = residual_of(state.z, state.w, lcp);
  const DenseVector zw = hadamard(state.z, state.w);
  const double phi = std::hypot(euclidean_norm(r), euclidean_norm(zw));
  if (phi == 0.0) throw ZeroMerit("merit is zero, gradient undefined");

  // F'(p) d, where F(p) = (w - M z - q, ZWe)
  const DenseVector d_res = dir.d_w - mat_vec(lcp.M, dir.d_z);
  const DenseVector d_comp =
      hadamard(state.w, dir.d_z) + hadamard(state.z, dir.d_w);
  return (dot(r, d_res) + dot(zw, d_comp)) / phi;
}

bool neighborhood_contains(const DenseVector& z, const DenseVector& w,
                           const LcpInstance& lcp, const SolverConfig& config) {
  require_conformant(z, w, lcp);
  if (!strictly_positive(z) || !strictly_positive(w)) return false;
  const double gap = dot(z, w);
  const double centre = config.gamma * gap / static_cast<double>(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] * w[i] < centre) return false;
  }
  const double res = euclidean_norm(residual_of(z, w, lcp));
  return gap >= config.gamma_prime * res || res <= config.epsilon;
}

double theoretical_step_floor(const Direction& dir, std::size_t n,
                              const SolverConfig& config) {
  const double nd = static_cast<double>(n);
  const double centrality =
      dir.eta1 > 0.0
          ? config.sigma * config.epsilon_bar() * (1.0 - config.gamma) / (nd * dir.eta1)
          : kInf;
  const double coupling = dir.eta2 > 0.0 ? dir.mu / dir.eta2 : kInf;
  return std::min({1.0, centrality, coupling});
}

StepLength step_length(const IterateState& state, const Direction& dir,
                       const LcpInstance& lcp, const SolverConfig& config) {
  StepLength out;
  out.step_floor = theoretical_step_floor(dir, state.z.size(), config);
  if (is_zero(dir.d_z) && is_zero(dir.d_w)) {
    out.alpha = 1.0;
    return out;
  }

  const double limit =
      std::min(positivity_limit(state.z, dir.d_z), positivity_limit(state.w, dir.d_w));
  const double start = limit > 1.0 ? 1.0 : kPositivityClip * limit;
  const double slope =
      state.merit > 0.0 ? grad_merit_dot_direction(state, lcp, dir) : 0.0;

  double alpha = start;
  for (std::size_t t = 0; t < config.max_backtracks; ++t, alpha *= config.backtrack_ratio) {
    out.trials = t + 1;
    const DenseVector z = axpy(state.z, alpha, dir.d_z);
    const DenseVector w = axpy(state.w, alpha, dir.d_w);
    if (!neighborhood_contains(z, w, lcp, config)) continue;
    if (merit(z, w, lcp) - state.merit <= alpha * config.beta * slope) {
      out.alpha = alpha;
      return out;
    }
  }
  std::ostringstream os;
  os << "no acceptable step after " << config.max_backtracks
     << " trials (initial step " << start << ", slope " << slope << ")";
  throw LineSearchFailure(os.str());
}

namespace {

TraceRecord record_of(std::size_t k, const IterateState& s, double mu, double alpha,
                      double step_floor) {
  return TraceRecord{k, mu, alpha, s.merit, s.gap, euclidean_norm(s.residual),
                     step_floor};
}

}  // namespace

SolveReport solve_lcp(const LcpInstance& lcp, const SolverConfig& config,
                      const IterationObserver& observer) {
  config.validate();
  lcp.validate();
  const std::size_t n = lcp.size();
  SolveReport report;
  if (n == 0) {
    report.status = SolveStatus::kConverged;
    report.trace.push_back(TraceRecord{});
    return report;
  }

  const double scale = config.resolved_start_scale(lcp.q);
  IterateState state = make_state(DenseVector(n, scale), DenseVector(n, scale), lcp,
                                  config.sigma);
  bool warned_norm = false;
  bool warned_gap = false;

  for (std::size_t k = 0;; ++k) {
    if (state.merit <= config.delta) {
      report.status = SolveStatus::kConverged;
      report.trace.push_back(record_of(k, state, state.mu, 0.0, 0.0));
      break;
    }
    if (k >= config.max_iterations) {
      report.status = SolveStatus::kIterationLimit;
      report.message = "merit " + std::to_string(state.merit) + " after " +
                       std::to_string(k) + " iterations";
      report.trace.push_back(record_of(k, state, state.mu, 0.0, 0.0));
      break;
    }

    Direction dir;
    StepLength step;
    try {
      dir = newton_direction(state, lcp, config.sigma, config.gamma);
      step = step_length(state, dir, lcp, config);
    } catch (const SingularNewtonSystem& e) {
      report.status = SolveStatus::kSingularNewtonSystem;
      report.message = e.what();
      report.trace.push_back(record_of(k, state, state.mu, 0.0, 0.0));
      break;
    } catch (const LineSearchFailure& e) {
      report.status = SolveStatus::kLineSearchFailure;
      report.message = e.what();
      report.trace.push_back(record_of(k, state, dir.mu, 0.0, 0.0));
      break;
    }
    dir.step_floor = step.step_floor;
    report.trace.push_back(record_of(k, state, dir.mu, step.alpha, step.step_floor));

    IterateState next = make_state(axpy(state.z, step.alpha, dir.d_z),
                                   axpy(state.w, step.alpha, dir.d_w), lcp,
                                   config.sigma);
    if (observer) observer(IterationEvent{k, state, dir, step.alpha, next});

    if (!warned_norm && std::hypot(euclidean_norm(next.z), euclidean_norm(next.w)) >
                            config.omega_star) {
      warned_norm = true;
      report.warnings.push_back("iterate norm exceeds omega* at k = " +
                                std::to_string(k + 1));
    }
    if (!warned_gap && next.merit > config.delta && next.gap < config.epsilon_bar()) {
      warned_gap = true;
      report.warnings.push_back("gap below epsilon_bar before convergence at k = " +
                                std::to_string(k + 1));
    }
    state = std::move(next);
    report.iterations = k + 1;
  }
  report.final = std::move(state);
  return report;
}

VlcpSolveResult solve_vlcp(const VlcpInstance& v, const SolverConfig& config,
                           const IterationObserver& observer) {
  const LcpInstance lcp = lift_vlcp_to_lcp(v);
  VlcpSolveResult result;
  result.report = solve_lcp(lcp, config, observer);
  result.verification_tol = std::max(10.0 * config.delta, 1e-6);
  result.solution = recover_vlcp_solution(v, result.report.final.z,
                                          result.report.final.w,
                                          result.verification_tol);
  result.verification =
      verify_vlcp_solution(v, result.solution.x, result.verification_tol);
  if (result.report.converged() && !result.verification.ok) {
    result.report.status = SolveStatus::kRecoveryVerificationFailed;
    result.report.message = result.verification.summary();
  }
  return result;
}

}  // namespace leontief
