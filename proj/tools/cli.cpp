#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <locale>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "leontief/errors.hpp"
#include "leontief/io.hpp"
#include "leontief/ipm.hpp"
#include "leontief/model.hpp"
#include "leontief/oracle.hpp"

namespace leontief::cli {
namespace {

// Two-technology, three-sector economy (shoes, food, light bulbs).
constexpr const char* kDemoModel = R"({
  "sectors": 3,
  "blocks": [
    {"technology": [[0.6, 0.1, 0.3], [0.5, 0.2, 0.3]], "demand": [150, 150]},
    {"technology": [[0.3, 0.6, 0.1], [0.4, 0.2, 0.4]], "demand": [-500, -500]},
    {"technology": [[0.1, 0.3, 0.6], [0.1, 0.6, 0.3]], "demand": [-20, -20]}
  ]
})";

std::string vec_str(const DenseVector& v, int precision = 10) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(precision) << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << (std::abs(v[i]) < 1e-12 ? 0.0 : v[i]);
  }
  os << ')';
  return os.str();
}

struct SolveOptions {
  std::string model;
  std::string solution_path = "solution.json";
  std::string trace_path = "trace.csv";
  SolverConfig config;
  std::uint64_t seed = 0;
};

void add_config_flags(CLI::App* cmd, SolveOptions& o) {
  cmd->add_option("--delta", o.config.delta, "termination tolerance on the merit");
  cmd->add_option("--beta", o.config.beta, "Armijo constant in (0, 1/2]");
  cmd->add_option("--gamma", o.config.gamma, "centrality constant in (0, 1)");
  cmd->add_option("--gamma-prime", o.config.gamma_prime,
                  "gap/residual coupling constant");
  cmd->add_option("--sigma", o.config.sigma, "centering parameter in [0, 1)");
  cmd->add_option("--max-iter", o.config.max_iterations, "iteration limit");
  cmd->add_option("--start-scale", o.config.start_scale,
                  "z0 = w0 = scale * e (default max(10, |q|_inf))");
  cmd->add_option("--seed", o.seed, "reserved for instance generators");
}

int report_solution(const VlcpSolveResult& result,
                    double seconds, std::ostream& out) {
  const auto& rep = result.report;
  out << "status: " << to_string(rep.status) << '\n'
      << "iterations: " << rep.iterations << '\n'
      << "merit: " << io::format_double(rep.final.merit) << '\n'
      << "x: " << vec_str(result.solution.x) << '\n'
      << "slack: " << vec_str(result.solution.slack) << '\n'
      << "time: " << std::fixed << std::setprecision(4) << seconds << " s\n"
      << std::defaultfloat;
  for (const auto& w : rep.warnings) out << "warning: " << w << '\n';
  if (!rep.message.empty() && !rep.converged()) out << "detail: " << rep.message << '\n';
  return rep.converged() ? kExitOk : kExitSolverFailure;
}

int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  GeneralizedLeontiefModel model;
  try {
    model = io::load_model(o.model);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
  try {
    o.config.validate();
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
  const VlcpInstance vlcp = build_generalized_leontief_vlcp(model);
  const auto t0 = std::chrono::steady_clock::now();
  const VlcpSolveResult result = solve_vlcp(vlcp, o.config);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  io::SolutionFile file;
  file.x = result.solution.x.to_vector();
  file.slack = result.solution.slack.to_vector();
  file.merit = result.report.final.merit;
  file.iterations = result.report.iterations;
  file.status = std::string(to_string(result.report.status));
  try {
    io::write_text_file(o.solution_path, io::solution_to_json(file));
    io::write_text_file(o.trace_path, io::trace_to_csv(result.report.trace));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolverFailure;
  }
  const int code = report_solution(result, seconds, out);
  out << "wrote " << o.solution_path << " and " << o.trace_path << '\n';
  return code;
}

int cmd_verify(const std::string& model_path, const std::string& solution_path,
               double tol, std::ostream& out, std::ostream& err) {
  GeneralizedLeontiefModel model;
  io::SolutionFile solution;
  try {
    model = io::load_model(model_path);
    solution = io::load_solution(solution_path);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
  const VlcpInstance vlcp = build_generalized_leontief_vlcp(model);
  if (solution.x.size() != vlcp.N.cols()) {
    err << "error: solution has " << solution.x.size() << " entries, model has "
        << vlcp.N.cols() << " sectors\n";
    return kExitParseError;
  }
  const auto report = verify_vlcp_solution(vlcp, DenseVector(solution.x), tol);
  out << report.summary();
  return report.ok ? kExitOk : kExitVerificationFailed;
}

int cmd_oracle(const std::string& model_path, std::uint64_t cap,
               const std::string& solution_out, std::ostream& out, std::ostream& err) {
  GeneralizedLeontiefModel model;
  try {
    model = io::load_model(model_path);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
  const VlcpInstance vlcp = build_generalized_leontief_vlcp(model);
  std::vector<VlcpSolution> solutions;
  try {
    solutions = enumerate_vlcp_solutions(vlcp, cap);
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  }
  out << solutions.size() << " solution(s)\n";
  for (std::size_t s = 0; s < solutions.size(); ++s) {
    const auto& sol = solutions[s];
    out << "solution " << s + 1 << ": x = " << vec_str(sol.x) << " support {";
    bool first = true;
    for (std::size_t j = 0; j < sol.x.size(); ++j) {
      if (sol.x[j] > kOracleSignTolerance) {
        out << (first ? "" : ",") << j + 1;
        first = false;
      }
    }
    out << "} slack = " << vec_str(sol.slack) << '\n';
  }
  if (!solution_out.empty() && !solutions.empty()) {
    io::SolutionFile file;
    file.x = solutions.front().x.to_vector();
    file.slack = solutions.front().slack.to_vector();
    file.status = "Oracle";
    io::write_text_file(solution_out, io::solution_to_json(file));
  }
  return solutions.empty() ? kExitVerificationFailed : kExitOk;
}

int cmd_check_matrix(const std::string& model_path, std::uint64_t cap,
                     std::ostream& out, std::ostream& err) {
  GeneralizedLeontiefModel model;
  try {
    model = io::load_model(model_path);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
  const VlcpInstance vlcp = build_generalized_leontief_vlcp(model);
  if (model.is_single_technology()) {
    const auto verdict = m_matrix_diagnose(vlcp.N.stacked());
    out << "nonsingular M-matrix: " << (verdict.is_nonsingular_m_matrix ? "yes" : "no")
        << " (" << verdict.diagnostic << ")\n";
    return kExitOk;
  }
  try {
    const auto report = classify_vertical_block(vlcp.N, cap);
    out << "representative submatrices: " << report.representatives << '\n'
        << "vertical block P-matrix: " << (report.is_p ? "yes" : "no") << '\n'
        << "vertical block P0-matrix: " << (report.is_p0 ? "yes" : "no") << '\n';
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  }
  return kExitOk;
}

int cmd_demo(std::ostream& out) {
  const auto model = io::parse_model(kDemoModel);
  const VlcpInstance vlcp = build_generalized_leontief_vlcp(model);
  const auto t0 = std::chrono::steady_clock::now();
  const VlcpSolveResult result = solve_vlcp(vlcp, SolverConfig{});
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out << "two-technology economy (shoes, food, light bulbs)\n"
      << " k        mu              alpha     merit\n";
  for (const auto& r : result.report.trace) {
    out << std::setw(3) << r.k << "  " << std::setw(14) << std::setprecision(6)
        << r.mu << "  " << std::setw(8) << r.alpha << "  " << r.merit << '\n';
  }
  out << std::defaultfloat;
  return report_solution(result, seconds, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leontief / generalized Leontief solver (interior-point descent)"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "solve a model file");
  solve_cmd->add_option("model", solve.model, "model JSON")->required();
  solve_cmd->add_option("-o,--solution", solve.solution_path, "solution JSON output");
  solve_cmd->add_option("-t,--trace", solve.trace_path, "trace CSV output");
  add_config_flags(solve_cmd, solve);

  std::string verify_model, verify_solution;
  double verify_tol = 1e-6;
  auto* verify_cmd = app.add_subcommand("verify", "check a solution file");
  verify_cmd->add_option("model", verify_model, "model JSON")->required();
  verify_cmd->add_option("solution", verify_solution, "solution JSON")->required();
  verify_cmd->add_option("--tol", verify_tol, "tolerance");

  std::string oracle_model, oracle_out;
  std::uint64_t oracle_cap = kDefaultVlcpCap;
  auto* oracle_cmd = app.add_subcommand("oracle", "enumerate all solutions");
  oracle_cmd->add_option("model", oracle_model, "model JSON")->required();
  oracle_cmd->add_option("--cap", oracle_cap, "enumeration cap");
  oracle_cmd->add_option("--solution-out", oracle_out,
                         "write the first solution as solution JSON");

  std::string check_model;
  std::uint64_t check_cap = kDefaultRepresentativeCap;
  auto* check_cmd =
      app.add_subcommand("check-matrix", "M-matrix / vertical block P test");
  check_cmd->add_option("model", check_model, "model JSON")->required();
  check_cmd->add_option("--cap", check_cap, "representative enumeration cap");

  auto* demo_cmd = app.add_subcommand("demo", "solve the bundled two-technology example");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitParseError;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(solve, out, err);
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_model, verify_solution, verify_tol, out, err);
    }
    if (oracle_cmd->parsed()) return cmd_oracle(oracle_model, oracle_cap, oracle_out, out, err);
    if (check_cmd->parsed()) return cmd_check_matrix(check_model, check_cap, out, err);
    if (demo_cmd->parsed()) return cmd_demo(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitSolverFailure;
  }
  return kExitParseError;
}

}  // namespace leontief::cli
