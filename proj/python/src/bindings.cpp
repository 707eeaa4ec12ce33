#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leontief/errors.hpp"
#include "leontief/io.hpp"
#include "leontief/ipm.hpp"
#include "leontief/model.hpp"
#include "leontief/oracle.hpp"

namespace py = pybind11;
using namespace leontief;

namespace {

using Rows = std::vector<std::vector<double>>;

Rows to_rows(const DenseMatrix& m) {
  Rows out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

LcpInstance make_lcp(const Rows& M, const std::vector<double>& q) {
  LcpInstance lcp{DenseMatrix::from_rows(M), DenseVector(q)};
  lcp.validate();
  return lcp;
}

VlcpInstance make_vlcp(const Rows& N, const std::vector<std::size_t>& block_sizes,
                       const std::vector<double>& q) {
  VlcpInstance v{VerticalBlockMatrix(DenseMatrix::from_rows(N), block_sizes), DenseVector(q)};
  v.validate();
  return v;
}

py::dict report_dict(const SolveReport& rep) {
  py::list trace;
  for (const auto& t : rep.trace) {
    py::dict row;
    row["k"] = t.k;
    row["mu"] = t.mu;
    row["alpha"] = t.alpha;
    row["merit"] = t.merit;
    row["gap"] = t.gap;
    row["residual_norm"] = t.residual_norm;
    row["step_floor"] = t.step_floor;
    trace.append(row);
  }
  py::dict d;
  d["status"] = std::string(to_string(rep.status));
  d["converged"] = rep.converged();
  d["iterations"] = rep.iterations;
  d["z"] = rep.final.z.to_vector();
  d["w"] = rep.final.w.to_vector();
  d["merit"] = rep.final.merit;
  d["trace"] = trace;
  d["warnings"] = rep.warnings;
  d["message"] = rep.message;
  return d;
}

SolverConfig make_config(double delta, double beta, double gamma, double gamma_prime,
                         double sigma, std::size_t max_iterations, double start_scale) {
  SolverConfig c;
  c.delta = delta;
  c.beta = beta;
  c.gamma = gamma;
  c.gamma_prime = gamma_prime;
  c.sigma = sigma;
  c.max_iterations = max_iterations;
  c.start_scale = start_scale;
  return c;
}

py::dict vlcp_result_dict(const VlcpSolveResult& res) {
  py::dict d = report_dict(res.report);
  d["x"] = res.solution.x.to_vector();
  d["slack"] = res.solution.slack.to_vector();
  d["verified"] = res.verification.ok;
  return d;
}

#define LEONTIEF_CONFIG_ARGS                                                            \
  py::arg("delta") = 1e-6, py::arg("beta") = 0.25, py::arg("gamma") = 1e-3,             \
      py::arg("gamma_prime") = 1.0, py::arg("sigma") = 0.5,                             \
      py::arg("max_iterations") = std::size_t{500}, py::arg("start_scale") = 0.0

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Leontief / generalized Leontief LCP solver";

  auto base = py::register_exception<Error>(m, "LeontiefError", PyExc_RuntimeError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidConfig>(m, "InvalidConfig", base.ptr());
  py::register_exception<EnumerationCapExceeded>(m, "EnumerationCapExceeded", base.ptr());

  m.def(
      "solve_lcp",
      [](const Rows& M, const std::vector<double>& q, double delta, double beta,
         double gamma, double gamma_prime, double sigma, std::size_t max_iterations,
         double start_scale) {
        const auto config =
            make_config(delta, beta, gamma, gamma_prime, sigma, max_iterations, start_scale);
        return report_dict(solve_lcp(make_lcp(M, q), config));
      },
      py::arg("M"), py::arg("q"), LEONTIEF_CONFIG_ARGS);

  m.def(
      "solve_vlcp",
      [](const Rows& N, const std::vector<std::size_t>& block_sizes,
         const std::vector<double>& q, double delta, double beta, double gamma,
         double gamma_prime, double sigma, std::size_t max_iterations, double start_scale) {
        const auto config =
            make_config(delta, beta, gamma, gamma_prime, sigma, max_iterations, start_scale);
        return vlcp_result_dict(solve_vlcp(make_vlcp(N, block_sizes, q), config));
      },
      py::arg("N"), py::arg("block_sizes"), py::arg("q"), LEONTIEF_CONFIG_ARGS);

  m.def(
      "solve_model",
      [](const std::string& path, double delta, double beta, double gamma,
         double gamma_prime, double sigma, std::size_t max_iterations, double start_scale) {
        const auto config =
            make_config(delta, beta, gamma, gamma_prime, sigma, max_iterations, start_scale);
        const auto v = build_generalized_leontief_vlcp(io::load_model(path));
        return vlcp_result_dict(solve_vlcp(v, config));
      },
      py::arg("path"), LEONTIEF_CONFIG_ARGS,
      "Solve a model JSON file.");

  m.def(
      "load_model",
      [](const std::string& path) {
        const auto v = build_generalized_leontief_vlcp(io::load_model(path));
        py::dict d;
        d["N"] = to_rows(v.N.stacked());
        d["block_sizes"] = v.N.block_sizes();
        d["q"] = v.q.to_vector();
        return d;
      },
      py::arg("path"), "Vertical matrix, block sizes and q of a model JSON file.");

  m.def(
      "enumerate_lcp",
      [](const Rows& M, const std::vector<double>& q) {
        std::vector<std::vector<double>> out;
        for (const auto& s : enumerate_lcp_solutions(make_lcp(M, q))) out.push_back(s.z.to_vector());
        return out;
      },
      py::arg("M"), py::arg("q"), "All solutions z found by support enumeration.");

  m.def(
      "enumerate_vlcp",
      [](const Rows& N, const std::vector<std::size_t>& block_sizes,
         const std::vector<double>& q, std::uint64_t cap) {
        std::vector<std::vector<double>> out;
        for (const auto& s : enumerate_vlcp_solutions(make_vlcp(N, block_sizes, q), cap))
          out.push_back(s.x.to_vector());
        return out;
      },
      py::arg("N"), py::arg("block_sizes"), py::arg("q"), py::arg("cap") = kDefaultVlcpCap);

  m.def(
      "verify_vlcp",
      [](const Rows& N, const std::vector<std::size_t>& block_sizes,
         const std::vector<double>& q, const std::vector<double>& x, double tol) {
        return verify_vlcp_solution(make_vlcp(N, block_sizes, q), DenseVector(x), tol).ok;
      },
      py::arg("N"), py::arg("block_sizes"), py::arg("q"), py::arg("x"), py::arg("tol") = 1e-6);

  m.def(
      "is_m_matrix", [](const Rows& a) { return m_matrix_check(DenseMatrix::from_rows(a)); },
      py::arg("A"));

  m.def(
      "is_vertical_block_p",
      [](const Rows& N, const std::vector<std::size_t>& block_sizes, bool p0) {
        const VerticalBlockMatrix n(DenseMatrix::from_rows(N), block_sizes);
        return p0 ? is_vertical_block_P0(n) : is_vertical_block_P(n);
      },
      py::arg("N"), py::arg("block_sizes"), py::arg("p0") = false);
}
