#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "leontief/ipm.hpp"
#include "leontief/model.hpp"

namespace leontief::io {

// Model file:
//   {"sectors": n,
//    "blocks": [{"technology": [[a_11, ..., a_1n], ...], "demand": [b_1, ...]}, ...]}
// One block per sector. A file whose blocks all hold a single row is an open
// Leontief model.
GeneralizedLeontiefModel parse_model(const std::string& text);
GeneralizedLeontiefModel load_model(const std::filesystem::path& path);
std::string model_to_json(const GeneralizedLeontiefModel& model);

// Solution file: {"x": [...], "slack": [...], "merit": m, "iterations": k,
// "status": "..."}.
struct SolutionFile {
  std::vector<double> x;
  std::vector<double> slack;
  double merit = 0.0;
  std::size_t iterations = 0;
  std::string status;
};

std::string solution_to_json(const SolutionFile& solution);
SolutionFile parse_solution(const std::string& text);
SolutionFile load_solution(const std::filesystem::path& path);

// Trace CSV with header k,mu,alpha,merit,gap,residual_norm,step_floor.
void write_trace_csv(std::ostream& os, const std::vector<TraceRecord>& trace);
std::string trace_to_csv(const std::vector<TraceRecord>& trace);

// Shortest round-trip decimal form, independent of the global locale.
std::string format_double(double value);

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace leontief::io
