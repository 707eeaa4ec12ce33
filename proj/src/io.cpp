#include "leontief/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "leontief/errors.hpp"

namespace leontief::io {
namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<double> number_array(const json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) throw ParseError(what + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

const json& require_key(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw ParseError(where + " is missing \"" + key + "\"");
  }
  return obj.at(key);
}

// nlohmann dumps doubles with round-trip precision; keep that explicit.
json number_list(std::span<const double> values) {
  json arr = json::array();
  for (double v : values) arr.push_back(v);
  return arr;
}

}  // namespace

GeneralizedLeontiefModel parse_model(const std::string& text) {
  const json root = parse_json(text);
  const json& sectors = require_key(root, "sectors", "model");
  if (!sectors.is_number_integer() || sectors.get<long long>() <= 0) {
    throw ParseError("\"sectors\" must be a positive integer");
  }
  const json& blocks = require_key(root, "blocks", "model");
  if (!blocks.is_array()) throw ParseError("\"blocks\" must be an array");

  GeneralizedLeontiefModel model;
  model.sectors = sectors.get<std::size_t>();
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const std::string where = "block " + std::to_string(j);
    const json& tech = require_key(blocks[j], "technology", where);
    if (!tech.is_array()) throw ParseError(where + " technology must be an array");
    std::vector<std::vector<double>> rows;
    for (const auto& row : tech) rows.push_back(number_array(row, where + " technology row"));
    try {
      model.technology_blocks.push_back(DenseMatrix::from_rows(rows));
      model.demand_blocks.emplace_back(
          number_array(require_key(blocks[j], "demand", where), where + " demand"));
    } catch (const Error& e) {
      if (dynamic_cast<const ParseError*>(&e)) throw;
      throw ParseError(where + ": " + e.what());
    }
  }
  try {
    model.validate();
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("inconsistent model: ") + e.what());
  }
  return model;
}

GeneralizedLeontiefModel load_model(const std::filesystem::path& path) {
  return parse_model(read_file(path));
}

std::string model_to_json(const GeneralizedLeontiefModel& model) {
  json blocks = json::array();
  for (std::size_t j = 0; j < model.sectors; ++j) {
    json tech = json::array();
    const auto& a = model.technology_blocks[j];
    for (std::size_t r = 0; r < a.rows(); ++r) tech.push_back(number_list(a.row(r)));
    blocks.push_back({{"technology", tech},
                      {"demand", number_list(model.demand_blocks[j].values())}});
  }
  json root = {{"sectors", model.sectors}, {"blocks", blocks}};
  return root.dump(2) + "\n";
}

std::string solution_to_json(const SolutionFile& solution) {
  json root = {{"x", number_list(solution.x)},
               {"slack", number_list(solution.slack)},
               {"merit", solution.merit},
               {"iterations", solution.iterations},
               {"status", solution.status}};
  return root.dump(2) + "\n";
}

SolutionFile parse_solution(const std::string& text) {
  const json root = parse_json(text);
  SolutionFile out;
  out.x = number_array(require_key(root, "x", "solution"), "\"x\"");
  if (root.contains("slack")) out.slack = number_array(root.at("slack"), "\"slack\"");
  if (root.contains("merit") && root.at("merit").is_number()) {
    out.merit = root.at("merit").get<double>();
  }
  if (root.contains("iterations") && root.at("iterations").is_number_unsigned()) {
    out.iterations = root.at("iterations").get<std::size_t>();
  }
  if (root.contains("status") && root.at("status").is_string()) {
    out.status = root.at("status").get<std::string>();
  }
  return out;
}

SolutionFile load_solution(const std::filesystem::path& path) {
  return parse_solution(read_file(path));
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), result.ptr);
}

void write_trace_csv(std::ostream& os, const std::vector<TraceRecord>& trace) {
  os << "k,mu,alpha,merit,gap,residual_norm,step_floor\n";
  for (const auto& r : trace) {
    os << r.k << ',' << format_double(r.mu) << ',' << format_double(r.alpha) << ','
       << format_double(r.merit) << ',' << format_double(r.gap) << ','
       << format_double(r.residual_norm) << ',' << format_double(r.step_floor)
       << '\n';
  }
}

std::string trace_to_csv(const std::vector<TraceRecord>& trace) {
  std::ostringstream os;
  write_trace_csv(os, trace);
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace leontief::io
