#include "polyvor/metric_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polyvor/error.hpp"

namespace polyvor {

FiniteMetric parse_metric_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("d") || !doc["d"].is_array()) {
    throw Error(ErrorKind::ParseError, "expected an object with an array field \"d\"");
  }
  RationalMatrix raw;
  for (const auto& row : doc["d"]) {
    if (!row.is_array()) throw Error(ErrorKind::ParseError, "each row of \"d\" must be an array");
    auto& out = raw.emplace_back();
    for (const auto& entry : row) {
      if (entry.is_number_integer()) {
        out.emplace_back(entry.get<long>());
      } else if (entry.is_string()) {
        out.push_back(parse_rational(entry.get<std::string>()));
      } else {
        throw Error(ErrorKind::ParseError, "entries must be integers or \"p/q\" strings");
      }
    }
  }
  return validate_metric(raw);
}

FiniteMetric load_metric_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot read metric file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_metric_json(buffer.str());
}

std::string metric_to_json(const FiniteMetric& metric) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : metric.entries()) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : row) out.push_back(to_string(v));
    rows.push_back(std::move(out));
  }
  return nlohmann::json{{"d", rows}}.dump();
}

}  // namespace polyvor
