#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "polyvor/metrics.hpp"

namespace polyvor {

/// Parses {"d": [[...], ...]} where each entry is an integer or a string
/// "p/q". The matrix is validated before it is returned.
FiniteMetric parse_metric_json(std::string_view text);

FiniteMetric load_metric_file(const std::filesystem::path& path);

/// Serializes back into the same schema, entries written as "p/q" strings.
std::string metric_to_json(const FiniteMetric& metric);

}  // namespace polyvor
