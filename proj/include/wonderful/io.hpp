#pragma once

#include "wonderful/locus.hpp"
#include "wonderful/nested_sets.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace wonderful {

/// {"n": 2, "dim_X": 1, "components": [{"name": "p0", "dim": 0}], "space": "XD_bracket"}
GeometryConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const GeometryConfig& g);
GeometryConfig load_config(const std::string& path);

/// Splits a label list. Accepts a JSON array of strings or the bare form
/// [D:c1:{1,2}, Delta:{1,2}].
std::vector<std::string> split_label_list(std::string_view text);

/// Largest point index and largest 1-based component index mentioned.
struct LabelExtent {
    int max_point = 0;
    int max_component = 0;
};
LabelExtent label_extent(const std::vector<std::string>& labels);

std::vector<BoundaryDivisor> parse_divisors(const std::vector<std::string>& labels, int n);
std::vector<Center> parse_centers(const std::vector<std::string>& labels, int n);

nlohmann::json labels_json(const std::vector<Center>& centers);
nlohmann::json labels_json(const std::vector<BoundaryDivisor>& divisors);

} // namespace wonderful
