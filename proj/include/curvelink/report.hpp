#pragma once

#include "curvelink/pipeline.hpp"

#include <string>

namespace curvelink::report {

std::string to_text(const pipeline::InvariantReport& r);
std::string to_text(const pipeline::CompareReport& r, bool per_map = false);

/// One JSON object per line: a header record, then one record per basis
/// element, linking-set member and note.
std::string to_json_lines(const pipeline::InvariantReport& r);
std::string to_json_lines(const pipeline::CompareReport& r);

pipeline::InvariantReport invariant_from_json_lines(const std::string& text);
pipeline::CompareReport compare_from_json_lines(const std::string& text);

} // namespace curvelink::report
