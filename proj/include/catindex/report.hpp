#pragma once

#include <string>
#include <vector>

#include "catindex/audit.hpp"

namespace catindex {

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& text);

// Number formatting shared by every output path: integers exact, reals in
// fixed notation with 9 decimal places. Output is byte-stable across runs.
std::string format_number(const RecordNumber& value);
std::string format_real(double value);

std::string records_to_json(const std::vector<VerdictRecord>& records);
std::string records_to_csv(const std::vector<VerdictRecord>& records);
std::string records_to_text(const std::vector<VerdictRecord>& records);
std::string records_to(Format format, const std::vector<VerdictRecord>& records);

// Registry dump for `catindex claims`: id, statement, domain, comparison
// (plus family and note) as a JSON array in registry order.
std::string claims_to_json();

std::string json_escape(const std::string& text);

}  // namespace catindex
