#include "catindex/report.hpp"

#include <cstdio>
#include <sstream>

namespace catindex {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  fail(ErrorCode::ParseError, "unknown format '" + text + "' (json|csv|text)");
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", value);
  return buf;
}

std::string format_number(const RecordNumber& value) {
  if (value.is_int) return std::to_string(value.int_value);
  return format_real(value.value);
}

std::string json_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 8);
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

namespace {

std::string params_json(const Params& params) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : params.items()) {
    if (!first) out += ", ";
    first = false;
    out += "\"" + json_escape(name) + "\": " + std::to_string(value);
  }
  return out + "}";
}

std::string record_json(const VerdictRecord& rec) {
  std::string out = "{";
  out += "\"claim_id\": \"" + json_escape(rec.claim_id) + "\"";
  out += ", \"params\": " + params_json(rec.params);
  out += ", \"closed_form_value\": " + format_number(rec.closed_form_value);
  out += ", \"oracle_value\": ";
  out += rec.oracle_value ? format_number(*rec.oracle_value) : "null";
  out += ", \"abs_diff\": ";
  out += rec.abs_diff ? format_real(*rec.abs_diff) : "null";
  out += std::string(", \"verdict\": \"") + to_string(rec.verdict) + "\"";
  out += std::string(", \"comparison\": \"") + to_string(rec.comparison) + "\"";
  out += ", \"note\": \"" + json_escape(rec.note) + "\"";
  return out + "}";
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

std::string params_compact(const Params& params) {
  std::string out;
  for (const auto& [name, value] : params.items()) {
    if (!out.empty()) out += ";";
    out += name + "=" + std::to_string(value);
  }
  return out;
}

}  // namespace

std::string records_to_json(const std::vector<VerdictRecord>& records) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    out += "  " + record_json(records[i]);
    if (i + 1 < records.size()) out += ",";
    out += "\n";
  }
  return out + "]\n";
}

std::string records_to_csv(const std::vector<VerdictRecord>& records) {
  std::string out = "claim_id,params,closed_form_value,oracle_value,abs_diff,verdict,comparison,note\n";
  for (const VerdictRecord& rec : records) {
    out += csv_field(rec.claim_id) + ",";
    out += csv_field(params_compact(rec.params)) + ",";
    out += format_number(rec.closed_form_value) + ",";
    out += (rec.oracle_value ? format_number(*rec.oracle_value) : "") + ",";
    out += (rec.abs_diff ? format_real(*rec.abs_diff) : "") + ",";
    out += std::string(to_string(rec.verdict)) + ",";
    out += std::string(to_string(rec.comparison)) + ",";
    out += csv_field(rec.note) + "\n";
  }
  return out;
}

std::string records_to_text(const std::vector<VerdictRecord>& records) {
  std::string out;
  for (const VerdictRecord& rec : records) {
    out += rec.claim_id;
    if (!rec.params.items().empty()) out += " " + rec.params.str();
    out += " closed=" + format_number(rec.closed_form_value);
    if (rec.oracle_value) out += " oracle=" + format_number(*rec.oracle_value);
    if (rec.abs_diff) out += " diff=" + format_real(*rec.abs_diff);
    out += std::string(" ") + to_string(rec.verdict);
    if (!rec.note.empty()) out += "  # " + rec.note;
    out += "\n";
  }
  return out;
}

std::string records_to(Format format, const std::vector<VerdictRecord>& records) {
  switch (format) {
    case Format::Json: return records_to_json(records);
    case Format::Csv: return records_to_csv(records);
    case Format::Text: return records_to_text(records);
  }
  return "";
}

std::string claims_to_json() {
  std::string out = "[\n";
  const auto& registry = claim_registry();
  for (std::size_t i = 0; i < registry.size(); ++i) {
    const Claim& c = registry[i];
    out += "  {";
    out += "\"id\": \"" + json_escape(c.id) + "\"";
    out += ", \"statement\": \"" + json_escape(c.statement) + "\"";
    out += ", \"domain\": \"" + json_escape(c.domain_desc) + "\"";
    out += std::string(", \"comparison\": \"") + to_string(c.comparison) + "\"";
    out += ", \"family\": \"" + json_escape(c.family_desc) + "\"";
    out += ", \"note\": \"" + json_escape(c.note) + "\"";
    out += "}";
    if (i + 1 < registry.size()) out += ",";
    out += "\n";
  }
  return out + "]\n";
}

}  // namespace catindex
