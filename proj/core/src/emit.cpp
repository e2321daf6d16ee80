#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>
#include <system_error>

#include "json.hpp"
#include "prime_gauge/errors.hpp"
#include "prime_gauge/report.hpp"

namespace prime_gauge {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string value_text(const Value& v) {
  if (const auto* u = std::get_if<std::uint64_t>(&v)) return std::to_string(*u);
  if (const auto* d = std::get_if<double>(&v)) return format_real(*d);
  return {};
}

ordered_json value_json(const Value& v) {
  if (const auto* u = std::get_if<std::uint64_t>(&v)) return *u;
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return nullptr;
}

// Column order for a run of records: schema order when the rule is known.
std::vector<std::string> record_header(std::span<const ScanRecord> records,
                                       std::optional<Rule> rule) {
  if (!rule && !records.empty()) rule = records.front().rule;
  std::vector<std::string> header = {"rule"};
  if (rule) {
    const RuleSchema& s = rule_schema(*rule);
    header.insert(header.end(), s.inputs.begin(), s.inputs.end());
    header.push_back("actual");
    header.insert(header.end(), s.details.begin(), s.details.end());
    header.insert(header.end(), s.bounds.begin(), s.bounds.end());
  } else {
    header.push_back("actual");
  }
  header.push_back("pass");
  return header;
}

std::string record_field(const ScanRecord& r, const std::string& name) {
  if (name == "rule") return std::string(rule_name(r.rule));
  if (name == "actual") return value_text(r.actual);
  if (name == "pass") return r.pass ? "true" : "false";
  for (const auto& [key, value] : r.inputs) {
    if (key == name) return std::to_string(value);
  }
  for (const auto& [key, value] : r.details) {
    if (key == name) return std::to_string(value);
  }
  for (const auto& [key, value] : r.bounds) {
    if (key == name) return format_real(value);
  }
  return {};
}

ordered_json record_json(const ScanRecord& r) {
  ordered_json o;
  o["rule"] = std::string(rule_name(r.rule));
  for (const auto& [key, value] : r.inputs) o[key] = value;
  o["actual"] = value_json(r.actual);
  for (const auto& [key, value] : r.details) o[key] = value;
  for (const auto& [key, value] : r.bounds) o[key] = value;
  o["pass"] = r.pass;
  return o;
}

ordered_json cell_json(const Cell& cell, Rounding rounding) {
  if (const auto* u = std::get_if<std::uint64_t>(&cell)) return *u;
  if (std::holds_alternative<double>(cell)) {
    // The number carries exactly the digits the CSV shows.
    return std::stod(render_cell(cell, rounding));
  }
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* b = std::get_if<bool>(&cell)) return *b;
  return nullptr;
}

std::uint64_t json_u64(const ordered_json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw UsageError("record field '" + key + "' missing or not an unsigned integer");
  }
  return j.at(key).get<std::uint64_t>();
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw UsageError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

std::string format_fixed(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double rounded = std::round(value * scale) / scale;  // half away from zero
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), rounded,
                                 std::chars_format::fixed, decimals);
  if (res.ec != std::errc()) return std::to_string(rounded);
  std::string out(buf.data(), res.ptr);
  if (out.starts_with("-") && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::string render_cell(const Cell& cell, Rounding rounding) {
  if (const auto* u = std::get_if<std::uint64_t>(&cell)) return std::to_string(*u);
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
  if (const auto* d = std::get_if<double>(&cell)) {
    switch (rounding) {
      case Rounding::kFixed1:
        return format_fixed(*d, 1);
      case Rounding::kFixed2:
        return format_fixed(*d, 2);
      case Rounding::kTruncated2:
        return format_fixed(std::trunc(*d * 100.0) / 100.0, 2);
      case Rounding::kInteger:
        return format_fixed(*d, 0);
      case Rounding::kText:
      case Rounding::kFlag:
        return format_real(*d);
    }
  }
  return {};
}

void emit(std::span<const ScanRecord> records, Format format, std::ostream& out,
          std::optional<Rule> rule) {
  if (format == Format::kJson) {
    ordered_json arr = ordered_json::array();
    for (const ScanRecord& r : records) arr.push_back(record_json(r));
    out << arr.dump(2) << '\n';
  } else {
    const std::vector<std::string> header = record_header(records, rule);
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const ScanRecord& r : records) {
      for (std::size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << csv_field(record_field(r, header[i]));
      }
      out << '\n';
    }
  }
  out.flush();
  if (!out) throw Error("failed writing records to output");
}

void emit(const RenderedTable& table, Format format, std::ostream& out) {
  if (format == Format::kJson) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json o;
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        o[table.columns[c].name] = cell_json(row[c], table.columns[c].rounding);
      }
      arr.push_back(std::move(o));
    }
    out << arr.dump(2) << '\n';
  } else {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? "," : "") << table.columns[c].name;
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << csv_field(render_cell(row[c], table.columns[c].rounding));
      }
      out << '\n';
    }
  }
  out.flush();
  if (!out) throw Error("failed writing table to output");
}

std::vector<ScanRecord> parse_records_json(std::string_view json) {
  const ordered_json arr = ordered_json::parse(json);
  if (!arr.is_array()) throw UsageError("expected a JSON array of records");

  std::vector<ScanRecord> out;
  for (const ordered_json& o : arr) {
    ScanRecord r;
    r.rule = parse_rule(o.at("rule").get<std::string>());
    const RuleSchema& schema = rule_schema(r.rule);
    for (const std::string& name : schema.inputs) r.inputs.emplace_back(name, json_u64(o, name));
    const ordered_json& actual = o.at("actual");
    if (actual.is_number_unsigned()) {
      r.actual = actual.get<std::uint64_t>();
    } else if (actual.is_number_float()) {
      r.actual = actual.get<double>();
    }
    for (const std::string& name : schema.details) {
      if (o.contains(name)) r.details.emplace_back(name, json_u64(o, name));
    }
    for (const std::string& name : schema.bounds) {
      if (o.contains(name)) r.bounds.emplace_back(name, o.at(name).get<double>());
    }
    r.pass = o.at("pass").get<bool>();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace prime_gauge
