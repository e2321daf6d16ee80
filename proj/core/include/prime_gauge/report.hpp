#pragma once

// Reproduction of the five published tables and CSV/JSON emission.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "prime_gauge/scan.hpp"
#include "prime_gauge/sieve.hpp"

namespace prime_gauge {

enum class Rounding {
  kInteger,
  kFixed1,  // half away from zero, one decimal
  kFixed2,
  kTruncated2,  // toward zero, two decimals
  kText,
  kFlag,    // true/false
};

struct ColumnSpec {
  std::string name;
  Rounding rounding;
};

using Cell = std::variant<std::monostate, std::uint64_t, double, std::string, bool>;

struct PublishedCell {
  std::string column;
  Cell value;
  // Printed value known to be inconsistent with its own formula; emitted
  // as an annotation and excluded from the mismatch count.
  bool disputed = false;
};

struct TableRowSpec {
  std::vector<std::uint64_t> inputs;
  std::vector<PublishedCell> published;
};

struct TableSpec {
  int id = 0;
  std::string caption;
  std::vector<std::string> input_names;
  std::vector<TableRowSpec> rows;
  std::vector<ColumnSpec> columns;
};

// The printed grid of table `id` (1..5) with the printed values attached.
// UsageError otherwise.
TableSpec published_table(int id);

// Table 3 with the horizon for the large-k rows overridden.
TableSpec published_table_3(std::uint64_t small_k_scan_limit, std::uint64_t large_k_scan_limit);

struct CellCheck {
  std::size_t row = 0;
  std::string column;
  std::string published;  // rendered under the column's rounding
  std::string ours;
  bool disputed = false;
  bool match = false;  // text cells ending in "..." match by prefix
};

struct RenderedTable {
  int id = 0;
  std::string caption;
  std::vector<ColumnSpec> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<CellCheck> checks;
  // Conjecture checks that failed on a row, e.g. "n=3: bound 4 <= p_n 5".
  std::vector<std::string> violations;

  // Non-disputed cells that differ from the printed value.
  std::size_t mismatches() const;
  const Cell& at(std::size_t row, std::string_view column) const;
};

struct ReportOptions {
  SieveOptions sieve;
};

// BudgetError names the offending cell.
RenderedTable reproduce_table(const TableSpec& spec, const ReportOptions& options = {});

// Sieving reach of the heaviest cell.
std::uint64_t required_budget(const TableSpec& spec);

enum class Format { kCsv, kJson };

Format parse_format(std::string_view name);

// Round half away from zero to `decimals` places and print in fixed
// notation.
std::string format_fixed(double value, int decimals);
// Shortest representation that reads back to the same double.
std::string format_real(double value);

std::string render_cell(const Cell& cell, Rounding rounding);

void emit(std::span<const ScanRecord> records, Format format, std::ostream& out,
          std::optional<Rule> rule = std::nullopt);
void emit(const RenderedTable& table, Format format, std::ostream& out);

// Inverse of emit(records, kJson, ...).
std::vector<ScanRecord> parse_records_json(std::string_view json);

}  // namespace prime_gauge
