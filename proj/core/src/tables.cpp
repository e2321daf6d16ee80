#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prime_gauge/checked.hpp"
#include "prime_gauge/conjectures.hpp"
#include "prime_gauge/errors.hpp"
#include "prime_gauge/report.hpp"

namespace prime_gauge {
namespace {

using U = std::uint64_t;

PublishedCell published(std::string column, Cell value, bool disputed = false) {
  return {std::move(column), std::move(value), disputed};
}

TableSpec table_1() {
  TableSpec t;
  t.id = 1;
  t.caption = "No. of primes between n^2 and (n+1)^2";
  t.input_names = {"n"};
  t.columns = {{"n", Rounding::kInteger}, {"leg", Rounding::kInteger}};
  const U legs[] = {2, 2, 2, 3, 2, 4, 3, 4, 3, 5};
  for (U n = 1; n <= 10; ++n) t.rows.push_back({{n}, {published("leg", legs[n - 1])}});
  return t;
}

TableSpec table_2() {
  TableSpec t;
  t.id = 2;
  t.caption = "Comparing the bounds on leg(n)";
  t.input_names = {"n"};
  t.columns = {{"n", Rounding::kInteger},       {"leg", Rounding::kInteger},
               {"rosser_ub", Rounding::kFixed1}, {"conj_lb", Rounding::kFixed1},
               {"conj_ub", Rounding::kFixed1},   {"within_bounds", Rounding::kFlag},
               {"published_note", Rounding::kText}};
  struct Row {
    U n, leg;
    double rosser, lower, upper;
  };
  const Row rows[] = {
      {10, 5, 11.1, 3.0, 6.8},
      {20, 7, 25.2, 3.4, 10.1},
      {50, 11, 96.0, 5.1, 20.0},
      {100, 23, 298.7, 8.0, 36.7},
      {500, 71, 5129.1, 27.3, 170.0},
      {1000, 152, 18276.6, 48.7, 336.7},
      {2000, 267, 66110.7, 88.2, 670.0},
      {5000, 613, 367638.8, 196.1, 1670.0},
      {20000, 2020, 5051250.9, 673.5, 6670.0},
      {45000, 4218, 23629958.8, 1400.3, 15003.3},
  };
  for (const Row& r : rows) {
    t.rows.push_back({{r.n},
                      {published("leg", r.leg), published("rosser_ub", r.rosser),
                       published("conj_lb", r.lower), published("conj_ub", r.upper)}});
  }
  return t;
}

TableSpec table_4() {
  TableSpec t;
  t.id = 4;
  t.caption = "Comparing the upper bounds on n-th prime";
  t.input_names = {"n"};
  t.columns = {{"n", Rounding::kInteger},
               {"p_n", Rounding::kInteger},
               {"classical_bound", Rounding::kText},
               {"classical_digits", Rounding::kInteger},
               {"a", Rounding::kInteger},
               {"bound", Rounding::kInteger},
               {"bound_holds", Rounding::kFlag},
               {"published_note", Rounding::kText}};
  t.rows.push_back({{32},
                    {published("p_n", U{131}), published("classical_bound", std::string("4294967296")),
                     published("bound", U{448})}});
  t.rows.push_back({{987},
                    {published("p_n", U{7793}), published("classical_bound", std::string("13072...")),
                     published("classical_digits", U{298}), published("bound", U{31424})}});
  t.rows.push_back({{2000},
                    {published("p_n", U{17389}), published("classical_bound", std::string("1148...")),
                     published("classical_digits", U{603}), published("bound", U{63840})}});
  return t;
}

TableSpec table_5() {
  TableSpec t;
  t.id = 5;
  t.caption = "Comparing actual no. of primes between n and kn with kn/9 + k^2";
  t.input_names = {"n", "k"};
  t.columns = {{"n", Rounding::kInteger},     {"k", Rounding::kInteger},
               {"count", Rounding::kInteger}, {"bound", Rounding::kFixed1},
               {"within_bound", Rounding::kFlag}, {"published_note", Rounding::kText}};
  const U ns[] = {10, 50, 100, 500, 1000, 5000};
  const U ks[] = {2, 5, 10, 50, 100};
  const U counts[6][5] = {
      {4, 11, 21, 91, 164},          {10, 38, 80, 352, 654},
      {21, 70, 143, 644, 1204},      {73, 272, 574, 2667, 5038},
      {135, 501, 1061, 4965, 9424},  {560, 2094, 4464, 21375, 40869},
  };
  const double bounds[6][5] = {
      {6.2, 30.6, 111.1, 2555.6, 10111.1},     {15.1, 52.8, 155.6, 2777.8, 10555.6},
      {26.2, 80.6, 211.1, 3055.6, 11111.1},    {115.1, 302.8, 655.6, 5277.8, 15555.6},
      {226.2, 580.6, 1211.1, 8055.6, 21111.1}, {1115.1, 2802.8, 5655.6, 30277.8, 65555.6},
  };
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 5; ++j) {
      t.rows.push_back({{ns[i], ks[j]},
                        {published("count", counts[i][j]), published("bound", bounds[i][j])}});
    }
  }
  return t;
}

// 2^n in decimal when it fits in 64 bits, otherwise its leading five
// digits followed by "...".
std::pair<std::string, U> classical_bound_text(U n) {
  const long double log = static_cast<long double>(n) * std::log10(2.0L);
  const U digits = static_cast<U>(std::floor(log)) + 1;
  if (n < 64) return {std::to_string(U{1} << n), digits};
  const long double frac = log - std::floor(log);
  const U lead = static_cast<U>(std::floor(std::pow(10.0L, frac + 4.0L)));
  return {std::to_string(lead) + "...", digits};
}

std::size_t column_index(const std::vector<ColumnSpec>& columns, std::string_view name) {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].name == name) return i;
  }
  throw UsageError("table has no column '" + std::string(name) + "'");
}

bool text_matches(const std::string& printed_text, const std::string& ours) {
  const std::string ellipsis = "...";
  if (printed_text.size() > ellipsis.size() &&
      printed_text.compare(printed_text.size() - ellipsis.size(), ellipsis.size(), ellipsis) == 0) {
    const std::string prefix = printed_text.substr(0, printed_text.size() - ellipsis.size());
    return ours.compare(0, prefix.size(), prefix) == 0;
  }
  return printed_text == ours;
}

// Printed values are already rounded; re-rendering them must not drift.
Rounding printed(Rounding r) { return r == Rounding::kTruncated2 ? Rounding::kFixed2 : r; }

}  // namespace

TableSpec published_table_3(U small_k_scan_limit, U large_k_scan_limit) {
  TableSpec t;
  t.id = 3;
  t.caption = "The threshold a for different values of k";
  t.input_names = {"k", "scan_limit"};
  t.columns = {{"k", Rounding::kInteger},
               {"scan_limit", Rounding::kInteger},
               {"actual_threshold", Rounding::kInteger},
               {"stated_threshold", Rounding::kInteger},
               {"formula_value", Rounding::kTruncated2},
               {"estimate_a", Rounding::kInteger},
               {"holds_on_scan", Rounding::kFlag},
               {"published_note", Rounding::kText}};
  struct Row {
    U k, actual;
    double value;
    U estimate;
    bool disputed;
  };
  const Row rows[] = {
      {2, 2, 1.77, 2, false},      {5, 3, 2.21, 3, true},       {22, 5, 4.40, 5, false},
      {65, 6, 5.59, 6, false},     {160, 7, 6.27, 7, true},     {427, 8, 7.67, 8, false},
      {1020, 9, 8.62, 9, false},   {200000, 14, 14.43, 15, false},
      {1000000, 16, 16.20, 17, false},
  };
  for (const Row& r : rows) {
    const U limit = r.k >= 200000 ? large_k_scan_limit : small_k_scan_limit;
    t.rows.push_back({{r.k, limit},
                      {published("actual_threshold", r.actual),
                       published("formula_value", r.value, r.disputed),
                       published("estimate_a", r.estimate)}});
  }
  return t;
}

TableSpec published_table(int id) {
  switch (id) {
    case 1:
      return table_1();
    case 2:
      return table_2();
    case 3:
      return published_table_3(10000, 100);
    case 4:
      return table_4();
    case 5:
      return table_5();
  }
  throw UsageError("table id must be in 1..5, got " + std::to_string(id));
}

std::size_t RenderedTable::mismatches() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const CellCheck& c) { return !c.disputed && !c.match; }));
}

const Cell& RenderedTable::at(std::size_t row, std::string_view column) const {
  return rows.at(row).at(column_index(columns, column));
}

U required_budget(const TableSpec& spec) {
  U need = 0;
  for (const TableRowSpec& row : spec.rows) {
    const U a = row.inputs.at(0);
    U r = 0;
    switch (spec.id) {
      case 1:
      case 2:
        r = checked_square(checked_add(a, 1, "n+1"), "(n+1)^2");
        break;
      case 3:
      case 5:
        r = checked_mul(row.inputs.at(0), row.inputs.at(1), "k*n");
        break;
      case 4:
        r = std::max(nth_prime_bound(a).bound, nth_prime_ceiling(a));
        break;
      default:
        throw UsageError("table id must be in 1..5, got " + std::to_string(spec.id));
    }
    need = std::max(need, r);
  }
  return need;
}

RenderedTable reproduce_table(const TableSpec& spec, const ReportOptions& options) {
  for (const TableRowSpec& row : spec.rows) {
    TableSpec single = spec;
    single.rows = {row};
    const U need = required_budget(single);
    if (need > options.sieve.budget) {
      std::string cell = "table " + std::to_string(spec.id);
      for (std::size_t i = 0; i < row.inputs.size(); ++i) {
        cell += " " + spec.input_names.at(i) + "=" + std::to_string(row.inputs[i]);
      }
      throw BudgetError(cell + " needs sieving to " + std::to_string(need) +
                        ", beyond budget " + std::to_string(options.sieve.budget));
    }
  }

  RenderedTable out;
  out.id = spec.id;
  out.caption = spec.caption;
  out.columns = spec.columns;
  const U need = required_budget(spec);
  const SieveOptions& so = options.sieve;

  std::optional<PrimeBasis> basis;
  std::optional<PiTable> table;
  if (spec.id <= 2) {
    basis = build_basis(std::max<U>(2, isqrt(need) + 1), so);
  } else {
    table = build_pi_table(need, so);
  }

  for (std::size_t r = 0; r < spec.rows.size(); ++r) {
    const TableRowSpec& row = spec.rows[r];
    std::vector<Cell> cells(spec.columns.size());
    auto set = [&](std::string_view column, Cell value) {
      cells[column_index(spec.columns, column)] = std::move(value);
    };
    const U a = row.inputs.at(0);
    set(spec.input_names.at(0), a);
    if (row.inputs.size() > 1) set(spec.input_names.at(1), row.inputs[1]);

    switch (spec.id) {
      case 1: {
        const U value = leg(a, *basis, so);
        set("leg", value);
        if (value < 2) out.violations.push_back("n=" + std::to_string(a) + ": leg(n) < 2");
        break;
      }
      case 2: {
        const LegEvaluation e = evaluate_leg(a, *basis, so);
        set("leg", e.leg);
        set("rosser_ub", e.rosser_ub);
        set("conj_lb", e.conj_lb);
        set("conj_ub", e.conj_ub);
        set("within_bounds", e.within_conj_bounds);
        if (!e.within_conj_bounds) {
          out.violations.push_back("n=" + std::to_string(a) + ": leg(n) outside conjectured bounds");
        }
        break;
      }
      case 3: {
        const ThresholdResult t = threshold_search(a, row.inputs.at(1), *table);
        if (t.observed_threshold) set("actual_threshold", *t.observed_threshold);
        if (t.stated_threshold) set("stated_threshold", *t.stated_threshold);
        set("formula_value", threshold_value(a));
        set("estimate_a", t.formula_a);
        set("holds_on_scan", t.conjecture_holds_on_scan);
        if (!t.conjecture_holds_on_scan) {
          out.violations.push_back("k=" + std::to_string(a) + ": (n, kn) has < k-1 primes at n=" +
                                   std::to_string(t.stated_last_failing_n));
        }
        break;
      }
      case 4: {
        const NthPrimeBound b = nth_prime_bound(a, *table);
        const auto [text, digits] = classical_bound_text(a);
        set("p_n", *b.actual);
        set("classical_bound", text);
        set("classical_digits", digits);
        set("a", U{b.a});
        set("bound", b.bound);
        set("bound_holds", b.bound > *b.actual);
        if (b.bound <= *b.actual) {
          out.violations.push_back("n=" + std::to_string(a) + ": bound " +
                                   std::to_string(b.bound) + " <= p_n " +
                                   std::to_string(*b.actual));
        }
        break;
      }
      case 5: {
        const U k = row.inputs.at(1);
        const U count = interval_count(a, k, *table);
        const double bound = conj4_bound(a, k);
        set("count", count);
        set("bound", bound);
        set("within_bound", static_cast<double>(count) <= bound);
        if (static_cast<double>(count) > bound) {
          out.violations.push_back("n=" + std::to_string(a) + " k=" + std::to_string(k) +
                                   ": count exceeds kn/9 + k^2");
        }
        break;
      }
    }

    std::string note;
    for (const PublishedCell& pc : row.published) {
      const std::size_t c = column_index(spec.columns, pc.column);
      CellCheck check;
      check.row = r;
      check.column = pc.column;
      check.disputed = pc.disputed;
      check.published = render_cell(pc.value, printed(spec.columns[c].rounding));
      check.ours = render_cell(cells[c], spec.columns[c].rounding);
      const bool same = spec.columns[c].rounding == Rounding::kText
                            ? text_matches(check.published, check.ours)
                            : check.published == check.ours;
      check.match = same;
      if (!same) {
        if (!note.empty()) note += "; ";
        note += pc.column + ": printed " + check.published;
        if (pc.disputed) note += " (disputed)";
      }
      out.checks.push_back(std::move(check));
    }
    if (std::any_of(spec.columns.begin(), spec.columns.end(),
                    [](const ColumnSpec& c) { return c.name == "published_note"; })) {
      set("published_note", note);
    }
    out.rows.push_back(std::move(cells));
  }
  return out;
}

}  // namespace prime_gauge
