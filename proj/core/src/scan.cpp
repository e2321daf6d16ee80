#include "prime_gauge/scan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "prime_gauge/checked.hpp"
#include "prime_gauge/conjectures.hpp"
#include "prime_gauge/errors.hpp"
#include "prime_gauge/parallel.hpp"

namespace prime_gauge {
namespace {

struct RuleInfo {
  Rule rule;
  std::string_view name;
  bool uses_k;
  bool needs_table;
};

constexpr std::array<RuleInfo, 14> kRules = {{
    {Rule::kLegendre, "legendre", false, false},
    {Rule::kImprovedLegendre, "improved_legendre", false, false},
    {Rule::kLegBounds, "leg_bounds", false, false},
    {Rule::kRosser, "rosser", false, true},
    {Rule::kBertrand, "bertrand", false, false},
    {Rule::kNagura, "nagura", false, false},
    {Rule::kConj3, "conj3", true, true},
    {Rule::kThreshold, "threshold", true, true},
    {Rule::kConj4, "conj4", true, true},
    {Rule::kNthBound, "nth_bound", false, true},
    {Rule::kBrocard, "brocard", false, true},
    {Rule::kBrocardSplit, "brocard_split", false, true},
    {Rule::kPntRatio, "pnt_ratio", false, true},
    {Rule::kCrossover, "crossover", true, false},
}};

const RuleInfo& info(Rule rule) {
  return *std::find_if(kRules.begin(), kRules.end(),
                       [rule](const RuleInfo& r) { return r.rule == rule; });
}

struct Point {
  std::uint64_t n;  // also i for the Brocard rules, scan_limit for kThreshold
  std::uint64_t k;
};

// Largest integer the point's evaluation sieves up to.
std::uint64_t reach(Rule rule, const Point& p) {
  switch (rule) {
    case Rule::kLegendre:
    case Rule::kImprovedLegendre:
    case Rule::kLegBounds:
      return checked_square(checked_add(p.n, 1, "n+1"), "(n+1)^2");
    case Rule::kRosser:
      return p.n;
    case Rule::kBertrand:
    case Rule::kPntRatio:
      return checked_mul(2, p.n, "2n");
    case Rule::kNagura:
      return nagura_end(p.n);
    case Rule::kConj3:
    case Rule::kConj4:
    case Rule::kThreshold:
      return checked_mul(p.k, p.n, "k*n");
    case Rule::kNthBound:
      return std::max(nth_prime_bound(p.n).bound, nth_prime_ceiling(p.n));
    case Rule::kBrocard:
    case Rule::kBrocardSplit:
      return checked_square(nth_prime_ceiling(checked_add(p.n, 1, "i+1")), "p_{i+1}^2");
    case Rule::kCrossover:
      return 0;
  }
  return 0;
}

std::string describe(Rule rule, const Point& p) {
  std::string s(rule_name(rule));
  if (rule == Rule::kThreshold) return s + " k=" + std::to_string(p.k);
  s += (rule == Rule::kBrocard || rule == Rule::kBrocardSplit) ? " i=" : " n=";
  s += std::to_string(p.n);
  if (info(rule).uses_k) s += " k=" + std::to_string(p.k);
  return s;
}

struct Context {
  std::optional<PrimeBasis> basis;
  std::optional<PiTable> table;
  SieveOptions sieve;
};

ScanRecord evaluate(Rule rule, const Point& p, const Context& ctx) {
  ScanRecord r;
  r.rule = rule;
  const std::uint64_t n = p.n;
  const std::uint64_t k = p.k;

  switch (rule) {
    case Rule::kLegendre:
    case Rule::kImprovedLegendre: {
      r.inputs = {{"n", n}};
      r.actual = leg(n, *ctx.basis, ctx.sieve);
      r.bounds = {{"min", rule == Rule::kLegendre ? 1.0 : 2.0}};
      break;
    }
    case Rule::kLegBounds: {
      const LegEvaluation e = evaluate_leg(n, *ctx.basis, ctx.sieve);
      r.inputs = {{"n", n}};
      r.actual = e.leg;
      r.bounds = {{"rosser_ub", e.rosser_ub}, {"conj_lb", e.conj_lb}, {"conj_ub", e.conj_ub}};
      break;
    }
    case Rule::kRosser: {
      const double x = static_cast<double>(n);
      rosser_check(n, *ctx.table);
      r.inputs = {{"n", n}};
      r.actual = pi(n, *ctx.table);
      r.bounds = {{"lower", x / std::log(x)}, {"upper", 1.25 * x / std::log(x)}};
      break;
    }
    case Rule::kBertrand: {
      bertrand_check(n, *ctx.basis, ctx.sieve);
      r.inputs = {{"n", n}};
      r.actual = count_primes(Interval::closed_open(n, 2 * n), *ctx.basis, ctx.sieve);
      r.bounds = {{"min", 1.0}};
      break;
    }
    case Rule::kNagura: {
      nagura_check(n, *ctx.basis, ctx.sieve);
      const std::uint64_t end = nagura_end(n);
      r.inputs = {{"n", n}};
      r.actual = count_primes(Interval::closed(n, end), *ctx.basis, ctx.sieve);
      r.details = {{"end", end}};
      r.bounds = {{"min", 1.0}};
      break;
    }
    case Rule::kConj3: {
      r.inputs = {{"n", n}, {"k", k}};
      r.actual = interval_count(n, k, *ctx.table);
      r.details = {{"a", threshold_formula(k)}};
      r.bounds = {{"min", static_cast<double>(k - 1)}};
      break;
    }
    case Rule::kThreshold: {
      const ThresholdResult t = threshold_search(k, n, *ctx.table);
      r.inputs = {{"k", k}, {"scan_limit", n}};
      if (t.observed_threshold) r.actual = *t.observed_threshold;
      r.details = {{"formula_a", t.formula_a}, {"last_failing_n", t.last_failing_n}};
      if (t.stated_threshold) r.details.emplace_back("stated_threshold", *t.stated_threshold);
      r.details.emplace_back("stated_last_failing_n", t.stated_last_failing_n);
      r.bounds = {{"formula_value", threshold_value(k)}};
      break;
    }
    case Rule::kConj4: {
      r.inputs = {{"n", n}, {"k", k}};
      r.actual = interval_count(n, k, *ctx.table);
      r.bounds = {{"bound", conj4_bound(n, k)}, {"crossover", conj4_crossover(k)}};
      break;
    }
    case Rule::kNthBound: {
      const NthPrimeBound b = nth_prime_bound(n, *ctx.table);
      r.inputs = {{"n", n}};
      if (b.actual) r.actual = *b.actual;
      r.details = {{"alpha", b.alpha}, {"a", b.a}};
      r.bounds = {{"bound", static_cast<double>(b.bound)}};
      break;
    }
    case Rule::kBrocard: {
      r.inputs = {{"i", n}};
      r.actual = brocard_count(n, *ctx.table);
      r.details = {{"p_i", nth_prime(n, *ctx.table)}, {"p_next", nth_prime(n + 1, *ctx.table)}};
      r.bounds = {{"min", 4.0}};
      break;
    }
    case Rule::kBrocardSplit: {
      const auto [low, high] = brocard_decomposition(n, *ctx.table);
      r.inputs = {{"i", n}};
      r.actual = std::min(low, high);
      r.details = {{"p_i", nth_prime(n, *ctx.table)},
                   {"p_next", nth_prime(n + 1, *ctx.table)},
                   {"low_count", low},
                   {"high_count", high}};
      r.bounds = {{"min", 2.0}};
      break;
    }
    case Rule::kPntRatio: {
      r.inputs = {{"n", n}};
      r.actual = pnt_ratio(n, *ctx.table);
      r.details = {{"count", interval_count(n, 2, *ctx.table)}};
      break;
    }
    case Rule::kCrossover: {
      r.inputs = {{"k", k}};
      r.actual = conj4_crossover(k);
      r.bounds = {{"two_k", 2.0 * static_cast<double>(k)}};
      break;
    }
  }
  r.pass = recompute_pass(r);
  return r;
}

std::vector<Point> expand(Rule rule, const ScanGrid& grid) {
  std::vector<Point> points;
  if (rule == Rule::kThreshold || rule == Rule::kCrossover) {
    for (std::uint64_t k : grid.k) points.push_back({grid.scan_limit, k});
    return points;
  }
  if (!info(rule).uses_k) {
    for (std::uint64_t n : grid.n) points.push_back({n, 0});
    return points;
  }
  for (std::uint64_t n : grid.n) {
    for (std::uint64_t k : grid.k) points.push_back({n, k});
  }
  return points;
}

// Runs every domain check a point would hit, so a scan fails before it
// starts sieving rather than halfway through.
void validate(Rule rule, const Point& p) {
  const std::string where = describe(rule, p);
  auto fail = [&](const std::string& why) { throw DomainError(where + ": " + why); };
  switch (rule) {
    case Rule::kLegendre:
    case Rule::kImprovedLegendre:
      if (p.n < 1) fail("n must be >= 1");
      break;
    case Rule::kLegBounds:
      if (p.n < 5) fail("n must be >= 5");
      break;
    case Rule::kRosser:
      if (p.n <= 17) fail("n must be > 17");
      break;
    case Rule::kBertrand:
    case Rule::kPntRatio:
      if (p.n < 2) fail("n must be >= 2");
      break;
    case Rule::kNagura:
      if (p.n <= 25) fail("n must be > 25");
      break;
    case Rule::kConj3:
    case Rule::kConj4:
      if (p.n < 1) fail("n must be >= 1");
      if (p.k < 2) fail("k must be >= 2");
      break;
    case Rule::kThreshold:
      if (p.n < 1) fail("scan limit must be >= 1");
      if (p.k < 2) fail("k must be >= 2");
      break;
    case Rule::kNthBound:
      if (p.n < 3) fail("n must be >= 3");
      break;
    case Rule::kBrocard:
      if (p.n < 1) fail("i must be >= 1");
      break;
    case Rule::kBrocardSplit:
      if (p.n < 2) fail("i must be >= 2");
      break;
    case Rule::kCrossover:
      if (p.k < 2) fail("k must be >= 2");
      break;
  }
}

const NamedValues<double>::value_type* find_bound(const ScanRecord& r, std::string_view name) {
  for (const auto& b : r.bounds) {
    if (b.first == name) return &b;
  }
  return nullptr;
}

double as_real(const Value& v) {
  if (const auto* u = std::get_if<std::uint64_t>(&v)) return static_cast<double>(*u);
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return std::nan("");
}

}  // namespace

std::string_view rule_name(Rule rule) { return info(rule).name; }

Rule parse_rule(std::string_view name) {
  for (const RuleInfo& r : kRules) {
    if (r.name == name) return r.rule;
  }
  throw UsageError("unknown rule '" + std::string(name) + "'");
}

const RuleSchema& rule_schema(Rule rule) {
  static const std::array<RuleSchema, 14> schemas = {{
      {{"n"}, {}, {"min"}},
      {{"n"}, {}, {"min"}},
      {{"n"}, {}, {"rosser_ub", "conj_lb", "conj_ub"}},
      {{"n"}, {}, {"lower", "upper"}},
      {{"n"}, {}, {"min"}},
      {{"n"}, {"end"}, {"min"}},
      {{"n", "k"}, {"a"}, {"min"}},
      {{"k", "scan_limit"},
       {"formula_a", "last_failing_n", "stated_threshold", "stated_last_failing_n"},
       {"formula_value"}},
      {{"n", "k"}, {}, {"bound", "crossover"}},
      {{"n"}, {"alpha", "a"}, {"bound"}},
      {{"i"}, {"p_i", "p_next"}, {"min"}},
      {{"i"}, {"p_i", "p_next", "low_count", "high_count"}, {"min"}},
      {{"n"}, {"count"}, {}},
      {{"k"}, {}, {"two_k"}},
  }};
  return schemas[static_cast<std::size_t>(
      std::find_if(kRules.begin(), kRules.end(),
                   [rule](const RuleInfo& r) { return r.rule == rule; }) -
      kRules.begin())];
}

std::uint64_t ScanRecord::input(std::string_view name) const {
  for (const auto& [key, value] : inputs) {
    if (key == name) return value;
  }
  throw UsageError("record has no input '" + std::string(name) + "'");
}

std::optional<std::uint64_t> ScanRecord::detail(std::string_view name) const {
  for (const auto& [key, value] : details) {
    if (key == name) return value;
  }
  return std::nullopt;
}

double ScanRecord::bound(std::string_view name) const {
  if (const auto* b = find_bound(*this, name)) return b->second;
  throw UsageError("record has no bound '" + std::string(name) + "'");
}

bool recompute_pass(const ScanRecord& r) {
  const double actual = as_real(r.actual);
  switch (r.rule) {
    case Rule::kLegendre:
    case Rule::kImprovedLegendre:
    case Rule::kBertrand:
    case Rule::kNagura:
    case Rule::kBrocardSplit:
      return actual >= r.bound("min");
    case Rule::kLegBounds:
      return r.bound("conj_lb") <= actual && actual <= r.bound("conj_ub") &&
             actual <= r.bound("rosser_ub");
    case Rule::kRosser:
      return r.bound("lower") <= actual && actual <= r.bound("upper");
    case Rule::kConj3:
      return r.input("n") < r.detail("a").value_or(0) || actual >= r.bound("min");
    case Rule::kThreshold:
      return r.detail("stated_last_failing_n").value_or(0) < r.detail("formula_a").value_or(0);
    case Rule::kConj4:
      return actual <= r.bound("bound");
    case Rule::kNthBound:
      // p_n beyond the budget is not checkable here; it is not a finding.
      return std::holds_alternative<std::monostate>(r.actual) || actual < r.bound("bound");
    case Rule::kBrocard:
      return r.input("i") < 2 || actual >= r.bound("min");
    case Rule::kPntRatio:
    case Rule::kCrossover:
      return true;
  }
  return false;
}

std::vector<std::uint64_t> ScanGrid::range(std::uint64_t from, std::uint64_t to) {
  std::vector<std::uint64_t> out;
  if (from > to) return out;
  out.reserve(to - from + 1);
  for (std::uint64_t v = from;; ++v) {
    out.push_back(v);
    if (v == to) break;
  }
  return out;
}

std::vector<ScanRecord> run_scan(Rule rule, const ScanGrid& grid, const ScanOptions& options) {
  const std::vector<Point> points = expand(rule, grid);
  if (points.empty()) return {};

  std::uint64_t max_reach = 0;
  for (const Point& p : points) {
    validate(rule, p);
    std::uint64_t r = 0;
    try {
      r = reach(rule, p);
    } catch (const OverflowError& e) {
      throw OverflowError(describe(rule, p) + ": " + e.what());
    }
    if (r > options.sieve.budget) {
      throw BudgetError(describe(rule, p) + " needs sieving to " + std::to_string(r) +
                        ", beyond budget " + std::to_string(options.sieve.budget));
    }
    max_reach = std::max(max_reach, r);
  }

  Context ctx;
  ctx.sieve = options.sieve;
  if (info(rule).needs_table) {
    ctx.table = build_pi_table(max_reach, options.sieve);
  } else if (rule != Rule::kCrossover) {
    ctx.basis = build_basis(std::max<std::uint64_t>(2, isqrt(max_reach) + 1), options.sieve);
  }

  std::vector<ScanRecord> records(points.size());
  parallel_for(points.size(), options.sieve.threads,
               [&](std::size_t i) { records[i] = evaluate(rule, points[i], ctx); });
  return records;
}

ScanRecord evaluate_point(Rule rule, std::uint64_t n, std::uint64_t k,
                          const ScanOptions& options) {
  ScanGrid grid;
  if (rule == Rule::kThreshold) {
    grid.scan_limit = n;
    grid.k = {k};
  } else if (rule == Rule::kCrossover) {
    grid.k = {k};
  } else {
    grid.n = {n};
    grid.k = {k};
  }
  return run_scan(rule, grid, options).front();
}

std::size_t count_failures(std::span<const ScanRecord> records) {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const ScanRecord& r) { return !r.pass; }));
}

}  // namespace prime_gauge
