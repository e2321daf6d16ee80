#pragma once

// Range scans over the conjecture checks, and the records they produce.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "prime_gauge/sieve.hpp"

namespace prime_gauge {

enum class Rule {
  kLegendre,          // leg(n) >= 1
  kImprovedLegendre,  // leg(n) >= 2
  kLegBounds,         // conj_lb(n) <= leg(n) <= conj_ub(n)
  kRosser,            // n/ln n <= pi(n) <= 1.25 n/ln n
  kBertrand,          // a prime in [n, 2n)
  kNagura,            // a prime in [n, 6n/5]
  kConj3,             // (n, kn) has >= k-1 primes once n >= a(k)
  kThreshold,         // threshold_search for each k
  kConj4,             // (n, kn) has <= kn/9 + k^2 primes
  kNthBound,          // p_n < 2^a (n - a)
  kBrocard,           // (p_i^2, p_{i+1}^2) has >= 4 primes (i = 1 exempt)
  kBrocardSplit,      // both proof subintervals hold >= 2 primes
  kPntRatio,          // informational
  kCrossover,         // informational
};

std::string_view rule_name(Rule rule);
// UsageError for unknown names.
Rule parse_rule(std::string_view name);

using Value = std::variant<std::monostate, std::uint64_t, double>;

template <class T>
using NamedValues = std::vector<std::pair<std::string, T>>;

// Field layout of a rule's records. Names are unique across the three
// groups, so a flat CSV row or JSON object can be mapped back.
struct RuleSchema {
  std::vector<std::string> inputs;
  std::vector<std::string> details;
  std::vector<std::string> bounds;
};

const RuleSchema& rule_schema(Rule rule);

struct ScanRecord {
  Rule rule = Rule::kImprovedLegendre;
  NamedValues<std::uint64_t> inputs;
  Value actual;
  // Auxiliary observed integers (sub-counts, alpha, last failing n, ...).
  NamedValues<std::uint64_t> details;
  NamedValues<double> bounds;
  bool pass = false;

  std::uint64_t input(std::string_view name) const;
  std::optional<std::uint64_t> detail(std::string_view name) const;
  double bound(std::string_view name) const;

  bool operator==(const ScanRecord&) const = default;
};

// The pass flag implied by the record's own values under its rule.
bool recompute_pass(const ScanRecord& record);

// Grid points are visited n-major: for each n, every k (rules that ignore
// k see only the n axis). For kThreshold the k axis is scanned and
// scan_limit is the n horizon.
struct ScanGrid {
  std::vector<std::uint64_t> n;
  std::vector<std::uint64_t> k;
  std::uint64_t scan_limit = 10000;

  static std::vector<std::uint64_t> range(std::uint64_t from, std::uint64_t to);
};

struct ScanOptions {
  SieveOptions sieve;
};

// One record per grid point, in grid order. Failing points are recorded
// with pass = false; only budget, overflow and domain problems throw, and
// they are detected before any sieving starts.
std::vector<ScanRecord> run_scan(Rule rule, const ScanGrid& grid, const ScanOptions& options = {});

// A single point, for the CLI.
ScanRecord evaluate_point(Rule rule, std::uint64_t n, std::uint64_t k,
                          const ScanOptions& options = {});

std::size_t count_failures(std::span<const ScanRecord> records);

}  // namespace prime_gauge
