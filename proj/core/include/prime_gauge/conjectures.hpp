#pragma once

// Quantities attached to the conjectures about primes in [n^2, (n+1)^2]
// and in [n, kn]: leg(n) and its bounds, interval counts, the k-threshold
// formula and its empirical search, Brocard counts, the n-th prime bound
// and the kn/9 + k^2 bound.

#include <cstdint>
#include <optional>
#include <utility>

#include "prime_gauge/sieve.hpp"

namespace prime_gauge {

// Number of primes p with n^2 < p < (n+1)^2.
std::uint64_t leg(std::uint64_t n, const PrimeBasis& basis, const SieveOptions& options = {});

// The same quantity through two pi() lookups; kept separate so the two
// paths can be checked against each other.
std::uint64_t leg_via_pi(std::uint64_t n, const PiTable& table);

// Upper bound on leg(n) that follows from the Rosser-Schoenfeld estimate:
// (n^2 + 10n + 5) / (8 ln n). Requires n >= 5.
double rosser_ub_leg(std::uint64_t n);

struct LegBounds {
  double lower;  // (n^2 + 10n + 5) / (3 n ln n)
  double upper;  // (n^2 + 10n + 5) / (3 n)
};

// Conjectured bounds on leg(n). Requires n >= 2.
LegBounds conj_bounds_leg(std::uint64_t n);

struct LegEvaluation {
  std::uint64_t n = 0;
  std::uint64_t leg = 0;
  double rosser_ub = 0;
  double conj_lb = 0;
  double conj_ub = 0;
  bool satisfies_legendre = false;  // leg >= 1
  bool satisfies_improved = false;  // leg >= 2
  bool within_conj_bounds = false;
};

// Requires n >= 5 for the Rosser bound.
LegEvaluation evaluate_leg(std::uint64_t n, const PrimeBasis& basis,
                           const SieveOptions& options = {});

// n / ln n <= pi(n) <= 1.25 n / ln n. Requires n > 17.
bool rosser_check(std::uint64_t n, const PiTable& table);

// Number of primes p with n < p < kn, as pi(kn - 1) - pi(n).
std::uint64_t interval_count(std::uint64_t n, std::uint64_t k, const PiTable& table);

// Number of primes p with n <= p < kn.
std::uint64_t interval_count_half_open(std::uint64_t n, std::uint64_t k, const PiTable& table);

// A prime exists in [n, 2n). Requires n >= 2.
bool bertrand_check(std::uint64_t n, const PrimeBasis& basis, const SieveOptions& options = {});

// floor(6n/5), the right end of the Nagura interval.
std::uint64_t nagura_end(std::uint64_t n);

// A prime exists in [n, floor(6n/5)]. Requires n > 25.
bool nagura_check(std::uint64_t n, const PrimeBasis& basis, const SieveOptions& options = {});

// 1.1 ln(2.5k) before rounding.
double threshold_value(std::uint64_t k);

// ceil(1.1 ln(2.5k)); values within 1e-9 of an integer are snapped first.
std::uint64_t threshold_formula(std::uint64_t k);

struct ThresholdResult {
  std::uint64_t k = 0;
  std::uint64_t formula_a = 0;
  std::uint64_t scan_limit = 0;

  // Tabulated criterion: [n, kn) holds at least k primes. This is the
  // criterion that reproduces the published "actual threshold" row.
  std::optional<std::uint64_t> observed_threshold;
  std::uint64_t last_failing_n = 0;

  // Stated criterion: (n, kn) holds at least k - 1 primes.
  std::optional<std::uint64_t> stated_threshold;
  std::uint64_t stated_last_failing_n = 0;

  // Every n in [formula_a, scan_limit] meets the stated criterion.
  bool conjecture_holds_on_scan = false;
};

// Scans n = 1..scan_limit. Requires k >= 2 and k * scan_limit <= table budget.
ThresholdResult threshold_search(std::uint64_t k, std::uint64_t scan_limit,
                                 const PiTable& table);

// Number of primes strictly between p_i^2 and p_{i+1}^2.
std::uint64_t brocard_count(std::uint64_t i, const PiTable& table);

// Counts over (p_i^2, (p_i + 1)^2) and ((p_{i+1} - 1)^2, p_{i+1}^2).
// Requires i >= 2.
std::pair<std::uint64_t, std::uint64_t> brocard_decomposition(std::uint64_t i,
                                                              const PiTable& table);

struct NthPrimeBound {
  std::uint64_t n = 0;
  unsigned alpha = 0;  // least x >= 1 with 2^x > 1.1 ln(2.5 (n - x))
  unsigned a = 0;      // alpha + 1
  std::uint64_t bound = 0;             // 2^a (n - a)
  std::optional<std::uint64_t> actual;  // p_n, when within the table budget
};

// Requires n >= 3.
NthPrimeBound nth_prime_bound(std::uint64_t n, const PiTable& table);

// The bound with the actual prime omitted, for use without a table.
NthPrimeBound nth_prime_bound(std::uint64_t n);

// p_n < n (ln n + ln ln n) for n >= 6, a proven bound used to size
// tables before p_n is known; 13 below that.
std::uint64_t nth_prime_ceiling(std::uint64_t n);

// Whether 2^a (n - a) < 2^n.
bool beats_classical_bound(const NthPrimeBound& b);

// kn/9 + k^2.
double conj4_bound(std::uint64_t n, std::uint64_t k);

// (9k^2 - 9) / (8k - 9): below this n, kn/9 + k^2 is no smaller than the
// kn - n + 1 integers of [n, kn].
double conj4_crossover(std::uint64_t k);

// interval_count(n, 2) / (n / ln n). Requires n >= 2.
double pnt_ratio(std::uint64_t n, const PiTable& table);

}  // namespace prime_gauge
