#include "prime_gauge/conjectures.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "prime_gauge/checked.hpp"
#include "prime_gauge/errors.hpp"

namespace prime_gauge {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

std::string str(std::uint64_t v) { return std::to_string(v); }

// n^2 + 10n + 5, shared numerator of the three leg(n) bounds.
double leg_numerator(std::uint64_t n) {
  const double x = static_cast<double>(n);
  return x * x + 10.0 * x + 5.0;
}

}  // namespace

std::uint64_t leg(std::uint64_t n, const PrimeBasis& basis, const SieveOptions& options) {
  require(n >= 1, "leg(n) requires n >= 1");
  const std::uint64_t lo = checked_square(n, "leg n^2");
  const std::uint64_t hi = checked_square(checked_add(n, 1, "leg n+1"), "leg (n+1)^2");
  return count_primes(Interval::open(lo, hi), basis, options);
}

std::uint64_t leg_via_pi(std::uint64_t n, const PiTable& table) {
  require(n >= 1, "leg(n) requires n >= 1");
  const std::uint64_t lo = checked_square(n, "leg n^2");
  const std::uint64_t hi = checked_square(checked_add(n, 1, "leg n+1"), "leg (n+1)^2");
  return pi(hi - 1, table) - pi(lo, table);
}

double rosser_ub_leg(std::uint64_t n) {
  require(n >= 5, "Rosser-derived leg bound requires n >= 5, got " + str(n));
  return leg_numerator(n) / (8.0 * std::log(static_cast<double>(n)));
}

LegBounds conj_bounds_leg(std::uint64_t n) {
  require(n >= 2, "conjectured leg bounds require n >= 2, got " + str(n));
  const double x = static_cast<double>(n);
  const double num = leg_numerator(n);
  return {num / (3.0 * x * std::log(x)), num / (3.0 * x)};
}

LegEvaluation evaluate_leg(std::uint64_t n, const PrimeBasis& basis,
                           const SieveOptions& options) {
  LegEvaluation e;
  e.n = n;
  e.rosser_ub = rosser_ub_leg(n);
  const LegBounds b = conj_bounds_leg(n);
  e.conj_lb = b.lower;
  e.conj_ub = b.upper;
  e.leg = leg(n, basis, options);
  e.satisfies_legendre = e.leg >= 1;
  e.satisfies_improved = e.leg >= 2;
  const double value = static_cast<double>(e.leg);
  e.within_conj_bounds = e.conj_lb <= value && value <= e.conj_ub;
  return e;
}

bool rosser_check(std::uint64_t n, const PiTable& table) {
  require(n > 17, "Rosser-Schoenfeld bounds hold for n > 17, got " + str(n));
  const double x = static_cast<double>(n);
  const double count = static_cast<double>(pi(n, table));
  const double lower = x / std::log(x);
  return lower <= count && count <= 1.25 * lower;
}

std::uint64_t interval_count(std::uint64_t n, std::uint64_t k, const PiTable& table) {
  require(n >= 1, "interval count requires n >= 1");
  require(k >= 2, "interval count requires k >= 2, got " + str(k));
  const std::uint64_t kn = checked_mul(k, n, "interval end k*n");
  return pi(kn - 1, table) - pi(n, table);
}

std::uint64_t interval_count_half_open(std::uint64_t n, std::uint64_t k, const PiTable& table) {
  require(n >= 1, "interval count requires n >= 1");
  require(k >= 2, "interval count requires k >= 2, got " + str(k));
  const std::uint64_t kn = checked_mul(k, n, "interval end k*n");
  return pi(kn - 1, table) - pi(n - 1, table);
}

bool bertrand_check(std::uint64_t n, const PrimeBasis& basis, const SieveOptions& options) {
  require(n >= 2, "Bertrand's postulate requires n >= 2, got " + str(n));
  const std::uint64_t end = checked_mul(2, n, "Bertrand interval end 2n");
  return count_primes(Interval::closed_open(n, end), basis, options) >= 1;
}

std::uint64_t nagura_end(std::uint64_t n) { return checked_mul(6, n, "Nagura end 6n") / 5; }

bool nagura_check(std::uint64_t n, const PrimeBasis& basis, const SieveOptions& options) {
  require(n > 25, "Nagura's interval result requires n > 25, got " + str(n));
  return count_primes(Interval::closed(n, nagura_end(n)), basis, options) >= 1;
}

double threshold_value(std::uint64_t k) {
  require(k >= 2, "threshold requires k >= 2, got " + str(k));
  return 1.1 * std::log(2.5 * static_cast<double>(k));
}

std::uint64_t threshold_formula(std::uint64_t k) {
  const double v = threshold_value(k);
  const double nearest = std::round(v);
  const double a = std::abs(v - nearest) < 1e-9 ? nearest : std::ceil(v);
  return static_cast<std::uint64_t>(a);
}

ThresholdResult threshold_search(std::uint64_t k, std::uint64_t scan_limit,
                                 const PiTable& table) {
  require(k >= 2, "threshold search requires k >= 2, got " + str(k));
  require(scan_limit >= 1, "threshold search requires scan_limit >= 1");
  const std::uint64_t top = checked_mul(k, scan_limit, "threshold scan end k*scan_limit");
  if (top > table.budget()) {
    throw BudgetError("threshold scan for k=" + str(k) + " up to n=" + str(scan_limit) +
                      " needs sieving to " + str(top) + ", beyond table budget " +
                      str(table.budget()));
  }

  // Per n: pi(n - 1), pi(n), pi(kn - 1).
  std::vector<std::uint64_t> xs;
  xs.reserve(3 * scan_limit);
  for (std::uint64_t n = 1; n <= scan_limit; ++n) {
    xs.push_back(n - 1);
    xs.push_back(n);
    xs.push_back(k * n - 1);
  }
  const std::vector<std::uint64_t> pis = pi_many(xs, table);

  ThresholdResult r;
  r.k = k;
  r.formula_a = threshold_formula(k);
  r.scan_limit = scan_limit;
  for (std::uint64_t n = 1; n <= scan_limit; ++n) {
    const std::size_t at = 3 * (n - 1);
    const std::uint64_t half_open = pis[at + 2] - pis[at];
    const std::uint64_t open = pis[at + 2] - pis[at + 1];
    if (half_open < k) r.last_failing_n = n;
    if (open < k - 1) r.stated_last_failing_n = n;
  }
  if (r.last_failing_n < scan_limit) r.observed_threshold = r.last_failing_n + 1;
  if (r.stated_last_failing_n < scan_limit) r.stated_threshold = r.stated_last_failing_n + 1;
  r.conjecture_holds_on_scan = r.stated_last_failing_n < r.formula_a;
  return r;
}

std::uint64_t brocard_count(std::uint64_t i, const PiTable& table) {
  require(i >= 1, "prime index must be positive");
  const std::uint64_t p = nth_prime(i, table);
  const std::uint64_t q = nth_prime(checked_add(i, 1, "prime index i+1"), table);
  const std::uint64_t hi = checked_square(q, "Brocard p_{i+1}^2");
  return pi(hi - 1, table) - pi(checked_square(p, "Brocard p_i^2"), table);
}

std::pair<std::uint64_t, std::uint64_t> brocard_decomposition(std::uint64_t i,
                                                              const PiTable& table) {
  require(i >= 2, "Brocard decomposition needs odd consecutive primes (i >= 2), got " + str(i));
  const std::uint64_t p = nth_prime(i, table);
  const std::uint64_t q = nth_prime(checked_add(i, 1, "prime index i+1"), table);
  const std::uint64_t q2 = checked_square(q, "Brocard p_{i+1}^2");
  const std::uint64_t p2 = p * p;
  const std::uint64_t low = pi((p + 1) * (p + 1) - 1, table) - pi(p2, table);
  const std::uint64_t high = pi(q2 - 1, table) - pi((q - 1) * (q - 1), table);
  return {low, high};
}

NthPrimeBound nth_prime_bound(std::uint64_t n) {
  require(n >= 3, "n-th prime bound requires n >= 3, got " + str(n));
  unsigned x = 1;
  for (; n - x >= 1; ++x) {
    if (std::ldexp(1.0, static_cast<int>(x)) >
        1.1 * std::log(2.5 * static_cast<double>(n - x))) {
      break;
    }
  }
  require(n - x >= 1, "no alpha with n - alpha >= 1 satisfies 2^x > 1.1 ln(2.5(n - x))");
  NthPrimeBound b;
  b.n = n;
  b.alpha = x;
  b.a = x + 1;
  require(n > b.a, "n-th prime bound needs n > a, got n=" + str(n) + " a=" + str(b.a));
  b.bound = checked_mul(checked_pow2(b.a, "2^a"), n - b.a, "2^a (n - a)");
  return b;
}

NthPrimeBound nth_prime_bound(std::uint64_t n, const PiTable& table) {
  NthPrimeBound b = nth_prime_bound(n);
  try {
    b.actual = nth_prime(n, table);
  } catch (const BudgetError&) {
    b.actual.reset();
  }
  return b;
}

std::uint64_t nth_prime_ceiling(std::uint64_t n) {
  if (n < 6) return 13;
  const double x = static_cast<double>(n);
  const double v = x * (std::log(x) + std::log(std::log(x)));
  if (v >= 1.8e19) throw OverflowError("p_" + str(n) + " estimate overflows 64 bits");
  return static_cast<std::uint64_t>(v) + 1;
}

bool beats_classical_bound(const NthPrimeBound& b) {
  if (b.n >= 64) return true;
  return b.bound < (std::uint64_t{1} << b.n);
}

double conj4_bound(std::uint64_t n, std::uint64_t k) {
  require(n >= 1 && k >= 1, "kn/9 + k^2 requires positive n and k");
  const std::uint64_t kn = checked_mul(k, n, "k*n");
  const std::uint64_t kk = checked_square(k, "k^2");
  return static_cast<double>(kn) / 9.0 + static_cast<double>(kk);
}

double conj4_crossover(std::uint64_t k) {
  require(k >= 2, "crossover requires k >= 2, got " + str(k));
  const double x = static_cast<double>(k);
  return (9.0 * x * x - 9.0) / (8.0 * x - 9.0);
}

double pnt_ratio(std::uint64_t n, const PiTable& table) {
  require(n >= 2, "PNT ratio requires n >= 2, got " + str(n));
  const double x = static_cast<double>(n);
  return static_cast<double>(interval_count(n, 2, table)) / (x / std::log(x));
}

}  // namespace prime_gauge
