#pragma once

// Exact prime generation, primality and prime counting over 64-bit ranges.
//
// Everything here is built from two pieces: a simple sieve that produces
// the base primes up to some bound B (PrimeBasis), and an odd-only
// segmented sieve that uses those base primes to sieve any window
// [lo, hi] with hi <= B^2 in fixed-size blocks. PiTable stores cumulative
// counts at a fixed stride so pi(x) costs at most one stride of sieving.

#include <cstdint>
#include <span>
#include <vector>

namespace prime_gauge {

struct SieveOptions {
  // Integers per segment of the segmented sieve (odd-only storage uses
  // half as many bytes).
  std::uint64_t segment_size = std::uint64_t{1} << 20;
  // Distance between PiTable checkpoints.
  std::uint64_t checkpoint_stride = std::uint64_t{1} << 24;
  // Largest integer any count or table may reach.
  std::uint64_t budget = std::uint64_t{1} << 31;
  // Largest limit accepted by build_basis (the simple sieve is not
  // segmented, so this caps its memory).
  std::uint64_t max_basis_limit = std::uint64_t{1} << 28;
  unsigned threads = 1;
};

// An integer range with explicit endpoint semantics. There is no default
// openness: construct through one of the named factories.
class Interval {
 public:
  Interval(std::uint64_t lo, std::uint64_t hi, bool lo_open, bool hi_open);

  static Interval open(std::uint64_t lo, std::uint64_t hi) { return {lo, hi, true, true}; }
  static Interval closed(std::uint64_t lo, std::uint64_t hi) { return {lo, hi, false, false}; }
  // [lo, hi)
  static Interval closed_open(std::uint64_t lo, std::uint64_t hi) { return {lo, hi, false, true}; }
  // (lo, hi]
  static Interval open_closed(std::uint64_t lo, std::uint64_t hi) { return {lo, hi, true, false}; }

  std::uint64_t lo() const { return lo_; }
  std::uint64_t hi() const { return hi_; }
  bool lo_open() const { return lo_open_; }
  bool hi_open() const { return hi_open_; }

  // Smallest and largest admitted integers; empty() is checked first.
  bool empty() const;
  std::uint64_t first() const { return lo_open_ ? lo_ + 1 : lo_; }
  std::uint64_t last() const { return hi_open_ ? hi_ - 1 : hi_; }
  bool contains(std::uint64_t x) const { return !empty() && first() <= x && x <= last(); }

  bool operator==(const Interval&) const = default;

 private:
  std::uint64_t lo_;
  std::uint64_t hi_;
  bool lo_open_;
  bool hi_open_;
};

class PrimeBasis {
 public:
  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }
  // True when every composite <= hi has a prime factor in the basis.
  bool covers(std::uint64_t hi) const;

 private:
  friend PrimeBasis build_basis(std::uint64_t limit, const SieveOptions& options);
  std::uint64_t limit_ = 0;
  std::vector<std::uint32_t> primes_;
};

// All primes <= limit. Throws DomainError for limit < 2 and BudgetError
// above options.max_basis_limit.
PrimeBasis build_basis(std::uint64_t limit, const SieveOptions& options = {});

// Deterministic for every 64-bit n.
bool is_prime(std::uint64_t n);

// Exact number of primes admitted by iv. Sieves in options.segment_size
// blocks, never the whole range at once.
std::uint64_t count_primes(const Interval& iv, const PrimeBasis& basis,
                           const SieveOptions& options = {});

// The primes admitted by iv, ascending.
std::vector<std::uint64_t> primes_in(const Interval& iv, const PrimeBasis& basis,
                                     const SieveOptions& options = {});

class PiTable {
 public:
  std::uint64_t budget() const { return budget_; }
  std::uint64_t stride() const { return stride_; }
  // checkpoints()[j] == pi(j * stride()) for j * stride() <= budget().
  std::span<const std::uint64_t> checkpoints() const { return checkpoints_; }
  const PrimeBasis& basis() const { return basis_; }
  const SieveOptions& options() const { return options_; }

 private:
  friend PiTable build_pi_table(std::uint64_t budget, const SieveOptions& options);
  std::uint64_t budget_ = 0;
  std::uint64_t stride_ = 0;
  std::vector<std::uint64_t> checkpoints_;
  PrimeBasis basis_;
  SieveOptions options_;
};

// Sieves [0, budget] once, in parallel over checkpoint blocks.
// budget must not exceed options.budget.
PiTable build_pi_table(std::uint64_t budget, const SieveOptions& options = {});

// Number of primes <= x. BudgetError when x > table.budget().
std::uint64_t pi(std::uint64_t x, const PiTable& table);

// pi at many points; result[i] == pi(xs[i], table). Each checkpoint block
// touched by the queries is swept once, blocks in parallel.
std::vector<std::uint64_t> pi_many(std::span<const std::uint64_t> xs, const PiTable& table);

// p_i with p_1 = 2. BudgetError when p_i > table.budget().
std::uint64_t nth_prime(std::uint64_t i, const PiTable& table);

}  // namespace prime_gauge
