#include <string>
#include <vector>

#include "prime_gauge/checked.hpp"
#include "prime_gauge/errors.hpp"
#include "prime_gauge/sieve.hpp"
#include "segment_sieve.hpp"

namespace prime_gauge {
namespace {

void check_window(const Interval& iv, const PrimeBasis& basis, const SieveOptions& options) {
  if (iv.hi() > options.budget) {
    throw BudgetError("interval end " + std::to_string(iv.hi()) + " exceeds sieve budget " +
                      std::to_string(options.budget));
  }
  if (!basis.covers(iv.hi())) {
    throw PreconditionError("prime basis up to " + std::to_string(basis.limit()) +
                            " cannot sieve up to " + std::to_string(iv.hi()));
  }
}

}  // namespace

Interval::Interval(std::uint64_t lo, std::uint64_t hi, bool lo_open, bool hi_open)
    : lo_(lo), hi_(hi), lo_open_(lo_open), hi_open_(hi_open) {
  if (lo > hi) {
    throw DomainError("interval lower end " + std::to_string(lo) + " exceeds upper end " +
                      std::to_string(hi));
  }
}

bool Interval::empty() const {
  if (hi_ - lo_ >= 2) return false;
  const int removed = (lo_open_ ? 1 : 0) + (hi_open_ ? 1 : 0);
  return hi_ - lo_ + 1 <= static_cast<std::uint64_t>(removed);
}

bool PrimeBasis::covers(std::uint64_t hi) const { return isqrt(hi) <= limit_; }

PrimeBasis build_basis(std::uint64_t limit, const SieveOptions& options) {
  if (limit < 2) {
    throw DomainError("prime basis limit must be at least 2, got " + std::to_string(limit));
  }
  if (limit > options.max_basis_limit || limit > UINT32_MAX) {
    throw BudgetError("prime basis limit " + std::to_string(limit) + " exceeds cap " +
                      std::to_string(options.max_basis_limit));
  }

  // Odd-only: index i stands for 2i + 1.
  const std::uint64_t odd_count = (limit + 1) / 2;
  std::vector<bool> composite(odd_count, false);
  for (std::uint64_t i = 1; (2 * i + 1) * (2 * i + 1) <= limit; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    for (std::uint64_t j = p * p / 2; j < odd_count; j += p) composite[j] = true;
  }

  PrimeBasis basis;
  basis.limit_ = limit;
  basis.primes_.push_back(2);
  for (std::uint64_t i = 1; i < odd_count; ++i) {
    if (!composite[i]) basis.primes_.push_back(static_cast<std::uint32_t>(2 * i + 1));
  }
  return basis;
}

std::uint64_t count_primes(const Interval& iv, const PrimeBasis& basis,
                           const SieveOptions& options) {
  check_window(iv, basis, options);
  if (iv.empty()) return 0;

  std::uint64_t count = iv.contains(2) ? 1 : 0;
  detail::sieve_odd_segments(iv.first(), iv.last(), basis, options.segment_size,
                             [&](std::uint64_t, std::span<const std::uint8_t> flags) {
                               count += detail::count_set(flags);
                               return true;
                             });
  return count;
}

std::vector<std::uint64_t> primes_in(const Interval& iv, const PrimeBasis& basis,
                                     const SieveOptions& options) {
  check_window(iv, basis, options);
  std::vector<std::uint64_t> out;
  if (iv.empty()) return out;

  if (iv.contains(2)) out.push_back(2);
  detail::sieve_odd_segments(iv.first(), iv.last(), basis, options.segment_size,
                             [&](std::uint64_t base, std::span<const std::uint8_t> flags) {
                               for (std::size_t i = 0; i < flags.size(); ++i) {
                                 if (flags[i]) out.push_back(base + 2 * i);
                               }
                               return true;
                             });
  return out;
}

}  // namespace prime_gauge
