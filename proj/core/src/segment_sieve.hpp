#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "prime_gauge/sieve.hpp"

namespace prime_gauge::detail {

// Odd-only segmented sieve over the odd integers of [first, last].
//
// Calls visit(base, flags) once per segment, in ascending order, where
// flags[i] != 0 iff base + 2*i is prime. base is odd and >= 3; the
// integers 1 and 2 are never reported, callers account for 2 themselves.
// visit returns false to stop early. Requires basis.covers(last) and
// last < 2^63.
template <class Visit>
void sieve_odd_segments(std::uint64_t first, std::uint64_t last, const PrimeBasis& basis,
                        std::uint64_t segment_size, Visit&& visit) {
  std::uint64_t base = std::max<std::uint64_t>(first, 3);
  if (base % 2 == 0) ++base;
  if (base > last) return;

  const std::uint64_t odds_per_segment = std::max<std::uint64_t>(segment_size / 2, 1);
  std::vector<std::uint8_t> flags(
      static_cast<std::size_t>(std::min(odds_per_segment, (last - base) / 2 + 1)));
  const auto primes = basis.primes();

  for (;;) {
    const std::uint64_t len = std::min<std::uint64_t>(flags.size(), (last - base) / 2 + 1);
    const std::uint64_t seg_last = base + 2 * (len - 1);
    std::fill_n(flags.begin(), len, std::uint8_t{1});

    // primes[0] == 2 is skipped: evens are not stored.
    for (std::size_t i = 1; i < primes.size(); ++i) {
      const std::uint64_t p = primes[i];
      if (p * p > seg_last) break;
      std::uint64_t m = p * p;
      if (m < base) {
        m = (base + p - 1) / p * p;
        if (m % 2 == 0) m += p;
      }
      for (std::uint64_t j = (m - base) / 2; j < len; j += p) flags[j] = 0;
    }

    if (!visit(base, std::span<const std::uint8_t>(flags.data(), len))) return;
    if (last - seg_last < 2) return;
    base = seg_last + 2;
  }
}

inline std::uint64_t count_set(std::span<const std::uint8_t> flags) {
  return static_cast<std::uint64_t>(std::count(flags.begin(), flags.end(), std::uint8_t{1}));
}

}  // namespace prime_gauge::detail
