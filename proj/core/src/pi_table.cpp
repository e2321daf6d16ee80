#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "prime_gauge/checked.hpp"
#include "prime_gauge/errors.hpp"
#include "prime_gauge/parallel.hpp"
#include "prime_gauge/sieve.hpp"
#include "segment_sieve.hpp"

namespace prime_gauge {
namespace {

void check_query(std::uint64_t x, const PiTable& table) {
  if (x > table.budget()) {
    throw BudgetError("pi(" + std::to_string(x) + ") exceeds table budget " +
                      std::to_string(table.budget()));
  }
}

}  // namespace

PiTable build_pi_table(std::uint64_t budget, const SieveOptions& options) {
  if (budget > options.budget) {
    throw BudgetError("table budget " + std::to_string(budget) + " exceeds sieve budget " +
                      std::to_string(options.budget));
  }
  if (options.checkpoint_stride == 0) throw DomainError("checkpoint stride must be positive");

  PiTable table;
  table.budget_ = budget;
  table.stride_ = options.checkpoint_stride;
  table.options_ = options;
  table.basis_ = build_basis(std::max<std::uint64_t>(2, isqrt(budget)), options);

  const std::uint64_t blocks = budget / table.stride_;
  std::vector<std::uint64_t> block_counts(blocks);
  parallel_for(blocks, options.threads, [&](std::size_t j) {
    const Interval block =
        Interval::open_closed(j * table.stride_, (j + 1) * table.stride_);
    block_counts[j] = count_primes(block, table.basis_, options);
  });

  table.checkpoints_.resize(blocks + 1);
  table.checkpoints_[0] = 0;
  std::partial_sum(block_counts.begin(), block_counts.end(), table.checkpoints_.begin() + 1);
  return table;
}

std::uint64_t pi(std::uint64_t x, const PiTable& table) {
  check_query(x, table);
  const std::uint64_t j = x / table.stride();
  const std::uint64_t base = j * table.stride();
  std::uint64_t count = table.checkpoints()[j];
  if (x > base) {
    count += count_primes(Interval::open_closed(base, x), table.basis(), table.options());
  }
  return count;
}

std::vector<std::uint64_t> pi_many(std::span<const std::uint64_t> xs, const PiTable& table) {
  for (std::uint64_t x : xs) check_query(x, table);

  std::vector<std::pair<std::uint64_t, std::size_t>> order(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) order[i] = {xs[i], i};
  std::sort(order.begin(), order.end());

  // [begin, end) ranges of `order` sharing one checkpoint block.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < order.size();) {
    const std::uint64_t block = order[i].first / table.stride();
    std::size_t end = i;
    while (end < order.size() && order[end].first / table.stride() == block) ++end;
    groups.emplace_back(i, end);
    i = end;
  }

  std::vector<std::uint64_t> out(xs.size());
  parallel_for(groups.size(), table.options().threads, [&](std::size_t g) {
    const auto [begin, end] = groups[g];
    const std::uint64_t lo = order[begin].first / table.stride() * table.stride();
    const std::uint64_t hi = order[end - 1].first;
    const std::uint64_t below = table.checkpoints()[lo / table.stride()];

    auto emit = [&](std::size_t q, std::uint64_t odd_primes) {
      const std::uint64_t x = order[q].first;
      out[order[q].second] = below + odd_primes + (lo < 2 && x >= 2 ? 1 : 0);
    };

    std::size_t q = begin;
    std::uint64_t running = 0;
    if (hi > lo) {
      detail::sieve_odd_segments(
          lo + 1, hi, table.basis(), table.options().segment_size,
          [&](std::uint64_t base, std::span<const std::uint8_t> flags) {
            for (; q < end && order[q].first < base; ++q) emit(q, running);
            const std::uint64_t seg_last = base + 2 * (flags.size() - 1);
            std::size_t pos = 0;
            std::uint64_t partial = running;
            for (; q < end && order[q].first <= seg_last + 1; ++q) {
              const std::size_t upto = static_cast<std::size_t>((order[q].first - base) / 2 + 1);
              partial += detail::count_set(flags.subspan(pos, upto - pos));
              pos = upto;
              emit(q, partial);
            }
            running += detail::count_set(flags);
            return q < end;
          });
    }
    for (; q < end; ++q) emit(q, running);
  });
  return out;
}

std::uint64_t nth_prime(std::uint64_t i, const PiTable& table) {
  if (i == 0) throw DomainError("prime index must be positive (p_1 = 2)");

  const auto cps = table.checkpoints();
  const auto j = static_cast<std::uint64_t>(std::lower_bound(cps.begin(), cps.end(), i) -
                                            cps.begin() - 1);
  std::uint64_t need = i - cps[j];
  const std::uint64_t lo = j * table.stride();

  if (lo < 2 && table.budget() >= 2) {
    if (need == 1) return 2;
    --need;
  }

  std::uint64_t found = 0;
  if (table.budget() > lo) {
    detail::sieve_odd_segments(lo + 1, table.budget(), table.basis(),
                               table.options().segment_size,
                               [&](std::uint64_t base, std::span<const std::uint8_t> flags) {
                                 for (std::size_t k = 0; k < flags.size(); ++k) {
                                   if (flags[k] && --need == 0) {
                                     found = base + 2 * k;
                                     return false;
                                   }
                                 }
                                 return true;
                               });
  }
  if (found == 0) {
    throw BudgetError("p_" + std::to_string(i) + " lies beyond table budget " +
                      std::to_string(table.budget()));
  }
  return found;
}

}  // namespace prime_gauge
