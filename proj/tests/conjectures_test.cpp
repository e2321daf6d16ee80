#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "prime_gauge/conjectures.hpp"
#include "prime_gauge/errors.hpp"
#include "prime_gauge/report.hpp"

namespace pg = prime_gauge;

namespace {

const pg::PiTable& table_1e6() {
  static const pg::PiTable t = [] {
    pg::SieveOptions o;
    o.checkpoint_stride = 1 << 16;
    return pg::build_pi_table(1000000, o);
  }();
  return t;
}

std::string one_decimal(double x) { return pg::format_fixed(x, 1); }

TEST(Leg, Examples) {
  const auto basis = pg::build_basis(1001);
  EXPECT_EQ(pg::leg(1, basis), 2u);
  EXPECT_EQ(pg::leg(4, basis), 3u);
  EXPECT_EQ(pg::leg(1000, basis), 152u);
  const std::uint64_t row[] = {2, 2, 2, 3, 2, 4, 3, 4, 3, 5};
  for (std::uint64_t n = 1; n <= 10; ++n) EXPECT_EQ(pg::leg(n, basis), row[n - 1]) << n;
  EXPECT_THROW(pg::leg(0, basis), pg::DomainError);
}

TEST(Leg, TwoPathsAgree) {
  const auto basis = pg::build_basis(1001);
  for (std::uint64_t n = 1; n < 1000; ++n) {
    ASSERT_EQ(pg::leg(n, basis), pg::leg_via_pi(n, table_1e6())) << n;
  }
}

TEST(Leg, OracleOnRandomSmallN) {
  const auto basis = pg::build_basis(400);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> dist(1, 315);  // (n+1)^2 <= 1e5
  for (int t = 0; t < 1000; ++t) {
    const std::uint64_t n = dist(rng);
    ASSERT_EQ(pg::leg(n, basis), oracle::count_td(n * n, (n + 1) * (n + 1), true, true)) << n;
  }
}

TEST(Leg, OverflowIsAnError) {
  const auto basis = pg::build_basis(100);
  EXPECT_THROW(pg::leg(std::uint64_t{1} << 32, basis), pg::OverflowError);
}

TEST(RosserUbLeg, Examples) {
  EXPECT_EQ(one_decimal(pg::rosser_ub_leg(10)), "11.1");
  EXPECT_EQ(one_decimal(pg::rosser_ub_leg(100)), "298.7");
  EXPECT_EQ(one_decimal(pg::rosser_ub_leg(45000)), "23629958.8");
  EXPECT_DOUBLE_EQ(pg::rosser_ub_leg(10), 205.0 / (8.0 * std::log(10.0)));
  EXPECT_THROW(pg::rosser_ub_leg(4), pg::DomainError);
  EXPECT_NO_THROW(pg::rosser_ub_leg(5));
}

TEST(ConjBoundsLeg, Examples) {
  auto b = pg::conj_bounds_leg(10);
  EXPECT_EQ(one_decimal(b.lower), "3.0");
  EXPECT_EQ(one_decimal(b.upper), "6.8");
  b = pg::conj_bounds_leg(20);
  EXPECT_EQ(one_decimal(b.lower), "3.4");
  EXPECT_EQ(one_decimal(b.upper), "10.1");
  b = pg::conj_bounds_leg(500);
  // 255005 / (1500 ln 500) = 27.3554..., which rounds up.
  EXPECT_NEAR(b.lower, 27.355439, 1e-6);
  EXPECT_EQ(one_decimal(b.lower), "27.4");
  EXPECT_EQ(one_decimal(b.upper), "170.0");
  EXPECT_THROW(pg::conj_bounds_leg(1), pg::DomainError);
}

TEST(EvaluateLeg, BoundsOrderedOnGrid) {
  const auto basis = pg::build_basis(45001);
  for (std::uint64_t n : {10, 20, 50, 100, 500, 1000, 2000, 5000, 20000, 45000}) {
    const auto e = pg::evaluate_leg(n, basis);
    EXPECT_TRUE(e.within_conj_bounds) << n;
    EXPECT_LE(e.conj_ub, e.rosser_ub) << n;
    EXPECT_TRUE(e.satisfies_improved);
    EXPECT_TRUE(e.satisfies_legendre);
  }
  EXPECT_EQ(pg::evaluate_leg(45000, basis).leg, 4218u);
}

TEST(RosserCheck, Examples) {
  EXPECT_TRUE(pg::rosser_check(100, table_1e6()));
  EXPECT_TRUE(pg::rosser_check(18, table_1e6()));
  EXPECT_TRUE(pg::rosser_check(1000000, table_1e6()));
  EXPECT_THROW(pg::rosser_check(17, table_1e6()), pg::DomainError);
}

TEST(IntervalCount, Examples) {
  EXPECT_EQ(pg::interval_count(10, 10, table_1e6()), 21u);
  EXPECT_EQ(pg::interval_count(5000, 100, table_1e6()), 40869u);
  EXPECT_EQ(pg::interval_count(2, 2, table_1e6()), 1u);
  // pi(24999) - pi(5000) = 2762 - 669.
  EXPECT_EQ(pg::interval_count(5000, 5, table_1e6()), 2093u);
  EXPECT_EQ(pg::interval_count_half_open(2, 2, table_1e6()), 2u);
}

TEST(IntervalCount, Errors) {
  EXPECT_THROW(pg::interval_count(std::uint64_t{1} << 63, 3, table_1e6()), pg::OverflowError);
  EXPECT_THROW(pg::interval_count(500001, 2, table_1e6()), pg::BudgetError);
  EXPECT_THROW(pg::interval_count(10, 1, table_1e6()), pg::DomainError);
}

TEST(IntervalCount, OracleOnRandomSmallInstances) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::uint64_t> kd(2, 200);
  for (int t = 0; t < 1000; ++t) {
    const std::uint64_t k = kd(rng);
    std::uniform_int_distribution<std::uint64_t> nd(1, 100000 / k);
    const std::uint64_t n = nd(rng);
    ASSERT_EQ(pg::interval_count(n, k, table_1e6()), oracle::count_td(n, k * n, true, true))
        << n << " " << k;
  }
}

TEST(Bertrand, ExamplesAndScan) {
  const auto basis = pg::build_basis(1000);
  EXPECT_TRUE(pg::bertrand_check(2, basis));
  EXPECT_TRUE(pg::bertrand_check(10, basis));
  EXPECT_TRUE(pg::bertrand_check(25, basis));
  EXPECT_THROW(pg::bertrand_check(1, basis), pg::DomainError);
  for (std::uint64_t n = 2; n <= 100000; ++n) ASSERT_TRUE(pg::bertrand_check(n, basis)) << n;
}

TEST(Nagura, Examples) {
  const auto basis = pg::build_basis(1100);
  EXPECT_EQ(pg::nagura_end(26), 31u);
  EXPECT_TRUE(pg::nagura_check(26, basis));
  EXPECT_TRUE(pg::nagura_check(100, basis));
  EXPECT_TRUE(pg::nagura_check(1000000, basis));
  EXPECT_THROW(pg::nagura_check(25, basis), pg::DomainError);
  for (std::uint64_t n = 26; n <= 100000; ++n) ASSERT_TRUE(pg::nagura_check(n, basis)) << n;
}

TEST(ThresholdFormula, Examples) {
  EXPECT_EQ(pg::threshold_formula(2), 2u);
  EXPECT_EQ(pg::threshold_formula(1020), 9u);
  EXPECT_EQ(pg::threshold_formula(1000000), 17u);
  EXPECT_NEAR(pg::threshold_value(2), 1.77, 0.005);
  EXPECT_NEAR(pg::threshold_value(5), 2.78, 0.005);
  EXPECT_NEAR(pg::threshold_value(160), 6.59, 0.005);
  EXPECT_THROW(pg::threshold_formula(1), pg::DomainError);
}

TEST(ThresholdFormula, NondecreasingInK) {
  std::uint64_t prev = pg::threshold_formula(2);
  for (std::uint64_t k = 3; k <= 1000000; ++k) {
    const std::uint64_t a = pg::threshold_formula(k);
    ASSERT_GE(a, prev) << k;
    prev = a;
  }
}

TEST(ThresholdSearch, Examples) {
  const auto table = pg::build_pi_table(650000);
  EXPECT_EQ(pg::threshold_search(2, 10000, table).observed_threshold, 2u);
  EXPECT_EQ(pg::threshold_search(5, 10000, table).observed_threshold, 3u);
  EXPECT_EQ(pg::threshold_search(65, 10000, table).observed_threshold, 6u);
  const auto r22 = pg::threshold_search(22, 10000, table);
  EXPECT_EQ(r22.observed_threshold, 5u);
  EXPECT_EQ(r22.stated_threshold, 4u);
  EXPECT_TRUE(r22.conjecture_holds_on_scan);
  EXPECT_EQ(r22.formula_a, 5u);
  EXPECT_THROW(pg::threshold_search(2, 325001, table), pg::BudgetError);
}

TEST(ThresholdSearch, MatchesBruteForce) {
  const auto table = pg::build_pi_table(100000);
  for (std::uint64_t k = 2; k <= 60; ++k) {
    const std::uint64_t limit = 100000 / k < 300 ? 100000 / k : 300;
    const auto r = pg::threshold_search(k, limit, table);
    std::uint64_t last = 0, stated_last = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
      if (oracle::count_td(n, k * n, false, true) < k) last = n;
      if (oracle::count_td(n, k * n, true, true) < k - 1) stated_last = n;
    }
    EXPECT_EQ(r.last_failing_n, last) << k;
    EXPECT_EQ(r.stated_last_failing_n, stated_last) << k;
    EXPECT_EQ(r.conjecture_holds_on_scan, stated_last < r.formula_a) << k;
    if (r.last_failing_n > 0) {
      EXPECT_LT(pg::interval_count_half_open(*r.observed_threshold - 1, k, table), k);
    }
    if (r.stated_last_failing_n > 0) {
      EXPECT_LT(pg::interval_count(*r.stated_threshold - 1, k, table), k - 1);
    }
  }
}

TEST(Brocard, Examples) {
  EXPECT_EQ(pg::brocard_count(2, table_1e6()), 5u);
  EXPECT_EQ(pg::brocard_count(1, table_1e6()), 2u);
  // Primes in (49, 121): 53 .. 113.
  EXPECT_EQ(pg::brocard_count(4, table_1e6()), 15u);
  EXPECT_EQ(oracle::count_td(49, 121, true, true), 15u);
}

TEST(Brocard, AtLeastFourFromTheSecondPrime) {
  for (std::uint64_t i = 2; i <= 160; ++i) {  // p_161^2 < 1e6
    EXPECT_GE(pg::brocard_count(i, table_1e6()), 4u) << i;
  }
}

TEST(Brocard, OracleOnRandomSmallIndices) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> dist(1, 65);  // p_66^2 = 317^2 > 1e5
  for (int t = 0; t < 1000; ++t) {
    const std::uint64_t i = dist(rng);
    const std::uint64_t p = oracle::nth_prime_td(i), q = oracle::nth_prime_td(i + 1);
    ASSERT_EQ(pg::brocard_count(i, table_1e6()), oracle::count_td(p * p, q * q, true, true)) << i;
  }
}

TEST(BrocardDecomposition, Examples) {
  EXPECT_EQ(pg::brocard_decomposition(2, table_1e6()), (std::pair<std::uint64_t, std::uint64_t>(2, 3)));
  EXPECT_EQ(pg::brocard_decomposition(3, table_1e6()), (std::pair<std::uint64_t, std::uint64_t>(2, 4)));
  EXPECT_EQ(pg::brocard_decomposition(4, table_1e6()), (std::pair<std::uint64_t, std::uint64_t>(3, 5)));
  EXPECT_THROW(pg::brocard_decomposition(1, table_1e6()), pg::DomainError);
  for (std::uint64_t i = 2; i <= 160; ++i) {
    const auto [low, high] = pg::brocard_decomposition(i, table_1e6());
    EXPECT_GE(low, 2u) << i;
    EXPECT_GE(high, 2u) << i;
    EXPECT_LE(low + high, pg::brocard_count(i, table_1e6()));
  }
}

// Independent route to alpha: scan x and evaluate the predicate in long double.
unsigned alpha_reference(std::uint64_t n) {
  for (unsigned x = 1;; ++x) {
    if (std::pow(2.0L, x) > 1.1L * std::log(2.5L * static_cast<long double>(n - x))) return x;
  }
}

TEST(NthPrimeBound, Examples) {
  auto b = pg::nth_prime_bound(32, table_1e6());
  EXPECT_EQ(b.a, 4u);
  EXPECT_EQ(b.alpha, 3u);
  EXPECT_EQ(b.bound, 448u);
  EXPECT_EQ(b.actual, 131u);
  EXPECT_EQ(pg::nth_prime_bound(987).bound, 31424u);
  EXPECT_EQ(pg::nth_prime_bound(2000).bound, 63840u);
  EXPECT_THROW(pg::nth_prime_bound(2), pg::DomainError);
}

TEST(NthPrimeBound, HoldsFromFourAndFailsAtThree) {
  // n = 3: alpha = 1 (2 > 1.1 ln 5), a = 2, bound 2^2 * 1 = 4 < p_3 = 5.
  const auto three = pg::nth_prime_bound(3, table_1e6());
  EXPECT_EQ(three.a, 2u);
  EXPECT_EQ(three.bound, 4u);
  EXPECT_EQ(three.actual, 5u);
  for (std::uint64_t n = 4; n <= 2000; ++n) {
    const auto b = pg::nth_prime_bound(n, table_1e6());
    ASSERT_EQ(b.alpha, alpha_reference(n)) << n;
    ASSERT_GT(b.bound, *b.actual) << n;
    if (n >= 6) ASSERT_TRUE(pg::beats_classical_bound(b)) << n;
  }
  EXPECT_TRUE(pg::beats_classical_bound(pg::nth_prime_bound(5)));  // a = 3: 8 * 2 < 2^5
}

TEST(NthPrimeBound, ActualAbsentBeyondBudget) {
  const auto small = pg::build_pi_table(1000);
  EXPECT_FALSE(pg::nth_prime_bound(500, small).actual.has_value());
}

TEST(Conj4Bound, Examples) {
  EXPECT_EQ(one_decimal(pg::conj4_bound(10, 2)), "6.2");
  EXPECT_EQ(one_decimal(pg::conj4_bound(5000, 100)), "65555.6");
  EXPECT_EQ(one_decimal(pg::conj4_bound(50, 10)), "155.6");
  EXPECT_THROW(pg::conj4_bound(std::uint64_t{1} << 40, std::uint64_t{1} << 30), pg::OverflowError);
}

TEST(Conj4Crossover, Examples) {
  EXPECT_DOUBLE_EQ(pg::conj4_crossover(2), 27.0 / 7.0);
  EXPECT_DOUBLE_EQ(pg::conj4_crossover(10), 891.0 / 71.0);
  EXPECT_DOUBLE_EQ(pg::conj4_crossover(100), 89991.0 / 791.0);
  EXPECT_THROW(pg::conj4_crossover(1), pg::DomainError);
}

TEST(Conj4Crossover, SeparatesInformativeN) {
  // For integer n, kn/9 + k^2 < kn - n + 1 exactly when n exceeds the crossover.
  for (std::uint64_t k = 2; k <= 60; ++k) {
    const double c = pg::conj4_crossover(k);
    for (std::uint64_t n = 1; n <= 400; ++n) {
      const double width = static_cast<double>(k * n - n + 1);
      if (static_cast<double>(n) > c + 1e-9) ASSERT_LT(pg::conj4_bound(n, k), width) << n << " " << k;
      if (static_cast<double>(n) < c - 1e-9) ASSERT_GT(pg::conj4_bound(n, k), width) << n << " " << k;
    }
  }
}

TEST(PntRatio, Examples) {
  EXPECT_NEAR(pg::pnt_ratio(10, table_1e6()), 4.0 / (10.0 / std::log(10.0)), 1e-12);
  EXPECT_NEAR(pg::pnt_ratio(10, table_1e6()), 0.921, 0.0005);
  EXPECT_NEAR(pg::pnt_ratio(100, table_1e6()), 0.967, 0.0005);
  EXPECT_NEAR(pg::pnt_ratio(2, table_1e6()), 0.347, 0.0005);
  EXPECT_THROW(pg::pnt_ratio(1, table_1e6()), pg::DomainError);
}

}  // namespace
