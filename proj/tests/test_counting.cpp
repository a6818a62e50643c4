#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dftsub/counting.hpp"
#include "dftsub/errors.hpp"

using namespace dftsub;

TEST_CASE("compositions") {
  CHECK(compositions(0, 1) == std::vector<std::vector<int>>{{0}});
  CHECK(compositions(1, 3) ==
        std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(compositions(2, 2) ==
        std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}});

  SUBCASE("count, order, and sums") {
    for (int total = 0; total <= 7; ++total) {
      for (int parts = 1; parts <= 5; ++parts) {
        auto all = compositions(total, parts);
        // stars and bars
        CHECK(BigCount(all.size()) ==
              binomial(static_cast<std::uint64_t>(total + parts - 1),
                       static_cast<std::uint64_t>(parts - 1)));
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        for (const auto& r : all) {
          CHECK(r.size() == static_cast<std::size_t>(parts));
          int sum = 0;
          for (int x : r) {
            CHECK(x >= 0);
            sum += x;
          }
          CHECK(sum == total);
        }
      }
    }
  }
}

TEST_CASE("gap exponents") {
  CHECK(gap_exponent({1, 1, 0}, 2) == 3);
  CHECK(gap_exponent({4}, 2) == 4);
  CHECK(gap_exponent({0, 3}, 3) == 9);
  CHECK_THROWS_AS(gap_exponent({1000000, 1000000, 1000000}, 7), BoundExceeded);
}

TEST_CASE("closed-form counts match the reference values") {
  CHECK(count_sampling_sets(2, 3, 2) == 22);
  CHECK(count_sampling_sets(2, 4, 2) == 380);
  CHECK(count_unitary_pairs(2, 3, 2) == 80);
  CHECK(count_unitary_pairs(2, 4, 2) == 4352);

  SUBCASE("boundary sizes") {
    // size 1: every singleton works, and pairs factor independently
    CHECK(count_sampling_sets(2, 4, 0) == 16);
    CHECK(count_unitary_pairs(2, 4, 0) == 256);
    CHECK(count_sampling_sets(3, 3, 0) == 27);
    // the full index set is its own unique sampling set
    CHECK(count_sampling_sets(2, 4, 4) == 1);
    CHECK(count_unitary_pairs(2, 4, 4) == 1);
    CHECK(count_sampling_sets(5, 2, 2) == 1);
  }

  SUBCASE("composition sum equals series coefficient extraction") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
      for (int m = 1; m <= 6; ++m) {
        for (int log_d = 0; log_d <= m; ++log_d) {
          CHECK(count_sampling_sets(p, m, log_d) ==
                count_sampling_sets_series(p, m, log_d));
          CHECK(count_unitary_pairs(p, m, log_d) ==
                count_unitary_pairs_series(p, m, log_d));
        }
      }
    }
  }

  SUBCASE("argument validation") {
    CHECK_THROWS_AS(count_sampling_sets(2, 4, 5), std::invalid_argument);
    CHECK_THROWS_AS(count_sampling_sets(2, 4, -1), std::invalid_argument);
    CHECK_THROWS_AS(count_sampling_sets(4, 3, 1), std::invalid_argument);  // not prime
  }
}

TEST_CASE("brute-force sweeps agree with the closed forms") {
  CHECK(brute_force_count_sampling_sets(8, 4) == 22);
  CHECK(brute_force_count_unitary_pairs(8, 4) == 80);

  // all divisor-power sizes on Z_9 and Z_16
  CHECK(brute_force_count_sampling_sets(9, 3) == count_sampling_sets(3, 2, 1));
  CHECK(brute_force_count_unitary_pairs(9, 3) == count_unitary_pairs(3, 2, 1));
  CHECK(brute_force_count_sampling_sets(16, 2) == count_sampling_sets(2, 4, 1));
  CHECK(brute_force_count_sampling_sets(16, 8) == count_sampling_sets(2, 4, 3));

  // sizes that are not powers of p admit no sampling set at all
  CHECK(brute_force_count_sampling_sets(8, 3) == 0);
  CHECK(brute_force_count_sampling_sets(9, 2) == 0);

  SUBCASE("worker count does not change the answer") {
    BruteForceOptions serial;
    BruteForceOptions threaded;
    threaded.jobs = 4;
    CHECK(brute_force_count_sampling_sets(16, 4, serial) == 380);
    CHECK(brute_force_count_sampling_sets(16, 4, threaded) == 380);
    CHECK(brute_force_count_unitary_pairs(16, 4, threaded) == 4352);
  }

  SUBCASE("work bound") {
    BruteForceOptions tiny;
    tiny.max_work = 10;
    CHECK_THROWS_AS(brute_force_count_sampling_sets(16, 4, tiny), BoundExceeded);
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(16, 4) == 1820);
  CHECK(binomial(16, 4) * binomial(16, 4) == 3312400);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 7) == 0);

  for (std::uint64_t n = 1; n <= 30; ++n) {
    for (std::uint64_t k = 1; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("base-2 logarithms of big counts") {
  CHECK(big_log2(BigCount(1)) == doctest::Approx(0.0));
  CHECK(big_log2(BigCount(380)) == doctest::Approx(std::log2(380.0)));

  // exact powers of two at any size
  for (int k : {10, 100, 1000, 5000}) {
    BigCount value = BigCount(1) << k;
    CHECK(big_log2(value) == doctest::Approx(static_cast<double>(k)));
  }

  // a huge non-power: 3^2000
  BigCount big = 1;
  for (int i = 0; i < 2000; ++i) big *= 3;
  CHECK(big_log2(big) == doctest::Approx(2000.0 * std::log2(3.0)).epsilon(1e-12));
}

TEST_CASE("theta and phi tables") {
  auto rows = theta_phi_table(2, 4);
  REQUIRE(rows.size() == 5);
  CHECK(rows[2].count == 380);
  CHECK(rows[2].phi_count == 4352);
  CHECK(rows[2].theta == doctest::Approx(std::log2(380.0) / 4.0));
  CHECK(rows[2].phi == doctest::Approx(std::log2(4352.0) / 4.0));
  CHECK(rows[0].theta == doctest::Approx(4.0));
  CHECK(rows[4].theta == doctest::Approx(0.0));

  SUBCASE("counts stay below the digit-table bound") {
    for (std::uint64_t p : {2ull, 3ull}) {
      for (int m = 1; m <= 8; ++m) {
        const BigCount middle = binomial(static_cast<std::uint64_t>(m),
                                         static_cast<std::uint64_t>(m / 2));
        for (const auto& row : theta_phi_table(p, m)) {
          CHECK(row.theta <= row.theta_bound + 1e-12);
          CHECK(row.phi <= row.phi_bound + 1e-12);
          // exact integer form of the same inequality
          const auto d = static_cast<int>(ipow(p, row.log_d));
          BigCount cap = 1;
          for (int t = 0; t < d; ++t) cap *= middle;
          for (int t = 0; t < d * (m - row.log_d); ++t) cap *= p;
          CHECK(row.count <= cap);
        }
      }
    }
  }

  SUBCASE("csv shape") {
    auto csv = theta_phi_csv(rows);
    std::istringstream lines(csv);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "log_d,count,theta,phi_count,phi,theta_bound,phi_bound");
    int count = 0;
    while (std::getline(lines, line)) {
      CHECK(std::count(line.begin(), line.end(), ',') == 6);
      ++count;
    }
    CHECK(count == 5);
    CHECK(theta_phi_csv(rows) == csv);  // deterministic
  }
}
