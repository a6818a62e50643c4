#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "dftsub/zn.hpp"

namespace dftsub {

/// Exact arbitrary-precision count.
using BigCount = boost::multiprecision::cpp_int;

/// All length-`parts` vectors of nonnegative integers summing to `total`,
/// in lexicographic order. These are the gap vectors (r_0, ..., r_k): r_i
/// counts the unmarked columns between consecutive marked columns of a
/// digit-table.
std::vector<std::vector<int>> compositions(int total, int parts);

/// Exponent sum(r_i * p^i) counting the free digits of tables with gaps r.
/// Throws BoundExceeded when it would exceed the configured cap.
std::uint64_t gap_exponent(const std::vector<int>& r, std::uint64_t p);

/// Number of index sets of size p^log_d in Z_(p^m) admitting an orthogonal
/// sampling set: sum of p^gap_exponent(r) over all gap vectors, equivalently
/// the x^(m - log_d) coefficient of prod_i 1/(1 - x p^(p^i)).
BigCount count_sampling_sets(std::uint64_t p, int m, int log_d);

/// Number of ordered unitary pairs (I, J), both sides of size p^log_d:
/// sum of p^(sum r_i (p^i + d / p^i)) over gap vectors.
BigCount count_unitary_pairs(std::uint64_t p, int m, int log_d);

/// Same coefficients computed by truncated power-series multiplication of
/// the generating-function factors; retained as an independent cross-check.
BigCount count_sampling_sets_series(std::uint64_t p, int m, int log_d);
BigCount count_unitary_pairs_series(std::uint64_t p, int m, int log_d);

struct BruteForceOptions {
  /// For sampling sets: bound on C(n, d). For pairs: bound on C(n, d)^2.
  std::uint64_t max_work = 10'000'000;
  int jobs = 1;
};

/// Counts size-d subsets I of Z_n for which some J makes (I, J) a unitary
/// pair, by sweeping all C(n, d) subsets once and matching difference
/// classes against realized zero-set divisor masks.
BigCount brute_force_count_sampling_sets(std::uint64_t n, std::size_t d,
                                         const BruteForceOptions& opts = {});

/// Counts ordered pairs (I, J) of size-d subsets with is_unitary_pair true,
/// factored through per-subset difference/zero-set signatures.
BigCount brute_force_count_unitary_pairs(std::uint64_t n, std::size_t d,
                                         const BruteForceOptions& opts = {});

/// log2 of a positive count, accurate to double precision at any size.
double big_log2(const BigCount& value);

struct ThetaPhiRow {
  int log_d = 0;
  BigCount count;      // orthogonal sampling sets of size p^log_d
  double theta = 0.0;  // log_p(count) / d
  BigCount phi_count;  // ordered unitary pairs
  double phi = 0.0;    // log_p(phi_count) / d
  double theta_bound = 0.0;  // m - log_d + log_p C(m, floor(m/2))
  double phi_bound = 0.0;    // 2(m - log_d) + log_p C(m, floor(m/2))
};

/// One row per log_d in [0, m]. The bound columns hold the loose
/// digit-table bounds; every row satisfies theta <= theta_bound and
/// phi <= phi_bound (the exact integer form of the same inequality is
/// count <= C(m, floor(m/2))^d * p^(d (m - log_d))).
std::vector<ThetaPhiRow> theta_phi_table(std::uint64_t p, int m);

/// CSV with header "log_d,count,theta,phi_count,phi,theta_bound,phi_bound";
/// floats at 15 significant digits.
std::string theta_phi_csv(const std::vector<ThetaPhiRow>& rows);

BigCount binomial(std::uint64_t n, std::uint64_t k);

}  // namespace dftsub
