#include "dftsub/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <thread>

#include "dftsub/errors.hpp"
#include "dftsub/idempotent.hpp"

namespace dftsub {

namespace {

/// Keeps single terms p^lambda below ~0.5 MB so user-supplied parameters
/// cannot silently allocate gigabytes.
constexpr std::uint64_t kExponentBitCap = std::uint64_t{1} << 22;

void check_count_args(std::uint64_t p, int m, int log_d) {
  if (p < 2) throw std::invalid_argument("counting: base must be >= 2");
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) throw std::invalid_argument("counting: base must be prime");
  }
  if (m < 0 || log_d < 0 || log_d > m) {
    throw std::invalid_argument("counting: need 0 <= log_d <= m");
  }
}

BigCount pow_big(std::uint64_t p, std::uint64_t e) {
  BigCount base = p;
  BigCount result = 1;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace

std::vector<std::vector<int>> compositions(int total, int parts) {
  if (total < 0 || parts <= 0) {
    throw std::invalid_argument("compositions: need total >= 0, parts >= 1");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(parts), 0);
  // Odometer over the first parts-1 entries; the last absorbs the remainder.
  std::size_t last = static_cast<std::size_t>(parts) - 1;
  while (true) {
    int used = 0;
    for (std::size_t i = 0; i < last; ++i) used += current[i];
    current[last] = total - used;
    out.push_back(current);
    // Advance: rightmost non-last position that can still grow.
    std::size_t pos = last;
    while (pos > 0) {
      --pos;
      int prefix = 0;
      for (std::size_t i = 0; i < pos; ++i) prefix += current[i];
      if (prefix + current[pos] < total) {
        ++current[pos];
        for (std::size_t i = pos + 1; i < last; ++i) current[i] = 0;
        break;
      }
      if (pos == 0) return out;
      current[pos] = 0;
    }
    if (parts == 1) return out;
  }
}

std::uint64_t gap_exponent(const std::vector<int>& r, std::uint64_t p) {
  std::uint64_t lambda = 0;
  std::uint64_t weight = 1;
  const double log2p = std::log2(static_cast<double>(p));
  for (std::size_t i = 0; i < r.size(); ++i) {
    lambda += static_cast<std::uint64_t>(r[i]) * weight;
    if (static_cast<double>(lambda) * log2p > static_cast<double>(kExponentBitCap)) {
      throw BoundExceeded("counting exponent exceeds the size cap");
    }
    if (i + 1 < r.size()) weight *= p;
  }
  return lambda;
}

BigCount count_sampling_sets(std::uint64_t p, int m, int log_d) {
  check_count_args(p, m, log_d);
  BigCount total = 0;
  for (const auto& r : compositions(m - log_d, log_d + 1)) {
    total += pow_big(p, gap_exponent(r, p));
  }
  return total;
}

BigCount count_unitary_pairs(std::uint64_t p, int m, int log_d) {
  check_count_args(p, m, log_d);
  // Weight for gap r_i is r_i * (p^i + d/p^i): the free digits of the
  // sample-side table plus those of its dual.
  const std::uint64_t d = ipow(p, log_d);
  const double log2p = std::log2(static_cast<double>(p));
  BigCount total = 0;
  for (const auto& r : compositions(m - log_d, log_d + 1)) {
    std::uint64_t exponent = 0;
    std::uint64_t weight = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
      exponent += static_cast<std::uint64_t>(r[i]) * (weight + d / weight);
      if (static_cast<double>(exponent) * log2p >
          static_cast<double>(kExponentBitCap)) {
        throw BoundExceeded("counting exponent exceeds the size cap");
      }
      if (i + 1 < r.size()) weight *= p;
    }
    total += pow_big(p, exponent);
  }
  return total;
}

namespace {

/// Truncated product of geometric series 1/(1 - x p^w) for the given
/// weights; returns the coefficient of x^order.
BigCount series_coefficient(std::uint64_t p, const std::vector<std::uint64_t>& weights,
                            int order) {
  std::vector<BigCount> acc(static_cast<std::size_t>(order) + 1);
  acc[0] = 1;
  for (const auto w : weights) {
    const BigCount step = pow_big(p, w);
    std::vector<BigCount> factor(acc.size());
    factor[0] = 1;
    for (std::size_t k = 1; k < factor.size(); ++k) factor[k] = factor[k - 1] * step;
    std::vector<BigCount> next(acc.size());
    for (std::size_t a = 0; a < acc.size(); ++a) {
      if (acc[a] == 0) continue;
      for (std::size_t b = 0; a + b < next.size(); ++b) {
        next[a + b] += acc[a] * factor[b];
      }
    }
    acc = std::move(next);
  }
  return acc.back();
}

}  // namespace

BigCount count_sampling_sets_series(std::uint64_t p, int m, int log_d) {
  check_count_args(p, m, log_d);
  std::vector<std::uint64_t> weights;
  std::uint64_t w = 1;
  for (int i = 0; i <= log_d; ++i) {
    weights.push_back(w);
    if (i < log_d) w *= p;
  }
  return series_coefficient(p, weights, m - log_d);
}

BigCount count_unitary_pairs_series(std::uint64_t p, int m, int log_d) {
  check_count_args(p, m, log_d);
  const std::uint64_t d = ipow(p, log_d);
  std::vector<std::uint64_t> weights;
  std::uint64_t w = 1;
  for (int i = 0; i <= log_d; ++i) {
    weights.push_back(w + d / w);
    if (i < log_d) w *= p;
  }
  return series_coefficient(p, weights, m - log_d);
}

namespace {

struct SubsetSignatures {
  /// value -> multiplicity, for masks over the proper divisors of n.
  std::map<std::uint64_t, std::uint64_t> difference_masks;
  std::map<std::uint64_t, std::uint64_t> zero_masks;
};

/// Sweeps all size-d subsets of Z_n once, recording for each its
/// pairwise-difference gcd classes and its exact zero-set divisors, both as
/// bitmasks indexed into divisors_proper(n).
SubsetSignatures sweep_subset_signatures(std::uint64_t n, std::size_t d,
                                         int jobs) {
  const auto divisors = divisors_proper(n);
  if (divisors.size() >= 64) throw BoundExceeded("too many divisor classes");
  std::vector<std::size_t> divisor_index(n + 1, divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    divisor_index[divisors[i]] = i;
  }

  const int workers = std::max(1, jobs);
  std::vector<SubsetSignatures> partial(static_cast<std::size_t>(workers));
  std::atomic<std::uint64_t> next_first{0};
  const std::uint64_t first_limit = n - d + 1;

  auto work = [&](SubsetSignatures& sink) {
    std::vector<std::uint64_t> pick(d);
    while (true) {
      const std::uint64_t first = next_first.fetch_add(1);
      if (first >= first_limit) return;
      pick[0] = first;
      // Odometer over the remaining d-1 elements from (first, n).
      std::vector<std::uint64_t> c(d - 1);
      for (std::size_t i = 0; i + 1 < d; ++i) c[i] = first + 1 + i;
      if (d > 1 && c.back() >= n) continue;
      while (true) {
        for (std::size_t i = 0; i + 1 < d; ++i) pick[i + 1] = c[i];

        std::uint64_t diff_mask = 0;
        for (std::size_t a = 0; a + 1 < d; ++a) {
          for (std::size_t b = a + 1; b < d; ++b) {
            diff_mask |= std::uint64_t{1}
                         << divisor_index[gcd_class(pick[b] - pick[a], n)];
          }
        }
        std::uint64_t zero_mask = 0;
        const Idempotent h{IndexSet(n, pick)};
        for (const auto k : h.zero_set_divisors().divisors) {
          zero_mask |= std::uint64_t{1} << divisor_index[k];
        }
        ++sink.difference_masks[diff_mask];
        ++sink.zero_masks[zero_mask];

        if (d == 1) break;
        std::size_t i = d - 1;
        bool advanced = false;
        while (i-- > 0) {
          if (c[i] < n - (d - 1 - i)) {
            ++c[i];
            for (std::size_t t = i + 1; t + 1 < d; ++t) c[t] = c[t - 1] + 1;
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
    }
  };

  if (workers == 1) {
    work(partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back(work, std::ref(partial[static_cast<std::size_t>(t)]));
    }
    for (auto& th : pool) th.join();
  }

  SubsetSignatures merged;
  for (const auto& part : partial) {
    for (const auto& [mask, cnt] : part.difference_masks) {
      merged.difference_masks[mask] += cnt;
    }
    for (const auto& [mask, cnt] : part.zero_masks) {
      merged.zero_masks[mask] += cnt;
    }
  }
  return merged;
}

BigCount combination_count(std::uint64_t n, std::size_t d) {
  return binomial(n, d);
}

}  // namespace

BigCount binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigCount result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

BigCount brute_force_count_sampling_sets(std::uint64_t n, std::size_t d,
                                         const BruteForceOptions& opts) {
  if (d == 0 || d > n) throw std::invalid_argument("subset size out of range");
  if (combination_count(n, d) > opts.max_work) {
    throw BoundExceeded("subset sweep exceeds the configured bound");
  }
  const auto sig = sweep_subset_signatures(n, d, opts.jobs);
  BigCount total = 0;
  for (const auto& [diff_mask, cnt] : sig.difference_masks) {
    bool has_superset = false;
    for (const auto& [zero_mask, zcnt] : sig.zero_masks) {
      if ((diff_mask & ~zero_mask) == 0 && zcnt > 0) {
        has_superset = true;
        break;
      }
    }
    if (has_superset) total += cnt;
  }
  return total;
}

BigCount brute_force_count_unitary_pairs(std::uint64_t n, std::size_t d,
                                         const BruteForceOptions& opts) {
  if (d == 0 || d > n) throw std::invalid_argument("subset size out of range");
  const BigCount subsets = combination_count(n, d);
  if (subsets * subsets > opts.max_work) {
    throw BoundExceeded("pair sweep exceeds the configured bound");
  }
  const auto sig = sweep_subset_signatures(n, d, opts.jobs);
  BigCount total = 0;
  for (const auto& [diff_mask, cnt] : sig.difference_masks) {
    for (const auto& [zero_mask, zcnt] : sig.zero_masks) {
      if ((diff_mask & ~zero_mask) == 0) {
        total += BigCount(cnt) * zcnt;
      }
    }
  }
  return total;
}

double big_log2(const BigCount& value) {
  if (value <= 0) throw std::invalid_argument("log of a nonpositive count");
  const auto bits = boost::multiprecision::msb(value);
  if (bits < 960) return std::log2(value.convert_to<double>());
  // Keep the leading 64 bits as a double mantissa and add the shift back.
  const unsigned shift = bits - 52;
  const BigCount top = value >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

std::vector<ThetaPhiRow> theta_phi_table(std::uint64_t p, int m) {
  if (p < 2 || m < 0) throw std::invalid_argument("theta_phi_table: bad arguments");
  const double log2p = std::log2(static_cast<double>(p));
  const double log_p_binom =
      big_log2(binomial(static_cast<std::uint64_t>(m),
                        static_cast<std::uint64_t>(m / 2))) /
      log2p;
  std::vector<ThetaPhiRow> rows;
  for (int log_d = 0; log_d <= m; ++log_d) {
    ThetaPhiRow row;
    row.log_d = log_d;
    row.count = count_sampling_sets(p, m, log_d);
    row.phi_count = count_unitary_pairs(p, m, log_d);
    const double d = static_cast<double>(ipow(p, log_d));
    row.theta = big_log2(row.count) / log2p / d;
    row.phi = big_log2(row.phi_count) / log2p / d;
    row.theta_bound = static_cast<double>(m - log_d) + log_p_binom;
    row.phi_bound = 2.0 * static_cast<double>(m - log_d) + log_p_binom;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string theta_phi_csv(const std::vector<ThetaPhiRow>& rows) {
  std::string out = "log_d,count,theta,phi_count,phi,theta_bound,phi_bound\n";
  char buf[128];
  for (const auto& row : rows) {
    out += std::to_string(row.log_d);
    out += ',';
    out += row.count.str();
    std::snprintf(buf, sizeof(buf), ",%.15g", row.theta);
    out += buf;
    out += ',';
    out += row.phi_count.str();
    std::snprintf(buf, sizeof(buf), ",%.15g,%.15g,%.15g", row.phi,
                  row.theta_bound, row.phi_bound);
    out += buf;
    out += '\n';
  }
  return out;
}

}  // namespace dftsub
