#include "dftsub/idempotent.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dftsub/errors.hpp"

namespace dftsub {

struct Idempotent::Cache {
  std::once_flag once;
  DivisorSet divisors;
};

Idempotent::Idempotent(IndexSet support)
    : support_(std::move(support)), cache_(std::make_shared<Cache>()) {
  if (support_.empty()) {
    throw std::invalid_argument("idempotent support must be nonempty");
  }
}

double Idempotent::value_at_zero() const {
  return static_cast<double>(support_.size()) / static_cast<double>(support_.n);
}

std::complex<double> Idempotent::eval_numeric(std::int64_t m) const {
  const auto n = static_cast<std::int64_t>(support_.n);
  std::int64_t mm = m % n;
  if (mm < 0) mm += n;
  std::complex<double> acc(0.0, 0.0);
  for (auto j : support_.elements) {
    auto arg = static_cast<double>((static_cast<std::uint64_t>(mm) * j) %
                                   support_.n);
    acc += std::polar(1.0, 2.0 * std::numbers::pi * arg /
                               static_cast<double>(support_.n));
  }
  return acc / static_cast<double>(support_.n);
}

const DivisorSet& Idempotent::zero_set_divisors() const {
  std::call_once(cache_->once, [this] {
    const std::uint64_t n = support_.n;
    IntPolynomial p_j = IntPolynomial::from_index_set(support_);
    std::vector<std::uint64_t> hit;
    for (auto k : divisors_proper(n)) {
      if (p_j.divisible_by(cyclotomic(n / k))) hit.push_back(k);
    }
    cache_->divisors = DivisorSet(n, std::move(hit));
  });
  return cache_->divisors;
}

IndexSet Idempotent::zero_set() const {
  const auto& d = zero_set_divisors();
  std::vector<std::uint64_t> z;
  for (std::uint64_t i = 1; i < support_.n; ++i) {
    if (d.contains(gcd_class(i, support_.n))) {
      z.push_back(static_cast<std::uint64_t>(i));
    }
  }
  return IndexSet(support_.n, std::move(z));
}

bool Idempotent::vanishes_at(std::int64_t m) const {
  const auto n = static_cast<std::int64_t>(support_.n);
  std::int64_t mm = m % n;
  if (mm < 0) mm += n;
  if (mm == 0) return false;  // h(0) = |J|/N > 0
  return zero_set_divisors().contains(
      gcd_class(static_cast<std::uint64_t>(mm), support_.n));
}

std::int64_t ramanujan_sum(std::uint64_t q, std::int64_t k) {
  if (q == 0) throw std::invalid_argument("ramanujan_sum needs q >= 1");
  const auto qi = static_cast<std::int64_t>(q);
  std::int64_t kk = k % qi;
  if (kk < 0) kk += qi;
  std::uint64_t g = kk == 0 ? q : std::gcd(static_cast<std::uint64_t>(kk), q);
  std::uint64_t q_over_g = q / g;
  int mu = mobius(q_over_g);
  if (mu == 0) return 0;
  return mu * static_cast<std::int64_t>(euler_phi(q) / euler_phi(q_over_g));
}

std::optional<DivisorSet> divisor_set_from_zero_set(const IndexSet& z) {
  const std::uint64_t n = z.n;
  std::vector<std::uint64_t> classes;
  for (auto i : z.elements) {
    if (i == 0) return std::nullopt;
    std::uint64_t k = gcd_class(i, n);
    if (!std::binary_search(classes.begin(), classes.end(), k)) {
      classes.insert(std::upper_bound(classes.begin(), classes.end(), k), k);
    }
  }
  DivisorSet d(n, classes);
  for (std::uint64_t i = 1; i < n; ++i) {
    if (d.contains(gcd_class(i, n)) != z.contains(static_cast<std::uint64_t>(i))) {
      return std::nullopt;
    }
  }
  return d;
}

namespace {

// Minimal prescribed-zero-set solution on Z_(p^M): one free base-p digit at
// column M - l - 1 for each requested divisor p^l.
IndexSet constructive_solution(const DivisorSet& target, const Modulus& mod) {
  const std::uint64_t p = mod.prime();
  const int m = mod.exponent();
  std::vector<int> levels;
  for (auto d : target.divisors) {
    int l = 0;
    std::uint64_t v = d;
    while (v % p == 0) {
      v /= p;
      ++l;
    }
    if (v != 1) throw std::logic_error("divisor of a prime power must be a prime power");
    levels.push_back(l);
  }
  std::vector<std::uint64_t> elems;
  const std::uint64_t count = ipow(p, static_cast<int>(levels.size()));
  elems.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) {
    std::uint64_t x = 0;
    std::uint64_t rest = t;
    for (int l : levels) {
      x += (rest % p) * ipow(p, m - l - 1);
      rest /= p;
    }
    elems.push_back(static_cast<std::uint64_t>(x));
  }
  return IndexSet(target.n, std::move(elems));
}

// Walks k-element subsets of [1, n) joined with {0}, lexicographically.
template <typename Fn>
bool for_each_zero_anchored_subset(std::uint64_t n, std::uint64_t size, Fn&& fn) {
  if (size == 0) return false;
  std::vector<std::uint64_t> pick(size);
  pick[0] = 0;
  // Positions 1..size-1 range over [1, n).
  std::uint64_t k = size - 1;
  std::vector<std::uint64_t> c(k);
  for (std::uint64_t i = 0; i < k; ++i) c[i] = i + 1;
  while (true) {
    for (std::uint64_t i = 0; i < k; ++i) pick[i + 1] = c[i];
    if (fn(pick)) return true;
    if (k == 0) return false;
    std::uint64_t i = k;
    while (i-- > 0) {
      if (c[i] < n - (k - i)) {
        ++c[i];
        for (std::uint64_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        break;
      }
      if (i == 0) return false;
    }
  }
}

}  // namespace

std::optional<IndexSet> prescribe_zero_set(const DivisorSet& target,
                                           PrescribeMode mode,
                                           std::uint64_t max_subsets) {
  const std::uint64_t n = target.n;
  Modulus mod = Modulus::of(n);

  if (mode == PrescribeMode::kConstructive) {
    if (!mod.is_prime_power()) {
      throw std::invalid_argument(
          "constructive prescription requires a prime-power modulus");
    }
    return constructive_solution(target, mod);
  }

  if (n > 64 || (n >= 2 && (std::uint64_t{1} << (n - 1)) > max_subsets)) {
    throw BoundExceeded("exhaustive zero-set search over Z_" + std::to_string(n) +
                        " exceeds the subset bound");
  }

  // A solution translated by -min(J) is lexicographically no larger and still
  // a solution, so the first hit in (size, lex) order contains 0.
  for (std::uint64_t size = 1; size <= n; ++size) {
    std::optional<IndexSet> found;
    for_each_zero_anchored_subset(
        static_cast<std::uint64_t>(n), size, [&](const std::vector<std::uint64_t>& pick) {
          Idempotent h(IndexSet(n, pick));
          if (h.zero_set_divisors() == target) {
            found = h.support();
            return true;
          }
          return false;
        });
    if (found) return found;
  }
  return std::nullopt;
}

bool is_block_concatenation_form(const IndexSet& j, std::uint64_t p, int m,
                                 const std::vector<int>& marks) {
  const std::uint64_t n = ipow(p, m);
  if (j.n != n) throw std::invalid_argument("modulus is not p^m");
  for (int l : marks) {
    if (l < 0 || l >= m) throw std::invalid_argument("mark column out of range");
  }
  const std::uint64_t block = ipow(p, static_cast<int>(marks.size()));
  if (j.size() % block != 0) return false;

  // Dual marked columns; a block is valid iff it has p^|marks| rows and every
  // pairwise difference has its first nonzero digit in a dual column.
  std::vector<bool> dual(static_cast<std::size_t>(m), false);
  for (int l : marks) dual[static_cast<std::size_t>(m - 1 - l)] = true;

  const auto& v = j.elements;
  const std::size_t count = v.size();
  auto compatible = [&](std::size_t a, std::size_t b) {
    std::uint64_t diff = (n + v[a] - v[b]) % n;
    auto idx = first_nonzero_digit_index(diff, p, m);
    return idx && dual[static_cast<std::size_t>(*idx)];
  };

  std::vector<bool> used(count, false);

  // Partition search: the smallest unused row anchors its block; extend with
  // pairwise-compatible rows in ascending order.
  auto solve = [&](auto&& self, std::size_t assigned) -> bool {
    if (assigned == count) return true;
    std::size_t anchor = 0;
    while (used[anchor]) ++anchor;
    used[anchor] = true;
    std::vector<std::size_t> group{anchor};
    auto extend = [&](auto&& ext, std::size_t from) -> bool {
      if (group.size() == block) return self(self, assigned + block);
      for (std::size_t cand = from; cand < count; ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (auto g : group) {
          if (!compatible(cand, g)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        used[cand] = true;
        group.push_back(cand);
        if (ext(ext, cand + 1)) return true;
        group.pop_back();
        used[cand] = false;
      }
      return false;
    };
    if (extend(extend, anchor + 1)) return true;
    used[anchor] = false;
    return false;
  };
  return solve(solve, 0);
}

}  // namespace dftsub
