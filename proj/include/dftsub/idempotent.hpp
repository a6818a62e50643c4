#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dftsub/polynomial.hpp"
#include "dftsub/zn.hpp"

namespace dftsub {

/// Convolution idempotent h = F^{-1} 1_J on Z_N, represented by its
/// frequency support J (nonempty). Value objects share a lazily computed
/// zero-set-divisor cache, so copies are cheap and thread-safe.
class Idempotent {
 public:
  explicit Idempotent(IndexSet support);

  const IndexSet& support() const { return support_; }
  std::uint64_t modulus() const { return support_.n; }

  /// h(0) = |J|/N, the maximum of |h|.
  double value_at_zero() const;

  /// Floating-point evaluation (1/N) sum_j e^{2 pi i m j / N}.
  std::complex<double> eval_numeric(std::int64_t m) const;

  /// Divisors k < N with h vanishing on the whole class {i : gcd(i,N)=k}.
  /// Decided exactly: k is included iff the (N/k)-th cyclotomic polynomial
  /// divides the support indicator polynomial over Z.
  const DivisorSet& zero_set_divisors() const;

  /// All residues where h vanishes: union of the divisor classes above.
  /// Never contains 0.
  IndexSet zero_set() const;

  /// Exact pointwise test via the divisor classes.
  bool vanishes_at(std::int64_t m) const;

 private:
  IndexSet support_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Ramanujan sum c_q(k): sum of e^{2 pi i n k / q} over n coprime to q.
/// Closed form mobius(q/g) * phi(q) / phi(q/g) with g = gcd(k, q).
std::int64_t ramanujan_sum(std::uint64_t q, std::int64_t k);

/// Expresses a zero set as a union of gcd classes: the divisor set D with
/// union of classes A_n(k), k in D, equal to z exactly; nullopt when z is
/// not such a union (or contains 0).
std::optional<DivisorSet> divisor_set_from_zero_set(const IndexSet& z);

enum class PrescribeMode {
  /// Prime-power modulus: digit-placement construction, minimal support.
  kConstructive,
  /// Any modulus: scan supports in size order, lexicographic within a size.
  kExhaustive,
};

inline constexpr std::uint64_t kDefaultSubsetBound = std::uint64_t{1} << 24;

/// Finds a support J whose idempotent has zero-set divisors exactly target.
/// Constructive mode places one base-p digit per requested divisor, giving
/// the minimal solution {sum_k i_k p^(M-l_k-1)}; it requires a prime-power
/// modulus. Exhaustive mode returns the smallest solution (size first, then
/// lexicographic), or nullopt when none exists; it throws BoundExceeded when
/// 2^(N-1) exceeds max_subsets.
std::optional<IndexSet> prescribe_zero_set(
    const DivisorSet& target, PrescribeMode mode = PrescribeMode::kConstructive,
    std::uint64_t max_subsets = kDefaultSubsetBound);

/// True iff the digit rows of j can be partitioned into blocks of p^|L| rows,
/// each a valid digit-table whose marked columns are the dual markings of L.
/// This is the shape of every solution to the prescribed-zero-set problem for
/// the divisor set p^L on Z_(p^M).
bool is_block_concatenation_form(const IndexSet& j, std::uint64_t p, int m,
                                 const std::vector<int>& marks);

}  // namespace dftsub
