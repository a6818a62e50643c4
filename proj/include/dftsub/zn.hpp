#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dftsub {

/// Largest modulus accepted by default; trial-division factorization and the
/// dense element lists used throughout stay cheap below this.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 20;

using Digit = std::uint32_t;

/// A cyclic-group modulus together with its prime factorization.
struct Modulus {
  std::uint64_t n = 2;
  /// Ascending (prime, exponent) pairs with product n.
  std::vector<std::pair<std::uint64_t, int>> factors;

  /// Factorizes by trial division. Throws std::invalid_argument unless
  /// 2 <= n <= max_n.
  static Modulus of(std::uint64_t n, std::uint64_t max_n = kMaxModulus);

  bool is_prime_power() const { return factors.size() == 1; }
  bool is_prime() const { return is_prime_power() && factors[0].second == 1; }
  std::uint64_t prime() const;  // requires is_prime_power()
  int exponent() const;         // requires is_prime_power()
};

/// gcd(i mod n, n), with gcd_class(0, n) = n acting as the class of zero.
std::uint64_t gcd_class(std::uint64_t i, std::uint64_t n);

/// All divisors of n strictly below n, ascending (1 included, n excluded).
std::vector<std::uint64_t> divisors_proper(std::uint64_t n);

/// Euler totient of n (trial-division factorization).
std::uint64_t euler_phi(std::uint64_t n);

/// Mobius function of n; 0 when n has a squared prime factor.
int mobius(std::uint64_t n);

/// A subset of Z_n. Elements are kept sorted; duplicates and out-of-range
/// values are rejected at construction.
struct IndexSet {
  std::uint64_t n = 2;
  std::vector<std::uint64_t> elements;

  IndexSet() = default;
  IndexSet(std::uint64_t n, std::vector<std::uint64_t> elements);

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
  bool contains(std::uint64_t x) const;
};

/// "{0, 2, 8, 10} mod 16" rendering for messages.
std::string to_string(const IndexSet& s);

bool operator==(const IndexSet& a, const IndexSet& b);
bool operator!=(const IndexSet& a, const IndexSet& b);
/// Orders by modulus, then lexicographically by element list.
bool operator<(const IndexSet& a, const IndexSet& b);

/// { (x + t) mod n : x in s }.
IndexSet translate(const IndexSet& s, std::int64_t t);

/// { (-x) mod n : x in s }.
IndexSet negate(const IndexSet& s);

/// Orbit of s under translation and negation mod n, sorted and
/// duplicate-free. Its size divides 2n.
std::vector<IndexSet> bracelet(const IndexSet& s);

/// Base-p digits of z, least significant first, exactly m of them.
/// Throws std::out_of_range when z >= p^m.
std::vector<Digit> digits_base_p(std::uint64_t z, std::uint64_t p, int m);

/// Index of the least significant nonzero base-p digit of z, or nullopt for
/// z = 0. Requires z < p^m.
std::optional<int> first_nonzero_digit_index(std::uint64_t z, std::uint64_t p,
                                             int m);

/// A sorted set of divisors of n, each strictly below n. May be empty.
struct DivisorSet {
  std::uint64_t n = 2;
  std::vector<std::uint64_t> divisors;

  DivisorSet() = default;
  DivisorSet(std::uint64_t n, std::vector<std::uint64_t> divisors);

  std::size_t size() const { return divisors.size(); }
  bool contains(std::uint64_t d) const;
};

bool operator==(const DivisorSet& a, const DivisorSet& b);
bool operator!=(const DivisorSet& a, const DivisorSet& b);

/// Divisors of n below n that are not in d, ascending.
DivisorSet complement_divisors(const DivisorSet& d);

/// p^e by repeated multiplication; throws std::overflow_error past 2^63.
std::uint64_t ipow(std::uint64_t p, int e);

}  // namespace dftsub
