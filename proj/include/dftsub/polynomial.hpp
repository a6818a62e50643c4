#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "dftsub/zn.hpp"

namespace dftsub {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial over Z, stored constant term first with trailing zeros
/// trimmed; the empty coefficient list is the zero polynomial.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial one();
  /// scale * x^k.
  static IntPolynomial monomial(std::size_t k, BigInt scale = 1);
  /// x^s - 1.
  static IntPolynomial x_pow_minus_one(std::size_t s);
  /// Indicator polynomial sum of x^j over j in the set.
  static IntPolynomial from_index_set(const IndexSet& j);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k (zero beyond the degree).
  const BigInt& coeff(std::size_t k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b);

  /// Exact quotient when divisor divides *this in Z[x], nullopt otherwise.
  /// Throws std::invalid_argument on division by zero.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;
  bool divisible_by(const IntPolynomial& divisor) const;

 private:
  std::vector<BigInt> coeffs_;
  void trim();
};

/// s-th cyclotomic polynomial, by iterated exact division of x^s - 1 by the
/// lower cyclotomics. Memoized; safe to call concurrently.
const IntPolynomial& cyclotomic(std::uint64_t s);

}  // namespace dftsub
