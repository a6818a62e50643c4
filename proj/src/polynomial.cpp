#include "dftsub/polynomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dftsub {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::one() { return IntPolynomial({BigInt(1)}); }

IntPolynomial IntPolynomial::monomial(std::size_t k, BigInt scale) {
  std::vector<BigInt> c(k + 1, BigInt(0));
  c[k] = std::move(scale);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t s) {
  std::vector<BigInt> c(s + 1, BigInt(0));
  c[0] = -1;
  c[s] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::from_index_set(const IndexSet& j) {
  std::vector<BigInt> c;
  if (!j.elements.empty()) {
    c.assign(static_cast<std::size_t>(j.elements.back()) + 1, BigInt(0));
    for (auto e : j.elements) c[e] = 1;
  }
  return IntPolynomial(std::move(c));
}

const BigInt& IntPolynomial::coeff(std::size_t k) const {
  static const BigInt kZero(0);
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] -= b.coeffs_[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(c));
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
  return a.coeffs_ == b.coeffs_;
}

bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
  return !(a == b);
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(
    const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  if (is_zero()) return IntPolynomial();
  if (degree() < divisor.degree()) return std::nullopt;

  // Long division; every quotient coefficient must be integral, which for a
  // Z[x]-divisible dividend is exactly what happens.
  std::vector<BigInt> rem = coeffs_;
  const auto dd = static_cast<std::size_t>(divisor.degree());
  const BigInt& lead = divisor.coeffs_[dd];
  std::vector<BigInt> quot(rem.size() - dd, BigInt(0));
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    if (rem[k] % lead != 0) return std::nullopt;
    BigInt q = rem[k] / lead;
    quot[k - dd] = q;
    for (std::size_t i = 0; i <= dd; ++i) {
      rem[k - dd + i] -= q * divisor.coeffs_[i];
    }
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

bool IntPolynomial::divisible_by(const IntPolynomial& divisor) const {
  return divide_exact(divisor).has_value();
}

const IntPolynomial& cyclotomic(std::uint64_t s) {
  if (s == 0) throw std::invalid_argument("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<std::uint64_t, IntPolynomial> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto hit = memo.find(s);
  if (hit != memo.end()) return hit->second;

  // Fill the memo bottom-up over the divisors of s so each step divides
  // x^d - 1 by already-computed lower cyclotomics.
  auto divisors = divisors_proper(s);
  divisors.push_back(s);
  for (auto d : divisors) {
    if (memo.count(d)) continue;
    IntPolynomial phi = IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(d));
    for (auto e : divisors_proper(d)) {
      auto q = phi.divide_exact(memo.at(e));
      if (!q) throw std::logic_error("cyclotomic division failed");
      phi = std::move(*q);
    }
    memo.emplace(d, std::move(phi));
  }
  return memo.at(s);
}

}  // namespace dftsub
