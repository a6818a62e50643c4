#include "dftsub/zn.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace dftsub {

Modulus Modulus::of(std::uint64_t n, std::uint64_t max_n) {
  if (n < 2 || n > max_n) {
    throw std::invalid_argument("modulus out of range: " + std::to_string(n));
  }
  Modulus m;
  m.n = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      m.factors.emplace_back(p, e);
    }
  }
  if (rest > 1) m.factors.emplace_back(rest, 1);
  return m;
}

std::uint64_t Modulus::prime() const {
  if (!is_prime_power()) throw std::logic_error("modulus is not a prime power");
  return factors[0].first;
}

int Modulus::exponent() const {
  if (!is_prime_power()) throw std::logic_error("modulus is not a prime power");
  return factors[0].second;
}

std::uint64_t gcd_class(std::uint64_t i, std::uint64_t n) {
  i %= n;
  return i == 0 ? n : std::gcd(i, n);
}

std::vector<std::uint64_t> divisors_proper(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a * a <= n; ++a) {
    if (n % a != 0) continue;
    if (a != n) out.push_back(a);
    std::uint64_t b = n / a;
    if (b != a && b != n) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      while (rest % p == 0) rest /= p;
      result -= result / p;
    }
  }
  if (rest > 1) result -= result / rest;
  return result;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      rest /= p;
      if (rest % p == 0) return 0;
      sign = -sign;
    }
  }
  if (rest > 1) sign = -sign;
  return sign;
}

IndexSet::IndexSet(std::uint64_t n_, std::vector<std::uint64_t> elements_)
    : n(n_), elements(std::move(elements_)) {
  if (n < 2) throw std::invalid_argument("index set modulus must be >= 2");
  std::sort(elements.begin(), elements.end());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (elements[k] >= n) {
      throw std::invalid_argument("index set element out of range: " +
                                  std::to_string(elements[k]));
    }
    if (k > 0 && elements[k] == elements[k - 1]) {
      throw std::invalid_argument("index set has duplicate element: " +
                                  std::to_string(elements[k]));
    }
  }
}

bool IndexSet::contains(std::uint64_t x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

std::string to_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(s.elements[k]);
  }
  out += "} mod " + std::to_string(s.n);
  return out;
}

bool operator==(const IndexSet& a, const IndexSet& b) {
  return a.n == b.n && a.elements == b.elements;
}

bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }

bool operator<(const IndexSet& a, const IndexSet& b) {
  if (a.n != b.n) return a.n < b.n;
  return a.elements < b.elements;
}

IndexSet translate(const IndexSet& s, std::int64_t t) {
  const auto n = static_cast<std::int64_t>(s.n);
  std::vector<std::uint64_t> out;
  out.reserve(s.size());
  for (auto x : s.elements) {
    std::int64_t y = (static_cast<std::int64_t>(x) + t) % n;
    if (y < 0) y += n;
    out.push_back(static_cast<std::uint64_t>(y));
  }
  return IndexSet(s.n, std::move(out));
}

IndexSet negate(const IndexSet& s) {
  std::vector<std::uint64_t> out;
  out.reserve(s.size());
  for (auto x : s.elements) {
    out.push_back(x == 0 ? 0 : s.n - x);
  }
  return IndexSet(s.n, std::move(out));
}

std::vector<IndexSet> bracelet(const IndexSet& s) {
  std::set<IndexSet> orbit;
  IndexSet neg = negate(s);
  for (std::uint64_t t = 0; t < s.n; ++t) {
    orbit.insert(translate(s, static_cast<std::int64_t>(t)));
    orbit.insert(translate(neg, static_cast<std::int64_t>(t)));
  }
  return {orbit.begin(), orbit.end()};
}

std::vector<Digit> digits_base_p(std::uint64_t z, std::uint64_t p, int m) {
  if (p < 2) throw std::invalid_argument("digit base must be >= 2");
  if (m < 0) throw std::invalid_argument("digit count must be >= 0");
  std::vector<Digit> digits(static_cast<std::size_t>(m), 0);
  for (int k = 0; k < m; ++k) {
    digits[static_cast<std::size_t>(k)] = static_cast<Digit>(z % p);
    z /= p;
  }
  if (z != 0) throw std::out_of_range("value does not fit in the digit table");
  return digits;
}

std::optional<int> first_nonzero_digit_index(std::uint64_t z, std::uint64_t p,
                                             int m) {
  if (z == 0) return std::nullopt;
  auto digits = digits_base_p(z, p, m);
  for (int k = 0; k < m; ++k) {
    if (digits[static_cast<std::size_t>(k)] != 0) return k;
  }
  return std::nullopt;  // unreachable: z != 0 has a nonzero digit
}

DivisorSet::DivisorSet(std::uint64_t n_, std::vector<std::uint64_t> divisors_)
    : n(n_), divisors(std::move(divisors_)) {
  if (n < 2) throw std::invalid_argument("divisor set modulus must be >= 2");
  std::sort(divisors.begin(), divisors.end());
  for (std::size_t k = 0; k < divisors.size(); ++k) {
    std::uint64_t d = divisors[k];
    if (d == 0 || d >= n || n % d != 0) {
      throw std::invalid_argument("not a proper divisor of the modulus: " +
                                  std::to_string(d));
    }
    if (k > 0 && d == divisors[k - 1]) {
      throw std::invalid_argument("divisor set has duplicate entry: " +
                                  std::to_string(d));
    }
  }
}

bool DivisorSet::contains(std::uint64_t d) const {
  return std::binary_search(divisors.begin(), divisors.end(), d);
}

bool operator==(const DivisorSet& a, const DivisorSet& b) {
  return a.n == b.n && a.divisors == b.divisors;
}

bool operator!=(const DivisorSet& a, const DivisorSet& b) { return !(a == b); }

DivisorSet complement_divisors(const DivisorSet& d) {
  std::vector<std::uint64_t> rest;
  for (auto k : divisors_proper(d.n)) {
    if (!d.contains(k)) rest.push_back(k);
  }
  return DivisorSet(d.n, std::move(rest));
}

std::uint64_t ipow(std::uint64_t p, int e) {
  std::uint64_t r = 1;
  for (int k = 0; k < e; ++k) {
    if (r > (std::uint64_t{1} << 63) / p) {
      throw std::overflow_error("integer power overflows 64 bits");
    }
    r *= p;
  }
  return r;
}

}  // namespace dftsub
