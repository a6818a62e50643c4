#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dftsub/zn.hpp"

using namespace dftsub;

namespace {

// Independent oracles, kept deliberately naive.

std::vector<std::uint64_t> oracle_divisors_proper(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

std::uint64_t oracle_phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) ++count;
  }
  return count;
}

bool oracle_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("modulus factorization") {
  auto m = Modulus::of(16);
  CHECK(m.is_prime_power());
  CHECK(!m.is_prime());
  CHECK(m.prime() == 2);
  CHECK(m.exponent() == 4);

  auto composite = Modulus::of(360);
  REQUIRE(composite.factors.size() == 3);
  CHECK(composite.factors[0] == std::pair<std::uint64_t, int>{2, 3});
  CHECK(composite.factors[1] == std::pair<std::uint64_t, int>{3, 2});
  CHECK(composite.factors[2] == std::pair<std::uint64_t, int>{5, 1});
  CHECK(!composite.is_prime_power());
  CHECK_THROWS_AS(composite.prime(), std::logic_error);

  CHECK(Modulus::of(17).is_prime());

  CHECK_THROWS_AS(Modulus::of(0), std::invalid_argument);
  CHECK_THROWS_AS(Modulus::of(1), std::invalid_argument);
  CHECK_THROWS_AS(Modulus::of(kMaxModulus + 1), std::invalid_argument);

  SUBCASE("factorization reproduces n with prime ascending factors") {
    for (std::uint64_t n = 2; n <= 500; ++n) {
      auto f = Modulus::of(n);
      std::uint64_t product = 1;
      std::uint64_t last_prime = 0;
      for (auto [p, e] : f.factors) {
        CHECK(oracle_is_prime(p));
        CHECK(p > last_prime);
        last_prime = p;
        for (int k = 0; k < e; ++k) product *= p;
      }
      CHECK(product == n);
    }
  }
}

TEST_CASE("gcd classes") {
  CHECK(gcd_class(12, 16) == 4);
  CHECK(gcd_class(0, 16) == 16);
  CHECK(gcd_class(5, 16) == 1);
  CHECK(gcd_class(21, 16) == 1);  // reduces mod n first

  for (std::uint64_t n : {6ull, 12ull, 16ull, 27ull, 30ull}) {
    for (std::uint64_t i = 1; i < n; ++i) {
      CHECK(gcd_class(i, n) == std::gcd(i, n));
    }
    CHECK(gcd_class(n, n) == n);
  }
}

TEST_CASE("proper divisors") {
  CHECK(divisors_proper(1).empty());
  CHECK(divisors_proper(7) == std::vector<std::uint64_t>{1});
  CHECK(divisors_proper(16) == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(divisors_proper(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6});

  for (std::uint64_t n = 1; n <= 400; ++n) {
    CHECK(divisors_proper(n) == oracle_divisors_proper(n));
  }
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(16) == 8);
  CHECK(euler_phi(30) == 8);

  for (std::uint64_t n = 1; n <= 300; ++n) {
    CHECK(euler_phi(n) == oracle_phi(n));
  }

  SUBCASE("multiplicative on coprime arguments") {
    for (std::uint64_t a = 2; a <= 30; ++a) {
      for (std::uint64_t b = 2; b <= 30; ++b) {
        if (std::gcd(a, b) != 1) continue;
        CHECK(euler_phi(a * b) == euler_phi(a) * euler_phi(b));
      }
    }
  }
}

TEST_CASE("mobius") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);

  // sum of mu over the divisors of n vanishes except at n = 1
  for (std::uint64_t n = 1; n <= 300; ++n) {
    int total = mobius(n);
    for (auto d : divisors_proper(n)) total += mobius(d);
    CHECK(total == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("index set construction and rendering") {
  IndexSet s(16, {10, 0, 2, 8});
  CHECK(s.elements == std::vector<std::uint64_t>{0, 2, 8, 10});  // sorted
  CHECK(s.size() == 4);
  CHECK(s.contains(8));
  CHECK(!s.contains(3));
  CHECK(to_string(s) == "{0, 2, 8, 10} mod 16");

  CHECK_THROWS_AS(IndexSet(16, {16}), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet(16, {3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet(1, {0}), std::invalid_argument);

  CHECK(IndexSet(8, {1, 2}) == IndexSet(8, {2, 1}));
  CHECK(IndexSet(8, {1}) != IndexSet(16, {1}));
  CHECK(IndexSet(8, {0, 1}) < IndexSet(8, {0, 2}));
  CHECK(IndexSet(8, {7}) < IndexSet(16, {0}));
}

TEST_CASE("translate and negate") {
  IndexSet s(12, {0, 1, 5});
  CHECK(translate(s, 3) == IndexSet(12, {3, 4, 8}));
  CHECK(translate(s, -1) == IndexSet(12, {0, 4, 11}));
  CHECK(translate(s, 12) == s);
  CHECK(translate(s, -25) == translate(s, 11));
  CHECK(negate(s) == IndexSet(12, {0, 7, 11}));
  CHECK(negate(negate(s)) == s);

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    std::uint64_t n = 2 + rng() % 40;
    std::vector<std::uint64_t> picked;
    for (std::uint64_t x = 0; x < n; ++x) {
      if (rng() % 2) picked.push_back(x);
    }
    if (picked.empty()) picked.push_back(rng() % n);
    IndexSet t(n, picked);
    auto shift = static_cast<std::int64_t>(rng() % (4 * n)) -
                 static_cast<std::int64_t>(2 * n);
    IndexSet shifted = translate(t, shift);
    CHECK(shifted.size() == t.size());
    for (auto x : t.elements) {
      auto y = (static_cast<std::int64_t>(x) + shift) % static_cast<std::int64_t>(n);
      if (y < 0) y += static_cast<std::int64_t>(n);
      CHECK(shifted.contains(static_cast<std::uint64_t>(y)));
    }
  }
}

TEST_CASE("bracelets") {
  IndexSet s(8, {0, 1, 3});
  auto orbit = bracelet(s);

  CHECK(std::find(orbit.begin(), orbit.end(), s) != orbit.end());
  CHECK(2 * s.n % orbit.size() == 0);
  CHECK(std::is_sorted(orbit.begin(), orbit.end()));
  CHECK(std::adjacent_find(orbit.begin(), orbit.end()) == orbit.end());

  // closed under both generators
  std::set<IndexSet> members(orbit.begin(), orbit.end());
  for (const auto& member : orbit) {
    CHECK(members.count(translate(member, 1)) == 1);
    CHECK(members.count(negate(member)) == 1);
  }

  // a symmetric set has a smaller orbit than a generic one
  auto symmetric = bracelet(IndexSet(8, {0, 4}));
  CHECK(symmetric.size() == 4);
}

TEST_CASE("base-p digits") {
  CHECK(digits_base_p(10, 2, 4) == std::vector<Digit>{0, 1, 0, 1});
  CHECK(digits_base_p(0, 3, 3) == std::vector<Digit>{0, 0, 0});
  CHECK(digits_base_p(26, 3, 3) == std::vector<Digit>{2, 2, 2});
  CHECK_THROWS_AS(digits_base_p(16, 2, 4), std::out_of_range);
  CHECK_THROWS_AS(digits_base_p(1, 1, 4), std::invalid_argument);

  SUBCASE("round trip") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
      const int m = 4;
      for (std::uint64_t z = 0; z < ipow(p, m); ++z) {
        auto digits = digits_base_p(z, p, m);
        std::uint64_t back = 0;
        std::uint64_t scale = 1;
        for (auto d : digits) {
          back += d * scale;
          scale *= p;
        }
        CHECK(back == z);
        CHECK(*std::max_element(digits.begin(), digits.end()) < p);
      }
    }
  }

  SUBCASE("first nonzero digit matches a direct scan") {
    CHECK(!first_nonzero_digit_index(0, 2, 4).has_value());
    for (std::uint64_t z = 1; z < 81; ++z) {
      auto digits = digits_base_p(z, 3, 4);
      int expected = 0;
      while (digits[static_cast<std::size_t>(expected)] == 0) ++expected;
      auto got = first_nonzero_digit_index(z, 3, 4);
      REQUIRE(got.has_value());
      CHECK(*got == expected);
    }
  }
}

TEST_CASE("divisor sets") {
  DivisorSet d(16, {8, 2});
  CHECK(d.divisors == std::vector<std::uint64_t>{2, 8});
  CHECK(d.contains(2));
  CHECK(!d.contains(4));

  CHECK_THROWS_AS(DivisorSet(16, {3}), std::invalid_argument);   // not a divisor
  CHECK_THROWS_AS(DivisorSet(16, {16}), std::invalid_argument);  // not proper
  CHECK_THROWS_AS(DivisorSet(16, {0}), std::invalid_argument);
  CHECK_THROWS_AS(DivisorSet(16, {2, 2}), std::invalid_argument);

  SUBCASE("complement partitions the proper divisors") {
    for (std::uint64_t n : {12ull, 16ull, 30ull, 36ull}) {
      auto all = divisors_proper(n);
      // every subset of the proper divisors, via bitmask
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size());
           ++mask) {
        std::vector<std::uint64_t> chosen;
        for (std::size_t k = 0; k < all.size(); ++k) {
          if (mask >> k & 1) chosen.push_back(all[k]);
        }
        DivisorSet subset(n, chosen);
        auto rest = complement_divisors(subset);
        CHECK(rest.size() + subset.size() == all.size());
        std::vector<std::uint64_t> merged = subset.divisors;
        merged.insert(merged.end(), rest.divisors.begin(), rest.divisors.end());
        std::sort(merged.begin(), merged.end());
        CHECK(merged == all);
      }
    }
  }
}

TEST_CASE("integer powers") {
  CHECK(ipow(2, 0) == 1);
  CHECK(ipow(2, 10) == 1024);
  CHECK(ipow(3, 4) == 81);
  CHECK(ipow(2, 62) == std::uint64_t{1} << 62);
  CHECK_THROWS_AS(ipow(2, 64), std::overflow_error);
}
