#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dftsub/errors.hpp"
#include "dftsub/graph.hpp"
#include "dftsub/idempotent.hpp"

using namespace dftsub;

namespace {

DivisorSet random_divisor_set(std::mt19937_64& rng, std::uint64_t n) {
  std::vector<std::uint64_t> chosen;
  for (auto d : divisors_proper(n)) {
    if (rng() % 2) chosen.push_back(d);
  }
  return DivisorSet(n, chosen);
}

// Plain recursive maximum clique, no bounding tricks.
std::size_t oracle_max_clique(const DifferenceGraph& g) {
  const auto n = g.order();
  std::size_t best = 0;
  std::vector<std::uint64_t> clique;
  auto rec = [&](auto&& self, std::uint64_t from) -> void {
    best = std::max(best, clique.size());
    for (std::uint64_t v = from; v < n; ++v) {
      bool ok = true;
      for (auto u : clique) {
        if (!g.adjacent(u, v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      clique.push_back(v);
      self(self, v + 1);
      clique.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

bool is_clique(const DifferenceGraph& g, const IndexSet& s) {
  for (std::size_t a = 0; a + 1 < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (!g.adjacent(s.elements[a], s.elements[b])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("difference graph adjacency") {
  DifferenceGraph g(12, DivisorSet(12, {1, 3}));
  for (std::uint64_t u = 0; u < 12; ++u) {
    CHECK(!g.adjacent(u, u));
    for (std::uint64_t v = 0; v < 12; ++v) {
      if (u == v) continue;
      bool expected = gcd_class(u - v + 12, 12) == 1 || gcd_class(u - v + 12, 12) == 3;
      CHECK(g.adjacent(u, v) == expected);
      CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
  }

  CHECK_THROWS_AS(DifferenceGraph(2048, DivisorSet(2048, {1})), std::invalid_argument);

  SUBCASE("degree is the totient sum over the chosen classes") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      std::uint64_t n = 4 + rng() % 60;
      auto d = random_divisor_set(rng, n);
      DifferenceGraph graph(n, d);
      std::uint64_t expected = 0;
      for (auto k : d.divisors) expected += euler_phi(n / k);
      CHECK(graph.degree() == expected);
      CHECK(graph.edge_count() == n * expected / 2);

      // vertex-transitivity: every row has the same population
      for (std::uint64_t v = 0; v < n; ++v) {
        std::size_t row_degree = 0;
        for (std::uint64_t u = 0; u < n; ++u) {
          if (graph.adjacent(v, u)) ++row_degree;
        }
        CHECK(row_degree == expected);
      }
    }
  }
}

TEST_CASE("complement graph") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    std::uint64_t n = 4 + rng() % 40;
    auto d = random_divisor_set(rng, n);
    DifferenceGraph g(n, d);
    DifferenceGraph co = complement_graph(g);
    CHECK(co.classes() == complement_divisors(d));
    for (std::uint64_t u = 0; u < n; ++u) {
      for (std::uint64_t v = 0; v < n; ++v) {
        if (u == v) {
          CHECK(!co.adjacent(u, v));
        } else {
          CHECK(co.adjacent(u, v) == !g.adjacent(u, v));
        }
      }
    }
  }
}

TEST_CASE("maximum cliques") {
  // reference 6-clique instance
  DifferenceGraph g20(20, DivisorSet(20, {1, 4, 10}));
  auto best = max_clique(g20);
  CHECK(best.size() == 6);
  CHECK(is_clique(g20, best));

  SUBCASE("matches a plain exhaustive search") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      std::uint64_t n = 4 + rng() % 20;
      DifferenceGraph g(n, random_divisor_set(rng, n));
      auto got = max_clique(g);
      CHECK(is_clique(g, got));
      CHECK(got.size() == oracle_max_clique(g));
    }
  }

  SUBCASE("prime-power construction equals the generic search") {
    for (std::uint64_t n : {8ull, 9ull, 16ull, 27ull}) {
      auto all = divisors_proper(n);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size());
           ++mask) {
        std::vector<std::uint64_t> chosen;
        for (std::size_t k = 0; k < all.size(); ++k) {
          if (mask >> k & 1) chosen.push_back(all[k]);
        }
        DifferenceGraph g(n, DivisorSet(n, chosen));
        auto constructed = max_clique(g);
        auto searched = max_clique_search(g);
        CHECK(is_clique(g, constructed));
        CHECK(is_clique(g, searched));
        CHECK(constructed.size() == searched.size());
        CHECK(constructed.size() ==
              ipow(Modulus::of(n).prime(), static_cast<int>(chosen.size())));
      }
    }
  }

  SUBCASE("early stop returns a clique of the requested size") {
    auto stopped = max_clique(g20, 4);
    CHECK(stopped.size() >= 4);
    CHECK(is_clique(g20, stopped));
  }
}

TEST_CASE("odd holes") {
  DifferenceGraph g72(72, DivisorSet(72, {1, 3, 4, 12}));

  auto hole = find_odd_hole(g72);
  REQUIRE(hole.has_value());
  CHECK(hole->size() >= 5);
  CHECK(hole->size() % 2 == 1);
  CHECK(is_odd_hole(g72, *hole));

  // reference 5-cycle through 1, 4, 3, 31, 12
  CHECK(is_odd_hole(g72, {1, 4, 3, 31, 12}));

  SUBCASE("checker rejects near misses") {
    CHECK(!is_odd_hole(g72, {1, 4, 3, 31}));            // even length
    CHECK(!is_odd_hole(g72, {1, 4, 3}));                // too short
    CHECK(!is_odd_hole(g72, {1, 4, 3, 31, 31}));        // repeated vertex
    CHECK(!is_odd_hole(g72, {1, 4, 3, 31, 13}));        // 13-1 breaks the cycle
    // a chorded odd cycle: 0-1-2-...-? any clique triangle extension fails
    CHECK(!is_odd_hole(g72, {0, 1, 2, 3, 4}));          // chords everywhere
  }

  SUBCASE("prime-power graphs are clean") {
    for (std::uint64_t n : {8ull, 9ull, 16ull, 25ull, 27ull}) {
      auto all = divisors_proper(n);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size());
           ++mask) {
        std::vector<std::uint64_t> chosen;
        for (std::size_t k = 0; k < all.size(); ++k) {
          if (mask >> k & 1) chosen.push_back(all[k]);
        }
        DifferenceGraph g(n, DivisorSet(n, chosen));
        auto report = berge_certify(g, 9);
        CHECK(report.clean());
      }
    }
  }

  SUBCASE("berge report carries the verified holes") {
    auto report = berge_certify(g72, 5);
    CHECK(!report.clean());
    REQUIRE(report.hole.has_value());
    CHECK(is_odd_hole(g72, *report.hole));
    if (report.complement_hole) {
      CHECK(is_odd_hole(complement_graph(g72), *report.complement_hole));
    }
  }
}

TEST_CASE("divisibility scans") {
  auto report = divisibility_scan(8);
  CHECK(report.n == 8);
  CHECK(report.entries.size() == 8);  // one per subset of {1, 2, 4}
  CHECK(report.violations.empty());

  for (const auto& entry : report.entries) {
    if (entry.realizable) {
      REQUIRE(entry.witness.has_value());
      CHECK(Idempotent{*entry.witness}.zero_set_divisors() == entry.divisors);
      CHECK(entry.witness->contains(0));
    } else {
      CHECK(!entry.witness.has_value());
    }
    DifferenceGraph g(8, entry.divisors);
    CHECK(entry.clique_size == max_clique(g).size());
    CHECK(entry.clique_size_divides_n == (8 % entry.clique_size == 0));
  }

  SUBCASE("no violations on small moduli") {
    for (std::uint64_t n = 2; n <= 14; ++n) {
      CHECK(divisibility_scan(n).violations.empty());
    }
  }

  SUBCASE("size filter and subset bound") {
    auto limited = divisibility_scan(8, 2);
    for (const auto& entry : limited.entries) {
      if (entry.witness) CHECK(entry.witness->size() <= 2);
    }
    CHECK_THROWS_AS(divisibility_scan(30, 0, 1 << 10), BoundExceeded);
  }
}

TEST_CASE("dot export") {
  DifferenceGraph g(6, DivisorSet(6, {1}));
  auto dot = export_dot(g);
  CHECK(dot.find("graph difference_graph {") == 0);
  for (std::uint64_t v = 0; v < 6; ++v) {
    CHECK(dot.find("\n  " + std::to_string(v) + " [pos=") != std::string::npos);
  }
  // undirected edge lines use --
  std::size_t edges = 0;
  for (std::size_t at = dot.find(" -- "); at != std::string::npos;
       at = dot.find(" -- ", at + 1)) {
    ++edges;
  }
  CHECK(edges == g.edge_count());
  CHECK(export_dot(g) == dot);  // deterministic
}
