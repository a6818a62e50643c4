#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "dftsub/errors.hpp"
#include "dftsub/idempotent.hpp"
#include "dftsub/tiling.hpp"

using namespace dftsub;

namespace {

template <typename Fn>
void for_each_subset_of_size(std::uint64_t n, std::size_t d, Fn&& fn) {
  std::vector<std::uint64_t> pick(d);
  auto rec = [&](auto&& self, std::size_t k, std::uint64_t from) -> void {
    if (k == d) {
      fn(IndexSet(n, pick));
      return;
    }
    for (std::uint64_t x = from; x < n; ++x) {
      pick[k] = x;
      self(self, k + 1, x + 1);
    }
  };
  rec(rec, 0, 0);
}

// Cover-count oracle written independently of the library's convolution.
bool oracle_tiles(const IndexSet& j, const IndexSet& k) {
  if (j.n != k.n) return false;
  std::vector<int> cover(j.n, 0);
  for (auto a : j.elements) {
    for (auto b : k.elements) {
      ++cover[(a + b) % j.n];
    }
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

}  // namespace

TEST_CASE("tiling verdicts") {
  CHECK(tiles(IndexSet(16, {0, 1, 4, 5}), IndexSet(16, {0, 2, 8, 10})));
  CHECK(tiles(IndexSet(16, {0, 2, 8, 10}), IndexSet(16, {0, 1, 4, 5})));
  CHECK(tiles(IndexSet(6, {0, 1, 2}), IndexSet(6, {0, 3})));
  CHECK(!tiles(IndexSet(6, {0, 1, 2}), IndexSet(6, {0, 2})));   // double covers
  CHECK(!tiles(IndexSet(6, {0, 1}), IndexSet(6, {0, 2})));      // wrong sizes
  CHECK(tiles(IndexSet(4, {0, 1, 2, 3}), IndexSet(4, {0})));

  CHECK_THROWS_AS(tiles(IndexSet(6, {0}), IndexSet(8, {0})), std::invalid_argument);

  SUBCASE("matches the cover-count oracle exhaustively on Z_8") {
    for (std::size_t d : {1, 2, 4}) {
      for_each_subset_of_size(8, d, [&](const IndexSet& j) {
        for_each_subset_of_size(8, 8 / d, [&](const IndexSet& k) {
          CHECK(tiles(j, k) == oracle_tiles(j, k));
        });
      });
    }
  }

  SUBCASE("translation invariance") {
    IndexSet j(12, {0, 4, 8});
    IndexSet k(12, {0, 1, 2, 3});
    REQUIRE(tiles(j, k));
    for (std::int64_t t = 0; t < 12; ++t) {
      CHECK(tiles(translate(j, t), k));
      CHECK(tiles(j, translate(k, t)));
    }
  }
}

TEST_CASE("exhaustive complement search") {
  auto k = search_tiling_complement(IndexSet(16, {0, 1, 4, 5}));
  REQUIRE(k.has_value());
  CHECK(*k == IndexSet(16, {0, 2, 8, 10}));
  CHECK(tiles(IndexSet(16, {0, 1, 4, 5}), *k));

  CHECK(!search_tiling_complement(IndexSet(8, {0, 1, 5, 6})).has_value());
  CHECK(!search_tiling_complement(IndexSet(8, {0, 1, 2})).has_value());  // 3 does not divide 8

  // the whole group is tiled by the zero singleton
  std::vector<std::uint64_t> all(6);
  std::iota(all.begin(), all.end(), 0);
  CHECK(*search_tiling_complement(IndexSet(6, all)) == IndexSet(6, {0}));

  SUBCASE("first hit in lexicographic order") {
    for_each_subset_of_size(12, 4, [&](const IndexSet& j) {
      auto got = search_tiling_complement(j);
      std::optional<IndexSet> expected;
      for_each_subset_of_size(12, 3, [&](const IndexSet& cand) {
        if (!expected && oracle_tiles(j, cand)) expected = cand;
      });
      CHECK(got == expected);
    });
  }

  SUBCASE("node budget") {
    CHECK_THROWS_AS(search_tiling_complement(IndexSet(144, {0, 1, 2}), 2),
                    BoundExceeded);
  }
}

TEST_CASE("structural complements on prime powers") {
  auto k = find_tiling_complement(IndexSet(16, {0, 1, 4, 5}));
  REQUIRE(k.has_value());
  CHECK(tiles(IndexSet(16, {0, 1, 4, 5}), *k));

  SUBCASE("existence agrees with the exhaustive search") {
    struct Sweep {
      std::uint64_t n;
      std::size_t d;
    };
    for (auto [n, d] : {Sweep{8, 2}, Sweep{8, 4}, Sweep{9, 3}, Sweep{16, 2},
                        Sweep{16, 4}}) {
      for_each_subset_of_size(n, d, [&](const IndexSet& j) {
        auto structural = find_tiling_complement(j);
        auto searched = search_tiling_complement(j);
        CHECK(structural.has_value() == searched.has_value());
        if (structural) CHECK(tiles(j, *structural));
      });
    }
  }

  SUBCASE("non-prime-power moduli fall back to the search") {
    auto complement = find_tiling_complement(IndexSet(12, {0, 4, 8}));
    REQUIRE(complement.has_value());
    CHECK(tiles(IndexSet(12, {0, 4, 8}), *complement));
  }
}

TEST_CASE("sampling-set and tiling verdicts side by side") {
  auto bad = fuglede_check(IndexSet(8, {0, 1, 5, 6}));
  CHECK(!bad.has_sampling_set);
  CHECK(!bad.tiles);
  CHECK(bad.agree());
  CHECK(bad.in_theorem_scope);
  CHECK(!bad.sampling_set.has_value());
  CHECK(!bad.tiling_complement.has_value());

  auto good = fuglede_check(IndexSet(16, {0, 1, 4, 5}));
  CHECK(good.has_sampling_set);
  CHECK(good.tiles);
  CHECK(good.agree());
  REQUIRE(good.sampling_set.has_value());
  REQUIRE(good.tiling_complement.has_value());
  CHECK(tiles(good.j, *good.tiling_complement));

  auto composite = fuglede_check(IndexSet(6, {0, 1, 2}));
  CHECK(!composite.in_theorem_scope);
  CHECK(composite.has_sampling_set);
  CHECK(composite.tiles);

  SUBCASE("verdicts agree for every small prime-power support") {
    for (std::uint64_t n : {8ull, 9ull}) {
      for (std::size_t d = 1; d <= n / 2; ++d) {
        for_each_subset_of_size(n, d, [&](const IndexSet& j) {
          auto report = fuglede_check(j);
          CHECK(report.agree());
          CHECK(report.in_theorem_scope);
        });
      }
    }
  }
}
