#include "dftsub/tiling.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dftsub/errors.hpp"
#include "dftsub/idempotent.hpp"
#include "dftsub/sampling.hpp"

namespace dftsub {

bool tiles(const IndexSet& tile, const IndexSet& translates) {
  if (tile.n != translates.n) {
    throw std::invalid_argument("tiles: mismatched moduli");
  }
  const auto n = tile.n;
  if (tile.size() * translates.size() != n) return false;
  std::vector<int> cover(n, 0);
  for (const auto j : tile.elements) {
    for (const auto k : translates.elements) {
      if (++cover[(j + k) % n] > 1) return false;
    }
  }
  return true;  // n hits, none doubled, so every residue is covered once
}

std::optional<IndexSet> search_tiling_complement(const IndexSet& j,
                                                 std::uint64_t max_nodes) {
  const auto n = j.n;
  if (j.empty()) return std::nullopt;
  if (n % j.size() != 0) return std::nullopt;
  const std::size_t k_size = n / j.size();
  if (k_size == 1) {
    // Any complement is a translate of {0}; tiles(J, {0}) iff J = Z_n.
    return j.size() == n ? std::optional<IndexSet>(IndexSet(n, {0}))
                         : std::nullopt;
  }

  // Any tiling complement can be translated to contain 0, so the
  // lexicographically first one starts there. Extend in ascending order;
  // a partial set dies when it double-covers or when the smallest
  // uncovered residue has no remaining candidate shift.
  std::vector<int> covered(n, 0);
  std::vector<std::uint64_t> chosen{0};
  for (const auto elem : j.elements) covered[elem % n] = 1;
  std::uint64_t nodes = 0;

  auto cover_with = [&](std::uint64_t k, int delta) {
    for (const auto elem : j.elements) {
      covered[(elem + k) % n] += delta;
    }
  };
  auto can_place = [&](std::uint64_t k) {
    for (const auto elem : j.elements) {
      if (covered[(elem + k) % n] != 0) return false;
    }
    return true;
  };

  // Depth-first over ascending candidates; returns true when complete.
  auto solve = [&](auto&& self) -> bool {
    if (chosen.size() == k_size) return true;
    std::uint64_t uncovered = 0;
    while (uncovered < n && covered[uncovered] != 0) ++uncovered;
    for (std::uint64_t k = chosen.back() + 1; k < n; ++k) {
      if (!can_place(k)) continue;
      bool hits_uncovered = false;
      for (const auto elem : j.elements) {
        if ((elem + k) % n == uncovered) {
          hits_uncovered = true;
          break;
        }
      }
      // Lexicographic order: k may be placed even if it skips the smallest
      // uncovered residue, as long as some larger shift can still reach it.
      if (!hits_uncovered) {
        bool reachable = false;
        for (const auto elem : j.elements) {
          const std::uint64_t need = (uncovered + n - elem % n) % n;
          if (need > k && can_place(need)) {
            reachable = true;
            break;
          }
        }
        if (!reachable) continue;
      }
      if (++nodes > max_nodes) {
        throw BoundExceeded("tiling complement search exceeds the node bound");
      }
      cover_with(k, 1);
      chosen.push_back(k);
      if (self(self)) return true;
      chosen.pop_back();
      cover_with(k, -1);
    }
    return false;
  };

  if (solve(solve)) {
    return IndexSet(n, chosen);
  }
  return std::nullopt;
}

std::optional<IndexSet> find_tiling_complement(const IndexSet& j) {
  if (j.empty()) return std::nullopt;
  const Modulus mod = Modulus::of(j.n);
  if (!mod.is_prime_power()) return search_tiling_complement(j);

  const Idempotent h(j);
  const auto& d = h.zero_set_divisors();
  const auto p = mod.prime();
  std::uint64_t want = 1;
  for (std::size_t i = 0; i < d.size(); ++i) want *= p;
  if (j.size() != want) return std::nullopt;

  const auto k = prescribe_zero_set(complement_divisors(d), PrescribeMode::kConstructive);
  if (!k || !tiles(j, *k)) {
    throw std::logic_error("constructive tiling complement failed verification");
  }
  return k;
}

FugledeReport fuglede_check(const IndexSet& j, std::uint64_t clique_bound,
                            std::uint64_t max_nodes) {
  FugledeReport report;
  report.j = j;
  report.in_theorem_scope = Modulus::of(j.n).is_prime_power();
  report.sampling_set = find_orthogonal_sampling_set(j, clique_bound);
  report.has_sampling_set = report.sampling_set.has_value();
  report.tiling_complement = search_tiling_complement(j, max_nodes);
  report.tiles = report.tiling_complement.has_value();
  return report;
}

}  // namespace dftsub
