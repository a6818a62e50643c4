#pragma once

#include <cstdint>
#include <optional>

#include "dftsub/zn.hpp"

namespace dftsub {

/// Exact check that every residue of Z_n has exactly one representation
/// j + k with j in `tile`, k in `translates` (integer convolution of the
/// indicators is identically 1).
bool tiles(const IndexSet& tile, const IndexSet& translates);

/// Exhaustive complement search: the lexicographically first K of size
/// n/|J| with tiles(J, K), or nullopt. Candidates are pruned by partial
/// coverage, so the sweep is far below C(n, n/|J|) in practice; max_nodes
/// caps the number of extension steps (BoundExceeded past it).
std::optional<IndexSet> search_tiling_complement(
    const IndexSet& j, std::uint64_t max_nodes = std::uint64_t{1} << 32);

/// Tiling complement via the structure of the zero set: on prime powers,
/// J tiles iff |J| = p^(number of zero-set divisors), and the minimal
/// index set whose zero set covers the complementary divisor classes is a
/// complement. Other moduli fall back to the exhaustive search.
std::optional<IndexSet> find_tiling_complement(const IndexSet& j);

/// Both sides of the tiling / sampling-set equivalence, each computed
/// independently: the sampling side from the zero-set divisor count (prime
/// powers) or a clique search, the tiling side by exhaustive complement
/// search. On prime powers the two verdicts provably agree; elsewhere the
/// report is informational.
struct FugledeReport {
  IndexSet j;
  bool has_sampling_set = false;
  std::optional<IndexSet> sampling_set;
  bool tiles = false;
  std::optional<IndexSet> tiling_complement;
  bool in_theorem_scope = false;  // modulus is a prime power

  bool agree() const { return has_sampling_set == tiles; }
};

FugledeReport fuglede_check(const IndexSet& j,
                            std::uint64_t clique_bound = 64,
                            std::uint64_t max_nodes = std::uint64_t{1} << 32);

}  // namespace dftsub
