#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dftsub/zn.hpp"

namespace dftsub {

/// Circulant graph on Z_n: vertices i, j adjacent iff gcd_class(i - j, n)
/// belongs to a fixed set of divisor classes. No self-loops. Adjacency is
/// stored as bitset rows; n is capped at 1024.
class DifferenceGraph {
 public:
  DifferenceGraph(std::uint64_t n, DivisorSet classes);

  std::uint64_t order() const { return n_; }
  const DivisorSet& classes() const { return classes_; }
  bool adjacent(std::uint64_t u, std::uint64_t v) const;
  std::size_t degree() const;  // same for every vertex
  std::uint64_t edge_count() const;

  std::size_t words() const { return words_; }
  /// Bitset row of vertex v (words() machine words).
  const std::uint64_t* row(std::uint64_t v) const {
    return rows_.data() + v * words_;
  }

 private:
  std::uint64_t n_;
  DivisorSet classes_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

DifferenceGraph build_difference_graph(std::uint64_t n, const DivisorSet& classes);

/// Difference graph on the complementary divisor classes; equals the graph
/// complement since adjacency depends only on the difference class.
DifferenceGraph complement_graph(const DifferenceGraph& g);

/// A maximum clique, as an index set. Prime-power moduli take the
/// digit-table construction (size p^|classes|, no search); other moduli run
/// a branch-and-bound search rooted at vertex 0 (sound by
/// vertex-transitivity). stop_at, when given, ends the search as soon as a
/// clique of that size is found.
IndexSet max_clique(const DifferenceGraph& g,
                    std::optional<std::size_t> stop_at = std::nullopt);

/// The branch-and-bound search path regardless of modulus; exposed so the
/// constructive path can be cross-checked against it.
IndexSet max_clique_search(const DifferenceGraph& g,
                           std::optional<std::size_t> stop_at = std::nullopt);

/// Chordless cycle of odd length in [5, max_len] through vertex 0 (every
/// hole has a translate through 0), searched shortest-first by depth-first
/// path extension; nullopt if none. in_complement searches the complement.
std::optional<std::vector<std::uint64_t>> find_odd_hole(
    const DifferenceGraph& g, bool in_complement = false, int max_len = 13);

/// Checks that cycle is a chordless cycle of odd length >= 5 in g.
bool is_odd_hole(const DifferenceGraph& g,
                 const std::vector<std::uint64_t>& cycle);

struct BergeReport {
  int max_len = 13;
  std::optional<std::vector<std::uint64_t>> hole;
  std::optional<std::vector<std::uint64_t>> complement_hole;

  /// No odd hole in the graph or its complement up to max_len.
  bool clean() const { return !hole && !complement_hole; }
};

BergeReport berge_certify(const DifferenceGraph& g, int max_len = 13);

/// One row of a divisibility scan: a divisor set over Z_n, whether some
/// index set's idempotent realizes exactly this zero set, and the maximum
/// clique of its difference graph.
struct ScanEntry {
  DivisorSet divisors;
  bool realizable = false;
  std::optional<IndexSet> witness;  // lexicographically first realizing set
  std::uint64_t clique_size = 0;
  bool clique_size_divides_n = false;
};

struct ScanReport {
  std::uint64_t n = 2;
  std::vector<ScanEntry> entries;  // one per subset of the proper divisors
  /// Index sets J that admit an orthogonal sampling set yet have size not
  /// dividing n. Empty everywhere the divisibility conjecture holds.
  std::vector<IndexSet> violations;
};

/// Exhaustive scan of one modulus: every subset of Z_n containing 0 (up to
/// max_size; 0 means no limit) is classified by its exact zero-set
/// divisors. Throws BoundExceeded when 2^(n-1) exceeds max_subsets.
ScanReport divisibility_scan(std::uint64_t n, std::size_t max_size = 0,
                             std::uint64_t max_subsets = std::uint64_t{1} << 25);

/// Deterministic DOT rendering with circular vertex positions.
std::string export_dot(const DifferenceGraph& g);

}  // namespace dftsub
