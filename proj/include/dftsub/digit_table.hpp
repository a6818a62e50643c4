#pragma once

#include <cstdint>
#include <vector>

#include "dftsub/zn.hpp"

namespace dftsub {

/// Base-p digit expansions of an index set in Z_(p^m), one row per element in
/// ascending element order, column k holding the coefficient of p^k, with a
/// distinguished (marked) subset of columns.
struct DigitTable {
  std::uint64_t p = 2;
  int m = 1;
  std::vector<int> marked;             // ascending columns in [0, m)
  std::vector<std::vector<Digit>> rows;

  std::uint64_t row_value(std::size_t r) const;
  /// The elements the rows expand, as a subset of Z_(p^m).
  IndexSet index_set() const;
};

/// Expands the elements of s in base p. Requires s.n = p^m and marked
/// columns inside [0, m).
DigitTable build_table(const IndexSet& s, std::uint64_t p, int m,
                       std::vector<int> marked);

/// Columns holding the first nonzero entry of some row difference, ascending.
std::vector<int> pivots(const DigitTable& t);

/// Exactly p^|marked| rows and pivot set equal to the marked set.
bool is_valid(const DigitTable& t);

/// The valid table whose rows run through all digit tuples on the marked
/// columns and are zero elsewhere; its index set is {sum_k s_k p^(l_k)}.
DigitTable canonical_valid_table(std::uint64_t p, int m,
                                 const std::vector<int>& marks);

/// Reflected column set {m - 1 - l : l in marks}, ascending. An involution.
std::vector<int> dual_markings(const std::vector<int>& marks, int m);

/// Builds the valid table with the given marks from its free parameters:
/// prefix digits fill the columns below the first mark (one digit per
/// column), and for each unmarked column above the first mark a dependence
/// map gives that column's digit as a function of the preceding marked
/// digits. Map order follows the unmarked columns ascending; the map for a
/// column preceded by k marked columns has p^k entries, indexed by
/// sum_i t_i p^i over the preceding marked digits t_0..t_(k-1).
DigitTable construct_valid(std::uint64_t p, int m, const std::vector<int>& marks,
                           const std::vector<Digit>& prefix,
                           const std::vector<std::vector<Digit>>& maps);

/// Valid tables split below their first marked column l0: all rows share the
/// digits c on columns below l0, and the rows whose digit at l0 is b form,
/// after subtracting c + b p^(l0) and dividing by p^(l0+1), a valid table on
/// m - l0 columns whose marks drop by l0 + 1.
struct Decomposition {
  std::uint64_t p = 2;
  int m = 1;
  int l0 = 0;
  std::vector<Digit> c;             // length m, zero from column l0 on
  std::vector<DigitTable> blocks;   // p blocks, marks {l - l0 - 1 : l in marks, l > l0}

  std::uint64_t c_value() const;
  /// Reassembles c_value + b p^(l0) + p^(l0+1) y over blocks b and rows y.
  IndexSet recompose() const;
};

/// Requires a valid table with at least one marked column.
Decomposition decompose(const DigitTable& t);

/// Gap vector r of a marking: r_i counts the unmarked columns between
/// consecutive marks (below the first, between neighbors, above the last).
/// Size |marks| + 1, sum m - |marks|.
std::vector<int> marking_gaps(const std::vector<int>& marks, int m);

/// lambda(r) = sum_i r_i p^i; the number of valid tables is p^lambda.
std::uint64_t marking_exponent(std::uint64_t p, const std::vector<int>& marks,
                               int m);

/// All valid tables with the given marks, enumerated by prefix digits then
/// dependence maps, each in ascending numeric order. Throws BoundExceeded
/// when p^lambda exceeds max_tables.
std::vector<DigitTable> enumerate_valid(std::uint64_t p, int m,
                                        const std::vector<int>& marks,
                                        std::uint64_t max_tables = std::uint64_t{1}
                                                                   << 20);

}  // namespace dftsub
