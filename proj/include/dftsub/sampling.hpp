#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dftsub/idempotent.hpp"
#include "dftsub/zn.hpp"

namespace dftsub {

/// Submatrix of the inverse DFT matrix on Z_N with the given row and column
/// index sets: entries (1/N) e^(2 pi i r c / N).
struct FourierSubmatrix {
  IndexSet rows;
  IndexSet cols;
  Eigen::MatrixXcd entries;
};

FourierSubmatrix fourier_submatrix(const IndexSet& rows, const IndexSet& cols);

/// Exact test: |I| = |J| and every nonzero difference of I lands in the zero
/// set of the idempotent with support J.
bool is_orthogonal_sampling_set(const IndexSet& i, const IndexSet& j);
bool is_orthogonal_sampling_set(const IndexSet& i, const Idempotent& h);

/// Finds an orthogonal sampling set for the span with frequency support J.
/// Prime-power moduli use the digit-placement construction (a set exists iff
/// |J| = p^(number of zero-set divisors)); other moduli fall back to a
/// maximum-clique search over the difference graph, allowed up to
/// clique_bound vertices (BoundExceeded beyond).
std::optional<IndexSet> find_orthogonal_sampling_set(const IndexSet& j,
                                                     std::uint64_t clique_bound = 64);

/// Canonical unitary pair on Z_(p^m): sampling side built on the given
/// marked columns, frequency side on the dual markings.
std::pair<IndexSet, IndexSet> make_unitary_pair(std::uint64_t p, int m,
                                                const std::vector<int>& marks);

/// Exact verdict: the scaled submatrix on (I, J) is unitary.
bool is_unitary_pair(const IndexSet& i, const IndexSet& j);

/// Floating-point cross-check of a pair via the Gram matrix S S*. All
/// tolerances are relative to the diagonal target |J|/N^2.
struct PairReport {
  bool unitary_exact = false;
  bool unitary_numeric = false;
  double gram_offdiag_max = 0.0;
  double gram_diag_dev = 0.0;
  /// Euclidean length of the first interpolating basis vector, when the
  /// submatrix is invertible; sqrt(N/|J|) for a unitary pair.
  std::optional<double> witness_basis_norm;
};

PairReport numeric_pair_report(const IndexSet& i, const IndexSet& j);

/// Basis of the span with frequency support J interpolating samples on I:
/// columns of F^(-1) E_J (E_I^T F^(-1) E_J)^(-1), length-N signals with
/// u_i(i') = delta at the sample points.
struct InterpolatingBasis {
  IndexSet samples;  // I
  IndexSet support;  // J
  Eigen::MatrixXcd columns;  // N x |I|
  double condition_number = 0.0;
};

/// Throws SingularSubmatrix (naming the pair) when the sample submatrix is
/// not invertible; std::invalid_argument when |I| != |J|.
InterpolatingBasis interpolating_basis(const IndexSet& i, const IndexSet& j);

/// Signal with the given samples on basis.samples: basis.columns * samples.
Eigen::VectorXcd reconstruct(const Eigen::VectorXcd& samples,
                             const InterpolatingBasis& basis);

/// Run of d consecutive residues starting at offset, with closed-form
/// idempotent values, the exact zero set, and the equispaced sampling set
/// when one exists.
struct ConsecutiveFamily {
  std::uint64_t n = 2;
  std::uint64_t d = 1;
  std::uint64_t offset = 0;
  IndexSet support;
  IndexSet zeros;
  std::optional<IndexSet> sampling_set;

  /// Dirichlet-kernel closed form; matches the numeric evaluation.
  std::complex<double> eval(std::int64_t m) const;
};

ConsecutiveFamily consecutive_family(std::uint64_t n, std::uint64_t d,
                                     std::uint64_t offset = 0);

/// Arithmetic progression offset + k s (k < d) with distinct residues.
struct ProgressionFamily {
  std::uint64_t n = 2;
  std::uint64_t s = 1;
  std::uint64_t d = 1;
  std::uint64_t offset = 0;
  IndexSet support;
  IndexSet zeros;
  std::optional<IndexSet> sampling_set;

  std::complex<double> eval(std::int64_t m) const;
};

/// Throws std::invalid_argument when the progression revisits a residue.
/// A sampling set exists iff gcd(s, n) * d divides n, in which case it is
/// the arithmetic progression with step n / (gcd(s, n) d).
ProgressionFamily progression_family(std::uint64_t n, std::uint64_t s,
                                     std::uint64_t d, std::uint64_t offset = 0);

}  // namespace dftsub
