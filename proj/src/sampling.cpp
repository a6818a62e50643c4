#include "dftsub/sampling.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dftsub/digit_table.hpp"
#include "dftsub/errors.hpp"
#include "dftsub/graph.hpp"

namespace dftsub {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::complex<double> root_of_unity(std::uint64_t n, std::uint64_t num) {
  return std::polar(1.0, kTwoPi * static_cast<double>(num % n) /
                             static_cast<double>(n));
}

}  // namespace

FourierSubmatrix fourier_submatrix(const IndexSet& rows, const IndexSet& cols) {
  if (rows.n != cols.n) {
    throw std::invalid_argument("fourier_submatrix: mismatched moduli");
  }
  const auto n = rows.n;
  Eigen::MatrixXcd m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          root_of_unity(n, rows.elements[r] * cols.elements[c]) /
          static_cast<double>(n);
    }
  }
  return FourierSubmatrix{rows, cols, std::move(m)};
}

bool is_orthogonal_sampling_set(const IndexSet& i, const Idempotent& h) {
  if (i.n != h.modulus()) return false;
  if (i.size() != h.support().size()) return false;
  const auto& zeros = h.zero_set_divisors();
  for (std::size_t a = 0; a + 1 < i.size(); ++a) {
    for (std::size_t b = a + 1; b < i.size(); ++b) {
      const auto diff = (i.elements[b] - i.elements[a]) % i.n;
      if (!zeros.contains(gcd_class(diff, i.n))) return false;
    }
  }
  return true;
}

bool is_orthogonal_sampling_set(const IndexSet& i, const IndexSet& j) {
  if (i.n != j.n) return false;
  return is_orthogonal_sampling_set(i, Idempotent(j));
}

std::optional<IndexSet> find_orthogonal_sampling_set(const IndexSet& j,
                                                     std::uint64_t clique_bound) {
  const Idempotent h(j);
  const auto& zeros = h.zero_set_divisors();
  if (j.size() == 1) return IndexSet(j.n, {0});
  const Modulus mod = Modulus::of(j.n);
  if (mod.is_prime_power()) {
    const auto p = mod.prime();
    const int m = mod.exponent();
    std::vector<int> marks;
    for (const auto k : zeros.divisors) {
      const auto ds = digits_base_p(k, p, m + 1);
      int l = 0;
      while (ds[static_cast<std::size_t>(l)] == 0) ++l;
      marks.push_back(l);
    }
    std::uint64_t want = 1;
    for (std::size_t t = 0; t < marks.size(); ++t) want *= p;
    if (j.size() != want) return std::nullopt;
    return canonical_valid_table(p, m, marks).index_set();
  }
  if (j.n > clique_bound) {
    throw BoundExceeded("find_orthogonal_sampling_set: modulus " +
                        std::to_string(j.n) + " exceeds clique search bound " +
                        std::to_string(clique_bound));
  }
  const DifferenceGraph g = build_difference_graph(j.n, zeros);
  const IndexSet clique = max_clique(g, j.size());
  if (clique.size() == j.size()) return clique;
  return std::nullopt;
}

std::pair<IndexSet, IndexSet> make_unitary_pair(std::uint64_t p, int m,
                                                const std::vector<int>& marks) {
  const auto sample_side = canonical_valid_table(p, m, marks);
  const auto freq_side = canonical_valid_table(p, m, dual_markings(marks, m));
  return {sample_side.index_set(), freq_side.index_set()};
}

bool is_unitary_pair(const IndexSet& i, const IndexSet& j) {
  return is_orthogonal_sampling_set(i, j);
}

PairReport numeric_pair_report(const IndexSet& i, const IndexSet& j) {
  PairReport report;
  report.unitary_exact = is_unitary_pair(i, j);
  if (i.n != j.n || i.empty() || j.empty()) return report;

  const auto s = fourier_submatrix(i, j).entries;
  const Eigen::MatrixXcd gram = s * s.adjoint();
  const double target = static_cast<double>(j.size()) /
                        (static_cast<double>(i.n) * static_cast<double>(i.n));
  for (Eigen::Index r = 0; r < gram.rows(); ++r) {
    for (Eigen::Index c = 0; c < gram.cols(); ++c) {
      const double mag = std::abs(gram(r, c));
      if (r == c) {
        report.gram_diag_dev = std::max(report.gram_diag_dev,
                                        std::abs(mag - target));
      } else {
        report.gram_offdiag_max = std::max(report.gram_offdiag_max, mag);
      }
    }
  }
  const double tol = 1e-9 * target;
  report.unitary_numeric =
      i.size() == j.size() && report.gram_offdiag_max < tol &&
      report.gram_diag_dev < tol;
  if (i.size() == j.size()) {
    try {
      const auto basis = interpolating_basis(i, j);
      report.witness_basis_norm = basis.columns.col(0).norm();
    } catch (const SingularSubmatrix&) {
      report.witness_basis_norm = std::nullopt;
    }
  }
  return report;
}

InterpolatingBasis interpolating_basis(const IndexSet& i, const IndexSet& j) {
  if (i.n != j.n) {
    throw std::invalid_argument("interpolating_basis: mismatched moduli");
  }
  if (i.size() != j.size()) {
    throw std::invalid_argument("interpolating_basis: need |I| == |J|");
  }
  if (i.empty()) {
    throw std::invalid_argument("interpolating_basis: empty index sets");
  }
  const auto n = i.n;
  const auto dim = static_cast<Eigen::Index>(j.size());

  // F^(-1) E_J: column j of the inverse DFT matrix for each j in J.
  Eigen::MatrixXcd synth(static_cast<Eigen::Index>(n), dim);
  for (std::uint64_t row = 0; row < n; ++row) {
    for (std::size_t c = 0; c < j.size(); ++c) {
      synth(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(c)) =
          root_of_unity(n, row * j.elements[c]) / static_cast<double>(n);
    }
  }

  const Eigen::MatrixXcd a = fourier_submatrix(i, j).entries;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(dim - 1);
  const double cutoff = smax * static_cast<double>(dim) *
                        std::numeric_limits<double>::epsilon() * 16.0;
  if (!(smin > cutoff)) {
    throw SingularSubmatrix("sample submatrix on rows " + to_string(i) +
                            " and columns " + to_string(j) +
                            " is not invertible");
  }

  Eigen::VectorXcd inv_sv(dim);
  for (Eigen::Index k = 0; k < dim; ++k) inv_sv(k) = 1.0 / sv(k);
  const Eigen::MatrixXcd a_inv =
      svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint();

  InterpolatingBasis basis;
  basis.samples = i;
  basis.support = j;
  basis.columns = synth * a_inv;
  basis.condition_number = smax / smin;
  return basis;
}

Eigen::VectorXcd reconstruct(const Eigen::VectorXcd& samples,
                             const InterpolatingBasis& basis) {
  if (samples.size() != basis.columns.cols()) {
    throw std::invalid_argument("reconstruct: sample count does not match basis");
  }
  return basis.columns * samples;
}

namespace {

// Shared closed form for a progression of d terms with step s from offset:
// (1/N) sum over the support of e^(2 pi i m j / N), in Dirichlet-kernel form.
std::complex<double> progression_eval(std::uint64_t n, std::uint64_t s,
                                      std::uint64_t d, std::uint64_t offset,
                                      std::int64_t m) {
  const auto nn = static_cast<std::int64_t>(n);
  std::int64_t r = m % nn;
  if (r < 0) r += nn;
  const auto mu = static_cast<std::uint64_t>(r);
  const double dn = static_cast<double>(n);
  if (mu == 0) return {static_cast<double>(d) / dn, 0.0};
  if ((mu * s) % n == 0) {
    // Every term of the sum collapses to the same phase.
    return std::polar(static_cast<double>(d) / dn,
                      kTwoPi * static_cast<double>((mu * offset) % n) / dn);
  }
  const double x = std::numbers::pi * static_cast<double>(mu) *
                   static_cast<double>(s) / dn;
  const double ratio =
      std::sin(x * static_cast<double>(d)) / std::sin(x);
  const double phase =
      kTwoPi * static_cast<double>(mu) * static_cast<double>(offset) / dn +
      x * static_cast<double>(d - 1);
  return std::polar(ratio / dn, phase);
}

IndexSet progression_zeros(std::uint64_t n, std::uint64_t s, std::uint64_t d) {
  std::vector<std::uint64_t> zs;
  for (std::uint64_t m = 1; m < n; ++m) {
    if ((m * s * d) % n == 0 && (m * s) % n != 0) zs.push_back(m);
  }
  return IndexSet(n, std::move(zs));
}

}  // namespace

std::complex<double> ConsecutiveFamily::eval(std::int64_t m) const {
  return progression_eval(n, 1, d, offset, m);
}

ConsecutiveFamily consecutive_family(std::uint64_t n, std::uint64_t d,
                                     std::uint64_t offset) {
  if (n < 2 || d == 0 || d > n) {
    throw std::invalid_argument("consecutive_family: need 2 <= n and 1 <= d <= n");
  }
  ConsecutiveFamily fam;
  fam.n = n;
  fam.d = d;
  fam.offset = offset % n;
  std::vector<std::uint64_t>支;
  std::vector<std::uint64_t> sup;
  for (std::uint64_t k = 0; k < d; ++k) sup.push_back((offset + k) % n);
  fam.support = IndexSet(n, std::move(sup));
  fam.zeros = progression_zeros(n, 1, d);
  if (n % d == 0) {
    std::vector<std::uint64_t> samp;
    for (std::uint64_t k = 0; k < d; ++k) samp.push_back(k * (n / d));
    fam.sampling_set = IndexSet(n, std::move(samp));
  }
  return fam;
}

std::complex<double> ProgressionFamily::eval(std::int64_t m) const {
  return progression_eval(n, s, d, offset, m);
}

ProgressionFamily progression_family(std::uint64_t n, std::uint64_t s,
                                     std::uint64_t d, std::uint64_t offset) {
  if (n < 2 || d == 0 || s == 0) {
    throw std::invalid_argument("progression_family: need 2 <= n, 1 <= d, 1 <= s");
  }
  const std::uint64_t s0 = std::gcd(s, n);
  if (d > n / s0) {
    throw std::invalid_argument(
        "progression_family: step revisits a residue before d terms");
  }
  ProgressionFamily fam;
  fam.n = n;
  fam.s = s % n;
  fam.d = d;
  fam.offset = offset % n;
  std::vector<std::uint64_t> sup;
  for (std::uint64_t k = 0; k < d; ++k) sup.push_back((offset + k * s) % n);
  fam.support = IndexSet(n, std::move(sup));
  fam.zeros = progression_zeros(n, s, d);
  // A d-clique in the zero set exists iff gcd(s, n) * d divides n.
  if (n % (s0 * d) == 0) {
    const std::uint64_t step = n / (s0 * d);
    std::vector<std::uint64_t> samp;
    for (std::uint64_t k = 0; k < d; ++k) samp.push_back(k * step);
    fam.sampling_set = IndexSet(n, std::move(samp));
  }
  return fam;
}

}  // namespace dftsub
