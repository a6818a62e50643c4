#include "dftsub/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "dftsub/digit_table.hpp"
#include "dftsub/errors.hpp"
#include "dftsub/idempotent.hpp"
#include "dftsub/polynomial.hpp"

namespace dftsub {

namespace {

constexpr std::uint64_t kMaxGraphOrder = 1024;

std::size_t popcount_words(const std::uint64_t* w, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(w[i]);
  return total;
}

/// Calls fn(v) for each set bit, ascending.
template <typename Fn>
void for_each_bit(const std::uint64_t* w, std::size_t words, Fn&& fn) {
  for (std::size_t i = 0; i < words; ++i) {
    std::uint64_t word = w[i];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      fn(i * 64 + static_cast<std::size_t>(bit));
      word &= word - 1;
    }
  }
}

}  // namespace

DifferenceGraph::DifferenceGraph(std::uint64_t n, DivisorSet classes)
    : n_(n), classes_(std::move(classes)) {
  if (n < 2 || n > kMaxGraphOrder) {
    throw std::invalid_argument("graph order out of range: " + std::to_string(n));
  }
  if (classes_.n != n) {
    throw std::invalid_argument("divisor set modulus does not match graph order");
  }
  words_ = static_cast<std::size_t>((n + 63) / 64);
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);

  // Differences with gcd class k are the k*t with t coprime to n/k.
  std::vector<std::uint64_t> deltas;
  for (const auto k : classes_.divisors) {
    const std::uint64_t q = n / k;
    for (std::uint64_t t = 1; t < q; ++t) {
      if (std::gcd(t, q) == 1) deltas.push_back(k * t);
    }
  }
  std::sort(deltas.begin(), deltas.end());
  for (std::uint64_t v = 0; v < n; ++v) {
    std::uint64_t* row = rows_.data() + v * words_;
    for (const auto delta : deltas) {
      const std::uint64_t u = (v + delta) % n;
      row[u / 64] |= std::uint64_t{1} << (u % 64);
    }
  }
}

bool DifferenceGraph::adjacent(std::uint64_t u, std::uint64_t v) const {
  return (row(u)[v / 64] >> (v % 64)) & 1;
}

std::size_t DifferenceGraph::degree() const {
  return popcount_words(row(0), words_);
}

std::uint64_t DifferenceGraph::edge_count() const {
  return n_ * static_cast<std::uint64_t>(degree()) / 2;
}

DifferenceGraph build_difference_graph(std::uint64_t n, const DivisorSet& classes) {
  return DifferenceGraph(n, classes);
}

DifferenceGraph complement_graph(const DifferenceGraph& g) {
  return DifferenceGraph(g.order(), complement_divisors(g.classes()));
}

namespace {

/// Branch and bound with a greedy-coloring bound, lowest-vertex-first for
/// deterministic witnesses.
class CliqueSearcher {
 public:
  CliqueSearcher(const DifferenceGraph& g, std::optional<std::size_t> stop_at)
      : g_(g), words_(g.words()), stop_at_(stop_at) {}

  std::vector<std::uint64_t> run() {
    current_.push_back(0);
    best_ = current_;
    if (reached_stop()) return best_;
    std::vector<std::uint64_t> cand(g_.row(0), g_.row(0) + words_);
    expand(cand);
    return best_;
  }

 private:
  bool reached_stop() const {
    return stop_at_ && best_.size() >= *stop_at_;
  }

  void expand(const std::vector<std::uint64_t>& cand) {
    if (done_) return;
    const std::size_t cand_size = popcount_words(cand.data(), words_);
    if (cand_size == 0) {
      if (current_.size() > best_.size()) {
        best_ = current_;
        if (reached_stop()) done_ = true;
      }
      return;
    }
    if (current_.size() + cand_size <= best_.size()) return;

    // Greedy coloring: vertices of color c can bound any clique inside the
    // remaining candidates by c.
    std::vector<std::uint64_t> order;
    std::vector<std::size_t> color;
    std::vector<std::uint64_t> uncolored = cand;
    std::size_t c = 0;
    while (popcount_words(uncolored.data(), words_) > 0) {
      ++c;
      std::vector<std::uint64_t> avail = uncolored;
      while (true) {
        std::size_t v = words_ * 64;
        for (std::size_t i = 0; i < words_; ++i) {
          if (avail[i] != 0) {
            v = i * 64 + static_cast<std::size_t>(std::countr_zero(avail[i]));
            break;
          }
        }
        if (v >= words_ * 64) break;
        order.push_back(v);
        color.push_back(c);
        uncolored[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        avail[v / 64] &= ~(std::uint64_t{1} << (v % 64));
        const std::uint64_t* nv = g_.row(v);
        for (std::size_t i = 0; i < words_; ++i) avail[i] &= ~nv[i];
      }
    }

    std::vector<std::uint64_t> live = cand;
    for (std::size_t idx = order.size(); idx-- > 0;) {
      if (done_) return;
      if (current_.size() + color[idx] <= best_.size()) return;
      const std::uint64_t v = order[idx];
      current_.push_back(v);
      std::vector<std::uint64_t> next(words_);
      const std::uint64_t* nv = g_.row(v);
      for (std::size_t i = 0; i < words_; ++i) next[i] = live[i] & nv[i];
      expand(next);
      current_.pop_back();
      live[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  const DifferenceGraph& g_;
  std::size_t words_;
  std::optional<std::size_t> stop_at_;
  std::vector<std::uint64_t> current_;
  std::vector<std::uint64_t> best_;
  bool done_ = false;
};

}  // namespace

IndexSet max_clique_search(const DifferenceGraph& g,
                           std::optional<std::size_t> stop_at) {
  CliqueSearcher searcher(g, stop_at);
  return IndexSet(g.order(), searcher.run());
}

IndexSet max_clique(const DifferenceGraph& g, std::optional<std::size_t> stop_at) {
  const Modulus mod = Modulus::of(g.order());
  if (mod.is_prime_power()) {
    const auto p = mod.prime();
    const int m = mod.exponent();
    std::vector<int> marks;
    for (const auto k : g.classes().divisors) {
      int l = 0;
      std::uint64_t v = k;
      while (v % p == 0) {
        v /= p;
        ++l;
      }
      marks.push_back(l);
    }
    return canonical_valid_table(p, m, marks).index_set();
  }
  return max_clique_search(g, stop_at);
}

namespace {

/// Depth-first search for a chordless cycle 0, v1, ..., v_{len-1}. base
/// masks exclude path vertices and neighbors of interior vertices before
/// the tail; candidates additionally intersect the tail's neighborhood.
class HoleSearcher {
 public:
  HoleSearcher(const DifferenceGraph& g, int len)
      : g_(g), words_(g.words()), len_(len), path_(static_cast<std::size_t>(len)),
        base_(static_cast<std::size_t>(len), std::vector<std::uint64_t>(words_)) {}

  std::optional<std::vector<std::uint64_t>> run() {
    path_[0] = 0;
    const std::uint64_t* n0 = g_.row(0);
    std::vector<std::uint64_t> first(n0, n0 + words_);
    bool found = false;
    for_each_bit(first.data(), words_, [&](std::size_t v1) {
      if (found) return;
      path_[1] = v1;
      auto& base = base_[1];
      for (std::size_t i = 0; i < words_; ++i) base[i] = ~std::uint64_t{0};
      clear_tail_bits(base);
      clear_bit(base, 0);
      clear_bit(base, v1);
      if (extend(1)) found = true;
    });
    if (!found) return std::nullopt;
    return std::vector<std::uint64_t>(path_.begin(), path_.end());
  }

 private:
  void clear_bit(std::vector<std::uint64_t>& mask, std::uint64_t v) const {
    mask[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  /// Zeroes the bits past order() in the last word.
  void clear_tail_bits(std::vector<std::uint64_t>& mask) const {
    const std::uint64_t n = g_.order();
    if (n % 64 != 0) {
      mask[words_ - 1] &= (std::uint64_t{1} << (n % 64)) - 1;
    }
  }

  bool extend(int depth) {
    const std::uint64_t tail = path_[static_cast<std::size_t>(depth)];
    const std::uint64_t* nt = g_.row(tail);
    const std::uint64_t* n0 = g_.row(0);
    const auto& base = base_[static_cast<std::size_t>(depth)];

    if (depth == len_ - 2) {
      // Close the cycle: adjacent to both tail and 0, beyond v1 to fix the
      // traversal direction.
      bool found = false;
      for (std::size_t i = 0; i < words_ && !found; ++i) {
        std::uint64_t word = base[i] & nt[i] & n0[i];
        while (word != 0) {
          const auto v = i * 64 + static_cast<std::size_t>(std::countr_zero(word));
          word &= word - 1;
          if (v > path_[1]) {
            path_[static_cast<std::size_t>(len_ - 1)] = v;
            found = true;
            break;
          }
        }
      }
      return found;
    }

    auto& next = base_[static_cast<std::size_t>(depth) + 1];
    bool found = false;
    for (std::size_t i = 0; i < words_ && !found; ++i) {
      std::uint64_t word = base[i] & nt[i] & ~n0[i];
      while (word != 0) {
        const auto v = i * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        path_[static_cast<std::size_t>(depth) + 1] = v;
        for (std::size_t k = 0; k < words_; ++k) next[k] = base[k] & ~nt[k];
        clear_bit(next, v);
        if (extend(depth + 1)) {
          found = true;
          break;
        }
      }
    }
    return found;
  }

  const DifferenceGraph& g_;
  std::size_t words_;
  int len_;
  std::vector<std::uint64_t> path_;
  std::vector<std::vector<std::uint64_t>> base_;
};

}  // namespace

std::optional<std::vector<std::uint64_t>> find_odd_hole(const DifferenceGraph& g,
                                                        bool in_complement,
                                                        int max_len) {
  if (max_len < 5) return std::nullopt;
  const DifferenceGraph* target = &g;
  std::optional<DifferenceGraph> complement;
  if (in_complement) {
    complement.emplace(complement_graph(g));
    target = &*complement;
  }
  const int cap = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(max_len), g.order()));
  for (int len = 5; len <= cap; len += 2) {
    HoleSearcher searcher(*target, len);
    if (auto hole = searcher.run()) return hole;
  }
  return std::nullopt;
}

bool is_odd_hole(const DifferenceGraph& g, const std::vector<std::uint64_t>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 5 || len % 2 == 0) return false;
  std::vector<std::uint64_t> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= g.order()) return false;
  for (std::size_t a = 0; a < len; ++a) {
    for (std::size_t b = a + 1; b < len; ++b) {
      const bool consecutive = (b == a + 1) || (a == 0 && b == len - 1);
      if (g.adjacent(cycle[a], cycle[b]) != consecutive) return false;
    }
  }
  return true;
}

BergeReport berge_certify(const DifferenceGraph& g, int max_len) {
  BergeReport report;
  report.max_len = max_len;
  report.hole = find_odd_hole(g, false, max_len);
  report.complement_hole = find_odd_hole(g, true, max_len);
  return report;
}

ScanReport divisibility_scan(std::uint64_t n, std::size_t max_size,
                             std::uint64_t max_subsets) {
  if (n < 2) throw std::invalid_argument("scan modulus must be >= 2");
  if (n > 40 || (std::uint64_t{1} << (n - 1)) > max_subsets) {
    throw BoundExceeded("divisibility scan over Z_" + std::to_string(n) +
                        " exceeds the subset bound");
  }
  const auto divisors = divisors_proper(n);
  std::vector<std::size_t> divisor_index(n + 1, divisors.size());
  for (std::size_t i = 0; i < divisors.size(); ++i) divisor_index[divisors[i]] = i;

  std::vector<std::complex<double>> omega(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    omega[k] = std::polar(1.0, 2.0 * std::numbers::pi *
                                   static_cast<double>(k) / static_cast<double>(n));
  }

  struct Bucket {
    std::uint64_t count = 0;
    std::optional<IndexSet> witness;
    std::uint64_t clique_size = 0;
  };
  std::map<std::uint64_t, Bucket> buckets;
  ScanReport report;
  report.n = n;

  std::vector<std::uint64_t> members;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    members.clear();
    members.push_back(0);
    for (std::uint64_t b = 0; b < n - 1; ++b) {
      if ((mask >> b) & 1) members.push_back(b + 1);
    }
    if (max_size != 0 && members.size() > max_size) continue;

    // Numeric prefilter: values >= 1e-3 are provably nonzero (the float
    // error on a sum of at most n unit terms is orders below that), so the
    // exact cyclotomic test only runs on claimed zeros.
    std::uint64_t claim = 0;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      std::complex<double> sum{0.0, 0.0};
      for (const auto j : members) sum += omega[(divisors[i] * j) % n];
      if (std::abs(sum) / static_cast<double>(n) < 1e-3) {
        claim |= std::uint64_t{1} << i;
      }
    }
    std::uint64_t zero_mask = 0;
    if (claim != 0) {
      const IntPolynomial pj = IntPolynomial::from_index_set(IndexSet(n, members));
      for (std::size_t i = 0; i < divisors.size(); ++i) {
        if (((claim >> i) & 1) != 0 &&
            pj.divisible_by(cyclotomic(n / divisors[i]))) {
          zero_mask |= std::uint64_t{1} << i;
        }
      }
    }

    auto& bucket = buckets[zero_mask];
    ++bucket.count;
    IndexSet j_set(n, members);
    if (!bucket.witness) {
      bucket.witness = j_set;
      std::vector<std::uint64_t> ds;
      for (std::size_t i = 0; i < divisors.size(); ++i) {
        if ((zero_mask >> i) & 1) ds.push_back(divisors[i]);
      }
      bucket.clique_size =
          max_clique(DifferenceGraph(n, DivisorSet(n, std::move(ds)))).size();
    }
    if (members.size() == bucket.clique_size && n % members.size() != 0) {
      report.violations.push_back(std::move(j_set));
    }
  }

  // One entry per divisor subset, realizable or not.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << divisors.size());
       ++mask) {
    ScanEntry entry;
    std::vector<std::uint64_t> ds;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if ((mask >> i) & 1) ds.push_back(divisors[i]);
    }
    entry.divisors = DivisorSet(n, std::move(ds));
    const auto it = buckets.find(mask);
    if (it != buckets.end()) {
      entry.realizable = true;
      entry.witness = it->second.witness;
      entry.clique_size = it->second.clique_size;
    } else {
      entry.clique_size = max_clique(DifferenceGraph(n, entry.divisors)).size();
    }
    entry.clique_size_divides_n = (n % entry.clique_size) == 0;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string export_dot(const DifferenceGraph& g) {
  const auto n = g.order();
  const double radius = std::max(2.0, static_cast<double>(n) * 0.32);
  std::string out = "graph difference_graph {\n  layout=neato;\n  node [shape=circle, fixedsize=true, width=0.45];\n";
  char buf[128];
  for (std::uint64_t v = 0; v < n; ++v) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(v) /
                         static_cast<double>(n);
    std::snprintf(buf, sizeof(buf), "  %llu [pos=\"%.4f,%.4f!\"];\n",
                  static_cast<unsigned long long>(v), radius * std::cos(angle),
                  radius * std::sin(angle));
    out += buf;
  }
  for (std::uint64_t v = 0; v < n; ++v) {
    for (std::uint64_t u = v + 1; u < n; ++u) {
      if (g.adjacent(v, u)) {
        std::snprintf(buf, sizeof(buf), "  %llu -- %llu;\n",
                      static_cast<unsigned long long>(v),
                      static_cast<unsigned long long>(u));
        out += buf;
      }
    }
  }
  out += "}\n";
  return out;
}

}  // namespace dftsub
