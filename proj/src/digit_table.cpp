#include "dftsub/digit_table.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dftsub/errors.hpp"

namespace dftsub {

namespace {

void check_marks(const std::vector<int>& marks, int m) {
  for (std::size_t k = 0; k < marks.size(); ++k) {
    if (marks[k] < 0 || marks[k] >= m) {
      throw std::invalid_argument("marked column out of range");
    }
    if (k > 0 && marks[k] <= marks[k - 1]) {
      throw std::invalid_argument("marked columns must be strictly ascending");
    }
  }
}

std::uint64_t digits_value(const std::vector<Digit>& digits, std::uint64_t p) {
  std::uint64_t v = 0;
  for (std::size_t k = digits.size(); k-- > 0;) v = v * p + digits[k];
  return v;
}

}  // namespace

std::uint64_t DigitTable::row_value(std::size_t r) const {
  return digits_value(rows.at(r), p);
}

IndexSet DigitTable::index_set() const {
  std::vector<std::uint64_t> elems;
  elems.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    elems.push_back(static_cast<std::uint64_t>(row_value(r)));
  }
  return IndexSet(ipow(p, m), std::move(elems));
}

DigitTable build_table(const IndexSet& s, std::uint64_t p, int m,
                       std::vector<int> marked) {
  if (m < 1) throw std::invalid_argument("digit table needs at least one column");
  if (s.n != ipow(p, m)) {
    throw std::invalid_argument("index set modulus is not p^m");
  }
  std::sort(marked.begin(), marked.end());
  check_marks(marked, m);
  DigitTable t;
  t.p = p;
  t.m = m;
  t.marked = std::move(marked);
  t.rows.reserve(s.size());
  for (auto e : s.elements) t.rows.push_back(digits_base_p(e, p, m));
  return t;
}

std::vector<int> pivots(const DigitTable& t) {
  std::vector<bool> hit(static_cast<std::size_t>(t.m), false);
  for (std::size_t a = 0; a < t.rows.size(); ++a) {
    for (std::size_t b = a + 1; b < t.rows.size(); ++b) {
      for (int c = 0; c < t.m; ++c) {
        if (t.rows[a][static_cast<std::size_t>(c)] !=
            t.rows[b][static_cast<std::size_t>(c)]) {
          hit[static_cast<std::size_t>(c)] = true;
          break;
        }
      }
    }
  }
  std::vector<int> out;
  for (int c = 0; c < t.m; ++c) {
    if (hit[static_cast<std::size_t>(c)]) out.push_back(c);
  }
  return out;
}

bool is_valid(const DigitTable& t) {
  std::uint64_t want = ipow(t.p, static_cast<int>(t.marked.size()));
  if (t.rows.size() != want) return false;
  return pivots(t) == t.marked;
}

DigitTable canonical_valid_table(std::uint64_t p, int m,
                                 const std::vector<int>& marks) {
  check_marks(marks, m);
  std::vector<std::uint64_t> elems;
  const std::uint64_t count = ipow(p, static_cast<int>(marks.size()));
  elems.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) {
    std::uint64_t x = 0;
    std::uint64_t rest = t;
    for (int l : marks) {
      x += (rest % p) * ipow(p, l);
      rest /= p;
    }
    elems.push_back(static_cast<std::uint64_t>(x));
  }
  return build_table(IndexSet(ipow(p, m), std::move(elems)), p, m, marks);
}

std::vector<int> dual_markings(const std::vector<int>& marks, int m) {
  check_marks(marks, m);
  std::vector<int> out;
  out.reserve(marks.size());
  for (auto it = marks.rbegin(); it != marks.rend(); ++it) {
    out.push_back(m - 1 - *it);
  }
  return out;
}

DigitTable construct_valid(std::uint64_t p, int m, const std::vector<int>& marks,
                           const std::vector<Digit>& prefix,
                           const std::vector<std::vector<Digit>>& maps) {
  check_marks(marks, m);
  if (marks.empty()) {
    throw std::invalid_argument("construct_valid needs at least one marked column");
  }
  const int l0 = marks.front();
  if (prefix.size() != static_cast<std::size_t>(l0)) {
    throw std::invalid_argument("prefix must fill the columns below the first mark");
  }
  for (auto d : prefix) {
    if (d >= p) throw std::invalid_argument("prefix digit out of range");
  }

  // Unmarked columns above l0, ascending, with their preceding-mark counts.
  std::vector<int> free_cols;
  std::vector<int> preceding(static_cast<std::size_t>(m), 0);
  {
    std::vector<bool> is_marked(static_cast<std::size_t>(m), false);
    for (int l : marks) is_marked[static_cast<std::size_t>(l)] = true;
    int seen = 0;
    for (int c = 0; c < m; ++c) {
      preceding[static_cast<std::size_t>(c)] = seen;
      if (is_marked[static_cast<std::size_t>(c)]) {
        ++seen;
      } else if (c > l0) {
        free_cols.push_back(c);
      }
    }
  }
  if (maps.size() != free_cols.size()) {
    throw std::invalid_argument("one dependence map per unmarked column above the first mark");
  }
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::uint64_t want = ipow(p, preceding[static_cast<std::size_t>(free_cols[i])]);
    if (maps[i].size() != want) {
      throw std::invalid_argument("dependence map has the wrong domain size");
    }
    for (auto d : maps[i]) {
      if (d >= p) throw std::invalid_argument("dependence map digit out of range");
    }
  }

  const std::uint64_t count = ipow(p, static_cast<int>(marks.size()));
  std::vector<std::uint64_t> elems;
  elems.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) {
    std::vector<Digit> row(static_cast<std::size_t>(m), 0);
    for (int c = 0; c < l0; ++c) row[static_cast<std::size_t>(c)] = prefix[static_cast<std::size_t>(c)];
    std::uint64_t rest = t;
    std::uint64_t marked_key = 0;  // sum of earlier marked digits times p^i
    std::uint64_t key_scale = 1;
    std::size_t next_free = 0;
    for (int c = 0, mk = 0; c < m; ++c) {
      if (mk < static_cast<int>(marks.size()) && marks[static_cast<std::size_t>(mk)] == c) {
        Digit d = static_cast<Digit>(rest % p);
        rest /= p;
        row[static_cast<std::size_t>(c)] = d;
        marked_key += d * key_scale;
        key_scale *= p;
        ++mk;
      } else if (c > l0) {
        row[static_cast<std::size_t>(c)] =
            maps[next_free][static_cast<std::size_t>(marked_key)];
        ++next_free;
      }
    }
    elems.push_back(static_cast<std::uint64_t>(digits_value(row, p)));
  }
  return build_table(IndexSet(ipow(p, m), std::move(elems)), p, m, marks);
}

std::uint64_t Decomposition::c_value() const { return digits_value(c, p); }

IndexSet Decomposition::recompose() const {
  std::vector<std::uint64_t> elems;
  const std::uint64_t base = c_value();
  const std::uint64_t step = ipow(p, l0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t r = 0; r < blocks[b].rows.size(); ++r) {
      elems.push_back(static_cast<std::uint64_t>(
          base + b * step + step * p * blocks[b].row_value(r)));
    }
  }
  return IndexSet(ipow(p, m), std::move(elems));
}

Decomposition decompose(const DigitTable& t) {
  if (!is_valid(t)) throw std::invalid_argument("decompose needs a valid table");
  if (t.marked.empty()) {
    throw std::invalid_argument("decompose needs at least one marked column");
  }
  const int l0 = t.marked.front();
  Decomposition out;
  out.p = t.p;
  out.m = t.m;
  out.l0 = l0;
  out.c.assign(static_cast<std::size_t>(t.m), 0);
  for (int c = 0; c < l0; ++c) {
    out.c[static_cast<std::size_t>(c)] = t.rows[0][static_cast<std::size_t>(c)];
  }

  std::vector<int> sub_marks;
  for (std::size_t k = 1; k < t.marked.size(); ++k) {
    sub_marks.push_back(t.marked[k] - l0 - 1);
  }
  const std::uint64_t base = digits_value(out.c, t.p);
  const std::uint64_t step = ipow(t.p, l0);
  const std::uint64_t sub_n = ipow(t.p, t.m - l0);
  for (std::uint64_t b = 0; b < t.p; ++b) {
    std::vector<std::uint64_t> elems;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      if (t.rows[r][static_cast<std::size_t>(l0)] != b) continue;
      std::uint64_t x = t.row_value(r);
      std::uint64_t y = (x - base - b * step) / (step * t.p);
      elems.push_back(static_cast<std::uint64_t>(y));
    }
    out.blocks.push_back(build_table(IndexSet(sub_n, std::move(elems)), t.p,
                                     t.m - l0, sub_marks));
  }
  return out;
}

std::vector<int> marking_gaps(const std::vector<int>& marks, int m) {
  check_marks(marks, m);
  std::vector<int> r;
  int prev = -1;
  for (int l : marks) {
    r.push_back(l - prev - 1);
    prev = l;
  }
  r.push_back(m - prev - 1);
  return r;
}

std::uint64_t marking_exponent(std::uint64_t p, const std::vector<int>& marks,
                               int m) {
  auto gaps = marking_gaps(marks, m);
  std::uint64_t lambda = 0;
  std::uint64_t scale = 1;
  for (auto r : gaps) {
    lambda += static_cast<std::uint64_t>(r) * scale;
    scale *= p;
  }
  return lambda;
}

std::vector<DigitTable> enumerate_valid(std::uint64_t p, int m,
                                        const std::vector<int>& marks,
                                        std::uint64_t max_tables) {
  check_marks(marks, m);
  std::uint64_t lambda = marking_exponent(p, marks, m);
  // p^lambda tables; compare in log space before materializing anything.
  {
    std::uint64_t cap = 1;
    for (std::uint64_t i = 0; i < lambda; ++i) {
      if (cap > max_tables / p) {
        throw BoundExceeded("enumerate_valid: p^" + std::to_string(lambda) +
                            " tables exceed the bound");
      }
      cap *= p;
    }
    if (cap > max_tables) {
      throw BoundExceeded("enumerate_valid: p^" + std::to_string(lambda) +
                          " tables exceed the bound");
    }
  }

  if (marks.empty()) {
    // Single-row tables, one per element of Z_(p^m), in element order.
    std::vector<DigitTable> out;
    const std::uint64_t n = ipow(p, m);
    out.reserve(n);
    for (std::uint64_t x = 0; x < n; ++x) {
      out.push_back(build_table(IndexSet(n, {static_cast<std::uint64_t>(x)}), p, m, {}));
    }
    return out;
  }

  const int l0 = marks.front();
  std::vector<int> free_cols;
  {
    std::vector<bool> is_marked(static_cast<std::size_t>(m), false);
    for (int l : marks) is_marked[static_cast<std::size_t>(l)] = true;
    for (int c = l0 + 1; c < m; ++c) {
      if (!is_marked[static_cast<std::size_t>(c)]) free_cols.push_back(c);
    }
  }
  std::vector<int> preceding;
  {
    std::vector<bool> is_marked(static_cast<std::size_t>(m), false);
    for (int l : marks) is_marked[static_cast<std::size_t>(l)] = true;
    int seen = 0;
    std::vector<int> pre(static_cast<std::size_t>(m), 0);
    for (int c = 0; c < m; ++c) {
      pre[static_cast<std::size_t>(c)] = seen;
      if (is_marked[static_cast<std::size_t>(c)]) ++seen;
    }
    for (int c : free_cols) preceding.push_back(pre[static_cast<std::size_t>(c)]);
  }

  std::vector<DigitTable> out;
  std::vector<Digit> prefix(static_cast<std::size_t>(l0), 0);
  std::vector<std::vector<Digit>> maps(free_cols.size());
  for (std::size_t i = 0; i < maps.size(); ++i) {
    maps[i].assign(static_cast<std::size_t>(ipow(p, preceding[i])), 0);
  }

  // Odometer over prefix digits (fast axis) then map entries.
  while (true) {
    out.push_back(construct_valid(p, m, marks, prefix, maps));
    std::size_t k = 0;
    for (; k < prefix.size(); ++k) {
      if (++prefix[k] < p) break;
      prefix[k] = 0;
    }
    if (k < prefix.size()) continue;
    bool carried = true;
    for (std::size_t i = 0; carried && i < maps.size(); ++i) {
      for (std::size_t e = 0; e < maps[i].size(); ++e) {
        if (++maps[i][e] < p) {
          carried = false;
          break;
        }
        maps[i][e] = 0;
      }
    }
    if (carried) break;
  }
  return out;
}

}  // namespace dftsub
