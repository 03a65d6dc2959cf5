#pragma once

// Sparse exact linear algebra: rows are sorted (column, coeff) vectors and
// all vectors are ROW vectors.  A linear map K^m -> K^n is an m x n matrix M
// acting by x |-> x*M, so mat_mul(A, B) represents "A then B".
//
// Echelon is an incremental forward-elimination engine keyed by pivot
// column.  Rank queries never back-substitute; fully reduced rows (tails
// supported only on non-pivot columns) are materialized lazily per pivot,
// which keeps large dimension counts cheap while still giving canonical
// reduced bases when normal forms are needed.

#include <cassert>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "homog/errors.hpp"
#include "homog/field.hpp"

namespace homog {

using Col = std::int64_t;

template <class K>
using SparseRow = std::vector<std::pair<Col, K>>;  // sorted by column, no zeros

namespace detail {

// dst - coeff*src, both sorted; result sorted with zeros dropped
template <class F, class K = typename F::Elem>
SparseRow<K> row_sub_scaled(const F& fld, const SparseRow<K>& dst, const K& coeff,
                            const SparseRow<K>& src) {
  SparseRow<K> out;
  out.reserve(dst.size() + src.size());
  std::size_t a = 0, b = 0;
  while (a < dst.size() || b < src.size()) {
    if (b == src.size() || (a < dst.size() && dst[a].first < src[b].first)) {
      out.push_back(dst[a++]);
    } else if (a == dst.size() || src[b].first < dst[a].first) {
      out.emplace_back(src[b].first, fld.neg(fld.mul(coeff, src[b].second)));
      ++b;
    } else {
      K v = fld.sub(dst[a].second, fld.mul(coeff, src[b].second));
      if (!fld.is_zero(v)) out.emplace_back(dst[a].first, v);
      ++a;
      ++b;
    }
  }
  return out;
}

template <class F, class K = typename F::Elem>
void row_scale(const F& fld, SparseRow<K>& row, const K& coeff) {
  for (auto& [c, v] : row) v = fld.mul(v, coeff);
}

}  // namespace detail

template <class F>
struct Mat {
  using K = typename F::Elem;

  F fld;
  std::int64_t nrows = 0;
  Col ncols = 0;
  std::vector<SparseRow<K>> rows;

  Mat(F f, std::int64_t r, Col c) : fld(f), nrows(r), ncols(c), rows(r) {}

  static Mat zero(F f, std::int64_t r, Col c) { return Mat(f, r, c); }

  static Mat identity(F f, std::int64_t n) {
    Mat m(f, n, n);
    for (std::int64_t i = 0; i < n; ++i) m.rows[i] = {{i, f.one()}};
    return m;
  }

  static Mat from_dense(F f, const std::vector<std::vector<long long>>& d,
                        Col ncols_hint = -1) {
    std::int64_t r = static_cast<std::int64_t>(d.size());
    Col c = ncols_hint >= 0 ? ncols_hint
                            : (d.empty() ? 0 : static_cast<Col>(d[0].size()));
    Mat m(f, r, c);
    for (std::int64_t i = 0; i < r; ++i)
      for (Col j = 0; j < static_cast<Col>(d[i].size()); ++j)
        if (d[i][j] != 0) m.rows[i].emplace_back(j, f.from_int(d[i][j]));
    return m;
  }

  // accumulate v into entry (r, c), keeping the row sorted and zero-free
  void add_to(std::int64_t r, Col c, const K& v) {
    assert(r >= 0 && r < nrows && c >= 0 && c < ncols);
    if (fld.is_zero(v)) return;
    auto& row = rows[r];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const std::pair<Col, K>& e, Col col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
      it->second = fld.add(it->second, v);
      if (fld.is_zero(it->second)) row.erase(it);
    } else {
      row.insert(it, {c, v});
    }
  }

  K get(std::int64_t r, Col c) const {
    for (const auto& [col, v] : rows[r])
      if (col == c) return v;
    return fld.zero();
  }

  bool is_zero() const {
    for (const auto& row : rows)
      if (!row.empty()) return false;
    return true;
  }

  std::int64_t entry_count() const {
    std::int64_t n = 0;
    for (const auto& row : rows) n += static_cast<std::int64_t>(row.size());
    return n;
  }
};

template <class F>
bool mat_eq(const Mat<F>& a, const Mat<F>& b) {
  if (a.nrows != b.nrows || a.ncols != b.ncols) return false;
  for (std::int64_t i = 0; i < a.nrows; ++i) {
    if (a.rows[i].size() != b.rows[i].size()) return false;
    for (std::size_t k = 0; k < a.rows[i].size(); ++k) {
      if (a.rows[i][k].first != b.rows[i][k].first) return false;
      if (!a.fld.eq(a.rows[i][k].second, b.rows[i][k].second)) return false;
    }
  }
  return true;
}

template <class F>
Mat<F> mat_mul(const Mat<F>& a, const Mat<F>& b) {
  assert(a.ncols == b.nrows);
  Mat<F> out(a.fld, a.nrows, b.ncols);
  for (std::int64_t i = 0; i < a.nrows; ++i) {
    SparseRow<typename F::Elem> acc;
    for (const auto& [j, v] : a.rows[i])
      acc = detail::row_sub_scaled(a.fld, acc, a.fld.neg(v), b.rows[j]);
    out.rows[i] = std::move(acc);
  }
  return out;
}

template <class F>
Mat<F> mat_add(const Mat<F>& a, const Mat<F>& b) {
  assert(a.nrows == b.nrows && a.ncols == b.ncols);
  Mat<F> out(a.fld, a.nrows, a.ncols);
  for (std::int64_t i = 0; i < a.nrows; ++i)
    out.rows[i] = detail::row_sub_scaled(a.fld, a.rows[i],
                                         a.fld.from_int(-1), b.rows[i]);
  return out;
}

template <class F>
Mat<F> mat_sub(const Mat<F>& a, const Mat<F>& b) {
  assert(a.nrows == b.nrows && a.ncols == b.ncols);
  Mat<F> out(a.fld, a.nrows, a.ncols);
  for (std::int64_t i = 0; i < a.nrows; ++i)
    out.rows[i] = detail::row_sub_scaled(a.fld, a.rows[i], a.fld.one(),
                                         b.rows[i]);
  return out;
}

template <class F>
Mat<F> mat_scale(const Mat<F>& a, const typename F::Elem& k) {
  Mat<F> out = a;
  if (a.fld.is_zero(k)) return Mat<F>::zero(a.fld, a.nrows, a.ncols);
  for (auto& row : out.rows) detail::row_scale(a.fld, row, k);
  return out;
}

template <class F>
Mat<F> transpose(const Mat<F>& a) {
  Mat<F> out(a.fld, a.ncols, a.nrows);
  for (std::int64_t i = 0; i < a.nrows; ++i)
    for (const auto& [c, v] : a.rows[i]) out.rows[c].emplace_back(i, v);
  return out;  // rows come out sorted because i increases
}

// ---------------------------------------------------------------------------

template <class F>
class Echelon {
 public:
  using K = typename F::Elem;

  Echelon(F fld, Col ncols) : fld_(fld), ncols_(ncols) {}

  Col ncols() const { return ncols_; }
  std::int64_t rank() const { return static_cast<std::int64_t>(rows_.size()); }

  // Reduce `row` against the current triangular set; if a nonzero remainder
  // survives, normalize it on its first entry and store it.  Returns true
  // when the rank grew.
  bool insert(SparseRow<K> row) {
    row = remainder(std::move(row));
    if (row.empty()) return false;
    adopt(std::move(row));
    return true;
  }

  // Store a row whose first entry is a fresh pivot, skipping reduction.
  // Caller guarantees the pivot column is unused; the stored set stays
  // triangular, which is all that insert()/reduced_row() rely on.
  void adopt(SparseRow<K> row) {
    assert(!row.empty());
    const Col pivot = row[0].first;
    assert(!rows_.count(pivot));
    if (!fld_.eq(row[0].second, fld_.one()))
      detail::row_scale(fld_, row, fld_.inv(row[0].second));
    reduced_.clear();
    rows_.emplace(pivot, std::move(row));
  }

  bool has_pivot(Col c) const { return rows_.count(c) != 0; }

  // Forward reduction only; the engine is left untouched.  An empty
  // remainder means the row already lies in the span.
  SparseRow<K> remainder(SparseRow<K> row) const {
    while (!row.empty()) {
      auto it = rows_.find(row[0].first);
      if (it == rows_.end()) break;
      row = detail::row_sub_scaled(fld_, row, row[0].second, it->second);
    }
    return row;
  }

  // Triangular (not mutually reduced) stored rows, keyed by pivot.
  const std::map<Col, SparseRow<K>>& raw_rows() const { return rows_; }

  std::vector<Col> pivots() const {
    std::vector<Col> out;
    out.reserve(rows_.size());
    for (const auto& [p, row] : rows_) out.push_back(p);
    return out;
  }

  std::vector<Col> nonpivots() const {
    std::vector<Col> out;
    auto it = rows_.begin();
    for (Col c = 0; c < ncols_; ++c) {
      if (it != rows_.end() && it->first == c)
        ++it;
      else
        out.push_back(c);
    }
    return out;
  }

  // Fully reduced row for a pivot: tail supported only on non-pivot columns.
  // Materialized lazily, in decreasing pivot order, so each reduction step
  // only ever needs already-final rows.
  const SparseRow<K>& reduced_row(Col pivot) const {
    auto hit = reduced_.find(pivot);
    if (hit != reduced_.end()) return hit->second;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      const Col p = it->first;
      if (reduced_.count(p)) continue;
      SparseRow<K> acc = it->second;
      std::vector<std::pair<Col, K>> todo;
      for (std::size_t k = 1; k < acc.size(); ++k)
        if (rows_.count(acc[k].first)) todo.push_back(acc[k]);
      for (const auto& [c, v] : todo)
        acc = detail::row_sub_scaled(fld_, acc, v, reduced_.at(c));
      reduced_.emplace(p, std::move(acc));
      if (p == pivot) break;
    }
    return reduced_.at(pivot);
  }

  // Canonical reduced basis of the row space, ordered by pivot.
  Mat<F> rref() const {
    Mat<F> out(fld_, rank(), ncols_);
    std::int64_t i = 0;
    for (const auto& [p, row] : rows_) out.rows[i++] = reduced_row(p);
    return out;
  }

 private:
  F fld_;
  Col ncols_;
  std::map<Col, SparseRow<K>> rows_;
  mutable std::map<Col, SparseRow<K>> reduced_;
};

template <class F>
std::int64_t rank(const Mat<F>& m) {
  Echelon<F> e(m.fld, m.ncols);
  for (const auto& row : m.rows) e.insert(row);
  return e.rank();
}

template <class F>
Mat<F> rref(const Mat<F>& m) {
  Echelon<F> e(m.fld, m.ncols);
  for (const auto& row : m.rows) e.insert(row);
  return e.rref();
}

// Basis of the left kernel {x in K^m : x*M = 0}, as canonical reduced rows.
// Eliminates [M | I]; a combination landing at a pivot >= ncols has zero
// M-part, and its identity-part records the combination itself.
template <class F>
Mat<F> nullspace(const Mat<F>& m) {
  using K = typename F::Elem;
  Echelon<F> e(m.fld, m.ncols + m.nrows);
  for (std::int64_t i = 0; i < m.nrows; ++i) {
    SparseRow<K> row = m.rows[i];
    row.emplace_back(m.ncols + i, m.fld.one());
    e.insert(std::move(row));
  }
  Echelon<F> kernel(m.fld, m.nrows);
  for (Col p : e.pivots()) {
    if (p < m.ncols) continue;
    SparseRow<K> tail;
    for (const auto& [c, v] : e.reduced_row(p)) tail.emplace_back(c - m.ncols, v);
    kernel.insert(std::move(tail));
  }
  return kernel.rref();
}

// Inverse of a square matrix via elimination of [M | I]; the reduced rows
// are [I | M^-1].  Throws when M is singular.
template <class F>
Mat<F> mat_inverse(const Mat<F>& m) {
  using K = typename F::Elem;
  assert(m.nrows == m.ncols);
  const Col n = m.ncols;
  Echelon<F> e(m.fld, 2 * n);
  for (std::int64_t i = 0; i < m.nrows; ++i) {
    SparseRow<K> row = m.rows[i];
    row.emplace_back(n + i, m.fld.one());
    e.insert(std::move(row));
  }
  for (Col p = 0; p < n; ++p)
    if (!e.has_pivot(p)) throw error("matrix is singular");
  Mat<F> out(m.fld, n, n);
  for (Col p = 0; p < n; ++p)
    for (const auto& [c, v] : e.reduced_row(p))
      if (c >= n) out.rows[p].emplace_back(c - n, v);
  return out;
}

// Coordinates with respect to a fixed independent row set: eliminates
// [B | I] once, then coords(v) reduces [v | 0] and reads the combination
// off the tracking half.  Throws when the rows are dependent or v is
// outside their span.
template <class F>
class CoordSolver {
 public:
  using K = typename F::Elem;

  explicit CoordSolver(const Mat<F>& basis)
      : fld_(basis.fld), n_(basis.ncols), e_(basis.fld, basis.ncols + basis.nrows) {
    for (std::int64_t i = 0; i < basis.nrows; ++i) {
      SparseRow<K> row = basis.rows[i];
      row.emplace_back(n_ + i, fld_.one());
      if (!e_.insert(std::move(row)) || e_.pivots().back() >= n_)
        throw error("basis rows are linearly dependent");
    }
  }

  SparseRow<K> coords(const SparseRow<K>& v) const {
    SparseRow<K> rem = e_.remainder(v);
    if (!rem.empty() && rem[0].first < n_)
      throw error("vector lies outside the spanned subspace");
    SparseRow<K> out;
    out.reserve(rem.size());
    for (const auto& [c, x] : rem) out.emplace_back(c - n_, fld_.neg(x));
    return out;
  }

 private:
  F fld_;
  Col n_;
  Echelon<F> e_;
};

template <class F>
Mat<F> rowspace_sum(const Mat<F>& a, const Mat<F>& b) {
  assert(a.ncols == b.ncols);
  Echelon<F> e(a.fld, a.ncols);
  for (const auto& row : a.rows) e.insert(row);
  for (const auto& row : b.rows) e.insert(row);
  return e.rref();
}

// Zassenhaus: eliminate [a|a] stacked over [b|0]; rows pivoted in the right
// half have zero left half and right halves spanning rowspace(a)^rowspace(b).
template <class F>
Mat<F> rowspace_intersect(const Mat<F>& a, const Mat<F>& b) {
  using K = typename F::Elem;
  assert(a.ncols == b.ncols);
  const Col n = a.ncols;
  Echelon<F> e(a.fld, 2 * n);
  for (const auto& row : a.rows) {
    SparseRow<K> wide = row;
    for (const auto& [c, v] : row) wide.emplace_back(n + c, v);
    e.insert(std::move(wide));
  }
  for (const auto& row : b.rows) e.insert(row);
  Echelon<F> meet(a.fld, n);
  for (Col p : e.pivots()) {
    if (p < n) continue;
    SparseRow<K> right;
    for (const auto& [c, v] : e.reduced_row(p)) {
      assert(c >= n);
      right.emplace_back(c - n, v);
    }
    meet.insert(std::move(right));
  }
  return meet.rref();
}

}  // namespace homog
