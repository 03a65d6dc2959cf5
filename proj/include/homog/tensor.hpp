#pragma once

// Words and subspaces of tensor powers of a g-dimensional space E.
//
// The basis of E^{(x)n} is indexed by length-n words over {0..g-1}, packed
// base g with the LEFTMOST letter most significant:
//   idx(a_1 ... a_n) = sum_k a_k * g^(n-k).
// With this packing, tensoring canonical reduced bases in row order
// (left factor, then row, then right factor) yields rows that are again a
// canonical reduced basis, with strictly increasing pivots -- no
// re-elimination is ever needed to embed a subspace into a larger power.

#include <cassert>
#include <cstdint>
#include <vector>

#include "homog/matrix.hpp"

namespace homog {

inline std::int64_t pow_i64(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int k = 0; k < exp; ++k) {
    assert(r <= INT64_MAX / (base > 0 ? base : 1));
    r *= base;
  }
  return r;
}

inline Col word_index(int g, const std::vector<int>& word) {
  Col idx = 0;
  for (int a : word) {
    assert(0 <= a && a < g);
    idx = idx * g + a;
  }
  return idx;
}

inline std::vector<int> index_word(int g, int length, Col idx) {
  std::vector<int> word(length);
  for (int k = length - 1; k >= 0; --k) {
    word[k] = static_cast<int>(idx % g);
    idx /= g;
  }
  assert(idx == 0);
  return word;
}

template <class F>
struct Subspace {
  F fld;
  int g;
  int length;
  Mat<F> basis;  // canonical reduced rows over g^length columns

  Subspace(F f, int g_, int length_, Mat<F> rref_basis)
      : fld(f), g(g_), length(length_), basis(std::move(rref_basis)) {
    assert(basis.ncols == pow_i64(g, length));
  }

  std::int64_t dim() const { return basis.nrows; }
  Col ambient_dim() const { return basis.ncols; }
};

template <class F>
Subspace<F> make_subspace(F fld, int g, int length, const Mat<F>& spanning) {
  return Subspace<F>(fld, g, length, rref(spanning));
}

template <class F>
Subspace<F> zero_space(F fld, int g, int length) {
  return Subspace<F>(fld, g, length, Mat<F>(fld, 0, pow_i64(g, length)));
}

template <class F>
Subspace<F> full_space(F fld, int g, int length) {
  return Subspace<F>(fld, g, length,
                     Mat<F>::identity(fld, pow_i64(g, length)));
}

// U (x) V; the basis comes out canonical by the packing property above.
template <class F>
Subspace<F> tensor_product(const Subspace<F>& u, const Subspace<F>& v) {
  assert(u.g == v.g);
  const Col vcols = v.ambient_dim();
  Mat<F> out(u.fld, u.dim() * v.dim(),
             pow_i64(u.g, u.length + v.length));
  std::int64_t r = 0;
  for (const auto& urow : u.basis.rows)
    for (const auto& vrow : v.basis.rows) {
      auto& dst = out.rows[r++];
      dst.reserve(urow.size() * vrow.size());
      for (const auto& [cu, xu] : urow)
        for (const auto& [cv, xv] : vrow)
          dst.emplace_back(cu * vcols + cv, u.fld.mul(xu, xv));
    }
  return Subspace<F>(u.fld, u.g, u.length + v.length, std::move(out));
}

// E^(x)k (x) U (x) E^(x)m
template <class F>
Subspace<F> shifted_embedding(const Subspace<F>& u, int k, int m) {
  Subspace<F> out = u;
  if (k > 0) out = tensor_product(full_space(u.fld, u.g, k), out);
  if (m > 0) out = tensor_product(out, full_space(u.fld, u.g, m));
  return out;
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
  assert(a.g == b.g && a.length == b.length);
  return Subspace<F>(a.fld, a.g, a.length, rowspace_sum(a.basis, b.basis));
}

template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
  assert(a.g == b.g && a.length == b.length);
  return Subspace<F>(a.fld, a.g, a.length,
                     rowspace_intersect(a.basis, b.basis));
}

template <class F>
bool subspace_eq(const Subspace<F>& a, const Subspace<F>& b) {
  return a.g == b.g && a.length == b.length && mat_eq(a.basis, b.basis);
}

template <class F>
bool subspace_contains(const Subspace<F>& space, const SparseRow<typename F::Elem>& row) {
  Echelon<F> e(space.fld, space.ambient_dim());
  for (const auto& r : space.basis.rows) e.adopt(r);
  return !e.insert(row);
}

// Vectors of the dual tensor power (in the dual word basis) killing every
// element of U.  No metric is involved: the pairing is coordinatewise.
template <class F>
Subspace<F> annihilator(const Subspace<F>& u) {
  return Subspace<F>(u.fld, u.g, u.length, nullspace(transpose(u.basis)));
}

}  // namespace homog
