#pragma once

// Finite chain/cochain complexes attached to a graded algebra, sliced by
// internal degree.  Every complex here lives on components of the form
//   A_u (x) W_nu,   W_nu = the degree-nu component of the dual algebra
// realized inside E^(x)nu, with the pair index packed A-major:
//   (alpha, r) |-> alpha * dim W + r.
//
// All differentials are assembled from four single-letter "strip" moves.
// Writing w in W_nu as  w = sum_a e_a (x) u_a  (leading letter) or
// w = sum_a v_a (x) e_a (trailing letter), the slices u_a, v_a land back in
// W_{nu-1}, and the moves are
//   step_lead_right :  x (x) w  |->  sum_a (x . x_a) (x) u_a
//   step_trail_left :  x (x) w  |->  sum_a (x_a . x) (x) v_a
// plus the two adjoint moves used by cochain complexes, where the stripped
// letter multiplies on the other side:
//   costep_lead_left / costep_trail_right.
// Chain differentials compose strips downward in nu; boundary-squared is
// asserted on every slice at construction time.

#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "homog/algebra.hpp"

namespace homog {

// ---------------------------------------------------------------------------
// Slice containers

// Chain complex slice: dims[k] for homological degrees 0..top, diffs[k] the
// boundary map space_k -> space_{k-1} for k >= 1 (diffs[0] is a placeholder
// with zero columns).
template <class F>
struct ComplexSlice {
  int internal_degree = 0;
  std::vector<std::int64_t> dims;
  std::vector<Mat<F>> diffs;
};

// Cochain complex slice: ups[k] maps space_{k-1} -> space_k for k >= 1.
template <class F>
struct CochainSlice {
  int label = 0;  // internal-degree label of the slice
  std::vector<std::int64_t> dims;
  std::vector<Mat<F>> ups;
};

template <class F>
void validate_slice(const ComplexSlice<F>& s) {
  const int top = static_cast<int>(s.dims.size()) - 1;
  assert(static_cast<int>(s.diffs.size()) == top + 1);
  for (int k = 1; k <= top; ++k) {
    assert(s.diffs[k].nrows == s.dims[k]);
    assert(s.diffs[k].ncols == s.dims[k - 1]);
    if (k >= 2) assert(mat_mul(s.diffs[k], s.diffs[k - 1]).is_zero());
  }
}

template <class F>
void validate_slice(const CochainSlice<F>& s) {
  const int top = static_cast<int>(s.dims.size()) - 1;
  assert(static_cast<int>(s.ups.size()) == top + 1);
  for (int k = 1; k <= top; ++k) {
    assert(s.ups[k].nrows == s.dims[k - 1]);
    assert(s.ups[k].ncols == s.dims[k]);
    if (k >= 2) assert(mat_mul(s.ups[k - 1], s.ups[k]).is_zero());
  }
}

// dim H_k = dim ker d_k - rank d_{k+1}; a nonzero composite is a
// construction bug and is reported as a hard error.
template <class F>
std::vector<std::int64_t> homology_dims(const ComplexSlice<F>& s) {
  const int top = static_cast<int>(s.dims.size()) - 1;
  std::vector<std::int64_t> rk(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    if (k >= 2 && !mat_mul(s.diffs[k], s.diffs[k - 1]).is_zero())
      throw error("boundary composite is nonzero at homological degree " +
                  std::to_string(k));
    rk[k] = rank(s.diffs[k]);
  }
  std::vector<std::int64_t> h(top + 1);
  for (int k = 0; k <= top; ++k) {
    h[k] = (s.dims[k] - rk[k]) - rk[k + 1];
    assert(h[k] >= 0);
  }
  return h;
}

// dim H^k = dim ker(up to k+1) - rank(up from k-1)
template <class F>
std::vector<std::int64_t> cohomology_dims(const CochainSlice<F>& s) {
  const int top = static_cast<int>(s.dims.size()) - 1;
  std::vector<std::int64_t> rk(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    if (k >= 2 && !mat_mul(s.ups[k - 1], s.ups[k]).is_zero())
      throw error("cochain composite is nonzero at degree " +
                  std::to_string(k));
    rk[k] = rank(s.ups[k]);
  }
  std::vector<std::int64_t> h(top + 1);
  for (int k = 0; k <= top; ++k) {
    h[k] = (s.dims[k] - rk[k + 1]) - rk[k];
    assert(h[k] >= 0);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Dual-component table with selectable bases and strip coordinates

template <class F>
class WTable {
 public:
  using K = typename F::Elem;

  // terms[r] is a sparse row over the packed column a * dim W_{nu-1} + i:
  // the coefficient of (letter a, target basis element i).
  using Strips = std::vector<SparseRow<K>>;

  explicit WTable(GradedAlgebra<F>& alg) : alg_(&alg) {}

  GradedAlgebra<F>& algebra() { return *alg_; }
  const F& field() const { return alg_->field(); }
  int generators() const { return alg_->generators(); }

  const Mat<F>& basis(int nu) {
    auto it = bases_.find(nu);
    if (it == bases_.end())
      it = bases_.emplace(nu, alg_->dual_component(nu).basis).first;
    return it->second;
  }

  std::int64_t dim(int nu) { return basis(nu).nrows; }

  // Replace the stored basis of W_nu by `rows` (same span, independent).
  void override_basis(int nu, const Mat<F>& rows) {
    if (rank(rows) != rows.nrows)
      throw error("override basis rows are dependent");
    const auto& current = basis(nu);
    if (rows.ncols != current.ncols || rows.nrows != current.nrows ||
        !mat_eq(rref(rows), rref(current)))
      throw error("override basis does not span the dual component");
    bases_.at(nu) = rows;
    lead_.erase(nu);
    trail_.erase(nu);
    lead_.erase(nu + 1);  // strips into nu solve against its basis
    trail_.erase(nu + 1);
    solvers_.erase(nu);
  }

  // leading-letter strip coordinates of W_nu in W_{nu-1}
  const Strips& leading(int nu) { return strips(nu, /*lead=*/true); }
  // trailing-letter strip coordinates
  const Strips& trailing(int nu) { return strips(nu, /*lead=*/false); }

 private:
  const CoordSolver<F>& solver(int nu) {
    auto it = solvers_.find(nu);
    if (it == solvers_.end())
      it = solvers_.emplace(nu, std::make_unique<CoordSolver<F>>(basis(nu)))
               .first;
    return *it->second;
  }

  const Strips& strips(int nu, bool lead) {
    assert(nu >= 1);
    auto& store = lead ? lead_ : trail_;
    auto it = store.find(nu);
    if (it != store.end()) return it->second;

    const F& fld = field();
    const int g = generators();
    const Col tail_words = pow_i64(g, nu - 1);
    const std::int64_t wpred = dim(nu - 1);
    const auto& rows = basis(nu).rows;
    Strips out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::map<int, SparseRow<K>> slices;  // letter -> stripped vector
      for (const auto& [c, v] : rows[r]) {
        const int a = static_cast<int>(lead ? c / tail_words : c % g);
        const Col rest = lead ? c % tail_words : c / g;
        slices[a].emplace_back(rest, v);
      }
      // either slicing visits the rest-words in increasing order, so the
      // grouped vectors are already sorted
      Mat<F> acc(fld, 1, g * wpred);
      for (const auto& [a, vec] : slices)
        for (const auto& [i, v] : solver(nu - 1).coords(vec))
          acc.add_to(0, static_cast<Col>(a) * wpred + i, v);
      out[r] = std::move(acc.rows[0]);
    }
    return store.emplace(nu, std::move(out)).first->second;
  }

  GradedAlgebra<F>* alg_;
  std::map<int, Mat<F>> bases_;
  std::map<int, Strips> lead_, trail_;
  std::map<int, std::unique_ptr<CoordSolver<F>>> solvers_;
};

// ---------------------------------------------------------------------------
// Single-strip slice matrices

namespace detail {

template <class F>
Mat<F> strip_step(WTable<F>& W, int u, int nu, bool lead, bool act_left) {
  auto& alg = W.algebra();
  const std::int64_t wsrc = W.dim(nu), wdst = W.dim(nu - 1);
  Mat<F> out(W.field(), alg.dim(u) * wsrc, alg.dim(u + 1) * wdst);
  if (out.nrows == 0 || out.ncols == 0) return out;
  const auto& strips = lead ? W.leading(nu) : W.trailing(nu);
  for (std::int64_t r = 0; r < wsrc; ++r) {
    for (const auto& [packed, coeff] : strips[r]) {
      const int a = static_cast<int>(packed / wdst);
      const Col i = packed % wdst;
      const Mat<F>& mult = act_left ? alg.left_mult(a, u) : alg.right_mult(a, u);
      for (std::int64_t alpha = 0; alpha < mult.nrows; ++alpha)
        for (const auto& [beta, v] : mult.rows[alpha])
          out.add_to(alpha * wsrc + r, beta * wdst + i,
                     W.field().mul(coeff, v));
    }
  }
  return out;
}

template <class F>
Mat<F> costrip_step(WTable<F>& W, int u, int nu, bool lead, bool act_left) {
  auto& alg = W.algebra();
  const std::int64_t wsrc = W.dim(nu - 1), wdst = W.dim(nu);
  Mat<F> out(W.field(), alg.dim(u) * wsrc, alg.dim(u + 1) * wdst);
  if (out.nrows == 0 || out.ncols == 0) return out;
  const auto& strips = lead ? W.leading(nu) : W.trailing(nu);
  for (std::int64_t r = 0; r < wdst; ++r) {
    for (const auto& [packed, coeff] : strips[r]) {
      const int a = static_cast<int>(packed / wsrc);
      const Col i = packed % wsrc;
      const Mat<F>& mult = act_left ? alg.left_mult(a, u) : alg.right_mult(a, u);
      for (std::int64_t alpha = 0; alpha < mult.nrows; ++alpha)
        for (const auto& [beta, v] : mult.rows[alpha])
          out.add_to(alpha * wsrc + i, beta * wdst + r,
                     W.field().mul(coeff, v));
    }
  }
  return out;
}

}  // namespace detail

// A_u (x) W_nu -> A_{u+1} (x) W_{nu-1},  x (x) w |-> (x . lead) (x) rest
template <class F>
Mat<F> step_lead_right(WTable<F>& W, int u, int nu) {
  return detail::strip_step(W, u, nu, true, false);
}

// x (x) w |-> (trail . x) (x) rest
template <class F>
Mat<F> step_trail_left(WTable<F>& W, int u, int nu) {
  return detail::strip_step(W, u, nu, false, true);
}

// adjoint moves: A_u (x) W_{nu-1} -> A_{u+1} (x) W_nu
template <class F>
Mat<F> costep_lead_left(WTable<F>& W, int u, int nu) {
  return detail::costrip_step(W, u, nu, true, true);
}

template <class F>
Mat<F> costep_trail_right(WTable<F>& W, int u, int nu) {
  return detail::costrip_step(W, u, nu, false, false);
}

// ---------------------------------------------------------------------------
// Contractions of the left N-complex, and the Koszul complex among them

// word-length of the dual component at homological degree k
inline int koszul_nu(int N, int k) { return N * (k / 2) + (k % 2); }

inline int contraction_nu(int N, int p, int r, int k) {
  return N * (k / 2) + r + (k % 2) * (N - p);
}

namespace detail {

// boundary from (t - nu_hi) (x) W_{nu_hi} down to W_{nu_lo}, as a composite
// of single leading strips
template <class F>
Mat<F> chain_drop(WTable<F>& W, int t, int nu_hi, int nu_lo) {
  auto& alg = W.algebra();
  Mat<F> acc = step_lead_right(W, t - nu_hi, nu_hi);
  for (int nu = nu_hi - 1; nu > nu_lo; --nu)
    acc = mat_mul(acc, step_lead_right(W, t - nu, nu));
  assert(acc.ncols == alg.dim(t - nu_lo) * W.dim(nu_lo));
  return acc;
}

template <class F>
ComplexSlice<F> slice_from_nu(WTable<F>& W, int t,
                              const std::vector<int>& nu_of_k) {
  auto& alg = W.algebra();
  ComplexSlice<F> s;
  s.internal_degree = t;
  int top = -1;
  for (int k = 0; k < static_cast<int>(nu_of_k.size()); ++k) {
    if (nu_of_k[k] > t || W.dim(nu_of_k[k]) == 0) break;
    top = k;
  }
  for (int k = 0; k <= top; ++k)
    s.dims.push_back(alg.dim(t - nu_of_k[k]) * W.dim(nu_of_k[k]));
  if (top >= 0) s.diffs.emplace_back(Mat<F>(W.field(), s.dims[0], 0));
  for (int k = 1; k <= top; ++k)
    s.diffs.push_back(chain_drop(W, t, nu_of_k[k], nu_of_k[k - 1]));
  validate_slice(s);
  return s;
}

}  // namespace detail

template <class F>
ComplexSlice<F> contraction_slice(WTable<F>& W, int p, int r, int t) {
  const int N = W.algebra().degree();
  if (!(0 <= r && r < p && p <= N - 1))
    throw error("contraction parameters must satisfy 0 <= r < p <= N-1");
  std::vector<int> nu;
  for (int k = 0; contraction_nu(N, p, r, k) <= t; ++k)
    nu.push_back(contraction_nu(N, p, r, k));
  if (nu.empty()) nu.push_back(r);  // degenerate slice below the first space
  return detail::slice_from_nu(W, t, nu);
}

template <class F>
ComplexSlice<F> koszul_slice(WTable<F>& W, int t) {
  const int N = W.algebra().degree();
  std::vector<int> nu;
  for (int k = 0; koszul_nu(N, k) <= t; ++k) nu.push_back(koszul_nu(N, k));
  if (nu.empty()) nu.push_back(0);
  return detail::slice_from_nu(W, t, nu);
}

template <class F>
std::vector<ComplexSlice<F>> koszul_slices(WTable<F>& W, int cap) {
  std::vector<ComplexSlice<F>> out;
  for (int t = 0; t <= cap; ++t) out.push_back(koszul_slice(W, t));
  return out;
}

template <class F>
std::vector<ComplexSlice<F>> contraction_slices(WTable<F>& W, int p, int r,
                                                int cap) {
  std::vector<ComplexSlice<F>> out;
  for (int t = 0; t <= cap; ++t) out.push_back(contraction_slice(W, p, r, t));
  return out;
}

// Right multiplication by a matrix of homogeneous elements: the map
// (A_u)^rows -> (A_{u+deg})^cols, pair index A-major on both sides.  The
// resolution's middle boundary must equal this for the family matrices.
template <class F>
Mat<F> right_mult_block(GradedAlgebra<F>& alg,
                        const std::vector<std::vector<AlgebraElement<F>>>& mm,
                        int entry_degree, int u) {
  const std::int64_t nr = static_cast<std::int64_t>(mm.size());
  const std::int64_t nc = nr ? static_cast<std::int64_t>(mm[0].size()) : 0;
  Mat<F> out(alg.field(), alg.dim(u) * nr, alg.dim(u + entry_degree) * nc);
  for (std::int64_t j = 0; j < nr; ++j)
    for (std::int64_t l = 0; l < nc; ++l) {
      assert(mm[j][l].degree == entry_degree || mm[j][l].words.empty());
      Mat<F> m = alg.right_mult_by(mm[j][l], u);
      for (std::int64_t alpha = 0; alpha < m.nrows; ++alpha)
        for (const auto& [beta, v] : m.rows[alpha])
          out.add_to(alpha * nr + j, beta * nc + l, v);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Small Hochschild complex, coefficients in the algebra itself

namespace detail {

// One boundary of the small complex.  Odd boundaries (one strip) are
// lead-right minus trail-left; even boundaries sum, without signs, every
// way to split the N-1 strips into leading letters (multiplying on the
// right) and trailing letters (multiplying on the left).  The parity is
// passed explicitly: for quadratic algebras both boundaries strip a single
// letter and differ only in the sign pattern.
template <class F>
Mat<F> hochschild_drop(WTable<F>& W, int t, int nu_hi, int nu_lo, bool odd) {
  auto& alg = W.algebra();
  const int steps = nu_hi - nu_lo;
  assert(!odd || steps == 1);
  const F& fld = W.field();
  Mat<F> total(fld, alg.dim(t - nu_hi) * W.dim(nu_hi),
               alg.dim(t - nu_lo) * W.dim(nu_lo));
  for (int p = 0; p <= steps; ++p) {
    // trail-side strips first, then lead-side; the two moves commute,
    // which the bimodule tests check separately
    Mat<F> acc(fld, 0, 0);
    bool first = true;
    for (int j = 0; j < steps; ++j) {
      const int nu = nu_hi - j;
      const int u = t - nu;
      Mat<F> stepm = (j < steps - p) ? step_trail_left(W, u, nu)
                                     : step_lead_right(W, u, nu);
      acc = first ? std::move(stepm) : mat_mul(acc, stepm);
      first = false;
    }
    if (odd && p == 0) acc = mat_scale(acc, fld.from_int(-1));
    total = mat_add(total, acc);
  }
  return total;
}

}  // namespace detail

// slice of internal degree t: components A_{t-nu(k)} (x) W_{nu(k)} with the
// Koszul nu-pattern; odd boundaries are lead-right minus trail-left, even
// boundaries the full alternating sum over N-1 strips
template <class F>
ComplexSlice<F> small_hochschild_slice(WTable<F>& W, int t) {
  auto& alg = W.algebra();
  const int N = alg.degree();
  if (N != 2 && N != 3)
    throw error("small Hochschild complex implemented for degrees 2 and 3");
  ComplexSlice<F> s;
  s.internal_degree = t;
  int top = -1;
  for (int k = 0; koszul_nu(N, k) <= t && W.dim(koszul_nu(N, k)) > 0; ++k)
    top = k;
  for (int k = 0; k <= top; ++k)
    s.dims.push_back(alg.dim(t - koszul_nu(N, k)) * W.dim(koszul_nu(N, k)));
  if (top >= 0) s.diffs.emplace_back(Mat<F>(W.field(), s.dims[0], 0));
  for (int k = 1; k <= top; ++k)
    s.diffs.push_back(detail::hochschild_drop(
        W, t, koszul_nu(N, k), koszul_nu(N, k - 1), k % 2 == 1));
  validate_slice(s);
  return s;
}

template <class F>
std::vector<ComplexSlice<F>> small_hochschild_slices(WTable<F>& W, int cap) {
  std::vector<ComplexSlice<F>> out;
  for (int t = 0; t <= cap; ++t) out.push_back(small_hochschild_slice(W, t));
  return out;
}

// ---------------------------------------------------------------------------
// Hochschild cochain complex (module actions swapped, maps transposed)

// top cohomological degree: the last k whose dual component is nonzero
template <class F>
int cochain_top(WTable<F>& W, int max_k = 32) {
  const int N = W.algebra().degree();
  int top = 0;
  while (W.dim(koszul_nu(N, top + 1)) > 0) {
    ++top;
    if (top > max_k)
      throw error("dual components do not vanish; cochain complex is unbounded");
  }
  return top;
}

namespace detail {

// adjoint of hochschild_drop: the stripped letters multiply on the other
// side (leading letters act on the left, trailing on the right)
template <class F>
Mat<F> cochain_lift(WTable<F>& W, int label, int nu_lo, int nu_hi, bool odd) {
  auto& alg = W.algebra();
  const int steps = nu_hi - nu_lo;
  assert(!odd || steps == 1);
  const F& fld = W.field();
  Mat<F> total(fld, alg.dim(label + nu_lo) * W.dim(nu_lo),
               alg.dim(label + nu_hi) * W.dim(nu_hi));
  for (int p = 0; p <= steps; ++p) {
    Mat<F> acc(fld, 0, 0);
    bool first = true;
    for (int j = 0; j < steps; ++j) {
      const int nu = nu_lo + j + 1;
      const int u = label + nu - 1;
      // adjoint order: the lead-side factors act first, then the trail side
      Mat<F> stepm = (j < p) ? costep_lead_left(W, u, nu)
                             : costep_trail_right(W, u, nu);
      acc = first ? std::move(stepm) : mat_mul(acc, stepm);
      first = false;
    }
    if (odd && p == 0) acc = mat_scale(acc, fld.from_int(-1));
    total = mat_add(total, acc);
  }
  return total;
}

}  // namespace detail

// slice with label u: components C^k = A_{u+nu(k)} (x) W_{nu(k)}^*; the label
// may be negative down to -nu(top)
template <class F>
CochainSlice<F> hochschild_cochain_slice(WTable<F>& W, int u) {
  auto& alg = W.algebra();
  const int N = alg.degree();
  if (N != 2 && N != 3)
    throw error("Hochschild cochain complex implemented for degrees 2 and 3");
  const int top = cochain_top(W);
  CochainSlice<F> s;
  s.label = u;
  for (int k = 0; k <= top; ++k) {
    const int nu = koszul_nu(N, k);
    s.dims.push_back(u + nu < 0 ? 0 : alg.dim(u + nu) * W.dim(nu));
  }
  s.ups.emplace_back(Mat<F>(W.field(), 0, s.dims[0]));
  for (int k = 1; k <= top; ++k) {
    const int lo = koszul_nu(N, k - 1), hi = koszul_nu(N, k);
    if (s.dims[k - 1] == 0 || s.dims[k] == 0)
      s.ups.emplace_back(Mat<F>(W.field(), s.dims[k - 1], s.dims[k]));
    else
      s.ups.push_back(detail::cochain_lift(W, u, lo, hi, k % 2 == 1));
  }
  validate_slice(s);
  return s;
}

// ---------------------------------------------------------------------------
// Cochain complex of the left resolution (the Gorenstein test complex)

// slice m >= 0, components L^n = A_{m - nu(D) + nu(n)} (x) W_{nu(n)}^* for
// n = 0..D; the coboundary left-multiplies coefficients by the strip words
template <class F>
CochainSlice<F> l_cochain_slice(WTable<F>& W, int D, int m) {
  auto& alg = W.algebra();
  const int N = alg.degree();
  if (D < 1 || W.dim(koszul_nu(N, D)) == 0 ||
      W.dim(koszul_nu(N, D + 1)) != 0)
    throw error("expected global dimension does not match the dual vanishing");
  const int shift = koszul_nu(N, D);
  CochainSlice<F> s;
  s.label = m;
  for (int n = 0; n <= D; ++n) {
    const int nu = koszul_nu(N, n);
    const int u = m - shift + nu;
    s.dims.push_back(u < 0 ? 0 : alg.dim(u) * W.dim(nu));
  }
  s.ups.emplace_back(Mat<F>(W.field(), 0, s.dims[0]));
  for (int n = 1; n <= D; ++n) {
    const int lo = koszul_nu(N, n - 1), hi = koszul_nu(N, n);
    if (s.dims[n - 1] == 0 || s.dims[n] == 0) {
      s.ups.emplace_back(Mat<F>(W.field(), s.dims[n - 1], s.dims[n]));
      continue;
    }
    const int base = m - shift;
    Mat<F> acc = costep_lead_left(W, base + lo, lo + 1);
    for (int nu = lo + 2; nu <= hi; ++nu)
      acc = mat_mul(acc, costep_lead_left(W, base + nu - 1, nu));
    s.ups.push_back(std::move(acc));
  }
  validate_slice(s);
  return s;
}

// ---------------------------------------------------------------------------
// Bimodule boundary structure constants (cubic case)

// One summand of a bimodule boundary applied to a source basis element:
// coeff . (left word) (x) b_dst (x) (right word), the words multiplying the
// two module slots in the written order.
template <class F>
struct BimodTerm {
  std::int64_t dst = 0;
  std::vector<int> left_word, right_word;
  typename F::Elem coeff;
};

template <class F>
struct BimoduleDifferentialData {
  // terms[k][r]: expansion of boundary k on source basis element r;
  // k = 1 (W_1 -> W_0), 2 (W_N -> W_1), 3 (W_{N+1} -> W_N)
  std::array<std::vector<std::vector<BimodTerm<F>>>, 4> terms;
};

namespace detail {

template <class F>
std::vector<std::vector<BimodTerm<F>>> canonical_terms(
    const F& fld,
    const std::vector<std::vector<BimodTerm<F>>>& raw) {
  std::vector<std::vector<BimodTerm<F>>> out(raw.size());
  for (std::size_t r = 0; r < raw.size(); ++r) {
    std::map<std::tuple<std::int64_t, std::vector<int>, std::vector<int>>,
             typename F::Elem>
        acc;
    for (const auto& tm : raw[r]) {
      auto key = std::make_tuple(tm.dst, tm.left_word, tm.right_word);
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, tm.coeff);
      else
        it->second = fld.add(it->second, tm.coeff);
    }
    for (const auto& [key, v] : acc)
      if (!fld.is_zero(v))
        out[r].push_back(
            {std::get<0>(key), std::get<1>(key), std::get<2>(key), v});
  }
  return out;
}

}  // namespace detail

// Structure constants of the three bimodule boundaries of a cubic algebra,
// over the bases currently stored in the table.
template <class F>
BimoduleDifferentialData<F> bimodule_differential_data(WTable<F>& W) {
  using K = typename F::Elem;
  const int N = W.algebra().degree();
  if (N != 3) throw error("bimodule structure constants are cubic-only");
  const F& fld = W.field();

  auto single = [&](int nu) {
    const std::int64_t wdst = W.dim(nu - 1);
    std::vector<std::vector<BimodTerm<F>>> out(W.dim(nu));
    for (std::int64_t r = 0; r < W.dim(nu); ++r) {
      for (const auto& [packed, v] : W.leading(nu)[r])
        out[r].push_back({packed % wdst,
                          {static_cast<int>(packed / wdst)},
                          {},
                          v});
      for (const auto& [packed, v] : W.trailing(nu)[r])
        out[r].push_back({packed % wdst,
                          {},
                          {static_cast<int>(packed / wdst)},
                          fld.neg(v)});
    }
    return detail::canonical_terms(fld, out);
  };

  BimoduleDifferentialData<F> data;
  data.terms[1] = single(1);
  data.terms[3] = single(N + 1);

  // even boundary W_N -> W_1: two strips, split p leading / 2-p trailing
  const std::int64_t wmid = W.dim(N - 1), wdst = W.dim(1);
  std::vector<std::vector<BimodTerm<F>>> raw(W.dim(N));
  for (std::int64_t r = 0; r < W.dim(N); ++r) {
    auto expand = [&](const SparseRow<K>& first, bool first_lead,
                      bool second_lead) {
      for (const auto& [p1, v1] : first) {
        const int a1 = static_cast<int>(p1 / wmid);
        const std::int64_t mid = p1 % wmid;
        const auto& second = second_lead ? W.leading(N - 1)[mid]
                                         : W.trailing(N - 1)[mid];
        for (const auto& [p2, v2] : second) {
          const int a2 = static_cast<int>(p2 / wdst);
          BimodTerm<F> tm;
          tm.dst = p2 % wdst;
          tm.coeff = fld.mul(v1, v2);
          if (first_lead) tm.left_word.push_back(a1);
          else tm.right_word.push_back(a1);
          if (second_lead) tm.left_word.push_back(a2);
          else {
            // a later trailing strip sits to the left of an earlier one
            tm.right_word.insert(tm.right_word.begin(), a2);
          }
          raw[r].push_back(std::move(tm));
        }
      }
    };
    // p = 2: two leading strips
    expand(W.leading(N)[r], true, true);
    // p = 1: one trailing strip, then one leading strip
    expand(W.trailing(N)[r], false, true);
    // p = 0: two trailing strips
    expand(W.trailing(N)[r], false, false);
  }
  data.terms[2] = detail::canonical_terms(fld, raw);
  return data;
}

// ---------------------------------------------------------------------------
// Slices of the bimodule N-complex (A (x) W_nu (x) A)

// degree-t component of A (x) W_nu (x) A: blocks by left degree i, block
// index (alpha * dim W + r) * dim A_j + beta with j = t - nu - i
template <class F>
std::int64_t bimodule_component_dim(WTable<F>& W, int t, int nu) {
  auto& alg = W.algebra();
  if (nu > t || W.dim(nu) == 0) return 0;
  std::int64_t total = 0;
  for (int i = 0; i + nu <= t; ++i)
    total += alg.dim(i) * W.dim(nu) * alg.dim(t - nu - i);
  return total;
}

namespace detail {

template <class F>
Mat<F> bimodule_step(WTable<F>& W, int t, int nu, bool lead) {
  auto& alg = W.algebra();
  const F& fld = W.field();
  const std::int64_t wsrc = W.dim(nu), wdst = W.dim(nu - 1);
  Mat<F> out(fld, bimodule_component_dim(W, t, nu),
             bimodule_component_dim(W, t, nu - 1));
  if (out.nrows == 0 || out.ncols == 0) return out;
  const auto& strips = lead ? W.leading(nu) : W.trailing(nu);
  std::int64_t src_off = 0;
  for (int i = 0; i + nu <= t; ++i) {
    const int j = t - nu - i;
    // target block: left degree grows for a leading strip, right for trailing
    const int ti = lead ? i + 1 : i;
    std::int64_t dst_off = 0;
    for (int i2 = 0; i2 < ti; ++i2)
      dst_off += alg.dim(i2) * wdst * alg.dim(t - (nu - 1) - i2);
    const std::int64_t rows_j = alg.dim(j), rows_tj = alg.dim(t - (nu - 1) - ti);
    for (std::int64_t alpha = 0; alpha < alg.dim(i); ++alpha)
      for (std::int64_t r = 0; r < wsrc; ++r)
        for (const auto& [packed, coeff] : strips[r]) {
          const int a = static_cast<int>(packed / wdst);
          const Col idx = packed % wdst;
          const Mat<F>& mult =
              lead ? alg.right_mult(a, i) : alg.left_mult(a, j);
          if (lead) {
            for (const auto& [alpha2, v] : mult.rows[alpha])
              for (std::int64_t beta = 0; beta < rows_j; ++beta)
                out.add_to(src_off + (alpha * wsrc + r) * rows_j + beta,
                           dst_off + (alpha2 * wdst + idx) * rows_tj + beta,
                           fld.mul(coeff, v));
          } else {
            for (std::int64_t beta = 0; beta < rows_j; ++beta)
              for (const auto& [beta2, v] : mult.rows[beta])
                out.add_to(src_off + (alpha * wsrc + r) * rows_j + beta,
                           dst_off + (alpha * wdst + idx) * rows_tj + beta2,
                           fld.mul(coeff, v));
          }
        }
    src_off += alg.dim(i) * wsrc * rows_j;
  }
  return out;
}

}  // namespace detail

// d_L on the degree-t slice: strips the leading letter onto the left factor
template <class F>
Mat<F> bimodule_dl(WTable<F>& W, int t, int nu) {
  return detail::bimodule_step(W, t, nu, true);
}

// d_R: strips the trailing letter onto the right factor
template <class F>
Mat<F> bimodule_dr(WTable<F>& W, int t, int nu) {
  return detail::bimodule_step(W, t, nu, false);
}

}  // namespace homog
