#pragma once

// Graded algebras presented by homogeneous relations: T(E)/(R) with
// E g-dimensional and R a subspace of E^(x)N.
//
// Everything is computed degree by degree from the two-sided ideal
//   I_n = E (x) I_{n-1} + R (x) E^(x)(n-N),
// kept as an incremental echelon per degree.  The E (x) I_{n-1} part is a
// disjoint union of g column-shifted copies of I_{n-1}, which stay
// triangular under the word packing, so they are adopted without any
// elimination; only the |R| * g^(n-N) fresh relation shifts are reduced.
//
// A_n has the non-pivot words of I_n as its normal basis; dual components
//   W_N = R,   W_n = (E (x) W_{n-1})  ^  (R (x) E^(x)(n-N))
// realize the graded pieces of the dual algebra inside the tensor powers.

#include <cassert>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "homog/matrix.hpp"
#include "homog/tensor.hpp"

namespace homog {

struct WorkBudget {
  std::int64_t cell_limit = 0;  // 0 = unlimited
  std::int64_t used = 0;

  void charge(std::int64_t cells) {
    used += cells;
    if (cell_limit > 0 && used > cell_limit)
      throw budget_error("work budget exceeded (" + std::to_string(used) +
                         " > " + std::to_string(cell_limit) +
                         " matrix cells)");
  }
};

template <class F>
struct Presentation {
  F fld;
  std::string name;
  int g = 0;           // generators, all in degree 1
  int N = 2;           // common degree of the relations
  Mat<F> relations;    // rows span R in E^(x)N

  Presentation(F f, std::string name_, int g_, int N_, Mat<F> rel)
      : fld(f), name(std::move(name_)), g(g_), N(N_), relations(std::move(rel)) {
    assert(N >= 2 && g >= 1);
    assert(relations.ncols == pow_i64(g, N));
  }
};

// A homogeneous element given by its word coordinates in E^(x)degree.
template <class F>
struct AlgebraElement {
  int degree = 0;
  SparseRow<typename F::Elem> words;
};

template <class F>
AlgebraElement<F> element_from_terms(
    const F& fld, int g,
    const std::vector<std::pair<std::vector<int>, typename F::Elem>>& terms) {
  assert(!terms.empty());
  const int degree = static_cast<int>(terms[0].first.size());
  Mat<F> acc(fld, 1, pow_i64(g, degree));
  for (const auto& [word, coeff] : terms) {
    assert(static_cast<int>(word.size()) == degree);
    acc.add_to(0, word_index(g, word), coeff);
  }
  return {degree, acc.rows[0]};
}

template <class F>
class GradedAlgebra {
 public:
  using K = typename F::Elem;

  explicit GradedAlgebra(Presentation<F> pres, WorkBudget* budget = nullptr)
      : pres_(std::move(pres)), budget_(budget) {
    rel_rref_ = std::make_unique<Mat<F>>(rref(pres_.relations));
  }

  const Presentation<F>& presentation() const { return pres_; }
  const F& field() const { return pres_.fld; }
  int generators() const { return pres_.g; }
  int degree() const { return pres_.N; }
  const Mat<F>& relation_basis() const { return *rel_rref_; }

  Subspace<F> relation_subspace() const {
    return Subspace<F>(pres_.fld, pres_.g, pres_.N, *rel_rref_);
  }

  // ---- ideal and normal words -------------------------------------------

  const Echelon<F>& ideal(int n) {
    ensure_ideal(n);
    return *ideals_.at(n);
  }

  std::int64_t dim(int n) {
    ensure_ideal(n);
    return pow_i64(pres_.g, n) - ideals_.at(n)->rank();
  }

  std::vector<std::int64_t> dims(int cap) {
    std::vector<std::int64_t> out;
    for (int n = 0; n <= cap; ++n) out.push_back(dim(n));
    return out;
  }

  const std::vector<Col>& normal_words(int n) {
    ensure_ideal(n);
    auto it = normal_words_.find(n);
    if (it == normal_words_.end())
      it = normal_words_.emplace(n, ideals_.at(n)->nonpivots()).first;
    return it->second;
  }

  // position of a word in the normal basis, or -1 if the word is a pivot
  std::int64_t normal_position(int n, Col word) {
    const auto& words = normal_words(n);
    auto it = std::lower_bound(words.begin(), words.end(), word);
    if (it == words.end() || *it != word) return -1;
    return it - words.begin();
  }

  // coordinates of a word in the normal basis of A_n
  SparseRow<K> normal_form(int n, Col word) {
    const auto& e = ideal(n);
    if (!e.has_pivot(word))
      return {{normal_position(n, word), pres_.fld.one()}};
    SparseRow<K> out;
    for (const auto& [c, v] : e.reduced_row(word)) {
      if (c == word) continue;  // pivot entry
      out.emplace_back(normal_position(n, c), pres_.fld.neg(v));
    }
    return out;  // tail columns increase, so the row is sorted
  }

  bool ideal_contains(int n, const SparseRow<K>& row) {
    return ideal(n).remainder(row).empty();
  }

  // ---- multiplication ----------------------------------------------------

  // right multiplication by generator a, as a dim(n) x dim(n+1) matrix
  const Mat<F>& right_mult(int a, int n) {
    auto key = std::make_pair(a, n);
    auto it = right_mult_.find(key);
    if (it != right_mult_.end()) return it->second;
    Mat<F> m(pres_.fld, dim(n), dim(n + 1));
    const auto& words = normal_words(n);
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(words.size()); ++k)
      m.rows[k] = normal_form(n + 1, words[k] * pres_.g + a);
    return right_mult_.emplace(key, std::move(m)).first->second;
  }

  // left multiplication by generator a
  const Mat<F>& left_mult(int a, int n) {
    auto key = std::make_pair(a, n);
    auto it = left_mult_.find(key);
    if (it != left_mult_.end()) return it->second;
    const Col shift = a * pow_i64(pres_.g, n);
    Mat<F> m(pres_.fld, dim(n), dim(n + 1));
    const auto& words = normal_words(n);
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(words.size()); ++k)
      m.rows[k] = normal_form(n + 1, shift + words[k]);
    return left_mult_.emplace(key, std::move(m)).first->second;
  }

  // left multiplication x |-> c*x by a homogeneous element, A_n -> A_{n+deg}
  Mat<F> left_mult_by(const AlgebraElement<F>& c, int n) {
    Mat<F> m(pres_.fld, dim(n), dim(n + c.degree));
    const Col shift = pow_i64(pres_.g, n);
    const auto& words = normal_words(n);
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(words.size()); ++k)
      for (const auto& [w, v] : c.words)
        accumulate_scaled(m, k, v, normal_form(n + c.degree, w * shift + words[k]));
    return m;
  }

  // right multiplication x |-> x*c
  Mat<F> right_mult_by(const AlgebraElement<F>& c, int n) {
    Mat<F> m(pres_.fld, dim(n), dim(n + c.degree));
    const Col shift = pow_i64(pres_.g, c.degree);
    const auto& words = normal_words(n);
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(words.size()); ++k)
      for (const auto& [w, v] : c.words)
        accumulate_scaled(m, k, v, normal_form(n + c.degree, words[k] * shift + w));
    return m;
  }

  // ---- dual components ----------------------------------------------------

  const Subspace<F>& dual_component(int n) {
    auto it = duals_.find(n);
    if (it != duals_.end()) return it->second;
    if (n < pres_.N)
      return duals_.emplace(n, full_space(pres_.fld, pres_.g, n)).first->second;
    if (n == pres_.N)
      return duals_.emplace(n, relation_subspace()).first->second;
    auto lhs = shifted_embedding(dual_component(n - 1), 1, 0);
    auto rhs = shifted_embedding(relation_subspace(), 0, n - pres_.N);
    return duals_.emplace(n, subspace_intersect(lhs, rhs)).first->second;
  }

  std::int64_t dual_dim(int n) { return dual_component(n).dim(); }

  Presentation<F> dual_presentation() {
    return Presentation<F>(pres_.fld, pres_.name + "!", pres_.g, pres_.N,
                           annihilator(relation_subspace()).basis);
  }

 private:
  void accumulate_scaled(Mat<F>& m, std::int64_t r, const K& coeff,
                         const SparseRow<K>& row) {
    for (const auto& [c, v] : row) m.add_to(r, c, pres_.fld.mul(coeff, v));
  }

  void ensure_ideal(int n) {
    if (ideals_.count(n)) return;
    for (int k = 0; k < n; ++k) ensure_ideal(k);
    const Col ncols = pow_i64(pres_.g, n);
    auto e = std::make_unique<Echelon<F>>(pres_.fld, ncols);
    if (n >= pres_.N) {
      const Col tail_words = pow_i64(pres_.g, n - pres_.N);
      if (budget_) {
        const std::int64_t rows =
            pres_.g * ideals_.at(n - 1)->rank() +
            rel_rref_->nrows * tail_words;
        budget_->charge(rows * ncols);
      }
      if (n > pres_.N) {
        const Col block = ncols / pres_.g;  // g^(n-1)
        for (int a = 0; a < pres_.g; ++a) {
          const Col shift = a * block;
          for (const auto& [p, row] : ideals_.at(n - 1)->raw_rows()) {
            SparseRow<K> lifted;
            lifted.reserve(row.size());
            for (const auto& [c, v] : row) lifted.emplace_back(shift + c, v);
            e->adopt(std::move(lifted));
          }
        }
      }
      for (const auto& rel : rel_rref_->rows) {
        for (Col w = 0; w < tail_words; ++w) {
          SparseRow<K> shifted;
          shifted.reserve(rel.size());
          for (const auto& [c, v] : rel)
            shifted.emplace_back(c * tail_words + w, v);
          e->insert(std::move(shifted));
        }
      }
    }
    ideals_.emplace(n, std::move(e));
  }

  Presentation<F> pres_;
  WorkBudget* budget_ = nullptr;
  std::unique_ptr<Mat<F>> rel_rref_;
  std::map<int, std::unique_ptr<Echelon<F>>> ideals_;
  std::map<int, std::vector<Col>> normal_words_;
  std::map<int, Subspace<F>> duals_;
  std::map<std::pair<int, int>, Mat<F>> left_mult_, right_mult_;
};

// Does x*c = sign^(deg x) * c*x hold for all x up to total degree cap?
// Returns the first violating degree, or -1 when central.
template <class F>
int central_defect(GradedAlgebra<F>& alg, const AlgebraElement<F>& c,
                   int sign, int cap) {
  assert(sign == 1 || sign == -1);
  const F& fld = alg.field();
  for (int n = 0; n + c.degree <= cap; ++n) {
    Mat<F> left = alg.left_mult_by(c, n);
    Mat<F> right = alg.right_mult_by(c, n);
    if (sign == -1 && n % 2 == 1) left = mat_scale(left, fld.from_int(-1));
    if (!mat_eq(right, left)) return n;
  }
  return -1;
}

}  // namespace homog
