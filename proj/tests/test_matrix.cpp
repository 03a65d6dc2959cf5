#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "homog/matrix.hpp"

using namespace homog;

namespace {

template <class F>
Mat<F> random_int_mat(F fld, std::mt19937_64& rng, int nrows, int ncols,
                      int density_pct = 40) {
  Mat<F> m(fld, nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j)
      if (static_cast<int>(rng() % 100) < density_pct)
        m.add_to(i, j, fld.from_int(static_cast<long long>(rng() % 19) - 9));
  return m;
}

}  // namespace

TEST_CASE("rank and rref on a known 3x4 system", "[matrix]") {
  RationalField F;
  auto m = Mat<RationalField>::from_dense(
      F, {{1, 2, 0, 3}, {2, 4, 1, 7}, {3, 6, 1, 10}});
  CHECK(rank(m) == 2);
  auto r = rref(m);
  auto expect = Mat<RationalField>::from_dense(F, {{1, 2, 0, 3}, {0, 0, 1, 1}});
  CHECK(mat_eq(r, expect));
  CHECK(mat_eq(rref(r), r));  // rref is idempotent
}

TEST_CASE("nullspace solves x*M = 0 and satisfies rank-nullity", "[matrix]") {
  RationalField F;
  auto m = Mat<RationalField>::from_dense(
      F, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}, {0, 2, 2}});
  auto ns = nullspace(m);
  CHECK(ns.nrows == 4 - rank(transpose(m)));
  CHECK(rank(m) + ns.nrows == m.nrows);
  CHECK(mat_mul(ns, m).is_zero());
}

TEST_CASE("rowspace sum and intersection are inclusion-exclusion dual",
          "[matrix]") {
  RationalField F;
  auto a = Mat<RationalField>::from_dense(F, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  auto b = Mat<RationalField>::from_dense(F, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  auto meet = rowspace_intersect(a, b);
  auto join = rowspace_sum(a, b);
  CHECK(meet.nrows == 1);
  CHECK(join.nrows == 3);
  CHECK(mat_eq(meet, Mat<RationalField>::from_dense(F, {{0, 1, 0, 0}})));
}

TEST_CASE("echelon adopt of pre-triangular rows matches plain insertion",
          "[matrix]") {
  RationalField F;
  // rows with strictly increasing first columns form a triangular set
  auto m = Mat<RationalField>::from_dense(
      F, {{2, 1, 0, 4, 0}, {0, 0, 3, 1, 1}, {0, 0, 0, 0, 5}});
  Echelon<RationalField> adopted(F, 5);
  for (const auto& row : m.rows) adopted.adopt(row);
  Echelon<RationalField> inserted(F, 5);
  for (const auto& row : m.rows) inserted.insert(row);
  CHECK(mat_eq(adopted.rref(), inserted.rref()));
  CHECK(adopted.nonpivots() == std::vector<Col>({1, 3}));
  // new rows still reduce correctly against adopted ones
  SparseRow<Rational> probe = {{0, F.from_int(4)}, {1, F.from_int(2)},
                               {3, F.from_int(8)}};
  CHECK(!adopted.insert(probe));  // 2 * first row
}

TEST_CASE("matrix product follows row-vector composition", "[matrix]") {
  RationalField F;
  auto a = Mat<RationalField>::from_dense(F, {{1, 2}, {0, 1}, {3, 0}});
  auto b = Mat<RationalField>::from_dense(F, {{1, 0, 1}, {2, 1, 0}});
  auto c = mat_mul(a, b);  // 3x3
  CHECK(mat_eq(c, Mat<RationalField>::from_dense(
                      F, {{5, 2, 1}, {2, 1, 0}, {3, 0, 3}})));
  CHECK(mat_eq(transpose(mat_mul(a, b)), mat_mul(transpose(b), transpose(a))));
}

TEST_CASE("random matrices: rank invariants across operations and fields",
          "[matrix]") {
  std::mt19937_64 rng(424242);
  RationalField Q;
  PrimeField Fp(2147483647ull);
  for (int trial = 0; trial < 12; ++trial) {
    int nr = 2 + static_cast<int>(rng() % 8);
    int nc = 2 + static_cast<int>(rng() % 8);
    auto seed_state = rng;
    auto mq = random_int_mat(Q, rng, nr, nc);
    auto mp = random_int_mat(Fp, seed_state, nr, nc);
    auto rq = rank(mq);
    CHECK(rq == rank(mp));  // integer matrix, huge prime: ranks agree
    CHECK(rq == rank(transpose(mq)));
    CHECK(rq + nullspace(mq).nrows == nr);
    CHECK(mat_eq(rref(mq), rref(rref(mq))));
    auto a = random_int_mat(Q, rng, nr, nc);
    auto b = random_int_mat(Q, rng, nr, nc);
    auto sum_dim = rowspace_sum(a, b).nrows;
    auto meet_dim = rowspace_intersect(a, b).nrows;
    CHECK(rank(a) + rank(b) == sum_dim + meet_dim);
    // every intersection row lies in both row spaces
    auto meet = rowspace_intersect(a, b);
    CHECK(rowspace_sum(a, meet).nrows == rank(a));
    CHECK(rowspace_sum(b, meet).nrows == rank(b));
  }
}

TEST_CASE("product associativity on random triples", "[matrix]") {
  std::mt19937_64 rng(7);
  GaussianField F;
  for (int trial = 0; trial < 6; ++trial) {
    auto a = random_int_mat(F, rng, 4, 5);
    auto b = random_int_mat(F, rng, 5, 3);
    auto c = random_int_mat(F, rng, 3, 6);
    CHECK(mat_eq(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c))));
  }
}

TEST_CASE("zero-dimensional shapes are handled", "[matrix]") {
  RationalField F;
  Mat<RationalField> empty_rows(F, 0, 5);
  CHECK(rank(empty_rows) == 0);
  CHECK(nullspace(empty_rows).nrows == 0);
  Mat<RationalField> empty_cols(F, 3, 0);
  CHECK(rank(empty_cols) == 0);
  CHECK(nullspace(empty_cols).nrows == 3);
  CHECK(rowspace_intersect(empty_rows, empty_rows).nrows == 0);
}
