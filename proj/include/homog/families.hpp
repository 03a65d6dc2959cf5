#pragma once

// Built-in presentation families, their reference Hilbert series, the
// companion matrices whose right-multiplication action the middle
// resolution differential must reproduce, and the distinguished bases used
// by the bimodule complex checks.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homog/algebra.hpp"
#include "homog/series.hpp"

namespace homog {

enum class FamilyKind {
  YangMills,
  SuperYangMills,
  Parafermionic,
  Parabosonic,
  SelfDuality,
  SuperSelfDuality,
  Sklyanin,
  DeformedYM,
  ThreeParameterYM,
  BEpsilon,
};

inline std::string family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::YangMills: return "yang-mills";
    case FamilyKind::SuperYangMills: return "super-yang-mills";
    case FamilyKind::Parafermionic: return "parafermionic";
    case FamilyKind::Parabosonic: return "parabosonic";
    case FamilyKind::SelfDuality: return "self-duality";
    case FamilyKind::SuperSelfDuality: return "super-self-duality";
    case FamilyKind::Sklyanin: return "sklyanin";
    case FamilyKind::DeformedYM: return "deformed-ym";
    case FamilyKind::ThreeParameterYM: return "three-parameter-ym";
    case FamilyKind::BEpsilon: return "b-epsilon";
  }
  return "?";
}

inline FamilyKind family_from_name(const std::string& s) {
  for (FamilyKind k :
       {FamilyKind::YangMills, FamilyKind::SuperYangMills,
        FamilyKind::Parafermionic, FamilyKind::Parabosonic,
        FamilyKind::SelfDuality, FamilyKind::SuperSelfDuality,
        FamilyKind::Sklyanin, FamilyKind::DeformedYM,
        FamilyKind::ThreeParameterYM, FamilyKind::BEpsilon})
    if (family_name(k) == s) return k;
  throw parse_error("unknown family kind '" + s + "'");
}

template <class F>
struct FamilySpec {
  using K = typename F::Elem;

  F fld;
  FamilyKind kind = FamilyKind::YangMills;
  int s = 1;                            // generator count is s+1 (4 for the
                                        // self-duality and sklyanin kinds)
  std::vector<std::vector<K>> metric;   // empty = identity
  int eps = 1;
  std::vector<K> zeta;                  // {z0, z1} or {z0, z1, z2}
  std::vector<K> alpha;                 // three nonzero parameters
  std::vector<std::vector<K>> bmat;     // invertible square matrix
};

namespace detail {

template <class F, class K = typename F::Elem>
std::vector<std::vector<K>> dense_identity(const F& fld, int n) {
  std::vector<std::vector<K>> out(n, std::vector<K>(n, fld.zero()));
  for (int i = 0; i < n; ++i) out[i][i] = fld.one();
  return out;
}

template <class F, class K = typename F::Elem>
std::vector<std::vector<K>> dense_inverse(
    const F& fld, const std::vector<std::vector<K>>& d) {
  const int n = static_cast<int>(d.size());
  Mat<F> m(fld, n, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(d[i].size()) != n) throw error("matrix is not square");
    for (int j = 0; j < n; ++j) m.add_to(i, j, d[i][j]);
  }
  Mat<F> inv = mat_inverse(m);
  std::vector<std::vector<K>> out(n, std::vector<K>(n, fld.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = inv.get(i, j);
  return out;
}

inline const int kCyclic[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};

}  // namespace detail

template <class F>
int family_generators(const FamilySpec<F>& spec) {
  switch (spec.kind) {
    case FamilyKind::SelfDuality:
    case FamilyKind::SuperSelfDuality:
    case FamilyKind::Sklyanin:
      return 4;
    case FamilyKind::BEpsilon:
      return static_cast<int>(spec.bmat.size());
    default:
      return spec.s + 1;
  }
}

inline int family_degree(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::SelfDuality:
    case FamilyKind::SuperSelfDuality:
    case FamilyKind::Sklyanin:
      return 2;
    default:
      return 3;
  }
}

template <class F>
void validate_family(const FamilySpec<F>& spec) {
  const F& fld = spec.fld;
  const int g = family_generators(spec);
  if (g < 2) throw error("family needs at least two generators");
  if (spec.eps != 1 && spec.eps != -1) throw error("eps must be +1 or -1");
  switch (spec.kind) {
    case FamilyKind::YangMills:
    case FamilyKind::SuperYangMills:
    case FamilyKind::DeformedYM:
    case FamilyKind::ThreeParameterYM: {
      if (!spec.metric.empty()) {
        if (static_cast<int>(spec.metric.size()) != g)
          throw error("metric size does not match generator count");
        for (int i = 0; i < g; ++i)
          for (int j = 0; j < g; ++j)
            if (!fld.eq(spec.metric[i][j], spec.metric[j][i]))
              throw error("metric is not symmetric");
        detail::dense_inverse(fld, spec.metric);  // throws when singular
      }
      const std::size_t want =
          spec.kind == FamilyKind::ThreeParameterYM ? 3 : 2;
      if (spec.kind == FamilyKind::DeformedYM ||
          spec.kind == FamilyKind::ThreeParameterYM) {
        if (spec.zeta.size() != want)
          throw error("family needs " + std::to_string(want) +
                      " zeta parameters");
        if (fld.is_zero(spec.zeta[0]) && fld.is_zero(spec.zeta[1]))
          throw error("zeta0 and zeta1 cannot both vanish");
      }
      break;
    }
    case FamilyKind::BEpsilon: {
      if (spec.bmat.empty()) throw error("b-epsilon needs matrix B");
      detail::dense_inverse(fld, spec.bmat);
      break;
    }
    case FamilyKind::Sklyanin: {
      if (spec.alpha.size() != 3) throw error("sklyanin needs three alphas");
      for (const auto& a : spec.alpha)
        if (fld.is_zero(a)) throw error("sklyanin alphas must be nonzero");
      if (!fld.has_i())
        throw error("sklyanin needs a field containing a square root of -1");
      break;
    }
    case FamilyKind::SuperSelfDuality: {
      if (!fld.has_i())
        throw error(
            "super-self-duality needs a field containing a square root of -1");
      break;
    }
    default:
      break;
  }
}

// Raw relation rows, in the canonical order the companion matrices refer to.
template <class F>
Mat<F> family_relation_rows(const FamilySpec<F>& spec) {
  using K = typename F::Elem;
  validate_family(spec);
  const F& fld = spec.fld;
  const int g = family_generators(spec);
  const auto G = spec.metric.empty() ? detail::dense_identity(fld, g)
                                     : spec.metric;
  auto cubic = [&](auto&& coeff) {
    Mat<F> out(fld, g, pow_i64(g, 3));
    for (int r = 0; r < g; ++r)
      for (int a = 0; a < g; ++a)
        for (int b = 0; b < g; ++b)
          for (int c = 0; c < g; ++c)
            out.add_to(r, (static_cast<Col>(a) * g + b) * g + c,
                       coeff(r, a, b, c));
    return out;
  };
  switch (spec.kind) {
    case FamilyKind::YangMills:
    case FamilyKind::DeformedYM:
    case FamilyKind::ThreeParameterYM: {
      // (z1 g^{ra} g^{bc} + z2 g^{cr} g^{ab} - 2 z0 g^{rb} g^{ac}) x_a x_b x_c
      K z0 = fld.one(), z1 = fld.one(), z2 = fld.one();
      if (spec.kind != FamilyKind::YangMills) {
        z0 = spec.zeta[0];
        z1 = spec.zeta[1];
        z2 = spec.kind == FamilyKind::ThreeParameterYM ? spec.zeta[2] : z1;
      }
      auto Gi = detail::dense_inverse(fld, G);
      const K two = fld.from_int(2);
      return cubic([&](int r, int a, int b, int c) {
        K v = fld.mul(z1, fld.mul(Gi[r][a], Gi[b][c]));
        v = fld.add(v, fld.mul(z2, fld.mul(Gi[c][r], Gi[a][b])));
        v = fld.sub(v, fld.mul(two, fld.mul(z0, fld.mul(Gi[r][b], Gi[a][c]))));
        return v;
      });
    }
    case FamilyKind::SuperYangMills: {
      auto Gi = detail::dense_inverse(fld, G);
      return cubic([&](int r, int a, int b, int c) {
        return fld.sub(fld.mul(Gi[r][a], Gi[b][c]), fld.mul(Gi[c][r], Gi[a][b]));
      });
    }
    case FamilyKind::BEpsilon: {
      auto Bi = detail::dense_inverse(fld, spec.bmat);
      const K e = fld.from_int(spec.eps);
      return cubic([&](int r, int a, int b, int c) {
        return fld.add(fld.mul(Bi[r][a], Bi[b][c]),
                       fld.mul(e, fld.mul(Bi[a][b], Bi[c][r])));
      });
    }
    case FamilyKind::Parafermionic:
    case FamilyKind::Parabosonic: {
      // [x_l, [x_m, x_n]] resp. [x_l, {x_m, x_n}], all index triples
      const bool bose = spec.kind == FamilyKind::Parabosonic;
      Mat<F> out(fld, g * g * g, pow_i64(g, 3));
      auto idx = [&](int a, int b, int c) {
        return (static_cast<Col>(a) * g + b) * g + c;
      };
      std::int64_t r = 0;
      for (int l = 0; l < g; ++l)
        for (int m = 0; m < g; ++m)
          for (int n = 0; n < g; ++n, ++r) {
            const K one = fld.one(), neg = fld.from_int(-1);
            out.add_to(r, idx(l, m, n), one);
            out.add_to(r, idx(l, n, m), bose ? one : neg);
            out.add_to(r, idx(m, n, l), neg);
            out.add_to(r, idx(n, m, l), bose ? neg : one);
          }
      return out;
    }
    case FamilyKind::SelfDuality: {
      // [x_0, x_k] = eps [x_l, x_m]
      Mat<F> out(fld, 3, 16);
      const K e = fld.from_int(spec.eps);
      for (int row = 0; row < 3; ++row) {
        const int k = detail::kCyclic[row][0], l = detail::kCyclic[row][1],
                  m = detail::kCyclic[row][2];
        out.add_to(row, 0 * 4 + k, fld.one());
        out.add_to(row, k * 4 + 0, fld.from_int(-1));
        out.add_to(row, static_cast<Col>(l) * 4 + m, fld.neg(e));
        out.add_to(row, static_cast<Col>(m) * 4 + l, e);
      }
      return out;
    }
    case FamilyKind::SuperSelfDuality: {
      // i{x_0, x_k} = eps [x_l, x_m]
      Mat<F> out(fld, 3, 16);
      const K i = fld.i();
      const K e = fld.from_int(spec.eps);
      for (int row = 0; row < 3; ++row) {
        const int k = detail::kCyclic[row][0], l = detail::kCyclic[row][1],
                  m = detail::kCyclic[row][2];
        out.add_to(row, 0 * 4 + k, i);
        out.add_to(row, k * 4 + 0, i);
        out.add_to(row, static_cast<Col>(l) * 4 + m, fld.neg(e));
        out.add_to(row, static_cast<Col>(m) * 4 + l, e);
      }
      return out;
    }
    case FamilyKind::Sklyanin: {
      // i{x_0, x_k} = [x_l, x_m]  and  [x_0, x_k] = i c_k {x_l, x_m},
      // c_k = (alpha_l - alpha_m)/alpha_k
      Mat<F> out(fld, 6, 16);
      const K i = fld.i();
      for (int row = 0; row < 3; ++row) {
        const int k = detail::kCyclic[row][0], l = detail::kCyclic[row][1],
                  m = detail::kCyclic[row][2];
        out.add_to(2 * row, 0 * 4 + k, i);
        out.add_to(2 * row, k * 4 + 0, i);
        out.add_to(2 * row, static_cast<Col>(l) * 4 + m, fld.from_int(-1));
        out.add_to(2 * row, static_cast<Col>(m) * 4 + l, fld.one());
        const K c = fld.div(fld.sub(spec.alpha[l - 1], spec.alpha[m - 1]),
                            spec.alpha[k - 1]);
        const K ic = fld.neg(fld.mul(i, c));
        out.add_to(2 * row + 1, 0 * 4 + k, fld.one());
        out.add_to(2 * row + 1, k * 4 + 0, fld.from_int(-1));
        out.add_to(2 * row + 1, static_cast<Col>(l) * 4 + m, ic);
        out.add_to(2 * row + 1, static_cast<Col>(m) * 4 + l, ic);
      }
      return out;
    }
  }
  throw error("unreachable family kind");
}

template <class F>
Presentation<F> make_family(const FamilySpec<F>& spec) {
  return Presentation<F>(spec.fld, family_name(spec.kind),
                         family_generators(spec), family_degree(spec.kind),
                         family_relation_rows(spec));
}

// Reference Hilbert series num/den, when the family has an expected one.
inline std::optional<std::pair<Poly, Poly>> family_series(FamilyKind kind,
                                                          int g) {
  const Poly one_minus_t = poly_from_int({1, -1});
  const Poly one_minus_t2 = poly_from_int({1, 0, -1});
  switch (kind) {
    case FamilyKind::YangMills:
    case FamilyKind::SuperYangMills:
    case FamilyKind::DeformedYM:
    case FamilyKind::BEpsilon: {
      // 1 / ((1 - t^2)(1 - g t + t^2))
      Poly den = series_mul(one_minus_t2, poly_from_int({1, -g, 1}), 4);
      return std::make_pair(poly_from_int({1}), den);
    }
    case FamilyKind::Parafermionic:
    case FamilyKind::Parabosonic: {
      // 1 / ((1 - t)^g (1 - t^2)^(g(g-1)/2))
      Poly den = poly_from_int({1});
      int cap = g + g * (g - 1);
      for (int k = 0; k < g; ++k) den = series_mul(den, one_minus_t, cap);
      for (int k = 0; k < g * (g - 1) / 2; ++k)
        den = series_mul(den, one_minus_t2, cap);
      return std::make_pair(poly_from_int({1}), den);
    }
    case FamilyKind::SelfDuality:
    case FamilyKind::SuperSelfDuality:
      return std::make_pair(poly_from_int({1}),
                            series_mul(one_minus_t, poly_from_int({1, -3}), 2));
    case FamilyKind::Sklyanin: {
      Poly den = poly_from_int({1});
      for (int k = 0; k < 4; ++k) den = series_mul(den, one_minus_t, 4);
      return std::make_pair(poly_from_int({1}), den);
    }
    case FamilyKind::ThreeParameterYM:
      return std::nullopt;
  }
  return std::nullopt;
}

// The theorem-hypothesis scalar the caller branches on:
//   deformed-ym:  (s+2) z1 - 2 z0
//   b-epsilon:    1 + eps B^{rl} B^{mn} B_{ml} B_{rn}
template <class F>
typename F::Elem singular_value(const FamilySpec<F>& spec) {
  using K = typename F::Elem;
  const F& fld = spec.fld;
  if (spec.kind == FamilyKind::DeformedYM) {
    if (spec.zeta.size() != 2) throw error("deformed-ym needs two zetas");
    return fld.sub(fld.mul(fld.from_int(spec.s + 2), spec.zeta[1]),
                   fld.mul(fld.from_int(2), spec.zeta[0]));
  }
  if (spec.kind == FamilyKind::BEpsilon) {
    auto Bi = detail::dense_inverse(fld, spec.bmat);
    const int g = static_cast<int>(spec.bmat.size());
    K acc = fld.zero();
    for (int r = 0; r < g; ++r)
      for (int l = 0; l < g; ++l)
        for (int m = 0; m < g; ++m)
          for (int n = 0; n < g; ++n)
            acc = fld.add(acc,
                          fld.mul(fld.mul(Bi[r][l], Bi[m][n]),
                                  fld.mul(spec.bmat[m][l], spec.bmat[r][n])));
    return fld.add(fld.one(), fld.mul(fld.from_int(spec.eps), acc));
  }
  throw error("no singular-locus value for kind " + family_name(spec.kind));
}

// The companion matrix of the middle resolution differential, together with
// the ordered basis of W_N in which the identification holds.
template <class F>
struct MiddleMatrix {
  std::vector<std::vector<AlgebraElement<F>>> entries;  // rows x cols
  Mat<F> domain_basis;  // rows spanning W_N, ordered to match `entries` rows
  int entry_degree = 2;
};

template <class F>
MiddleMatrix<F> middle_matrix(const FamilySpec<F>& spec) {
  using K = typename F::Elem;
  validate_family(spec);
  const F& fld = spec.fld;
  const int g = family_generators(spec);
  const auto G = spec.metric.empty() ? detail::dense_identity(fld, g)
                                     : spec.metric;
  Mat<F> rows = family_relation_rows(spec);
  auto quad_entries = [&](auto&& coeff) {
    std::vector<std::vector<AlgebraElement<F>>> q(
        g, std::vector<AlgebraElement<F>>(g));
    for (int mu = 0; mu < g; ++mu)
      for (int nu = 0; nu < g; ++nu) {
        Mat<F> acc(fld, 1, pow_i64(g, 2));
        for (int a = 0; a < g; ++a)
          for (int b = 0; b < g; ++b)
            acc.add_to(0, static_cast<Col>(a) * g + b, coeff(mu, nu, a, b));
        q[mu][nu] = AlgebraElement<F>{2, acc.rows[0]};
      }
    return q;
  };
  switch (spec.kind) {
    case FamilyKind::YangMills:
    case FamilyKind::DeformedYM: {
      K z0 = fld.one(), z1 = fld.one();
      if (spec.kind == FamilyKind::DeformedYM) {
        z0 = spec.zeta[0];
        z1 = spec.zeta[1];
      }
      const K den = fld.sub(fld.mul(fld.from_int(spec.s + 2), z1),
                            fld.mul(fld.from_int(2), z0));
      if (fld.is_zero(den))
        throw error("no companion matrix at the singular parameter locus");
      auto Gi = detail::dense_inverse(fld, G);
      const K two = fld.from_int(2);
      auto q = quad_entries([&](int mu, int nu, int a, int b) {
        K v = fld.mul(z1, fld.add(fld.mul(Gi[mu][nu], Gi[a][b]),
                                  fld.mul(Gi[mu][a], Gi[nu][b])));
        v = fld.sub(v, fld.mul(two, fld.mul(z0, fld.mul(Gi[mu][b], Gi[nu][a]))));
        return fld.div(v, den);
      });
      return {std::move(q), mat_scale(rows, fld.inv(den)), 2};
    }
    case FamilyKind::SuperYangMills: {
      auto Gi = detail::dense_inverse(fld, G);
      auto q = quad_entries([&](int mu, int nu, int a, int b) {
        return fld.sub(fld.mul(Gi[mu][nu], Gi[a][b]),
                       fld.mul(Gi[mu][a], Gi[nu][b]));
      });
      return {std::move(q), mat_scale(rows, fld.from_int(-1)), 2};
    }
    case FamilyKind::BEpsilon: {
      auto Bi = detail::dense_inverse(fld, spec.bmat);
      const K e = fld.from_int(spec.eps);
      auto q = quad_entries([&](int mu, int nu, int a, int b) {
        return fld.add(fld.mul(Bi[mu][a], Bi[b][nu]),
                       fld.mul(e, fld.mul(Bi[nu][mu], Bi[a][b])));
      });
      return {std::move(q), std::move(rows), 2};
    }
    case FamilyKind::SuperSelfDuality: {
      if (spec.eps != 1)
        throw error("companion matrix is stated for eps = +1 only");
      const K i = fld.i(), one = fld.one(), neg = fld.from_int(-1);
      auto e1 = [&](int a, K coeff) {
        return AlgebraElement<F>{1, {{a, coeff}}};
      };
      std::vector<std::vector<AlgebraElement<F>>> q = {
          {e1(1, i), e1(0, i), e1(3, one), e1(2, neg)},
          {e1(2, i), e1(3, neg), e1(0, i), e1(1, one)},
          {e1(3, i), e1(2, one), e1(1, neg), e1(0, i)},
      };
      return {std::move(q), std::move(rows), 1};
    }
    default:
      throw error("no companion matrix for kind " + family_name(spec.kind));
  }
}

// Distinguished bases of W_3 and W_4 for the cubic metric kinds, in which
// the generic bimodule differential takes its textbook coordinate form:
//   W_3 basis (lowered index):  b_l = sum_r G_{lr} rel_r / den
//   W_4 basis:                  w4  = sum_m e_m (x) (rel_m / den)
template <class F>
struct BimoduleBases {
  Mat<F> w3;  // g rows over g^3 columns
  Mat<F> w4;  // 1 row over g^4 columns
};

template <class F>
BimoduleBases<F> bimodule_bases(const FamilySpec<F>& spec) {
  using K = typename F::Elem;
  if (spec.kind != FamilyKind::YangMills && spec.kind != FamilyKind::DeformedYM)
    throw error("bimodule bases provided for the cubic metric kinds only");
  const F& fld = spec.fld;
  const int g = family_generators(spec);
  const auto G = spec.metric.empty() ? detail::dense_identity(fld, g)
                                     : spec.metric;
  K z0 = fld.one(), z1 = fld.one();
  if (spec.kind == FamilyKind::DeformedYM) {
    z0 = spec.zeta[0];
    z1 = spec.zeta[1];
  }
  const K den = fld.sub(fld.mul(fld.from_int(spec.s + 2), z1),
                        fld.mul(fld.from_int(2), z0));
  if (fld.is_zero(den))
    throw error("no distinguished bases at the singular parameter locus");
  Mat<F> rows = family_relation_rows(spec);
  Mat<F> w3(fld, g, pow_i64(g, 3));
  for (int l = 0; l < g; ++l)
    for (int r = 0; r < g; ++r)
      for (const auto& [c, v] : rows.rows[r])
        w3.add_to(l, c, fld.div(fld.mul(G[l][r], v), den));
  Mat<F> w4(fld, 1, pow_i64(g, 4));
  const Col block = pow_i64(g, 3);
  for (int m = 0; m < g; ++m)
    for (const auto& [c, v] : rows.rows[m])
      w4.add_to(0, m * block + c, fld.div(v, den));
  return {std::move(w3), std::move(w4)};
}

}  // namespace homog
