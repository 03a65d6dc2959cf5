// Acceptance gate: one line per criterion, exit 1 when any of them fails.
//
// Each criterion is an exact integer statement about the reference families;
// "cap" always means the verdict is pass-up-to-cap, never a claim beyond it.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "homog/checks.hpp"
#include "homog/complexes.hpp"
#include "homog/families.hpp"

using namespace homog;

namespace {

int failures = 0;

struct Note {
  bool ok = true;
  std::string text;

  void add(const std::string& what) {
    if (!text.empty()) text += "; ";
    text += what;
  }
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    add(what);
  }
};

template <class Fn>
void criterion(int id, const std::string& label, Fn&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Note r;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.ok = false;
    r.add(std::string("exception: ") + e.what());
  }
  const double sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::ostringstream line;
  line << (r.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << id << "  "
       << label << "  (" << std::fixed << std::setprecision(1) << sec << "s)";
  if (!r.text.empty()) line << "  -- " << r.text;
  std::cout << line.str() << std::endl;
  if (!r.ok) ++failures;
}

template <class F>
FamilySpec<F> spec_of(F fld, FamilyKind kind, int s) {
  FamilySpec<F> spec;
  spec.fld = fld;
  spec.kind = kind;
  spec.s = s;
  return spec;
}

// sum of squares of the generators, the invariant for the identity metric
template <class F>
AlgebraElement<F> squares(const F& fld, int g) {
  std::vector<std::pair<std::vector<int>, typename F::Elem>> terms;
  for (int a = 0; a < g; ++a) terms.push_back({{a, a}, fld.one()});
  return element_from_terms(fld, g, terms);
}

std::string vec_text(const std::vector<std::int64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

// Deterministic batch of invertible B matrices meeting the regularity
// condition (the seed is fixed so reruns exercise the same instances).
std::vector<FamilySpec<RationalField>> random_beps(int count, int g) {
  RationalField Q;
  std::mt19937 rng(20260816u);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::vector<FamilySpec<RationalField>> out;
  int eps = 1;
  while (static_cast<int>(out.size()) < count) {
    FamilySpec<RationalField> spec;
    spec.fld = Q;
    spec.kind = FamilyKind::BEpsilon;
    spec.eps = eps;
    spec.bmat.assign(g, std::vector<Rational>(g));
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) spec.bmat[i][j] = Rational(entry(rng));
    try {
      make_family(spec);  // throws when B is singular
    } catch (const error&) {
      continue;
    }
    if (Q.is_zero(singular_value(spec))) continue;
    out.push_back(spec);
    eps = -eps;
  }
  return out;
}

// key a structure-constant list by (dst, left word, right word)
template <class F>
std::map<std::tuple<std::int64_t, std::vector<int>, std::vector<int>>,
         typename F::Elem>
term_map(const std::vector<BimodTerm<F>>& terms) {
  std::map<std::tuple<std::int64_t, std::vector<int>, std::vector<int>>,
           typename F::Elem>
      out;
  for (const auto& tm : terms) out[{tm.dst, tm.left_word, tm.right_word}] = tm.coeff;
  return out;
}

void crit_dual_tables(Note& r) {
  RationalField Q;
  for (int s = 1; s <= 3; ++s)
    for (auto kind : {FamilyKind::YangMills, FamilyKind::SuperYangMills}) {
      GradedAlgebra<RationalField> A(make_family(spec_of(Q, kind, s)));
      GradedAlgebra<RationalField> D(A.dual_presentation());
      const std::int64_t w = s + 1;
      const std::vector<std::int64_t> want = {1, w, w * w, w, 1, 0, 0};
      r.expect(D.dims(6) == want, family_name(kind) + " s=" +
                                      std::to_string(s) + " dual dims " +
                                      vec_text(D.dims(6)));
    }
}

void crit_series(Note& r) {
  RationalField Q;
  const std::vector<std::pair<int, int>> caps = {{1, 10}, {2, 8}, {3, 7}};
  for (auto kind : {FamilyKind::YangMills, FamilyKind::SuperYangMills})
    for (auto [s, cap] : caps) {
      GradedAlgebra<RationalField> A(make_family(spec_of(Q, kind, s)));
      const auto series = family_series(kind, s + 1);
      auto v = hilbert_compare(A, series->first, series->second, cap);
      r.expect(v.pass(), family_name(kind) + " s=" + std::to_string(s) + ": " +
                             v.detail);
    }

  GradedAlgebra<RationalField> ym2(
      make_family(spec_of(Q, FamilyKind::YangMills, 2)));
  const std::vector<std::int64_t> pinned = {1, 3, 9, 24, 64, 168, 441};
  r.expect(ym2.dims(6) == pinned, "s=2 dims " + vec_text(ym2.dims(6)));

  // the largest setting runs over a prime field, cross-checked against the
  // rational values through degree 6
  PrimeField P(2147483647);
  for (auto kind : {FamilyKind::YangMills, FamilyKind::SuperYangMills}) {
    GradedAlgebra<PrimeField> Ap(make_family(spec_of(P, kind, 3)));
    GradedAlgebra<RationalField> Aq(make_family(spec_of(Q, kind, 3)));
    const auto series = family_series(kind, 4);
    auto v = hilbert_compare(Ap, series->first, series->second, 8);
    r.expect(v.pass(), family_name(kind) + " s=3 mod p: " + v.detail);
    r.expect(Ap.dims(6) == Aq.dims(6),
             family_name(kind) + " s=3 rational spot-check mismatch");
  }
}

void crit_koszulity(Note& r) {
  RationalField Q;
  for (auto kind : {FamilyKind::YangMills, FamilyKind::SuperYangMills})
    for (int s = 1; s <= 3; ++s) {
      GradedAlgebra<RationalField> A(make_family(spec_of(Q, kind, s)));
      auto v = koszulity(A, 7);
      r.expect(v.pass(), family_name(kind) + " s=" + std::to_string(s) + ": " +
                             v.detail);
    }

  for (int eps : {1, -1}) {
    auto sd = spec_of(Q, FamilyKind::SelfDuality, 3);
    sd.eps = eps;
    GradedAlgebra<RationalField> A(make_family(sd));
    auto v = koszulity(A, 8);
    r.expect(v.pass(),
             "self-duality eps=" + std::to_string(eps) + ": " + v.detail);
  }
  GaussianField Qi;
  {
    GradedAlgebra<GaussianField> A(
        make_family(spec_of(Qi, FamilyKind::SuperSelfDuality, 3)));
    auto v = koszulity(A, 8);
    r.expect(v.pass(), "super-self-duality: " + v.detail);
  }
  {
    auto ssd = spec_of(Qi, FamilyKind::SuperSelfDuality, 3);
    ssd.eps = -1;
    GradedAlgebra<GaussianField> A(make_family(ssd));
    auto v = koszulity(A, 6);
    r.expect(v.pass(), "super-self-duality eps=-1: " + v.detail);
  }

  const std::vector<std::pair<int, int>> zetas = {
      {1, 1}, {0, 1}, {1, 2}, {3, 1}, {-1, 1}};
  for (auto [z0, z1] : zetas) {
    auto spec = spec_of(Q, FamilyKind::DeformedYM, 2);
    spec.zeta = {Q.from_int(z0), Q.from_int(z1)};
    r.expect(!Q.is_zero(singular_value(spec)),
             "zeta drawn on the singular locus");
    GradedAlgebra<RationalField> A(make_family(spec));
    auto v = koszulity(A, 6);
    r.expect(v.pass(), "deformed zeta=(" + std::to_string(z0) + "," +
                           std::to_string(z1) + "): " + v.detail);
  }

  for (const auto& spec : random_beps(3, 3)) {
    GradedAlgebra<RationalField> A(make_family(spec));
    auto v = koszulity(A, 6);
    r.expect(v.pass(), "b-epsilon eps=" + std::to_string(spec.eps) + ": " +
                           v.detail);
  }
}

void crit_gorenstein(Note& r) {
  RationalField Q;
  for (auto kind : {FamilyKind::YangMills, FamilyKind::SuperYangMills})
    for (int s = 1; s <= 3; ++s) {
      GradedAlgebra<RationalField> A(make_family(spec_of(Q, kind, s)));
      auto v = gorenstein(A, 3, 7);
      r.expect(v.pass(), family_name(kind) + " s=" + std::to_string(s) + ": " +
                             v.detail);
    }

  auto dym = spec_of(Q, FamilyKind::DeformedYM, 2);
  dym.zeta = {Q.from_int(1), Q.from_int(2)};
  GradedAlgebra<RationalField> D(make_family(dym));
  auto vd = gorenstein(D, 3, 6);
  r.expect(vd.pass(), "deformed: " + vd.detail);

  GradedAlgebra<RationalField> B(make_family(random_beps(1, 3)[0]));
  auto vb = gorenstein(B, 3, 6);
  r.expect(vb.pass(), "b-epsilon: " + vb.detail);

  // the quadratic super algebra is Koszul but not Gorenstein: the dual ends
  // have ranks 1 and 3, so the dualized resolution cannot concentrate
  GaussianField Qi;
  GradedAlgebra<GaussianField> S(
      make_family(spec_of(Qi, FamilyKind::SuperSelfDuality, 3)));
  GradedAlgebra<GaussianField> Sd(S.dual_presentation());
  r.expect(Sd.dim(0) == 1 && Sd.dim(2) == 3, "dual end ranks are not 1 and 3");
  auto vs = gorenstein(S, 2, 5);
  r.expect(!vs.pass(), "expected a failing verdict, got: " + vs.detail);
}

void crit_parastatistics(Note& r) {
  RationalField Q;
  for (auto kind : {FamilyKind::Parafermionic, FamilyKind::Parabosonic}) {
    GradedAlgebra<RationalField> A(make_family(spec_of(Q, kind, 2)));
    auto v = koszulity(A, 8);
    r.expect(!v.pass(), family_name(kind) + ": no homology witness up to 8");
    if (!v.pass()) {
      r.expect(v.witness_n >= 1 && v.witness_n <= 8,
               family_name(kind) + ": witness degree out of range");
      r.add(family_name(kind) + " witness at n=" + std::to_string(v.witness_n));
    }
    const auto series = family_series(kind, 3);
    auto h = hilbert_compare(A, series->first, series->second, 6);
    r.expect(h.pass(), family_name(kind) + ": " + h.detail);
  }
  GradedAlgebra<RationalField> pb(
      make_family(spec_of(Q, FamilyKind::Parabosonic, 2)));
  const std::vector<std::int64_t> want = {1, 3, 9, 19, 39, 69, 119};
  r.expect(pb.dims(6) == want, "parabosonic dims " + vec_text(pb.dims(6)));
}

void crit_hochschild(Note& r) {
  RationalField Q;
  GradedAlgebra<RationalField> A(
      make_family(spec_of(Q, FamilyKind::YangMills, 2)));
  WTable<RationalField> W(A);

  const std::vector<std::vector<std::int64_t>> expect = {
      {1}, {3, 3}, {6, 6}, {11, 14, 3}, {18, 21, 4, 1}};
  for (int t = 0; t <= 4; ++t) {
    auto h = homology_dims(small_hochschild_slice(W, t));
    r.expect(h == expect[t],
             "degree " + std::to_string(t) + " homology " + vec_text(h));
  }

  // alternating sums of the homology match the component count
  // a_t - 3a_{t-1} + 3a_{t-3} - a_{t-4} and vanish beyond degree zero
  auto a = [&](int j) { return j < 0 ? std::int64_t(0) : A.dim(j); };
  for (int t = 0; t <= 4; ++t) {
    auto h = homology_dims(small_hochschild_slice(W, t));
    std::int64_t alt = 0;
    for (std::size_t k = 0; k < h.size(); ++k) alt += (k % 2 ? -1 : 1) * h[k];
    const std::int64_t beta = a(t) - 3 * a(t - 1) + 3 * a(t - 3) - a(t - 4);
    r.expect(alt == beta, "degree " + std::to_string(t) +
                              " alternating sum " + std::to_string(alt) +
                              " vs " + std::to_string(beta));
    r.expect(beta == (t == 0 ? 1 : 0),
             "degree " + std::to_string(t) + " characteristic " +
                 std::to_string(beta));
  }

  auto ep = euler_poincare(A, 4, true);
  r.expect(ep.pass(), ep.detail);
}

void crit_middle_matrices(Note& r) {
  RationalField Q;
  GaussianField Qi;

  auto run = [&](auto spec, const std::string& label) {
    using Fld = decltype(spec.fld);
    GradedAlgebra<Fld> A(make_family(spec));
    WTable<Fld> W(A);
    auto mm = middle_matrix(spec);
    const int N = A.degree();
    W.override_basis(N, mm.domain_basis);
    for (int t = N; t <= 5; ++t) {
      auto s = koszul_slice(W, t);
      r.expect(s.diffs.size() > 2 &&
                   mat_eq(s.diffs[2], right_mult_block(A, mm.entries,
                                                       mm.entry_degree, t - N)),
               label + ": middle boundary differs at degree " +
                   std::to_string(t));
    }
  };

  run(spec_of(Q, FamilyKind::YangMills, 2), "yang-mills");
  run(spec_of(Q, FamilyKind::SuperYangMills, 2), "super-yang-mills");
  auto dym = spec_of(Q, FamilyKind::DeformedYM, 2);
  dym.zeta = {Q.from_int(1), Q.from_int(2)};
  run(dym, "deformed");
  run(random_beps(1, 3)[0], "b-epsilon");
  run(spec_of(Qi, FamilyKind::SuperSelfDuality, 3), "super-self-duality");

  // entrywise form of the generic bimodule boundary in the distinguished
  // bases: relation rows for the cubic component, their palindromic
  // contraction on top
  auto spec = spec_of(Q, FamilyKind::YangMills, 2);
  GradedAlgebra<RationalField> A(make_family(spec));
  WTable<RationalField> W(A);
  Mat<RationalField> rel = family_relation_rows(spec);
  W.override_basis(3, rel);
  Mat<RationalField> w4(Q, 1, 81);
  for (std::int64_t mu = 0; mu < 3; ++mu)
    for (const auto& [c, v] : rel.rows[mu]) w4.add_to(0, mu * 27 + c, v);
  W.override_basis(4, w4);
  auto data = bimodule_differential_data(W);

  auto T = [&](int lam, int a, int b, int c) -> std::int64_t {
    return (a == b && c == lam ? 1 : 0) - 2 * (a == c && b == lam ? 1 : 0) +
           (b == c && a == lam ? 1 : 0);
  };

  r.expect(data.terms[1].size() == 3, "generator boundary arity");
  for (int a = 0; a < 3; ++a) {
    auto got = term_map(data.terms[1][a]);
    decltype(got) want;
    want[{0, {a}, {}}] = Q.one();
    want[{0, {}, {a}}] = Q.from_int(-1);
    r.expect(got == want,
             "generator boundary differs at index " + std::to_string(a));
  }

  r.expect(data.terms[2].size() == 3, "relation boundary arity");
  for (int lam = 0; lam < 3; ++lam) {
    std::map<std::tuple<std::int64_t, std::vector<int>, std::vector<int>>,
             Rational>
        want;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) {
          const std::int64_t coeff = T(lam, a, b, c);
          if (coeff == 0) continue;
          want[{c, {a, b}, {}}] += Rational(coeff);
          want[{b, {a}, {c}}] += Rational(coeff);
          want[{a, {}, {b, c}}] += Rational(coeff);
        }
    std::erase_if(want, [](const auto& kv) { return kv.second == 0; });
    r.expect(term_map(data.terms[2][lam]) == want,
             "relation boundary differs at index " + std::to_string(lam));
  }

  r.expect(data.terms[3].size() == 1, "top boundary arity");
  {
    auto got = term_map(data.terms[3][0]);
    decltype(got) want;
    for (std::int64_t mu = 0; mu < 3; ++mu) {
      want[{mu, {static_cast<int>(mu)}, {}}] = Q.one();
      want[{mu, {}, {static_cast<int>(mu)}}] = Q.from_int(-1);
    }
    r.expect(got == want, "top boundary differs");
  }
}

void crit_centrality(Note& r) {
  RationalField Q;
  GaussianField Qi;

  for (int s = 2; s <= 3; ++s) {
    GradedAlgebra<RationalField> A(
        make_family(spec_of(Q, FamilyKind::YangMills, s)));
    GradedAlgebra<RationalField> D(A.dual_presentation());
    auto v = centrality(D, squares(Q, s + 1), 1, 4);
    r.expect(v.pass(), "dual invariant s=" + std::to_string(s) + ": " + v.detail);
  }

  for (int s = 2; s <= 3; ++s) {
    GradedAlgebra<RationalField> A(
        make_family(spec_of(Q, FamilyKind::SuperYangMills, s)));
    auto v = centrality(A, squares(Q, s + 1), 1, 6);
    r.expect(v.pass(),
             "super invariant s=" + std::to_string(s) + ": " + v.detail);
  }

  // non-identity metric: the invariant uses the inverse metric coefficients
  {
    auto spec = spec_of(Q, FamilyKind::SuperYangMills, 2);
    spec.metric = {{Q.from_int(1), Q.zero(), Q.zero()},
                   {Q.zero(), Q.from_int(1), Q.zero()},
                   {Q.zero(), Q.zero(), Q.from_int(-1)}};
    GradedAlgebra<RationalField> A(make_family(spec));
    auto inv = element_from_terms(
        Q, 3,
        {{{0, 0}, Q.one()}, {{1, 1}, Q.one()}, {{2, 2}, Q.from_int(-1)}});
    auto v = centrality(A, inv, 1, 5);
    r.expect(v.pass(), "indefinite metric invariant: " + v.detail);
  }

  for (int s = 2; s <= 3; ++s) {
    GradedAlgebra<RationalField> A(
        make_family(spec_of(Q, FamilyKind::SuperYangMills, s)));
    GradedAlgebra<RationalField> D(A.dual_presentation());
    auto v = centrality(D, squares(Q, s + 1), -1, 4);
    r.expect(v.pass(),
             "sign-central dual s=" + std::to_string(s) + ": " + v.detail);
  }

  for (int eps : {1, -1}) {
    auto spec = spec_of(Qi, FamilyKind::SuperSelfDuality, 3);
    spec.eps = eps;
    GradedAlgebra<GaussianField> A(make_family(spec));
    auto v = centrality(A, squares(Qi, 4), 1, 6);
    r.expect(v.pass(),
             "quadratic eps=" + std::to_string(eps) + ": " + v.detail);
  }
}

void crit_frobenius(Note& r) {
  RationalField Q;
  for (int s = 1; s <= 3; ++s) {
    GradedAlgebra<RationalField> A(
        make_family(spec_of(Q, FamilyKind::YangMills, s)));
    GradedAlgebra<RationalField> D(A.dual_presentation());
    auto fr = frobenius(D, 4);
    r.expect(fr.verdict.pass(),
             "s=" + std::to_string(s) + ": " + fr.verdict.detail);
    r.expect(mat_eq(fr.nakayama, Mat<RationalField>::identity(Q, s + 1)),
             "s=" + std::to_string(s) + ": automorphism is not the identity");

    GradedAlgebra<RationalField> S(
        make_family(spec_of(Q, FamilyKind::SuperYangMills, s)));
    GradedAlgebra<RationalField> Sd(S.dual_presentation());
    auto fs = frobenius(Sd, 4);
    r.expect(fs.verdict.pass(),
             "super s=" + std::to_string(s) + ": " + fs.verdict.detail);
    r.expect(
        mat_eq(fs.nakayama, mat_scale(Mat<RationalField>::identity(Q, s + 1),
                                      Q.from_int(-1))),
        "super s=" + std::to_string(s) + ": automorphism is not minus one");
  }
}

void crit_quotients(Note& r) {
  GaussianField Qi;
  auto ym = make_family(spec_of(Qi, FamilyKind::YangMills, 3));
  auto sd = make_family(spec_of(Qi, FamilyKind::SelfDuality, 3));
  auto sym = make_family(spec_of(Qi, FamilyKind::SuperYangMills, 3));
  auto ssd = make_family(spec_of(Qi, FamilyKind::SuperSelfDuality, 3));
  auto skl_spec = spec_of(Qi, FamilyKind::Sklyanin, 3);
  skl_spec.alpha = {Qi.from_int(1), Qi.from_int(2), Qi.from_int(3)};
  auto skl = make_family(skl_spec);

  const std::vector<int> id4 = {0, 1, 2, 3};
  auto v1 = quotient_map(ym, sd, id4);
  r.expect(v1.pass(), "cubic onto self-duality: " + v1.detail);
  auto v2 = quotient_map(sym, ssd, id4);
  r.expect(v2.pass(), "super cubic onto quadratic: " + v2.detail);
  auto v3 = quotient_map(ssd, skl, id4);
  r.expect(v3.pass(), "quadratic onto sklyanin: " + v3.detail);

  GradedAlgebra<GaussianField> S(skl);
  const std::vector<std::int64_t> want = {1, 4, 10, 20, 35};
  r.expect(S.dims(4) == want, "sklyanin dims " + vec_text(S.dims(4)));
  const auto series = family_series(FamilyKind::Sklyanin, 4);
  auto h = hilbert_compare(S, series->first, series->second, 4);
  r.expect(h.pass(), "sklyanin series: " + h.detail);
}

void crit_structural(Note& r) {
  // composite-zero on every emitted slice, for every family kind
  auto sweep = [&](auto spec, int cap, const std::string& label) {
    using Fld = decltype(spec.fld);
    GradedAlgebra<Fld> A(make_family(spec));
    WTable<Fld> W(A);
    for (int t = 0; t <= cap; ++t) {
      auto ks = koszul_slice(W, t);
      for (std::size_t k = 2; k < ks.diffs.size(); ++k)
        r.expect(mat_mul(ks.diffs[k], ks.diffs[k - 1]).is_zero(),
                 label + ": resolution composite at (t,k)=(" +
                     std::to_string(t) + "," + std::to_string(k) + ")");
      auto hs = small_hochschild_slice(W, t);
      for (std::size_t k = 2; k < hs.diffs.size(); ++k)
        r.expect(mat_mul(hs.diffs[k], hs.diffs[k - 1]).is_zero(),
                 label + ": bimodule composite at (t,k)=(" +
                     std::to_string(t) + "," + std::to_string(k) + ")");
    }
  };

  RationalField Q;
  GaussianField Qi;
  sweep(spec_of(Q, FamilyKind::YangMills, 2), 5, "yang-mills");
  sweep(spec_of(Q, FamilyKind::SuperYangMills, 2), 5, "super-yang-mills");
  sweep(spec_of(Q, FamilyKind::Parafermionic, 2), 5, "parafermionic");
  sweep(spec_of(Q, FamilyKind::Parabosonic, 2), 5, "parabosonic");
  sweep(spec_of(Q, FamilyKind::SelfDuality, 3), 5, "self-duality");
  sweep(spec_of(Qi, FamilyKind::SuperSelfDuality, 3), 5, "super-self-duality");
  {
    auto dym = spec_of(Q, FamilyKind::DeformedYM, 2);
    dym.zeta = {Q.from_int(1), Q.from_int(2)};
    sweep(dym, 5, "deformed");
  }
  {
    auto tp = spec_of(Q, FamilyKind::ThreeParameterYM, 2);
    tp.zeta = {Q.from_int(1), Q.from_int(1), Q.from_int(2)};
    sweep(tp, 5, "three-parameter");
  }
  {
    auto skl = spec_of(Qi, FamilyKind::Sklyanin, 3);
    skl.alpha = {Qi.from_int(1), Qi.from_int(2), Qi.from_int(3)};
    sweep(skl, 5, "sklyanin");
  }
  sweep(random_beps(1, 3)[0], 4, "b-epsilon");
  sweep(spec_of(Q, FamilyKind::YangMills, 3), 4, "yang-mills s=3");

  // one-sided boundaries of the cubic bimodule complex cube to zero, commute
  // with each other, and factor the length-two composites
  auto cubes = [&](auto spec, int tcap, const std::string& label) {
    using Fld = decltype(spec.fld);
    GradedAlgebra<Fld> A(make_family(spec));
    WTable<Fld> W(A);
    for (int t = 3; t <= tcap; ++t) {
      auto dl = [&](int nu) { return bimodule_dl(W, t, nu); };
      auto dr = [&](int nu) { return bimodule_dr(W, t, nu); };
      for (int nu = 2; nu <= 4; ++nu)
        r.expect(mat_eq(mat_mul(dl(nu), dr(nu - 1)), mat_mul(dr(nu), dl(nu - 1))),
                 label + ": boundaries fail to commute at t=" +
                     std::to_string(t));
      r.expect(mat_mul(mat_mul(dl(3), dl(2)), dl(1)).is_zero() &&
                   mat_mul(mat_mul(dl(4), dl(3)), dl(2)).is_zero(),
               label + ": leading cube at t=" + std::to_string(t));
      r.expect(mat_mul(mat_mul(dr(3), dr(2)), dr(1)).is_zero() &&
                   mat_mul(mat_mul(dr(4), dr(3)), dr(2)).is_zero(),
               label + ": trailing cube at t=" + std::to_string(t));

      Mat<Fld> odd1 = mat_sub(dl(1), dr(1));
      Mat<Fld> even =
          mat_add(mat_add(mat_mul(dl(3), dl(2)), mat_mul(dr(3), dl(2))),
                  mat_mul(dr(3), dr(2)));
      Mat<Fld> odd3 = mat_sub(dl(4), dr(4));
      r.expect(mat_mul(even, odd1).is_zero() && mat_mul(odd3, even).is_zero(),
               label + ": factorization composite at t=" + std::to_string(t));
      r.expect(!even.is_zero() && !odd1.is_zero(),
               label + ": factor collapsed at t=" + std::to_string(t));
    }
  };

  cubes(spec_of(Q, FamilyKind::YangMills, 2), 5, "yang-mills");
  {
    auto dym = spec_of(Q, FamilyKind::DeformedYM, 2);
    dym.zeta = {Q.from_int(1), Q.from_int(2)};
    cubes(dym, 4, "deformed");
  }
}

}  // namespace

int main() {
  criterion(1, "finite dual dimension tables", crit_dual_tables);
  criterion(2, "closed-form graded dimension series", crit_series);
  criterion(3, "resolution exactness for the regular families", crit_koszulity);
  criterion(4, "end-concentrated dualized resolutions", crit_gorenstein);
  criterion(5, "non-exactness witnesses for the parastatistics pair",
            crit_parastatistics);
  criterion(6, "bimodule homology table and alternating sums", crit_hochschild);
  criterion(7, "companion form of the middle differentials",
            crit_middle_matrices);
  criterion(8, "centrality of the quadratic invariants", crit_centrality);
  criterion(9, "Frobenius structure of the finite duals", crit_frobenius);
  criterion(10, "quotient chain onto the quadratic algebras", crit_quotients);
  criterion(11, "composite and factorization identities", crit_structural);

  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all criteria passed" << std::endl;
  return 0;
}
