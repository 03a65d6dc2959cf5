#pragma once

// Command dispatcher behind the homog binary.  run() is separated from
// main() so the test suite can drive the full surface in-process.
//
// Exit codes: 0 = requested verdicts pass (up to their caps), 1 = a verdict
// failed, 2 = input or usage error, 3 = work budget exceeded.  Reports are
// JSON with sorted keys and exact integer content, written to standard
// output or --out; timing goes to the error stream, never into the report.

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homog/checks.hpp"
#include "homog/presentation_io.hpp"

namespace homog {

namespace cli_detail {

using nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline json verdict_json(const Verdict& v) {
  json j;
  j["name"] = v.name;
  j["state"] = to_string(v.state);
  j["cap"] = v.cap;
  j["witness_k"] = v.witness_k;
  j["witness_n"] = v.witness_n;
  j["detail"] = v.detail;
  return j;
}

template <class F>
std::string element_text(const F& fld, int g, const AlgebraElement<F>& e) {
  if (e.words.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, v] : e.words) {
    if (!first) os << " ";
    first = false;
    std::vector<int> letters(e.degree, 0);
    Col rest = w;
    for (int j = e.degree - 1; j >= 0; --j) {
      letters[j] = static_cast<int>(rest % g);
      rest /= g;
    }
    os << "[";
    for (int j = 0; j < e.degree; ++j) os << (j ? "," : "") << letters[j];
    os << "]:" << fld.to_string(v);
  }
  return os.str();
}

template <class F>
json matrix_json(const F& fld, const Mat<F>& m) {
  json rows = json::array();
  for (std::int64_t r = 0; r < m.nrows; ++r) {
    json row = json::array();
    std::size_t at = 0;
    for (Col c = 0; c < m.ncols; ++c) {
      if (at < m.rows[r].size() && m.rows[r][at].first == c) {
        row.push_back(fld.to_string(m.rows[r][at].second));
        ++at;
      } else {
        row.push_back(fld.to_string(fld.zero()));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<int> parse_int_list(const std::string& text,
                                       const char* what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(static_cast<int>(io_detail::parse_int_token(
        text.substr(pos, next - pos), 0, 0, what)));
    if (next == text.size()) break;
    pos = next + 1;
  }
  return out;
}

struct Options {
  std::string file, family, field_override, out_path;
  int s = -1;
  std::string metric, zeta, alpha, bmat;
  int eps = 0;
  int cap = -1;
  std::int64_t budget = 0;
  bool dual = false;

  int D = 3;
  std::string element = "squares";
  int sign = 1;
  int top = -1;
  std::string onto_file, onto_family;
  int onto_s = -1;
  std::string onto_metric, onto_zeta, onto_alpha, onto_bmat;
  int onto_eps = 0;
  std::string map_text;
  std::string series_num, series_den;
};

// presentation text from --family flags
inline PresentationText family_text(const std::string& family, int s, int eps,
                                    const std::string& metric,
                                    const std::string& zeta,
                                    const std::string& alpha,
                                    const std::string& bmat) {
  PresentationText text;
  text.has_family = true;
  text.family = family;
  if (s >= 0) text.family_args.push_back({"s", std::to_string(s), 0, 0});
  if (eps != 0) text.family_args.push_back({"eps", std::to_string(eps), 0, 0});
  if (!metric.empty()) text.family_args.push_back({"metric", metric, 0, 0});
  if (!zeta.empty()) text.family_args.push_back({"zeta", zeta, 0, 0});
  if (!alpha.empty()) text.family_args.push_back({"alpha", alpha, 0, 0});
  if (!bmat.empty()) text.family_args.push_back({"b", bmat, 0, 0});
  return text;
}

}  // namespace cli_detail

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  using cli_detail::json;
  cli_detail::Options opt;

  CLI::App app{"exact verification for homogeneous algebra presentations",
               "homog"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* c) {
    c->add_option("--file", opt.file, "presentation file");
    c->add_option("--family", opt.family, "family kind instead of a file");
    c->add_option("--s", opt.s, "family size parameter");
    c->add_option("--eps", opt.eps, "family sign parameter (+1 or -1)");
    c->add_option("--metric", opt.metric,
                  "family metric: 'identity' or rows 'a,b;c,d'");
    c->add_option("--zeta", opt.zeta, "deformation scalars 'z0,z1[,z2]'");
    c->add_option("--alpha", opt.alpha, "three nonzero scalars 'a1,a2,a3'");
    c->add_option("--b", opt.bmat, "invertible matrix rows 'a,b;c,d'");
    c->add_option("--field", opt.field_override,
                  "override the field: Q, Qi or Fp:<prime>");
    c->add_option("--cap", opt.cap, "degree cap (default 8, or 7 for g >= 4)");
    c->add_option("--out", opt.out_path, "write the report to a file");
    c->add_option("--budget", opt.budget, "abort after this many matrix cells");
    c->add_flag("--dual", opt.dual, "run on the dual algebra");
    return c;
  };

  add_common(app.add_subcommand("dims", "graded dimensions through the cap"));
  add_common(app.add_subcommand(
      "dual", "dual components and a re-loadable dual presentation"));
  auto* c_hilbert = add_common(app.add_subcommand(
      "hilbert", "compare dimensions against a reference series"));
  c_hilbert->add_option("--series-num", opt.series_num,
                        "numerator coefficients 'c0,c1,...'");
  c_hilbert->add_option("--series-den", opt.series_den,
                        "denominator coefficients 'c0,c1,...'");
  add_common(app.add_subcommand(
      "koszul", "resolution exactness through the cap"));
  auto* c_gor = add_common(app.add_subcommand(
      "gorenstein", "end concentration of the dualized resolution"));
  c_gor->add_option("--D", opt.D, "expected resolution length (default 3)");
  add_common(app.add_subcommand(
      "hochschild", "homology table and alternating-sum identity"));
  add_common(app.add_subcommand(
      "duality", "align homology and cohomology tables under one shift"));
  auto* c_center = add_common(
      app.add_subcommand("center", "centrality of a distinguished element"));
  c_center->add_option("--element", opt.element,
                       "unit | squares | gen:<k> (default squares)");
  c_center->add_option("--sign", opt.sign, "1 = central, -1 = sign-central");
  auto* c_frob = add_common(app.add_subcommand(
      "frobenius", "pairing nondegeneracy and the twist matrix"));
  c_frob->add_option("--top", opt.top,
                     "top degree (default: first vanishing component minus 1)");
  auto* c_quot = add_common(app.add_subcommand(
      "quotient", "map source relations into a target ideal"));
  c_quot->add_option("--onto-file", opt.onto_file, "target presentation file");
  c_quot->add_option("--onto-family", opt.onto_family, "target family kind");
  c_quot->add_option("--onto-s", opt.onto_s, "target family size");
  c_quot->add_option("--onto-eps", opt.onto_eps, "target sign parameter");
  c_quot->add_option("--onto-metric", opt.onto_metric, "target metric");
  c_quot->add_option("--onto-zeta", opt.onto_zeta, "target deformation");
  c_quot->add_option("--onto-alpha", opt.onto_alpha, "target alpha");
  c_quot->add_option("--onto-b", opt.onto_bmat, "target matrix");
  c_quot->add_option("--map", opt.map_text,
                     "generator images 'i0,i1,...' (default identity)");
  add_common(app.add_subcommand(
      "matrices", "companion matrix and middle-differential cross-check"));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // help text
    err << e.what() << "\n";
    json j;
    j["error"] = e.what();
    out << j.dump(2) << "\n";
    return 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  const auto started = std::chrono::steady_clock::now();
  auto emit = [&](const json& j) {
    const std::string text = j.dump(2) + "\n";
    if (!opt.out_path.empty()) {
      std::ofstream f(opt.out_path);
      if (!f) throw error("cannot write '" + opt.out_path + "'");
      f << text;
    } else {
      out << text;
    }
  };

  try {
    if (!opt.file.empty() && !opt.family.empty())
      throw parse_error("give either --file or --family, not both");
    PresentationText text;
    if (!opt.file.empty()) {
      text = parse_presentation_text(cli_detail::read_file(opt.file));
    } else if (!opt.family.empty()) {
      text = cli_detail::family_text(opt.family, opt.s, opt.eps, opt.metric,
                                     opt.zeta, opt.alpha, opt.bmat);
    } else {
      throw parse_error("provide an input with --file or --family");
    }
    FieldSpec fs = text.has_field ? text.field
                                  : FieldSpec{FieldKind::Rational, 0};
    if (!opt.field_override.empty()) fs = FieldSpec::parse(opt.field_override);

    return with_field_context(fs, [&](auto fld) -> int {
      using F = decltype(fld);
      WorkBudget budget{opt.budget, 0};
      WorkBudget* bp = opt.budget > 0 ? &budget : nullptr;

      Presentation<F> pres = realize(text, fld);
      GradedAlgebra<F> base(pres, bp);
      std::optional<GradedAlgebra<F>> dual_store;
      if (opt.dual) dual_store.emplace(base.dual_presentation(), bp);
      GradedAlgebra<F>& alg = opt.dual ? *dual_store : base;

      const int cap = opt.cap >= 0 ? opt.cap
                                   : (alg.generators() <= 3 ? 8 : 7);
      json j;
      j["command"] = command;
      j["algebra"] = alg.presentation().name;
      j["field"] = fs.to_string();
      j["generators"] = alg.generators();
      j["degree"] = alg.degree();
      j["cap"] = cap;
      std::vector<Verdict> verdicts;

      if (command == "dims") {
        j["dims"] = alg.dims(cap);
      } else if (command == "dual") {
        Presentation<F> dp = alg.dual_presentation();
        std::vector<std::int64_t> dd;
        for (int n = 0; n <= cap; ++n) dd.push_back(alg.dual_dim(n));
        j["dual_dims"] = dd;
        j["dual_generators"] = dp.g;
        j["dual_relations"] = dp.relations.nrows;
        j["presentation"] = emit_presentation_text(text_of_presentation(dp));
      } else if (command == "hilbert") {
        Poly num, den;
        if (!opt.series_num.empty() || !opt.series_den.empty()) {
          if (opt.series_num.empty() || opt.series_den.empty())
            throw parse_error("give both --series-num and --series-den");
          std::vector<long long> vn, vd;
          for (int v : cli_detail::parse_int_list(opt.series_num,
                                                  "series coefficient"))
            vn.push_back(v);
          for (int v : cli_detail::parse_int_list(opt.series_den,
                                                  "series coefficient"))
            vd.push_back(v);
          num = poly_from_int(vn);
          den = poly_from_int(vd);
        } else if (text.has_family) {
          auto known = family_series(family_from_name(text.family),
                                     alg.generators());
          if (!known)
            throw parse_error("no reference series for this family; pass "
                              "--series-num/--series-den");
          num = known->first;
          den = known->second;
        } else {
          throw parse_error("explicit presentations need "
                            "--series-num/--series-den");
        }
        j["dims"] = alg.dims(cap);
        j["series_num"] = series_int_coeffs(num);
        j["series_den"] = series_int_coeffs(den);
        verdicts.push_back(hilbert_compare(alg, num, den, cap));
      } else if (command == "koszul") {
        std::vector<std::int64_t> dd;
        for (int n = 0; n <= cap; ++n) dd.push_back(alg.dual_dim(n));
        j["dual_dims"] = dd;
        verdicts.push_back(koszulity(alg, cap));
      } else if (command == "gorenstein") {
        j["D"] = opt.D;
        verdicts.push_back(gorenstein(alg, opt.D, cap));
      } else if (command == "hochschild") {
        WTable<F> W(alg);
        std::vector<std::vector<std::int64_t>> table;
        std::vector<std::int64_t> chis;
        std::size_t width = 0;
        for (int n = 0; n <= cap; ++n) {
          table.push_back(homology_dims(small_hochschild_slice(W, n)));
          width = std::max(width, table.back().size());
          chis.push_back(euler_characteristic(alg, n));
        }
        for (auto& row : table) row.resize(width, 0);
        j["homology"] = table;
        j["characteristics"] = chis;
        verdicts.push_back(euler_poincare(alg, cap, false));
      } else if (command == "duality") {
        auto rep = poincare_duality(alg, cap);
        j["homology"] = rep.homology;
        json co;
        for (const auto& [label, dims] : rep.cohomology)
          co[std::to_string(label)] = dims;
        j["cohomology"] = co;
        j["shift"] = rep.shift;
        verdicts.push_back(rep.verdict);
      } else if (command == "center") {
        if (opt.sign != 1 && opt.sign != -1)
          throw parse_error("--sign must be 1 or -1");
        AlgebraElement<F> elem;
        if (opt.element == "unit") {
          elem = AlgebraElement<F>{0, {{0, fld.one()}}};
        } else if (opt.element == "squares") {
          std::vector<std::pair<std::vector<int>, typename F::Elem>> terms;
          for (int a = 0; a < alg.generators(); ++a)
            terms.push_back({{a, a}, fld.one()});
          elem = element_from_terms(fld, alg.generators(), terms);
        } else if (opt.element.rfind("gen:", 0) == 0) {
          const int k = static_cast<int>(io_detail::parse_int_token(
              opt.element.substr(4), 0, 0, "generator index"));
          if (k < 0 || k >= alg.generators())
            throw parse_error("generator index out of range");
          elem = element_from_terms(fld, alg.generators(),
                                    {{{k}, fld.one()}});
        } else {
          throw parse_error("unknown --element (use unit, squares or gen:<k>)");
        }
        j["element"] = cli_detail::element_text(fld, alg.generators(), elem);
        j["sign"] = opt.sign;
        verdicts.push_back(centrality(alg, elem, opt.sign, cap));
      } else if (command == "frobenius") {
        int top = opt.top;
        if (top < 0) {
          for (int n = 1; n <= cap + 1 && top < 0; ++n)
            if (alg.dim(n) == 0) top = n - 1;
          if (top < 0)
            throw error("no vanishing component within the cap; pass --top");
        }
        j["top"] = top;
        auto rep = frobenius(alg, top);
        j["nakayama"] = cli_detail::matrix_json(fld, rep.nakayama);
        verdicts.push_back(rep.verdict);
      } else if (command == "quotient") {
        if (!opt.onto_file.empty() && !opt.onto_family.empty())
          throw parse_error("give either --onto-file or --onto-family");
        PresentationText tgt_text;
        if (!opt.onto_file.empty()) {
          tgt_text =
              parse_presentation_text(cli_detail::read_file(opt.onto_file));
        } else if (!opt.onto_family.empty()) {
          tgt_text = cli_detail::family_text(opt.onto_family, opt.onto_s,
                                             opt.onto_eps, opt.onto_metric,
                                             opt.onto_zeta, opt.onto_alpha,
                                             opt.onto_bmat);
        } else {
          throw parse_error("provide a target with --onto-file or "
                            "--onto-family");
        }
        if (tgt_text.has_field && opt.field_override.empty() &&
            !(tgt_text.field == fs))
          throw parse_error("source and target fields differ; use --field");
        Presentation<F> tgt = realize(tgt_text, fld);
        std::vector<int> gen_map;
        if (!opt.map_text.empty()) {
          gen_map = cli_detail::parse_int_list(opt.map_text, "generator image");
        } else {
          for (int a = 0; a < pres.g; ++a) gen_map.push_back(a);
        }
        j["onto"] = tgt.name;
        j["map"] = gen_map;
        verdicts.push_back(quotient_map(pres, tgt, gen_map));
      } else if (command == "matrices") {
        if (!text.has_family)
          throw parse_error("matrices requires a --family input");
        auto spec = realize_family(text, fld);
        auto mm = middle_matrix(spec);
        const int N = alg.degree();
        json entries = json::array();
        for (const auto& row : mm.entries) {
          json jr = json::array();
          for (const auto& e : row)
            jr.push_back(cli_detail::element_text(fld, alg.generators(), e));
          entries.push_back(std::move(jr));
        }
        j["matrix"] = entries;
        j["entry_degree"] = mm.entry_degree;
        WTable<F> W(alg);
        W.override_basis(N, mm.domain_basis);
        Verdict v = detail::verdict_pass(
            "middle-differential", cap,
            "middle boundary equals right multiplication by the matrix");
        for (int t = N; t <= cap; ++t) {
          auto slice = koszul_slice(W, t);
          if (slice.diffs.size() <= 2 ||
              !mat_eq(slice.diffs[2], right_mult_block(alg, mm.entries,
                                                       mm.entry_degree,
                                                       t - N))) {
            v = detail::verdict_fail(
                "middle-differential", cap, 2, t,
                "middle boundary differs from the matrix action at internal "
                "degree " + std::to_string(t));
            break;
          }
        }
        verdicts.push_back(v);
      } else {
        throw parse_error("unknown command '" + command + "'");
      }

      json jv = json::array();
      bool all_pass = true;
      for (const auto& v : verdicts) {
        jv.push_back(cli_detail::verdict_json(v));
        all_pass = all_pass && v.pass();
      }
      j["verdicts"] = jv;
      emit(j);
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - started);
      err << "elapsed_ms " << elapsed.count() << "\n";
      return all_pass ? 0 : 1;
    });
  } catch (const budget_error& e) {
    json j;
    j["error"] = e.what();
    out << j.dump(2) << "\n";
    err << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    json j;
    j["error"] = e.what();
    out << j.dump(2) << "\n";
    err << e.what() << "\n";
    return 2;
  }
}

}  // namespace homog
