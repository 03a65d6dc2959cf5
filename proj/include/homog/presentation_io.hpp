#pragma once

// Line-oriented presentation files.
//
//   name <ident>
//   field Q | Qi | Fp:<prime>
//   generators <count>
//   degree <N>
//   rel [i0,i1,...]:<coeff> [j0,j1,...]:<coeff> ...
//   family <kind> key=value ...
//
// '#' starts a comment; blank lines are ignored.  A file gives either
// explicit `rel` lines or a single `family` line.  Coefficients and family
// parameter values are kept as raw text here and parsed against a concrete
// field by realize(), so the same file can be re-read over an overridden
// field.  All diagnostics carry 1-based line/column positions.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "homog/families.hpp"

namespace homog {

struct RelTerm {
  std::vector<int> word;
  std::string coeff;
  int line = 0;
  int col = 0;
};

struct RelLine {
  std::vector<RelTerm> terms;
};

struct FamilyArg {
  std::string key;
  std::string value;
  int line = 0;
  int col = 0;
};

struct PresentationText {
  std::string name;
  FieldSpec field{FieldKind::Rational, 0};
  bool has_field = false;
  int generators = -1;
  int degree = -1;
  std::vector<RelLine> relations;
  bool has_family = false;
  std::string family;
  std::vector<FamilyArg> family_args;
  int family_line = 0;
};

namespace io_detail {

[[noreturn]] inline void fail(int line, int col, const std::string& msg) {
  std::ostringstream os;
  if (line > 0) os << "line " << line << ", column " << col << ": ";
  os << msg;
  throw parse_error(os.str());
}

inline long long parse_int_token(const std::string& tok, int line, int col,
                                 const char* what) {
  if (tok.empty()) fail(line, col, std::string("missing ") + what);
  std::size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) fail(line, col, std::string("malformed ") + what);
  long long v = 0;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9')
      fail(line, col,
           std::string("malformed ") + what + " '" + tok + "'");
    v = v * 10 + (tok[i] - '0');
    if (v > (1LL << 40)) fail(line, col, std::string(what) + " out of range");
  }
  return tok[0] == '-' ? -v : v;
}

// a `[i0,i1,...]:<coeff>` token
inline RelTerm parse_rel_term(const std::string& tok, int line, int col) {
  RelTerm term;
  term.line = line;
  term.col = col;
  if (tok.empty() || tok[0] != '[')
    fail(line, col, "relation term must start with '[' in '" + tok + "'");
  const std::size_t close = tok.find(']');
  if (close == std::string::npos)
    fail(line, col, "unterminated word bracket in '" + tok + "'");
  std::size_t pos = 1;
  while (pos < close) {
    std::size_t next = tok.find(',', pos);
    if (next == std::string::npos || next > close) next = close;
    const std::string letter = tok.substr(pos, next - pos);
    const long long v =
        parse_int_token(letter, line, col + static_cast<int>(pos), "letter");
    if (v < 0) fail(line, col + static_cast<int>(pos), "negative letter");
    term.word.push_back(static_cast<int>(v));
    pos = next + 1;
  }
  if (close + 1 >= tok.size() || tok[close + 1] != ':')
    fail(line, col, "expected ':<coeff>' after the word in '" + tok + "'");
  term.coeff = tok.substr(close + 2);
  if (term.coeff.empty())
    fail(line, col + static_cast<int>(close) + 2, "empty coefficient");
  return term;
}

struct Token {
  std::string text;
  int col = 0;  // 1-based start column
};

inline std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r' && line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

}  // namespace io_detail

inline PresentationText parse_presentation_text(const std::string& text) {
  using io_detail::fail;
  PresentationText out;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = io_detail::tokenize(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    auto need_one_value = [&](const char* what) -> const io_detail::Token& {
      if (toks.size() != 2)
        fail(lineno, toks[0].col,
             std::string("'") + kw + "' takes exactly one " + what);
      return toks[1];
    };
    if (kw == "name") {
      if (!out.name.empty()) fail(lineno, toks[0].col, "duplicate name line");
      out.name = need_one_value("identifier").text;
    } else if (kw == "field") {
      if (out.has_field) fail(lineno, toks[0].col, "duplicate field line");
      const auto& tok = need_one_value("tag");
      try {
        out.field = FieldSpec::parse(tok.text);
      } catch (const parse_error& e) {
        fail(lineno, tok.col, e.what());
      }
      out.has_field = true;
    } else if (kw == "generators") {
      if (out.generators >= 0)
        fail(lineno, toks[0].col, "duplicate generators line");
      const auto& tok = need_one_value("count");
      const long long v =
          io_detail::parse_int_token(tok.text, lineno, tok.col, "count");
      if (v < 1 || v > 64) fail(lineno, tok.col, "generator count out of range");
      out.generators = static_cast<int>(v);
    } else if (kw == "degree") {
      if (out.degree >= 0) fail(lineno, toks[0].col, "duplicate degree line");
      const auto& tok = need_one_value("degree");
      const long long v =
          io_detail::parse_int_token(tok.text, lineno, tok.col, "degree");
      if (v < 2 || v > 8) fail(lineno, tok.col, "relation degree out of range");
      out.degree = static_cast<int>(v);
    } else if (kw == "rel") {
      if (out.has_family)
        fail(lineno, toks[0].col,
             "a file gives either rel lines or a family line, not both");
      if (toks.size() < 2)
        fail(lineno, toks[0].col, "rel line without terms");
      RelLine rel;
      for (std::size_t i = 1; i < toks.size(); ++i)
        rel.terms.push_back(
            io_detail::parse_rel_term(toks[i].text, lineno, toks[i].col));
      out.relations.push_back(std::move(rel));
    } else if (kw == "family") {
      if (out.has_family) fail(lineno, toks[0].col, "duplicate family line");
      if (!out.relations.empty())
        fail(lineno, toks[0].col,
             "a file gives either rel lines or a family line, not both");
      if (toks.size() < 2) fail(lineno, toks[0].col, "family line without kind");
      out.has_family = true;
      out.family = toks[1].text;
      out.family_line = lineno;
      for (std::size_t i = 2; i < toks.size(); ++i) {
        const std::string& t = toks[i].text;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= t.size())
          fail(lineno, toks[i].col,
               "family parameter must look like key=value, got '" + t + "'");
        out.family_args.push_back(
            {t.substr(0, eq), t.substr(eq + 1), lineno, toks[i].col});
      }
    } else {
      fail(lineno, toks[0].col, "unknown keyword '" + kw + "'");
    }
  }

  if (!out.has_family) {
    if (out.generators < 0) throw parse_error("missing generators line");
    if (out.degree < 0) throw parse_error("missing degree line");
    for (const auto& rel : out.relations)
      for (const auto& term : rel.terms) {
        if (static_cast<int>(term.word.size()) != out.degree)
          fail(term.line, term.col,
               "word length " + std::to_string(term.word.size()) +
                   " differs from the relation degree " +
                   std::to_string(out.degree));
        for (int a : term.word)
          if (a >= out.generators)
            fail(term.line, term.col,
                 "letter " + std::to_string(a) + " exceeds the generator count " +
                     std::to_string(out.generators));
      }
  }
  return out;
}

// Canonical emission; raw coefficient/value text is preserved, so parsing
// the emission realizes the same presentation as the original.
inline std::string emit_presentation_text(const PresentationText& in) {
  std::ostringstream os;
  if (!in.name.empty()) os << "name " << in.name << "\n";
  if (in.has_field) os << "field " << in.field.to_string() << "\n";
  if (in.generators >= 0) os << "generators " << in.generators << "\n";
  if (in.degree >= 0) os << "degree " << in.degree << "\n";
  if (in.has_family) {
    os << "family " << in.family;
    for (const auto& arg : in.family_args)
      os << " " << arg.key << "=" << arg.value;
    os << "\n";
  }
  for (const auto& rel : in.relations) {
    os << "rel";
    for (const auto& term : rel.terms) {
      os << " [";
      for (std::size_t i = 0; i < term.word.size(); ++i)
        os << (i ? "," : "") << term.word[i];
      os << "]:" << term.coeff;
    }
    os << "\n";
  }
  return os.str();
}

namespace io_detail {

// comma-separated scalars
template <class F>
std::vector<typename F::Elem> parse_scalar_list(const F& fld,
                                                const FamilyArg& arg) {
  std::vector<typename F::Elem> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = arg.value.find(',', pos);
    if (next == std::string::npos) next = arg.value.size();
    try {
      out.push_back(fld.parse(arg.value.substr(pos, next - pos)));
    } catch (const parse_error& e) {
      fail(arg.line, arg.col, e.what());
    }
    if (next == arg.value.size()) break;
    pos = next + 1;
  }
  return out;
}

// semicolon-separated rows of comma-separated scalars
template <class F>
std::vector<std::vector<typename F::Elem>> parse_matrix_value(
    const F& fld, const FamilyArg& arg) {
  std::vector<std::vector<typename F::Elem>> rows;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = arg.value.find(';', pos);
    if (next == std::string::npos) next = arg.value.size();
    FamilyArg row{arg.key, arg.value.substr(pos, next - pos), arg.line,
                  arg.col};
    rows.push_back(parse_scalar_list(fld, row));
    if (next == arg.value.size()) break;
    pos = next + 1;
  }
  for (const auto& r : rows)
    if (r.size() != rows.size())
      fail(arg.line, arg.col,
           "matrix value for '" + arg.key + "' is not square");
  return rows;
}

}  // namespace io_detail

template <class F>
FamilySpec<F> realize_family(const PresentationText& in, const F& fld) {
  using io_detail::fail;
  if (!in.has_family) throw error("presentation text has no family line");
  FamilySpec<F> spec;
  spec.fld = fld;
  try {
    spec.kind = family_from_name(in.family);
  } catch (const parse_error& e) {
    fail(in.family_line, 1, e.what());
  }
  for (const auto& arg : in.family_args) {
    if (arg.key == "s") {
      const long long v =
          io_detail::parse_int_token(arg.value, arg.line, arg.col, "s value");
      if (v < 1 || v > 16) fail(arg.line, arg.col, "s out of range");
      spec.s = static_cast<int>(v);
    } else if (arg.key == "eps") {
      if (arg.value == "1" || arg.value == "+1")
        spec.eps = 1;
      else if (arg.value == "-1")
        spec.eps = -1;
      else
        fail(arg.line, arg.col, "eps must be +1 or -1");
    } else if (arg.key == "metric") {
      if (arg.value != "identity")
        spec.metric = io_detail::parse_matrix_value(fld, arg);
    } else if (arg.key == "zeta") {
      spec.zeta = io_detail::parse_scalar_list(fld, arg);
    } else if (arg.key == "alpha") {
      spec.alpha = io_detail::parse_scalar_list(fld, arg);
    } else if (arg.key == "b") {
      spec.bmat = io_detail::parse_matrix_value(fld, arg);
    } else {
      fail(arg.line, arg.col, "unknown family parameter '" + arg.key + "'");
    }
  }
  return spec;
}

template <class F>
Presentation<F> realize(const PresentationText& in, const F& fld) {
  using io_detail::fail;
  if (in.has_family) {
    Presentation<F> pres = make_family(realize_family(in, fld));
    if (in.generators >= 0 && in.generators != pres.g)
      fail(in.family_line, 1,
           "generators line says " + std::to_string(in.generators) +
               " but the family has " + std::to_string(pres.g));
    if (in.degree >= 0 && in.degree != pres.N)
      fail(in.family_line, 1,
           "degree line says " + std::to_string(in.degree) +
               " but the family relations have degree " +
               std::to_string(pres.N));
    if (!in.name.empty()) pres.name = in.name;
    return pres;
  }
  const int g = in.generators;
  Mat<F> rows(fld, static_cast<std::int64_t>(in.relations.size()),
              pow_i64(g, in.degree));
  for (std::size_t r = 0; r < in.relations.size(); ++r)
    for (const auto& term : in.relations[r].terms) {
      typename F::Elem v;
      try {
        v = fld.parse(term.coeff);
      } catch (const parse_error& e) {
        fail(term.line, term.col, e.what());
      }
      rows.add_to(static_cast<std::int64_t>(r), word_index(g, term.word), v);
    }
  return Presentation<F>(fld, in.name.empty() ? "algebra" : in.name, g,
                         in.degree, std::move(rows));
}

// Text form of an already-built presentation (used to report duals in a
// re-loadable format).
template <class F>
PresentationText text_of_presentation(const Presentation<F>& pres) {
  PresentationText out;
  out.name = pres.name;
  out.field = pres.fld.spec();
  out.has_field = true;
  out.generators = pres.g;
  out.degree = pres.N;
  for (std::int64_t r = 0; r < pres.relations.nrows; ++r) {
    RelLine rel;
    for (const auto& [c, v] : pres.relations.rows[r]) {
      RelTerm term;
      Col w = c;
      term.word.assign(pres.N, 0);
      for (int j = pres.N - 1; j >= 0; --j) {
        term.word[j] = static_cast<int>(w % pres.g);
        w /= pres.g;
      }
      term.coeff = pres.fld.to_string(v);
      rel.terms.push_back(std::move(term));
    }
    out.relations.push_back(std::move(rel));
  }
  return out;
}

}  // namespace homog
