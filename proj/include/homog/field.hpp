#pragma once

// Exact field arithmetic behind a uniform "field context" interface.
//
// A field context is a small value type F with a member type F::Elem and
// methods zero/one/from_int/add/sub/mul/div/neg/inv/is_zero/eq/to_string/
// parse/has_i/i/spec.  All generic code (matrices, tensor spaces, algebras)
// is templated on the context and never touches element representations
// directly, so the same elimination and homology code runs over the
// rationals, the Gaussian rationals and prime fields.

#include <cstdint>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "homog/errors.hpp"

namespace homog {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind { Rational, Gaussian, Prime };

// Runtime description of a field, e.g. for CLI flags and report output.
// Text forms: "Q", "Qi", "Fp:<prime>".
struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t modulus = 0;  // meaningful only for Prime

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  std::string to_string() const {
    switch (kind) {
      case FieldKind::Rational: return "Q";
      case FieldKind::Gaussian: return "Qi";
      case FieldKind::Prime: return "Fp:" + std::to_string(modulus);
    }
    return "?";
  }

  static FieldSpec parse(const std::string& s);
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Splits "a", "bi", "a+bi", "a-bi" at the sign separating the two halves.
// Rational literals contain only digits, '/' and a leading sign, so any
// '+'/'-' past index 0 is the separator.  Returns {real_text, imag_text,
// has_imag}; imag_text keeps its sign but loses the trailing 'i'.
struct SplitScalar {
  std::string re, im;
  bool has_im = false;
};

inline SplitScalar split_scalar(const std::string& s) {
  if (s.empty()) throw parse_error("empty scalar literal");
  std::size_t sep = std::string::npos;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] == '+' || s[k] == '-') {
      if (sep != std::string::npos)
        throw parse_error("malformed scalar literal '" + s + "'");
      sep = k;
    }
  }
  SplitScalar out;
  auto strip_i = [&](std::string part) {
    if (part.empty() || part.back() != 'i')
      throw parse_error("malformed scalar literal '" + s + "'");
    part.pop_back();
    if (part.empty() || part == "+" || part == "-") part += "1";
    return part;
  };
  if (sep == std::string::npos) {
    if (s.back() == 'i') {
      out.im = strip_i(s);
      out.has_im = true;
    } else {
      out.re = s;
    }
  } else {
    if (s.back() != 'i')
      throw parse_error("malformed scalar literal '" + s + "'");
    out.re = s.substr(0, sep);
    out.im = strip_i(s.substr(sep));
    out.has_im = true;
  }
  return out;
}

inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal");
  std::string text = s;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    text.erase(0, 1);
  }
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto digits_only = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (!digits_only(num) || !digits_only(den))
    throw parse_error("malformed rational literal '" + s + "'");
  BigInt n(num), d(den);
  if (d == 0) throw parse_error("zero denominator in '" + s + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

inline std::string rational_to_string(const Rational& x) {
  return x.str();
}

}  // namespace detail

inline FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q") return {FieldKind::Rational, 0};
  if (s == "Qi") return {FieldKind::Gaussian, 0};
  if (s.rfind("Fp:", 0) == 0) {
    const std::string rest = s.substr(3);
    if (rest.empty()) throw parse_error("missing modulus in '" + s + "'");
    std::uint64_t p = 0;
    for (char c : rest) {
      if (c < '0' || c > '9')
        throw parse_error("malformed modulus in '" + s + "'");
      if (p > (UINT64_MAX - (c - '0')) / 10)
        throw parse_error("modulus out of range in '" + s + "'");
      p = p * 10 + (c - '0');
    }
    if (!detail::is_prime_u64(p))
      throw parse_error("modulus " + std::to_string(p) + " is not prime");
    return {FieldKind::Prime, p};
  }
  throw parse_error("unknown field '" + s + "' (expected Q, Qi or Fp:<prime>)");
}

// ---------------------------------------------------------------------------

struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_int(long long v) const { return Rational(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw error("division by zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const {
    return detail::rational_to_string(a);
  }
  Elem parse(const std::string& s) const {
    auto parts = detail::split_scalar(s);
    if (parts.has_im)
      throw parse_error("'" + s + "' has an imaginary part but field is Q");
    return detail::parse_rational(parts.re);
  }
  bool has_i() const { return false; }
  Elem i() const { throw error("field Q has no square root of -1"); }
  FieldSpec spec() const { return {FieldKind::Rational, 0}; }
};

struct GaussianElem {
  Rational re, im;
  friend bool operator==(const GaussianElem&, const GaussianElem&) = default;
};

struct GaussianField {
  using Elem = GaussianElem;

  Elem zero() const { return {Rational(0), Rational(0)}; }
  Elem one() const { return {Rational(1), Rational(0)}; }
  Elem from_int(long long v) const { return {Rational(v), Rational(0)}; }
  Elem add(const Elem& a, const Elem& b) const {
    return {a.re + b.re, a.im + b.im};
  }
  Elem sub(const Elem& a, const Elem& b) const {
    return {a.re - b.re, a.im - b.im};
  }
  Elem mul(const Elem& a, const Elem& b) const {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  Elem neg(const Elem& a) const { return {-a.re, -a.im}; }
  Elem inv(const Elem& a) const {
    Rational n = a.re * a.re + a.im * a.im;
    if (n == 0) throw error("division by zero");
    return {a.re / n, -a.im / n};
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a.re == 0 && a.im == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const {
    using detail::rational_to_string;
    if (a.im == 0) return rational_to_string(a.re);
    std::string im_text;
    if (a.im == 1)
      im_text = "i";
    else if (a.im == -1)
      im_text = "-i";
    else
      im_text = rational_to_string(a.im) + "i";
    if (a.re == 0) return im_text;
    if (a.im > 0) return rational_to_string(a.re) + "+" + im_text;
    return rational_to_string(a.re) + im_text;
  }
  Elem parse(const std::string& s) const {
    auto parts = detail::split_scalar(s);
    Elem out = zero();
    if (!parts.re.empty()) out.re = detail::parse_rational(parts.re);
    if (parts.has_im) out.im = detail::parse_rational(parts.im);
    return out;
  }
  bool has_i() const { return true; }
  Elem i() const { return {Rational(0), Rational(1)}; }
  FieldSpec spec() const { return {FieldKind::Gaussian, 0}; }
};

struct PrimeField {
  using Elem = std::uint64_t;

  std::uint64_t p = 2147483647ull;
  std::uint64_t i_value = 0;  // square root of -1, or 0 if none exists
  bool i_exists = false;

  PrimeField() { init(); }
  explicit PrimeField(std::uint64_t modulus) : p(modulus) { init(); }

  void init() {
    if (!detail::is_prime_u64(p))
      throw error("modulus " + std::to_string(p) + " is not prime");
    if (p == 2) {
      i_exists = true;
      i_value = 1;  // 1*1 == -1 (mod 2)
    } else if (p % 4 == 1) {
      // i = a^((p-1)/4) for any quadratic nonresidue a
      for (std::uint64_t a = 2;; ++a) {
        if (detail::powmod(a, (p - 1) / 2, p) == p - 1) {
          i_exists = true;
          i_value = detail::powmod(a, (p - 1) / 4, p);
          break;
        }
      }
    }
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<Elem>(r);
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const { return detail::mulmod(a, b, p); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw error("division by zero");
    return detail::powmod(a, p - 2, p);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string to_string(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const {
    auto parts = detail::split_scalar(s);
    auto reduce = [&](const std::string& text) -> Elem {
      Rational q = detail::parse_rational(text);
      BigInt num = boost::multiprecision::numerator(q);
      BigInt den = boost::multiprecision::denominator(q);
      BigInt mod(p);
      BigInt n = num % mod;
      if (n < 0) n += mod;
      BigInt d = den % mod;
      Elem nn = static_cast<std::uint64_t>(n);
      Elem dd = static_cast<std::uint64_t>(d);
      if (dd == 0)
        throw parse_error("denominator of '" + s + "' vanishes mod " +
                          std::to_string(p));
      return div(nn, dd);
    };
    Elem out = parts.re.empty() ? 0 : reduce(parts.re);
    if (parts.has_im) {
      if (!i_exists)
        throw parse_error("field F" + std::to_string(p) +
                          " has no square root of -1");
      out = add(out, mul(reduce(parts.im), i_value));
    }
    return out;
  }
  bool has_i() const { return i_exists; }
  Elem i() const {
    if (!i_exists)
      throw error("field F" + std::to_string(p) + " has no square root of -1");
    return i_value;
  }
  FieldSpec spec() const { return {FieldKind::Prime, p}; }
};

// Calls fn with the context named by spec; fn must be generic in the context.
template <class Fn>
decltype(auto) with_field_context(const FieldSpec& spec, Fn&& fn) {
  switch (spec.kind) {
    case FieldKind::Rational: return std::forward<Fn>(fn)(RationalField{});
    case FieldKind::Gaussian: return std::forward<Fn>(fn)(GaussianField{});
    case FieldKind::Prime: return std::forward<Fn>(fn)(PrimeField{spec.modulus});
  }
  throw error("unreachable field kind");
}

}  // namespace homog
