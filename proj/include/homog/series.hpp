#pragma once

// Exact formal power series arithmetic over the rationals, used to expand
// reference Hilbert series p(t)/q(t) and product/quotient identities.

#include <cstdint>
#include <vector>

#include "homog/errors.hpp"
#include "homog/field.hpp"

namespace homog {

using Poly = std::vector<Rational>;  // coefficient of t^k at position k

inline Poly poly_from_int(const std::vector<long long>& coeffs) {
  Poly out;
  out.reserve(coeffs.size());
  for (long long c : coeffs) out.emplace_back(c);
  return out;
}

inline Poly series_mul(const Poly& a, const Poly& b, int cap) {
  Poly out(cap + 1, Rational(0));
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= cap; ++i)
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= cap; ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

// num/den as a power series through t^cap; den must have nonzero constant term
inline Poly series_div(const Poly& num, const Poly& den, int cap) {
  if (den.empty() || den[0] == 0)
    throw error("series division needs invertible constant term");
  Poly out(cap + 1, Rational(0));
  for (int n = 0; n <= cap; ++n) {
    Rational acc = n < static_cast<int>(num.size()) ? num[n] : Rational(0);
    for (int k = 1; k <= n && k < static_cast<int>(den.size()); ++k)
      acc -= den[k] * out[n - k];
    out[n] = acc / den[0];
  }
  return out;
}

// integer coefficients of a series known to be integral (dimension series)
inline std::vector<std::int64_t> series_int_coeffs(const Poly& s) {
  std::vector<std::int64_t> out;
  out.reserve(s.size());
  for (const Rational& c : s) {
    if (boost::multiprecision::denominator(c) != 1)
      throw error("series coefficient is not an integer");
    out.push_back(
        static_cast<std::int64_t>(boost::multiprecision::numerator(c)));
  }
  return out;
}

}  // namespace homog
