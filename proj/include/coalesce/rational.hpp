#pragma once

// Exact arbitrary-precision scalars. Every probability in the analysis
// pipeline is a Rational; floating point appears only in the Monte Carlo
// comparison layer.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace coalesce {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical text form: "p/q" in lowest terms, or just "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational make_rational(Integer num, Integer den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

// Strict parse of the canonical form: optional sign, digits, optional /digits.
inline Rational parse_rational(std::string_view text) {
  const auto bad = [&] {
    throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
  if (digits == 0) bad();
  if (i != text.size()) {
    if (text[i] != '/') bad();
    ++i;
    digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
    if (digits == 0 || i != text.size()) bad();
  }
  if (text.front() == '+') text.remove_prefix(1);  // set_str takes no plus sign
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) bad();
  if (q.get_den() == 0) bad();
  q.canonicalize();
  return q;
}

}  // namespace coalesce
