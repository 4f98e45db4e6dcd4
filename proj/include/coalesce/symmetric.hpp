#pragma once

// Independent route to the total expected time: by symmetry over labeled
// players, the expected number of wins x_i for a player currently on a team
// of size i satisfies a tridiagonal system, and n * x_1 equals the total
// expected game count. The inverse of the tridiagonal matrix has the closed
// form min(i,j) (n - max(i,j)) / n.

#include <stdexcept>
#include <vector>

#include "coalesce/matrix.hpp"
#include "coalesce/rational.hpp"

namespace coalesce {

// (n-1) x (n-1) system M x = rhs with M tridiagonal (2 on the diagonal,
// -1 off) and rhs_i = (n-1)/(n-i), rows indexed i = 1 .. n-1.
struct SymmetricSystem {
  int n = 0;
  RationalMatrix m;
  RationalMatrix rhs;
};

inline SymmetricSystem build_system(int n) {
  if (n < 2) throw std::invalid_argument("build_system: need n >= 2");
  const std::size_t dim = static_cast<std::size_t>(n) - 1;
  RationalMatrix m(dim, dim);
  RationalMatrix rhs(dim, 1);
  for (std::size_t r = 0; r < dim; ++r) {
    m(r, r) = 2;
    if (r > 0) m(r, r - 1) = -1;
    if (r + 1 < dim) m(r, r + 1) = -1;
    rhs(r, 0) = make_rational(n - 1, n - static_cast<int>(r) - 1);
  }
  return {n, m, rhs};
}

// (M^{-1})_{ij} = min(i,j) (n - max(i,j)) / n with 1-based i, j.
inline RationalMatrix closed_form_inverse(int n) {
  if (n < 2) throw std::invalid_argument("closed_form_inverse: need n >= 2");
  const std::size_t dim = static_cast<std::size_t>(n) - 1;
  RationalMatrix inv(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      const long lo = static_cast<long>(r < c ? r : c) + 1;
      const long hi = static_cast<long>(r < c ? c : r) + 1;
      inv(r, c) = make_rational(Integer(lo) * (n - hi), n);
    }
  }
  return inv;
}

// x_i for i = 1 .. n-1 via the closed-form inverse.
inline std::vector<Rational> expected_wins(int n) {
  SymmetricSystem sys = build_system(n);
  RationalMatrix x = closed_form_inverse(n) * sys.rhs;
  std::vector<Rational> wins(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) wins[i] = x(i, 0);
  return wins;
}

// n * x_1; must equal (n-1)^2 and the stage-decomposition total.
inline Rational symmetric_total_time(int n) {
  if (n == 1) return Rational(0);
  return Rational(n) * expected_wins(n).front();
}

}  // namespace coalesce
