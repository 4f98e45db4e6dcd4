#pragma once

// Landing vectors, expected stage and total absorption times, and the
// absorption-time variance, all in exact rationals. Two independent routes
// to the total time are kept: the stage decomposition and the fundamental
// matrix of the full chain.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalesce/chain.hpp"
#include "coalesce/matrix.hpp"
#include "coalesce/partition.hpp"

namespace coalesce {

// Distribution of the first state visited on entering stage t, aligned with
// the S(n,t) ordering.
struct LandingVector {
  int t = 0;
  std::vector<Rational> probabilities;
};

// L_n = (1); L_{t-1} = L_t (I - A_t)^{-1} A_{t,t-1}. Returns t = n down to 1.
inline std::vector<LandingVector> landing_vectors(const std::vector<StageMatrices>& chain) {
  std::vector<LandingVector> landing;
  landing.reserve(chain.size());
  std::vector<Rational> current{Rational(1)};
  for (const auto& stage : chain) {
    landing.push_back({stage.t, current});
    if (!stage.a_down) break;
    const auto identity = RationalMatrix::identity(stage.a_t.rows());
    RationalMatrix descent = solve(identity - stage.a_t, *stage.a_down);
    current = row_product(current, descent);
  }
  return landing;
}

// e_{t,t-1} = L_t (I - A_t)^{-1} 1 for t = n down to 2.
inline std::vector<Rational> stage_times(const std::vector<StageMatrices>& chain,
                                         const std::vector<LandingVector>& landing) {
  if (landing.size() < chain.size())
    throw ShapeError("stage_times: landing vectors missing stages");
  std::vector<Rational> times;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& stage = chain[i];
    if (stage.t < 2) break;
    const auto identity = RationalMatrix::identity(stage.a_t.rows());
    RationalMatrix expected = solve(identity - stage.a_t,
                                    RationalMatrix::ones(stage.a_t.rows(), 1));
    Rational e = 0;
    for (std::size_t j = 0; j < expected.rows(); ++j)
      e += landing[i].probabilities[j] * expected(j, 0);
    times.push_back(e);
  }
  return times;
}

// Closed form n(n-1) / (t(t-1)) that the matrix route must reproduce.
inline Rational stage_time_formula(int n, int t) {
  return make_rational(Integer(n) * (n - 1), Integer(t) * (t - 1));
}

inline Rational total_time(int n, int max_n = kDefaultMaxN) {
  if (n < 1) throw std::invalid_argument("total_time: need n >= 1");
  auto chain = build_full_chain(n, max_n);
  auto landing = landing_vectors(chain);
  Rational total = 0;
  for (const auto& e : stage_times(chain, landing)) total += e;
  return total;
}

// Kemeny-style variance of the absorption time from the all-singletons
// start: with N = (I - A)^{-1}, tau = N 1, the variance vector is
// (2N - I) tau - tau^2 entrywise.
inline Rational absorption_variance(int n, int max_n = kDefaultMaxN) {
  if (n < 2) throw std::invalid_argument("absorption_variance: need n >= 2");
  RationalMatrix p = assemble_full_matrix(build_full_chain(n, max_n));
  const std::size_t transients = p.rows() - 1;  // absorbing state is last
  RationalMatrix a(transients, transients);
  for (std::size_t r = 0; r < transients; ++r)
    for (std::size_t c = 0; c < transients; ++c) a(r, c) = p(r, c);
  const auto identity = RationalMatrix::identity(transients);
  RationalMatrix fundamental = inverse(identity - a);
  RationalMatrix tau = fundamental * RationalMatrix::ones(transients, 1);
  RationalMatrix tau2 = (fundamental + fundamental - identity) * tau;
  Rational variance = tau2(0, 0) - tau(0, 0) * tau(0, 0);
  return variance;
}

// Expected absorption time from the start state via the fundamental matrix;
// must agree exactly with the stage decomposition.
inline Rational fundamental_matrix_total_time(int n, int max_n = kDefaultMaxN) {
  if (n < 2) throw std::invalid_argument("fundamental_matrix_total_time: need n >= 2");
  RationalMatrix p = assemble_full_matrix(build_full_chain(n, max_n));
  const std::size_t transients = p.rows() - 1;
  RationalMatrix a(transients, transients);
  for (std::size_t r = 0; r < transients; ++r)
    for (std::size_t c = 0; c < transients; ++c) a(r, c) = p(r, c);
  RationalMatrix tau = solve(RationalMatrix::identity(transients) - a,
                             RationalMatrix::ones(transients, 1));
  return tau(0, 0);
}

// Full exact summary for one n.
struct ChainAnalysis {
  int n = 0;
  std::vector<LandingVector> landing;   // t = n .. 1
  std::vector<Rational> stage_times;    // t = n .. 2
  Rational total_time = 0;
  std::optional<Rational> variance;     // fundamental-matrix route; optional
};

inline ChainAnalysis analyze(int n, bool with_variance = false, int max_n = kDefaultMaxN) {
  if (n < 1) throw std::invalid_argument("analyze: need n >= 1");
  ChainAnalysis result;
  result.n = n;
  auto chain = build_full_chain(n, max_n);
  result.landing = landing_vectors(chain);
  result.stage_times = stage_times(chain, result.landing);
  for (const auto& e : result.stage_times) result.total_time += e;
  if (with_variance && n >= 2) result.variance = absorption_variance(n, max_n);
  if (with_variance && n == 1) result.variance = Rational(0);
  return result;
}

// Outcome of one exact identity check; detail names the first discrepancy.
struct CheckReport {
  std::string name;
  bool pass = true;
  std::string detail;
};

// L_t must equal u_t normalized by its coefficient sum, for every t.
inline CheckReport verify_landing_theorem(int n, int max_n = kDefaultMaxN) {
  CheckReport report{"landing vectors are normalized multinomial weights", true, ""};
  auto chain = build_full_chain(n, max_n);
  auto landing = landing_vectors(chain);
  for (std::size_t i = 0; i < landing.size(); ++i) {
    const int t = landing[i].t;
    WeightVector u = weight_vector(enumerate_stage(n, t, max_n));
    const Integer total = u.sum();
    for (std::size_t j = 0; j < u.weights.size(); ++j) {
      Rational expected = make_rational(u.weights[j], total);
      if (landing[i].probabilities[j] != expected) {
        report.pass = false;
        report.detail = "t = " + std::to_string(t) + ", state " +
                        u.stage.state(j).part_string() + ": landing " +
                        to_string(landing[i].probabilities[j]) + " != " +
                        to_string(expected);
        return report;
      }
    }
  }
  return report;
}

// u_{t-1} 1 = ((t-1)/(n-t+1)) u_t 1, and both reproduce binomial(n-1, t-1).
inline CheckReport verify_sum_recursion(int n, int max_n = kDefaultMaxN) {
  CheckReport report{"coefficient sums satisfy the descent recursion", true, ""};
  std::vector<Integer> sums(n + 1);
  for (int t = 1; t <= n; ++t) sums[t] = weight_vector(enumerate_stage(n, t, max_n)).sum();
  for (int t = 2; t <= n; ++t) {
    Rational lhs(sums[t - 1]);
    Rational rhs = make_rational(Integer(t - 1) * sums[t], Integer(n - t + 1));
    if (lhs != rhs) {
      report.pass = false;
      report.detail = "t = " + std::to_string(t) + ": " + to_string(lhs) +
                      " != " + to_string(rhs);
      return report;
    }
  }
  for (int t = 1; t <= n; ++t) {
    if (sums[t] != binomial(n - 1, t - 1)) {
      report.pass = false;
      report.detail = "t = " + std::to_string(t) + ": sum " + to_string(sums[t]) +
                      " != C(n-1, t-1)";
      return report;
    }
  }
  return report;
}

}  // namespace coalesce
