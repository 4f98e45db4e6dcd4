#pragma once

// Exact self-checks: every identity the construction is supposed to satisfy,
// tested in rational arithmetic with no tolerances. Each check reports the
// first discrepancy it finds.

#include <string>
#include <vector>

#include "coalesce/analysis.hpp"
#include "coalesce/chain.hpp"
#include "coalesce/matrix.hpp"
#include "coalesce/partition.hpp"
#include "coalesce/symmetric.hpp"

namespace coalesce {

namespace detail {

inline std::vector<Rational> weights_as_rationals(const WeightVector& u) {
  std::vector<Rational> v(u.weights.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(u.weights[i]);
  return v;
}

}  // namespace detail

// Every transition row scatters total mass 1 across A_t and A_{t,t-1}.
inline CheckReport check_rows_stochastic(int n, const std::vector<StageMatrices>& chain) {
  CheckReport report{"transition rows sum to one", true, ""};
  for (const auto& stage : chain) {
    for (std::size_t r = 0; r < stage.a_t.rows(); ++r) {
      Rational sum = stage.a_t.row_sum(r);
      if (stage.a_down) sum += stage.a_down->row_sum(r);
      if (sum != 1) {
        report.pass = false;
        report.detail = "n = " + std::to_string(n) + ", t = " + std::to_string(stage.t) +
                        ", row " + std::to_string(r) + ": sum " + to_string(sum);
        return report;
      }
    }
  }
  return report;
}

// u_t A_t = d_t u_t with d_t = (n-t)(n+t-1) / (n(n-1)).
inline CheckReport check_within_stage_eigenvector(int n, const std::vector<StageMatrices>& chain) {
  CheckReport report{"weights are a left eigenvector within each stage", true, ""};
  for (const auto& stage : chain) {
    const auto u = detail::weights_as_rationals(weight_vector(enumerate_stage(n, stage.t)));
    const Rational d = within_stage_eigenvalue(n, stage.t);
    const auto lhs = row_product(u, stage.a_t);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (lhs[i] != d * u[i]) {
        report.pass = false;
        report.detail = "t = " + std::to_string(stage.t) + ", entry " + std::to_string(i) +
                        ": " + to_string(lhs[i]) + " != " + to_string(d * u[i]);
        return report;
      }
    }
  }
  return report;
}

// u_t A_{t,t-1} = h_t u_{t-1} with h_t = t(n-t+1) / (n(n-1)).
inline CheckReport check_descent_eigenvector(int n, const std::vector<StageMatrices>& chain) {
  CheckReport report{"weights map to scaled weights across descents", true, ""};
  for (const auto& stage : chain) {
    if (!stage.a_down) continue;
    const auto u = detail::weights_as_rationals(weight_vector(enumerate_stage(n, stage.t)));
    const auto u_down = detail::weights_as_rationals(weight_vector(enumerate_stage(n, stage.t - 1)));
    const Rational h = descent_eigenvalue(n, stage.t);
    const auto lhs = row_product(u, *stage.a_down);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (lhs[i] != h * u_down[i]) {
        report.pass = false;
        report.detail = "t = " + std::to_string(stage.t) + ", entry " + std::to_string(i) +
                        ": " + to_string(lhs[i]) + " != " + to_string(h * u_down[i]);
        return report;
      }
    }
  }
  return report;
}

// u_t (I - A_t)^{-1} = u_t / (1 - d_t) for t >= 2 (at t = 1 the stage is
// absorbing and I - A_1 is singular).
inline CheckReport check_fundamental_eigenvector(int n, const std::vector<StageMatrices>& chain) {
  CheckReport report{"weights are a left eigenvector of each fundamental matrix", true, ""};
  for (const auto& stage : chain) {
    if (stage.t < 2) continue;
    const auto u = detail::weights_as_rationals(weight_vector(enumerate_stage(n, stage.t)));
    const Rational gap = Rational(1) - within_stage_eigenvalue(n, stage.t);
    const Rational scale = Rational(1) / gap;
    const auto identity = RationalMatrix::identity(stage.a_t.rows());
    const RationalMatrix fundamental = inverse(identity - stage.a_t);
    const auto lhs = row_product(u, fundamental);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      if (lhs[i] != scale * u[i]) {
        report.pass = false;
        report.detail = "t = " + std::to_string(stage.t) + ", entry " + std::to_string(i) +
                        ": " + to_string(lhs[i]) + " != " + to_string(scale * u[i]);
        return report;
      }
    }
  }
  return report;
}

// d_t + (t-1) h_t / (n-t+1) = 1 ties both eigenvalues to row stochasticity.
inline CheckReport check_eigenvalue_dependency(int n) {
  CheckReport report{"eigenvalues satisfy the stochasticity constraint", true, ""};
  for (int t = 2; t <= n; ++t) {
    const Rational lhs = within_stage_eigenvalue(n, t) +
                         make_rational(t - 1, n - t + 1) * descent_eigenvalue(n, t);
    if (lhs != 1) {
      report.pass = false;
      report.detail = "t = " + std::to_string(t) + ": " + to_string(lhs);
      return report;
    }
  }
  return report;
}

// Matrix-route stage times against n(n-1) / (t(t-1)).
inline CheckReport check_stage_time_formula(int n, const std::vector<StageMatrices>& chain) {
  CheckReport report{"stage times match n(n-1)/(t(t-1))", true, ""};
  const auto landing = landing_vectors(chain);
  const auto times = stage_times(chain, landing);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const int t = chain[i].t;
    if (times[i] != stage_time_formula(n, t)) {
      report.pass = false;
      report.detail = "t = " + std::to_string(t) + ": " + to_string(times[i]) + " != " +
                      to_string(stage_time_formula(n, t));
      return report;
    }
  }
  return report;
}

// Stage decomposition, fundamental matrix of the full chain, and the
// symmetric system must all give (n-1)^2.
inline CheckReport check_total_time_square(int n) {
  CheckReport report{"all total-time routes give (n-1)^2", true, ""};
  const Rational square(Integer(n - 1) * (n - 1));
  const Rational staged = total_time(n);
  if (staged != square) {
    report.pass = false;
    report.detail = "stage decomposition: " + to_string(staged);
    return report;
  }
  const Rational direct = fundamental_matrix_total_time(n);
  if (direct != square) {
    report.pass = false;
    report.detail = "fundamental matrix: " + to_string(direct);
    return report;
  }
  const Rational symmetric = symmetric_total_time(n);
  if (symmetric != square) {
    report.pass = false;
    report.detail = "symmetric system: " + to_string(symmetric);
    return report;
  }
  return report;
}

// The closed-form inverse must actually invert the tridiagonal system.
inline CheckReport check_symmetric_inverse(int n) {
  CheckReport report{"closed-form inverse solves the symmetric system", true, ""};
  const SymmetricSystem sys = build_system(n);
  const RationalMatrix product = closed_form_inverse(n) * sys.m;
  if (product != RationalMatrix::identity(sys.m.rows())) {
    report.pass = false;
    report.detail = "closed_form_inverse(" + std::to_string(n) + ") * M != I";
  }
  return report;
}

inline std::vector<CheckReport> run_all_checks(int n, int max_n = kDefaultMaxN) {
  if (n < 2) throw std::invalid_argument("run_all_checks: need n >= 2");
  const auto chain = build_full_chain(n, max_n);
  std::vector<CheckReport> reports;
  reports.push_back(check_rows_stochastic(n, chain));
  reports.push_back(check_within_stage_eigenvector(n, chain));
  reports.push_back(check_descent_eigenvector(n, chain));
  reports.push_back(check_fundamental_eigenvector(n, chain));
  reports.push_back(check_eigenvalue_dependency(n));
  reports.push_back(verify_landing_theorem(n, max_n));
  reports.push_back(verify_sum_recursion(n, max_n));
  reports.push_back(check_stage_time_formula(n, chain));
  reports.push_back(check_total_time_square(n));
  reports.push_back(check_symmetric_inverse(n));
  return reports;
}

}  // namespace coalesce
