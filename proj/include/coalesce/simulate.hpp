#pragma once

// Monte Carlo validator. Games are simulated over labeled players with a
// team-id array (one player moves per game, so a merge-only structure cannot
// represent the walk). Every accumulator is an integer, trials are seeded
// independently from the master seed by a fixed mix, and trials run in a
// fixed order, so a report is bit-identical across runs.

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalesce/analysis.hpp"
#include "coalesce/partition.hpp"

namespace coalesce {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform draw from [0, bound) by rejection; unbiased for any bound >= 1.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace detail

inline std::uint64_t per_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return detail::splitmix64(master_seed ^ detail::splitmix64(trial_index + 1));
}

// Plays one game. on_step(step, teams, counts) fires once for the start
// state (step 0) and once after every game, whether or not the state
// changed; counts[s-1] is the number of teams of size s (length n,
// untrimmed). Returns the absorption step.
template <typename OnStep>
inline long long walk_game(int n, std::uint64_t seed, OnStep&& on_step) {
  if (n < 1) throw std::invalid_argument("walk_game: need n >= 1");
  std::vector<int> team_of(n);
  std::vector<int> team_size(n, 1);
  std::vector<int> counts(n, 0);
  for (int p = 0; p < n; ++p) team_of[p] = p;
  counts[0] = n;
  int teams = n;
  long long step = 0;
  on_step(step, teams, counts);
  std::mt19937_64 rng(seed);
  const auto players = static_cast<std::uint64_t>(n);
  while (teams > 1) {
    const int winner = static_cast<int>(detail::bounded(rng, players));
    const int l0 = static_cast<int>(detail::bounded(rng, players - 1));
    const int loser = l0 + (l0 >= winner ? 1 : 0);
    ++step;
    const int from = team_of[loser];
    const int to = team_of[winner];
    if (from != to) {
      const int i = team_size[from];
      const int j = team_size[to];
      --counts[i - 1];
      if (i >= 2) ++counts[i - 2];
      --counts[j - 1];
      ++counts[j];
      team_of[loser] = to;
      --team_size[from];
      ++team_size[to];
      if (i == 1) --teams;
    }
    on_step(step, teams, counts);
  }
  return step;
}

struct TrajectoryPoint {
  long long step = 0;
  Partition state;
};

// Full per-step record of one game, starting at (0, all singletons) and
// ending at the single-team state.
inline std::vector<TrajectoryPoint> run_game(int n, std::uint64_t seed) {
  std::vector<TrajectoryPoint> trajectory;
  walk_game(n, seed, [&](long long step, int, const std::vector<int>& counts) {
    trajectory.push_back({step, Partition(counts)});
  });
  return trajectory;
}

struct SimulationConfig {
  int n = 0;
  long long trials = 0;
  std::uint64_t master_seed = 0;
  int max_n = kDefaultMaxN;
};

// Per-stage tallies; landing_counts aligns with the S(n,t) ordering and the
// steps sums cover the time spent inside the stage (zero for t = 1).
struct StageStats {
  int t = 0;
  std::vector<long long> landing_counts;
  long long steps_sum = 0;
  long long steps_sq_sum = 0;
};

struct SimulationReport {
  int n = 0;
  long long trials = 0;
  std::uint64_t master_seed = 0;
  std::vector<StageStats> stages;  // t = n down to 1
  long long total_sum = 0;
  long long total_sq_sum = 0;
  unsigned __int128 total_cube_sum = 0;
  unsigned __int128 total_quartic_sum = 0;

  double total_mean() const {
    return static_cast<double>(total_sum) / static_cast<double>(trials);
  }
  // Unbiased sample variance of the absorption time.
  double total_variance() const {
    const double m = static_cast<double>(trials);
    if (trials < 2) return 0.0;
    const double mean = total_mean();
    const double raw2 = static_cast<double>(total_sq_sum) / m;
    return (raw2 - mean * mean) * m / (m - 1.0);
  }
};

inline SimulationReport simulate(const SimulationConfig& config) {
  if (config.n < 1) throw std::invalid_argument("simulate: need n >= 1");
  if (config.trials < 1) throw std::invalid_argument("simulate: need trials >= 1");
  const int n = config.n;
  std::vector<StageSpace> spaces;  // t = n down to 1
  spaces.reserve(n);
  for (int t = n; t >= 1; --t) spaces.push_back(enumerate_stage(n, t, config.max_n));

  SimulationReport report;
  report.n = n;
  report.trials = config.trials;
  report.master_seed = config.master_seed;
  report.stages.resize(n);
  for (int idx = 0; idx < n; ++idx) {
    report.stages[idx].t = n - idx;
    report.stages[idx].landing_counts.assign(spaces[idx].size(), 0);
  }

  for (long long trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t seed = per_trial_seed(config.master_seed, static_cast<std::uint64_t>(trial));
    int prev_t = 0;
    long long prev_entry = 0;
    const long long total =
        walk_game(n, seed, [&](long long step, int teams, const std::vector<int>& counts) {
          if (teams == prev_t) return;
          const int idx = n - teams;
          report.stages[idx].landing_counts[spaces[idx].index_of(Partition(counts))] += 1;
          if (prev_t > 0) {
            const long long spent = step - prev_entry;
            report.stages[n - prev_t].steps_sum += spent;
            report.stages[n - prev_t].steps_sq_sum += spent * spent;
          }
          prev_t = teams;
          prev_entry = step;
        });
    report.total_sum += total;
    report.total_sq_sum += total * total;
    const auto t128 = static_cast<unsigned __int128>(total);
    report.total_cube_sum += t128 * t128 * t128;
    report.total_quartic_sum += t128 * t128 * t128 * t128;
  }
  return report;
}

// One simulated quantity against its exact value. z is the standardized
// discrepancy; when the standard error vanishes, z is 0 on exact agreement
// and infinity otherwise.
struct ComparisonRow {
  std::string quantity;
  double observed = 0.0;
  double expected = 0.0;
  double se = 0.0;
  double z = 0.0;
  bool within = true;
};

struct ComparisonReport {
  int n = 0;
  long long trials = 0;
  double z_threshold = 0.0;
  std::vector<ComparisonRow> rows;
  double max_abs_z = 0.0;
  bool all_within = true;
};

namespace detail {

inline void push_row(ComparisonReport& report, std::string quantity, double observed,
                     double expected, double se, double z) {
  const bool within = std::abs(z) <= report.z_threshold;
  report.max_abs_z = std::max(report.max_abs_z, std::abs(z));
  report.all_within = report.all_within && within;
  report.rows.push_back({std::move(quantity), observed, expected, se, z, within});
}

constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace detail

inline ComparisonReport compare(const SimulationReport& report, const ChainAnalysis& analysis,
                                double z_threshold = 4.0) {
  if (report.n != analysis.n)
    throw ShapeError("compare: simulation is for n = " + std::to_string(report.n) +
                     ", analysis for n = " + std::to_string(analysis.n));
  const int n = report.n;
  const auto m = static_cast<double>(report.trials);
  const Integer trials(static_cast<long>(report.trials));
  ComparisonReport out;
  out.n = n;
  out.trials = report.trials;
  out.z_threshold = z_threshold;

  std::vector<StageSpace> spaces;  // t = n down to 1
  spaces.reserve(n);
  for (int t = n; t >= 1; --t) spaces.push_back(enumerate_stage(n, t));

  // Landing frequencies against exact probabilities, binomial standard error.
  for (int idx = 0; idx < n; ++idx) {
    const auto& stats = report.stages[idx];
    const auto& exact = analysis.landing[idx].probabilities;
    for (std::size_t s = 0; s < exact.size(); ++s) {
      const double p = to_double(exact[s]);
      const double observed = static_cast<double>(stats.landing_counts[s]) / m;
      const double se = std::sqrt(p * (1.0 - p) / m);
      double z;
      if (se > 0.0) {
        z = (observed - p) / se;
      } else {
        z = (Rational(static_cast<long>(stats.landing_counts[s])) == exact[s] * trials)
                ? 0.0
                : detail::kInfinity;
      }
      detail::push_row(out,
                       "landing t=" + std::to_string(stats.t) + " " +
                           spaces[idx].state(s).part_string(),
                       observed, p, se, z);
    }
  }

  // Stage mean times, standard error from the sample.
  for (int idx = 0; idx + 1 < n; ++idx) {
    const auto& stats = report.stages[idx];
    const Rational& exact = analysis.stage_times[idx];
    const double expected = to_double(exact);
    const double mean = static_cast<double>(stats.steps_sum) / m;
    const double raw2 = static_cast<double>(stats.steps_sq_sum) / m;
    const double var_pop = std::max(raw2 - mean * mean, 0.0);
    const double se = std::sqrt(var_pop / m);
    double z;
    if (se > 0.0) {
      z = (mean - expected) / se;
    } else {
      z = (Rational(static_cast<long>(stats.steps_sum)) == exact * trials)
              ? 0.0
              : detail::kInfinity;
    }
    detail::push_row(out, "stage time t=" + std::to_string(stats.t), mean, expected, se, z);
  }

  // Mean absorption time.
  {
    const double expected = to_double(analysis.total_time);
    const double mean = report.total_mean();
    const double raw2 = static_cast<double>(report.total_sq_sum) / m;
    const double var_pop = std::max(raw2 - mean * mean, 0.0);
    const double se = std::sqrt(var_pop / m);
    double z;
    if (se > 0.0) {
      z = (mean - expected) / se;
    } else {
      z = (Rational(static_cast<long>(report.total_sum)) == analysis.total_time * trials)
              ? 0.0
              : detail::kInfinity;
    }
    detail::push_row(out, "total time", mean, expected, se, z);
  }

  // Absorption-time variance; asymptotic standard error needs the fourth
  // central moment.
  if (analysis.variance) {
    const double expected = to_double(*analysis.variance);
    const double mean = report.total_mean();
    const double raw2 = static_cast<double>(report.total_sq_sum) / m;
    const double raw3 = static_cast<double>(report.total_cube_sum) / m;
    const double raw4 = static_cast<double>(report.total_quartic_sum) / m;
    const double var_pop = std::max(raw2 - mean * mean, 0.0);
    const double central4 = raw4 - 4.0 * mean * raw3 + 6.0 * mean * mean * raw2 -
                            3.0 * mean * mean * mean * mean;
    const double se = std::sqrt(std::max(central4 - var_pop * var_pop, 0.0) / m);
    const double observed = report.total_variance();
    double z;
    if (se > 0.0) {
      z = (observed - expected) / se;
    } else {
      z = (var_pop == 0.0 && *analysis.variance == 0) ? 0.0 : detail::kInfinity;
    }
    detail::push_row(out, "total variance", observed, expected, se, z);
  }

  return out;
}

}  // namespace coalesce
