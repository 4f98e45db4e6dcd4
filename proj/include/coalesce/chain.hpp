#pragma once

// Exact transition structure of the winner-absorbs-loser chain. Each step
// draws an ordered (winner, loser) pair uniformly from the n(n-1) choices;
// the loser leaves a team of size i (the team vanishes when i = 1, dropping
// the stage) and the winner's team grows from j to j+1. Transitions are
// counted by event class over the (i, j) size pairs, so a state's row costs
// O(k^2) independent of n.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coalesce/matrix.hpp"
#include "coalesce/partition.hpp"

namespace coalesce {

struct InfeasibleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// One class of ordered winner-loser pairs: loser from a team of size i,
// winner from a team of size j, same_team marking internal games.
struct EventClass {
  int loser_size = 0;
  int winner_size = 0;
  bool same_team = false;
  long long count = 0;
};

// All event classes with positive count; their counts sum to n(n-1).
inline std::vector<EventClass> enumerate_events(const Partition& state) {
  std::vector<EventClass> events;
  const int k = state.largest_part();
  for (int i = 2; i <= k; ++i) {
    long long ri = state.count_of(i);
    if (ri > 0) events.push_back({i, i, true, ri * i * (i - 1)});
  }
  for (int i = 1; i <= k; ++i) {
    long long ri = state.count_of(i);
    if (ri == 0) continue;
    for (int j = 1; j <= k; ++j) {
      long long rj = state.count_of(j);
      if (rj == 0) continue;
      long long count = (i == j) ? (i * ri) * (i * (ri - 1)) : (i * ri) * (j * rj);
      if (count > 0) events.push_back({i, j, false, count});
    }
  }
  return events;
}

inline long long event_count(const Partition& state, const EventClass& ev) {
  const int i = ev.loser_size;
  const int j = ev.winner_size;
  if (i < 1 || j < 1) return 0;
  long long ri = state.count_of(i);
  long long rj = state.count_of(j);
  if (ev.same_team) return (i == j && i >= 2) ? ri * i * (i - 1) : 0;
  if (i == j) return (i * ri) * (i * (ri - 1));
  return (i * ri) * (j * rj);
}

// Successor of a feasible event: r_i loses a team member (vanishing at size
// one), r_j gains one. Same-team games leave the state unchanged.
inline Partition apply_event(const Partition& state, const EventClass& ev) {
  if (event_count(state, ev) <= 0)
    throw InfeasibleError("apply_event: event infeasible in " + state.part_string());
  if (ev.same_team) return state;
  const int i = ev.loser_size;
  const int j = ev.winner_size;
  std::vector<int> counts = state.counts();
  counts.resize(std::max(state.largest_part(), j + 1), 0);
  counts[i - 1] -= 1;
  if (i >= 2) counts[i - 2] += 1;
  counts[j - 1] -= 1;
  counts[j] += 1;
  return Partition(std::move(counts));
}

// delta counts: successor -> number of ordered winner-loser pairs leading
// there. Values sum to n(n-1); keys live in stage t or t-1.
inline std::map<Partition, long long> transition_row(const Partition& state) {
  std::map<Partition, long long> row;
  for (const EventClass& ev : enumerate_events(state)) {
    row[apply_event(state, ev)] += ev.count;
  }
  return row;
}

// Within-stage block A_t and descent block A_{t,t-1} (absent at t = 1) for
// one stage, entries delta / n(n-1).
struct StageMatrices {
  int t = 0;
  RationalMatrix a_t;
  std::optional<RationalMatrix> a_down;
};

inline StageMatrices build_stage(int n, int t, int max_n = kDefaultMaxN) {
  StageSpace stage = enumerate_stage(n, t, max_n);
  if (n == 1) {
    // Lone player: no games ever happen; the state is absorbing by fiat.
    return StageMatrices{1, RationalMatrix::identity(1), std::nullopt};
  }
  const Integer pairs = Integer(n) * (n - 1);
  RationalMatrix a_t(stage.size(), stage.size());
  std::optional<StageSpace> below;
  std::optional<RationalMatrix> a_down;
  if (t > 1) {
    below.emplace(enumerate_stage(n, t - 1, max_n));
    a_down.emplace(stage.size(), below->size());
  }
  for (std::size_t row = 0; row < stage.size(); ++row) {
    for (const auto& [successor, delta] : transition_row(stage.state(row))) {
      Rational p = make_rational(Integer(static_cast<long>(delta)), pairs);
      if (successor.teams() == t) {
        a_t(row, stage.index_of(successor)) += p;
      } else {
        (*a_down)(row, below->index_of(successor)) += p;
      }
    }
  }
  return StageMatrices{t, std::move(a_t), std::move(a_down)};
}

// Stage blocks for t = n down to 1; they tile the block upper bidiagonal P.
inline std::vector<StageMatrices> build_full_chain(int n, int max_n = kDefaultMaxN) {
  if (n < 1) throw std::invalid_argument("build_full_chain: need n >= 1");
  std::vector<StageMatrices> chain;
  chain.reserve(n);
  for (int t = n; t >= 1; --t) chain.push_back(build_stage(n, t, max_n));
  return chain;
}

// All states in global order: stage n first (the all-singletons start state
// is index 0), stage 1 last (the absorbing state).
inline std::vector<Partition> full_state_list(int n, int max_n = kDefaultMaxN) {
  std::vector<Partition> states;
  for (int t = n; t >= 1; --t) {
    StageSpace stage = enumerate_stage(n, t, max_n);
    states.insert(states.end(), stage.states().begin(), stage.states().end());
  }
  return states;
}

inline RationalMatrix assemble_full_matrix(const std::vector<StageMatrices>& chain) {
  std::size_t total = 0;
  for (const auto& stage : chain) total += stage.a_t.rows();
  RationalMatrix p(total, total);
  std::size_t offset = 0;
  for (const auto& stage : chain) {
    const std::size_t size = stage.a_t.rows();
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c) p(offset + r, offset + c) = stage.a_t(r, c);
    if (stage.a_down) {
      for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < stage.a_down->cols(); ++c)
          p(offset + r, offset + size + c) = (*stage.a_down)(r, c);
    }
    offset += size;
  }
  return p;
}

// Eigenvalue of A_t for the weight vector u_t.
inline Rational within_stage_eigenvalue(int n, int t) {
  return make_rational(Integer(n - t) * (n + t - 1), Integer(n) * (n - 1));
}

// Chain eigenvalue carrying u_t through A_{t,t-1} onto u_{t-1}.
inline Rational descent_eigenvalue(int n, int t) {
  return make_rational(Integer(t) * (n - t + 1), Integer(n) * (n - 1));
}

}  // namespace coalesce
