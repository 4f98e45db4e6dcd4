#pragma once

// Hand-checked reference values for small chains. Matrix blocks are stored
// as integer numerators over a common denominator, with explicit row and
// column labels so comparisons are by state name, independent of the
// library's internal ordering.

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

struct StageBlock {
  int t = 0;
  std::vector<std::string> states;
  std::vector<std::vector<long>> within;
  std::vector<std::string> down_states;
  std::vector<std::vector<long>> descent;
};

// Six players: every block of the full transition matrix, denominator 30.
inline std::vector<StageBlock> six_player_blocks() {
  return {
      {6, {"[111111]"}, {{0}}, {"[21111]"}, {{30}}},
      {5, {"[21111]"}, {{10}}, {"[2211]", "[3111]"}, {{12, 8}}},
      {4,
       {"[2211]", "[3111]"},
       {{12, 8}, {9, 6}},
       {"[222]", "[321]", "[411]"},
       {{2, 8, 0}, {0, 6, 9}}},
      {3,
       {"[222]", "[321]", "[411]"},
       {{6, 24, 0}, {3, 16, 6}, {0, 8, 12}},
       {"[33]", "[42]", "[51]"},
       {{0, 0, 0}, {2, 3, 0}, {0, 2, 8}}},
      {2,
       {"[33]", "[42]", "[51]"},
       {{12, 18, 0}, {8, 14, 8}, {0, 5, 20}},
       {"[6]"},
       {{0}, {0}, {5}}},
      {1, {"[6]"}, {{30}}, {}, {}},
  };
}

inline constexpr long kSixPlayerDenominator = 30;

// Ten players, stage four: both blocks, denominator 90.
inline StageBlock ten_player_stage_four() {
  return {4,
          {"[3331]", "[3322]", "[4321]", "[4411]", "[4222]", "[5311]", "[5221]", "[6211]",
           "[7111]"},
          {{18, 9, 54, 0, 0, 0, 0, 0, 0},
           {8, 40, 24, 0, 18, 0, 0, 0, 0},
           {8, 4, 40, 6, 3, 8, 12, 0, 0},
           {0, 0, 16, 24, 0, 32, 0, 0, 0},
           {0, 24, 24, 0, 18, 0, 24, 0, 0},
           {0, 0, 10, 15, 0, 26, 6, 15, 0},
           {0, 0, 20, 0, 5, 8, 28, 20, 0},
           {0, 0, 0, 0, 0, 12, 12, 36, 12},
           {0, 0, 0, 0, 0, 0, 0, 21, 42}},
          {"[433]", "[442]", "[541]", "[532]", "[631]", "[622]", "[721]", "[811]"},
          {{9, 0, 0, 0, 0, 0, 0, 0},
           {0, 0, 0, 0, 0, 0, 0, 0},
           {2, 3, 0, 4, 0, 0, 0, 0},
           {0, 2, 16, 0, 0, 0, 0, 0},
           {0, 0, 0, 0, 0, 0, 0, 0},
           {0, 0, 6, 2, 10, 0, 0, 0},
           {0, 0, 0, 4, 0, 5, 0, 0},
           {0, 0, 0, 0, 4, 2, 12, 0},
           {0, 0, 0, 0, 0, 0, 6, 21}}};
}

inline constexpr long kTenPlayerDenominator = 90;

// Four players, stage two, in the order [31], [22]: within-stage block over
// denominator 12, the descent column, and the expected times to absorption.
inline StageBlock four_player_stage_two() {
  return {2, {"[31]", "[22]"}, {{6, 3}, {8, 4}}, {"[4]"}, {{3}, {0}}};
}

inline constexpr long kFourPlayerDenominator = 12;

inline std::vector<std::pair<std::string, std::string>> four_player_stage_two_times() {
  return {{"[31]", "11/2"}, {"[22]", "7"}};
}

// Landing distributions keyed by state label.
inline std::vector<std::pair<std::string, std::string>> four_player_landing_two() {
  return {{"[31]", "2/3"}, {"[22]", "1/3"}};
}

inline std::vector<std::pair<std::string, std::string>> six_player_landing_four() {
  return {{"[2211]", "3/5"}, {"[3111]", "2/5"}};
}

inline std::vector<std::pair<std::string, std::string>> six_player_landing_three() {
  return {{"[222]", "1/10"}, {"[321]", "3/5"}, {"[411]", "3/10"}};
}

// Multinomial weight vectors keyed by state label.
inline std::vector<std::pair<std::string, long>> six_player_weights_four() {
  return {{"[2211]", 6}, {"[3111]", 4}};
}

inline std::vector<std::pair<std::string, long>> six_player_weights_three() {
  return {{"[222]", 1}, {"[321]", 6}, {"[411]", 3}};
}

inline std::vector<std::pair<std::string, long>> six_player_weights_two() {
  return {{"[33]", 1}, {"[42]", 2}, {"[51]", 2}};
}

inline std::vector<std::pair<std::string, long>> ten_player_weights_four() {
  return {{"[3331]", 4},  {"[3322]", 6},  {"[4321]", 24}, {"[4411]", 6}, {"[4222]", 4},
          {"[5311]", 12}, {"[5221]", 12}, {"[6211]", 12}, {"[7111]", 4}};
}

inline std::vector<std::pair<std::string, long>> ten_player_weights_three() {
  return {{"[433]", 3}, {"[442]", 3}, {"[541]", 6}, {"[532]", 6},
          {"[631]", 6}, {"[622]", 3}, {"[721]", 6}, {"[811]", 3}};
}

// Absorption-time variances from the all-singletons start.
inline std::vector<std::pair<int, std::string>> known_variances() {
  return {{2, "0"}, {3, "6"}, {4, "32"}, {5, "890/9"}, {6, "469/2"}};
}

// Inverse of the five-by-five tridiagonal system matrix for n = 6, over 6.
inline std::vector<std::vector<long>> six_player_tridiagonal_inverse() {
  return {{5, 4, 3, 2, 1},
          {4, 8, 6, 4, 2},
          {3, 6, 9, 6, 3},
          {2, 4, 6, 8, 4},
          {1, 2, 3, 4, 5}};
}

}  // namespace fixtures
