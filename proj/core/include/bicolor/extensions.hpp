#pragma once

#include "bicolor/closedform.hpp"
#include "bicolor/paths.hpp"
#include "bicolor/series.hpp"

namespace bicolor {

// Bicolored ternary trees: P_i = 1 + z_w Q_{i-1} P_i Q_{i+1} and
// Q_i = 1 + z_b P_{i-1} Q_i P_{i+1} with P_0 = Q_0 = 0. The ladder stores P
// in the black slot and Q in the white slot. The weights may be any series
// without constant term; the formal variables give the generic system.
struct PairTails {
  MSeries first;
  MSeries second;
};

PairTails ternary_tails(const MSeries& z_black, const MSeries& z_white);
WeightLadder ternary_ladder(const MSeries& z_black, const MSeries& z_white, int height);
WeightLadder ternary_closed(const MSeries& z_black, const MSeries& z_white, int height);

// Bicolored binary trees: R_i = 1 + y_b S_{i-1} S_{i+1},
// S_i = 1 + y_w R_{i-1} R_{i+1}, R_0 = S_0 = 0. R sits in the black slot.
PairTails binary_tails(const MSeries& y_black, const MSeries& y_white);
WeightLadder binary_ladder(const MSeries& y_black, const MSeries& y_white, int height);
WeightLadder binary_closed(const MSeries& y_black, const MSeries& y_white, int height);

// Default ladder height for the tree systems at a given order.
int tree_height(int order);

// Tricolored triangulations in variables (t_black, t_white, t_third):
// T_i = t_b + T_i (U_{i-1} + V_{i+1}) and its two cyclic images.
struct TricolorLadder {
  std::vector<MSeries> T, U, V;  // entries 1..height
  MSeries tail_T, tail_U, tail_V;

  int height() const { return static_cast<int>(T.size()); }
};

struct TricolorParams {
  MSeries y, d, e, a_hat;
};

struct TricolorTails {
  MSeries T, U, V;
};

TricolorTails tricolor_tails(int order);
TricolorLadder tricolor_ladder(int order, int height = -1);
// Parameters for the rotation starting at (first, second, third).
TricolorParams tricolor_params(const MSeries& first, const MSeries& second, const MSeries& third);
// T_{3i} for 3i <= max_index from the product form; same for U, V by rotation.
struct TricolorClosed {
  std::vector<MSeries> T3, U3, V3;  // entry i-1 holds index 3i
};
TricolorClosed tricolor_closed(int order, int max_index);
// T U V (1 + y)^2 - y (1 - T - U - V)^2.
MSeries tricolor_characteristic_residual(int order);

}  // namespace bicolor
