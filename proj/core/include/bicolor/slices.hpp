#pragma once

#include <vector>

#include "bicolor/paths.hpp"
#include "bicolor/series.hpp"

namespace bicolor {

struct ConvergenceError : SeriesError {
  using SeriesError::SeriesError;
};

// Face weights g_k for faces of degree 2k, k = 1..p+1.
class FaceWeights {
 public:
  explicit FaceWeights(std::vector<Rat> g);
  static FaceWeights quadrangulations();
  static FaceWeights hexangulations();

  int p() const noexcept { return static_cast<int>(g_.size()) - 1; }
  Rat g(int k) const;
  const std::vector<Rat>& values() const noexcept { return g_; }

 private:
  std::vector<Rat> g_;
};

// The formal variables t_black (index 0) and t_white (index 1).
MSeries t_black(int order);
MSeries t_white(int order);
MSeries t_of(Color c, int order);

struct Tails {
  MSeries B;
  MSeries W;
};

Tails tail_solve(const FaceWeights& g, int order);

// Ladder B_i, W_i for 1 <= i <= height with the tails beyond. height < 0
// selects the default order + p + 1.
WeightLadder ladder_solve(const FaceWeights& g, int order, int height = -1);

// F_n of color c evaluated through the slices around offset d.
MSeries conserved(Color c, int n, int d, const WeightLadder& ladder, const FaceWeights& g);

// alpha_q for q = 0..p (black) or the tilde family (white).
std::vector<MSeries> alpha_coeffs(Color c, const FaceWeights& g, const Tails& tails);

MSeries f_direct(Color c, int n, const FaceWeights& g, const Tails& tails);
// F_0..F_{n_max} sharing one excursion walk.
std::vector<MSeries> f_direct_all(Color c, int n_max, const FaceWeights& g, const Tails& tails);

struct TwoPointTable {
  std::vector<MSeries> black;  // G_1 .. G_I
  std::vector<MSeries> white;
};

TwoPointTable twopoint_from_ladder(const WeightLadder& ladder, int max_distance);

}  // namespace bicolor
