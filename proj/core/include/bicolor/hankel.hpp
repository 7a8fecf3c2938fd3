#pragma once

#include <vector>

#include "bicolor/paths.hpp"
#include "bicolor/series.hpp"
#include "bicolor/slices.hpp"

namespace bicolor {

// det(F_{n+m+shift}) for 0 <= n, m <= i, expanded over column subsets so no
// division is needed. Products keep relative precision (mul_graded).
MSeries hankel_det(const std::vector<MSeries>& F, int shift, int i);

// Index i = -1, 0, 1, ... is stored at position i + 1; position 0 holds 1.
struct HankelFamily {
  std::vector<MSeries> h0, h1, h0_tilde, h1_tilde;

  static const MSeries& at(const std::vector<MSeries>& h, int i) { return h.at(static_cast<std::size_t>(i + 1)); }
};

// h0 for i <= i_max, h1 where the moment lists are long enough.
HankelFamily hankel_family(const std::vector<MSeries>& f_black, const std::vector<MSeries>& f_white, int i_max);

// B_j, W_j for j <= 2 i_max from ratios of Hankel determinants. The ladder
// has no tails and each entry is truncated to its reliable order.
WeightLadder cf_extract(const HankelFamily& family, int i_max);

// F_0..F_{n_max} of color c from the continued fraction built on the ladder.
std::vector<MSeries> cf_expand(const WeightLadder& ladder, Color c, int depth, int n_max);

struct Moments {
  std::vector<MSeries> black;
  std::vector<MSeries> white;
};

// F_0..F_{n_max} with F_n known to degree n + precision, which is what the
// Hankel determinants need for `precision` exact degrees past their valuation.
Moments hankel_moments(const FaceWeights& g, int n_max, int precision);

// Full route: moments -> determinants -> continued fraction coefficients.
WeightLadder ladder_from_hankel(const FaceWeights& g, int i_max, int precision);

}  // namespace bicolor
