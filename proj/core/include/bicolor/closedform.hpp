#pragma once

#include "bicolor/paths.hpp"
#include "bicolor/series.hpp"
#include "bicolor/slices.hpp"

namespace bicolor {

// Product-form factors in the (c, x) parametrization with Y = x^2,
// beta = x (c + x)/(1 + c x) and gamma = Y / beta:
//   u(2k) = 1 - Y^k,  ubar(2k+1) = 1 - beta Y^k,  uhat(2k+1) = 1 - gamma Y^k.
class ProductFactors {
 public:
  ProductFactors(MSeries Y, MSeries beta, MSeries gamma);

  // D = c x solves a2 D^2 + a1 D + a0 = 0 with c^2 = a0 / a2.
  static ProductFactors from_quadratic(const MSeries& a2, const MSeries& a1, const MSeries& a0);

  MSeries u(int n) const;
  MSeries ubar(int n) const;
  MSeries uhat(int n) const;

  const MSeries& D() const noexcept { return d_; }
  const MSeries& Y() const noexcept { return y_; }
  const MSeries& beta() const noexcept { return beta_; }
  const MSeries& gamma() const noexcept { return gamma_; }

 private:
  MSeries power_of_y(int k) const;

  MSeries d_;
  MSeries y_;
  MSeries beta_;
  MSeries gamma_;
};

// Ladder with B_{2i} = B u_{2i} ubar_{2i+3} / (ubar_{2i+1} u_{2i+2}) and its
// three companions; shared by quadrangulations and the ternary system.
WeightLadder quad_shape_ladder(const MSeries& first, const MSeries& second, const ProductFactors& f, int height);

struct QuadParams {
  MSeries d;
  MSeries y;
  MSeries beta;
  MSeries gamma;
};
QuadParams quad_params(const Tails& tails);
WeightLadder quad_ladder_closed(const Tails& tails, int height);

struct HexParams {
  MSeries wz1, wz2;
  MSeries d1, d2;
  MSeries y1, y2;
  MSeries lambda1, lambda2;
  MSeries beta1, beta2;
  MSeries gamma1, gamma2;
  MSeries kappa;  // (W/B) d1 d2
};
HexParams hex_params(const Tails& tails);
WeightLadder hex_ladder_closed(const Tails& tails, int height);

// G_1..G_max_distance from the closed forms; g must be quad or hex.
TwoPointTable twopoint_closed(const FaceWeights& g, int order, int max_distance);

}  // namespace bicolor
