#include "bicolor/closedform.hpp"

namespace bicolor {

namespace {

MSeries one_like(const MSeries& s) { return MSeries::constant(s.num_vars(), s.order(), Rat(1)); }

MSeries quotient(const MSeries& num, const MSeries& den) { return mul(num, inv_unit(den)); }

}  // namespace

ProductFactors::ProductFactors(MSeries Y, MSeries beta, MSeries gamma)
    : d_(MSeries(Y.num_vars(), Y.order())), y_(std::move(Y)), beta_(std::move(beta)), gamma_(std::move(gamma)) {}

ProductFactors ProductFactors::from_quadratic(const MSeries& a2, const MSeries& a1, const MSeries& a0) {
  MSeries d = solve_quadratic_branch(a2, a1, a0);
  MSeries y = exact_div(mul(mul(d, d), a2), a0);
  MSeries beta = quotient(d + y, one_like(d) + d);
  MSeries gamma = exact_div(y, beta);
  ProductFactors f(std::move(y), std::move(beta), std::move(gamma));
  f.d_ = std::move(d);
  return f;
}

MSeries ProductFactors::power_of_y(int k) const { return power(y_, k); }

MSeries ProductFactors::u(int n) const {
  if (n < 0 || n % 2 != 0) throw std::invalid_argument("u takes an even nonnegative index");
  return one_like(y_) - power_of_y(n / 2);
}

MSeries ProductFactors::ubar(int n) const {
  if (n < 1 || n % 2 != 1) throw std::invalid_argument("ubar takes an odd positive index");
  return one_like(y_) - mul(beta_, power_of_y((n - 1) / 2));
}

MSeries ProductFactors::uhat(int n) const {
  if (n < 1 || n % 2 != 1) throw std::invalid_argument("uhat takes an odd positive index");
  return one_like(y_) - mul(gamma_, power_of_y((n - 1) / 2));
}

WeightLadder quad_shape_ladder(const MSeries& first, const MSeries& second, const ProductFactors& f, int height) {
  std::vector<MSeries> black, white;
  for (int j = 1; j <= height; ++j) {
    if (j % 2 == 0) {
      const int i = j / 2;
      black.push_back(mul(first, quotient(mul(f.u(2 * i), f.ubar(2 * i + 3)), mul(f.ubar(2 * i + 1), f.u(2 * i + 2)))));
      white.push_back(mul(second, quotient(mul(f.u(2 * i), f.uhat(2 * i + 3)), mul(f.uhat(2 * i + 1), f.u(2 * i + 2)))));
    } else {
      const int i = (j - 1) / 2;
      black.push_back(mul(first, quotient(mul(f.uhat(2 * i + 1), f.u(2 * i + 4)), mul(f.u(2 * i + 2), f.uhat(2 * i + 3)))));
      white.push_back(mul(second, quotient(mul(f.ubar(2 * i + 1), f.u(2 * i + 4)), mul(f.u(2 * i + 2), f.ubar(2 * i + 3)))));
    }
  }
  return WeightLadder(std::move(black), std::move(white), first, second);
}

QuadParams quad_params(const Tails& tails) {
  const MSeries& B = tails.B;
  const MSeries& W = tails.W;
  // W d^2 + (2(B + W) - 1) d + B = 0.
  const MSeries a1 = (B + W) * Rat(2) - one_like(B);
  const ProductFactors f = ProductFactors::from_quadratic(W, a1, B);
  return {f.D(), f.Y(), f.beta(), f.gamma()};
}

WeightLadder quad_ladder_closed(const Tails& tails, int height) {
  const QuadParams p = quad_params(tails);
  return quad_shape_ladder(tails.B, tails.W, ProductFactors(p.y, p.beta, p.gamma), height);
}

HexParams hex_params(const Tails& tails) {
  const MSeries& B = tails.B;
  const MSeries& W = tails.W;
  HexParams h;
  const MSeries one = one_like(B);
  // Wz = (-3(B + W) -/+ sqrt(4 - 3B^2 - 14BW - 3W^2)) / 2.
  const MSeries disc = one - (mul(B, B) * Rat(3) + mul(B, W) * Rat(14) + mul(W, W) * Rat(3)) * Rat(1, 4);
  const MSeries root = sqrt_unit(disc);
  const MSeries base = (B + W) * Rat(-3, 2);
  h.wz1 = base - root;
  h.wz2 = base + root;
  // W d^2 - (Wz) d + B = 0 for each branch.
  h.d1 = solve_quadratic_branch(W, -h.wz1, B);
  h.d2 = solve_quadratic_branch(W, -h.wz2, B);
  h.y1 = exact_div(mul(mul(h.d1, h.d1), W), B);
  h.y2 = exact_div(mul(mul(h.d2, h.d2), W), B);
  const MSeries gap = h.d1 - h.d2;
  h.lambda1 = exact_div(h.d1 - mul(h.y1, h.d2), gap);
  h.lambda2 = exact_div(mul(h.y2, h.d1) - h.d2, gap);
  h.beta1 = quotient(h.d1 + h.y1, one + h.d1);
  h.beta2 = quotient(h.d2 + h.y2, one + h.d2);
  h.gamma1 = exact_div(h.y1, h.beta1);
  h.gamma2 = exact_div(h.y2, h.beta2);
  h.kappa = exact_div(mul(mul(W, h.d1), h.d2), B);
  return h;
}

namespace {

// 1 - l1 s1 y1^i - l2 s2 y2^i - kappa s1 s2 (y1 y2)^i.
MSeries hex_factor(const HexParams& h, const MSeries& s1, const MSeries& s2, int i) {
  const MSeries p1 = power(h.y1, i);
  const MSeries p2 = power(h.y2, i);
  return one_like(h.y1) - mul(mul(h.lambda1, s1), p1) - mul(mul(h.lambda2, s2), p2) -
         mul(mul(h.kappa, mul(s1, s2)), mul(p1, p2));
}

}  // namespace

WeightLadder hex_ladder_closed(const Tails& tails, int height) {
  const HexParams h = hex_params(tails);
  const MSeries one = one_like(h.y1);
  auto plain = [&](int i) { return hex_factor(h, one, one, i); };
  auto with_beta = [&](int i) { return hex_factor(h, h.beta1, h.beta2, i); };
  // beta^{-1} y^i = gamma y^{i-1}.
  auto with_inverse = [&](int i) { return hex_factor(h, h.gamma1, h.gamma2, i - 1); };
  std::vector<MSeries> black, white;
  for (int j = 1; j <= height; ++j) {
    if (j % 2 == 0) {
      const int i = j / 2;
      black.push_back(mul(tails.B, quotient(mul(plain(i), with_beta(i + 1)), mul(plain(i + 1), with_beta(i)))));
      white.push_back(
          mul(tails.W, quotient(mul(plain(i), with_inverse(i + 2)), mul(plain(i + 1), with_inverse(i + 1)))));
    } else {
      const int i = (j - 1) / 2;
      black.push_back(
          mul(tails.B, quotient(mul(plain(i + 2), with_inverse(i + 1)), mul(plain(i + 1), with_inverse(i + 2)))));
      white.push_back(mul(tails.W, quotient(mul(plain(i + 2), with_beta(i)), mul(plain(i + 1), with_beta(i + 1)))));
    }
  }
  return WeightLadder(std::move(black), std::move(white), tails.B, tails.W);
}

TwoPointTable twopoint_closed(const FaceWeights& g, int order, int max_distance) {
  const Tails tails = tail_solve(g, order);
  if (g.values() == FaceWeights::quadrangulations().values()) {
    return twopoint_from_ladder(quad_ladder_closed(tails, max_distance), max_distance);
  }
  if (g.values() == FaceWeights::hexangulations().values()) {
    return twopoint_from_ladder(hex_ladder_closed(tails, max_distance), max_distance);
  }
  throw std::invalid_argument("closed forms exist for quadrangulations and hexangulations only");
}

}  // namespace bicolor
