#include "bicolor/extensions.hpp"

#include <algorithm>

#include "bicolor/slices.hpp"

namespace bicolor {

namespace {

bool same(const MSeries& a, const MSeries& b) { return compare_upto(a, b, std::min(a.order(), b.order())).equal; }

MSeries one_at(int num_vars, int order) { return MSeries::constant(num_vars, order, Rat(1)); }

int joint_order(const MSeries& a, const MSeries& b) { return std::min(a.order(), b.order()); }

template <class Step>
PairTails iterate_tails(int num_vars, int order, Step step) {
  PairTails cur{one_at(num_vars, order), one_at(num_vars, order)};
  for (int it = 0; it <= order + 3; ++it) {
    PairTails next = step(cur);
    const bool stable = same(next.first, cur.first) && same(next.second, cur.second);
    cur = std::move(next);
    if (stable) return cur;
  }
  throw ConvergenceError("tree tail equations did not stabilise");
}

// One Jacobi sweep per round over i = 1..height until nothing changes.
template <class Step>
WeightLadder iterate_ladder(const PairTails& tails, int height, Step step) {
  std::vector<MSeries> first(static_cast<std::size_t>(height), tails.first);
  std::vector<MSeries> second(static_cast<std::size_t>(height), tails.second);
  const int order = joint_order(tails.first, tails.second);
  for (int sweep = 0; sweep <= order + height + 3; ++sweep) {
    const WeightLadder cur(first, second, tails.first, tails.second);
    std::vector<MSeries> nf, ns;
    bool stable = true;
    for (int i = 1; i <= height; ++i) {
      auto [a, b] = step(cur, i);
      const auto idx = static_cast<std::size_t>(i - 1);
      stable = stable && same(a, first[idx]) && same(b, second[idx]);
      nf.push_back(std::move(a));
      ns.push_back(std::move(b));
    }
    first = std::move(nf);
    second = std::move(ns);
    if (stable) return WeightLadder(first, second, tails.first, tails.second);
  }
  throw ConvergenceError("tree ladder equations did not stabilise");
}

}  // namespace

int tree_height(int order) { return order + 3; }

PairTails ternary_tails(const MSeries& z_black, const MSeries& z_white) {
  const int order = joint_order(z_black, z_white);
  const MSeries one = one_at(z_black.num_vars(), order);
  return iterate_tails(z_black.num_vars(), order, [&](const PairTails& c) {
    return PairTails{one + mul(z_white, mul(mul(c.second, c.second), c.first)),
                     one + mul(z_black, mul(mul(c.first, c.first), c.second))};
  });
}

WeightLadder ternary_ladder(const MSeries& z_black, const MSeries& z_white, int height) {
  const PairTails tails = ternary_tails(z_black, z_white);
  const MSeries one = one_at(z_black.num_vars(), joint_order(z_black, z_white));
  return iterate_ladder(tails, height, [&](const WeightLadder& l, int i) {
    return std::pair{one + mul(z_white, mul(mul(l.W(i - 1), l.B(i)), l.W(i + 1))),
                     one + mul(z_black, mul(mul(l.B(i - 1), l.W(i)), l.B(i + 1)))};
  });
}

WeightLadder ternary_closed(const MSeries& z_black, const MSeries& z_white, int height) {
  const PairTails tails = ternary_tails(z_black, z_white);
  const MSeries one = one_at(z_black.num_vars(), joint_order(z_black, z_white));
  // (P - 1) D^2 - D + (Q - 1) = 0.
  const ProductFactors f = ProductFactors::from_quadratic(tails.first - one, -one, tails.second - one);
  return quad_shape_ladder(tails.first, tails.second, f, height);
}

PairTails binary_tails(const MSeries& y_black, const MSeries& y_white) {
  const int order = joint_order(y_black, y_white);
  const MSeries one = one_at(y_black.num_vars(), order);
  return iterate_tails(y_black.num_vars(), order, [&](const PairTails& c) {
    return PairTails{one + mul(y_black, mul(c.second, c.second)), one + mul(y_white, mul(c.first, c.first))};
  });
}

WeightLadder binary_ladder(const MSeries& y_black, const MSeries& y_white, int height) {
  const PairTails tails = binary_tails(y_black, y_white);
  const MSeries one = one_at(y_black.num_vars(), joint_order(y_black, y_white));
  return iterate_ladder(tails, height, [&](const WeightLadder& l, int i) {
    return std::pair{one + mul(y_black, mul(l.W(i - 1), l.W(i + 1))), one + mul(y_white, mul(l.B(i - 1), l.B(i + 1)))};
  });
}

WeightLadder binary_closed(const MSeries& y_black, const MSeries& y_white, int height) {
  const PairTails tails = binary_tails(y_black, y_white);
  const MSeries& R = tails.first;
  const MSeries& S = tails.second;
  const MSeries one = one_at(y_black.num_vars(), joint_order(y_black, y_white));
  // S (S - 1) D^2 - R S D + R (R - 1) = 0.
  const ProductFactors f = ProductFactors::from_quadratic(mul(S, S - one), -mul(R, S), mul(R, R - one));
  auto ratio = [](const MSeries& a, const MSeries& b, const MSeries& c, const MSeries& d) {
    return mul(mul(a, b), inv_unit(mul(c, d)));
  };
  std::vector<MSeries> black, white;
  for (int j = 1; j <= height; ++j) {
    if (j % 2 == 0) {
      const int i = j / 2;
      black.push_back(mul(R, ratio(f.u(2 * i), f.uhat(2 * i + 5), f.u(2 * i + 2), f.uhat(2 * i + 3))));
      white.push_back(mul(S, ratio(f.u(2 * i), f.ubar(2 * i + 5), f.u(2 * i + 2), f.ubar(2 * i + 3))));
    } else {
      const int i = (j - 1) / 2;
      black.push_back(mul(R, ratio(f.ubar(2 * i + 1), f.u(2 * i + 6), f.ubar(2 * i + 3), f.u(2 * i + 4))));
      white.push_back(mul(S, ratio(f.uhat(2 * i + 1), f.u(2 * i + 6), f.uhat(2 * i + 3), f.u(2 * i + 4))));
    }
  }
  return WeightLadder(std::move(black), std::move(white), R, S);
}

TricolorTails tricolor_tails(int order) {
  const MSeries t0 = MSeries::variable(3, order, 0);
  const MSeries t1 = MSeries::variable(3, order, 1);
  const MSeries t2 = MSeries::variable(3, order, 2);
  TricolorTails cur{t0, t1, t2};
  for (int it = 0; it <= order + 3; ++it) {
    TricolorTails next{t0 + mul(cur.T, cur.U + cur.V), t1 + mul(cur.U, cur.V + cur.T), t2 + mul(cur.V, cur.T + cur.U)};
    const bool stable = same(next.T, cur.T) && same(next.U, cur.U) && same(next.V, cur.V);
    cur = std::move(next);
    if (stable) return cur;
  }
  throw ConvergenceError("tricolor tail equations did not stabilise");
}

TricolorLadder tricolor_ladder(int order, int height) {
  if (height < 0) height = order + 3;
  const TricolorTails tails = tricolor_tails(order);
  const MSeries t0 = MSeries::variable(3, order, 0);
  const MSeries t1 = MSeries::variable(3, order, 1);
  const MSeries t2 = MSeries::variable(3, order, 2);
  const MSeries zero(3, order);
  TricolorLadder l{std::vector<MSeries>(static_cast<std::size_t>(height), tails.T),
                   std::vector<MSeries>(static_cast<std::size_t>(height), tails.U),
                   std::vector<MSeries>(static_cast<std::size_t>(height), tails.V), tails.T, tails.U, tails.V};
  auto get = [&](const std::vector<MSeries>& v, const MSeries& tail, int i) -> const MSeries& {
    if (i <= 0) return zero;
    if (i > height) return tail;
    return v[static_cast<std::size_t>(i - 1)];
  };
  for (int sweep = 0; sweep <= order + height + 3; ++sweep) {
    std::vector<MSeries> nt, nu, nv;
    bool stable = true;
    for (int i = 1; i <= height; ++i) {
      const auto idx = static_cast<std::size_t>(i - 1);
      MSeries a = t0 + mul(l.T[idx], get(l.U, l.tail_U, i - 1) + get(l.V, l.tail_V, i + 1));
      MSeries b = t1 + mul(l.U[idx], get(l.V, l.tail_V, i - 1) + get(l.T, l.tail_T, i + 1));
      MSeries c = t2 + mul(l.V[idx], get(l.T, l.tail_T, i - 1) + get(l.U, l.tail_U, i + 1));
      stable = stable && same(a, l.T[idx]) && same(b, l.U[idx]) && same(c, l.V[idx]);
      nt.push_back(std::move(a));
      nu.push_back(std::move(b));
      nv.push_back(std::move(c));
    }
    l.T = std::move(nt);
    l.U = std::move(nu);
    l.V = std::move(nv);
    if (stable) return l;
  }
  throw ConvergenceError("tricolor ladder equations did not stabilise");
}

TricolorParams tricolor_params(const MSeries& T, const MSeries& U, const MSeries& V) {
  const int order = std::min({T.order(), U.order(), V.order()});
  const MSeries one = one_at(T.num_vars(), order);
  MSeries y(T.num_vars(), order), d = y, e = y;
  for (int it = 0; it <= order + 3; ++it) {
    MSeries ny = mul(U, y + d) + mul(mul(V, y), one + e);
    MSeries nd = mul(V, d + e) + mul(T, d + y);
    MSeries ne = mul(T, e + one) + mul(U, e + d);
    const bool stable = same(ny, y) && same(nd, d) && same(ne, e);
    y = std::move(ny);
    d = std::move(nd);
    e = std::move(ne);
    if (stable) {
      MSeries a_hat = mul(e + d + y, inv_unit(one + e + d));
      return {y, d, e, a_hat};
    }
  }
  throw ConvergenceError("tricolor parameter equations did not stabilise");
}

namespace {

std::vector<MSeries> product_form(const MSeries& prefactor, const TricolorParams& p, int count) {
  const MSeries one = one_at(prefactor.num_vars(), prefactor.order());
  std::vector<MSeries> out;
  for (int i = 1; i <= count; ++i) {
    const MSeries yi = power(p.y, i);
    const MSeries yi1 = mul(yi, p.y);
    const MSeries num = mul(one - yi, one - mul(p.a_hat, yi1));
    const MSeries den = mul(one - mul(p.a_hat, yi), one - yi1);
    out.push_back(mul(prefactor, mul(num, inv_unit(den))));
  }
  return out;
}

}  // namespace

TricolorClosed tricolor_closed(int order, int max_index) {
  const TricolorTails t = tricolor_tails(order);
  const int count = max_index / 3;
  return {product_form(t.T, tricolor_params(t.T, t.U, t.V), count),
          product_form(t.U, tricolor_params(t.U, t.V, t.T), count),
          product_form(t.V, tricolor_params(t.V, t.T, t.U), count)};
}

MSeries tricolor_characteristic_residual(int order) {
  const TricolorTails t = tricolor_tails(order);
  const TricolorParams p = tricolor_params(t.T, t.U, t.V);
  const MSeries one = one_at(3, order);
  const MSeries lhs = mul(mul(mul(t.T, t.U), t.V), power(one + p.y, 2));
  const MSeries gap = one - t.T - t.U - t.V;
  return lhs - mul(p.y, mul(gap, gap));
}

}  // namespace bicolor
