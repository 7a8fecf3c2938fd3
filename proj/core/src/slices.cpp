#include "bicolor/slices.hpp"

#include <algorithm>

namespace bicolor {

FaceWeights::FaceWeights(std::vector<Rat> g) : g_(std::move(g)) {
  if (g_.empty() || sgn(g_.back()) == 0) {
    throw std::invalid_argument("face weights need a nonzero last entry");
  }
  if (g_.front() == 1) {
    throw std::invalid_argument("g_1 = 1 makes the slice equations singular");
  }
}

FaceWeights FaceWeights::quadrangulations() { return FaceWeights({Rat(0), Rat(1)}); }
FaceWeights FaceWeights::hexangulations() { return FaceWeights({Rat(0), Rat(0), Rat(1)}); }

Rat FaceWeights::g(int k) const {
  if (k < 1 || k > static_cast<int>(g_.size())) return Rat(0);
  return g_[static_cast<std::size_t>(k - 1)];
}

MSeries t_black(int order) { return MSeries::variable(2, order, 0); }
MSeries t_white(int order) { return MSeries::variable(2, order, 1); }
MSeries t_of(Color c, int order) { return c == Color::Black ? t_black(order) : t_white(order); }

namespace {

bool same(const MSeries& a, const MSeries& b) {
  return compare_upto(a, b, std::min(a.order(), b.order())).equal;
}

// The k = 1 term of the slice equation is linear in the unknown; it is moved
// to the left-hand side, which leaves the factor 1/(1 - g_1).
MSeries finish(const FaceWeights& g, MSeries rhs) {
  const Rat g1 = g.g(1);
  if (sgn(g1) != 0) rhs *= Rat(1) / (Rat(1) - g1);
  return rhs;
}

}  // namespace

Tails tail_solve(const FaceWeights& g, int order) {
  MSeries B = t_black(order), W = t_white(order);
  const int p = g.p();
  for (int it = 0; it <= order + 2; ++it) {
    const WeightLadder flat = WeightLadder::constant(B, W);
    MSeries nb = t_black(order), nw = t_white(order);
    for (int k = 2; k <= p + 1; ++k) {
      const Rat gk = g.g(k);
      if (sgn(gk) == 0) continue;
      nb += z_free(Color::Black, 0, -1, 2 * k - 1, flat) * gk;
      nw += z_free(Color::White, 0, -1, 2 * k - 1, flat) * gk;
    }
    nb = finish(g, std::move(nb));
    nw = finish(g, std::move(nw));
    const bool stable = same(nb, B) && same(nw, W);
    B = std::move(nb);
    W = std::move(nw);
    if (stable) return {B, W};
  }
  throw ConvergenceError("tail equations did not stabilise");
}

WeightLadder ladder_solve(const FaceWeights& g, int order, int height) {
  const int p = g.p();
  if (height < 0) height = order + p + 1;
  if (height < order + p) throw std::invalid_argument("ladder height must be at least order + p");
  const Tails tails = tail_solve(g, order);
  std::vector<MSeries> black(static_cast<std::size_t>(height), t_black(order));
  std::vector<MSeries> white(static_cast<std::size_t>(height), t_white(order));
  for (int sweep = 0; sweep <= order + 3; ++sweep) {
    const WeightLadder cur(black, white, tails.B, tails.W);
    std::vector<MSeries> nb, nw;
    nb.reserve(black.size());
    nw.reserve(white.size());
    bool stable = true;
    for (int i = 1; i <= height; ++i) {
      MSeries b = t_black(order), w = t_white(order);
      for (int k = 2; k <= p + 1; ++k) {
        const Rat gk = g.g(k);
        if (sgn(gk) == 0) continue;
        b += z_strip(Color::Black, i, 2 * k - 1, cur) * gk;
        w += z_strip(Color::White, i, 2 * k - 1, cur) * gk;
      }
      b = finish(g, std::move(b));
      w = finish(g, std::move(w));
      const auto idx = static_cast<std::size_t>(i - 1);
      stable = stable && same(b, black[idx]) && same(w, white[idx]);
      nb.push_back(std::move(b));
      nw.push_back(std::move(w));
    }
    black = std::move(nb);
    white = std::move(nw);
    if (stable) return WeightLadder(black, white, tails.B, tails.W);
  }
  throw ConvergenceError("ladder equations did not stabilise");
}

MSeries conserved(Color c, int n, int d, const WeightLadder& ladder, const FaceWeights& g) {
  if (n < 1 || d < 0) throw std::invalid_argument("conserved quantity needs n >= 1 and d >= 0");
  const auto ends = endpoint_sums(c, d, 2 * n, ladder, d);
  const MSeries zero(ladder.num_vars(), ladder.order());
  auto at = [&](int h) -> const MSeries& {
    auto it = ends.find(h);
    return it == ends.end() ? zero : it->second;
  };
  MSeries sub = zero;
  bool any = false;
  if (d >= 1) {
    for (int j = 1; 2 * j <= 2 * n; ++j) {
      MSeries last = zero;
      for (int k = j + 1; k <= g.p() + 1; ++k) {
        const Rat gk = g.g(k);
        if (sgn(gk) == 0) continue;
        last += z_plus(c, d + 2 * j, d - 1, 2 * k - 1, ladder, 0) * gk;
      }
      if (last.is_zero()) continue;
      sub += mul(at(d + 2 * j), last);
      any = true;
    }
  }
  if (!any) return at(d);
  return at(d) - exact_div(sub, t_of(c, ladder.order()));
}

std::vector<MSeries> alpha_coeffs(Color c, const FaceWeights& g, const Tails& tails) {
  const MSeries& X = c == Color::Black ? tails.B : tails.W;
  const int order = std::min(tails.B.order(), tails.W.order());
  const WeightLadder flat = WeightLadder::constant(tails.B, tails.W);
  const MSeries t = t_of(c, order);
  std::vector<MSeries> out;
  for (int q = 0; q <= g.p(); ++q) {
    MSeries bracket = MSeries::constant(2, order, q == 0 ? Rat(1) : Rat(0));
    for (int k = q + 1; k <= g.p() + 1; ++k) {
      const Rat gk = g.g(k);
      if (sgn(gk) == 0) continue;
      bracket -= z_free(opposite(c), 0, 0, 2 * k - 2 * q - 2, flat) * gk;
    }
    out.push_back(exact_div(mul(X, bracket), t));
  }
  return out;
}

std::vector<MSeries> f_direct_all(Color c, int n_max, const FaceWeights& g, const Tails& tails) {
  if (n_max < 0) throw std::invalid_argument("negative moment index");
  const auto alpha = alpha_coeffs(c, g, tails);
  const WeightLadder flat = WeightLadder::constant(tails.B, tails.W);
  const auto z = excursion_sums(c, 0, n_max + g.p(), flat, 0);
  std::vector<MSeries> out;
  out.push_back(MSeries::constant(2, alpha.front().order(), Rat(1)));
  for (int n = 1; n <= n_max; ++n) {
    MSeries f = mul(alpha[0], z[static_cast<std::size_t>(n)]);
    for (int q = 1; q <= g.p(); ++q) f += mul(alpha[static_cast<std::size_t>(q)], z[static_cast<std::size_t>(n + q)]);
    out.push_back(std::move(f));
  }
  return out;
}

MSeries f_direct(Color c, int n, const FaceWeights& g, const Tails& tails) {
  return f_direct_all(c, n, g, tails).back();
}

TwoPointTable twopoint_from_ladder(const WeightLadder& ladder, int max_distance) {
  if (max_distance > ladder.height()) throw std::invalid_argument("ladder too short for the requested distance");
  const int order = ladder.order();
  TwoPointTable table;
  for (int j = 1; j <= max_distance; ++j) {
    const MSeries prev_b = j == 1 ? t_black(order) : ladder.B(j - 1);
    const MSeries prev_w = j == 1 ? t_white(order) : ladder.W(j - 1);
    // Even distances pick up the weight of the same color, odd ones the other.
    const Exponents same_b = j % 2 == 0 ? Exponents{1, 0, 0} : Exponents{0, 1, 0};
    const Exponents same_w = j % 2 == 0 ? Exponents{0, 1, 0} : Exponents{1, 0, 0};
    table.black.push_back((ladder.B(j) - prev_b).shifted(same_b));
    table.white.push_back((ladder.W(j) - prev_w).shifted(same_w));
  }
  return table;
}

}  // namespace bicolor
