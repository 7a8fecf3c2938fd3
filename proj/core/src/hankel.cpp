#include "bicolor/hankel.hpp"

#include <algorithm>

namespace bicolor {

MSeries hankel_det(const std::vector<MSeries>& F, int shift, int i) {
  if (i < 0 || (shift != 0 && shift != 1)) throw std::invalid_argument("bad Hankel index or shift");
  const int n = i + 1;
  if (static_cast<int>(F.size()) < 2 * i + 1 + shift) throw std::invalid_argument("not enough moments for the determinant");
  int top = 0;
  for (int k = 0; k < 2 * i + 1 + shift; ++k) top = std::max(top, F[static_cast<std::size_t>(k)].order());
  const int nv = F.front().num_vars();
  // minors[S] = det of rows 0..|S|-1 restricted to the columns in S.
  std::vector<MSeries> minors(std::size_t{1} << n);
  minors[0] = MSeries::constant(nv, top, Rat(1));
  for (unsigned s = 1; s < (1u << n); ++s) {
    const int row = __builtin_popcount(s) - 1;
    MSeries acc;
    bool first = true;
    int pos = 0;
    for (int col = 0; col < n; ++col) {
      if (!(s & (1u << col))) continue;
      MSeries term = mul_graded(F[static_cast<std::size_t>(row + col + shift)], minors[s & ~(1u << col)]);
      if ((row + pos) % 2 == 1) term = -term;
      if (first) {
        acc = std::move(term);
        first = false;
      } else {
        acc += term;
      }
      ++pos;
    }
    minors[s] = std::move(acc);
  }
  return minors.back();
}

HankelFamily hankel_family(const std::vector<MSeries>& f_black, const std::vector<MSeries>& f_white, int i_max) {
  HankelFamily fam;
  const int nv = f_black.front().num_vars();
  const MSeries one = MSeries::constant(nv, max_supported_order(nv), Rat(1));
  for (auto* h : {&fam.h0, &fam.h1, &fam.h0_tilde, &fam.h1_tilde}) h->push_back(one);
  for (int i = 0; i <= i_max; ++i) {
    fam.h0.push_back(hankel_det(f_black, 0, i));
    fam.h0_tilde.push_back(hankel_det(f_white, 0, i));
    if (static_cast<int>(f_black.size()) >= 2 * i + 2) fam.h1.push_back(hankel_det(f_black, 1, i));
    if (static_cast<int>(f_white.size()) >= 2 * i + 2) fam.h1_tilde.push_back(hankel_det(f_white, 1, i));
  }
  return fam;
}

namespace {

// a * b / (c * d), cleaned of coefficients past the reliable order.
MSeries ratio(const MSeries& a, const MSeries& b, const MSeries& c, const MSeries& d) {
  MSeries q = exact_div(mul_graded(a, b), mul_graded(c, d));
  return q.truncated(std::min(q.order(), q.reliable()));
}

}  // namespace

WeightLadder cf_extract(const HankelFamily& fam, int i_max) {
  if (i_max < 1) throw std::invalid_argument("cf_extract needs i_max >= 1");
  using H = HankelFamily;
  std::vector<MSeries> black(static_cast<std::size_t>(2 * i_max)), white(static_cast<std::size_t>(2 * i_max));
  for (int i = 1; i <= i_max; ++i) {
    const auto e = static_cast<std::size_t>(2 * i - 1);
    const auto o = static_cast<std::size_t>(2 * i - 2);
    black[e] = ratio(H::at(fam.h0, i), H::at(fam.h1, i - 2), H::at(fam.h0, i - 1), H::at(fam.h1, i - 1));
    white[o] = ratio(H::at(fam.h1, i - 1), H::at(fam.h0, i - 2), H::at(fam.h1, i - 2), H::at(fam.h0, i - 1));
    black[o] = ratio(H::at(fam.h1_tilde, i - 1), H::at(fam.h0_tilde, i - 2), H::at(fam.h1_tilde, i - 2),
                     H::at(fam.h0_tilde, i - 1));
    white[e] = ratio(H::at(fam.h0_tilde, i), H::at(fam.h1_tilde, i - 2), H::at(fam.h0_tilde, i - 1),
                     H::at(fam.h1_tilde, i - 1));
  }
  return WeightLadder(std::move(black), std::move(white), std::nullopt, std::nullopt);
}

std::vector<MSeries> cf_expand(const WeightLadder& ladder, Color c, int depth, int n_max) {
  if (depth < n_max) throw std::invalid_argument("continued fraction depth must be at least n_max");
  if (depth > ladder.height() && !ladder.has_tails()) throw std::invalid_argument("ladder too short for the depth");
  const int nv = ladder.num_vars();
  const int order = ladder.order();
  const MSeries one = MSeries::constant(nv, order, Rat(1));
  std::vector<MSeries> tail{one};
  for (int k = depth; k >= 1; --k) {
    // Level k carries W_k on odd levels for the black moments, B_k otherwise.
    const Color level = (k % 2 == 1) == (c == Color::Black) ? Color::White : Color::Black;
    const MSeries& a = ladder.slice(level, k);
    std::vector<MSeries> x(static_cast<std::size_t>(n_max + 1), MSeries(nv, order));
    for (int j = 1; j <= n_max && j - 1 < static_cast<int>(tail.size()); ++j) {
      x[static_cast<std::size_t>(j)] = mul(a, tail[static_cast<std::size_t>(j - 1)]);
    }
    std::vector<MSeries> next{one};
    for (int m = 1; m <= n_max; ++m) {
      MSeries cm(nv, order);
      for (int j = 1; j <= m; ++j) cm += mul(x[static_cast<std::size_t>(j)], next[static_cast<std::size_t>(m - j)]);
      next.push_back(std::move(cm));
    }
    tail = std::move(next);
  }
  return tail;
}

Moments hankel_moments(const FaceWeights& g, int n_max, int precision) {
  if (precision < 0) throw std::invalid_argument("negative precision");
  const Tails tails = tail_solve(g, n_max + precision + 1);
  Moments m{f_direct_all(Color::Black, n_max, g, tails), f_direct_all(Color::White, n_max, g, tails)};
  for (auto* list : {&m.black, &m.white}) {
    for (std::size_t n = 0; n < list->size(); ++n) {
      auto& f = (*list)[n];
      f = f.truncated(std::min(f.order(), static_cast<int>(n) + precision));
    }
  }
  return m;
}

WeightLadder ladder_from_hankel(const FaceWeights& g, int i_max, int precision) {
  const Moments m = hankel_moments(g, 2 * i_max + 1, precision);
  return cf_extract(hankel_family(m.black, m.white, i_max), i_max);
}

}  // namespace bicolor
