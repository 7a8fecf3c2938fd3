#pragma once

// Independent reference implementations used only by the tests. They trade
// speed for obviousness: explicit enumeration, textbook formulas, maps keyed
// by exponent vectors.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "bicolor/dimers.hpp"
#include "bicolor/paths.hpp"
#include "bicolor/series.hpp"

namespace oracle {

using bicolor::Color;
using bicolor::Exponents;
using bicolor::MSeries;
using bicolor::Rat;

using Poly = std::map<Exponents, Rat>;

inline Poly to_poly(const MSeries& f) {
  Poly p;
  for (const auto& t : f.terms()) p[t.exponents] = t.coeff;
  return p;
}

inline MSeries from_poly(int nv, int order, const Poly& p) {
  MSeries f(nv, order);
  for (const auto& [e, c] : p) {
    if (bicolor::total_degree(e) <= order) f.set_coeff(e, c);
  }
  return f;
}

// Schoolbook product over a sparse map, truncated at `order`.
inline MSeries naive_mul(const MSeries& f, const MSeries& g, int order) {
  Poly out;
  for (const auto& [a, x] : to_poly(f)) {
    for (const auto& [b, y] : to_poly(g)) {
      Exponents e{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
      if (bicolor::total_degree(e) <= order) out[e] += x * y;
    }
  }
  return from_poly(f.num_vars(), order, out);
}

// Coefficients of 1/f by the defining recursion f * h = 1, degree by degree.
inline MSeries naive_inverse(const MSeries& f) {
  const Rat c0 = f.constant_term();
  MSeries h(f.num_vars(), f.order());
  const Poly fp = to_poly(f);
  for (std::size_t k = 0; k < bicolor::monomial_count(f.num_vars(), f.order()); ++k) {
    const Exponents e = bicolor::monomial_at(f.num_vars(), k);
    Rat acc = k == 0 ? Rat(1) : Rat(0);
    for (const auto& [a, x] : fp) {
      if (bicolor::total_degree(a) == 0) continue;
      if (a[0] > e[0] || a[1] > e[1] || a[2] > e[2]) continue;
      acc -= x * h.coeff({e[0] - a[0], e[1] - a[1], e[2] - a[2]});
    }
    h.set_coeff(e, acc / c0);
  }
  return h;
}

// Sum over every +-1 step sequence of length len. A down step from height h
// carries the ladder weight at h in the color of h.
inline MSeries brute_paths(Color start, int from, int to, int len, const bicolor::WeightLadder& ladder, int floor) {
  MSeries total(ladder.num_vars(), ladder.order());
  for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
    int h = from;
    bool ok = true;
    MSeries w = MSeries::constant(ladder.num_vars(), ladder.order(), Rat(1));
    for (int s = 0; s < len && ok; ++s) {
      if (mask & (1ul << s)) {
        ++h;
      } else {
        if (ladder.vanishes(h)) ok = false;
        else w = bicolor::mul(w, ladder.slice(bicolor::color_at(start, from, h), h));
        --h;
      }
      ok = ok && h >= floor;
    }
    if (ok && h == to) total += w;
  }
  return total;
}

// Rational path weights: each step between h and h+1 carries b when h is
// white and w when h is black.
inline Rat brute_rat_paths(Color start, int from, int to, int len, bool floored, int floor, const Rat& b,
                           const Rat& w) {
  Rat total(0);
  for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
    int h = from;
    bool ok = true;
    Rat weight(1);
    for (int s = 0; s < len && ok; ++s) {
      const int lower = (mask & (1ul << s)) ? h : h - 1;
      weight *= bicolor::color_at(start, from, lower) == Color::White ? b : w;
      h += (mask & (1ul << s)) ? 1 : -1;
      if (floored && h < floor) ok = false;
    }
    if (ok && h == to) total += weight;
  }
  return total;
}

// Determinant by the permutation expansion.
inline MSeries leibniz_det(const std::vector<std::vector<MSeries>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  MSeries total(m[0][0].num_vars(), m[0][0].order());
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    }
    MSeries term = MSeries::constant(total.num_vars(), total.order(), Rat(1));
    for (int r = 0; r < n; ++r) term = bicolor::mul(term, m[r][perm[r]]);
    if (inversions % 2) total -= term;
    else total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Hard dimers by walking the nodes: each node is free or starts a dimer.
inline void dimer_walk(int node, int links, Color bottom, int a, int b, bicolor::DimerPoly& out) {
  if (node >= links) {
    out.add(a, b, 1);
    return;
  }
  dimer_walk(node + 1, links, bottom, a, b, out);
  const bool black_low = bicolor::color_at(bottom, 0, node) == Color::Black;
  const int skip = node + 2;
  dimer_walk(skip, links, bottom, a + black_low, b + !black_low, out);
}

inline bicolor::DimerPoly brute_dimers(bicolor::DimerEnds ends, int links) {
  bicolor::DimerPoly out;
  dimer_walk(0, links, bicolor::bottom_color(ends), 0, 0, out);
  return out;
}

// t_black = t_white = t, with t kept in the first slot.
inline MSeries collapse(const MSeries& f) {
  MSeries out(2, f.order());
  for (const auto& t : f.terms()) {
    const Exponents e{bicolor::total_degree(t.exponents), 0, 0};
    out.set_coeff(e, out.coeff(e) + t.coeff);
  }
  out.set_reliable(f.reliable());
  return out;
}

}  // namespace oracle
