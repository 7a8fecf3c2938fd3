#include "bicolor/dimers.hpp"

#include <algorithm>

namespace bicolor {

Color bottom_color(DimerEnds ends) {
  return ends == DimerEnds::BB || ends == DimerEnds::BW ? Color::Black : Color::White;
}

namespace {

Color top_color(DimerEnds ends) {
  return ends == DimerEnds::BB || ends == DimerEnds::WB ? Color::Black : Color::White;
}

void check_segment(DimerEnds ends, int links) {
  if (links < 0) throw std::invalid_argument("negative number of links");
  const bool same_ends = bottom_color(ends) == top_color(ends);
  if (same_ends != (links % 2 == 0)) throw ParityError("segment length does not match its end colors");
}

// Link j joins nodes j-1 and j; its weight index is 0 (s1) when node j-1 is black.
int link_kind(Color bottom, int j) { return color_at(bottom, 0, j - 1) == Color::Black ? 0 : 1; }

DimerPoly times_link(const DimerPoly& p, int kind) {
  DimerPoly out;
  for (const auto& [e, v] : p.coeffs()) out.add(e.first + (kind == 0), e.second + (kind == 1), v);
  return out;
}

DimerPoly sum(const DimerPoly& a, const DimerPoly& b) {
  DimerPoly out = a;
  for (const auto& [e, v] : b.coeffs()) out.add(e.first, e.second, v);
  return out;
}

}  // namespace

mpz_class DimerPoly::coeff(int a, int b) const {
  auto it = c_.find({a, b});
  return it == c_.end() ? mpz_class(0) : it->second;
}

void DimerPoly::add(int a, int b, const mpz_class& v) {
  auto& slot = c_[{a, b}];
  slot += v;
  if (slot == 0) c_.erase({a, b});
}

Rat DimerPoly::evaluate(const Rat& s1, const Rat& s2) const {
  Rat total(0);
  for (const auto& [e, v] : c_) total += Rat(v) * rat_pow(s1, e.first) * rat_pow(s2, e.second);
  return total;
}

MSeries DimerPoly::evaluate(const MSeries& s1, const MSeries& s2) const {
  const int top = max_dimers();
  std::vector<MSeries> p1{MSeries::constant(s1.num_vars(), s1.order(), Rat(1))};
  std::vector<MSeries> p2{MSeries::constant(s2.num_vars(), s2.order(), Rat(1))};
  for (int k = 1; k <= top; ++k) {
    p1.push_back(mul_graded(p1.back(), s1));
    p2.push_back(mul_graded(p2.back(), s2));
  }
  MSeries total(s1.num_vars(), max_supported_order(s1.num_vars()));
  for (const auto& [e, v] : c_) {
    total += mul_graded(p1[static_cast<std::size_t>(e.first)], p2[static_cast<std::size_t>(e.second)]) * Rat(v);
  }
  return total;
}

int DimerPoly::max_dimers() const {
  int m = 0;
  for (const auto& [e, v] : c_) m = std::max(m, e.first + e.second);
  return m;
}

DimerPoly zhd(DimerEnds ends, int links) {
  check_segment(ends, links);
  const Color bottom = bottom_color(ends);
  DimerPoly prev, cur;  // Z_{L-2}, Z_{L-1}
  prev.add(0, 0, 1);
  cur = prev;
  if (links == 0) return cur;
  cur = sum(prev, times_link(prev, link_kind(bottom, 1)));
  for (int L = 2; L <= links; ++L) {
    DimerPoly next = sum(cur, times_link(prev, link_kind(bottom, L)));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

DimerPoly zhd_brute(DimerEnds ends, int links) {
  check_segment(ends, links);
  if (links > 24) throw std::invalid_argument("brute force limited to 24 links");
  const Color bottom = bottom_color(ends);
  DimerPoly out;
  for (unsigned long mask = 0; mask < (1ul << links); ++mask) {
    if (mask & (mask >> 1)) continue;  // two dimers would share a node
    int a = 0, b = 0;
    for (int j = 1; j <= links; ++j) {
      if (!(mask & (1ul << (j - 1)))) continue;
      (link_kind(bottom, j) == 0 ? a : b) += 1;
    }
    out.add(a, b, 1);
  }
  return out;
}

Rat zhd_uncolored(int links, const Rat& s) {
  if (links < 0) throw std::invalid_argument("negative number of links");
  Rat prev(1), cur(1);  // Z_{-1} = Z_0 = 1
  for (int L = 1; L <= links; ++L) {
    Rat next = cur + s * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::pair<Rat, Rat> dimer_weights(const Rat& c, const Rat& x) {
  const Rat den = (c + x) * (1 + c * x);
  if (sgn(den) == 0 || sgn(c) == 0) throw std::invalid_argument("degenerate (c, x) point");
  return {-x / den, -c * c * x / den};
}

Rat zhd_closed(DimerEnds ends, int links, const Rat& c, const Rat& x) {
  check_segment(ends, links);
  if (sgn(c) == 0 || sgn(x) == 0 || x * x == 1 || sgn((c + x) * (1 + c * x)) == 0) {
    throw std::invalid_argument("degenerate (c, x) point");
  }
  const Rat k = c / ((c + x) * (1 + c * x));
  const Rat one_minus_x2 = 1 - x * x;
  if (links % 2 == 0) {
    const int i = links / 2;
    return rat_pow(k, i) * (1 - rat_pow(x, 2 * i + 2)) / one_minus_x2;
  }
  const int i = (links - 1) / 2;
  const Rat xpow = rat_pow(x, 2 * i + 3);
  if (ends == DimerEnds::BW) {
    return (1 + c * x) * rat_pow(k, i + 1) * (1 - (c + x) / (1 + c * x) * xpow) / one_minus_x2;
  }
  return (1 + x / c) * rat_pow(k, i + 1) * (1 - (1 + c * x) / (c + x) * xpow) / one_minus_x2;
}

ClosedCheck zhd_closed_check(DimerEnds ends, int links, const Rat& c, const Rat& x) {
  ClosedCheck out;
  const DimerPoly poly = zhd(ends, links);
  const auto [s1, s2] = dimer_weights(c, x);
  out.value = poly.evaluate(s1, s2);
  out.closed = zhd_closed(ends, links, c, x);
  out.holds = out.value == out.closed;
  const Rat xi = Rat(1) / x;
  const auto [t1, t2] = dimer_weights(c, xi);
  out.x_inverse_holds = zhd_closed(ends, links, c, xi) == out.closed && poly.evaluate(t1, t2) == out.value;
  const auto [u1, u2] = dimer_weights(-c, -x);
  out.sign_flip_holds = zhd_closed(ends, links, -c, -x) == out.closed && poly.evaluate(u1, u2) == out.value;
  return out;
}

namespace {

MSeries triangular_power(const MSeries& bw, int i) { return power_graded(bw, i * (i + 1) / 2); }

}  // namespace

HankelPair lgv_quad(int i, const MSeries& B, const MSeries& W, const std::vector<MSeries>& alpha) {
  if (i < 0) throw std::invalid_argument("negative Hankel index");
  if (alpha.size() != 2) throw std::invalid_argument("quadrangulations have two alpha coefficients");
  const MSeries inv0 = inv_unit(alpha[0]);
  const MSeries s1 = mul(mul(W, alpha[1]), inv0);
  const MSeries s2 = mul(mul(B, alpha[1]), inv0);
  const MSeries bw = mul_graded(B, W);
  const MSeries common = mul_graded(triangular_power(bw, i), power_graded(alpha[0], i + 1));
  HankelPair out;
  out.h0 = mul_graded(common, zhd(DimerEnds::BW, 2 * i + 1).evaluate(s1, s2));
  out.h1 = mul_graded(mul_graded(common, power_graded(W, i + 1)), zhd(DimerEnds::BB, 2 * i + 2).evaluate(s1, s2));
  return out;
}

namespace {

// a + b p with p^2 = e1 p - e2.
struct Linear {
  MSeries a;
  MSeries b;
};

// p^r Z(W/p, B/p) reduced to a + b p.
Linear reduce_phi(const DimerPoly& z, int r, const MSeries& B, const MSeries& W, const MSeries& e1,
                  const MSeries& e2) {
  const int nv = B.num_vars();
  const int top = max_supported_order(nv);
  std::vector<Linear> pw{{MSeries::constant(nv, top, Rat(1)), MSeries(nv, top)}};
  for (int k = 1; k <= r; ++k) {
    const Linear& q = pw.back();
    pw.push_back({-mul_graded(q.b, e2), q.a + mul_graded(q.b, e1)});
  }
  Linear out{MSeries(nv, top), MSeries(nv, top)};
  for (const auto& [e, v] : z.coeffs()) {
    const int k = r - e.first - e.second;
    if (k < 0) throw std::logic_error("dimer degree exceeds the path count");
    const MSeries coeff = mul_graded(power_graded(W, e.first), power_graded(B, e.second)) * Rat(v);
    out.a += mul_graded(coeff, pw[static_cast<std::size_t>(k)].a);
    out.b += mul_graded(coeff, pw[static_cast<std::size_t>(k)].b);
  }
  return out;
}

MSeries norm(const Linear& l, const MSeries& e1, const MSeries& e2) {
  return mul_graded(l.a, l.a) + mul_graded(mul_graded(l.a, l.b), e1) + mul_graded(mul_graded(l.b, l.b), e2);
}

}  // namespace

HankelPair lgv_hex(int i, const MSeries& B, const MSeries& W, const std::vector<MSeries>& alpha) {
  if (i < 0) throw std::invalid_argument("negative Hankel index");
  if (alpha.size() != 3) throw std::invalid_argument("hexangulations have three alpha coefficients");
  const MSeries inv2 = inv_unit(alpha[2]);
  const MSeries e1 = mul(alpha[1], inv2);
  const MSeries e2 = mul(alpha[0], inv2);
  const MSeries bw = mul_graded(B, W);
  const int nv = B.num_vars();
  MSeries s0(nv, max_supported_order(nv)), s1(nv, max_supported_order(nv));
  for (int r = 0; r <= i + 1; ++r) {
    const MSeries weight = power_graded(bw, i + 1 - r);
    MSeries n0 = MSeries::constant(nv, max_supported_order(nv), Rat(1));
    if (r > 0) n0 = norm(reduce_phi(zhd(DimerEnds::BW, 2 * r - 1), r, B, W, e1, e2), e1, e2);
    const MSeries n1 = norm(reduce_phi(zhd(DimerEnds::BB, 2 * r), r, B, W, e1, e2), e1, e2);
    s0 += mul_graded(weight, n0);
    s1 += mul_graded(weight, n1);
  }
  const MSeries common = mul_graded(power_graded(alpha[2], i + 1), triangular_power(bw, i));
  return {mul_graded(common, s0), mul_graded(mul_graded(common, power_graded(W, i + 1)), s1)};
}

}  // namespace bicolor
