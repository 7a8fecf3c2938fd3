#include "bicolor/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "bicolor/closedform.hpp"
#include "bicolor/dimers.hpp"
#include "bicolor/extensions.hpp"
#include "bicolor/hankel.hpp"
#include "bicolor/paths.hpp"
#include "bicolor/slices.hpp"

namespace bicolor {

Rat RationalSampler::next() {
  static constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13};
  const auto num = static_cast<long>(gen_() % 19) - 9;
  const int den = kPrimes[gen_() % std::size(kPrimes)];
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat RationalSampler::next_avoiding(const std::vector<Rat>& excluded) {
  for (;;) {
    Rat r = next();
    if (sgn(r) != 0 && std::find(excluded.begin(), excluded.end(), r) == excluded.end()) return r;
  }
}

namespace {

// Accumulates comparisons under one check name and keeps the first failure.
class Check {
 public:
  Check(std::string suite, std::string name) : r_{std::move(suite), std::move(name), true, {}} {}

  void series(const std::string& label, const MSeries& a, const MSeries& b) {
    if (!r_.pass) return;
    const SeriesDiff d = compare_reliable(a, b);
    ++count_;
    if (!d.equal) fail(label + ": " + d.describe());
  }
  void expect(bool ok, const std::string& label) {
    if (!r_.pass) return;
    ++count_;
    if (!ok) fail(label);
  }
  CheckResult done() {
    if (r_.pass) r_.detail = std::to_string(count_) + " comparisons";
    return r_;
  }

 private:
  void fail(std::string why) {
    r_.pass = false;
    r_.detail = std::move(why);
  }

  CheckResult r_;
  int count_ = 0;
};

std::string idx(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

MSeries random_unit(int nv, int order, RationalSampler& rng) {
  MSeries f = MSeries::constant(nv, order, Rat(1));
  for (std::size_t k = 1; k < monomial_count(nv, order); ++k) f.set_coeff(monomial_at(nv, k), rng.next());
  return f;
}

// Substitutes t_black = t_white = t, keeping t in the first slot.
MSeries identify(const MSeries& f) {
  MSeries out(2, f.order());
  for (const auto& t : f.terms()) {
    const Exponents e{total_degree(t.exponents), 0, 0};
    out.set_coeff(e, out.coeff(e) + t.coeff);
  }
  out.set_reliable(f.reliable());
  return out;
}

constexpr std::array<int, kMaxVars> kSwap{1, 0, 2};

using Suite = std::function<std::vector<CheckResult>(const VerifyOptions&)>;

std::vector<CheckResult> qseries_suite(const VerifyOptions& o) {
  const std::string s = "qseries";
  RationalSampler rng(o.seed);
  std::vector<CheckResult> out;
  const int n = o.order;
  const MSeries f = random_unit(2, n, rng), g = random_unit(2, n, rng);
  const MSeries one = MSeries::constant(2, n, Rat(1));
  {
    Check c(s, "inverse");
    c.series("f * f^-1", mul(f, inv_unit(f)), one);
    c.series("g * g^-1", mul(g, inv_unit(g)), one);
    out.push_back(c.done());
  }
  {
    Check c(s, "square root");
    const MSeries r = sqrt_unit(f);
    c.series("sqrt(f)^2", mul(r, r), f);
    c.expect(r.constant_term() == 1, "constant term 1");
    out.push_back(c.done());
  }
  {
    Check c(s, "exact division");
    const MSeries m = MSeries::monomial(2, n, {1, 1, 0});
    const MSeries h = mul(m, g);
    c.series("(f h) / h", exact_div(mul(f, h), h), f);
    c.series("f / f", exact_div(f, f), one);
    out.push_back(c.done());
  }
  {
    Check c(s, "quadratic branch");
    const MSeries x = MSeries::variable(2, n, 0), y = MSeries::variable(2, n, 1);
    const MSeries a2 = f, a1 = g, a0 = mul(x, f) + mul(y, g);
    const MSeries mu = solve_quadratic_branch(a2, a1, a0);
    c.series("residual", mul(a2, mul(mu, mu)) + mul(a1, mu) + a0, MSeries(2, n));
    c.expect(sgn(mu.constant_term()) == 0, "branch vanishes at the origin");
    out.push_back(c.done());
  }
  {
    Check c(s, "evaluation");
    const int half = n / 2;
    const auto lift = [n](const MSeries& h) { return MSeries::from_terms(2, n, h.terms()); };
    const MSeries p = lift(f.truncated(half)), q = lift(g.truncated(n - half));
    const MSeries pq = mul(p, q);
    for (int k = 0; k < 5; ++k) {
      const std::vector<Rat> pt{rng.next(), rng.next()};
      c.expect(pq.evaluate(pt) == p.evaluate(pt) * q.evaluate(pt), "product evaluates to the product of values");
    }
    out.push_back(c.done());
  }
  return out;
}

std::vector<CheckResult> paths_suite(const VerifyOptions& o) {
  const std::string s = "paths";
  RationalSampler rng(o.seed);
  std::vector<CheckResult> out;
  {
    Check odd(s, "reflection odd"), even(s, "reflection even");
    for (int pt = 0; pt < 5; ++pt) {
      const HatWeights wt{rng.next_avoiding({}), rng.next_avoiding({})};
      for (int k = 0; k <= 3; ++k) {
        for (int l = 0; l <= 3; ++l) {
          for (int q = 0; q <= 5; ++q) {
            const std::string at = "k=" + std::to_string(k) + " l=" + std::to_string(l) + " q=" + std::to_string(q);
            if (k >= 1 && l >= 1) odd.expect(check_reflection_odd(k, l, q, wt).holds, at);
            even.expect(check_reflection_even(k, l, q, wt).holds, at);
          }
        }
      }
    }
    out.push_back(odd.done());
    out.push_back(even.done());
  }
  {
    Check c(s, "excursions");
    const WeightLadder l = ladder_solve(FaceWeights::quadrangulations(), o.order);
    for (Color col : {Color::Black, Color::White}) {
      const auto ex = excursion_sums(col, 2, 4, l, 0);
      for (int m = 0; m <= 4; ++m) c.series(idx("Z", 2 * m), ex[static_cast<std::size_t>(m)], z_plus(col, 2, 2, 2 * m, l, 0));
    }
    out.push_back(c.done());
  }
  {
    Check c(s, "parity");
    bool threw = false;
    try {
      z_plus(Color::Black, 0, 1, 2, WeightLadder::constant(t_black(2), t_white(2)), 0);
    } catch (const ParityError&) {
      threw = true;
    }
    c.expect(threw, "odd height difference with even length is rejected");
    out.push_back(c.done());
  }
  return out;
}

std::vector<CheckResult> slices_suite(const VerifyOptions& o) {
  const std::string s = "slices";
  std::vector<CheckResult> out;
  for (const auto& [fam, g] : {std::pair{"quad", FaceWeights::quadrangulations()},
                               std::pair{"hex", FaceWeights::hexangulations()}}) {
    const Tails tails = tail_solve(g, o.order);
    const WeightLadder l = ladder_solve(g, o.order);
    Check cons(s, std::string(fam) + " conserved quantities");
    for (Color col : {Color::Black, Color::White}) {
      const auto direct = f_direct_all(col, 3, g, tails);
      for (int n = 1; n <= 3; ++n) {
        for (int d = 0; d <= 4; ++d) {
          cons.series("n=" + std::to_string(n) + " d=" + std::to_string(d), conserved(col, n, d, l, g),
                      direct[static_cast<std::size_t>(n)]);
        }
      }
    }
    out.push_back(cons.done());
    Check sym(s, std::string(fam) + " color symmetry");
    const MSeries tb = t_black(o.order), tw = t_white(o.order);
    sym.series("t_w B_1 = t_b W_1", mul(tw, l.B(1)), mul(tb, l.W(1)));
    const int top = std::min(6, l.height());
    for (int i = 1; i <= top; ++i) sym.series(idx("B", i) + " swapped", l.B(i).permuted(kSwap), l.W(i));
    const auto fb = f_direct_all(Color::Black, 4, g, tails);
    const auto fw = f_direct_all(Color::White, 4, g, tails);
    for (int n = 1; n <= 4; ++n) {
      sym.series(idx("F", n), mul(tb, fb[static_cast<std::size_t>(n)]), mul(tw, fw[static_cast<std::size_t>(n)]));
    }
    for (int i = 1; i <= top; ++i) sym.series(idx("B", i) + " collapse", identify(l.B(i)), identify(l.W(i)));
    out.push_back(sym.done());
  }
  return out;
}

std::vector<CheckResult> hankel_suite(const VerifyOptions& o) {
  const std::string s = "hankel";
  std::vector<CheckResult> out;
  for (const auto& [fam, g] : {std::pair{"quad", FaceWeights::quadrangulations()},
                               std::pair{"hex", FaceWeights::hexangulations()}}) {
    const WeightLadder l = ladder_solve(g, o.order);
    Check c(s, std::string(fam) + " continued fraction");
    const WeightLadder cf = ladder_from_hankel(g, 3, o.order);
    for (int i = 1; i <= 6; ++i) {
      c.series(idx("B", i), cf.B(i), l.B(i));
      c.series(idx("W", i), cf.W(i), l.W(i));
    }
    const Tails tails = tail_solve(g, o.order);
    for (Color col : {Color::Black, Color::White}) {
      const auto direct = f_direct_all(col, 4, g, tails);
      const auto expanded = cf_expand(l, col, l.height(), 4);
      for (int n = 0; n <= 4; ++n) c.series(idx("F", n), expanded[static_cast<std::size_t>(n)], direct[static_cast<std::size_t>(n)]);
    }
    out.push_back(c.done());
  }
  return out;
}

std::vector<CheckResult> closedform_suite(const VerifyOptions& o) {
  const std::string s = "closedform";
  std::vector<CheckResult> out;
  {
    const auto g = FaceWeights::quadrangulations();
    const Tails t = tail_solve(g, o.order);
    const WeightLadder l = ladder_solve(g, o.order, std::max(o.order + 2, 7));
    const WeightLadder c = quad_ladder_closed(t, 6);
    Check chk(s, "quad closed form");
    for (int i = 1; i <= 6; ++i) {
      chk.series(idx("B", i), c.B(i), l.B(i));
      chk.series(idx("W", i), c.W(i), l.W(i));
    }
    const QuadParams p = quad_params(t);
    const MSeries one = MSeries::constant(2, o.order, Rat(1));
    chk.series("characteristic quadratic",
               mul(t.W, mul(p.d, p.d)) + mul((t.B + t.W) * Rat(2) - one, p.d) + t.B, MSeries(2, o.order));
    chk.series("y = d^2 W / B", mul(p.y, t.B), mul(mul(p.d, p.d), t.W));
    out.push_back(chk.done());
  }
  {
    const auto g = FaceWeights::hexangulations();
    const Tails t = tail_solve(g, o.order);
    const WeightLadder l = ladder_solve(g, o.order, std::max(o.order + 3, 7));
    const WeightLadder c = hex_ladder_closed(t, 6);
    Check chk(s, "hex closed form");
    for (int i = 1; i <= 6; ++i) {
      chk.series(idx("B", i), c.B(i), l.B(i));
      chk.series(idx("W", i), c.W(i), l.W(i));
    }
    const HexParams h = hex_params(t);
    for (const auto& [name, d, wz] : {std::tuple{"d1", h.d1, h.wz1}, std::tuple{"d2", h.d2, h.wz2}}) {
      chk.series(std::string(name) + " quadratic", mul(t.W, mul(d, d)) - mul(wz, d) + t.B, MSeries(2, o.order));
    }
    out.push_back(chk.done());
  }
  return out;
}

std::vector<CheckResult> dimers_suite(const VerifyOptions& o) {
  const std::string s = "dimers";
  RationalSampler rng(o.seed);
  std::vector<CheckResult> out;
  const std::map<DimerEnds, const char*> names{
      {DimerEnds::BB, "BB"}, {DimerEnds::BW, "BW"}, {DimerEnds::WW, "WW"}, {DimerEnds::WB, "WB"}};
  auto valid = [](DimerEnds e, int links) { return (e == DimerEnds::BB || e == DimerEnds::WW) == (links % 2 == 0); };
  {
    Check c(s, "recursion against enumeration");
    for (const auto& [e, name] : names) {
      for (int links = 0; links <= 12; ++links) {
        if (!valid(e, links)) continue;
        c.expect(zhd(e, links) == zhd_brute(e, links), std::string(name) + " links=" + std::to_string(links));
      }
    }
    out.push_back(c.done());
  }
  {
    Check c(s, "closed forms");
    std::vector<std::pair<Rat, Rat>> points{{Rat(1), Rat(1, 3)}};
    while (points.size() < 6) {
      const Rat cc = rng.next_avoiding({});
      const Rat x = rng.next_avoiding({Rat(1), Rat(-1)});
      if (sgn((cc + x) * (1 + cc * x)) == 0) continue;
      points.emplace_back(cc, x);
    }
    for (const auto& [cc, x] : points) {
      for (const auto& [e, name] : names) {
        for (int links = 0; links <= 10; ++links) {
          if (!valid(e, links)) continue;
          const ClosedCheck v = zhd_closed_check(e, links, cc, x);
          const std::string at = std::string(name) + " links=" + std::to_string(links) + " c=" + to_string(cc) +
                                 " x=" + to_string(x);
          c.expect(v.holds, at);
          c.expect(v.x_inverse_holds, at + " under x -> 1/x");
          c.expect(v.sign_flip_holds, at + " under (c, x) -> (-c, -x)");
        }
      }
    }
    out.push_back(c.done());
  }
  {
    Check c(s, "LGV quad");
    const auto g = FaceWeights::quadrangulations();
    const int i_max = 3;
    const Moments m = hankel_moments(g, 2 * i_max + 2, o.order);
    const HankelFamily fam = hankel_family(m.black, m.white, i_max);
    const Tails t = tail_solve(g, o.order + 2);
    const auto a = alpha_coeffs(Color::Black, g, t);
    const auto at = alpha_coeffs(Color::White, g, t);
    for (int i = 0; i <= i_max; ++i) {
      const HankelPair p = lgv_quad(i, t.B, t.W, a);
      const HankelPair pt = lgv_quad(i, t.W, t.B, at);
      c.series(idx("h0", i), p.h0, HankelFamily::at(fam.h0, i));
      c.series(idx("h1", i), p.h1, HankelFamily::at(fam.h1, i));
      c.series(idx("h0~", i), pt.h0, HankelFamily::at(fam.h0_tilde, i));
      c.series(idx("h1~", i), pt.h1, HankelFamily::at(fam.h1_tilde, i));
    }
    out.push_back(c.done());
  }
  return out;
}

std::vector<CheckResult> extensions_suite(const VerifyOptions& o) {
  const std::string s = "extensions";
  std::vector<CheckResult> out;
  const int n = o.order;
  const MSeries x0 = MSeries::variable(2, n, 0), x1 = MSeries::variable(2, n, 1);
  const MSeries one = MSeries::constant(2, n, Rat(1));
  {
    Check c(s, "ternary trees");
    const WeightLadder l = ternary_ladder(x0, x1, tree_height(n));
    const WeightLadder cl = ternary_closed(x0, x1, 6);
    for (int i = 1; i <= 6; ++i) {
      c.series(idx("P", i), cl.B(i), l.B(i));
      c.series(idx("Q", i), cl.W(i), l.W(i));
    }
    c.series("P_1 = 1", l.B(1), one);
    c.series("Q_1 = 1", l.W(1), one);
    out.push_back(c.done());
  }
  {
    Check c(s, "binary trees");
    const WeightLadder l = binary_ladder(x0, x1, tree_height(n));
    const WeightLadder cl = binary_closed(x0, x1, 6);
    for (int i = 1; i <= 6; ++i) {
      c.series(idx("R", i), cl.B(i), l.B(i));
      c.series(idx("S", i), cl.W(i), l.W(i));
    }
    c.series("R_1 = 1", l.B(1), one);
    c.series("S_1 = 1", l.W(1), one);
    out.push_back(c.done());
  }
  {
    Check c(s, "tricolor");
    const TricolorLadder l = tricolor_ladder(n);
    const TricolorClosed cl = tricolor_closed(n, 6);
    for (std::size_t k = 0; k < cl.T3.size(); ++k) {
      const int i = 3 * static_cast<int>(k + 1);
      const auto at = static_cast<std::size_t>(i - 1);
      c.series(idx("T", i), cl.T3[k], l.T[at]);
      c.series(idx("U", i), cl.U3[k], l.U[at]);
      c.series(idx("V", i), cl.V3[k], l.V[at]);
    }
    // U(t0, t1, t2) = T(t1, t2, t0).
    constexpr std::array<int, kMaxVars> rotate{2, 0, 1};
    for (int i = 1; i <= 6; ++i) {
      const auto at = static_cast<std::size_t>(i - 1);
      c.series(idx("T", i) + " rotated", l.T[at].permuted(rotate), l.U[at]);
      c.series(idx("U", i) + " rotated", l.U[at].permuted(rotate), l.V[at]);
    }
    c.series("characteristic identity", tricolor_characteristic_residual(n), MSeries(3, n));
    out.push_back(c.done());
  }
  return out;
}

const std::vector<std::pair<std::string, Suite>>& registry() {
  static const std::vector<std::pair<std::string, Suite>> r{
      {"qseries", qseries_suite}, {"paths", paths_suite},     {"slices", slices_suite},
      {"hankel", hankel_suite},   {"closedform", closedform_suite}, {"dimers", dimers_suite},
      {"extensions", extensions_suite}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options) {
  if (options.order < 1) throw std::invalid_argument("order must be at least 1");
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    auto part = fn(options);
    out.insert(out.end(), part.begin(), part.end());
  }
  if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

}  // namespace bicolor
