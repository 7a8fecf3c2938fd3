#include "bicolor/dimers.hpp"
#include "bicolor/hankel.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bicolor;

namespace {

constexpr DimerEnds kAll[] = {DimerEnds::BB, DimerEnds::BW, DimerEnds::WW, DimerEnds::WB};

bool same_color_ends(DimerEnds e) { return e == DimerEnds::BB || e == DimerEnds::WW; }

DimerPoly poly(std::initializer_list<std::tuple<int, int, long>> terms) {
  DimerPoly p;
  for (const auto& [a, b, v] : terms) p.add(a, b, v);
  return p;
}

// Exchanges s1 and s2.
DimerPoly swapped(const DimerPoly& p) {
  DimerPoly out;
  for (const auto& [e, v] : p.coeffs()) out.add(e.second, e.first, v);
  return out;
}

}  // namespace

TEST_CASE("small segments") {
  CHECK(zhd(DimerEnds::BB, 2) == poly({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
  CHECK(zhd(DimerEnds::BW, 1) == poly({{0, 0, 1}, {1, 0, 1}}));
  CHECK(zhd(DimerEnds::BW, 3) == poly({{0, 0, 1}, {1, 0, 2}, {0, 1, 1}, {2, 0, 1}}));
  CHECK(zhd(DimerEnds::WB, 1) == poly({{0, 0, 1}, {0, 1, 1}}));
  CHECK(zhd(DimerEnds::WW, 0) == poly({{0, 0, 1}}));
  CHECK(zhd(DimerEnds::BW, 3).max_dimers() == 2);
}

TEST_CASE("segment parity is enforced") {
  CHECK_THROWS_AS(zhd(DimerEnds::BB, 3), ParityError);
  CHECK_THROWS_AS(zhd(DimerEnds::BW, 2), ParityError);
  CHECK_THROWS_AS(zhd_brute(DimerEnds::WB, 4), ParityError);
  CHECK_THROWS_AS(zhd(DimerEnds::BB, -2), std::invalid_argument);
  CHECK_THROWS_AS(zhd_brute(DimerEnds::BB, 26), std::invalid_argument);
}

TEST_CASE("transfer recursion agrees with both enumerations") {
  for (DimerEnds e : kAll) {
    for (int links = same_color_ends(e) ? 0 : 1; links <= 14; links += 2) {
      const DimerPoly z = zhd(e, links);
      CHECK(z == zhd_brute(e, links));
      CHECK(z == oracle::brute_dimers(e, links));
    }
  }
}

TEST_CASE("color exchange swaps the dimer weights") {
  for (int links = 0; links <= 12; links += 2) CHECK(zhd(DimerEnds::WW, links) == swapped(zhd(DimerEnds::BB, links)));
  for (int links = 1; links <= 11; links += 2) CHECK(zhd(DimerEnds::WB, links) == swapped(zhd(DimerEnds::BW, links)));
}

TEST_CASE("total count is a Fibonacci number") {
  long a = 1, b = 2;  // counts for links = 0 and 1
  for (int links = 0; links <= 20; ++links) {
    const DimerEnds e = links % 2 == 0 ? DimerEnds::BB : DimerEnds::BW;
    CHECK(zhd(e, links).evaluate(Rat(1), Rat(1)) == a);
    CHECK(zhd_uncolored(links, Rat(1)) == a);
    const long c = a + b;
    a = b;
    b = c;
  }
}

TEST_CASE("series evaluation keeps relative precision") {
  const MSeries s1 = MSeries::variable(2, 3, 0), s2 = MSeries::variable(2, 3, 1);
  const MSeries z = zhd(DimerEnds::BB, 8).evaluate(s1, s2);
  CHECK(z.reliable() >= 3);
  CHECK(z.coeff({1, 0, 0}) == 4);
  CHECK(z.coeff({2, 0, 0}) == 6);
  CHECK(z.coeff({1, 1, 0}) == 9);
}

TEST_CASE("product forms at rational points") {
  const std::vector<std::pair<Rat, Rat>> pts{{Rat(1), Rat(1, 3)},   {Rat(2, 3), Rat(1, 5)}, {Rat(-3, 7), Rat(2, 11)},
                                             {Rat(5, 2), Rat(-1, 4)}, {Rat(1, 7), Rat(3, 13)}, {Rat(1), Rat(-2, 9)}};
  for (DimerEnds e : kAll) {
    for (const auto& [c, x] : pts) {
      const auto [s1, s2] = dimer_weights(c, x);
      for (int links = same_color_ends(e) ? 0 : 1; links <= 12; links += 2) {
        const ClosedCheck r = zhd_closed_check(e, links, c, x);
        CHECK(r.holds);
        CHECK(r.x_inverse_holds);
        CHECK(r.sign_flip_holds);
        // Independent value from the enumerated polynomial.
        CHECK(oracle::brute_dimers(e, links).evaluate(s1, s2) == r.closed);
      }
    }
  }
  CHECK_THROWS_AS(zhd_closed(DimerEnds::BB, 2, Rat(1), Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(dimer_weights(Rat(0), Rat(1, 2)), std::invalid_argument);
}

TEST_CASE("uncolored collapse at c = 1") {
  for (const Rat x : {Rat(1, 3), Rat(-2, 7), Rat(5, 11)}) {
    const auto [s1, s2] = dimer_weights(Rat(1), x);
    CHECK(s1 == s2);
    for (int links = 0; links <= 12; ++links) {
      const DimerEnds e = links % 2 == 0 ? DimerEnds::BB : DimerEnds::BW;
      CHECK(zhd_uncolored(links, s1) == zhd_closed(e, links, Rat(1), x));
      // 1 + x^2 + ... + x^(2i) over (1 + x)^(2i) for the even case.
      if (links % 2 == 0) {
        Rat geo(0);
        for (int k = 0; k <= links; k += 2) geo += rat_pow(x, k);
        CHECK(zhd_uncolored(links, s1) == geo / rat_pow(1 + x, links));
      }
    }
  }
}

TEST_CASE("LGV determinants agree with the Hankel determinants") {
  SUBCASE("quadrangulations") {
    const FaceWeights g = FaceWeights::quadrangulations();
    const int i_max = 3, prec = 5;
    const Moments m = hankel_moments(g, 2 * i_max + 1, prec);
    const HankelFamily fam = hankel_family(m.black, m.white, i_max);
    const Tails t = tail_solve(g, 2 * i_max + prec + 2);
    const auto a = alpha_coeffs(Color::Black, g, t);
    const auto at = alpha_coeffs(Color::White, g, t);
    for (int i = 0; i <= i_max; ++i) {
      const HankelPair p = lgv_quad(i, t.B, t.W, a);
      const HankelPair q = lgv_quad(i, t.W, t.B, at);
      CHECK_MESSAGE(compare_reliable(p.h0, HankelFamily::at(fam.h0, i)).equal, "i=" << i);
      CHECK_MESSAGE(compare_reliable(p.h1, HankelFamily::at(fam.h1, i)).equal, "i=" << i);
      CHECK(compare_reliable(q.h0, HankelFamily::at(fam.h0_tilde, i)).equal);
      CHECK(compare_reliable(q.h1, HankelFamily::at(fam.h1_tilde, i)).equal);
      CHECK(common_reliable(p.h1, HankelFamily::at(fam.h1, i)) > HankelFamily::at(fam.h1, i).valuation());
    }
    // i = 0: h0 = F_0 = 1 and h1 = F_1.
    const HankelPair z = lgv_quad(0, t.B, t.W, a);
    CHECK(compare_reliable(z.h0, MSeries::constant(2, 4, Rat(1))).equal);
    CHECK(compare_reliable(z.h1, m.black[1]).equal);
    CHECK_THROWS_AS(lgv_quad(1, t.B, t.W, {a[0]}), std::invalid_argument);
  }
  SUBCASE("hexangulations") {
    const FaceWeights g = FaceWeights::hexangulations();
    const int i_max = 2, prec = 4;
    const Moments m = hankel_moments(g, 2 * i_max + 1, prec);
    const HankelFamily fam = hankel_family(m.black, m.white, i_max);
    const Tails t = tail_solve(g, 2 * i_max + prec + 2);
    const auto a = alpha_coeffs(Color::Black, g, t);
    for (int i = 0; i <= i_max; ++i) {
      const HankelPair p = lgv_hex(i, t.B, t.W, a);
      CHECK_MESSAGE(compare_reliable(p.h0, HankelFamily::at(fam.h0, i)).equal, "i=" << i);
      CHECK_MESSAGE(compare_reliable(p.h1, HankelFamily::at(fam.h1, i)).equal, "i=" << i);
    }
  }
}
