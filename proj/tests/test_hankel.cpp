#include <random>

#include "bicolor/hankel.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bicolor;

namespace {

std::vector<MSeries> random_moments(int count, int order, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<MSeries> F;
  for (int n = 0; n < count; ++n) {
    MSeries f(2, order);
    for (std::size_t k = 0; k < monomial_count(2, order); ++k) {
      const long num = static_cast<long>(gen() % 9) - 4;
      Rat r(num, static_cast<long>(gen() % 3) + 1);
      r.canonicalize();
      f.set_coeff(monomial_at(2, k), r);
    }
    F.push_back(f);
  }
  return F;
}

void check_ladders_agree(const WeightLadder& a, const WeightLadder& b, int levels, int min_reliable) {
  for (int j = 1; j <= levels; ++j) {
    for (Color c : {Color::Black, Color::White}) {
      const MSeries& x = a.slice(c, j);
      const MSeries& y = b.slice(c, j);
      const SeriesDiff d = compare_reliable(x, y);
      CHECK_MESSAGE(d.equal, "level " << j << ": " << d.describe());
      CHECK_MESSAGE(common_reliable(x, y) >= min_reliable, "level " << j << " known to " << common_reliable(x, y));
    }
  }
}

}  // namespace

TEST_CASE("division-free determinant matches the permutation expansion") {
  for (int i = 0; i <= 3; ++i) {
    for (int shift : {0, 1}) {
      const auto F = random_moments(2 * i + 2, 3, static_cast<std::uint64_t>(10 * i + shift));
      std::vector<std::vector<MSeries>> m(static_cast<std::size_t>(i + 1));
      for (int r = 0; r <= i; ++r) {
        for (int c = 0; c <= i; ++c) m[r].push_back(F[static_cast<std::size_t>(r + c + shift)]);
      }
      CHECK(compare_upto(hankel_det(F, shift, i), oracle::leibniz_det(m), 3).equal);
    }
  }
  const auto F = random_moments(3, 2, 1);
  CHECK_THROWS_AS(hankel_det(F, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(hankel_det(F, 2, 0), std::invalid_argument);
}

TEST_CASE("continued fraction expansion counts weighted Dyck paths") {
  const int N = 5;
  const WeightLadder l = ladder_solve(FaceWeights::hexangulations(), N);
  for (Color c : {Color::Black, Color::White}) {
    const auto F = cf_expand(l, c, 8, 4);
    REQUIRE(F.size() == 5);
    for (int n = 0; n <= 4; ++n) {
      CHECK(compare_upto(F[n], oracle::brute_paths(c, 0, 0, 2 * n, l, 0), N).equal);
    }
  }
  CHECK_THROWS_AS(cf_expand(l, Color::Black, 2, 3), std::invalid_argument);
}

TEST_CASE("continued fraction of the solved ladder gives the direct moments") {
  for (const FaceWeights& g : {FaceWeights::quadrangulations(), FaceWeights::hexangulations()}) {
    const int N = 6;
    const WeightLadder l = ladder_solve(g, N);
    const Tails t{l.tail(Color::Black), l.tail(Color::White)};
    for (Color c : {Color::Black, Color::White}) {
      const auto cf = cf_expand(l, c, 10, 4);
      const auto direct = f_direct_all(c, 4, g, t);
      for (int n = 0; n <= 4; ++n) CHECK(compare_reliable(cf[n], direct[n]).equal);
    }
  }
}

TEST_CASE("first Hankel determinants by hand") {
  const Moments m = hankel_moments(FaceWeights::quadrangulations(), 5, 4);
  const HankelFamily fam = hankel_family(m.black, m.white, 2);
  CHECK(HankelFamily::at(fam.h0, -1).constant_term() == 1);
  CHECK(compare_upto(HankelFamily::at(fam.h0, 0), MSeries::constant(2, 4, Rat(1)), 4).equal);
  CHECK(compare_upto(HankelFamily::at(fam.h1, 0), m.black[1], 4).equal);
  const MSeries h01 = mul(m.black[0], m.black[2]) - mul(m.black[1], m.black[1]);
  CHECK(compare_reliable(HankelFamily::at(fam.h0, 1), h01).equal);
}

TEST_CASE("moments carry the requested precision past their valuation") {
  const Moments m = hankel_moments(FaceWeights::quadrangulations(), 4, 3);
  for (int n = 0; n <= 4; ++n) {
    CHECK(m.black[n].order() == n + 3);
    CHECK(m.black[n].valuation() == n);
  }
  CHECK_THROWS_AS(hankel_moments(FaceWeights::quadrangulations(), 2, -1), std::invalid_argument);
}

TEST_CASE("Hankel route reproduces the solved ladder") {
  SUBCASE("quadrangulations") {
    check_ladders_agree(ladder_from_hankel(FaceWeights::quadrangulations(), 3, 6),
                        ladder_solve(FaceWeights::quadrangulations(), 7), 6, 3);
  }
  SUBCASE("mixed bipartite faces") {
    const FaceWeights g({Rat(0), Rat(1), Rat(1)});
    check_ladders_agree(ladder_from_hankel(g, 2, 5), ladder_solve(g, 6), 4, 2);
  }
  SUBCASE("with a degree-two face weight") {
    const FaceWeights g({Rat(1, 2), Rat(1)});
    check_ladders_agree(ladder_from_hankel(g, 2, 5), ladder_solve(g, 6), 4, 2);
  }
  SUBCASE("octangulations") {
    const FaceWeights g({Rat(0), Rat(0), Rat(0), Rat(1)});
    check_ladders_agree(ladder_from_hankel(g, 2, 5), ladder_solve(g, 6), 4, 2);
  }
  CHECK_THROWS_AS(cf_extract(HankelFamily{}, 0), std::invalid_argument);
}
