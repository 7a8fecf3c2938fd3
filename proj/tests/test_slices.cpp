#include "bicolor/slices.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "reference_data.hpp"

using namespace bicolor;

namespace {

// Swaps the two formal variables.
MSeries swap_colors(const MSeries& f) { return f.permuted({1, 0, 2}); }

MSeries one(int order) { return MSeries::constant(2, order, Rat(1)); }

}  // namespace

TEST_CASE("face weights validation") {
  CHECK_THROWS_AS(FaceWeights({}), std::invalid_argument);
  CHECK_THROWS_AS(FaceWeights({Rat(1), Rat(0)}), std::invalid_argument);
  CHECK_THROWS_AS(FaceWeights({Rat(1), Rat(1)}), std::invalid_argument);
  const FaceWeights g({Rat(1, 2), Rat(0), Rat(3)});
  CHECK(g.p() == 2);
  CHECK(g.g(1) == Rat(1, 2));
  CHECK(g.g(4) == 0);
  CHECK(g.g(0) == 0);
}

TEST_CASE("quadrangulation tails solve their closed equations") {
  const int N = 8;
  const Tails t = tail_solve(FaceWeights::quadrangulations(), N);
  const MSeries lhs_b = mul(t.B, one(N) - t.B - t.W * Rat(2));
  const MSeries lhs_w = mul(t.W, one(N) - t.W - t.B * Rat(2));
  CHECK(compare_upto(lhs_b, t_black(N), N).equal);
  CHECK(compare_upto(lhs_w, t_white(N), N).equal);
}

TEST_CASE("tails solve the slice equation with enumerated paths") {
  for (const FaceWeights& g : {FaceWeights::hexangulations(), FaceWeights({Rat(1, 2), Rat(1)}),
                               FaceWeights({Rat(0), Rat(1), Rat(1)})}) {
    const int N = 6;
    const Tails t = tail_solve(g, N);
    const WeightLadder flat = WeightLadder::constant(t.B, t.W);
    MSeries rb = t_black(N), rw = t_white(N);
    for (int k = 1; k <= g.p() + 1; ++k) {
      rb += oracle::brute_paths(Color::Black, 0, -1, 2 * k - 1, flat, -100) * g.g(k);
      rw += oracle::brute_paths(Color::White, 0, -1, 2 * k - 1, flat, -100) * g.g(k);
    }
    CHECK(compare_upto(rb, t.B, N).equal);
    CHECK(compare_upto(rw, t.W, N).equal);
  }
}

TEST_CASE("ladder entries solve the slice equations with enumerated paths") {
  for (const FaceWeights& g : {FaceWeights::quadrangulations(), FaceWeights::hexangulations(),
                               FaceWeights({Rat(1, 2), Rat(1)})}) {
    const int N = 6;
    const WeightLadder l = ladder_solve(g, N);
    for (int i = 1; i <= 5; ++i) {
      MSeries rb = t_black(N), rw = t_white(N);
      for (int k = 1; k <= g.p() + 1; ++k) {
        rb += oracle::brute_paths(Color::Black, i, i - 1, 2 * k - 1, l, 0) * g.g(k);
        rw += oracle::brute_paths(Color::White, i, i - 1, 2 * k - 1, l, 0) * g.g(k);
      }
      CHECK_MESSAGE(compare_upto(rb, l.B(i), N).equal, "i=" << i);
      CHECK_MESSAGE(compare_upto(rw, l.W(i), N).equal, "i=" << i);
    }
  }
  CHECK_THROWS_AS(ladder_solve(FaceWeights::quadrangulations(), 6, 3), std::invalid_argument);
}

TEST_CASE("printed quadrangulation ladder and two-point functions") {
  const WeightLadder l = ladder_solve(FaceWeights::quadrangulations(), 8);
  CHECK(reference::mismatch(l.B(1), reference::quad_B1) == "");
  CHECK(reference::mismatch(l.B(2), reference::quad_B2) == "");
  CHECK(reference::mismatch(l.B(3), reference::quad_B3) == "");
  const TwoPointTable tp = twopoint_from_ladder(l, 3);
  CHECK(reference::mismatch(tp.black[0], reference::quad_G1) == "");
  CHECK(reference::mismatch(tp.black[1], reference::quad_G2) == "");
  CHECK(reference::mismatch(tp.black[2], reference::quad_G3) == "");
  for (int j = 0; j < 3; ++j) CHECK(compare_upto(swap_colors(tp.black[j]), tp.white[j], 8).equal);
  CHECK_THROWS_AS(twopoint_from_ladder(l, l.height() + 1), std::invalid_argument);
}

TEST_CASE("printed hexangulation ladder and two-point functions") {
  const WeightLadder l = ladder_solve(FaceWeights::hexangulations(), 8);
  CHECK(reference::mismatch(l.B(1), reference::hex_B1) == "");
  CHECK(reference::mismatch(l.B(2), reference::hex_B2) == "");
  CHECK(reference::mismatch(l.B(3), reference::hex_B3) == "");
  const TwoPointTable tp = twopoint_from_ladder(l, 3);
  CHECK(reference::mismatch(tp.black[0], reference::hex_G1) == "");
  CHECK(reference::mismatch(tp.black[1], reference::hex_G2) == "");
  CHECK(reference::mismatch(tp.black[2], reference::hex_G3) == "");
}

TEST_CASE("ladder converges to the tails") {
  const int N = 8;
  const WeightLadder l = ladder_solve(FaceWeights::quadrangulations(), N);
  for (int i = 1; i <= 6; ++i) {
    CHECK(compare_upto(l.B(i), l.tail(Color::Black), i).equal);
    CHECK_FALSE(compare_upto(l.B(i), l.tail(Color::Black), i + 1).equal);
  }
}

TEST_CASE("conserved quantities do not depend on the offset") {
  for (const FaceWeights& g : {FaceWeights::quadrangulations(), FaceWeights::hexangulations()}) {
    const int N = 6;
    const WeightLadder l = ladder_solve(g, N);
    const Tails t{l.tail(Color::Black), l.tail(Color::White)};
    for (Color c : {Color::Black, Color::White}) {
      const auto direct = f_direct_all(c, 3, g, t);
      for (int n = 1; n <= 3; ++n) {
        for (int d = 0; d <= 4; ++d) {
          const MSeries k = conserved(c, n, d, l, g);
          CHECK_MESSAGE(compare_reliable(k, direct[n]).equal, "n=" << n << " d=" << d);
          CHECK(common_reliable(k, direct[n]) >= N - 2);
        }
        CHECK(compare_reliable(f_direct(c, n, g, t), direct[n]).equal);
      }
    }
  }
  const WeightLadder q = ladder_solve(FaceWeights::quadrangulations(), 4);
  CHECK_THROWS_AS(conserved(Color::Black, 0, 1, q, FaceWeights::quadrangulations()), std::invalid_argument);
}

TEST_CASE("first moments are the tails up to a shift") {
  // F_1 counts closed paths of length 2 from height 0: a single down step from 1.
  const int N = 6;
  const Tails t = tail_solve(FaceWeights::quadrangulations(), N);
  const auto fb = f_direct_all(Color::Black, 1, FaceWeights::quadrangulations(), t);
  CHECK(fb[0].constant_term() == 1);
  CHECK(fb[1].coeff({0, 1, 0}) == 1);
}

TEST_CASE("color symmetries") {
  for (const FaceWeights& g : {FaceWeights::quadrangulations(), FaceWeights::hexangulations(),
                               FaceWeights({Rat(1, 3), Rat(2), Rat(1)})}) {
    const int N = 6;
    const WeightLadder l = ladder_solve(g, N);
    CHECK(compare_upto(mul(t_white(N), l.B(1)), mul(t_black(N), l.W(1)), N).equal);
    for (int i = 1; i <= 6; ++i) CHECK(compare_upto(swap_colors(l.B(i)), l.W(i), N).equal);
    const Tails t{l.tail(Color::Black), l.tail(Color::White)};
    const auto fb = f_direct_all(Color::Black, 4, g, t);
    const auto fw = f_direct_all(Color::White, 4, g, t);
    for (int n = 1; n <= 4; ++n) {
      CHECK(compare_reliable(mul(t_black(N), fb[n]), mul(t_white(N), fw[n])).equal);
    }
    for (int i = 1; i <= 6; ++i) CHECK(compare_upto(oracle::collapse(l.B(i)), oracle::collapse(l.W(i)), N).equal);
  }
}

TEST_CASE("uncolored collapse reproduces the one-variable quadrangulation slices") {
  // With t_black = t_white = t the tail R solves R = t + 3 R^2.
  const int N = 7;
  const Tails t = tail_solve(FaceWeights::quadrangulations(), N);
  const MSeries R = oracle::collapse(t.B);
  const MSeries T = MSeries::variable(2, N, 0);
  CHECK(compare_upto(R, T + mul(R, R) * Rat(3), N).equal);
  // Catalan-type counts 1, 3, 18, 135 for rooted quadrangulations.
  CHECK(R.coeff({2, 0, 0}) == 3);
  CHECK(R.coeff({3, 0, 0}) == 18);
  CHECK(R.coeff({4, 0, 0}) == 135);
}
