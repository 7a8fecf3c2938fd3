#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bicolor/paths.hpp"
#include "bicolor/series.hpp"

namespace bicolor {

// End colors of a segment, bottom node first.
enum class DimerEnds { BB, BW, WW, WB };

Color bottom_color(DimerEnds ends);

// Polynomial in (s1, s2): s1 weights a dimer on a link whose lower node is
// black, s2 one whose lower node is white.
class DimerPoly {
 public:
  DimerPoly() = default;

  const std::map<std::pair<int, int>, mpz_class>& coeffs() const noexcept { return c_; }
  mpz_class coeff(int a, int b) const;
  void add(int a, int b, const mpz_class& v);

  Rat evaluate(const Rat& s1, const Rat& s2) const;
  // Substitutes series for s1, s2 keeping relative precision.
  MSeries evaluate(const MSeries& s1, const MSeries& s2) const;
  // Largest a + b with a nonzero coefficient.
  int max_dimers() const;

  friend bool operator==(const DimerPoly& x, const DimerPoly& y) = default;

 private:
  std::map<std::pair<int, int>, mpz_class> c_;
};

// Hard-dimer partition function by the transfer recursion.
DimerPoly zhd(DimerEnds ends, int links);
// Same quantity by enumerating link subsets (links <= 24).
DimerPoly zhd_brute(DimerEnds ends, int links);
// Single dimer weight s on every link.
Rat zhd_uncolored(int links, const Rat& s);

// Dimer weights from the (c, x) parametrization.
std::pair<Rat, Rat> dimer_weights(const Rat& c, const Rat& x);
// Product form of the partition function at (c, x).
Rat zhd_closed(DimerEnds ends, int links, const Rat& c, const Rat& x);

struct ClosedCheck {
  bool holds = false;            // recursion value equals the product form
  bool x_inverse_holds = false;  // invariance under x -> 1/x
  bool sign_flip_holds = false;  // invariance under (c, x) -> (-c, -x)
  Rat value;
  Rat closed;
};
ClosedCheck zhd_closed_check(DimerEnds ends, int links, const Rat& c, const Rat& x);

struct HankelPair {
  MSeries h0;
  MSeries h1;
};

// Hankel determinants through non-intersecting paths and dimers. alpha holds
// alpha_0..alpha_p for the black moments; pass (W, B, alpha_tilde) for the
// tilde family.
HankelPair lgv_quad(int i, const MSeries& B, const MSeries& W, const std::vector<MSeries>& alpha);
HankelPair lgv_hex(int i, const MSeries& B, const MSeries& W, const std::vector<MSeries>& alpha);

}  // namespace bicolor
