#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bicolor/series.hpp"

namespace bicolor {

enum class Color { Black, White };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }

struct ParityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Slice weights B_i (black) and W_i (white) for heights 1..height().
// Heights <= 0 carry weight zero; heights above the ladder use the tails.
// A constant ladder uses the tails at every height, including negative ones.
class WeightLadder {
 public:
  WeightLadder(std::vector<MSeries> black, std::vector<MSeries> white, std::optional<MSeries> tail_black,
               std::optional<MSeries> tail_white);
  static WeightLadder constant(MSeries tail_black, MSeries tail_white);

  int height() const noexcept { return static_cast<int>(black_.size()); }
  bool is_constant() const noexcept { return constant_; }
  bool has_tails() const noexcept { return tail_black_.has_value(); }
  int num_vars() const noexcept { return zero_.num_vars(); }
  int order() const noexcept { return zero_.order(); }

  const MSeries& B(int i) const { return slice(Color::Black, i); }
  const MSeries& W(int i) const { return slice(Color::White, i); }
  const MSeries& slice(Color c, int i) const;
  const MSeries& tail(Color c) const;
  // True when height i carries the zero weight.
  bool vanishes(int i) const noexcept { return !constant_ && i <= 0; }

 private:
  WeightLadder() = default;

  std::vector<MSeries> black_;
  std::vector<MSeries> white_;
  std::optional<MSeries> tail_black_;
  std::optional<MSeries> tail_white_;
  MSeries zero_;
  bool constant_ = false;
};

// Color of height h when height `from` has color `start`.
inline Color color_at(Color start, int from, int h) {
  return ((h - from) % 2 == 0) ? start : opposite(start);
}

// Weighted sum over paths from -> to with len unit steps staying >= floor.
// Only descending steps are weighted: a step leaving height h downward
// carries the slice weight of h in its own color.
MSeries z_plus(Color start, int from, int to, int len, const WeightLadder& ladder, int floor);

// Paths from height i down to i-1 of odd length, staying >= 0.
MSeries z_strip(Color start, int i, int len, const WeightLadder& ladder);

// Unconstrained paths; floor is placed out of reach.
MSeries z_free(Color start, int from, int to, int len, const WeightLadder& ladder);

// Closed unconstrained paths of length len with constant weights B, W.
MSeries l_zero(int len, const MSeries& B, const MSeries& W);

// Z^+_{from,from}(2m) for m = 0..m_max from a single walk.
std::vector<MSeries> excursion_sums(Color start, int from, int m_max, const WeightLadder& ladder, int floor);

// Weighted sums of all paths of length len from `from`, keyed by endpoint.
std::map<int, MSeries> endpoint_sums(Color start, int from, int len, const WeightLadder& ladder, int floor);

// Rational weights attached to both step directions: a step between h and
// h+1 carries b when h is white and w when h is black.
struct HatWeights {
  Rat b;
  Rat w;
};

Rat rat_path(Color start, int from, int to, int len, std::optional<int> floor, const HatWeights& wt);

// L_k(len): unconstrained paths from a black height dropping by 2k.
Rat l_hat(int k, int len, const HatWeights& wt);

struct ReflectionVerdict {
  bool holds = false;
  Rat lhs;
  Rat rhs;
};

// A_{2k-1,2l-1}(2q) = L_{k-l}(2q) - L_{k+l}(2q), white odd heights.
ReflectionVerdict check_reflection_odd(int k, int l, int q, const HatWeights& wt);
// A_{2k,2l}(2q) with the series correction in c = b/w, black even heights.
ReflectionVerdict check_reflection_even(int k, int l, int q, const HatWeights& wt);

}  // namespace bicolor
