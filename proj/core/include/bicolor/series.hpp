#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bicolor/rational.hpp"

namespace bicolor {

inline constexpr int kMaxVars = 3;

// Exponent vector. Entries past num_vars are kept at zero.
using Exponents = std::array<int, kMaxVars>;

inline int total_degree(const Exponents& e) { return e[0] + e[1] + e[2]; }

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAUnit : SeriesError {
  using SeriesError::SeriesError;
};
struct NotASquare : SeriesError {
  using SeriesError::SeriesError;
};
struct DivisibilityError : SeriesError {
  using SeriesError::SeriesError;
};
struct NoSeriesRoot : SeriesError {
  using SeriesError::SeriesError;
};
struct VariableMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Term {
  Exponents exponents{};
  Rat coeff;
};

// Monomials are stored densely, degree-major, so a prefix of the coefficient
// vector holds every monomial of degree <= d.
std::size_t monomial_count(int num_vars, int order);
std::size_t monomial_index(int num_vars, const Exponents& e);
const Exponents& monomial_at(int num_vars, std::size_t index);
int max_supported_order(int num_vars);

// Multivariate power series truncated by total degree.
//
// order():    coefficients of total degree > order are not stored.
// reliable(): coefficients of total degree <= reliable are exact.
class MSeries {
 public:
  MSeries() : MSeries(2, 0) {}
  MSeries(int num_vars, int order);

  static MSeries constant(int num_vars, int order, const Rat& c);
  static MSeries variable(int num_vars, int order, int which);
  static MSeries monomial(int num_vars, int order, const Exponents& e, const Rat& c = Rat(1));
  static MSeries from_terms(int num_vars, int order, std::span<const Term> terms);

  int num_vars() const noexcept { return nvars_; }
  int order() const noexcept { return order_; }
  int reliable() const noexcept { return reliable_; }
  void set_reliable(int r);

  Rat coeff(const Exponents& e) const;
  void set_coeff(const Exponents& e, const Rat& c);
  const Rat& coeff_at(std::size_t index) const { return c_[index]; }
  std::size_t stored() const noexcept { return c_.size(); }

  // Nonzero terms, sorted by total degree then lexicographically.
  std::vector<Term> terms() const;
  bool is_zero() const;
  // Lowest degree carrying a nonzero coefficient, or order()+1 for zero.
  int valuation() const;
  Rat constant_term() const { return c_[0]; }

  MSeries truncated(int new_order) const;
  // Multiplies by the monomial e; the order is kept.
  MSeries shifted(const Exponents& e) const;
  // Variable i of the result is variable perm[i] of this series.
  MSeries permuted(const std::array<int, kMaxVars>& perm) const;
  // Value of the stored polynomial at a rational point.
  Rat evaluate(std::span<const Rat> point) const;

  MSeries& operator+=(const MSeries& other);
  MSeries& operator-=(const MSeries& other);
  MSeries& operator*=(const Rat& s);

  friend MSeries operator+(MSeries a, const MSeries& b) { return a += b; }
  friend MSeries operator-(MSeries a, const MSeries& b) { return a -= b; }
  friend MSeries operator-(MSeries a) {
    a *= Rat(-1);
    return a;
  }
  friend MSeries operator*(MSeries a, const Rat& s) { return a *= s; }
  friend MSeries operator*(const Rat& s, MSeries a) { return a *= s; }
  friend MSeries operator*(const MSeries& a, const MSeries& b);

 private:
  friend MSeries mul(const MSeries& f, const MSeries& g);
  friend MSeries mul_graded(const MSeries& f, const MSeries& g);
  friend MSeries exact_div(const MSeries& f, const MSeries& g);
  void resize_to(int new_order);

  int nvars_;
  int order_;
  int reliable_;
  std::vector<Rat> c_;
};

MSeries add(const MSeries& f, const MSeries& g);
MSeries sub(const MSeries& f, const MSeries& g);
// Product truncated at min(order); reliable = min(reliable).
MSeries mul(const MSeries& f, const MSeries& g);
// Product keeping relative precision: a factor of valuation v extends the
// other factor's known range by v degrees. Used where many high-valuation
// series are multiplied, such as Hankel determinants.
MSeries mul_graded(const MSeries& f, const MSeries& g);
MSeries power(const MSeries& f, int k);
// k = 0 yields an exact 1 stored at the maximal order.
MSeries power_graded(const MSeries& f, int k);

MSeries inv_unit(const MSeries& f);
MSeries sqrt_unit(const MSeries& f);

struct Valuation {
  Exponents monomial{};
  MSeries unit_part;
};
// Writes g = m * u with m a monomial and u a unit. Throws DivisibilityError
// when the lowest terms of g are not a single monomial times a constant.
Valuation valuation_of(const MSeries& g);

// f / g where g is a monomial times a unit and the quotient is a series.
// reliable = min(f.reliable, g.reliable) - deg(m).
MSeries exact_div(const MSeries& f, const MSeries& g);

// Root mu with mu(0) = 0 of A2 mu^2 + A1 mu + A0 = 0, where A1 is a unit and
// A0 has no constant term.
MSeries solve_quadratic_branch(const MSeries& a2, const MSeries& a1, const MSeries& a0);

struct SeriesDiff {
  bool equal = true;
  Exponents where{};
  Rat lhs;
  Rat rhs;
  std::string describe() const;
};
// Compares coefficients of total degree <= degree.
SeriesDiff compare_upto(const MSeries& a, const MSeries& b, int degree);
int common_reliable(const MSeries& a, const MSeries& b);
// Compares on the common reliable order.
SeriesDiff compare_reliable(const MSeries& a, const MSeries& b);

std::string format_series(const MSeries& f);

}  // namespace bicolor
