#include "bicolor/series.hpp"

#include <algorithm>
#include <sstream>

namespace bicolor {

namespace {

constexpr int kMaxOrder2 = 180;
constexpr int kMaxOrder3 = 72;

void check_vars(int num_vars) {
  if (num_vars != 2 && num_vars != 3) {
    throw VariableMismatch("series must have 2 or 3 variables, got " + std::to_string(num_vars));
  }
}

const std::vector<Exponents>& table(int num_vars) {
  static const std::vector<Exponents> two = [] {
    std::vector<Exponents> t;
    for (int d = 0; d <= kMaxOrder2; ++d)
      for (int b = 0; b <= d; ++b) t.push_back({d - b, b, 0});
    return t;
  }();
  static const std::vector<Exponents> three = [] {
    std::vector<Exponents> t;
    for (int d = 0; d <= kMaxOrder3; ++d)
      for (int e = 0; e <= d; ++e)
        for (int c = 0; c <= e; ++c) t.push_back({d - e, e - c, c});
    return t;
  }();
  return num_vars == 2 ? two : three;
}

std::vector<int> degrees_for(int num_vars) {
  std::vector<int> out;
  for (const auto& e : table(num_vars)) out.push_back(total_degree(e));
  return out;
}

const std::vector<int>& degree_table(int num_vars) {
  static const std::vector<int> two = degrees_for(2);
  static const std::vector<int> three = degrees_for(3);
  return num_vars == 2 ? two : three;
}

void same_vars(const MSeries& f, const MSeries& g) {
  if (f.num_vars() != g.num_vars()) {
    throw VariableMismatch("series variable sets differ");
  }
}

bool divides(const Exponents& m, const Exponents& e) {
  return m[0] <= e[0] && m[1] <= e[1] && m[2] <= e[2];
}

// Accumulates f * g into out for every product monomial of degree <= order.
void multiply_into(const MSeries& f, const MSeries& g, int order, std::vector<Rat>& out) {
  const int nv = f.num_vars();
  const auto& exps = table(nv);
  const auto& degs = degree_table(nv);
  std::vector<std::size_t> gnz;
  for (std::size_t j = 0; j < g.stored(); ++j)
    if (sgn(g.coeff_at(j)) != 0) gnz.push_back(j);
  if (gnz.empty()) return;
  mpq_class tmp;
  for (std::size_t i = 0; i < f.stored(); ++i) {
    const Rat& fi = f.coeff_at(i);
    if (sgn(fi) == 0) continue;
    const int di = degs[i];
    if (di > order) break;
    const std::size_t limit = monomial_count(nv, order - di);
    const Exponents& ei = exps[i];
    for (std::size_t j : gnz) {
      if (j >= limit) break;
      const Exponents& ej = exps[j];
      const Exponents sum{ei[0] + ej[0], ei[1] + ej[1], ei[2] + ej[2]};
      mpq_mul(tmp.get_mpq_t(), fi.get_mpq_t(), g.coeff_at(j).get_mpq_t());
      Rat& slot = out[monomial_index(nv, sum)];
      mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp.get_mpq_t());
    }
  }
}

}  // namespace

int max_supported_order(int num_vars) {
  check_vars(num_vars);
  return num_vars == 2 ? kMaxOrder2 : kMaxOrder3;
}

std::size_t monomial_count(int num_vars, int order) {
  if (order < 0) return 0;
  const std::size_t o = static_cast<std::size_t>(order);
  if (num_vars == 2) return (o + 1) * (o + 2) / 2;
  return (o + 1) * (o + 2) * (o + 3) / 6;
}

std::size_t monomial_index(int num_vars, const Exponents& e) {
  const std::size_t d = static_cast<std::size_t>(total_degree(e));
  if (num_vars == 2) return d * (d + 1) / 2 + static_cast<std::size_t>(e[1]);
  const std::size_t s = static_cast<std::size_t>(e[1] + e[2]);
  return d * (d + 1) * (d + 2) / 6 + s * (s + 1) / 2 + static_cast<std::size_t>(e[2]);
}

const Exponents& monomial_at(int num_vars, std::size_t index) { return table(num_vars).at(index); }

MSeries::MSeries(int num_vars, int order) : nvars_(num_vars), order_(order), reliable_(order) {
  check_vars(num_vars);
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  if (order > max_supported_order(num_vars)) {
    throw std::invalid_argument("series order " + std::to_string(order) + " exceeds the supported maximum");
  }
  c_.resize(monomial_count(num_vars, order));
}

MSeries MSeries::constant(int num_vars, int order, const Rat& c) {
  MSeries s(num_vars, order);
  s.c_[0] = c;
  return s;
}

MSeries MSeries::variable(int num_vars, int order, int which) {
  if (which < 0 || which >= num_vars) throw VariableMismatch("variable index out of range");
  Exponents e{};
  e[static_cast<std::size_t>(which)] = 1;
  return monomial(num_vars, order, e);
}

MSeries MSeries::monomial(int num_vars, int order, const Exponents& e, const Rat& c) {
  MSeries s(num_vars, order);
  s.set_coeff(e, c);
  return s;
}

MSeries MSeries::from_terms(int num_vars, int order, std::span<const Term> terms) {
  MSeries s(num_vars, order);
  for (const auto& t : terms) {
    if (total_degree(t.exponents) <= order) s.c_[monomial_index(num_vars, t.exponents)] += t.coeff;
  }
  return s;
}

void MSeries::set_reliable(int r) {
  if (r < 0 || r > order_) throw std::invalid_argument("reliable order out of range");
  reliable_ = r;
}

Rat MSeries::coeff(const Exponents& e) const {
  for (int i = nvars_; i < kMaxVars; ++i)
    if (e[static_cast<std::size_t>(i)] != 0) throw VariableMismatch("exponent for a missing variable");
  if (total_degree(e) > order_) return Rat(0);
  return c_[monomial_index(nvars_, e)];
}

void MSeries::set_coeff(const Exponents& e, const Rat& c) {
  for (int i = 0; i < kMaxVars; ++i) {
    if (e[static_cast<std::size_t>(i)] < 0) throw std::invalid_argument("negative exponent");
    if (i >= nvars_ && e[static_cast<std::size_t>(i)] != 0) throw VariableMismatch("exponent for a missing variable");
  }
  if (total_degree(e) > order_) return;
  c_[monomial_index(nvars_, e)] = c;
}

std::vector<Term> MSeries::terms() const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) out.push_back({monomial_at(nvars_, i), c_[i]});
  std::stable_sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    const int da = total_degree(a.exponents), db = total_degree(b.exponents);
    if (da != db) return da < db;
    return a.exponents < b.exponents;
  });
  return out;
}

bool MSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return sgn(r) == 0; });
}

int MSeries::valuation() const {
  const auto& degs = degree_table(nvars_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return degs[i];
  return order_ + 1;
}

void MSeries::resize_to(int new_order) {
  order_ = new_order;
  c_.resize(monomial_count(nvars_, new_order));
  reliable_ = std::min(reliable_, order_);
}

MSeries MSeries::truncated(int new_order) const {
  if (new_order < 0) throw std::invalid_argument("negative truncation order");
  if (new_order > max_supported_order(nvars_)) throw std::invalid_argument("truncation order too large");
  MSeries s = *this;
  s.resize_to(new_order);
  return s;
}

MSeries MSeries::shifted(const Exponents& e) const {
  MSeries s(nvars_, order_);
  const int de = total_degree(e);
  const auto& exps = table(nvars_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    const Exponents& ei = exps[i];
    const Exponents sum{ei[0] + e[0], ei[1] + e[1], ei[2] + e[2]};
    if (total_degree(sum) > order_) break;
    s.c_[monomial_index(nvars_, sum)] = c_[i];
  }
  s.reliable_ = std::min(order_, reliable_ + de);
  return s;
}

MSeries MSeries::permuted(const std::array<int, kMaxVars>& perm) const {
  MSeries s(nvars_, order_);
  s.reliable_ = reliable_;
  const auto& exps = table(nvars_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Exponents out{};
    for (int k = 0; k < nvars_; ++k) {
      out[static_cast<std::size_t>(k)] = exps[i][static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])];
    }
    s.c_[monomial_index(nvars_, out)] = c_[i];
  }
  return s;
}

Rat MSeries::evaluate(std::span<const Rat> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw VariableMismatch("evaluation point has wrong arity");
  std::vector<std::vector<Rat>> pw(static_cast<std::size_t>(nvars_));
  for (int k = 0; k < nvars_; ++k) {
    auto& p = pw[static_cast<std::size_t>(k)];
    p.push_back(Rat(1));
    for (int d = 1; d <= order_; ++d) p.push_back(p.back() * point[static_cast<std::size_t>(k)]);
  }
  Rat total(0);
  const auto& exps = table(nvars_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Rat t = c_[i];
    for (int k = 0; k < nvars_; ++k) {
      t *= pw[static_cast<std::size_t>(k)][static_cast<std::size_t>(exps[i][static_cast<std::size_t>(k)])];
    }
    total += t;
  }
  return total;
}

MSeries& MSeries::operator+=(const MSeries& other) {
  same_vars(*this, other);
  const int rel = std::min(reliable_, other.reliable_);
  resize_to(std::min(order_, other.order_));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  reliable_ = std::min(rel, order_);
  return *this;
}

MSeries& MSeries::operator-=(const MSeries& other) {
  same_vars(*this, other);
  const int rel = std::min(reliable_, other.reliable_);
  resize_to(std::min(order_, other.order_));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
  reliable_ = std::min(rel, order_);
  return *this;
}

MSeries& MSeries::operator*=(const Rat& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

MSeries operator*(const MSeries& a, const MSeries& b) { return mul(a, b); }

MSeries add(const MSeries& f, const MSeries& g) { return f + g; }
MSeries sub(const MSeries& f, const MSeries& g) { return f - g; }

MSeries mul(const MSeries& f, const MSeries& g) {
  same_vars(f, g);
  const int order = std::min(f.order(), g.order());
  MSeries out(f.num_vars(), order);
  multiply_into(f, g, order, out.c_);
  out.reliable_ = std::min({f.reliable(), g.reliable(), order});
  return out;
}

MSeries mul_graded(const MSeries& f, const MSeries& g) {
  same_vars(f, g);
  const int vf = f.valuation(), vg = g.valuation();
  const int order = std::min({f.order() + vg, g.order() + vf, max_supported_order(f.num_vars())});
  MSeries out(f.num_vars(), order);
  multiply_into(f, g, order, out.c_);
  out.reliable_ = std::min({f.reliable() + vg, g.reliable() + vf, order});
  return out;
}

MSeries power(const MSeries& f, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  MSeries result = MSeries::constant(f.num_vars(), f.order(), Rat(1));
  MSeries base = f;
  for (; k != 0; k >>= 1) {
    if (k & 1) result = mul(result, base);
    if (k > 1) base = mul(base, base);
  }
  return result;
}

MSeries power_graded(const MSeries& f, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  if (k == 0) return MSeries::constant(f.num_vars(), max_supported_order(f.num_vars()), Rat(1));
  MSeries result = MSeries::constant(f.num_vars(), max_supported_order(f.num_vars()), Rat(1));
  MSeries base = f;
  for (; k != 0; k >>= 1) {
    if (k & 1) result = mul_graded(result, base);
    if (k > 1) base = mul_graded(base, base);
  }
  return result;
}

MSeries inv_unit(const MSeries& f) {
  const Rat c0 = f.constant_term();
  if (sgn(c0) == 0) throw NotAUnit("inverse of a series with zero constant term");
  const int n = f.order();
  MSeries g = MSeries::constant(f.num_vars(), 0, Rat(1) / c0);
  int p = 0;
  while (p < n) {
    const int q = std::min(2 * p + 1, n);
    const MSeries ft = f.truncated(q);
    const MSeries gt = g.truncated(q);
    MSeries corr = MSeries::constant(f.num_vars(), q, Rat(2)) - mul(ft, gt);
    g = mul(gt, corr);
    p = q;
  }
  g.set_reliable(std::min(f.reliable(), g.order()));
  return g;
}

MSeries sqrt_unit(const MSeries& f) {
  const Rat c0 = f.constant_term();
  if (sgn(c0) == 0) throw NotAUnit("square root of a series with zero constant term");
  const auto s0 = rat_sqrt(c0);
  if (!s0) throw NotASquare("constant term " + to_string(c0) + " is not a rational square");
  const int n = f.order();
  // Newton iteration on the inverse square root avoids nested inversions.
  MSeries r = MSeries::constant(f.num_vars(), 0, Rat(1) / *s0);
  int p = 0;
  while (p < n) {
    const int q = std::min(2 * p + 1, n);
    const MSeries ft = f.truncated(q);
    const MSeries rt = r.truncated(q);
    MSeries err = MSeries::constant(f.num_vars(), q, Rat(1)) - mul(ft, mul(rt, rt));
    r = rt + mul(rt, err) * Rat(1, 2);
    p = q;
  }
  MSeries s = mul(f, r);
  s.set_reliable(std::min(f.reliable(), s.order()));
  return s;
}

Valuation valuation_of(const MSeries& g) {
  const int nv = g.num_vars();
  const int lim = std::min(g.reliable(), g.order());
  Exponents m{};
  bool found = false;
  for (std::size_t i = 0; i < monomial_count(nv, lim); ++i) {
    if (sgn(g.coeff_at(i)) == 0) continue;
    const Exponents& e = monomial_at(nv, i);
    if (!found) {
      m = e;
      found = true;
    } else {
      for (int k = 0; k < kMaxVars; ++k) m[static_cast<std::size_t>(k)] = std::min(m[static_cast<std::size_t>(k)], e[static_cast<std::size_t>(k)]);
    }
  }
  if (!found) throw DivisibilityError("division by a series that vanishes on its reliable range");
  const int v = total_degree(m);
  MSeries u(nv, g.order() - v);
  for (std::size_t i = 0; i < g.stored(); ++i) {
    if (sgn(g.coeff_at(i)) == 0) continue;
    const Exponents& e = monomial_at(nv, i);
    if (!divides(m, e)) continue;
    u.set_coeff({e[0] - m[0], e[1] - m[1], e[2] - m[2]}, g.coeff_at(i));
  }
  u.set_reliable(std::min(g.reliable() - v, u.order()));
  if (sgn(u.constant_term()) == 0) {
    throw DivisibilityError("divisor is not a monomial times a unit");
  }
  return {m, std::move(u)};
}

MSeries exact_div(const MSeries& f, const MSeries& g) {
  same_vars(f, g);
  const int nv = f.num_vars();
  Valuation val = valuation_of(g);
  const Exponents& m = val.monomial;
  const int v = total_degree(m);
  const int lim = std::min(f.reliable(), g.reliable());
  if (lim - v < 0) throw DivisibilityError("not enough precision for the quotient");
  const MSeries inv = inv_unit(val.unit_part);
  const MSeries prod = mul_graded(f, inv);
  if (prod.order() < v) throw DivisibilityError("not enough precision for the quotient");
  MSeries q(nv, prod.order() - v);
  for (std::size_t i = 0; i < prod.stored(); ++i) {
    if (sgn(prod.coeff_at(i)) == 0) continue;
    const Exponents& e = monomial_at(nv, i);
    if (!divides(m, e)) {
      if (total_degree(e) <= lim) {
        throw DivisibilityError("dividend is not divisible by the divisor's monomial");
      }
      continue;
    }
    q.c_[monomial_index(nv, {e[0] - m[0], e[1] - m[1], e[2] - m[2]})] = prod.coeff_at(i);
  }
  q.reliable_ = std::min(lim - v, q.order_);
  return q;
}

MSeries solve_quadratic_branch(const MSeries& a2, const MSeries& a1, const MSeries& a0) {
  same_vars(a2, a1);
  same_vars(a1, a0);
  if (sgn(a1.constant_term()) == 0) throw NotAUnit("linear coefficient is not a unit");
  if (sgn(a0.constant_term()) != 0) throw NoSeriesRoot("constant coefficient must vanish for a root with mu(0) = 0");
  const int n = std::min({a2.order(), a1.order(), a0.order()});
  const MSeries inv1 = inv_unit(a1.truncated(n));
  const MSeries c0 = a0.truncated(n);
  const MSeries c2 = a2.truncated(n);
  MSeries mu(a0.num_vars(), n);
  for (int it = 0; it <= n; ++it) mu = -mul(c0 + mul(c2, mul(mu, mu)), inv1);
  mu.set_reliable(std::min({a2.reliable(), a1.reliable(), a0.reliable(), n}));
  return mu;
}

std::string SeriesDiff::describe() const {
  if (equal) return "equal";
  std::ostringstream os;
  os << "first difference at exponents (" << where[0] << "," << where[1] << "," << where[2] << "): " << to_string(lhs)
     << " vs " << to_string(rhs);
  return os.str();
}

SeriesDiff compare_upto(const MSeries& a, const MSeries& b, int degree) {
  same_vars(a, b);
  if (degree > std::min(a.order(), b.order())) {
    throw std::invalid_argument("comparison degree exceeds a truncation order");
  }
  SeriesDiff d;
  for (std::size_t i = 0; i < monomial_count(a.num_vars(), degree); ++i) {
    if (a.coeff_at(i) != b.coeff_at(i)) {
      d.equal = false;
      d.where = monomial_at(a.num_vars(), i);
      d.lhs = a.coeff_at(i);
      d.rhs = b.coeff_at(i);
      return d;
    }
  }
  return d;
}

int common_reliable(const MSeries& a, const MSeries& b) { return std::min(a.reliable(), b.reliable()); }

SeriesDiff compare_reliable(const MSeries& a, const MSeries& b) {
  return compare_upto(a, b, common_reliable(a, b));
}

std::string format_series(const MSeries& f) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(t.coeff);
    for (int k = 0; k < f.num_vars(); ++k) {
      const int e = t.exponents[static_cast<std::size_t>(k)];
      if (e == 0) continue;
      os << "*x" << k;
      if (e > 1) os << "^" << e;
    }
  }
  if (first) os << "0";
  os << " + O(" << f.order() + 1 << ")";
  return os.str();
}

}  // namespace bicolor
