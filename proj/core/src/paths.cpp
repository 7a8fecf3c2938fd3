#include "bicolor/paths.hpp"

#include <algorithm>
#include <cstdlib>

namespace bicolor {

WeightLadder::WeightLadder(std::vector<MSeries> black, std::vector<MSeries> white, std::optional<MSeries> tail_black,
                           std::optional<MSeries> tail_white)
    : black_(std::move(black)),
      white_(std::move(white)),
      tail_black_(std::move(tail_black)),
      tail_white_(std::move(tail_white)) {
  if (black_.size() != white_.size()) throw std::invalid_argument("ladder colors have different heights");
  if (tail_black_.has_value() != tail_white_.has_value()) throw std::invalid_argument("ladder needs both tails or none");
  const MSeries* ref = nullptr;
  if (!black_.empty()) ref = &black_.front();
  else if (tail_black_) ref = &*tail_black_;
  else throw std::invalid_argument("empty ladder without tails");
  int order = ref->order();
  for (const auto& s : black_) order = std::min(order, s.order());
  for (const auto& s : white_) order = std::min(order, s.order());
  if (tail_black_) order = std::min({order, tail_black_->order(), tail_white_->order()});
  zero_ = MSeries(ref->num_vars(), order);
}

WeightLadder WeightLadder::constant(MSeries tail_black, MSeries tail_white) {
  WeightLadder l;
  const int order = std::min(tail_black.order(), tail_white.order());
  l.zero_ = MSeries(tail_black.num_vars(), order);
  l.tail_black_ = std::move(tail_black);
  l.tail_white_ = std::move(tail_white);
  l.constant_ = true;
  return l;
}

const MSeries& WeightLadder::tail(Color c) const {
  if (!tail_black_) throw std::out_of_range("ladder has no tails");
  return c == Color::Black ? *tail_black_ : *tail_white_;
}

const MSeries& WeightLadder::slice(Color c, int i) const {
  if (constant_) return tail(c);
  if (i <= 0) return zero_;
  if (i > height()) return tail(c);
  return c == Color::Black ? black_[static_cast<std::size_t>(i - 1)] : white_[static_cast<std::size_t>(i - 1)];
}

namespace {

void check_parity(int from, int to, int len) {
  if (len < 0) throw std::invalid_argument("negative path length");
  if (std::abs(from - to) % 2 != len % 2) throw ParityError("path length parity does not match the height difference");
}

// Runs the descending-weighted walk and returns the distribution after len steps.
std::map<int, MSeries> walk(Color start, int from, int len, const WeightLadder& ladder, int floor,
                            std::optional<int> target) {
  std::map<int, MSeries> cur;
  if (from < floor) return cur;
  cur.emplace(from, MSeries::constant(ladder.num_vars(), ladder.order(), Rat(1)));
  for (int s = 0; s < len; ++s) {
    const int remaining = len - s - 1;
    std::map<int, MSeries> next;
    auto admit = [&](int h) {
      if (h < floor) return false;
      return !target || std::abs(h - *target) <= remaining;
    };
    for (auto& [h, v] : cur) {
      if (admit(h + 1)) {
        auto it = next.find(h + 1);
        if (it == next.end()) next.emplace(h + 1, v);
        else it->second += v;
      }
      if (admit(h - 1) && !ladder.vanishes(h)) {
        MSeries term = mul(v, ladder.slice(color_at(start, from, h), h));
        auto it = next.find(h - 1);
        if (it == next.end()) next.emplace(h - 1, std::move(term));
        else it->second += term;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

MSeries z_plus(Color start, int from, int to, int len, const WeightLadder& ladder, int floor) {
  check_parity(from, to, len);
  auto dist = walk(start, from, len, ladder, floor, to);
  auto it = dist.find(to);
  if (it == dist.end()) return MSeries(ladder.num_vars(), ladder.order());
  return it->second;
}

MSeries z_strip(Color start, int i, int len, const WeightLadder& ladder) {
  if (len % 2 == 0) throw ParityError("strip paths have odd length");
  return z_plus(start, i, i - 1, len, ladder, 0);
}

MSeries z_free(Color start, int from, int to, int len, const WeightLadder& ladder) {
  return z_plus(start, from, to, len, ladder, std::min(from, to) - len);
}

MSeries l_zero(int len, const MSeries& B, const MSeries& W) {
  return z_free(Color::Black, 0, 0, len, WeightLadder::constant(B, W));
}

std::vector<MSeries> excursion_sums(Color start, int from, int m_max, const WeightLadder& ladder, int floor) {
  std::vector<MSeries> out;
  std::map<int, MSeries> cur;
  const MSeries zero(ladder.num_vars(), ladder.order());
  if (from < floor) return std::vector<MSeries>(static_cast<std::size_t>(m_max + 1), zero);
  cur.emplace(from, MSeries::constant(ladder.num_vars(), ladder.order(), Rat(1)));
  out.push_back(cur.at(from));
  const int len = 2 * m_max;
  for (int s = 0; s < len; ++s) {
    const int remaining = len - s - 1;
    std::map<int, MSeries> next;
    for (auto& [h, v] : cur) {
      if (h + 1 - from <= remaining) {
        auto it = next.find(h + 1);
        if (it == next.end()) next.emplace(h + 1, v);
        else it->second += v;
      }
      if (h - 1 >= floor && !ladder.vanishes(h)) {
        MSeries term = mul(v, ladder.slice(color_at(start, from, h), h));
        auto it = next.find(h - 1);
        if (it == next.end()) next.emplace(h - 1, std::move(term));
        else it->second += term;
      }
    }
    cur = std::move(next);
    if (s % 2 == 1) {
      auto it = cur.find(from);
      out.push_back(it == cur.end() ? zero : it->second);
    }
  }
  return out;
}

std::map<int, MSeries> endpoint_sums(Color start, int from, int len, const WeightLadder& ladder, int floor) {
  if (len < 0) throw std::invalid_argument("negative path length");
  return walk(start, from, len, ladder, floor, std::nullopt);
}

Rat rat_path(Color start, int from, int to, int len, std::optional<int> floor, const HatWeights& wt) {
  check_parity(from, to, len);
  const int lo = floor ? *floor : std::min(from, to) - len;
  if (from < lo || to < lo) return Rat(0);
  const int hi = std::max(from, to) + len;
  const std::size_t width = static_cast<std::size_t>(hi - lo + 1);
  std::vector<Rat> cur(width), next(width);
  cur[static_cast<std::size_t>(from - lo)] = 1;
  auto step_weight = [&](int lower) { return color_at(start, from, lower) == Color::White ? wt.b : wt.w; };
  for (int s = 0; s < len; ++s) {
    std::fill(next.begin(), next.end(), Rat(0));
    for (int h = lo; h <= hi; ++h) {
      const Rat& v = cur[static_cast<std::size_t>(h - lo)];
      if (sgn(v) == 0) continue;
      if (h + 1 <= hi) next[static_cast<std::size_t>(h + 1 - lo)] += v * step_weight(h);
      if (h - 1 >= lo) next[static_cast<std::size_t>(h - 1 - lo)] += v * step_weight(h - 1);
    }
    std::swap(cur, next);
  }
  return cur[static_cast<std::size_t>(to - lo)];
}

Rat l_hat(int k, int len, const HatWeights& wt) {
  const int drop = 2 * std::abs(k);
  if (drop > len) return Rat(0);
  return rat_path(Color::Black, 0, -drop, len, std::nullopt, wt);
}

ReflectionVerdict check_reflection_odd(int k, int l, int q, const HatWeights& wt) {
  if (k < 1 || l < 1 || q < 0) throw std::invalid_argument("reflection indices out of range");
  ReflectionVerdict v;
  v.lhs = rat_path(Color::White, 2 * k - 1, 2 * l - 1, 2 * q, 0, wt);
  v.rhs = l_hat(k - l, 2 * q, wt) - l_hat(k + l, 2 * q, wt);
  v.holds = v.lhs == v.rhs;
  return v;
}

ReflectionVerdict check_reflection_even(int k, int l, int q, const HatWeights& wt) {
  if (k < 0 || l < 0 || q < 0) throw std::invalid_argument("reflection indices out of range");
  if (sgn(wt.w) == 0) throw std::invalid_argument("even reflection needs w != 0");
  ReflectionVerdict v;
  v.lhs = rat_path(Color::Black, 2 * k, 2 * l, 2 * q, 0, wt);
  const Rat c = wt.b / wt.w;
  Rat rhs = l_hat(k - l, 2 * q, wt) - c * l_hat(k + l + 1, 2 * q, wt);
  Rat tail(0), sign(1);
  for (int m = 2; k + l + m <= q; ++m) {
    tail += l_hat(k + l + m, 2 * q, wt) * sign;
    sign *= -c;
  }
  rhs += (c * c - 1) * tail;
  v.rhs = rhs;
  v.holds = v.lhs == v.rhs;
  return v;
}

}  // namespace bicolor
