#include "minifold/lefschetz.hpp"

#include <algorithm>
#include <stdexcept>

namespace minifold::lefschetz {
namespace {

int mod7(long a) { return static_cast<int>(mod_normalize(a, kOrder)); }

ExponentPair sorted(ExponentPair p) {
  if (p.first > p.second) std::swap(p.first, p.second);
  return p;
}

CyclotomicElement xi(long k) { return root_of_unity(kOrder, k); }

}  // namespace

FixedPointDatum FixedPointDatum::from_pair(int a, int b) {
  if (mod7(a) == 0 || mod7(b) == 0)
    throw std::invalid_argument("fixed point exponents must be nonzero mod 7");
  FixedPointDatum d;
  ExponentPair p{mod7(a), mod7(b)};
  for (auto& pt : d.points_) {
    pt = p;
    p = {mod7(2 * p.first), mod7(2 * p.second)};
  }
  return d;
}

FixedPointDatum FixedPointDatum::normalized() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (sorted(points_[i]) < sorted(points_[best])) best = i;
  FixedPointDatum d;
  for (std::size_t i = 0; i < 3; ++i) d.points_[i] = sorted(points_[(best + i) % 3]);
  return d;
}

FixedPointDatum branch_datum(Branch branch) {
  return branch == Branch::Principal ? FixedPointDatum::from_pair(1, 3) : FixedPointDatum::from_pair(6, 4);
}

CyclotomicElement lefschetz_sum(const FixedPointDatum& d, const std::array<int, 3>& twist_exponents, long k) {
  CyclotomicElement total(kOrder);
  const CyclotomicElement one(kOrder, Rational(1));
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [a, b] = d.points()[i];
    const CyclotomicElement den = (one - xi(a)) * (one - xi(b));
    total += exact_divide(xi(static_cast<long>(twist_exponents[i]) * k), den);
  }
  return total;
}

std::vector<ExponentPair> solve_hlfp0() {
  const CyclotomicElement one(kOrder, Rational(1));
  std::vector<ExponentPair> out;
  for (int a = 1; a < kOrder; ++a)
    for (int b = a; b < kOrder; ++b)
      if (lefschetz_sum(FixedPointDatum::from_pair(a, b), {0, 0, 0}, 0) == one) out.emplace_back(a, b);
  return out;
}

std::array<int, 3> canonical_trace(const FixedPointDatum& d) {
  std::array<int, 3> e{};
  for (std::size_t i = 0; i < 3; ++i) e[i] = mod7(d.points()[i].first + d.points()[i].second);
  return e;
}

int TwistTraceTable::exponent_at(std::size_t point, long k) const {
  return mod7(static_cast<long>(exponents.at(point)) * mod7(k));
}

TwistTraceTable twist_traces(const FixedPointDatum& d) {
  TwistTraceTable t;
  const auto canon = canonical_trace(d);
  for (std::size_t i = 0; i < 3; ++i) t.exponents[i] = mod7(kInverseOfThree * canon[i]);
  return t;
}

CyclotomicElement h0_trace(const FixedPointDatum& d, long k) {
  return lefschetz_sum(d, twist_traces(d).exponents, k);
}

LinearSystemDeduction h0_O2_vanishing(long h0_O4, bool multiplication_map_zero) {
  if (h0_O4 < 0) throw std::invalid_argument("h0_O2_vanishing: h0(O(4)) must be non-negative");
  LinearSystemDeduction r;
  r.delta_upper_bound = (h0_O4 + 1) / 2;
  r.steps.push_back("image bound: delta >= 1 implies 2*delta - 1 <= dim Im <= h0(O(4)) = " +
                    std::to_string(h0_O4) + ", so delta <= " + std::to_string(r.delta_upper_bound));
  if (r.delta_upper_bound == 0) {
    r.delta_is_zero = true;
    r.steps.push_back("bound is 0: delta = 0");
    return r;
  }
  if (multiplication_map_zero) {
    r.delta_upper_bound = 0;
    r.delta_is_zero = true;
    r.steps.push_back("multiplication map is zero: delta >= 1 would give 1 <= 2*delta - 1 <= 0, so delta = 0");
  }
  return r;
}

}  // namespace minifold::lefschetz
