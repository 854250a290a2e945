#include <set>

#include "doctest.h"
#include "minifold/lefschetz.hpp"
#include "oracles.hpp"

using namespace minifold;
using namespace minifold::lefschetz;

namespace {

// The fixed point sum evaluated in floating point.
std::complex<long double> numeric_sum(const FixedPointDatum& d, const std::array<int, 3>& t, long k) {
  std::complex<long double> total = 0;
  const std::complex<long double> one = 1;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [a, b] = d.points()[i];
    total += oracle::root(7, t[i] * k) / ((one - oracle::root(7, a)) * (one - oracle::root(7, b)));
  }
  return total;
}

std::complex<long double> num(const CyclotomicElement& x) {
  return oracle::evaluate(x.conductor(), x.coefficients());
}

}  // namespace

TEST_CASE("fixed point data follow the doubling chain") {
  const auto d = FixedPointDatum::from_pair(1, 3);
  CHECK(d.points()[0] == ExponentPair{1, 3});
  CHECK(d.points()[1] == ExponentPair{2, 6});
  CHECK(d.points()[2] == ExponentPair{4, 5});
  CHECK(FixedPointDatum::from_pair(8, -4) == FixedPointDatum::from_pair(1, 3));
  CHECK_THROWS_AS(FixedPointDatum::from_pair(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(FixedPointDatum::from_pair(2, 14), std::invalid_argument);
  const auto rotated = FixedPointDatum::from_pair(4, 5).normalized();
  CHECK(rotated.points()[0] == ExponentPair{1, 3});
  CHECK(branch_datum(Branch::Conjugate).points()[0] == ExponentPair{6, 4});
}

TEST_CASE("solve_hlfp0 matches a floating-point scan") {
  const auto sols = solve_hlfp0();
  const std::vector<ExponentPair> expected{{1, 3}, {1, 5}, {2, 3}, {2, 6}, {4, 5}, {4, 6}};
  CHECK(sols == expected);
  std::vector<ExponentPair> scan;
  for (int a = 1; a < 7; ++a)
    for (int b = a; b < 7; ++b)
      if (std::abs(numeric_sum(FixedPointDatum::from_pair(a, b), {0, 0, 0}, 0) - 1.0L) < 1e-9L) scan.emplace_back(a, b);
  CHECK(scan == sols);
  // The solutions are the two doubling orbits of {1,3} and {4,6}.
  std::set<ExponentPair> orbits;
  for (const auto& start : {FixedPointDatum::from_pair(1, 3), FixedPointDatum::from_pair(4, 6)})
    for (const auto& [a, b] : start.points()) orbits.insert({std::min(a, b), std::max(a, b)});
  CHECK(std::set<ExponentPair>(sols.begin(), sols.end()) == orbits);
}

TEST_CASE("canonical and twist exponents") {
  const auto d = branch_datum(Branch::Principal);
  CHECK(canonical_trace(d) == std::array<int, 3>{4, 1, 2});
  const auto t = twist_traces(d);
  CHECK(t.exponents == std::array<int, 3>{6, 5, 3});
  for (std::size_t i = 0; i < 3; ++i) CHECK((3 * t.exponents[i]) % 7 == canonical_trace(d)[i]);
  CHECK(t.exponent_at(0, 2) == 5);
  CHECK(t.exponent_at(2, -1) == 4);
}

TEST_CASE("h0 traces") {
  const auto d = branch_datum(Branch::Principal);
  CHECK(h0_trace(d, 0) == CyclotomicElement(7, Rational(1)));
  const auto bbar = root_of_unity(7, 3) + root_of_unity(7, 5) + root_of_unity(7, 6);
  CHECK(h0_trace(d, 4) == bbar);
  CHECK(h0_trace(branch_datum(Branch::Conjugate), 4) == gauss_period_b());
  const auto t = twist_traces(d).exponents;
  for (long k = -7; k <= 14; ++k) {
    const auto exact = h0_trace(d, k);
    CHECK(oracle::close(num(exact), numeric_sum(d, t, k), 1e-9L));
    for (const auto& c : exact.coefficients()) CHECK(is_integer(c));
    CHECK(h0_trace(d, k + 7) == exact);
  }
}

TEST_CASE("lefschetz_sum with arbitrary twists") {
  const auto d = FixedPointDatum::from_pair(2, 3);
  for (int a = 0; a < 7; ++a)
    for (long k = 0; k < 3; ++k) {
      const std::array<int, 3> t{a, (2 * a) % 7, (3 * a) % 7};
      CHECK(oracle::close(num(lefschetz_sum(d, t, k)), numeric_sum(d, t, k), 1e-9L));
    }
}

TEST_CASE("h0(O(2)) deduction") {
  const auto bound = h0_O2_vanishing(3);
  CHECK(bound.delta_upper_bound == 2);
  CHECK_FALSE(bound.delta_is_zero);
  CHECK(bound.steps.size() == 1);
  const auto chain = h0_O2_vanishing(3, true);
  CHECK(chain.delta_upper_bound == 0);
  CHECK(chain.delta_is_zero);
  CHECK(chain.steps.size() == 2);
  CHECK(h0_O2_vanishing(0).delta_is_zero);
  CHECK(h0_O2_vanishing(6).delta_upper_bound == 3);
  CHECK_THROWS_AS(h0_O2_vanishing(-1), std::invalid_argument);
}
