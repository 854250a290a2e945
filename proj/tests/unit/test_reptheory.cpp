#include <map>
#include <set>

#include "doctest.h"
#include "minifold/reptheory.hpp"
#include "oracles.hpp"

using namespace minifold;
using namespace minifold::rep;

namespace {

std::complex<long double> num(const CyclotomicElement& x) {
  return oracle::evaluate(x.conductor(), x.coefficients());
}

CyclotomicElement trace(const Matrix3& m) { return m[0][0] + m[1][1] + m[2][2]; }

Matrix3 mul(const Matrix3& a, const Matrix3& b) {
  Matrix3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      c[i][j] = CyclotomicElement(7);
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// Character values computed independently: the linear characters factor
// through t -> w, the 3-dimensional ones are induced from s -> xi^e.
std::array<std::complex<long double>, 5> numeric_row(std::size_t row) {
  const std::array<G21Element, 5> reps{G21Element{0, 0}, G21Element{1, 0}, G21Element{3, 0}, G21Element{0, 1},
                                       G21Element{0, 2}};
  std::array<std::complex<long double>, 5> out{};
  for (std::size_t c = 0; c < 5; ++c) {
    const auto g = reps[c];
    if (row < 3) {
      out[c] = oracle::root(3, static_cast<long>(row) * g.t);
    } else {
      const long e = row == 3 ? 1 : 3;
      out[c] = 0;
      if (g.t == 0)
        for (long k : {1L, 2L, 4L}) out[c] += oracle::root(7, e * k * g.u);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("group axioms") {
  const auto all = all_elements();
  REQUIRE(all.size() == 21);
  CHECK(std::set<G21Element>(all.begin(), all.end()).size() == 21);
  const auto s = G21Element::sigma();
  const auto t = G21Element::tau();
  CHECK(s.pow(7) == G21Element{});
  CHECK(t.pow(3) == G21Element{});
  CHECK(s * t == t * s.pow(2));
  for (const auto& a : all) {
    CHECK(a * a.inverse() == G21Element{});
    for (const auto& b : all)
      for (const auto& c : {s, t, s * t}) CHECK((a * b) * c == a * (b * c));
  }
  std::map<int, int> orders;
  for (const auto& g : all) ++orders[g.order()];
  CHECK(orders == std::map<int, int>{{1, 1}, {3, 14}, {7, 6}});
  CHECK(s.pow(-1) == s.pow(6));
}

TEST_CASE("conjugacy classes") {
  const auto& cls = conjugacy_classes();
  REQUIRE(cls.size() == 5);
  std::vector<std::size_t> sizes;
  for (const auto& c : cls) sizes.push_back(c.size());
  CHECK(sizes == std::vector<std::size_t>{1, 3, 3, 7, 7});
  CHECK(cls[1].representative == G21Element::sigma());
  CHECK(cls[2].representative == G21Element::sigma().pow(3));
  CHECK(cls[3].representative == G21Element::tau());
  CHECK(cls[4].representative == G21Element::tau().pow(2));
  // Every class is closed under conjugation and the classes partition the group.
  std::size_t total = 0;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    total += cls[i].size();
    for (const auto& m : cls[i].members)
      for (const auto& g : all_elements()) CHECK(class_index(g * m * g.inverse()) == i);
  }
  CHECK(total == 21);
}

TEST_CASE("subgroup class counts") {
  const auto s = G21Element::sigma();
  const auto t = G21Element::tau();
  CHECK(subgroup_class_count({}) == 1);
  CHECK(subgroup_class_count({t}) == 3);
  CHECK(subgroup_class_count({s}) == 7);
  CHECK(subgroup_class_count({s, t}) == 5);
  CHECK(subgroup_class_count({s * t}) == 3);
}

TEST_CASE("irreducible dimensions") {
  CHECK(irrep_dimension_solutions(21, 5) == std::vector<std::vector<int>>{{1, 1, 1, 3, 3}});
  CHECK(irrep_dimensions() == std::vector<int>{1, 1, 1, 3, 3});
  CHECK_FALSE(has_two_dimensional_irrep());
  CHECK(irrep_dimension_solutions(6, 3) == std::vector<std::vector<int>>{{1, 1, 2}});
  CHECK(irrep_dimension_solutions(8, 5) == std::vector<std::vector<int>>{{1, 1, 1, 1, 2}});
}

TEST_CASE("V3 is a homomorphism") {
  const auto all = all_elements();
  for (const auto& a : all)
    for (const auto& b : all) CHECK(mul(v3_matrix(a), v3_matrix(b)) == v3_matrix(a * b));
  CHECK(trace(v3_matrix(G21Element::sigma())) == gauss_period_b());
}

TEST_CASE("character table") {
  const auto& table = character_table();
  REQUIRE(table.size() == 5);
  CHECK(table == reference_character_table());
  for (std::size_t r = 0; r < 5; ++r) {
    const auto want = numeric_row(r);
    for (std::size_t c = 0; c < 5; ++c) CHECK(oracle::close(num(table[r].values[c]), want[c], 1e-9L));
  }
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(inner_product(table[i], table[j]) == (i == j ? 1 : 0));
  // Column orthogonality.
  const auto& cls = conjugacy_classes();
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) {
      CyclotomicElement sum(21);
      for (const auto& row : table) sum += row.values[a] * row.values[b].conj();
      const Rational want = a == b ? Rational(21) / static_cast<long>(cls[a].size()) : Rational(0);
      CHECK(sum == CyclotomicElement(21, want));
    }
}

TEST_CASE("decomposition of tensor products") {
  const auto& t = character_table();
  CHECK(decompose(t[3] * t[3]) == std::array<Rational, 5>{0, 0, 0, 1, 2});
  CHECK(decompose(t[3] * t[4]) == std::array<Rational, 5>{1, 1, 1, 1, 1});
  CHECK(decompose(t[1] * t[2]) == std::array<Rational, 5>{1, 0, 0, 0, 0});
  CHECK(decompose(t[0] + t[3]) == std::array<Rational, 5>{1, 0, 0, 1, 0});
  CHECK((t[3] * t[3]).degree() == 9);
}

TEST_CASE("classify_h0") {
  const auto b = gauss_period_b();
  CHECK(classify_h0(3, b) == H0Verdict::IrreducibleV3);
  CHECK(classify_h0(3, b.conj()) == H0Verdict::IrreducibleV3bar);
  CHECK(classify_h0(3, CyclotomicElement(7, Rational(3))) == H0Verdict::SumOfOnes);
  CHECK(classify_h0(3, CyclotomicElement(7, Rational(1))) == H0Verdict::Inconsistent);
  CHECK_THROWS_AS(classify_h0(2, b), std::invalid_argument);
  CHECK(to_string(H0Verdict::IrreducibleV3bar).find("V3bar") != std::string::npos);
}

TEST_CASE("tensor squares of small representations") {
  const auto& t = character_table();
  CHECK(tensor_square_avoids(2, t[3]));
  CHECK(tensor_square_avoids(2, t[4]));
  CHECK_FALSE(tensor_square_avoids(3, t[4]));
  CHECK_FALSE(tensor_square_avoids(2, t[0]));
}
