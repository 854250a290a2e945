#include <random>

#include "doctest.h"
#include "minifold/sonb.hpp"
#include "oracles.hpp"

using namespace minifold;
using namespace minifold::sonb;

namespace {

GramMatrix wilson_mod2() {
  const auto w = hilbert_wilson();
  return reduce_mod(gram_from_twists(w, standard_twists(w)), 2);
}

FormSpace standard_space(int n, long p) {
  const auto prof = hilbert_projective(n);
  const auto g = gram_from_twists(prof, standard_twists(prof));
  return FormSpace(p == 0 ? g.matrix() : reduce_mod(g, p).matrix());
}

}  // namespace

TEST_CASE("encode and decode") {
  CHECK(encode({1, 0, 0, 0, 0}, 2) == 1);
  CHECK(encode({0, 0, 0, 0, 1}, 2) == 16);
  CHECK(encode({2, 1}, 3) == 5);
  for (std::uint64_t c = 0; c < 243; ++c) CHECK(encode(decode(c, 3, 5), 3) == c);
  CHECK(standard_basis_vector(3, 1) == Vector{0, 1, 0});
}

TEST_CASE("pairing") {
  const FormSpace space(wilson_mod2().matrix());
  CHECK(space.pair({1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}) == 1);
  CHECK(space.pair({1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}) == 0);
  CHECK(space.pair({0, 0, 1, 0, 0}, {1, 0, 0, 0, 0}) == 1);
  CHECK(space.transposed().pair({1, 0, 0, 0, 0}, {0, 0, 1, 0, 0}) == 1);
  CHECK(space.vector_count() == 32u);
  const FormSpace z(ExactMatrix::from_rows(std::vector<std::vector<long>>{{1, 3}, {0, 1}}));
  CHECK(z.pair({1, -2}, {4, 5}) == 1 * 4 + 1 * 5 * 3 - 2 * 5);
  CHECK_FALSE(z.vector_count().has_value());
}

TEST_CASE("Wilson candidates, orbits and pairing matrix") {
  const auto g = wilson_mod2();
  const FormSpace space(g.matrix());
  const auto cands = enumerate_candidates(space);
  REQUIRE(cands.vectors.size() == 12);
  CHECK(cands.vectors == oracle::unit_vectors(g.matrix().to_long_rows(), 2));
  const auto s = serre_operator(g);
  const auto orbits = serre_orbits(cands, s.matrix());
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].size() == 8);
  CHECK(orbits[1].size() == 4);
  CHECK(orbits[0][0] == Vector{1, 0, 0, 0, 0});
  CHECK(orbits[1][0] == Vector{1, 0, 1, 0, 0});
  for (const auto& o : orbits)
    for (std::size_t i = 0; i + 1 < o.size(); ++i) CHECK(apply(s.matrix(), o[i]) == o[i + 1]);

  std::vector<Vector> c;
  for (const auto& o : orbits) c.insert(c.end(), o.begin(), o.end());
  const auto pm = pairing_matrix(space, c);
  const std::vector<std::string> expected{"111000011001", "111100001100", "011110000110", "001111000011",
                                          "000111101001", "000011111100", "100001110110", "110000110011",
                                          "011001101111", "001100111111", "100110011111", "110011001111"};
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) CHECK(pm[i][j] == expected[i][j] - '0');
  // (u, v) = (v, S u)
  for (const auto& u : c)
    for (const auto& v : c) CHECK(space.pair(u, v) == space.pair(v, apply(s.matrix(), u)));
}

TEST_CASE("Wilson search is exhausted with and without symmetry") {
  const auto g = wilson_mod2();
  const FormSpace space(g.matrix());
  const auto plain = search(space);
  CHECK_FALSE(plain.found());
  SearchOptions opts;
  opts.symmetry = serre_operator(g).matrix();
  const auto sym = search(space, opts);
  CHECK_FALSE(sym.found());
  CHECK(sym.nodes_explored <= plain.nodes_explored);
  CHECK_FALSE(oracle::brute_force_sonb(g.matrix().to_long_rows(), 2).has_value());
}

TEST_CASE("worker count does not change the outcome or node count") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    const long p = trial % 2 ? 3 : 2;
    const std::size_t n = 3 + rng() % 3;
    const auto r = trial % 3 ? oracle::random_decomposable_form(rng, n, p) : oracle::random_matrix(rng, n, p);
    const FormSpace space(ExactMatrix::from_rows(r, p));
    const auto one = search(space);
    for (unsigned w : {2u, 4u, 7u}) {
      SearchOptions opts;
      opts.workers = w;
      const auto many = search(space, opts);
      CHECK(many.found() == one.found());
      CHECK(many.nodes_explored == one.nodes_explored);
      if (one.found()) CHECK(many.basis() == one.basis());
    }
  }
}

TEST_CASE("P^n standard basis is found over every small prime and verified over Z") {
  for (int n = 1; n <= 6; ++n) {
    CHECK(verify_basis(standard_space(n, 0), standard_basis(n + 1)));
    for (long p : {2L, 3L, 5L, 7L}) {
      const auto res = search(standard_space(n, p));
      REQUIRE(res.found());
      CHECK(res.basis() == standard_basis(n + 1));
      CHECK(verify_basis(standard_space(n, p), res.basis()));
    }
  }
}

TEST_CASE("search agrees with the brute-force oracle on seeded forms") {
  std::mt19937_64 rng(1234);
  int found = 0;
  int exhausted = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const long p = trial % 2 ? 3 : 2;
    const std::size_t n = 1 + rng() % (p == 2 ? 5 : 4);
    const auto r = trial % 3 == 0 ? oracle::random_matrix(rng, n, p) : oracle::random_decomposable_form(rng, n, p);
    const FormSpace space(ExactMatrix::from_rows(r, p));
    const auto res = search(space);
    const auto expect = oracle::brute_force_sonb(r, p);
    REQUIRE(res.found() == expect.has_value());
    if (expect) {
      CHECK(res.basis() == *expect);
      ++found;
    } else {
      ++exhausted;
    }
  }
  CHECK(found > 0);
  CHECK(exhausted > 0);
}

TEST_CASE("symmetry reduction agrees with the plain search on Serre-invariant forms") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const long p = trial % 2 ? 3 : 5;
    const std::size_t n = 2 + rng() % 3;
    const auto a = ExactMatrix::from_rows(oracle::random_matrix(rng, n, p), p);
    if (determinant(a) == 0) continue;
    const FormSpace space(a);
    SearchOptions opts;
    opts.symmetry = SerreOperator(a).matrix();
    CHECK(search(space, opts).found() == search(space).found());
  }
}

TEST_CASE("singular forms have no semi-orthonormal basis") {
  const FormSpace space(ExactMatrix::from_rows(std::vector<std::vector<long>>{{1, 1}, {1, 1}}, 2));
  const auto res = search(space);
  CHECK_FALSE(res.found());
  CHECK(res.trace.singular_form);
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_candidates(standard_space(2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_candidates(standard_space(4, 7), 1000), std::length_error);
  CHECK_THROWS_AS(search(standard_space(2, 0)), std::invalid_argument);
}

TEST_CASE("verify_basis") {
  const auto space = standard_space(2, 0);
  CHECK(verify_basis(space, standard_basis(3)));
  CHECK_FALSE(verify_basis(space, {{1, 0, 0}, {0, 1, 0}}));
  CHECK_FALSE(verify_basis(space, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  // Over F_2 a semi-orthonormal list must still be independent.
  const FormSpace f2(ExactMatrix::identity(2, 2));
  CHECK(is_semi_orthonormal(f2, {{1, 0}, {0, 1}}));
  CHECK_FALSE(verify_basis(f2, {{1, 0}, {1, 0}}));
}

TEST_CASE("mutations preserve semi-orthonormality and invert") {
  for (int n = 1; n <= 4; ++n) {
    const auto space = standard_space(n, 0);
    std::vector<Vector> basis = standard_basis(n + 1);
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) {
      const auto m = mutate(basis, i, space);
      CHECK(verify_basis(space, m));
      CHECK(mutate_inverse(m, i, space) == basis);
      CHECK(mutate(mutate_inverse(basis, i, space), i, space) == basis);
    }
    // A chain of moves stays semi-orthonormal.
    for (std::size_t step = 0; step < 6; ++step) {
      basis = mutate(basis, step % static_cast<std::size_t>(n), space);
      CHECK(verify_basis(space, basis));
    }
  }
}

TEST_CASE("mutation over F_2 matches e_i + (e_i, e_i+1) e_i+1") {
  const auto space = standard_space(3, 2);
  const auto basis = standard_basis(4);
  const auto m = mutate(basis, 1, space);
  const long c = space.pair(basis[1], basis[2]);
  Vector expect = basis[1];
  for (std::size_t k = 0; k < 4; ++k) expect[k] = (expect[k] + c * basis[2][k]) % 2;
  CHECK(m[1] == basis[2]);
  CHECK(m[2] == expect);
  CHECK(verify_basis(space, m));
}

TEST_CASE("mutation argument checks") {
  const auto space = standard_space(2, 0);
  const auto basis = standard_basis(3);
  CHECK_THROWS_AS(mutate(basis, 2, space), std::invalid_argument);
  CHECK_THROWS_AS(mutate({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}, 0, space), std::invalid_argument);
  CHECK_THROWS_AS(mutate_inverse(basis, 5, space), std::invalid_argument);
}
