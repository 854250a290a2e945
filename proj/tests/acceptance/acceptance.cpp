// Acceptance suite: nine criteria, each with a wall-clock limit. Prints one
// line per criterion and exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "minifold/atlas.hpp"
#include "minifold/eulerform.hpp"
#include "minifold/lefschetz.hpp"
#include "minifold/reptheory.hpp"
#include "minifold/sonb.hpp"
#include "oracles.hpp"

using namespace minifold;

namespace {

// Accumulates failed expectations for one criterion.
struct Expect {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

using LongRows = std::vector<std::vector<long>>;

const LongRows kPrintedGram{{1, 1, 0, 0, 0}, {1, 1, 1, 0, 0}, {1, 1, 1, 1, 0}, {0, 1, 1, 1, 1}, {0, 0, 1, 1, 1}};
const LongRows kPrintedSerre{{1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 1}, {1, 0, 0, 0, 0}};
const std::vector<std::string> kPrintedPairing{
    "111000011001", "111100001100", "011110000110", "001111000011", "000111101001", "000011111100",
    "100001110110", "110000110011", "011001101111", "001100111111", "100110011111", "110011001111"};
const std::vector<std::array<const char*, 5>> kPrintedCharacters{{"1", "1", "1", "1", "1"},
                                                                 {"1", "1", "1", "w", "wbar"},
                                                                 {"1", "1", "1", "wbar", "w"},
                                                                 {"3", "b", "bbar", "0", "0"},
                                                                 {"3", "bbar", "b", "0", "0"}};

void determinant_identity(Expect& expect) {
  std::mt19937_64 rng(20240601);
  auto draw = [&](int degree) {
    std::vector<Integer> b;
    for (int k = 0; k <= degree; ++k) b.emplace_back(static_cast<long>(rng() % 19) - 9);
    if (b.back() == 0) b.back() = 1 + static_cast<long>(rng() % 9);
    return IntValuedPolynomial::from_binomial_basis(b);
  };
  auto gram = [](const IntValuedPolynomial& p, int n) {
    ExactMatrix m(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) m.set(i, j, Rational(p(j - i)));
    return m;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng() % 7);
    const auto p = draw(n);
    Rational lead = Rational(factorial(static_cast<unsigned>(n))) * p.leading_coefficient();
    Rational want = 1;
    for (int k = 0; k <= n; ++k) want *= lead;
    expect(determinant(gram(p, n)) == want, "full-degree case " + std::to_string(trial));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int d = static_cast<int>(rng() % n);
    expect(determinant(gram(draw(d), n)) == 0, "low-degree case " + std::to_string(trial));
  }
}

void wilson_no_go(Expect& expect) {
  const auto w = hilbert_wilson();
  const std::vector<long> values{1, 51, 376, 1426, 3876};
  for (long n = 0; n < 5; ++n) {
    expect(w.polynomial(n) == values[n], "P(" + std::to_string(n) + ")");
    expect(residue(Rational(w.polynomial(n)), 2) == (n < 2 ? 1 : 0), "P(n) mod 2");
  }
  const auto g = reduce_mod(gram_from_twists(w, standard_twists(w)), 2);
  expect(g.matrix() == ExactMatrix::from_rows(kPrintedGram, 2), "reduced Gram matrix");
  const auto s = serre_operator(g);
  expect(s.matrix() == ExactMatrix::from_rows(kPrintedSerre, 2), "Serre operator");
  expect(oracle::order_by_iteration(kPrintedSerre, 2, 64) == 8, "order of S");
  expect(matrix_order(s.matrix()) == 8, "matrix_order(S)");

  const sonb::FormSpace space(g.matrix());
  const auto cands = sonb::enumerate_candidates(space);
  expect(cands.vectors.size() == 12, "candidate count");
  expect(cands.vectors == oracle::unit_vectors(kPrintedGram, 2), "candidates match direct enumeration");
  const auto orbits = sonb::serre_orbits(cands, s.matrix());
  expect(orbits.size() == 2 && orbits[0].size() == 8 && orbits[1].size() == 4, "orbit sizes");
  if (orbits.size() == 2) {
    expect(orbits[0][0] == sonb::Vector{1, 0, 0, 0, 0}, "first orbit generator");
    expect(orbits[1][0] == sonb::Vector{1, 0, 1, 0, 0}, "second orbit generator");
    std::vector<sonb::Vector> ordered;
    for (const auto& o : orbits) ordered.insert(ordered.end(), o.begin(), o.end());
    bool same = ordered.size() == 12;
    for (std::size_t i = 0; same && i < 12; ++i)
      for (std::size_t j = 0; j < 12; ++j)
        same = same && oracle::pair_mod(kPrintedGram, ordered[i], ordered[j], 2) == kPrintedPairing[i][j] - '0';
    expect(same, "pairing matrix");
  }
  expect(!sonb::search(space).found(), "search exhausts");
  expect(!oracle::brute_force_sonb(kPrintedGram, 2).has_value(), "brute force exhausts");
}

void positive_controls(Expect& expect) {
  for (int n = 1; n <= 6; ++n) {
    const auto prof = hilbert_projective(n);
    const auto g = gram_from_twists(prof, standard_twists(prof));
    const auto e = sonb::standard_basis(static_cast<std::size_t>(n + 1));
    expect(sonb::verify_basis(sonb::FormSpace(g.matrix()), e), "P^" + std::to_string(n) + " over Z");
    for (long p : {2L, 3L, 5L, 7L}) {
      const sonb::FormSpace space(reduce_mod(g, p).matrix());
      const auto res = sonb::search(space);
      expect(res.found() && res.basis() == e,
             "P^" + std::to_string(n) + " over F_" + std::to_string(p));
    }
  }
  expect(numerically_exceptional(gram_from_twists(hilbert_fake_pn(2), {0, -1, -2})), "fake plane");
}

void oracle_equivalence(Expect& expect) {
  std::mt19937_64 rng(4242);
  int found = 0;
  for (long p : {2L, 3L}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      const auto rows = trial % 2 ? oracle::random_decomposable_form(rng, n, p) : oracle::random_matrix(rng, n, p);
      const auto res = sonb::search(sonb::FormSpace(ExactMatrix::from_rows(rows, p)));
      const auto want = oracle::brute_force_sonb(rows, p);
      const bool agree = res.found() == want.has_value() && (!want || res.basis() == *want);
      expect(agree, "p=" + std::to_string(p) + " trial " + std::to_string(trial));
      found += want ? 1 : 0;
    }
  }
  expect(found > 0 && found < 40, "sample covers both outcomes");
}

void lefschetz_checks(Expect& expect) {
  using namespace minifold::lefschetz;
  const auto sols = solve_hlfp0();
  std::vector<ExponentPair> orbit;
  for (const auto& start : {FixedPointDatum::from_pair(1, 3), FixedPointDatum::from_pair(4, 6)})
    for (const auto& [a, b] : start.points()) orbit.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(orbit.begin(), orbit.end());
  expect(sols.size() == 6 && sols == orbit, "HLFP0 solutions");
  const auto d = branch_datum(Branch::Principal);
  expect(canonical_trace(d) == std::array<int, 3>{4, 1, 2}, "canonical exponents");
  expect(twist_traces(d).exponents == std::array<int, 3>{6, 5, 3}, "twist exponents");
  expect(h0_trace(d, 0) == CyclotomicElement(7, Rational(1)), "trace at k=0");
  const auto bbar = root_of_unity(7, 3) + root_of_unity(7, 5) + root_of_unity(7, 6);
  expect(h0_trace(d, 4) == bbar, "trace at k=4");
  expect(h0_trace(branch_datum(Branch::Conjugate), 4) == bbar.conj(), "conjugate branch at k=4");
}

void representation_theory(Expect& expect) {
  using namespace minifold::rep;
  std::vector<std::size_t> sizes;
  for (const auto& c : conjugacy_classes()) sizes.push_back(c.size());
  expect(sizes == std::vector<std::size_t>{1, 3, 3, 7, 7}, "class sizes");
  expect(irrep_dimension_solutions(21, 5) == std::vector<std::vector<int>>{{1, 1, 1, 3, 3}}, "irrep dimensions");
  const auto& table = character_table();
  bool match = table.size() == 5;
  for (std::size_t r = 0; match && r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) match = match && table[r].values[c] == parse_cyclotomic(kPrintedCharacters[r][c]);
  expect(match, "character table");
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j)
      expect(inner_product(table[i], table[j]) == (i == j ? 1 : 0), "orthogonality");
  const auto verdict = classify_h0(3, parse_cyclotomic("bbar"));
  expect(verdict == H0Verdict::IrreducibleV3bar, "classify_h0(3, bbar)");
}

void equivariant_counting(Expect& expect) {
  using rep::G21Element;
  const std::vector<std::vector<G21Element>> generators{
      {}, {G21Element::tau()}, {G21Element::sigma()}, {G21Element::sigma(), G21Element::tau()}};
  const auto& rows = equivariant_rows();
  expect(rows.size() == 4, "four rows");
  for (std::size_t i = 0; i < rows.size() && i < generators.size(); ++i) {
    const auto& row = rows[i];
    const int r_g = r_g_from_singularities(row);
    expect(3 * row.irrep_count == row.euler_z + r_g, row.group + " count");
    expect(equivariant_count_check(row), row.group + " library check");
    const int classes = static_cast<int>(rep::subgroup_class_count(generators[i]));
    expect(classes == row.irrep_count, row.group + " class count");
    expect(orbifold_hh_dimension(classes) == 3 * row.irrep_count, row.group + " orbifold dimension");
  }
}

void atlas_checks(Expect& expect) {
  using namespace minifold::atlas;
  const auto records = ingest_file(MINIFOLD_TEST_ATLAS_CSV);
  expect(records.size() == 50, "record count");
  expect(2 * records.size() == 100, "surface count");
  const auto g21 = query_aut(records, "G21");
  expect(g21.records.size() == 3, "G21 records");
  std::vector<Integer> orders;
  for (const auto& r : g21.records) {
    expect(three_torsion_free(r), "three-torsion-free");
    orders.push_back(r.h1_order());
  }
  std::sort(orders.begin(), orders.end());
  expect(orders == std::vector<Integer>{8, 16, 64}, "H1 orders");
  int pairs = 0;
  for (const auto& r : records)
    for (const std::string g : {"Z/7", "G21"}) pairs += k_phantom_eligible(r, g) ? 1 : 0;
  expect(pairs == 4, "K-phantom pairs");
  std::ostringstream out;
  serialize(records, out);
  std::istringstream in(out.str());
  expect(ingest(in) == records, "CSV round-trip");
}

void deduction_chain(Expect& expect) {
  const auto bound = lefschetz::h0_O2_vanishing(3);
  expect(bound.delta_upper_bound == 2 && !bound.delta_is_zero, "bound delta <= 2");
  const auto chain = lefschetz::h0_O2_vanishing(3, true);
  expect(chain.delta_upper_bound == 0 && chain.delta_is_zero, "delta = 0");
  expect(chain.steps.size() == 2 && !chain.steps[0].empty() && !chain.steps[1].empty(), "both steps cited");
  expect(rep::tensor_square_avoids(2, rep::character_table()[4]), "Schur step");
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<void(Expect&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"determinant identity", 5.0, determinant_identity},
      {"Wilson no-go", 1.0, wilson_no_go},
      {"positive controls", 1.0, positive_controls},
      {"oracle equivalence", 60.0, oracle_equivalence},
      {"Lefschetz", 1.0, lefschetz_checks},
      {"representation theory", 2.0, representation_theory},
      {"equivariant counting", 0.1, equivariant_counting},
      {"atlas", 0.5, atlas_checks},
      {"deduction chain", 0.1, deduction_chain},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    Expect expect;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(expect);
    } catch (const std::exception& e) {
      expect.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) expect.failures.push_back("over time limit");
    const bool ok = expect.failures.empty();
    if (!ok) ++failed;
    std::printf("[%s] %zu %s (%.3f s, limit %.1f s)", ok ? "PASS" : "FAIL", i + 1, c.name, secs, c.limit_seconds);
    if (!ok) std::printf(": %s", expect.failures.front().c_str());
    std::printf("\n");
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
