#pragma once

// The non-abelian group of order 21,
//   G21 = < s, t | s^7 = 1, t^3 = 1, s t = t s^2 >,
// its conjugacy classes and its character table over Z[zeta_21].

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "minifold/cyclotomic.hpp"

namespace minifold::rep {

/// Normal form tau^t sigma^u.
struct G21Element {
  int u = 0;  // mod 7
  int t = 0;  // mod 3

  static G21Element sigma() { return {1, 0}; }
  static G21Element tau() { return {0, 1}; }

  G21Element inverse() const;
  G21Element pow(long e) const;
  int order() const;
  std::string to_string() const;

  friend G21Element operator*(const G21Element& a, const G21Element& b);
  friend auto operator<=>(const G21Element&, const G21Element&) = default;
};

/// All 21 elements, ordered by (t, u).
std::vector<G21Element> all_elements();

struct ConjugacyClass {
  G21Element representative;
  std::vector<G21Element> members;  // sorted
  std::size_t size() const { return members.size(); }
};

/// Orbits under conjugation, listed with representatives 1, s, s^3, t, t^2.
const std::vector<ConjugacyClass>& conjugacy_classes();

/// Index into conjugacy_classes() of the class containing g.
std::size_t class_index(const G21Element& g);

/// Number of conjugacy classes of the subgroup generated by `generators`.
std::size_t subgroup_class_count(const std::vector<G21Element>& generators);

/// Sorted tuples (d_1 <= ... <= d_k) of divisors of `order` with
/// sum d_i^2 = order and k = class_count.
std::vector<std::vector<int>> irrep_dimension_solutions(int order, int class_count);

/// The unique solution for G21: (1, 1, 1, 3, 3).
std::vector<int> irrep_dimensions();

/// True iff some irreducible has dimension 2.
bool has_two_dimensional_irrep();

/// A class function given by its values on 1, s, s^3, t, t^2.
struct Character {
  std::string name;
  std::array<CyclotomicElement, 5> values;

  Rational degree() const { return values[0].to_rational(); }
  const CyclotomicElement& at(const G21Element& g) const { return values[class_index(g)]; }

  friend Character operator+(const Character& a, const Character& b);
  friend Character operator*(const Character& a, const Character& b);
  friend bool operator==(const Character& a, const Character& b) { return a.values == b.values; }
};

/// 3 x 3 matrix over the cyclotomic ring.
using Matrix3 = std::array<std::array<CyclotomicElement, 3>, 3>;

/// V3: s -> diag(xi, xi^2, xi^4), t -> cyclic permutation e1 -> e2 -> e3 -> e1.
Matrix3 v3_matrix(const G21Element& g);

/// Rows C, V1, V1bar, V3, V3bar, computed as traces of the explicit
/// representations (inflation through G21 / <s> for the linear ones).
const std::vector<Character>& character_table();

/// The table as printed in the literature, built from the symbols 1, w, wbar, b, bbar.
std::vector<Character> reference_character_table();

/// (1/21) sum_C |C| chi(C) conj(psi(C)); throws if the result is not rational.
Rational inner_product(const Character& chi, const Character& psi);

/// Multiplicities of the five irreducibles in chi.
std::array<Rational, 5> decompose(const Character& chi);

enum class H0Verdict { IrreducibleV3, IrreducibleV3bar, SumOfOnes, Inconsistent };

std::string to_string(H0Verdict v);

/// Classifies a 3-dimensional representation from the trace of s: b or
/// bbar means irreducible, 3 means a sum of three one-dimensional
/// representations, anything else is not a character value of G21.
/// Throws std::invalid_argument if dim != 3.
H0Verdict classify_h0(int dim, const CyclotomicElement& trace_at_sigma);

/// True iff for every representation W of dimension <= max_dim the
/// multiplicity of `target` in W (x) W is zero. Representations of
/// dimension <= 2 are sums of linear characters, so this is the Schur-lemma
/// step used to kill a multiplication map.
bool tensor_square_avoids(int max_dim, const Character& target);

}  // namespace minifold::rep
