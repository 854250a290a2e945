#pragma once

// Euler-pairing Gram matrices built from Hilbert polynomials, their Serre
// operators, and the small counting identities (Chern numbers, equivariant
// and orbifold Hochschild dimensions) that sit next to them.

#include <string>
#include <vector>

#include "minifold/matrix.hpp"
#include "minifold/polynomial.hpp"

namespace minifold {

/// k -> chi(O(k)) for a distinguished line bundle O(1), with the derived
/// dimension n = deg P and degree n! * p_n.
struct HilbertProfile {
  std::string name;
  int dimension = 0;
  IntValuedPolynomial polynomial;
  Integer degree;
};

/// Derives dimension and degree from the polynomial. A nonzero constant is
/// the profile of a point. Throws if P is zero.
HilbertProfile make_profile(std::string name, IntValuedPolynomial p);

/// (-1)^n (k-1)(k-2)...(k-n) / n!, the Hilbert polynomial of a fake P^n
/// polarized so that the canonical class is O(n+1).
HilbertProfile hilbert_fake_pn(int n);

/// binom(k+n, n), the Hilbert polynomial of P^n with O(1) the hyperplane.
HilbertProfile hilbert_projective(int n);

/// 1 + 25/8 l(l+1)(3l^2+3l+2) in the anticanonical twist l; dimension 4, degree 225.
HilbertProfile hilbert_wilson();

/// Gram matrix of the Euler pairing on O(c_0), ..., O(c_r):
/// entry(i, j) = chi(O(c_i), O(c_j)) = P(c_j - c_i).
class GramMatrix {
 public:
  GramMatrix(HilbertProfile profile, std::vector<long> twists, ExactMatrix base);

  const ExactMatrix& matrix() const { return base_; }
  const HilbertProfile& profile() const { return profile_; }
  const std::vector<long>& twists() const { return twists_; }
  std::size_t size() const { return base_.size(); }
  long modulus() const { return base_.modulus(); }
  const Rational& entry(std::size_t i, std::size_t j) const { return base_(i, j); }

  /// True when reduced mod p and p divides the degree; semi-orthonormal
  /// bases need not transfer from Z to F_p then.
  bool modulus_divides_degree() const { return modulus_divides_degree_; }

 private:
  friend GramMatrix reduce_mod(const GramMatrix&, long);

  HilbertProfile profile_;
  std::vector<long> twists_;
  ExactMatrix base_;
  bool modulus_divides_degree_ = false;
};

/// Twists 0, 1, ..., n for a profile of dimension n.
std::vector<long> standard_twists(const HilbertProfile& profile);

GramMatrix gram_from_twists(const HilbertProfile& profile, const std::vector<long>& twists);

/// Throws std::invalid_argument unless p is prime.
GramMatrix reduce_mod(const GramMatrix& g, long p);

/// S = A^{-1} A^t. Construction verifies A S = A^t and S^t A S = A.
class SerreOperator {
 public:
  explicit SerreOperator(const ExactMatrix& form);

  const ExactMatrix& matrix() const { return s_; }
  const ExactMatrix& form() const { return form_; }

 private:
  ExactMatrix form_;
  ExactMatrix s_;
};

/// Throws SingularMatrixError when the Gram matrix is not invertible over
/// its field.
SerreOperator serre_operator(const GramMatrix& g);

/// Unit diagonal and entry(j, i) = 0 for all j > i.
bool numerically_exceptional(const ExactMatrix& m);
inline bool numerically_exceptional(const GramMatrix& g) { return numerically_exceptional(g.matrix()); }

/// c_1 c_{n-1}[P^n] = n(n+1)^2 / 2.
Integer chern_identity(int n);

/// Cyclic quotient singularity 1/order (a, b), occurring `count` times.
struct QuotientSingularity {
  int count = 1;
  int order = 1;
  int a = 0;
  int b = 0;

  std::string label() const;
};

/// Number of non-special characters contributed by one point of type
/// 1/order(a, b). Known for 1/3(1,2) (none) and 1/7(1,3) (three); throws
/// std::out_of_range for anything else.
int nonspecial_characters(const QuotientSingularity& s);

struct EquivariantRow {
  std::string group;
  int irrep_count = 0;
  std::vector<QuotientSingularity> singularities;
  int r_g = 0;
  int euler_z = 0;
  int kodaira = 0;
};

/// The four subgroups of G21 acting on a fake projective plane with
/// automorphism group G21: trivial, Z/3, Z/7, G21.
const std::vector<EquivariantRow>& equivariant_rows();

/// 3 * #IrrRep(G) == chi(Z_G) + r_G
bool equivariant_count_check(const EquivariantRow& row);

/// r_G recomputed from the singularity profile.
int r_g_from_singularities(const EquivariantRow& row);

/// Total orbifold cohomology dimension 3 * #classes, valid when G acts
/// trivially on H^*(S) and every g != 1 has exactly three fixed points.
int orbifold_hh_dimension(int conjugacy_class_count);

}  // namespace minifold
