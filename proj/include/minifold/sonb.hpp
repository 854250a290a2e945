#pragma once

// Semi-orthonormal bases of a bilinear form (u, v) = u^t A v.
//
// A basis e_1..e_n is semi-orthonormal when (e_i, e_i) = 1 and
// (e_j, e_i) = 0 for j > i, i.e. its Gram matrix is upper unitriangular.
// Over F_p the search below is exhaustive; over Z only verification and
// mutation are offered.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "minifold/eulerform.hpp"
#include "minifold/matrix.hpp"

namespace minifold::sonb {

/// Coordinates of a vector. Over F_p each entry lies in [0, p).
using Vector = std::vector<long>;

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

class FormSpace {
 public:
  /// Modulus is taken from the matrix (0 = integers).
  explicit FormSpace(const ExactMatrix& form);
  static FormSpace from_gram(const GramMatrix& g) { return FormSpace(g.matrix()); }

  std::size_t dimension() const { return rows_.size(); }
  long modulus() const { return modulus_; }
  const ExactMatrix& form() const { return form_; }

  /// u^t A v, reduced into [0, p) over F_p. Throws std::overflow_error over Z
  /// if the value does not fit in a long.
  long pair(const Vector& u, const Vector& v) const;

  /// The form (u, v) -> (v, u).
  FormSpace transposed() const { return FormSpace(form_.transpose()); }

  /// Total number of vectors p^n; nullopt over Z.
  std::optional<std::uint64_t> vector_count() const;

 private:
  ExactMatrix form_;
  long modulus_ = 0;
  std::vector<std::vector<long>> rows_;
};

/// Vectors are ordered by the integer sum_i x_i p^i, i.e. lexicographically
/// with the last coordinate most significant. The first standard basis
/// vector is the least nonzero vector.
std::uint64_t encode(const Vector& v, long p);
Vector decode(std::uint64_t code, long p, std::size_t dimension);

/// A x, reduced mod p when p > 0.
Vector apply(const ExactMatrix& a, const Vector& x);

Vector standard_basis_vector(std::size_t dimension, std::size_t i);
std::vector<Vector> standard_basis(std::size_t dimension);

struct CandidateSet {
  std::vector<Vector> vectors;  // every x with (x, x) = 1, in encode() order
};

/// Throws std::length_error when p^n exceeds the cap and
/// std::invalid_argument over Z.
CandidateSet enumerate_candidates(const FormSpace& space, std::uint64_t cap = kDefaultEnumerationCap);

/// Each orbit starts at its least member r and continues S r, S^2 r, ...
using Orbit = std::vector<Vector>;

/// Partition of the candidates into orbits of S, ordered by representative.
/// Throws std::logic_error if S maps a candidate outside the set.
std::vector<Orbit> serre_orbits(const CandidateSet& cands, const ExactMatrix& s);

/// Matrix of pairings (c_i, c_j) for an ordered list of vectors.
std::vector<std::vector<long>> pairing_matrix(const FormSpace& space, const std::vector<Vector>& vectors);

struct SearchOptions {
  /// Restrict the first basis vector to representatives of the orbits of a
  /// form-preserving operator (normally the Serre operator).
  std::optional<ExactMatrix> symmetry;
  unsigned workers = 1;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

struct SearchTrace {
  std::uint64_t candidates = 0;
  std::uint64_t pool_size_prunes = 0;
  std::uint64_t dependent_rejections = 0;
  std::uint64_t symmetry_skips = 0;
  bool singular_form = false;
};

struct Found {
  std::vector<Vector> basis;
};
struct Exhausted {};

struct SonbResult {
  std::variant<Found, Exhausted> outcome;
  std::uint64_t nodes_explored = 0;
  SearchTrace trace;

  bool found() const { return std::holds_alternative<Found>(outcome); }
  const std::vector<Vector>& basis() const { return std::get<Found>(outcome).basis; }
};

/// Depth-first search building e_1, e_2, ... left to right. Choosing e_k
/// intersects the remaining candidate pool with the hyperplane
/// {y : (y, e_k) = 0}. Returns the first basis in candidate order, or
/// Exhausted once the whole pruned tree has been visited. The outcome and
/// node count do not depend on `workers`.
SonbResult search(const FormSpace& space, const SearchOptions& options = {});

/// Pairing conditions only: (v_i, v_i) = 1 and (v_j, v_i) = 0 for j > i.
bool is_semi_orthonormal(const FormSpace& space, const std::vector<Vector>& vectors);

/// Pairing conditions, length = dimension, and full rank via an
/// independent determinant computation.
bool verify_basis(const FormSpace& space, const std::vector<Vector>& basis);

/// Replaces (e_i, e_{i+1}) by (e_{i+1}, e_i - (e_i, e_{i+1}) e_{i+1}).
/// `i` is zero-based, 0 <= i < size - 1. Throws std::invalid_argument if the
/// input is not semi-orthonormal or i is out of range.
std::vector<Vector> mutate(const std::vector<Vector>& basis, std::size_t i, const FormSpace& space);

/// Inverse of mutate at the same position:
/// (f_i, f_{i+1}) -> (f_{i+1} - (f_i, f_{i+1}) f_i, f_i).
std::vector<Vector> mutate_inverse(const std::vector<Vector>& basis, std::size_t i, const FormSpace& space);

}  // namespace minifold::sonb
