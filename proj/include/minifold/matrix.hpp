#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minifold/numeric.hpp"

namespace minifold {

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Square matrix over Q (modulus 0) or over F_p (modulus p prime).
///
/// Entries are stored as Rational in both cases; over F_p every entry is an
/// integer in [0, p).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n, long modulus = 0);

  static ExactMatrix identity(std::size_t n, long modulus = 0);
  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows, long modulus = 0);
  static ExactMatrix from_rows(const std::vector<std::vector<long>>& rows, long modulus = 0);

  std::size_t size() const { return n_; }
  long modulus() const { return modulus_; }

  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, const Rational& value);

  bool is_integral() const;
  bool is_identity() const;
  bool is_symmetric() const;

  ExactMatrix transpose() const;

  /// Entrywise residues mod p. Denominators must be units mod p.
  ExactMatrix reduced_mod(long p) const;

  /// Throws SingularMatrixError.
  ExactMatrix inverse() const;

  ExactMatrix power(unsigned long e) const;

  std::vector<std::vector<long>> to_long_rows() const;
  std::string to_string() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.n_ == b.n_ && a.modulus_ == b.modulus_ && a.a_ == b.a_;
  }

 private:
  Rational normalize(const Rational& v) const;

  std::size_t n_ = 0;
  long modulus_ = 0;
  std::vector<Rational> a_;
};

/// Exact determinant. Integer matrices use Bareiss fraction-free
/// elimination, other rational matrices use pivoted elimination over Q, and
/// F_p matrices use Gaussian elimination mod p (result in [0, p)).
Rational determinant(const ExactMatrix& m);

/// Integer-only Bareiss elimination; the input must be integral.
Integer bareiss_determinant(const ExactMatrix& m);

/// 2 * p^n for an n x n matrix over F_p; 1024 over Q.
long default_order_bound(const ExactMatrix& m);

/// Smallest k >= 1 with M^k = I, or nullopt if none <= bound.
/// Throws SingularMatrixError if M is not invertible.
std::optional<long> matrix_order(const ExactMatrix& m, std::optional<long> bound = std::nullopt);

/// For a full-rank integer Gram matrix: sqrt(|det G|) when that is an
/// integer, otherwise nullopt. Throws SingularMatrixError on det 0.
std::optional<Integer> lattice_index_squared(const ExactMatrix& gram);

}  // namespace minifold
