#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "minifold/numeric.hpp"

namespace minifold {

// Raised when a polynomial claimed to be integer-valued is not, or when an
// evaluation that must be integral is not.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A polynomial with rational coefficients that takes integer values at
/// every integer, e.g. a Hilbert polynomial k -> chi(O(k)).
///
/// Integrality is enforced at construction: the coordinates in the binomial
/// basis binom(x, k) are computed by forward differences and must all be
/// integers.
class IntValuedPolynomial {
 public:
  IntValuedPolynomial() = default;

  /// coeffs[j] is the coefficient of x^j. Trailing zeros are dropped.
  explicit IntValuedPolynomial(std::vector<Rational> coeffs);

  /// sum_k c[k] * binom(x, k)
  static IntValuedPolynomial from_binomial_basis(std::span<const Integer> c);

  /// scale * prod_r (x - r)
  static IntValuedPolynomial from_roots(const Rational& scale, std::span<const Integer> roots);

  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int j) const;
  Rational leading_coefficient() const;

  Integer operator()(const Integer& k) const;
  Integer operator()(long k) const { return (*this)(Integer(k)); }
  Rational evaluate(const Rational& x) const;

  /// c with P(x) = sum_k c[k] binom(x, k); length degree()+1.
  std::vector<Integer> binomial_coordinates() const;

  /// Q(x) = P(a*x + b); still integer-valued.
  IntValuedPolynomial compose_affine(long a, long b) const;

  std::string to_string(char var = 'x') const;

  friend bool operator==(const IntValuedPolynomial&, const IntValuedPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Exact value P(k); throws IntegralityError if the value is not an integer.
Integer eval_poly(const IntValuedPolynomial& p, const Integer& k);

/// Forward-difference test: true iff every binomial-basis coordinate of the
/// polynomial with the given power-basis coefficients is an integer.
bool is_integer_valued(std::span<const Rational> coeffs);

/// Parses a polynomial literal. Two syntaxes are accepted:
///   coefficient list  "[1, -3/2, 1/2]" or a bare constant "7"
///   factored form     "1/2*(x-1)*(x-2)", "-(k-1)^2*(k+3)/6"
/// The variable name may be any single letter.
IntValuedPolynomial parse_polynomial(const std::string& text);

}  // namespace minifold
