#pragma once

#include <complex>
#include <string>
#include <vector>

#include "minifold/numeric.hpp"

namespace minifold {

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(int n);

int euler_phi(int n);

/// An element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1),
/// reduced modulo Phi_n. Coefficients are rational so that the ring is
/// closed under exact division; elements of Z[zeta_n] simply have integer
/// coefficients.
///
/// Binary operations between different conductors promote both operands to
/// the lcm conductor via zeta_m = zeta_lcm^(lcm/m).
class CyclotomicElement {
 public:
  CyclotomicElement() : CyclotomicElement(1) {}
  explicit CyclotomicElement(int conductor);
  CyclotomicElement(int conductor, const Rational& value);

  /// sum_j coeffs[j] z^j for any length; reduced on construction.
  static CyclotomicElement from_powers(int conductor, const std::vector<Rational>& coeffs);

  int conductor() const { return n_; }
  /// Canonical coefficients, length phi(n).
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  Rational to_rational() const;

  /// Same element viewed in Q(zeta_m); m must be a multiple of the conductor.
  CyclotomicElement embed(int m) const;

  /// zeta -> zeta^k; k must be coprime to the conductor.
  CyclotomicElement galois(long k) const;
  CyclotomicElement conj() const { return galois(n_ - 1); }

  /// Product of all Galois conjugates, a rational number.
  Rational norm() const;
  /// Sum of all Galois conjugates, a rational number.
  Rational trace() const;

  /// Display-only numerical value with zeta = exp(2 pi i / n).
  std::complex<double> numeric() const;

  /// e.g. "z7^3 + z7^5 + z7^6"; "0" for zero.
  std::string to_string() const;

  CyclotomicElement& operator+=(const CyclotomicElement& o);
  CyclotomicElement& operator-=(const CyclotomicElement& o);
  CyclotomicElement& operator*=(const CyclotomicElement& o);
  CyclotomicElement operator-() const;

  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
  friend CyclotomicElement operator*(const Rational& q, CyclotomicElement a);
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

 private:
  int n_;
  std::vector<Rational> c_;
};

/// zeta_n^k reduced mod Phi_n; k is taken mod n.
CyclotomicElement root_of_unity(int n, long k);

/// num / den computed as num * N' / N(den), where N' is the product of the
/// non-identity conjugates of den. Throws std::domain_error if den = 0.
CyclotomicElement exact_divide(const CyclotomicElement& num, const CyclotomicElement& den);

/// b = z7 + z7^2 + z7^4, the Gauss period (-1 + sqrt(-7)) / 2.
CyclotomicElement gauss_period_b();

/// Parses sums such as "3", "b", "bbar", "-1 + 2*z7^3", "w", "wbar",
/// "z21^5". Symbols: b, bbar (conductor 7), w, wbar (cube roots of unity),
/// zN^k (k may be omitted).
CyclotomicElement parse_cyclotomic(const std::string& text);

}  // namespace minifold
