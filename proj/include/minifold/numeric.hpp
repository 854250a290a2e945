#pragma once

// Arbitrary-precision scalars shared by every module.
//
// Integer and Rational are the GMP C++ classes; mpq_class keeps itself in
// lowest terms with a positive denominator once canonicalize() has run, and
// every constructor in this library goes through rational() below.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace minifold {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rational(long num, long den = 1) { return rational(Integer(num), Integer(den)); }

// Parses "a" or "a/b" with optional sign.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_prime(long p);

// Least non-negative residue of q modulo p; the denominator must be a unit mod p.
long residue(const Rational& q, long p);

long mod_inverse(long a, long p);

inline long mod_normalize(long a, long p) {
  long r = a % p;
  return r < 0 ? r + p : r;
}

// Exact integer square root of a non-negative integer, or nullopt if n is
// not a perfect square.
std::optional<Integer> exact_sqrt(const Integer& n);

Integer factorial(unsigned n);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace minifold
