#pragma once

// Independent reference implementations used only by the tests. They are
// deliberately naive: no elimination, no pruning, no reduction tricks.

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "minifold/numeric.hpp"

namespace oracle {

using minifold::Integer;
using minifold::Rational;
using Rows = std::vector<std::vector<Rational>>;
using LongRows = std::vector<std::vector<long>>;

/// Laplace expansion along the first row.
Rational cofactor_determinant(const Rows& m);

/// Determinant over F_p by Laplace expansion on residues.
long cofactor_determinant_mod(const LongRows& m, long p);

/// sum_j c_j x^j by Horner evaluation.
Rational horner(const std::vector<Rational>& coeffs, long x);

/// Smallest k in [1, bound] with M^k = I over F_p, by repeated multiplication.
std::optional<long> order_by_iteration(const LongRows& m, long p, long bound);

LongRows multiply_mod(const LongRows& a, const LongRows& b, long p);

/// u^t A v mod p.
long pair_mod(const LongRows& a, const std::vector<long>& u, const std::vector<long>& v, long p);

/// All x in F_p^n with (x, x) = 1, ordered by sum x_i p^i.
std::vector<std::vector<long>> unit_vectors(const LongRows& a, long p);

/// Plain backtracking over ordered tuples of unit vectors (indices taken in
/// increasing candidate order at each position, repetition allowed), keeping
/// only prefixes with (v_j, v_i) = 0 for j > i, and accepting a full tuple
/// iff it has rank n. Returns the first accepted tuple.
std::optional<std::vector<std::vector<long>>> brute_force_sonb(const LongRows& a, long p);

/// Rank over F_p.
std::size_t rank_mod(LongRows rows, long p);

/// exp(2 pi i k / n)
std::complex<long double> root(long n, long k);

/// Evaluates sum_j c_j zeta_n^j numerically.
std::complex<long double> evaluate(long n, const std::vector<Rational>& coeffs);

bool close(std::complex<long double> a, std::complex<long double> b, long double tol = 1e-12L);

/// Random n x n matrix over F_p.
LongRows random_matrix(std::mt19937_64& rng, std::size_t n, long p);

/// B^t U B with U upper unitriangular and B invertible; always admits a
/// semi-orthonormal basis.
LongRows random_decomposable_form(std::mt19937_64& rng, std::size_t n, long p);

}  // namespace oracle
