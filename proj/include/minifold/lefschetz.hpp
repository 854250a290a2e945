#pragma once

// Holomorphic Lefschetz arithmetic for an automorphism sigma of order 7 on
// a surface with three isolated fixed points P_1, P_2, P_3, cyclically
// permuted by an element of order 3 so that the tangent exponents double
// from one point to the next.
//
// All exponents are residues mod 7; the exponent a stands for xi^a with
// xi = exp(2 pi i / 7).

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "minifold/cyclotomic.hpp"

namespace minifold::lefschetz {

inline constexpr int kOrder = 7;
inline constexpr int kInverseOfThree = 5;  // 3 * 5 = 15 = 1 mod 7

using ExponentPair = std::pair<int, int>;

/// Inverse tangent eigenvalue exponents (a_i, b_i) at the three fixed points,
/// with (a_{i+1}, b_{i+1}) = (2 a_i, 2 b_i) mod 7.
class FixedPointDatum {
 public:
  /// Starts the doubling chain at P_1 = (a, b). Throws std::invalid_argument
  /// if either exponent is 0 mod 7.
  static FixedPointDatum from_pair(int a, int b);

  const std::array<ExponentPair, 3>& points() const { return points_; }

  /// Same datum renumbered cyclically so that P_1 carries the
  /// lexicographically least sorted pair.
  FixedPointDatum normalized() const;

  friend bool operator==(const FixedPointDatum&, const FixedPointDatum&) = default;

 private:
  std::array<ExponentPair, 3> points_{};
};

enum class Branch { Principal, Conjugate };

/// Principal branch starts at (1, 3); the conjugate branch at (6, 4).
FixedPointDatum branch_datum(Branch branch);

/// sum_i xi^(k t_i) / ((1 - xi^a_i)(1 - xi^b_i)) for arbitrary twist exponents t.
CyclotomicElement lefschetz_sum(const FixedPointDatum& d, const std::array<int, 3>& twist_exponents, long k);

/// All unordered pairs {a <= b} in 1..6 for which the untwisted sum equals 1,
/// sorted.
std::vector<ExponentPair> solve_hlfp0();

/// Exponent of sigma on the canonical fibre at P_i: a_i + b_i mod 7.
std::array<int, 3> canonical_trace(const FixedPointDatum& d);

/// Trace exponents t_i of sigma on O(1)_{P_i}, assuming K = O(3):
/// t_i = 3^{-1} (a_i + b_i) mod 7. The trace on O(k)_{P_i} is xi^(k t_i).
struct TwistTraceTable {
  std::array<int, 3> exponents{};

  int exponent_at(std::size_t point, long k) const;
};

TwistTraceTable twist_traces(const FixedPointDatum& d);

/// Alternating trace sum_p (-1)^p Tr(sigma | H^p(O(k))) from the fixed
/// point formula; the H^0 trace whenever higher cohomology vanishes.
CyclotomicElement h0_trace(const FixedPointDatum& d, long k);

/// Bound on delta = h^0(O(2)) from multiplication
/// H^0(O(2)) x H^0(O(2)) -> H^0(O(4)), whose image has dimension at least
/// 2 delta - 1 whenever delta >= 1.
struct LinearSystemDeduction {
  long delta_upper_bound = 0;
  bool delta_is_zero = false;
  std::vector<std::string> steps;
};

/// `multiplication_map_zero` records that the multiplication map is known
/// to vanish (e.g. by Schur's lemma); the image bound then forces delta = 0.
/// Throws std::invalid_argument if h0_O4 < 0.
LinearSystemDeduction h0_O2_vanishing(long h0_O4, bool multiplication_map_zero = false);

}  // namespace minifold::lefschetz
