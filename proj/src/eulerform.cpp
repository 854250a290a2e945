#include "minifold/eulerform.hpp"

#include <stdexcept>

namespace minifold {

HilbertProfile make_profile(std::string name, IntValuedPolynomial p) {
  const int n = p.degree();
  if (n < 0) throw std::invalid_argument("Hilbert profile '" + name + "' needs a nonzero polynomial");
  const Rational deg = Rational(factorial(static_cast<unsigned>(n))) * p.leading_coefficient();
  // n! p_n is the n-th forward difference, so integrality is inherited.
  if (!is_integer(deg)) throw IntegralityError("n! * p_n is not an integer for '" + name + "'");
  return HilbertProfile{std::move(name), n, std::move(p), deg.get_num()};
}

HilbertProfile hilbert_fake_pn(int n) {
  if (n < 1) throw std::invalid_argument("hilbert_fake_pn: n must be >= 1");
  std::vector<Integer> roots;
  for (int k = 1; k <= n; ++k) roots.emplace_back(k);
  const Rational scale = rational(Integer(n % 2 == 0 ? 1 : -1), factorial(static_cast<unsigned>(n)));
  return make_profile("fake-pn:" + std::to_string(n), IntValuedPolynomial::from_roots(scale, roots));
}

HilbertProfile hilbert_projective(int n) {
  if (n < 1) throw std::invalid_argument("hilbert_projective: n must be >= 1");
  std::vector<Integer> roots;
  for (int k = 1; k <= n; ++k) roots.emplace_back(-k);
  const Rational scale = rational(Integer(1), factorial(static_cast<unsigned>(n)));
  return make_profile("pn:" + std::to_string(n), IntValuedPolynomial::from_roots(scale, roots));
}

HilbertProfile hilbert_wilson() {
  return make_profile("wilson", parse_polynomial("1 + 25/8*l*(l+1)*(3*l^2 + 3*l + 2)"));
}

GramMatrix::GramMatrix(HilbertProfile profile, std::vector<long> twists, ExactMatrix base)
    : profile_(std::move(profile)), twists_(std::move(twists)), base_(std::move(base)) {
  if (twists_.size() != base_.size()) throw std::invalid_argument("GramMatrix: twist count != matrix size");
}

std::vector<long> standard_twists(const HilbertProfile& profile) {
  std::vector<long> t;
  for (long i = 0; i <= profile.dimension; ++i) t.push_back(i);
  return t;
}

GramMatrix gram_from_twists(const HilbertProfile& profile, const std::vector<long>& twists) {
  if (twists.empty()) throw std::invalid_argument("gram_from_twists: empty twist list");
  ExactMatrix m(twists.size());
  for (std::size_t i = 0; i < twists.size(); ++i)
    for (std::size_t j = 0; j < twists.size(); ++j)
      m.set(i, j, Rational(profile.polynomial(twists[j] - twists[i])));
  return GramMatrix(profile, twists, std::move(m));
}

GramMatrix reduce_mod(const GramMatrix& g, long p) {
  if (!is_prime(p)) throw std::invalid_argument("reduce_mod: " + std::to_string(p) + " is not prime");
  if (g.modulus() != 0 && g.modulus() != p)
    throw std::invalid_argument("reduce_mod: matrix already reduced modulo a different prime");
  GramMatrix r(g.profile(), g.twists(), g.matrix().reduced_mod(p));
  r.modulus_divides_degree_ = g.profile().degree % p == 0;
  return r;
}

SerreOperator::SerreOperator(const ExactMatrix& form) : form_(form), s_(form.inverse() * form.transpose()) {
  if (!(form_ * s_ == form_.transpose()))
    throw std::logic_error("Serre operator: A S != A^t");
  if (!(s_.transpose() * form_ * s_ == form_))
    throw std::logic_error("Serre operator: S^t A S != A");
}

SerreOperator serre_operator(const GramMatrix& g) { return SerreOperator(g.matrix()); }

bool numerically_exceptional(const ExactMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m(i, i) != 1) return false;
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m(j, i) != 0) return false;
  }
  return true;
}

Integer chern_identity(int n) {
  if (n < 1) throw std::invalid_argument("chern_identity: n must be >= 1");
  const Integer nn(n);
  return nn * (nn + 1) * (nn + 1) / 2;
}

std::string QuotientSingularity::label() const {
  std::string s = "1/" + std::to_string(order) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return count == 1 ? s : std::to_string(count) + "x" + s;
}

int nonspecial_characters(const QuotientSingularity& s) {
  if (s.order == 3 && s.a == 1 && s.b == 2) return 0;
  if (s.order == 7 && s.a == 1 && s.b == 3) return 3;
  throw std::out_of_range("no curated non-special character count for " + s.label());
}

const std::vector<EquivariantRow>& equivariant_rows() {
  static const std::vector<EquivariantRow> rows = {
      {"1", 1, {}, 0, 3, 2},
      {"Z/3", 3, {{3, 3, 1, 2}}, 0, 9, 2},
      {"Z/7", 7, {{3, 7, 1, 3}}, 9, 12, 1},
      {"G21", 5, {{3, 3, 1, 2}, {1, 7, 1, 3}}, 3, 12, 1},
  };
  return rows;
}

bool equivariant_count_check(const EquivariantRow& row) { return 3 * row.irrep_count == row.euler_z + row.r_g; }

int r_g_from_singularities(const EquivariantRow& row) {
  int r = 0;
  for (const auto& s : row.singularities) r += s.count * nonspecial_characters(s);
  return r;
}

int orbifold_hh_dimension(int conjugacy_class_count) {
  if (conjugacy_class_count < 1) throw std::invalid_argument("orbifold_hh_dimension: class count must be >= 1");
  return 3 * conjugacy_class_count;
}

}  // namespace minifold
