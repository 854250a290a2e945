#include "minifold/matrix.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace minifold {

ExactMatrix::ExactMatrix(std::size_t n, long modulus) : n_(n), modulus_(modulus), a_(n * n, Rational(0)) {
  if (modulus < 0 || (modulus != 0 && !is_prime(modulus)))
    throw std::invalid_argument("matrix modulus must be 0 or a prime, got " + std::to_string(modulus));
}

ExactMatrix ExactMatrix::identity(std::size_t n, long modulus) {
  ExactMatrix m(n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows, long modulus) {
  ExactMatrix m(rows.size(), modulus);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<long>>& rows, long modulus) {
  std::vector<std::vector<Rational>> q;
  for (const auto& r : rows) q.emplace_back(r.begin(), r.end());
  return from_rows(q, modulus);
}

Rational ExactMatrix::normalize(const Rational& v) const {
  if (modulus_ == 0) {
    Rational q(v);
    q.canonicalize();
    return q;
  }
  return Rational(residue(v, modulus_));
}

void ExactMatrix::set(std::size_t i, std::size_t j, const Rational& value) { a_[i * n_ + j] = normalize(value); }

bool ExactMatrix::is_integral() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return is_integer(q); });
}

bool ExactMatrix::is_identity() const { return *this == identity(n_, modulus_); }

bool ExactMatrix::is_symmetric() const { return *this == transpose(); }

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(n_, modulus_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t.a_[j * n_ + i] = a_[i * n_ + j];
  return t;
}

ExactMatrix ExactMatrix::reduced_mod(long p) const {
  ExactMatrix r(n_, p);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.normalize(a_[k]);
  return r;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_ || a.modulus_ != b.modulus_)
    throw std::invalid_argument("matrix product: size or modulus mismatch");
  const std::size_t n = a.n_;
  ExactMatrix c(n, a.modulus_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s(0);
      for (std::size_t k = 0; k < n; ++k) s += a.a_[i * n + k] * b.a_[k * n + j];
      c.a_[i * n + j] = c.normalize(s);
    }
  return c;
}

ExactMatrix ExactMatrix::power(unsigned long e) const {
  ExactMatrix result = identity(n_, modulus_);
  ExactMatrix base = *this;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

ExactMatrix ExactMatrix::inverse() const {
  const std::size_t n = n_;
  // Gauss-Jordan on [A | I]; exact in both Q and F_p.
  std::vector<Rational> w(a_);
  ExactMatrix inv = identity(n, modulus_);
  auto at = [n](std::vector<Rational>& v, std::size_t i, std::size_t j) -> Rational& { return v[i * n + j]; };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && at(w, piv, col) == 0) ++piv;
    if (piv == n) throw SingularMatrixError("matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(at(w, piv, j), at(w, col, j));
        std::swap(at(inv.a_, piv, j), at(inv.a_, col, j));
      }
    const Rational scale = modulus_ == 0 ? Rational(1 / at(w, col, col))
                                         : Rational(mod_inverse(at(w, col, col).get_num().get_si(), modulus_));
    for (std::size_t j = 0; j < n; ++j) {
      at(w, col, j) = normalize(at(w, col, j) * scale);
      at(inv.a_, col, j) = normalize(at(inv.a_, col, j) * scale);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || at(w, r, col) == 0) continue;
      const Rational f = at(w, r, col);
      for (std::size_t j = 0; j < n; ++j) {
        at(w, r, j) = normalize(at(w, r, j) - f * at(w, col, j));
        at(inv.a_, r, j) = normalize(at(inv.a_, r, j) - f * at(inv.a_, col, j));
      }
    }
  }
  return inv;
}

std::vector<std::vector<long>> ExactMatrix::to_long_rows() const {
  if (!is_integral()) throw std::domain_error("matrix has non-integer entries");
  std::vector<std::vector<long>> rows(n_, std::vector<long>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = a_[i * n_ + j].get_num().get_si();
  return rows;
}

std::string ExactMatrix::to_string() const {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& q : a_) {
    cells.push_back(q.get_str());
    width = std::max(width, cells.back().size());
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const std::string& c = cells[i * n_ + j];
      out << (j ? " " : "") << std::string(width - c.size(), ' ') << c;
    }
    out << '\n';
  }
  return out.str();
}

Integer bareiss_determinant(const ExactMatrix& m) {
  if (!m.is_integral()) throw std::invalid_argument("bareiss_determinant: non-integer entries");
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<Integer> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv * n + k] == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i * n + j] = t;
      }
    }
    prev = a[k * n + k];
  }
  return sign * a[n * n - 1];
}

namespace {

Rational eliminate(const ExactMatrix& m) {
  const std::size_t n = m.size();
  const long p = m.modulus();
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
  Rational det(1);
  auto norm = [p](Rational v) { return p == 0 ? v : Rational(residue(v, p)); };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = norm(-det);
    }
    det = norm(det * a[k * n + k]);
    const Rational inv = p == 0 ? Rational(1 / a[k * n + k])
                                : Rational(mod_inverse(a[k * n + k].get_num().get_si(), p));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i * n + k] == 0) continue;
      const Rational f = norm(a[i * n + k] * inv);
      for (std::size_t j = k; j < n; ++j) a[i * n + j] = norm(a[i * n + j] - f * a[k * n + j]);
    }
  }
  return det;
}

}  // namespace

Rational determinant(const ExactMatrix& m) {
  if (m.modulus() == 0 && m.is_integral()) return Rational(bareiss_determinant(m));
  return eliminate(m);
}

long default_order_bound(const ExactMatrix& m) {
  if (m.modulus() == 0) return 1024;
  Integer bound = 2;
  for (std::size_t i = 0; i < m.size(); ++i) bound *= m.modulus();
  return bound.fits_slong_p() ? bound.get_si() : std::numeric_limits<long>::max();
}

std::optional<long> matrix_order(const ExactMatrix& m, std::optional<long> bound) {
  if (determinant(m) == 0) throw SingularMatrixError("matrix_order: matrix is not invertible");
  const long cap = bound.value_or(default_order_bound(m));
  ExactMatrix acc = m;
  for (long k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return k;
    acc = acc * m;
  }
  return std::nullopt;
}

std::optional<Integer> lattice_index_squared(const ExactMatrix& gram) {
  if (gram.modulus() != 0 || !gram.is_integral())
    throw std::invalid_argument("lattice_index_squared: expects an integer matrix");
  const Integer det = bareiss_determinant(gram);
  if (det == 0) throw SingularMatrixError("lattice_index_squared: Gram matrix is singular");
  return exact_sqrt(abs(det));
}

}  // namespace minifold
