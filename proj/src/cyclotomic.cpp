#include "minifold/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace minifold {
namespace {

std::vector<Integer> compute_cyclotomic(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by exact long division.
  std::vector<Integer> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<Integer> quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      const Integer q = num[k];  // den is monic
      quot[k - dd] = q;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= q * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

void reduce(int n, std::vector<Rational>& c) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = c.size(); k-- > deg;) {
    if (c[k] == 0) continue;
    const Rational q = c[k];
    for (std::size_t j = 0; j <= deg; ++j) c[k - deg + j] -= q * phi[j];
  }
  c.resize(deg, Rational(0));
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  static std::recursive_mutex mu;
  static std::map<int, std::vector<Integer>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto poly = n == 1 ? std::vector<Integer>{-1, 1} : compute_cyclotomic(n);
  return cache.emplace(n, std::move(poly)).first->second;
}

int euler_phi(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

CyclotomicElement::CyclotomicElement(int conductor) : n_(conductor), c_(static_cast<std::size_t>(euler_phi(conductor)), Rational(0)) {}

CyclotomicElement::CyclotomicElement(int conductor, const Rational& value) : CyclotomicElement(conductor) {
  c_[0] = value;
}

CyclotomicElement CyclotomicElement::from_powers(int conductor, const std::vector<Rational>& coeffs) {
  CyclotomicElement x(conductor);
  std::vector<Rational> c(coeffs);
  for (auto& q : c) q.canonicalize();
  reduce(conductor, c);
  x.c_ = std::move(c);
  return x;
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

Rational CyclotomicElement::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic element " + to_string() + " is not rational");
  return c_[0];
}

CyclotomicElement CyclotomicElement::embed(int m) const {
  if (m % n_ != 0) throw std::invalid_argument("embed: target conductor must be a multiple");
  const std::size_t step = static_cast<std::size_t>(m / n_);
  std::vector<Rational> c(c_.size() * step + 1, Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) c[j * step] = c_[j];
  return from_powers(m, c);
}

CyclotomicElement CyclotomicElement::galois(long k) const {
  if (std::gcd(mod_normalize(k, n_), static_cast<long>(n_)) != 1 && n_ > 1)
    throw std::invalid_argument("galois: exponent " + std::to_string(k) + " not coprime to " + std::to_string(n_));
  std::vector<Rational> c(static_cast<std::size_t>(n_), Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j)
    c[static_cast<std::size_t>(mod_normalize(static_cast<long>(j) * k, n_))] += c_[j];
  return from_powers(n_, c);
}

Rational CyclotomicElement::norm() const {
  CyclotomicElement acc(n_, Rational(1));
  for (int k = 1; k <= n_; ++k)
    if (std::gcd(k, n_) == 1) acc *= galois(k);
  return acc.to_rational();
}

Rational CyclotomicElement::trace() const {
  CyclotomicElement acc(n_);
  for (int k = 1; k <= n_; ++k)
    if (std::gcd(k, n_) == 1) acc += galois(k);
  return acc.to_rational();
}

std::complex<double> CyclotomicElement::numeric() const {
  std::complex<double> acc = 0;
  for (std::size_t j = 0; j < c_.size(); ++j)
    acc += c_[j].get_d() * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / n_);
  return acc;
}

std::string CyclotomicElement::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const Rational& q = c_[j];
    if (q == 0) continue;
    const Rational mag = abs(q);
    if (first) out << (q < 0 ? "-" : "");
    else out << (q < 0 ? " - " : " + ");
    first = false;
    if (j == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << 'z' << n_;
    if (j > 1) out << '^' << j;
  }
  return first ? "0" : out.str();
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
  if (o.n_ != n_) {
    const int m = lcm_int(n_, o.n_);
    *this = embed(m) + o.embed(m);
    return *this;
  }
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) { return *this += -o; }

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& o) {
  if (o.n_ != n_) {
    const int m = lcm_int(n_, o.n_);
    *this = embed(m) * o.embed(m);
    return *this;
  }
  std::vector<Rational> prod(c_.size() + o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  reduce(n_, prod);
  c_ = std::move(prod);
  return *this;
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement x(*this);
  for (auto& q : x.c_) q = -q;
  return x;
}

CyclotomicElement operator*(const Rational& q, CyclotomicElement a) {
  for (auto& c : a.c_) c *= q;
  return a;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  const int m = lcm_int(a.n_, b.n_);
  return a.embed(m).c_ == b.embed(m).c_;
}

CyclotomicElement root_of_unity(int n, long k) {
  std::vector<Rational> c(static_cast<std::size_t>(n), Rational(0));
  c[static_cast<std::size_t>(mod_normalize(k, n))] = 1;
  return CyclotomicElement::from_powers(n, c);
}

CyclotomicElement exact_divide(const CyclotomicElement& num, const CyclotomicElement& den) {
  const int n = den.conductor();
  if (den == CyclotomicElement(n)) throw std::domain_error("exact_divide: division by zero");
  CyclotomicElement cofactor(n, Rational(1));
  for (int k = 2; k <= n; ++k)
    if (std::gcd(k, n) == 1) cofactor *= den.galois(k);
  const Rational norm = (den * cofactor).to_rational();
  return (1 / norm) * (num * cofactor);
}

CyclotomicElement gauss_period_b() { return root_of_unity(7, 1) + root_of_unity(7, 2) + root_of_unity(7, 4); }

namespace {

class CycloParser {
 public:
  explicit CycloParser(const std::string& s) : s_(s) {}

  CyclotomicElement parse() {
    CyclotomicElement acc(1);
    skip();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      CyclotomicElement t = term();
      acc += sign == 1 ? t : -t;
      skip();
      if (pos_ == s_.size()) return acc;
      if (peek() == '+') sign = 1;
      else if (peek() == '-') sign = -1;
      else fail("expected '+' or '-'");
      ++pos_;
    }
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("malformed cyclotomic literal '" + s_ + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  long number() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stol(s_.substr(start, pos_ - start));
  }

  CyclotomicElement term() {
    skip();
    Rational coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Rational(number());
      have_coeff = true;
      skip();
      if (peek() == '/') {
        ++pos_;
        coeff /= number();
      }
      skip();
      if (peek() != '*') return CyclotomicElement(1, coeff);
      ++pos_;
      skip();
    }
    std::string name;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) name.push_back(s_[pos_++]);
    if (name.empty()) fail(have_coeff ? "expected a symbol after '*'" : "expected a term");
    CyclotomicElement sym(1);
    if (name == "b") sym = gauss_period_b();
    else if (name == "bbar") sym = gauss_period_b().conj();
    else if (name == "w") sym = root_of_unity(3, 1);
    else if (name == "wbar") sym = root_of_unity(3, 2);
    else if (name == "z") {
      const long n = number();
      if (n < 1 || n > 10000) fail("bad conductor");
      long k = 1;
      skip();
      if (peek() == '^') {
        ++pos_;
        skip();
        bool neg = false;
        if (peek() == '-') {
          neg = true;
          ++pos_;
        }
        k = number();
        if (neg) k = -k;
      }
      sym = root_of_unity(static_cast<int>(n), k);
    } else {
      fail("unknown symbol '" + name + "'");
    }
    return coeff * sym;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

CyclotomicElement parse_cyclotomic(const std::string& text) { return CycloParser(text).parse(); }

}  // namespace minifold
