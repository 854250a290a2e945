#include "minifold/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace minifold {
namespace {

using Coeffs = std::vector<Rational>;

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Coeffs add(const Coeffs& a, const Coeffs& b, int sign = 1) {
  Coeffs out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += sign * b[i];
  trim(out);
  return out;
}

Rational horner(const Coeffs& c, const Rational& x) {
  Rational acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Forward differences of the values at 0..d give the binomial coordinates.
std::vector<Rational> binomial_coords(const Coeffs& c) {
  const std::size_t n = c.size();
  std::vector<Rational> values(n);
  for (std::size_t j = 0; j < n; ++j) values[j] = horner(c, Rational(static_cast<long>(j)));
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(values[0]);
    for (std::size_t j = 0; j + 1 < values.size(); ++j) values[j] = values[j + 1] - values[j];
    values.pop_back();
  }
  return out;
}

// binom(x, k) in the power basis.
Coeffs binomial_poly(unsigned k) {
  Coeffs out{Rational(1)};
  for (unsigned i = 0; i < k; ++i) out = multiply(out, Coeffs{Rational(-static_cast<long>(i)), Rational(1)});
  const Rational denom(factorial(k));
  for (auto& q : out) q /= denom;
  return out;
}

// Recursive-descent parser for + - * / ^ over rationals and one variable.
class ExprParser {
 public:
  explicit ExprParser(std::string text) : s_(std::move(text)) {}

  Coeffs parse() {
    Coeffs c = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return c;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("malformed polynomial literal '" + s_ + "' at offset " +
                                std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  Coeffs expression() {
    int sign = 1;
    if (accept('-')) sign = -1;
    else accept('+');
    Coeffs acc = add({}, term(), sign);
    for (;;) {
      if (accept('+')) acc = add(acc, term());
      else if (accept('-')) acc = add(acc, term(), -1);
      else return acc;
    }
  }

  Coeffs term() {
    Coeffs acc = power();
    for (;;) {
      if (accept('*')) {
        acc = multiply(acc, power());
      } else if (accept('/')) {
        Coeffs d = power();
        if (d.size() != 1) fail("division by a non-constant");
        for (auto& q : acc) q /= d[0];
      } else if (starts_factor()) {
        acc = multiply(acc, power());
      } else {
        return acc;
      }
    }
  }

  Coeffs power() {
    Coeffs base = factor();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned e = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
      Coeffs out{Rational(1)};
      for (unsigned i = 0; i < e; ++i) out = multiply(out, base);
      return out;
    }
    return base;
  }

  Coeffs factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Coeffs inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return add({}, factor(), -1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Coeffs k{Rational(Integer(s_.substr(start, pos_ - start)))};
      trim(k);
      return k;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (var_ == 0) var_ = c;
      if (c != var_) fail("more than one variable");
      ++pos_;
      return Coeffs{Rational(0), Rational(1)};
    }
    fail("unexpected character");
  }

  std::string s_;
  std::size_t pos_ = 0;
  char var_ = 0;
};

}  // namespace

bool is_integer_valued(std::span<const Rational> coeffs) {
  Coeffs c(coeffs.begin(), coeffs.end());
  trim(c);
  for (const auto& q : binomial_coords(c))
    if (!is_integer(q)) return false;
  return true;
}

IntValuedPolynomial::IntValuedPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& q : coeffs_) q.canonicalize();
  trim(coeffs_);
  if (!is_integer_valued(coeffs_))
    throw IntegralityError("polynomial " + to_string() + " is not integer-valued");
}

IntValuedPolynomial IntValuedPolynomial::from_binomial_basis(std::span<const Integer> c) {
  Coeffs acc;
  for (std::size_t k = 0; k < c.size(); ++k) {
    Coeffs term = binomial_poly(static_cast<unsigned>(k));
    for (auto& q : term) q *= c[k];
    acc = add(acc, term);
  }
  return IntValuedPolynomial(std::move(acc));
}

IntValuedPolynomial IntValuedPolynomial::from_roots(const Rational& scale, std::span<const Integer> roots) {
  Coeffs acc{scale};
  trim(acc);
  for (const auto& r : roots) acc = multiply(acc, Coeffs{Rational(-r), Rational(1)});
  return IntValuedPolynomial(std::move(acc));
}

Rational IntValuedPolynomial::coefficient(int j) const {
  if (j < 0 || j > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(j)];
}

Rational IntValuedPolynomial::leading_coefficient() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational IntValuedPolynomial::evaluate(const Rational& x) const { return horner(coeffs_, x); }

Integer IntValuedPolynomial::operator()(const Integer& k) const { return eval_poly(*this, k); }

std::vector<Integer> IntValuedPolynomial::binomial_coordinates() const {
  std::vector<Integer> out;
  for (const auto& q : binomial_coords(coeffs_)) out.push_back(q.get_num());
  return out;
}

IntValuedPolynomial IntValuedPolynomial::compose_affine(long a, long b) const {
  const Coeffs inner{Rational(b), Rational(a)};
  Coeffs acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = add(multiply(acc, inner), Coeffs{*it});
  return IntValuedPolynomial(std::move(acc));
}

std::string IntValuedPolynomial::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int j = degree(); j >= 0; --j) {
    const Rational& q = coeffs_[static_cast<std::size_t>(j)];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (first) {
      if (q < 0) out << '-';
    } else {
      out << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0 || mag != 1) {
      out << mag.get_str();
      if (j > 0) out << '*';
    }
    if (j >= 1) out << var;
    if (j >= 2) out << '^' << j;
  }
  return out.str();
}

Integer eval_poly(const IntValuedPolynomial& p, const Integer& k) {
  const Rational v = p.evaluate(Rational(k));
  if (!is_integer(v))
    throw IntegralityError("P(" + k.get_str() + ") = " + v.get_str() + " is not an integer");
  return v.get_num();
}

IntValuedPolynomial parse_polynomial(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty polynomial literal");
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("malformed polynomial literal '" + text + "': missing ']'");
    Coeffs c;
    std::stringstream body(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(body, item, ',')) c.push_back(parse_rational(item));
    return IntValuedPolynomial(std::move(c));
  }
  return IntValuedPolynomial(ExprParser(s).parse());
}

}  // namespace minifold
