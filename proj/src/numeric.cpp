#include "minifold/numeric.hpp"

#include <cctype>

namespace minifold {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  return rational(Integer(strip_plus(num)), Integer(den));
}

bool is_prime(long p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(Integer(p).get_mpz_t(), 30) > 0;
}

long mod_inverse(long a, long p) {
  Integer inv;
  const Integer base(mod_normalize(a, p));
  if (mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), Integer(p).get_mpz_t()) == 0)
    throw std::domain_error("mod_inverse: " + std::to_string(a) + " is not a unit mod " +
                            std::to_string(p));
  return inv.get_si();
}

long residue(const Rational& q, long p) {
  const Integer modulus(p);
  Integer num = q.get_num() % modulus;
  Integer den = q.get_den() % modulus;
  if (num < 0) num += modulus;
  const Integer product = num * mod_inverse(den.get_si(), p);
  const Integer r = product % modulus;
  return r.get_si();
}

std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0) return std::nullopt;
  Integer root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  if (rem != 0) return std::nullopt;
  return root;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace minifold
