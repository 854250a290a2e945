#include "minifold/reptheory.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace minifold::rep {
namespace {

constexpr int kConductor = 21;

int mod(long a, int m) { return static_cast<int>(mod_normalize(a, m)); }

// 2^t mod 7, the action of conjugation by tau^t on <s>.
int twist(int t) {
  static constexpr std::array<int, 3> powers{1, 2, 4};
  return powers[static_cast<std::size_t>(mod(t, 3))];
}

CyclotomicElement z21(long k) { return root_of_unity(kConductor, k); }
CyclotomicElement xi(long k) { return z21(3 * k); }
CyclotomicElement omega(long k) { return z21(7 * k); }
CyclotomicElement scalar(long v) { return CyclotomicElement(kConductor, Rational(v)); }

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 c;
  for (auto& row : c) row.fill(scalar(0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Matrix3 identity3() {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = scalar(i == j ? 1 : 0);
  return m;
}

CyclotomicElement trace(const Matrix3& m) { return m[0][0] + m[1][1] + m[2][2]; }

std::vector<std::vector<G21Element>> orbits_under_conjugation(const std::vector<G21Element>& group) {
  std::set<G21Element> seen;
  std::vector<std::vector<G21Element>> out;
  for (const auto& g : group) {
    if (seen.count(g)) continue;
    std::set<G21Element> cls;
    for (const auto& h : group) cls.insert(h * g * h.inverse());
    seen.insert(cls.begin(), cls.end());
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

}  // namespace

G21Element operator*(const G21Element& a, const G21Element& b) {
  // (t^a.t s^a.u)(t^b.t s^b.u) = t^(a.t + b.t) s^(a.u * 2^b.t + b.u)
  return {mod(static_cast<long>(a.u) * twist(b.t) + b.u, 7), mod(a.t + b.t, 3)};
}

G21Element G21Element::pow(long e) const {
  G21Element acc{};
  G21Element base = *this;
  long n = mod(e, 21);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

G21Element G21Element::inverse() const { return pow(20); }

int G21Element::order() const {
  G21Element acc = *this;
  int k = 1;
  while (acc != G21Element{}) {
    acc = acc * *this;
    ++k;
  }
  return k;
}

std::string G21Element::to_string() const {
  if (u == 0 && t == 0) return "1";
  std::string s;
  if (t) s += t == 1 ? "t" : "t^2";
  if (u) s += u == 1 ? "s" : "s^" + std::to_string(u);
  return s;
}

std::vector<G21Element> all_elements() {
  std::vector<G21Element> g;
  for (int t = 0; t < 3; ++t)
    for (int u = 0; u < 7; ++u) g.push_back({u, t});
  return g;
}

const std::vector<ConjugacyClass>& conjugacy_classes() {
  static const std::vector<ConjugacyClass> classes = [] {
    const auto orbits = orbits_under_conjugation(all_elements());
    const std::array<G21Element, 5> reps{G21Element{}, G21Element::sigma(), G21Element::sigma().pow(3),
                                         G21Element::tau(), G21Element::tau().pow(2)};
    std::vector<ConjugacyClass> out;
    for (const auto& r : reps) {
      auto it = std::find_if(orbits.begin(), orbits.end(), [&](const auto& o) {
        return std::binary_search(o.begin(), o.end(), r);
      });
      out.push_back({r, *it});
    }
    if (orbits.size() != out.size()) throw std::logic_error("G21: unexpected class count");
    return out;
  }();
  return classes;
}

std::size_t class_index(const G21Element& g) {
  const auto& cls = conjugacy_classes();
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (std::binary_search(cls[i].members.begin(), cls[i].members.end(), g)) return i;
  throw std::logic_error("class_index: element not found");
}

std::size_t subgroup_class_count(const std::vector<G21Element>& generators) {
  std::set<G21Element> h{G21Element{}};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<G21Element> current(h.begin(), h.end());
    for (const auto& a : current)
      for (const auto& g : generators)
        if (h.insert(a * g).second) grew = true;
  }
  return orbits_under_conjugation(std::vector<G21Element>(h.begin(), h.end())).size();
}

std::vector<std::vector<int>> irrep_dimension_solutions(int order, int class_count) {
  std::vector<int> divisors;
  for (int d = 1; d <= order; ++d)
    if (order % d == 0) divisors.push_back(d);
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int remaining) {
    if (static_cast<int>(cur.size()) == class_count) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < divisors.size(); ++i) {
      const int sq = divisors[i] * divisors[i];
      if (sq > remaining) break;
      cur.push_back(divisors[i]);
      rec(i, remaining - sq);
      cur.pop_back();
    }
  };
  rec(0, order);
  return out;
}

std::vector<int> irrep_dimensions() {
  const auto sols = irrep_dimension_solutions(21, static_cast<int>(conjugacy_classes().size()));
  if (sols.size() != 1) throw std::logic_error("G21: irreducible dimensions are not uniquely determined");
  return sols.front();
}

bool has_two_dimensional_irrep() {
  const auto dims = irrep_dimensions();
  return std::find(dims.begin(), dims.end(), 2) != dims.end();
}

Character operator+(const Character& a, const Character& b) {
  Character c{a.name + "+" + b.name, a.values};
  for (std::size_t i = 0; i < 5; ++i) c.values[i] += b.values[i];
  return c;
}

Character operator*(const Character& a, const Character& b) {
  Character c{a.name + "*" + b.name, a.values};
  for (std::size_t i = 0; i < 5; ++i) c.values[i] *= b.values[i];
  return c;
}

Matrix3 v3_matrix(const G21Element& g) {
  Matrix3 diag = identity3();
  for (std::size_t i = 0; i < 3; ++i) diag[i][i] = scalar(0);
  diag[0][0] = xi(g.u);
  diag[1][1] = xi(2L * g.u);
  diag[2][2] = xi(4L * g.u);
  Matrix3 perm;
  for (auto& row : perm) row.fill(scalar(0));
  perm[1][0] = scalar(1);
  perm[2][1] = scalar(1);
  perm[0][2] = scalar(1);
  Matrix3 m = identity3();
  for (int k = 0; k < g.t; ++k) m = multiply(m, perm);
  return multiply(m, diag);
}

const std::vector<Character>& character_table() {
  static const std::vector<Character> table = [] {
    const auto& cls = conjugacy_classes();
    auto from = [&](std::string name, const std::function<CyclotomicElement(const G21Element&)>& f) {
      Character c{std::move(name), {}};
      for (std::size_t i = 0; i < cls.size(); ++i) c.values[i] = f(cls[i].representative);
      return c;
    };
    std::vector<Character> t;
    t.push_back(from("C", [](const G21Element&) { return scalar(1); }));
    t.push_back(from("V1", [](const G21Element& g) { return omega(g.t); }));
    t.push_back(from("V1bar", [](const G21Element& g) { return omega(2L * g.t); }));
    const Character v3 = from("V3", [](const G21Element& g) { return trace(v3_matrix(g)); });
    Character v3bar{"V3bar", {}};
    for (std::size_t i = 0; i < 5; ++i) v3bar.values[i] = v3.values[i].conj();
    t.push_back(v3);
    t.push_back(v3bar);
    return t;
  }();
  return table;
}

std::vector<Character> reference_character_table() {
  auto row = [](std::string name, std::array<const char*, 5> cells) {
    Character c{std::move(name), {}};
    for (std::size_t i = 0; i < 5; ++i) c.values[i] = parse_cyclotomic(cells[i]).embed(kConductor);
    return c;
  };
  return {
      row("C", {"1", "1", "1", "1", "1"}),
      row("V1", {"1", "1", "1", "w", "wbar"}),
      row("V1bar", {"1", "1", "1", "wbar", "w"}),
      row("V3", {"3", "b", "bbar", "0", "0"}),
      row("V3bar", {"3", "bbar", "b", "0", "0"}),
  };
}

Rational inner_product(const Character& chi, const Character& psi) {
  const auto& cls = conjugacy_classes();
  CyclotomicElement acc(kConductor);
  for (std::size_t i = 0; i < cls.size(); ++i)
    acc += Rational(static_cast<long>(cls[i].size())) * (chi.values[i] * psi.values[i].conj());
  return acc.to_rational() / 21;
}

std::array<Rational, 5> decompose(const Character& chi) {
  std::array<Rational, 5> m;
  const auto& table = character_table();
  for (std::size_t i = 0; i < 5; ++i) m[i] = inner_product(chi, table[i]);
  return m;
}

std::string to_string(H0Verdict v) {
  switch (v) {
    case H0Verdict::IrreducibleV3: return "irreducible-3-dim (V3)";
    case H0Verdict::IrreducibleV3bar: return "irreducible-3-dim (V3bar)";
    case H0Verdict::SumOfOnes: return "sum-of-ones";
    case H0Verdict::Inconsistent: return "inconsistent";
  }
  return "?";
}

H0Verdict classify_h0(int dim, const CyclotomicElement& trace_at_sigma) {
  if (dim != 3) throw std::invalid_argument("classify_h0: only dimension 3 is supported");
  const auto& table = character_table();
  const std::size_t sigma = class_index(G21Element::sigma());
  if (trace_at_sigma == table[3].values[sigma]) return H0Verdict::IrreducibleV3;
  if (trace_at_sigma == table[4].values[sigma]) return H0Verdict::IrreducibleV3bar;
  // Any sum of three linear characters takes the value 1 + 1 + 1 at s.
  const CyclotomicElement sum_of_ones = table[0].values[sigma] + table[1].values[sigma] + table[2].values[sigma];
  if (trace_at_sigma == sum_of_ones) return H0Verdict::SumOfOnes;
  return H0Verdict::Inconsistent;
}

bool tensor_square_avoids(int max_dim, const Character& target) {
  const auto& table = character_table();
  // Enumerate multisets of irreducibles (as multiplicity vectors) with
  // total dimension between 1 and max_dim.
  std::array<int, 5> mult{};
  std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int dim_left) -> bool {
    if (i == table.size()) {
      if (dim_left == max_dim) return true;
      Character w{"W", {}};
      for (auto& v : w.values) v = scalar(0);
      for (std::size_t k = 0; k < table.size(); ++k)
        for (int r = 0; r < mult[k]; ++r) w = w + table[k];
      return inner_product(w * w, target) == 0;
    }
    const int d = static_cast<int>(table[i].degree().get_num().get_si());
    for (int m = 0; m * d <= dim_left; ++m) {
      mult[i] = m;
      if (!rec(i + 1, dim_left - m * d)) return false;
    }
    mult[i] = 0;
    return true;
  };
  return rec(0, max_dim);
}

}  // namespace minifold::rep
