#include "minifold/commands.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "minifold/atlas.hpp"
#include "minifold/cyclotomic.hpp"
#include "minifold/lefschetz.hpp"
#include "minifold/reptheory.hpp"
#include "minifold/sonb.hpp"

namespace minifold::cli {
namespace {

// Reference values for the Wilson fourfold reduced mod 2.
const std::vector<std::vector<long>> kWilsonGramMod2{
    {1, 1, 0, 0, 0}, {1, 1, 1, 0, 0}, {1, 1, 1, 1, 0}, {0, 1, 1, 1, 1}, {0, 0, 1, 1, 1}};
const std::vector<std::vector<long>> kWilsonSerreMod2{
    {1, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {1, 0, 0, 0, 1}, {1, 0, 0, 0, 0}};
const std::vector<std::string> kWilsonPairingMod2{
    "111000011001", "111100001100", "011110000110", "001111000011", "000111101001", "000011111100",
    "100001110110", "110000110011", "011001101111", "001100111111", "100110011111", "110011001111"};

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> rows_of(const ExactMatrix& m) { return split_lines(m.to_string()); }

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string vec_str(const sonb::Vector& v) { return "(" + join(v, ",") + ")"; }

std::string bits(const std::vector<long>& row) {
  std::string s;
  for (long x : row) s += std::to_string(x);
  return s;
}

// Names the common cyclotomic values; falls back to the power basis.
std::string symbolic(const CyclotomicElement& x) {
  if (x.is_rational()) return to_string(x.to_rational());
  static const std::vector<std::pair<std::string, CyclotomicElement>> names{
      {"b", parse_cyclotomic("b")},   {"bbar", parse_cyclotomic("bbar")},
      {"w", parse_cyclotomic("w")},   {"wbar", parse_cyclotomic("wbar")},
      {"-b", -parse_cyclotomic("b")}, {"-bbar", -parse_cyclotomic("bbar")}};
  for (const auto& [name, value] : names)
    if (x == value) return name;
  // x = u + v*g for g = b or w, with u, v rational.
  for (const char* g : {"b", "w"}) {
    const CyclotomicElement gen = parse_cyclotomic(g);
    const CyclotomicElement v = exact_divide(x - x.conj(), gen - gen.conj());
    if (!v.is_rational()) continue;
    const CyclotomicElement u = x - v.to_rational() * gen;
    if (!u.is_rational()) continue;
    std::string out = u.to_rational() == 0 ? "" : to_string(u.to_rational());
    const Rational c = v.to_rational();
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational mag = abs(c);
    out += (mag == 1 ? "" : to_string(mag) + "*") + g;
    return out;
  }
  return x.to_string();
}

bool is_unit_step(const std::vector<long>& t) {
  if (t.size() < 2) return true;
  const long step = t[1] - t[0];
  if (step != 1 && step != -1) return false;
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] - t[i - 1] != step) return false;
  return true;
}

void echo_form(Report& r, const FormArgs& a, const GramMatrix& g) {
  if (!a.profile.empty()) r.input("profile", a.profile);
  else r.input("poly", a.poly);
  r.input("twists", join(g.twists(), ","));
  r.input("mod", a.modulus ? std::to_string(*a.modulus) : "0");
}

std::string record_label(const atlas::FPPRecord& rec) {
  std::ostringstream out;
  out << rec.field_or_class << " p=" << rec.p << " T1={" << join(rec.t1, ",") << "}";
  if (rec.t1_alias) out << "/{" << join(*rec.t1_alias, ",") << "}";
  out << " N=" << rec.index_n << " " << rec.suffix;
  if (rec.suffix_alias) out << "/" << *rec.suffix_alias;
  return out.str();
}

std::string record_line(const atlas::FPPRecord& rec) {
  std::ostringstream out;
  out << record_label(rec) << " | aut=" << rec.aut << " | H1=[" << join(rec.h1, ",") << "] order " << rec.h1_order()
      << " | 3-torsion-free=" << (atlas::three_torsion_free(rec) ? "yes" : "no");
  return out.str();
}

// Random integer-valued polynomial of exact degree d (d = -1: zero), via
// integer binomial-basis coordinates in [-9, 9].
IntValuedPolynomial random_int_valued(std::mt19937_64& rng, int d) {
  std::vector<Integer> c;
  for (int k = 0; k <= d; ++k) {
    long v = static_cast<long>(rng() % 19) - 9;
    if (k == d && v == 0) v = 1 + static_cast<long>(rng() % 9);
    c.emplace_back(v);
  }
  return IntValuedPolynomial::from_binomial_basis(c);
}

ExactMatrix gram_of(const IntValuedPolynomial& p, int n) {
  ExactMatrix m(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) m.set(i, j, Rational(p(j - i)));
  return m;
}

const rep::Character& irreducible(const std::string& name) {
  for (const auto& c : rep::character_table())
    if (c.name == name) return c;
  throw std::invalid_argument("unknown irreducible '" + name + "' (expected C, V1, V1bar, V3, V3bar)");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

rep::Character parse_character_expr(const std::string& expr) {
  std::optional<rep::Character> sum;
  for (const auto& term : split(expr, '+')) {
    std::optional<rep::Character> prod;
    for (const auto& factor : split(term, '*')) {
      const rep::Character& c = irreducible(factor);
      prod = prod ? *prod * c : c;
    }
    sum = sum ? *sum + *prod : *prod;
  }
  sum->name = expr;
  return *sum;
}

std::string decomposition_string(const std::array<Rational, 5>& m) {
  const auto& table = rep::character_table();
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < 5; ++i) {
    if (m[i] == 0) continue;
    parts.push_back(m[i] == 1 ? table[i].name : to_string(m[i]) + "*" + table[i].name);
  }
  return parts.empty() ? "0" : join(parts, " + ");
}

}  // namespace

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  for (const auto& part : split(text, ',')) {
    if (part.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(part, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != part.size()) throw std::invalid_argument("not an integer: '" + part + "'");
    out.push_back(v);
  }
  return out;
}

HilbertProfile resolve_profile(const FormArgs& a) {
  if (!a.profile.empty() && !a.poly.empty()) throw std::invalid_argument("give either a profile or a polynomial");
  if (!a.poly.empty()) return make_profile("poly", parse_polynomial(a.poly));
  const auto& p = a.profile;
  if (p == "wilson") return hilbert_wilson();
  auto numbered = [&](const std::string& prefix) -> std::optional<int> {
    if (p.rfind(prefix, 0) != 0) return std::nullopt;
    const auto v = parse_long_list(p.substr(prefix.size()));
    if (v.size() != 1 || v[0] < 1 || v[0] > 64) throw std::invalid_argument("bad dimension in profile '" + p + "'");
    return static_cast<int>(v[0]);
  };
  if (auto n = numbered("fake-pn:")) return hilbert_fake_pn(*n);
  if (auto n = numbered("pn:")) return hilbert_projective(*n);
  throw std::invalid_argument("unknown profile '" + p + "' (expected wilson, pn:N, fake-pn:N or --poly)");
}

GramMatrix resolve_gram(const FormArgs& a) {
  const HilbertProfile prof = resolve_profile(a);
  GramMatrix g = gram_from_twists(prof, a.twists ? *a.twists : standard_twists(prof));
  return a.modulus ? reduce_mod(g, *a.modulus) : g;
}

Report cmd_gram(const GramArgs& args) {
  Report r("gram");
  const GramMatrix g = resolve_gram(args.form);
  echo_form(r, args.form, g);
  r.anchor("Euler-form Gram matrix entry(i,j) = P(c_j - c_i) and its determinant");
  const auto& prof = g.profile();
  r.result("polynomial", prof.polynomial.to_string('k'));
  r.result("dimension", std::to_string(prof.dimension));
  r.result("degree", to_string(prof.degree));
  r.table("matrix", rows_of(g.matrix()));
  const Rational det = determinant(g.matrix());
  r.result("determinant", to_string(det));
  r.result("numerically_exceptional", numerically_exceptional(g) ? "true" : "false");
  if (g.modulus() != 0) r.result("mod_divides_degree", g.modulus_divides_degree() ? "true" : "false");

  bool law = true;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      Rational expect(prof.polynomial(g.twists()[j] - g.twists()[i]));
      if (g.modulus() != 0) expect = residue(expect, g.modulus());
      law = law && g.entry(i, j) == expect;
    }
  r.check("entry_law", law);

  const auto& t = g.twists();
  if (static_cast<int>(t.size()) == prof.dimension + 1 && is_unit_step(t)) {
    Integer expect;
    mpz_pow_ui(expect.get_mpz_t(), prof.degree.get_mpz_t(), static_cast<unsigned long>(prof.dimension + 1));
    Rational want(expect);
    if (g.modulus() != 0) want = residue(want, g.modulus());
    r.check("det_equals_degree_power", det == want, "deg^(n+1) = " + to_string(want));
  }
  if (args.expect_exceptional) r.check("numerically_exceptional", numerically_exceptional(g));
  return r;
}

Report cmd_detcheck(const DetcheckArgs& args) {
  Report r("detcheck");
  r.input("seed", std::to_string(args.seed));
  r.input("count", std::to_string(args.count));
  r.input("zero_count", std::to_string(args.zero_count));
  r.input("max_degree", std::to_string(args.max_degree));
  r.anchor("det(A_P) = (n! p_n)^(n+1) for integer-valued P of degree n, and 0 for lower degree");
  if (args.max_degree < 1) throw std::invalid_argument("detcheck: max degree must be >= 1");
  std::mt19937_64 rng(args.seed);
  std::string first_failure;
  int ok = 0;
  for (int i = 0; i < args.count; ++i) {
    const int n = static_cast<int>(rng() % static_cast<unsigned>(args.max_degree + 1));
    const auto p = random_int_valued(rng, n);
    const Rational lead = Rational(factorial(static_cast<unsigned>(n))) * p.leading_coefficient();
    Integer want;
    mpz_pow_ui(want.get_mpz_t(), lead.get_num().get_mpz_t(), static_cast<unsigned long>(n + 1));
    if (determinant(gram_of(p, n)) == Rational(want)) ++ok;
    else if (first_failure.empty()) first_failure = p.to_string();
  }
  r.result("full_degree_passed", std::to_string(ok) + "/" + std::to_string(args.count));
  r.check("det_equals_formula", ok == args.count, first_failure);

  int zeros = 0;
  first_failure.clear();
  for (int i = 0; i < args.zero_count; ++i) {
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(args.max_degree));
    const int d = static_cast<int>(rng() % static_cast<unsigned>(n + 1)) - 1;  // -1 .. n-1
    const auto p = random_int_valued(rng, d);
    if (determinant(gram_of(p, n)) == 0) ++zeros;
    else if (first_failure.empty()) first_failure = p.to_string();
  }
  r.result("low_degree_passed", std::to_string(zeros) + "/" + std::to_string(args.zero_count));
  r.check("det_vanishes_below_full_degree", zeros == args.zero_count, first_failure);
  return r;
}

Report cmd_sonb(const SonbArgs& args) {
  Report r("sonb");
  const GramMatrix g = resolve_gram(args.form);
  echo_form(r, args.form, g);
  r.input("workers", std::to_string(args.workers));
  r.input("symmetry", args.use_symmetry ? "serre" : "none");
  r.anchor("semi-orthonormal bases: (e_i,e_i) = 1 and (e_j,e_i) = 0 for j > i");
  r.table("form", rows_of(g.matrix()));
  const sonb::FormSpace space(g.matrix());

  if (g.modulus() == 0) {
    // Over Z only the twist basis itself can be checked.
    const auto basis = sonb::standard_basis(g.size());
    const bool ok = sonb::verify_basis(space, basis);
    r.result("mode", "verify standard basis over Z");
    r.result("outcome", ok ? "found" : "not semi-orthonormal");
    r.check("standard_basis_semi_orthonormal", ok);
    if (args.expect) r.check("outcome_matches_expectation", (*args.expect == "found") == ok, *args.expect);
    return r;
  }

  if (g.modulus_divides_degree()) r.result("note", "p divides the degree; bases over Z need not reduce to this one");
  sonb::SearchOptions opts;
  opts.workers = args.workers;
  const auto cands = sonb::enumerate_candidates(space, opts.enumeration_cap);
  r.result("candidates", std::to_string(cands.vectors.size()));
  if (args.use_symmetry) {
    const SerreOperator s = serre_operator(g);
    opts.symmetry = s.matrix();
    std::vector<std::string> orbit_rows;
    for (const auto& o : sonb::serre_orbits(cands, s.matrix()))
      orbit_rows.push_back(std::to_string(o.size()) + " from " + vec_str(o.front()));
    r.table("serre_orbits", orbit_rows);
  }
  if (args.show_candidates) {
    std::vector<std::string> rows;
    for (const auto& v : cands.vectors) rows.push_back(vec_str(v));
    r.table("candidate_vectors", rows);
    std::vector<std::string> pm;
    for (const auto& row : sonb::pairing_matrix(space, cands.vectors)) pm.push_back(bits(row));
    r.table("pairing_matrix", pm);
  }
  const auto res = sonb::search(space, opts);
  r.result("outcome", res.found() ? "found" : "exhausted");
  r.result("nodes_explored", std::to_string(res.nodes_explored));
  r.result("pool_size_prunes", std::to_string(res.trace.pool_size_prunes));
  r.result("dependent_rejections", std::to_string(res.trace.dependent_rejections));
  r.result("symmetry_skips", std::to_string(res.trace.symmetry_skips));
  if (res.found()) {
    std::vector<std::string> rows;
    for (const auto& v : res.basis()) rows.push_back(vec_str(v));
    r.table("basis", rows);
    r.check("basis_verified", sonb::verify_basis(space, res.basis()));
  }
  if (args.expect) {
    if (*args.expect != "found" && *args.expect != "exhausted")
      throw std::invalid_argument("--expect must be found or exhausted");
    r.check("outcome_matches_expectation", (*args.expect == "found") == res.found(), *args.expect);
  }
  return r;
}

Report cmd_serre(const SerreArgs& args) {
  Report r("serre");
  const GramMatrix g = resolve_gram(args.form);
  echo_form(r, args.form, g);
  r.anchor("Serre operator S = A^-1 A^t with (u,v) = (v,Su)");
  const SerreOperator s = serre_operator(g);
  const ExactMatrix& a = g.matrix();
  const ExactMatrix& m = s.matrix();
  r.table("form", rows_of(a));
  r.table("serre", rows_of(m));
  r.check("A_S_equals_At", a * m == a.transpose());
  r.check("St_A_S_equals_A", m.transpose() * a * m == a);
  const auto order = matrix_order(m, args.bound);
  r.result("order", order ? std::to_string(*order) : "not found within bound");
  r.result("order_bound", std::to_string(args.bound ? *args.bound : default_order_bound(m)));
  return r;
}

Report cmd_lefschetz(const LefschetzArgs& args) {
  using namespace lefschetz;
  Report r("lefschetz");
  r.input("branch", args.branch);
  r.input("k_max", std::to_string(args.k_max));
  r.anchor("holomorphic Lefschetz formula for an order-7 automorphism with three fixed points");
  Branch branch;
  if (args.branch == "principal") branch = Branch::Principal;
  else if (args.branch == "conjugate") branch = Branch::Conjugate;
  else throw std::invalid_argument("branch must be principal or conjugate");
  if (args.k_max < 0) throw std::invalid_argument("k_max must be non-negative");

  std::vector<std::string> sols;
  for (const auto& [a, b] : solve_hlfp0()) sols.push_back("{" + std::to_string(a) + "," + std::to_string(b) + "}");
  r.result("hlfp0_solutions", join(sols, " "));

  const FixedPointDatum d = branch_datum(branch);
  std::vector<std::string> pts;
  for (const auto& [a, b] : d.points()) pts.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
  r.result("fixed_point_exponents", join(pts, " "));
  const CyclotomicElement one(kOrder, Rational(1));
  r.check("untwisted_sum_is_one", lefschetz_sum(d, {0, 0, 0}, 0) == one);

  const auto canon = canonical_trace(d);
  const auto tw = twist_traces(d).exponents;
  r.result("canonical_exponents", join(std::vector<int>(canon.begin(), canon.end()), ","));
  r.result("twist_exponents", join(std::vector<int>(tw.begin(), tw.end()), ","));
  bool integral = true;
  std::vector<std::string> traces;
  for (long k = 0; k <= args.k_max; ++k) {
    const auto t = h0_trace(d, k);
    for (const auto& c : t.coefficients()) integral = integral && is_integer(c);
    traces.push_back("k=" + std::to_string(k) + ": " + symbolic(t));
  }
  r.table("traces", traces);
  r.check("traces_are_algebraic_integers", integral);
  r.check("trace_k0_is_one", h0_trace(d, 0) == one);
  return r;
}

Report cmd_chartable() {
  Report r("chartable");
  r.anchor("conjugacy classes and character table of the non-abelian group of order 21");
  const auto& classes = rep::conjugacy_classes();
  std::vector<std::string> cls;
  std::size_t total = 0;
  for (const auto& c : classes) {
    cls.push_back(c.representative.to_string() + " size " + std::to_string(c.size()));
    total += c.size();
  }
  r.table("classes", cls);
  r.check("class_sizes_sum_to_21", total == 21);

  const auto sols = rep::irrep_dimension_solutions(21, static_cast<int>(classes.size()));
  std::vector<std::string> sol_rows;
  for (const auto& s : sols) sol_rows.push_back(join(s, ","));
  r.table("dimension_solutions", sol_rows);
  r.check("dimensions_unique", sols.size() == 1);
  r.check("no_two_dimensional_irrep", !rep::has_two_dimensional_irrep());

  const auto& table = rep::character_table();
  std::vector<std::string> rows;
  for (const auto& c : table) {
    std::vector<std::string> cells;
    for (const auto& v : c.values) cells.push_back(symbolic(v));
    rows.push_back(c.name + ": " + join(cells, " "));
  }
  r.table("characters", rows);
  r.check("matches_reference_table", table == rep::reference_character_table());
  bool ortho = true;
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j) ortho = ortho && rep::inner_product(table[i], table[j]) == (i == j);
  r.check("row_orthogonality", ortho);
  return r;
}

Report cmd_decompose(const DecomposeArgs& args) {
  Report r("decompose");
  rep::Character chi;
  if (!args.values.empty() && !args.expr.empty()) throw std::invalid_argument("give either --values or --expr");
  if (!args.values.empty()) {
    r.input("values", args.values);
    const auto cells = split(args.values, ',');
    if (cells.size() != 5) throw std::invalid_argument("--values needs five entries (classes 1, s, s^3, t, t^2)");
    chi.name = "chi";
    for (std::size_t i = 0; i < 5; ++i) chi.values[i] = parse_cyclotomic(cells[i]).embed(21);
  } else if (!args.expr.empty()) {
    r.input("expr", args.expr);
    chi = parse_character_expr(args.expr);
  } else {
    throw std::invalid_argument("decompose needs --values or --expr");
  }
  r.anchor("multiplicities of the irreducible characters of G21");
  std::vector<std::string> cells;
  for (const auto& v : chi.values) cells.push_back(symbolic(v));
  r.result("character", join(cells, " "));
  std::array<Rational, 5> m;
  try {
    m = rep::decompose(chi);
  } catch (const std::domain_error&) {
    r.result("decomposition", "inner products are not rational");
    r.check("is_a_character", false);
    return r;
  }
  const auto& table = rep::character_table();
  bool genuine = true;
  for (std::size_t i = 0; i < 5; ++i) {
    r.result("mult." + table[i].name, to_string(m[i]));
    genuine = genuine && is_integer(m[i]) && m[i] >= 0;
  }
  r.result("decomposition", decomposition_string(m));
  r.check("is_a_character", genuine);
  return r;
}

Report cmd_atlas(const AtlasArgs& args) {
  Report r("atlas");
  r.input("data", args.data.filename().string());
  if (args.aut) r.input("aut", *args.aut);
  if (args.three_torsion_free) r.input("three_torsion_free", "true");
  r.anchor("classification table of fake projective planes with Aut(S) and H1(S,Z)");
  const auto records = atlas::ingest_file(args.data);
  r.result("records", std::to_string(records.size()));
  r.result("surfaces", std::to_string(2 * records.size()));

  std::stringstream buf;
  atlas::serialize(records, buf);
  r.check("csv_round_trip", atlas::ingest(buf) == records);
  if (args.count) return r;

  atlas::AtlasQueryResult q = args.aut ? atlas::query_aut(records, *args.aut) : atlas::AtlasQueryResult{records};
  if (args.three_torsion_free)
    std::erase_if(q.records, [](const atlas::FPPRecord& rec) { return !atlas::three_torsion_free(rec); });
  r.result("matched_records", std::to_string(q.records.size()));
  r.result("matched_surfaces", std::to_string(q.surface_count()));
  std::vector<std::string> rows;
  for (const auto& rec : q.records) rows.push_back(record_line(rec));
  r.table("matches", rows);
  if (args.k_phantom) {
    std::vector<std::string> pairs;
    for (const auto& rec : q.records)
      for (const std::string sub : {"Z/7", "G21"})
        if (atlas::k_phantom_eligible(rec, sub)) pairs.push_back(record_label(rec) + " with " + sub);
    r.result("k_phantom_pairs", std::to_string(pairs.size()));
    r.table("k_phantom", pairs);
  }
  return r;
}

namespace {

Report reproduce_wilson() {
  Report r("reproduce wilson");
  r.anchor("Wilson fourfold: no semi-orthonormal basis of the Euler form mod 2");
  const HilbertProfile w = hilbert_wilson();
  std::vector<std::string> values, mod2;
  for (long n = 0; n <= 4; ++n) {
    values.push_back(to_string(w.polynomial(n)));
    mod2.push_back(std::to_string(residue(Rational(w.polynomial(n)), 2)));
  }
  r.result("P(0..4)", join(values, ","));
  r.result("P(0..4)_mod_2", join(mod2, ","));
  r.check("P_values", join(values, ",") == "1,51,376,1426,3876");
  r.check("P_values_mod_2", join(mod2, ",") == "1,1,0,0,0");
  bool duality = true;
  for (long n = 0; n <= 8; ++n) duality = duality && w.polynomial(n) == w.polynomial(-1 - n);
  r.check("serre_duality_P(n)=P(-1-n)", duality);
  r.result("degree", to_string(w.degree));
  r.check("chern_c1c3_is_50", chern_identity(4) == 50);

  const GramMatrix gz = gram_from_twists(w, standard_twists(w));
  const Rational det = determinant(gz.matrix());
  r.result("det_A", to_string(det));
  r.check("det_A_is_225^5", det == Rational(Integer("576650390625")));
  const auto index = lattice_index_squared(gz.matrix());
  r.result("sqrt_det_A", index ? to_string(*index) : "not a square");
  r.check("p=2_admissible", !reduce_mod(gz, 2).modulus_divides_degree() && reduce_mod(gz, 3).modulus_divides_degree() &&
                                reduce_mod(gz, 5).modulus_divides_degree());

  const GramMatrix g = reduce_mod(gz, 2);
  r.table("A_mod_2", rows_of(g.matrix()));
  r.check("A_mod_2_matches_reference", g.matrix() == ExactMatrix::from_rows(kWilsonGramMod2, 2));
  const SerreOperator s = serre_operator(g);
  r.table("S", rows_of(s.matrix()));
  r.check("S_matches_reference", s.matrix() == ExactMatrix::from_rows(kWilsonSerreMod2, 2));
  r.check("St_A_S_equals_A", s.matrix().transpose() * g.matrix() * s.matrix() == g.matrix());
  const auto order = matrix_order(s.matrix());
  r.result("order_S", order ? std::to_string(*order) : "not found");
  r.check("order_S_is_8", order == 8);

  const sonb::FormSpace space(g.matrix());
  const auto cands = sonb::enumerate_candidates(space);
  r.result("candidates", std::to_string(cands.vectors.size()));
  r.check("twelve_candidates", cands.vectors.size() == 12);
  const auto orbits = sonb::serre_orbits(cands, s.matrix());
  std::vector<std::string> orbit_rows;
  std::vector<sonb::Vector> ordered;
  for (const auto& o : orbits) {
    orbit_rows.push_back(std::to_string(o.size()) + " from " + vec_str(o.front()));
    ordered.insert(ordered.end(), o.begin(), o.end());
  }
  r.table("orbits", orbit_rows);
  const bool orbit_shape = orbits.size() == 2 && orbits[0].size() == 8 && orbits[1].size() == 4 &&
                           orbits[0].front() == sonb::Vector{1, 0, 0, 0, 0} &&
                           orbits[1].front() == sonb::Vector{1, 0, 1, 0, 0};
  r.check("orbits_8_and_4", orbit_shape);
  std::vector<std::string> pm;
  for (const auto& row : sonb::pairing_matrix(space, ordered)) pm.push_back(bits(row));
  r.table("pairing_matrix", pm);
  r.check("pairing_matrix_matches_reference", pm == kWilsonPairingMod2);

  const auto plain = sonb::search(space);
  sonb::SearchOptions sym;
  sym.symmetry = s.matrix();
  const auto reduced = sonb::search(space, sym);
  r.result("search_nodes", std::to_string(plain.nodes_explored));
  r.result("search_nodes_with_symmetry", std::to_string(reduced.nodes_explored));
  r.result("search_outcome", plain.found() ? "found" : "exhausted");
  r.check("no_semi_orthonormal_basis", !plain.found() && !reduced.found());
  return r;
}

Report reproduce_keum(const std::filesystem::path& data) {
  using namespace lefschetz;
  Report r("reproduce keum");
  r.anchor("Aut = G21 fake planes: numerical and vanishing checks for the triple O, O(-1), O(-2)");

  const GramMatrix fake = gram_from_twists(hilbert_fake_pn(2), {0, -1, -2});
  r.table("gram_O_O(-1)_O(-2)", rows_of(fake.matrix()));
  r.check("numerically_exceptional", numerically_exceptional(fake));

  const auto sols = solve_hlfp0();
  std::vector<std::string> sol_rows;
  for (const auto& [a, b] : sols) sol_rows.push_back("{" + std::to_string(a) + "," + std::to_string(b) + "}");
  r.result("hlfp0_solutions", join(sol_rows, " "));
  std::set<ExponentPair> expect;
  for (const auto& start : {ExponentPair{1, 3}, ExponentPair{4, 6}})
    for (const auto& pt : FixedPointDatum::from_pair(start.first, start.second).points())
      expect.insert({std::min(pt.first, pt.second), std::max(pt.first, pt.second)});
  r.check("hlfp0_is_two_doubling_orbits", std::set<ExponentPair>(sols.begin(), sols.end()) == expect && sols.size() == 6);

  const FixedPointDatum d = branch_datum(Branch::Principal);
  const auto canon = canonical_trace(d);
  const auto tw = twist_traces(d).exponents;
  r.result("canonical_exponents", join(std::vector<int>(canon.begin(), canon.end()), ","));
  r.result("twist_exponents", join(std::vector<int>(tw.begin(), tw.end()), ","));
  r.check("canonical_exponents_4_1_2", canon == std::array<int, 3>{4, 1, 2});
  r.check("twist_exponents_6_5_3", tw == std::array<int, 3>{6, 5, 3});
  std::vector<std::string> traces;
  for (long k = 0; k <= 6; ++k) traces.push_back("k=" + std::to_string(k) + ": " + symbolic(h0_trace(d, k)));
  r.table("traces", traces);
  const CyclotomicElement bbar = parse_cyclotomic("bbar");
  const CyclotomicElement t4 = h0_trace(d, 4);
  r.result("trace_h0_O(4)", symbolic(t4));
  r.check("trace_k0_is_1", h0_trace(d, 0) == CyclotomicElement(kOrder, Rational(1)));
  r.check("trace_k4_is_bbar", t4 == bbar);
  r.check("conjugate_branch_gives_b", h0_trace(branch_datum(Branch::Conjugate), 4) == parse_cyclotomic("b"));

  const rep::H0Verdict verdict = rep::classify_h0(3, t4);
  r.result("h0_O(4)", rep::to_string(verdict));
  r.check("h0_O(4)_irreducible",
          verdict == rep::H0Verdict::IrreducibleV3 || verdict == rep::H0Verdict::IrreducibleV3bar);
  const rep::Character& target = rep::character_table()[verdict == rep::H0Verdict::IrreducibleV3 ? 3 : 4];

  const auto bound = h0_O2_vanishing(3, false);
  r.result("delta_bound", std::to_string(bound.delta_upper_bound));
  r.check("image_bound_gives_delta_le_2", bound.delta_upper_bound == 2);
  const bool schur = rep::tensor_square_avoids(2, target);
  r.check("schur_multiplication_map_zero", schur);
  const auto chain = h0_O2_vanishing(3, schur);
  r.table("deduction", chain.steps);
  r.check("h0_O(2)_vanishes", chain.delta_is_zero);

  const auto records = atlas::ingest_file(data);
  const auto g21 = atlas::query_aut(records, "G21");
  r.result("g21_records", std::to_string(g21.records.size()));
  r.check("g21_records_three_torsion_free",
          !g21.records.empty() && std::all_of(g21.records.begin(), g21.records.end(), atlas::three_torsion_free));
  return r;
}

Report reproduce_equivariant() {
  Report r("reproduce equivariant");
  r.anchor("3 #IrrRep(G) = chi(Z_G) + r_G for subgroups G of G21");
  using rep::G21Element;
  const std::vector<std::vector<G21Element>> generators{
      {}, {G21Element::tau()}, {G21Element::sigma()}, {G21Element::sigma(), G21Element::tau()}};
  const auto& rows = equivariant_rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    std::vector<std::string> sing;
    for (const auto& s : row.singularities) sing.push_back(s.label());
    const std::string key = "row." + row.group;
    r.result(key, "#Irr=" + std::to_string(row.irrep_count) + " r_G=" + std::to_string(row.r_g) +
                      " chi=" + std::to_string(row.euler_z) + " kappa=" + std::to_string(row.kodaira) +
                      " sing=" + (sing.empty() ? std::string("none") : join(sing, "+")));
    r.check(key + ".identity", equivariant_count_check(row));
    r.check(key + ".r_G_from_singularities", r_g_from_singularities(row) == row.r_g);
    const int classes = static_cast<int>(rep::subgroup_class_count(generators.at(i)));
    r.check(key + ".orbifold_dimension", orbifold_hh_dimension(classes) == 3 * row.irrep_count,
            std::to_string(classes) + " classes");
  }
  return r;
}

}  // namespace

Report cmd_reproduce(const std::string& target, const std::filesystem::path& data) {
  if (target == "wilson") return reproduce_wilson();
  if (target == "keum") return reproduce_keum(data);
  if (target == "equivariant") return reproduce_equivariant();
  throw std::invalid_argument("unknown reproduction target '" + target + "' (expected wilson, keum or equivariant)");
}

}  // namespace minifold::cli
