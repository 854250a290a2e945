#include "minifold/sonb.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace minifold::sonb {

FormSpace::FormSpace(const ExactMatrix& form) : form_(form), modulus_(form.modulus()), rows_(form.to_long_rows()) {
  if (form.size() == 0) throw std::invalid_argument("FormSpace: dimension must be positive");
}

long FormSpace::pair(const Vector& u, const Vector& v) const {
  const std::size_t n = dimension();
  if (u.size() != n || v.size() != n) throw std::invalid_argument("pair: vector dimension mismatch");
  Integer acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) row += Integer(rows_[i][j]) * v[j];
    acc += Integer(u[i]) * row;
  }
  if (modulus_ != 0) {
    acc %= modulus_;
    if (acc < 0) acc += modulus_;
  }
  if (!acc.fits_slong_p()) throw std::overflow_error("pair: value does not fit in a long");
  return acc.get_si();
}

std::optional<std::uint64_t> FormSpace::vector_count() const {
  if (modulus_ == 0) return std::nullopt;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(modulus_))
      return std::numeric_limits<std::uint64_t>::max();
    total *= static_cast<std::uint64_t>(modulus_);
  }
  return total;
}

std::uint64_t encode(const Vector& v, long p) {
  std::uint64_t code = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * static_cast<std::uint64_t>(p) + mod_normalize(*it, p);
  return code;
}

Vector decode(std::uint64_t code, long p, std::size_t dimension) {
  Vector v(dimension);
  for (std::size_t i = 0; i < dimension; ++i) {
    v[i] = static_cast<long>(code % static_cast<std::uint64_t>(p));
    code /= static_cast<std::uint64_t>(p);
  }
  return v;
}

Vector apply(const ExactMatrix& a, const Vector& x) {
  const std::size_t n = a.size();
  if (x.size() != n) throw std::invalid_argument("apply: dimension mismatch");
  Vector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
    if (a.modulus() != 0) {
      y[i] = residue(s, a.modulus());
    } else {
      if (!is_integer(s) || !s.get_num().fits_slong_p()) throw std::domain_error("apply: non-integral image");
      y[i] = s.get_num().get_si();
    }
  }
  return y;
}

Vector standard_basis_vector(std::size_t dimension, std::size_t i) {
  Vector v(dimension, 0);
  v.at(i) = 1;
  return v;
}

std::vector<Vector> standard_basis(std::size_t dimension) {
  std::vector<Vector> b;
  for (std::size_t i = 0; i < dimension; ++i) b.push_back(standard_basis_vector(dimension, i));
  return b;
}

namespace {

// Dense small-integer view of a form over F_p used by the hot loops.
struct PackedForm {
  long p = 0;
  std::size_t n = 0;
  std::vector<std::vector<long>> a;

  explicit PackedForm(const FormSpace& space)
      : p(space.modulus()), n(space.dimension()), a(space.form().to_long_rows()) {}
};

void check_enumerable(const FormSpace& space, std::uint64_t cap) {
  if (space.modulus() == 0) throw std::invalid_argument("enumeration requires a finite modulus");
  if (space.dimension() > 63 || *space.vector_count() > cap)
    throw std::length_error("enumeration cap exceeded: p^n = " + std::to_string(space.modulus()) + "^" +
                            std::to_string(space.dimension()));
}

// Candidate storage: coordinates and the dual vector A x for every
// candidate, flattened.
struct Candidates {
  std::size_t n = 0;
  long p = 0;
  std::vector<std::uint64_t> codes;
  std::vector<std::uint8_t> coords;
  std::vector<std::uint8_t> duals;        // (A x), so (y, x) = <y, A x>
  std::vector<std::uint64_t> dual_masks;  // p == 2 only; codes double as bit masks

  std::size_t size() const { return codes.size(); }
  const std::uint8_t* x(std::size_t i) const { return coords.data() + i * n; }
  const std::uint8_t* dual(std::size_t i) const { return duals.data() + i * n; }

  // (y, x) with y = candidate i, x = candidate j
  long pair(std::size_t i, std::size_t j) const {
    if (p == 2) return std::popcount(codes[i] & dual_masks[j]) & 1;
    long s = 0;
    const std::uint8_t* y = x(i);
    const std::uint8_t* d = dual(j);
    for (std::size_t k = 0; k < n; ++k) s += static_cast<long>(y[k]) * d[k];
    return s % p;
  }
};

Candidates build_candidates(const FormSpace& space, std::uint64_t cap) {
  check_enumerable(space, cap);
  const PackedForm f(space);
  Candidates c;
  c.n = f.n;
  c.p = f.p;
  const std::uint64_t total = *space.vector_count();
  Vector x(f.n, 0);
  std::vector<long> ax(f.n);
  for (std::uint64_t code = 1; code < total; ++code) {
    // increment x in base p, least significant coordinate first
    for (std::size_t k = 0; k < f.n; ++k) {
      if (++x[k] < f.p) break;
      x[k] = 0;
    }
    long self = 0;
    for (std::size_t i = 0; i < f.n; ++i) {
      long s = 0;
      for (std::size_t j = 0; j < f.n; ++j) s += f.a[i][j] * x[j];
      ax[i] = s % f.p;
      self += x[i] * ax[i];
    }
    if (self % f.p != 1) continue;
    c.codes.push_back(code);
    for (std::size_t k = 0; k < f.n; ++k) {
      c.coords.push_back(static_cast<std::uint8_t>(x[k]));
      c.duals.push_back(static_cast<std::uint8_t>(ax[k]));
    }
    if (f.p == 2) {
      std::uint64_t m = 0;
      for (std::size_t k = 0; k < f.n; ++k)
        if (ax[k]) m |= std::uint64_t{1} << k;
      c.dual_masks.push_back(m);
    }
  }
  return c;
}

// Row-echelon basis over F_p for incremental independence tests.
class Echelon {
 public:
  Echelon(std::size_t n, long p) : n_(n), p_(p) {}

  bool insert(const std::uint8_t* v) {
    std::vector<long> w(v, v + n_);
    for (const auto& [pivot, row] : rows_) {
      if (w[pivot] == 0) continue;
      const long f = w[pivot];
      for (std::size_t k = 0; k < n_; ++k) w[k] = mod_normalize(w[k] - f * row[k], p_);
    }
    auto it = std::find_if(w.begin(), w.end(), [](long t) { return t != 0; });
    if (it == w.end()) return false;
    const auto pivot = static_cast<std::size_t>(it - w.begin());
    const long inv = mod_inverse(w[pivot], p_);
    for (auto& t : w) t = (t * inv) % p_;
    rows_.emplace_back(pivot, std::move(w));
    return true;
  }

  void pop() { rows_.pop_back(); }

 private:
  std::size_t n_;
  long p_;
  std::vector<std::pair<std::size_t, std::vector<long>>> rows_;
};

struct Worker {
  const Candidates& c;
  std::size_t n;
  std::uint64_t nodes = 0;
  SearchTrace trace;
  std::vector<std::size_t> chosen;
  Echelon echelon;

  Worker(const Candidates& cands, std::size_t dim) : c(cands), n(dim), echelon(dim, cands.p) {}

  // Explores the subtree below `chosen`, whose admissible continuations are
  // `pool`. Returns true once a full basis sits in `chosen`.
  bool descend(const std::vector<std::uint32_t>& pool) {
    if (chosen.size() == n) return true;
    if (pool.size() < n - chosen.size()) {
      ++trace.pool_size_prunes;
      return false;
    }
    for (std::uint32_t idx : pool) {
      if (place(idx, pool)) return true;
    }
    return false;
  }

  bool place(std::uint32_t idx, const std::vector<std::uint32_t>& pool) {
    ++nodes;
    if (!echelon.insert(c.x(idx))) {
      ++trace.dependent_rejections;
      return false;
    }
    chosen.push_back(idx);
    std::vector<std::uint32_t> next;
    next.reserve(pool.size());
    for (std::uint32_t y : pool)
      if (c.pair(y, idx) == 0) next.push_back(y);
    if (descend(next)) return true;
    chosen.pop_back();
    echelon.pop();
    return false;
  }
};

std::vector<bool> orbit_representatives(const Candidates& c, const FormSpace& space, const ExactMatrix& s) {
  CandidateSet set;
  for (std::size_t i = 0; i < c.size(); ++i) set.vectors.push_back(decode(c.codes[i], c.p, c.n));
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < c.size(); ++i) index.emplace(c.codes[i], i);
  std::vector<bool> rep(c.size(), false);
  for (const auto& orbit : serre_orbits(set, s)) rep[index.at(encode(orbit.front(), space.modulus()))] = true;
  return rep;
}

}  // namespace

CandidateSet enumerate_candidates(const FormSpace& space, std::uint64_t cap) {
  const Candidates c = build_candidates(space, cap);
  CandidateSet out;
  out.vectors.reserve(c.size());
  for (std::uint64_t code : c.codes) out.vectors.push_back(decode(code, c.p, c.n));
  return out;
}

std::vector<Orbit> serre_orbits(const CandidateSet& cands, const ExactMatrix& s) {
  if (cands.vectors.empty()) return {};
  const long p = s.modulus();
  if (p == 0) throw std::invalid_argument("serre_orbits: operator must be over F_p");
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < cands.vectors.size(); ++i) index.emplace(encode(cands.vectors[i], p), i);
  std::vector<std::size_t> order(cands.vectors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return encode(cands.vectors[a], p) < encode(cands.vectors[b], p);
  });
  std::vector<bool> seen(cands.vectors.size(), false);
  std::vector<Orbit> orbits;
  for (std::size_t start : order) {
    if (seen[start]) continue;
    Orbit orbit;
    Vector x = cands.vectors[start];
    for (;;) {
      auto it = index.find(encode(x, p));
      if (it == index.end()) throw std::logic_error("serre_orbits: operator does not preserve the candidate set");
      if (seen[it->second]) {
        if (it->second != start) throw std::logic_error("serre_orbits: operator is not a permutation of candidates");
        break;
      }
      seen[it->second] = true;
      orbit.push_back(x);
      x = sonb::apply(s, x);
    }
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

std::vector<std::vector<long>> pairing_matrix(const FormSpace& space, const std::vector<Vector>& vectors) {
  std::vector<std::vector<long>> m(vectors.size(), std::vector<long>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) m[i][j] = space.pair(vectors[i], vectors[j]);
  return m;
}

SonbResult search(const FormSpace& space, const SearchOptions& options) {
  if (space.modulus() == 0) throw std::invalid_argument("search: requires a finite modulus");
  const Candidates c = build_candidates(space, options.enumeration_cap);
  const std::size_t n = space.dimension();

  SonbResult result{Exhausted{}, 0, {}};
  result.trace.candidates = c.size();
  // A semi-orthonormal basis has unitriangular Gram matrix, so A must be
  // invertible.
  if (determinant(space.form()) == 0) {
    result.trace.singular_form = true;
    return result;
  }

  std::vector<std::uint32_t> root(c.size());
  for (std::uint32_t i = 0; i < root.size(); ++i) root[i] = i;

  std::vector<std::uint32_t> firsts;
  if (options.symmetry) {
    const auto rep = orbit_representatives(c, space, *options.symmetry);
    for (std::uint32_t i : root) {
      if (rep[i]) firsts.push_back(i);
      else ++result.trace.symmetry_skips;
    }
  } else {
    firsts = root;
  }
  if (c.size() < n) {
    ++result.trace.pool_size_prunes;
    return result;
  }

  // One subtree per admissible first vector; merge in candidate order so the
  // answer matches a sequential scan.
  struct Slot {
    bool done = false;
    bool found = false;
    std::uint64_t nodes = 0;
    SearchTrace trace;
    std::vector<std::size_t> chosen;
  };
  std::vector<Slot> slots(firsts.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{firsts.size()};

  auto run = [&]() {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= firsts.size() || k > best.load()) return;
      Worker w(c, n);
      Slot& slot = slots[k];
      slot.found = w.place(firsts[k], root);
      slot.nodes = w.nodes;
      slot.trace = w.trace;
      slot.chosen = w.chosen;
      slot.done = true;
      if (slot.found) {
        std::size_t cur = best.load();
        while (k < cur && !best.compare_exchange_weak(cur, k)) {
        }
      }
    }
  };

  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run);
  }

  for (std::size_t k = 0; k < slots.size(); ++k) {
    const Slot& s = slots[k];
    result.nodes_explored += s.nodes;
    result.trace.pool_size_prunes += s.trace.pool_size_prunes;
    result.trace.dependent_rejections += s.trace.dependent_rejections;
    if (s.found) {
      std::vector<Vector> basis;
      for (std::size_t idx : s.chosen) basis.push_back(decode(c.codes[idx], c.p, c.n));
      result.outcome = Found{std::move(basis)};
      return result;
    }
    if (!s.done) throw std::logic_error("search: unfinished subtree before the first success");
  }
  return result;
}

bool is_semi_orthonormal(const FormSpace& space, const std::vector<Vector>& vectors) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != space.dimension()) return false;
    if (space.pair(vectors[i], vectors[i]) != 1) return false;
    for (std::size_t j = i + 1; j < vectors.size(); ++j)
      if (space.pair(vectors[j], vectors[i]) != 0) return false;
  }
  return true;
}

bool verify_basis(const FormSpace& space, const std::vector<Vector>& basis) {
  const std::size_t n = space.dimension();
  if (basis.size() != n || !is_semi_orthonormal(space, basis)) return false;
  std::vector<std::vector<long>> columns(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) columns[i][j] = basis[j][i];
  return determinant(ExactMatrix::from_rows(columns, space.modulus())) != 0;
}

namespace {

Vector combine(const Vector& a, const Vector& b, long coeff, long p) {
  Vector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const long v = a[k] + coeff * b[k];
    out[k] = p == 0 ? v : mod_normalize(v, p);
  }
  return out;
}

void check_mutation_input(const std::vector<Vector>& basis, std::size_t i, const FormSpace& space) {
  if (basis.size() < 2 || i + 1 >= basis.size())
    throw std::invalid_argument("mutate: position out of range");
  if (!is_semi_orthonormal(space, basis)) throw std::invalid_argument("mutate: input is not semi-orthonormal");
}

}  // namespace

std::vector<Vector> mutate(const std::vector<Vector>& basis, std::size_t i, const FormSpace& space) {
  check_mutation_input(basis, i, space);
  const long c = space.pair(basis[i], basis[i + 1]);
  std::vector<Vector> out(basis);
  out[i] = basis[i + 1];
  out[i + 1] = combine(basis[i], basis[i + 1], -c, space.modulus());
  return out;
}

std::vector<Vector> mutate_inverse(const std::vector<Vector>& basis, std::size_t i, const FormSpace& space) {
  check_mutation_input(basis, i, space);
  const long c = space.pair(basis[i], basis[i + 1]);
  std::vector<Vector> out(basis);
  out[i] = combine(basis[i + 1], basis[i], -c, space.modulus());
  out[i + 1] = basis[i];
  return out;
}

}  // namespace minifold::sonb
