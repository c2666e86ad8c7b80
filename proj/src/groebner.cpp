#include "skewrank/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace skewrank {

Ideal::Ideal(Ring r, std::vector<Form> gens) : ring(std::move(r)), generators(std::move(gens)) {
  for (const auto& g : generators)
    if (!g.is_zero() && !same_ring(g.ring(), ring)) throw std::invalid_argument("ideal generator in a different ring");
}

bool Ideal::is_zero() const {
  return std::all_of(generators.begin(), generators.end(), [](const Form& f) { return f.is_zero(); });
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : basis) out.push_back(g.leading_term().first);
  return out;
}

namespace {

// Exponent vectors packed one byte per variable, variable 0 in the lowest
// byte. Exponents stay below 128 so the top bit of each byte is a guard.
using Exp = std::uint64_t;
constexpr std::size_t kMaxVars = 8;
constexpr Exp kGuard = 0x8080808080808080ULL;

inline bool exp_divides(Exp a, Exp b) { return (((b | kGuard) - a) & kGuard) == kGuard; }

inline Exp exp_mul(Exp a, Exp b) {
  const Exp s = a + b;
  if (s & kGuard) throw std::overflow_error("groebner: exponent exceeds 127");
  return s;
}

inline Exp exp_lcm(Exp a, Exp b) {
  Exp out = 0;
  for (unsigned k = 0; k < 64; k += 8) out |= std::max((a >> k) & 0xff, (b >> k) & 0xff) << k;
  return out;
}

inline bool exp_coprime(Exp a, Exp b) {
  for (unsigned k = 0; k < 64; k += 8)
    if (((a >> k) & 0xff) && ((b >> k) & 0xff)) return false;
  return true;
}

inline unsigned exp_degree(Exp a) {
  unsigned d = 0;
  for (unsigned k = 0; k < 64; k += 8) d += static_cast<unsigned>((a >> k) & 0xff);
  return d;
}

// Within one degree, a larger packed value is a smaller degrevlex monomial.
inline bool exp_greater(Exp a, Exp b) {
  const unsigned da = exp_degree(a), db = exp_degree(b);
  if (da != db) return da > db;
  return a < b;
}

struct Term {
  Exp e;
  mpz_class c;
};

// Homogeneous polynomial with integer coefficients, terms in decreasing order.
using Poly = std::vector<Term>;

Exp pack(const Monomial& m) {
  Exp e = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 127) throw std::overflow_error("groebner: exponent exceeds 127");
    e |= static_cast<Exp>(m[i]) << (8 * i);
  }
  return e;
}

Monomial unpack(Exp e, std::size_t n) {
  std::vector<unsigned> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<unsigned>((e >> (8 * i)) & 0xff);
  return Monomial(std::move(v));
}

void make_primitive(Poly& p) {
  if (p.empty()) return;
  mpz_class g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().c < 0) g = -g;
  if (g != 1)
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

Poly to_poly(const Form& f) {
  Poly p;
  mpz_class den = 1;
  for (const auto& [m, c] : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
  for (const auto& [m, c] : f.terms()) p.push_back({pack(m), (c * Rational(den)).numerator()});
  std::sort(p.begin(), p.end(), [](const Term& x, const Term& y) { return x.e < y.e; });
  make_primitive(p);
  return p;
}

Form to_monic_form(const Poly& p, const Ring& ring) {
  std::vector<Form::Term> terms;
  const mpz_class& lc = p.front().c;
  for (const auto& t : p) terms.emplace_back(unpack(t.e, ring->size()), Rational(t.c, lc));
  return Form(ring, std::move(terms));
}

// out = a*p[from..] - b*(m*g)[1..], everything of one degree.
void axpy_tail(Poly& out, const mpz_class& a, const Poly& p, std::size_t from, const mpz_class& b, Exp m,
               const Poly& g) {
  std::size_t i = from, j = 1;
  const bool scale = a != 1;
  while (i < p.size() || j < g.size()) {
    const Exp ge = j < g.size() ? g[j].e + m : 0;
    if (j == g.size() || (i < p.size() && p[i].e < ge)) {
      out.push_back({p[i].e, scale ? mpz_class(a * p[i].c) : p[i].c});
      ++i;
    } else if (i == p.size() || ge < p[i].e) {
      out.push_back({ge, -b * g[j].c});
      ++j;
    } else {
      mpz_class c = scale ? mpz_class(a * p[i].c) : p[i].c;
      mpz_submul(c.get_mpz_t(), b.get_mpz_t(), g[j].c.get_mpz_t());
      if (c != 0) out.push_back({ge, std::move(c)});
      ++i;
      ++j;
    }
  }
}

class Engine {
 public:
  explicit Engine(std::size_t nvars) : n_(nvars) {}

  std::vector<Poly> polys;
  std::vector<bool> active;
  GroebnerStats stats;

  const Poly* find_reducer(Exp e, std::size_t skip) const {
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k] && k != skip && exp_divides(polys[k].front().e, e)) return &polys[k];
    return nullptr;
  }

  // Full reduction; `from` is the first position allowed to change.
  void reduce(Poly& p, std::size_t from = 0, std::size_t skip = SIZE_MAX) const {
    std::size_t pos = from;
    unsigned steps = 0;
    while (pos < p.size()) {
      const Poly* g = find_reducer(p[pos].e, skip);
      if (!g) {
        ++pos;
        continue;
      }
      const mpz_class& lc = g->front().c;
      mpz_class gg;
      mpz_gcd(gg.get_mpz_t(), lc.get_mpz_t(), p[pos].c.get_mpz_t());
      const mpz_class a = lc / gg;
      const mpz_class b = p[pos].c / gg;
      const Exp m = p[pos].e - g->front().e;
      Poly next;
      next.reserve(p.size() + g->size());
      for (std::size_t k = 0; k < pos; ++k) next.push_back({p[k].e, a == 1 ? p[k].c : mpz_class(a * p[k].c)});
      axpy_tail(next, a, p, pos + 1, b, m, *g);
      p = std::move(next);
      if (++steps % 8 == 0) make_primitive(p);
    }
    make_primitive(p);
  }

  Poly spoly(const Poly& f, const Poly& g) const {
    const Exp l = exp_lcm(f.front().e, g.front().e);
    mpz_class gg;
    mpz_gcd(gg.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    const mpz_class a = g.front().c / gg;
    const mpz_class b = f.front().c / gg;
    Poly fm;
    fm.reserve(f.size());
    const Exp mf = l - f.front().e;
    for (const auto& t : f) fm.push_back({exp_mul(t.e, mf), t.c});
    Poly out;
    axpy_tail(out, a, fm, 1, b, exp_mul(0, l - g.front().e), g);
    make_primitive(out);
    return out;
  }

  struct Pair {
    std::size_t i, j;
    Exp lcm;
    unsigned deg;
  };
  std::vector<Pair> pairs;

  void update(std::size_t h) {
    const Exp lh = polys[h].front().e;
    std::vector<std::size_t> c;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k] && k != h) c.push_back(k);
    std::vector<std::size_t> d;
    for (std::size_t idx = 0; idx < c.size(); ++idx) {
      const Exp lg = polys[c[idx]].front().e;
      const Exp l1 = exp_lcm(lh, lg);
      bool keep = exp_coprime(lh, lg);
      if (!keep) {
        keep = true;
        for (std::size_t r = idx + 1; r < c.size() && keep; ++r)
          if (exp_divides(exp_lcm(lh, polys[c[r]].front().e), l1)) keep = false;
        for (std::size_t r = 0; r < d.size() && keep; ++r)
          if (exp_divides(exp_lcm(lh, polys[d[r]].front().e), l1)) keep = false;
      }
      if (keep) d.push_back(c[idx]);
    }
    std::vector<Pair> kept;
    for (const auto& p : pairs) {
      const bool drop = exp_divides(lh, p.lcm) && exp_lcm(polys[p.i].front().e, lh) != p.lcm &&
                        exp_lcm(polys[p.j].front().e, lh) != p.lcm;
      if (!drop) kept.push_back(p);
    }
    for (std::size_t g : d) {
      const Exp lg = polys[g].front().e;
      if (exp_coprime(lh, lg)) continue;
      const Exp l = exp_lcm(lh, lg);
      kept.push_back({g, h, l, exp_degree(l)});
    }
    pairs = std::move(kept);
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k] && k != h && exp_divides(lh, polys[k].front().e)) active[k] = false;
    active[h] = true;
  }

  void insert(Poly p) {
    polys.push_back(std::move(p));
    active.push_back(false);
    update(polys.size() - 1);
  }

  void run(std::vector<Poly> inputs) {
    std::stable_sort(inputs.begin(), inputs.end(), [](const Poly& x, const Poly& y) {
      return exp_greater(y.front().e, x.front().e);
    });
    std::size_t next_input = 0;
    while (next_input < inputs.size() || !pairs.empty()) {
      unsigned pair_deg = std::numeric_limits<unsigned>::max();
      std::size_t best = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& p = pairs[k];
        const auto& b = pairs[best];
        if (p.deg < pair_deg || (p.deg == pair_deg && (p.lcm > b.lcm || (p.lcm == b.lcm && (p.i < b.i ||
                                                                                           (p.i == b.i && p.j < b.j)))))) {
          pair_deg = p.deg;
          best = k;
        }
      }
      Poly h;
      if (next_input < inputs.size() && exp_degree(inputs[next_input].front().e) <= pair_deg) {
        h = std::move(inputs[next_input++]);
      } else {
        const Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));
        ++stats.pairs_considered;
        h = spoly(polys[p.i], polys[p.j]);
        ++stats.pairs_reduced;
      }
      reduce(h);
      if (h.empty()) {
        ++stats.zero_reductions;
        continue;
      }
      insert(std::move(h));
    }
  }

  std::vector<Poly> reduced_basis() {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) idx.push_back(k);
    std::vector<Poly> out;
    for (std::size_t k : idx) {
      Poly p = polys[k];
      reduce(p, 1, k);
      out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) { return exp_greater(x.front().e, y.front().e); });
    return out;
  }

 private:
  std::size_t n_;
};

void check_homogeneous_ideal(const Ideal& ideal) {
  if (!ideal.ring) throw std::invalid_argument("ideal without a ring");
  if (ideal.ring->size() > kMaxVars) throw std::invalid_argument("groebner: at most 8 variables supported");
  for (const auto& g : ideal.generators)
    if (!g.is_homogeneous()) throw std::invalid_argument("groebner: non-homogeneous generator " + g.str());
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal) {
  check_homogeneous_ideal(ideal);
  Engine engine(ideal.ring->size());
  std::vector<Poly> inputs;
  for (const auto& g : ideal.generators)
    if (!g.is_zero()) inputs.push_back(to_poly(g));
  engine.run(std::move(inputs));
  GroebnerBasis gb;
  gb.ideal = ideal;
  gb.stats = engine.stats;
  for (const auto& p : engine.reduced_basis()) gb.basis.push_back(to_monic_form(p, ideal.ring));
  return gb;
}

Form normal_form(const Form& f, const GroebnerBasis& g) {
  if (!f.is_zero() && !same_ring(f.ring(), g.ideal.ring)) throw std::invalid_argument("normal_form: ring mismatch");
  Form p = f.is_zero() ? Form(g.ideal.ring) : f;
  std::vector<Form::Term> rem;
  while (!p.is_zero()) {
    const auto [m, c] = p.leading_term();
    const Form* reducer = nullptr;
    for (const auto& b : g.basis)
      if (b.leading_term().first.divides(m)) {
        reducer = &b;
        break;
      }
    if (!reducer) {
      rem.emplace_back(m, c);
      p -= Form(p.ring(), {{m, c}});
      continue;
    }
    const auto& [bm, bc] = reducer->leading_term();
    std::vector<unsigned> q(m.size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = m[i] - bm[i];
    p -= Form(p.ring(), {{Monomial(std::move(q)), c / bc}}) * *reducer;
  }
  return Form(g.ideal.ring, std::move(rem));
}

Form s_polynomial(const Form& f, const Form& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of zero form");
  const auto& [fm, fc] = f.leading_term();
  const auto& [gm, gc] = g.leading_term();
  std::vector<unsigned> l(fm.size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = std::max(fm[i], gm[i]);
  std::vector<unsigned> mf(l.size()), mg(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    mf[i] = l[i] - fm[i];
    mg[i] = l[i] - gm[i];
  }
  return Form(f.ring(), {{Monomial(std::move(mf)), fc.inverse()}}) * f -
         Form(g.ring(), {{Monomial(std::move(mg)), gc.inverse()}}) * g;
}

bool is_projectively_empty(const GroebnerBasis& g) {
  const std::size_t n = g.ideal.ring->size();
  std::vector<bool> has_power(n, false);
  for (const auto& m : g.leading_monomials()) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) {
        ++support;
        var = i;
      }
    if (support == 0) return true;  // unit ideal
    if (support == 1) has_power[var] = true;
  }
  return std::all_of(has_power.begin(), has_power.end(), [](bool b) { return b; });
}

bool is_projectively_empty(const Ideal& ideal) {
  if (ideal.is_zero()) return false;
  return is_projectively_empty(buchberger(ideal));
}

int projective_dimension(const GroebnerBasis& g) {
  const std::size_t n = g.ideal.ring->size();
  std::vector<Exp> lts;
  for (const auto& m : g.leading_monomials()) lts.push_back(pack(m));
  int krull = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    const int size = __builtin_popcount(subset);
    if (size <= krull) continue;
    Exp allowed = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (subset & (1u << i)) allowed |= Exp{0xff} << (8 * i);
    const bool independent = std::none_of(lts.begin(), lts.end(), [&](Exp e) { return (e & ~allowed) == 0; });
    if (independent) krull = size;
  }
  return krull - 1;
}

std::vector<long> hilbert_function(const GroebnerBasis& g, unsigned max_degree) {
  const std::size_t n = g.ideal.ring->size();
  std::vector<Exp> lts;
  for (const auto& m : g.leading_monomials()) lts.push_back(pack(m));
  std::vector<long> values;
  for (unsigned t = 0; t <= max_degree; ++t) {
    long count = 0;
    auto rec = [&](auto&& self, std::size_t var, unsigned left, Exp e) -> void {
      if (var + 1 == n) {
        const Exp full = e | (static_cast<Exp>(left) << (8 * var));
        if (std::none_of(lts.begin(), lts.end(), [&](Exp l) { return exp_divides(l, full); })) ++count;
        return;
      }
      for (unsigned k = 0; k <= left; ++k) self(self, var + 1, left - k, e | (static_cast<Exp>(k) << (8 * var)));
    };
    if (t > 127) throw std::overflow_error("hilbert_function: degree too large");
    rec(rec, 0, t, 0);
    values.push_back(count);
  }
  return values;
}

HilbertData hilbert_data(const GroebnerBasis& g) {
  HilbertData out;
  out.dimension = projective_dimension(g);
  unsigned max_deg = 1;
  for (const auto& f : g.ideal.generators) max_deg = std::max(max_deg, static_cast<unsigned>(std::max(f.degree(), 0)));
  for (const auto& f : g.basis) max_deg = std::max(max_deg, static_cast<unsigned>(f.degree()));
  const unsigned window = 2 * max_deg * static_cast<unsigned>(g.ideal.ring->size());
  out.values = hilbert_function(g, window);
  std::vector<long> diff = out.values;
  for (int k = 0; k < std::max(out.dimension, 0); ++k) {
    std::vector<long> next(diff.size(), 0);
    for (std::size_t t = 0; t < diff.size(); ++t) next[t] = diff[t] - (t > 0 ? diff[t - 1] : 0);
    diff = std::move(next);
  }
  const std::size_t m = diff.size();
  out.stabilized = m >= 3 && diff[m - 1] == diff[m - 2] && diff[m - 2] == diff[m - 3];
  out.degree = out.dimension < 0 ? 0 : diff.back();
  return out;
}

WrongDimension::WrongDimension(int e, int f)
    : std::runtime_error("scheme has projective dimension " + std::to_string(f) + ", expected " + std::to_string(e)),
      expected(e),
      found(f) {}

long projective_degree(const Ideal& ideal, int expected_dim) {
  const auto gb = buchberger(ideal);
  const auto data = hilbert_data(gb);
  if (data.dimension == -1 && expected_dim == 0) return 0;
  if (data.dimension != expected_dim) throw WrongDimension(expected_dim, data.dimension);
  return data.degree;
}

}  // namespace skewrank
