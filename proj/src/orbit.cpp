#include "skewrank/orbit.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace skewrank {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [k, c] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& [k, c] : row) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// a*x - b*y, dropping the common leading key.
SparseRow combine(const mpz_class& a, const SparseRow& x, const mpz_class& b, const SparseRow& y) {
  SparseRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 1, j = 1;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      mpz_class c = a * x[i].second;
      mpz_submul(c.get_mpz_t(), b.get_mpz_t(), y[j].second.get_mpz_t());
      if (c != 0) out.emplace_back(x[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

using ModRow = std::vector<std::pair<u64, u64>>;

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 random_prime62(u64 seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    const u64 x = (rng() >> 2) | (u64{1} << 61) | 1;
    if (is_prime_u64(x)) return x;
  }
}

long rank_exact(const std::vector<SparseRow>& rows) {
  std::map<u64, SparseRow> pivots;
  for (SparseRow r : rows) {
    std::erase_if(r, [](const auto& t) { return t.second == 0; });
    make_primitive(r);
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        pivots.emplace(r.front().first, std::move(r));
        break;
      }
      const SparseRow& piv = it->second;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), piv.front().second.get_mpz_t(), r.front().second.get_mpz_t());
      const mpz_class a = piv.front().second / g;
      const mpz_class b = r.front().second / g;
      r = combine(a, r, b, piv);
      make_primitive(r);
    }
  }
  return static_cast<long>(pivots.size());
}

long rank_modular(const std::vector<SparseRow>& rows, u64 p) {
  std::map<u64, ModRow> pivots;  // leading coefficient normalized to 1
  for (const auto& src : rows) {
    ModRow r;
    for (const auto& [k, c] : src) {
      const u64 v = mpz_fdiv_ui(c.get_mpz_t(), p);
      if (v) r.emplace_back(k, v);
    }
    while (!r.empty()) {
      auto it = pivots.find(r.front().first);
      if (it == pivots.end()) {
        const u64 inv = powmod(r.front().second, p - 2, p);
        for (auto& t : r) t.second = mulmod(t.second, inv, p);
        pivots.emplace(r.front().first, std::move(r));
        break;
      }
      const ModRow& piv = it->second;
      const u64 f = r.front().second;
      ModRow out;
      out.reserve(r.size() + piv.size());
      std::size_t i = 1, j = 1;
      while (i < r.size() || j < piv.size()) {
        if (j == piv.size() || (i < r.size() && r[i].first < piv[j].first)) {
          out.push_back(r[i++]);
        } else {
          const u64 sub = mulmod(f, piv[j].second, p);
          if (i == r.size() || piv[j].first < r[i].first) {
            out.emplace_back(piv[j].first, p - sub);
          } else {
            const u64 v = r[i].second >= sub ? r[i].second - sub : r[i].second + (p - sub);
            if (v) out.emplace_back(piv[j].first, v);
            ++i;
          }
          ++j;
        }
      }
      r = std::move(out);
    }
  }
  return static_cast<long>(pivots.size());
}

namespace {

using IntVector = std::vector<std::pair<std::uint32_t, mpz_class>>;  // pair index -> value

// Sparse wedge product of d vectors in the exterior square, keyed by the
// sorted d-tuple of pair indices packed 16 bits each.
void wedge_accumulate(const std::vector<const IntVector*>& vs, std::unordered_map<u64, mpz_class>& acc) {
  const std::size_t d = vs.size();
  std::vector<std::uint32_t> chosen(d);
  std::vector<const mpz_class*> coeffs(d);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == d) {
      std::vector<std::uint32_t> sorted = chosen;
      int inversions = 0;
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = x + 1; y < d; ++y)
          if (sorted[x] > sorted[y]) ++inversions;
      std::sort(sorted.begin(), sorted.end());
      u64 key = 0;
      for (auto s : sorted) key = (key << 16) | s;
      mpz_class prod = *coeffs[0];
      for (std::size_t x = 1; x < d; ++x) prod *= *coeffs[x];
      if (inversions % 2) prod = -prod;
      acc[key] += prod;
      return;
    }
    for (const auto& [idx, c] : *vs[k]) {
      bool used = false;
      for (std::size_t x = 0; x < k && !used; ++x) used = chosen[x] == idx;
      if (used) continue;
      chosen[k] = idx;
      coeffs[k] = &c;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<SparseRow> tangent_rows(const SkewPolyMatrix& a) {
  const std::size_t n = a.order();
  const std::size_t d = a.nvars();
  const std::size_t npairs = n * (n - 1) / 2;
  if (npairs >= 65536 || d > 4) throw std::invalid_argument("tangent_rows: matrix too large for packed coordinates");
  auto pair_index = [n](std::size_t i, std::size_t j) {
    return static_cast<std::uint32_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
  };

  // Integer generators: each coefficient matrix with denominators cleared.
  std::vector<std::vector<std::vector<mpz_class>>> b(d, std::vector<std::vector<mpz_class>>(n, std::vector<mpz_class>(n, 0)));
  const auto basis = a.coefficient_basis();
  RationalMatrix flat(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(npairs));
  for (std::size_t k = 0; k < d; ++k) {
    mpz_class den = 1;
    for (Eigen::Index i = 0; i < basis[k].rows(); ++i)
      for (Eigen::Index j = 0; j < basis[k].cols(); ++j)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), basis[k](i, j).denominator().get_mpz_t());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        b[k][i][j] = (basis[k](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * Rational(den)).numerator();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        flat(static_cast<Eigen::Index>(k), pair_index(i, j)) = Rational(b[k][i][j]);
  }
  if (rank(flat) < static_cast<Eigen::Index>(d)) throw std::invalid_argument("orbit: dependent generators");

  std::vector<IntVector> gens(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (b[k][i][j] != 0) gens[k].emplace_back(pair_index(i, j), b[k][i][j]);

  std::vector<SparseRow> rows;
  rows.reserve(n * n);
  for (std::size_t ei = 0; ei < n; ++ei) {
    for (std::size_t ej = 0; ej < n; ++ej) {
      std::unordered_map<u64, mpz_class> acc;
      for (std::size_t k = 0; k < d; ++k) {
        // D(x, y) = [x == ej] B(ei, y) + [y == ej] B(x, ei), upper part only.
        IntVector dk;
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = x + 1; y < n; ++y) {
            mpz_class v = 0;
            if (x == ej) v += b[k][ei][y];
            if (y == ej) v += b[k][x][ei];
            if (v != 0) dk.emplace_back(pair_index(x, y), std::move(v));
          }
        if (dk.empty()) continue;
        std::vector<const IntVector*> vs;
        for (std::size_t m = 0; m < d; ++m) vs.push_back(m == k ? &dk : &gens[m]);
        wedge_accumulate(vs, acc);
      }
      SparseRow row;
      for (auto& [key, c] : acc)
        if (c != 0) row.emplace_back(key, std::move(c));
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

OrbitReport orbit_dimension(const SkewPolyMatrix& a, const OrbitOptions& options) {
  const long n = static_cast<long>(a.order());
  const long d = static_cast<long>(a.nvars());
  OrbitReport rep;
  rep.ambient_grassmannian_dim = d * (n * (n - 1) / 2 - d);
  const auto rows = tangent_rows(a);
  rep.rows = rows.size();
  std::vector<u64> cols;
  for (const auto& r : rows)
    for (const auto& t : r) cols.push_back(t.first);
  std::sort(cols.begin(), cols.end());
  rep.nonzero_columns = static_cast<std::size_t>(std::unique(cols.begin(), cols.end()) - cols.begin());
  rep.seed = options.seed;
  rep.prime = random_prime62(options.seed);
  rep.modular_rank = rank_modular(rows, rep.prime);
  rep.tangent_rank = rep.modular_rank;
  const long maximal = static_cast<long>(std::min(rep.rows, rep.nonzero_columns));
  rep.certified = rep.modular_rank == maximal;
  if (options.exact) {
    rep.exact_rank = rank_exact(rows);
    rep.tangent_rank = *rep.exact_rank;
    rep.certified = true;
  }
  rep.orbit_dim = rep.tangent_rank - 1;
  return rep;
}

}  // namespace skewrank
