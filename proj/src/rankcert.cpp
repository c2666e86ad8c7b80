#include "skewrank/rankcert.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "skewrank/groebner.hpp"

namespace skewrank {

std::string to_string(CertMethod m) {
  switch (m) {
    case CertMethod::BinaryGcd: return "binary-gcd";
    case CertMethod::Groebner: return "groebner";
    case CertMethod::Sampled: return "sampled";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Constant: return "constant";
    case Verdict::NonConstant: return "non-constant";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

std::vector<std::vector<Rational>> random_points(std::size_t nvars, std::size_t count, std::uint64_t seed,
                                                 long bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<std::vector<Rational>> out;
  while (out.size() < count) {
    std::vector<Rational> p;
    bool nonzero = false;
    for (std::size_t i = 0; i < nvars; ++i) {
      const long v = dist(rng);
      nonzero = nonzero || v != 0;
      p.emplace_back(v);
    }
    if (nonzero) out.push_back(std::move(p));
  }
  return out;
}

long generic_rank(const SkewPolyMatrix& a) {
  if (a.is_zero()) throw std::invalid_argument("generic_rank of the zero matrix");
  // rank at one point is a lower bound
  const auto pt = random_points(a.nvars(), 1, 0x5eed)[0];
  const long lower = rank_at(a, pt);
  PfaffianTable table(a);
  const std::size_t top = a.order() - a.order() % 2;
  for (std::size_t size = top; static_cast<long>(size) > lower; size -= 2) {
    for (const auto& set : principal_index_sets(a.order(), size)) {
      std::uint64_t mask = 0;
      for (auto i : set) mask |= std::uint64_t{1} << i;
      if (!table.pfaffian(mask).is_zero()) return static_cast<long>(size);
    }
  }
  return lower;
}

namespace {

std::vector<Form> nonzero_sub_pfaffians(const SkewPolyMatrix& a, long size) {
  auto all = sub_pfaffians(a, static_cast<std::size_t>(size));
  std::erase_if(all, [](const Form& f) { return f.is_zero(); });
  return all;
}

}  // namespace

std::vector<std::vector<Rational>> small_integer_points(std::size_t nvars, long height) {
  std::vector<std::vector<Rational>> out;
  std::vector<long> v(nvars, -height);
  while (true) {
    auto first = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
    if (first != v.end() && *first > 0) out.emplace_back(v.begin(), v.end());
    std::size_t k = nvars;
    while (k > 0 && v[k - 1] == height) v[--k] = -height;
    if (k == 0) break;
    ++v[k - 1];
  }
  return out;
}

namespace {

bool all_vanish(const std::vector<Form>& forms, const std::vector<Rational>& p) {
  return std::all_of(forms.begin(), forms.end(), [&](const Form& f) { return f.evaluate(p).is_zero(); });
}

}  // namespace

std::vector<Rational> primitive_point(std::vector<Rational> p) {
  mpz_class den = 1, g = 0;
  for (const auto& x : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
  for (auto& x : p) {
    x *= Rational(den);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.numerator().get_mpz_t());
  }
  auto first = std::find_if(p.begin(), p.end(), [](const Rational& x) { return !x.is_zero(); });
  if (first != p.end() && first->sign() < 0) g = -g;
  if (g != 0)
    for (auto& x : p) x /= Rational(g);
  return p;
}

namespace {

std::optional<std::vector<Rational>> binary_witness(const std::vector<Form>& forms) {
  const Form g = binary_gcd(forms);
  if (g.is_zero()) return std::vector<Rational>{Rational(1), Rational(0)};
  if (g.is_constant()) return std::nullopt;
  const auto roots = binary_rational_roots(g);
  if (roots.empty()) return std::nullopt;
  return std::vector<Rational>{Rational(roots[0].first), Rational(roots[0].second)};
}

}  // namespace

std::optional<std::vector<Rational>> find_common_zero(const std::vector<Form>& forms) {
  if (forms.empty()) throw std::invalid_argument("find_common_zero: no forms");
  const Ring ring = forms[0].ring();
  const std::size_t d = ring->size();
  if (d == 1) return std::nullopt;
  if (d == 2) return binary_witness(forms);
  const auto pts = small_integer_points(d, 2);
  for (const auto& p : pts)
    if (all_vanish(forms, p)) return p;
  const auto line_ring = make_ring({"s", "t"});
  const Form s = Form::variable(line_ring, 0), t = Form::variable(line_ring, 1);
  std::size_t lines = 0;
  for (std::size_t i = 0; i < pts.size() && lines < 50; ++i) {
    for (std::size_t j = i + 1; j < pts.size() && lines < 50; ++j) {
      RationalMatrix two(2, static_cast<Eigen::Index>(d));
      for (std::size_t k = 0; k < d; ++k) {
        two(0, static_cast<Eigen::Index>(k)) = pts[i][k];
        two(1, static_cast<Eigen::Index>(k)) = pts[j][k];
      }
      if (rank(two) < 2) continue;
      ++lines;
      std::vector<Form> images;
      for (std::size_t k = 0; k < d; ++k) images.push_back(pts[i][k] * s + pts[j][k] * t);
      std::vector<Form> restricted;
      for (const auto& f : forms) restricted.push_back(linear_substitute(f, images));
      const auto root = binary_witness(restricted);
      if (!root) continue;
      std::vector<Rational> p(d);
      for (std::size_t k = 0; k < d; ++k) p[k] = (*root)[0] * pts[i][k] + (*root)[1] * pts[j][k];
      p = primitive_point(std::move(p));
      if (all_vanish(forms, p)) return p;
    }
  }
  return std::nullopt;
}

RankCertificate certify_constant_rank(const SkewPolyMatrix& a, Route route) {
  RankCertificate cert;
  cert.generic_rank = generic_rank(a);
  const auto pfs = nonzero_sub_pfaffians(a, cert.generic_rank);
  if (route == Route::Auto) route = a.nvars() == 2 ? Route::BinaryGcd : Route::Groebner;
  if (route == Route::BinaryGcd) {
    if (a.nvars() != 2) throw std::invalid_argument("binary-gcd route needs exactly two variables");
    cert.method = CertMethod::BinaryGcd;
    cert.constant = binary_gcd(pfs).is_constant();
  } else {
    cert.method = CertMethod::Groebner;
    cert.constant = is_projectively_empty(Ideal(a.ring(), pfs));
  }
  cert.verdict = cert.constant ? Verdict::Constant : Verdict::NonConstant;
  if (!cert.constant) {
    auto w = find_common_zero(pfs);
    if (w && rank_at(a, *w) < cert.generic_rank) cert.witness = std::move(w);
  }
  return cert;
}

RankCertificate sample_rank(const SkewPolyMatrix& a, std::size_t points, std::uint64_t seed) {
  RankCertificate cert;
  cert.method = CertMethod::Sampled;
  cert.sampled_points = points;
  std::vector<std::pair<long, std::vector<Rational>>> seen;
  for (auto& p : random_points(a.nvars(), points, seed)) {
    const long r = rank_at(a, p);
    seen.emplace_back(r, std::move(p));
  }
  for (const auto& s : seen) cert.generic_rank = std::max(cert.generic_rank, s.first);
  for (const auto& s : seen)
    if (s.first < cert.generic_rank) {
      cert.witness = s.second;
      break;
    }
  cert.verdict = cert.witness ? Verdict::NonConstant : Verdict::Unknown;
  return cert;
}

bool pencil_bound_holds(std::size_t order, long rank) {
  const long n = static_cast<long>(order) - 1;
  const long r = rank / 2;
  return 2 * r <= n && n <= 3 * r - 1;
}

bool check_bound(const SkewPolyMatrix& a, const RankCertificate& cert, bool nondegenerate) {
  if (a.nvars() != 2) throw std::invalid_argument("check_bound applies to pencils only");
  if (!cert.constant) throw std::invalid_argument("check_bound needs a constant-rank certificate");
  if (nondegenerate) return pencil_bound_holds(a.order(), cert.generic_rank);
  return cert.generic_rank <= static_cast<long>(a.order()) - 1;
}

}  // namespace skewrank
