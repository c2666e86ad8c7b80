#include "skewrank/geometry.hpp"

#include <algorithm>
#include <map>

#include "skewrank/groebner.hpp"

namespace skewrank {

namespace {

bool is_zero_point(const Point& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& x) { return x.is_zero(); });
}

SkewPolyMatrix drop_last(const SkewPolyMatrix& a) {
  SkewPolyMatrix out(a.order() - 1, a.ring());
  for (std::size_t i = 0; i + 1 < a.order(); ++i)
    for (std::size_t j = i + 1; j + 1 < a.order(); ++j) out.set(i, j, a.entry(i, j));
  return out;
}

}  // namespace

ProjectionStep project(const SkewPolyMatrix& a, const Point& center) {
  const std::size_t n = a.order();
  if (center.size() != n)
    throw std::invalid_argument("project: center has " + std::to_string(center.size()) + " coordinates, order is " +
                                std::to_string(n));
  if (is_zero_point(center)) throw std::invalid_argument("project: zero center");
  if (n < 2) throw std::invalid_argument("project: order too small");
  const auto k = static_cast<std::size_t>(
      std::find_if(center.begin(), center.end(), [](const Rational& x) { return !x.is_zero(); }) - center.begin());
  const auto N = static_cast<Eigen::Index>(n);
  RationalMatrix s = RationalMatrix::Zero(N, N);
  Eigen::Index row = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    s(row, static_cast<Eigen::Index>(j)) = Rational(1);
    s(row, static_cast<Eigen::Index>(k)) = -center[j] / center[k];
    ++row;
  }
  s(N - 1, static_cast<Eigen::Index>(k)) = center[k].inverse();

  ProjectionStep step;
  step.center = center;
  step.basis_change = s;
  step.result = drop_last(congruence_transform(a, s.transpose()));
  step.source_rank = generic_rank(a);
  if (step.result.is_zero()) {
    step.valid = false;
    step.certificate.verdict = Verdict::NonConstant;
    return step;
  }
  step.certificate = certify_constant_rank(step.result);
  step.valid = step.certificate.constant && step.certificate.generic_rank == step.source_rank;
  return step;
}

ProjectionChain find_valid_center(const SkewPolyMatrix& a, std::size_t target_order, std::uint64_t seed,
                                  std::size_t budget) {
  const auto cert = certify_constant_rank(a);
  if (!cert.constant) throw std::invalid_argument("find_valid_center: matrix does not have constant rank");
  ProjectionChain chain;
  chain.enforced_bound = static_cast<std::size_t>(cert.generic_rank) + 2;
  chain.corollary_bound = static_cast<std::size_t>(cert.generic_rank) + a.nvars();
  if (target_order < chain.enforced_bound)
    throw BelowBound("target order " + std::to_string(target_order) + " is below 2r + 2 = " +
                     std::to_string(chain.enforced_bound));
  if (target_order > a.order())
    throw std::invalid_argument("target order " + std::to_string(target_order) + " exceeds order " +
                                std::to_string(a.order()));
  SkewPolyMatrix current = a;
  std::uint64_t stream = seed;
  while (current.order() > target_order) {
    bool found = false;
    const auto centers = random_points(current.order(), budget, stream++, 3);
    for (const auto& c : centers) {
      ++chain.attempts;
      auto step = project(current, c);
      if (step.valid) {
        current = step.result;
        chain.steps.push_back(std::move(step));
        found = true;
        break;
      }
    }
    if (!found)
      throw BudgetExhausted("no valid center among " + std::to_string(budget) + " samples at order " +
                            std::to_string(current.order()));
  }
  return chain;
}

std::vector<Form> kernel_plucker(const SkewPolyMatrix& a) {
  const std::size_t n = a.order();
  if (n % 2 != 0) throw std::invalid_argument("kernel_plucker: odd order");
  if (generic_rank(a) != static_cast<long>(n) - 2) throw std::invalid_argument("kernel_plucker: corank is not 2");
  PfaffianTable table(a);
  const std::uint64_t full = table.full_mask();
  std::vector<Form> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Form f = table.pfaffian(full & ~(std::uint64_t{1} << i) & ~(std::uint64_t{1} << j));
      if ((i + j) % 2 == 1) f = -f;
      out.push_back(std::move(f));
    }
  return out;
}

RationalMatrix plucker_tensor_at(const std::vector<Form>& k, std::size_t order, const Point& p) {
  const auto n = static_cast<Eigen::Index>(order);
  RationalMatrix t = RationalMatrix::Zero(n, n);
  std::size_t idx = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Rational v = k.at(idx++).evaluate(p);
      t(i, j) = v;
      t(j, i) = -v;
    }
  return t;
}

bool kernel_matches(const SkewPolyMatrix& a, const std::vector<Form>& k, const Point& p) {
  const RationalMatrix m = evaluate_at(a, p);
  const RationalMatrix t = plucker_tensor_at(k, a.order(), p);
  if (rank(t) != 2) return false;
  if (kernel(m).cols() != 2) return false;
  const RationalMatrix prod = m * t;
  for (Eigen::Index i = 0; i < prod.rows(); ++i)
    for (Eigen::Index j = 0; j < prod.cols(); ++j)
      if (!prod(i, j).is_zero()) return false;
  return true;
}

long gauss_span_dim(const SkewPolyMatrix& a) {
  const auto k = kernel_plucker(a);
  std::map<std::vector<unsigned>, Eigen::Index> columns;
  for (const auto& f : k)
    for (const auto& [m, c] : f.terms()) columns.emplace(m.exponents(), 0);
  Eigen::Index next = 0;
  for (auto& [m, idx] : columns) idx = next++;
  RationalMatrix coeffs = RationalMatrix::Zero(static_cast<Eigen::Index>(k.size()), next);
  for (std::size_t r = 0; r < k.size(); ++r)
    for (const auto& [m, c] : k[r].terms()) coeffs(static_cast<Eigen::Index>(r), columns.at(m.exponents())) = c;
  return static_cast<long>(rank(coeffs));
}

SkewPolyMatrix restrict_to_line(const SkewPolyMatrix& a, const Point& p, const Point& q) {
  const std::size_t d = a.nvars();
  if (p.size() != d || q.size() != d) throw std::invalid_argument("restrict_to_line: point size mismatch");
  RationalMatrix two(2, static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d; ++k) {
    two(0, static_cast<Eigen::Index>(k)) = p[k];
    two(1, static_cast<Eigen::Index>(k)) = q[k];
  }
  if (rank(two) < 2) throw std::invalid_argument("restrict_to_line: dependent points");
  const Ring ring = make_ring({"s", "t"});
  const Form s = Form::variable(ring, 0), t = Form::variable(ring, 1);
  std::vector<Form> images;
  for (std::size_t k = 0; k < d; ++k) images.push_back(p[k] * s + q[k] * t);
  return substitute_parameters(a, images);
}

std::pair<Point, Point> line_points(const Point& line) {
  if (is_zero_point(line)) throw std::invalid_argument("line_points: zero covector");
  RationalMatrix row(1, static_cast<Eigen::Index>(line.size()));
  for (std::size_t k = 0; k < line.size(); ++k) row(0, static_cast<Eigen::Index>(k)) = line[k];
  const RationalMatrix ker = kernel(row);
  if (ker.cols() != 2) throw std::invalid_argument("line_points: covector must have three coordinates");
  Point p(line.size()), q(line.size());
  for (std::size_t k = 0; k < line.size(); ++k) {
    p[k] = ker(static_cast<Eigen::Index>(k), 0);
    q[k] = ker(static_cast<Eigen::Index>(k), 1);
  }
  return {p, q};
}

std::vector<int> splitting_on_line(const SkewPolyMatrix& a, const Point& line) {
  const auto [p, q] = line_points(line);
  return minimal_indices(restrict_to_line(a, p, q)).splitting();
}

std::vector<Point> random_lines(std::size_t count, std::uint64_t seed) { return random_points(3, count, seed, 50); }

GenericSplitting generic_splitting(const SkewPolyMatrix& a, std::uint64_t seed) {
  std::map<std::vector<int>, std::size_t> counts;
  const auto lines = random_lines(20, seed);
  for (const auto& l : lines) ++counts[splitting_on_line(a, l)];
  GenericSplitting out;
  out.sampled = lines.size();
  for (const auto& [s, c] : counts)
    if (c > out.agree) {
      out.agree = c;
      out.splitting = s;
    }
  out.quorum = out.agree >= 15;
  return out;
}

bool jumping_test(const SkewPolyMatrix& a, const Point& line, const std::vector<int>& generic) {
  return splitting_on_line(a, line) != generic;
}

std::vector<Point> grid_lines(std::size_t count) {
  auto pts = small_integer_points(3, 2);
  std::stable_sort(pts.begin(), pts.end(), [](const Point& x, const Point& y) {
    Rational hx(0), hy(0);
    for (const auto& v : x) hx = std::max(hx, v.abs());
    for (const auto& v : y) hy = std::max(hy, v.abs());
    return hx < hy;
  });
  std::vector<Point> out;
  for (std::size_t j = 1; j < pts.size() && out.size() < count; ++j) {
    for (std::size_t i = 0; i < j && out.size() < count; ++i) {
      const Point& p = pts[i];
      const Point& q = pts[j];
      Point l{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
      if (is_zero_point(l)) continue;
      l = primitive_point(std::move(l));
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(std::move(l));
    }
  }
  return out;
}

std::vector<JumpingLine> jumping_scan(const SkewPolyMatrix& a, std::size_t budget,
                                      const std::vector<Point>& candidates, const std::vector<int>& generic) {
  std::vector<Point> lines = grid_lines(budget);
  for (const auto& c : candidates) {
    Point l = primitive_point(c);
    if (std::find(lines.begin(), lines.end(), l) == lines.end()) lines.push_back(std::move(l));
  }
  std::vector<JumpingLine> out;
  for (const auto& l : lines) {
    auto s = splitting_on_line(a, l);
    if (s != generic) out.push_back({l, std::move(s)});
  }
  std::sort(out.begin(), out.end(), [](const JumpingLine& x, const JumpingLine& y) { return x.line < y.line; });
  return out;
}

ConicFit fit_dual_conic(const std::vector<Point>& lines) {
  if (lines.size() < 5) throw std::invalid_argument("fit_dual_conic: need at least five lines");
  auto monomials = [](const Point& l) {
    return std::vector<Rational>{l[0] * l[0], l[0] * l[1], l[0] * l[2], l[1] * l[1], l[1] * l[2], l[2] * l[2]};
  };
  RationalMatrix sys(5, 6);
  for (Eigen::Index r = 0; r < 5; ++r) {
    const auto m = monomials(lines[static_cast<std::size_t>(r)]);
    for (Eigen::Index c = 0; c < 6; ++c) sys(r, c) = m[static_cast<std::size_t>(c)];
  }
  const RationalMatrix ker = kernel(sys);
  ConicFit fit;
  fit.determined = ker.cols() == 1;
  if (!fit.determined) return fit;
  std::vector<Rational> q(6);
  for (std::size_t c = 0; c < 6; ++c) q[c] = ker(static_cast<Eigen::Index>(c), 0);
  fit.coefficients = primitive_point(std::move(q));
  fit.all_on_conic = std::all_of(lines.begin(), lines.end(), [&](const Point& l) {
    const auto m = monomials(l);
    Rational v(0);
    for (std::size_t c = 0; c < 6; ++c) v += fit.coefficients[c] * m[c];
    return v.is_zero();
  });
  return fit;
}

ZeroSchemeDegree section_zero_scheme_degree(const SkewPolyMatrix& a, std::optional<Point> xi, std::uint64_t seed) {
  const std::size_t n = a.order();
  const std::size_t d = a.nvars();
  if (d < 3) throw std::invalid_argument("section_zero_scheme_degree: needs at least three parameters");
  const int expected_dim = static_cast<int>(d) - 3;
  Point cov;
  if (xi) {
    if (xi->size() != n) throw std::invalid_argument("section_zero_scheme_degree: covector length mismatch");
    if (is_zero_point(*xi)) throw std::invalid_argument("section_zero_scheme_degree: zero covector");
    cov = *xi;
  } else {
    for (std::size_t j = 0; j < n; ++j) cov.emplace_back(static_cast<long>(j + 1));
  }
  const auto k = kernel_plucker(a);
  auto kij = [&](std::size_t i, std::size_t j) -> Form {
    if (i == j) return Form(a.ring());
    if (i < j) return k[i * n - i * (i + 1) / 2 + (j - i - 1)];
    return -k[j * n - j * (j + 1) / 2 + (i - j - 1)];
  };
  const auto retries = random_points(n, 10, seed, 100);
  ZeroSchemeDegree out;
  for (std::size_t attempt = 0; attempt <= retries.size(); ++attempt) {
    if (attempt > 0) cov = retries[attempt - 1];
    std::vector<Form> gens;
    for (std::size_t i = 0; i < n; ++i) {
      Form g(a.ring());
      for (std::size_t j = 0; j < n; ++j)
        if (!cov[j].is_zero()) g += cov[j] * kij(i, j);
      gens.push_back(std::move(g));
    }
    try {
      out.degree = projective_degree(Ideal(a.ring(), gens), expected_dim);
      out.xi = cov;
      out.attempts = attempt + 1;
      return out;
    } catch (const WrongDimension&) {
    }
  }
  throw std::runtime_error("section_zero_scheme_degree: no covector gave a scheme of dimension " +
                           std::to_string(expected_dim));
}

BundleFingerprint fingerprint(const SkewPolyMatrix& a, std::size_t scan_budget, std::uint64_t seed) {
  if (a.nvars() != 3) throw std::invalid_argument("fingerprint: needs a net (three parameters)");
  BundleFingerprint fp;
  fp.seed = seed;
  const auto gen = generic_splitting(a, seed);
  fp.generic_splitting = gen.splitting;
  fp.generic_agree = gen.agree;
  fp.jumping_lines = jumping_scan(a, scan_budget, {}, gen.splitting);
  fp.lines_scanned = grid_lines(scan_budget).size();
  fp.c2 = section_zero_scheme_degree(a, std::nullopt, seed).degree;
  fp.gauss_span_dim = gauss_span_dim(a);
  return fp;
}

}  // namespace skewrank
