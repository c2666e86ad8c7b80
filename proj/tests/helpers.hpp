#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "skewrank/catalog.hpp"
#include "skewrank/geometry.hpp"
#include "skewrank/skew_matrix.hpp"

namespace testutil {

using namespace skewrank;

inline Ring ring_ab() { return make_ring({"a", "b"}); }
inline Ring ring_abc() { return make_ring({"a", "b", "c"}); }

inline Form F(std::string_view text, const Ring& r) { return parse_form(text, r); }

inline Point pt(std::initializer_list<long> xs) {
  Point p;
  for (long x : xs) p.push_back(Rational(x));
  return p;
}

inline Rational rand_rational(std::mt19937_64& g, long bound = 5) {
  std::uniform_int_distribution<long> d(-bound, bound);
  return Rational(d(g));
}

inline RationalMatrix random_skew(std::size_t n, std::mt19937_64& g, long bound = 5) {
  RationalMatrix a = RationalMatrix::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = rand_rational(g, bound);
      a(j, i) = -a(i, j);
    }
  return a;
}

inline RationalMatrix random_matrix(std::size_t n, std::mt19937_64& g, long bound = 3) {
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rand_rational(g, bound);
  return a;
}

inline RationalMatrix random_invertible(std::size_t n, std::mt19937_64& g, long bound = 3) {
  for (;;) {
    RationalMatrix a = random_matrix(n, g, bound);
    if (!determinant(a).is_zero()) return a;
  }
}

inline Point random_point(std::size_t n, std::mt19937_64& g, long bound = 20) {
  for (;;) {
    Point p;
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      p.push_back(rand_rational(g, bound));
      nonzero = nonzero || !p.back().is_zero();
    }
    if (nonzero) return p;
  }
}

/// Random polynomial with up to `terms` terms of total degree <= max_degree.
inline Form random_form(const Ring& r, std::mt19937_64& g, int terms = 4, unsigned max_degree = 3) {
  std::uniform_int_distribution<unsigned> ed(0, max_degree);
  Form f(r);
  for (int t = 0; t < terms; ++t) {
    std::vector<unsigned> e(r->size());
    unsigned left = max_degree;
    for (auto& x : e) {
      x = std::min(left, ed(g));
      left -= x;
    }
    f += Form(r, {{Monomial(e), rand_rational(g, 9)}});
  }
  return f;
}

/// Random binary form of the given degree in ring (a, b).
inline Form random_binary(const Ring& r, unsigned degree, std::mt19937_64& g) {
  for (;;) {
    Form f(r);
    for (unsigned k = 0; k <= degree; ++k) f += Form(r, {{Monomial({degree - k, k}), rand_rational(g, 6)}});
    if (!f.is_zero()) return f;
  }
}

inline std::vector<std::vector<int>> partitions_of(int n, int max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int k = std::min(n, max_part); k >= 1; --k)
    for (auto rest : partitions_of(n - k, k)) {
      rest.insert(rest.begin(), k);
      out.push_back(rest);
    }
  return out;
}

inline bool proportional(const Point& x, const Point& y) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (!(x[i] * y[j] - x[j] * y[i]).is_zero()) return false;
  return true;
}

/// `count` seeded random lines, none proportional to a line in `avoid`.
inline std::vector<Point> random_lines_avoiding(std::size_t count, std::uint64_t seed, const std::vector<Point>& avoid) {
  std::vector<Point> out;
  for (std::uint64_t s = seed; out.size() < count; s += 1000)
    for (const auto& l : random_lines(count, s)) {
      bool clash = false;
      for (const auto& x : avoid) clash = clash || proportional(l, x);
      if (!clash && out.size() < count) out.push_back(l);
    }
  return out;
}

inline SkewPolyMatrix random_congruent(const SkewPolyMatrix& a, std::mt19937_64& g) {
  return congruence_transform(a, random_invertible(a.order(), g));
}

inline SkewPolyMatrix random_reparametrized(const SkewPolyMatrix& a, std::mt19937_64& g) {
  return parameter_change(a, random_invertible(a.nvars(), g));
}

}  // namespace testutil
