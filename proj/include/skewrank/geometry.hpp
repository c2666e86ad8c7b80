#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewrank/pencil.hpp"
#include "skewrank/rankcert.hpp"
#include "skewrank/skew_matrix.hpp"

namespace skewrank {

using Point = std::vector<Rational>;

struct ProjectionStep {
  Point center;
  RationalMatrix basis_change;  // S with S * center = e_last
  SkewPolyMatrix result;        // S A S^T with the last row and column removed
  long source_rank = 0;
  RankCertificate certificate;  // of the result
  bool valid = false;           // result has constant rank equal to source_rank
};

/// Projection from a point of P^N. The pivot is the first nonzero
/// coordinate c_k of the center; the remaining basis vectors keep their
/// order and e_k is sent to -(1/c_k) sum_{j != k} c_j e_j.
ProjectionStep project(const SkewPolyMatrix& a, const Point& center);

class BelowBound : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProjectionChain {
  std::vector<ProjectionStep> steps;
  std::size_t enforced_bound = 0;    // 2r + 2
  std::size_t corollary_bound = 0;   // 2r + d
  std::size_t attempts = 0;
};

/// Projects from seeded pseudo-random centers, keeping only valid steps,
/// until the order reaches `target_order`. Throws BelowBound when
/// target_order < 2r + 2 and BudgetExhausted after `budget` failed centers
/// at one step.
ProjectionChain find_valid_center(const SkewPolyMatrix& a, std::size_t target_order, std::uint64_t seed = 1,
                                  std::size_t budget = 20);

/// Coordinates K_ij = (-1)^(i+j) Pf(A without rows/columns i, j), i < j, in
/// lexicographic pair order. Needs even order and generic rank order - 2.
std::vector<Form> kernel_plucker(const SkewPolyMatrix& a);

/// The skew matrix with upper entries K_ij evaluated at p.
RationalMatrix plucker_tensor_at(const std::vector<Form>& k, std::size_t order, const Point& p);

/// Rank of the evaluated tensor is 2 and its column space equals ker A(p).
bool kernel_matches(const SkewPolyMatrix& a, const std::vector<Form>& k, const Point& p);

/// Dimension of the rational span of the kernel Pluecker coordinates.
long gauss_span_dim(const SkewPolyMatrix& a);

/// Substitutes the parameters by s*p + t*q.
SkewPolyMatrix restrict_to_line(const SkewPolyMatrix& a, const Point& p, const Point& q);

/// Two points spanning the line {x : l . x = 0} of P^2.
std::pair<Point, Point> line_points(const Point& line);

/// Splitting type on the line with dual coordinates `line`.
std::vector<int> splitting_on_line(const SkewPolyMatrix& a, const Point& line);

struct GenericSplitting {
  std::vector<int> splitting;
  std::size_t agree = 0;
  std::size_t sampled = 0;
  bool quorum = false;  // at least 15 of 20 lines agree
};

/// Mode of the splitting type over 20 seeded random lines.
GenericSplitting generic_splitting(const SkewPolyMatrix& a, std::uint64_t seed = 1);

bool jumping_test(const SkewPolyMatrix& a, const Point& line, const std::vector<int>& generic);

struct JumpingLine {
  Point line;
  std::vector<int> splitting;
};

/// Lines through pairs of a fixed integer grid, in a fixed order.
std::vector<Point> grid_lines(std::size_t count);

/// Seeded random lines with small integer dual coordinates.
std::vector<Point> random_lines(std::size_t count, std::uint64_t seed);

/// Tests the first `budget` grid lines plus `candidates`; returns the jumping
/// ones sorted by dual coordinates.
std::vector<JumpingLine> jumping_scan(const SkewPolyMatrix& a, std::size_t budget,
                                      const std::vector<Point>& candidates, const std::vector<int>& generic);

struct ConicFit {
  bool determined = false;         // the first five lines fix a unique conic
  std::vector<Rational> coefficients;  // l0^2, l0 l1, l0 l2, l1^2, l1 l2, l2^2
  bool all_on_conic = false;
};

/// Dual conic through the first five lines, checked on the rest.
ConicFit fit_dual_conic(const std::vector<Point>& lines);

struct ZeroSchemeDegree {
  long degree = 0;
  Point xi;
  std::size_t attempts = 0;
};

/// Degree of the zero scheme of the section of the dual kernel bundle
/// induced by the covector xi: the points where ker A(p) lies in ker xi,
/// cut out by the contractions sum_j xi_j K_ij. Expected dimension is
/// d - 3 (points on P^2, a curve on P^3). When the scheme has the wrong
/// dimension, xi is redrawn from the seeded generator up to 10 times.
ZeroSchemeDegree section_zero_scheme_degree(const SkewPolyMatrix& a, std::optional<Point> xi = std::nullopt,
                                            std::uint64_t seed = 1);

struct BundleFingerprint {
  std::vector<int> generic_splitting;
  std::size_t generic_agree = 0;
  std::vector<JumpingLine> jumping_lines;
  std::size_t lines_scanned = 0;
  long c2 = 0;
  long gauss_span_dim = 0;
  std::uint64_t seed = 0;
};

BundleFingerprint fingerprint(const SkewPolyMatrix& a, std::size_t scan_budget = 60, std::uint64_t seed = 1);

}  // namespace skewrank
