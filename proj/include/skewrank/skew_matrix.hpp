#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "skewrank/form.hpp"
#include "skewrank/linalg.hpp"
#include "skewrank/rational.hpp"

namespace skewrank {

/// Skew-symmetric matrix whose entries are linear forms in the variables of
/// `ring`. Only the strict upper triangle is stored.
class SkewPolyMatrix {
 public:
  SkewPolyMatrix() = default;
  SkewPolyMatrix(std::size_t order, Ring ring);

  std::size_t order() const { return order_; }
  std::size_t nvars() const { return ring_ ? ring_->size() : 0; }
  const Ring& ring() const { return ring_; }

  /// Entry (i, j); (j, i) is materialized as the negative and the diagonal is zero.
  Form entry(std::size_t i, std::size_t j) const;
  /// Sets entry (i, j) and implicitly (j, i). The form must be linear.
  void set(std::size_t i, std::size_t j, const Form& f);
  void set(std::size_t i, std::size_t j, std::string_view text);

  bool is_zero() const;
  /// Constant skew matrices B_k with A = sum_k var_k B_k.
  std::vector<RationalMatrix> coefficient_basis() const;
  static SkewPolyMatrix from_basis(Ring ring, std::span<const RationalMatrix> basis);

  /// Human-readable listing of the nonzero upper entries.
  std::string str() const;

  friend bool operator==(const SkewPolyMatrix& a, const SkewPolyMatrix& b);

 private:
  std::size_t index(std::size_t i, std::size_t j) const;
  void check_indices(std::size_t i, std::size_t j) const;

  std::size_t order_ = 0;
  Ring ring_;
  std::vector<Form> upper_;
};

SkewPolyMatrix zero_matrix(std::size_t order, Ring ring);

/// Index-set memo for Pfaffians of principal submatrices of a symbolic
/// matrix. Masks select rows/columns; bit k is index k.
class PfaffianTable {
 public:
  explicit PfaffianTable(const SkewPolyMatrix& a);
  const Form& pfaffian(std::uint64_t mask);
  std::uint64_t full_mask() const;

 private:
  const SkewPolyMatrix& a_;
  std::vector<Form> entries_;  // dense (i, j) cache, row-major
  std::unordered_map<std::uint64_t, Form> memo_;
};

Form pfaffian_symbolic(const SkewPolyMatrix& a);

/// Pfaffians of all principal size x size submatrices, index sets in
/// lexicographic order.
std::vector<Form> sub_pfaffians(const SkewPolyMatrix& a, std::size_t size);

/// Same enumeration, returning the index sets alongside.
std::vector<std::vector<std::size_t>> principal_index_sets(std::size_t order, std::size_t size);

RationalMatrix evaluate_at(const SkewPolyMatrix& a, std::span<const Rational> point);
long rank_at(const SkewPolyMatrix& a, std::span<const Rational> point);

/// P^T A P. Throws if P is singular or the wrong size.
SkewPolyMatrix congruence_transform(const SkewPolyMatrix& a, const RationalMatrix& p);

/// Substitutes var_i -> sum_j L(i, j) var_j. Throws if L is singular.
SkewPolyMatrix parameter_change(const SkewPolyMatrix& a, const RationalMatrix& l);

/// Replaces every variable by a linear form of a (possibly different) ring.
SkewPolyMatrix substitute_parameters(const SkewPolyMatrix& a, std::span<const Form> images);

/// Same matrix in a ring with extra trailing variables.
SkewPolyMatrix embed(const SkewPolyMatrix& a, const Ring& target);

SkewPolyMatrix direct_sum(const SkewPolyMatrix& a, const SkewPolyMatrix& b);

struct Nondegeneracy {
  bool nondegenerate = true;
  std::optional<RationalVector> witness;  // common kernel vector when degenerate
};

Nondegeneracy is_nondegenerate(const SkewPolyMatrix& a);

}  // namespace skewrank
