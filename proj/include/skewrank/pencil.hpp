#pragma once

#include <string>
#include <vector>

#include "skewrank/skew_matrix.hpp"

namespace skewrank {

struct KroneckerInvariants {
  long rank = 0;               // 2r
  std::vector<int> partition;  // nonincreasing minimal indices >= 1, summing to r
  std::size_t padding = 0;     // number of degree-0 kernel vectors
  std::size_t order = 0;

  /// Partition followed by `padding` zeros: the splitting type of the dual
  /// kernel bundle on the line.
  std::vector<int> splitting() const;
  std::string str() const;
  friend bool operator==(const KroneckerInvariants&, const KroneckerInvariants&) = default;
};

/// A kernel vector of the pencil whose entries are binary forms of one degree.
struct PolynomialKernelVector {
  int degree = 0;
  std::vector<Form> entries;
};

/// Minimal polynomial basis of the kernel of a constant-rank pencil, chosen
/// degree by degree. The pencil must be certified constant rank.
std::vector<PolynomialKernelVector> minimal_basis(const SkewPolyMatrix& a);

KroneckerInvariants minimal_indices(const SkewPolyMatrix& a);

struct CanonicalPencil {
  KroneckerInvariants invariants;
  SkewPolyMatrix matrix;
};

/// Block form with a catalecticant block of size r_i x (r_i + 1) per part:
/// a on the diagonal and b on the superdiagonal.
CanonicalPencil canonical_form(const std::vector<int>& partition);

/// Same pencil with `padding` zero rows and columns appended.
CanonicalPencil canonical_form(const std::vector<int>& partition, std::size_t padding);

/// Congruence plus change of pencil generators, decided by invariants.
bool equivalent(const SkewPolyMatrix& a, const SkewPolyMatrix& b);

std::vector<int> parse_partition(const std::string& text);
std::string partition_to_string(const std::vector<int>& p);

}  // namespace skewrank
