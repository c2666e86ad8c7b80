#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "skewrank/skew_matrix.hpp"

namespace skewrank {

/// Sparse row keyed by Pluecker coordinate; keys strictly increasing.
using SparseRow = std::vector<std::pair<std::uint64_t, mpz_class>>;

/// Rank over Q by fraction-free elimination with content removal.
long rank_exact(const std::vector<SparseRow>& rows);

/// Rank modulo a prime below 2^63; a lower bound for the rank over Q.
long rank_modular(const std::vector<SparseRow>& rows, std::uint64_t prime);

bool is_prime_u64(std::uint64_t n);

/// Pseudo-random prime in [2^61, 2^62) drawn from the seeded generator.
std::uint64_t random_prime62(std::uint64_t seed);

/// Tangent vectors of the congruence action at the point of the
/// Grassmannian spanned by the coefficient matrices: one row per elementary
/// matrix E_ij, giving the Pluecker vector of sum_k B_1 ^ ... ^ D_k ^ ... ^ B_d
/// with D_k = E^T B_k + B_k E.
std::vector<SparseRow> tangent_rows(const SkewPolyMatrix& a);

struct OrbitOptions {
  bool exact = false;
  std::uint64_t seed = 1;
};

struct OrbitReport {
  long ambient_grassmannian_dim = 0;
  long tangent_rank = 0;
  long orbit_dim = 0;
  long modular_rank = 0;
  std::optional<long> exact_rank;
  bool certified = false;  // exact elimination ran, or the modular rank is already maximal
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t rows = 0;
  std::size_t nonzero_columns = 0;
};

OrbitReport orbit_dimension(const SkewPolyMatrix& a, const OrbitOptions& options = {});

}  // namespace skewrank
