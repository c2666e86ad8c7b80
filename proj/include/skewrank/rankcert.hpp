#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewrank/skew_matrix.hpp"

namespace skewrank {

enum class CertMethod { BinaryGcd, Groebner, Sampled };
enum class Verdict { Constant, NonConstant, Unknown };

std::string to_string(CertMethod m);
std::string to_string(Verdict v);

struct RankCertificate {
  long generic_rank = 0;
  bool constant = false;
  Verdict verdict = Verdict::Unknown;
  CertMethod method = CertMethod::Groebner;
  std::optional<std::vector<Rational>> witness;  // parameter point where the rank drops
  std::size_t sampled_points = 0;
};

/// Largest 2k with a sub-Pfaffian of size 2k that is not the zero form.
long generic_rank(const SkewPolyMatrix& a);

enum class Route { Auto, BinaryGcd, Groebner };

/// Decides constant rank on all of projective parameter space. Auto uses the
/// binary gcd for pencils and Groebner bases otherwise.
RankCertificate certify_constant_rank(const SkewPolyMatrix& a, Route route = Route::Auto);

/// Evaluation at pseudo-random points. Never certifies: the verdict is
/// NonConstant with a witness if a drop was seen, Unknown otherwise.
RankCertificate sample_rank(const SkewPolyMatrix& a, std::size_t points, std::uint64_t seed);

/// Deterministic search for a rational parameter point where every form
/// vanishes: small integer points, then rational roots along 50 lines.
std::optional<std::vector<Rational>> find_common_zero(const std::vector<Form>& forms);

/// Integer points with coordinates in [-height, height] whose first nonzero
/// coordinate is positive, in lexicographic order.
std::vector<std::vector<Rational>> small_integer_points(std::size_t nvars, long height);

/// Scales a nonzero vector to coprime integers with first nonzero entry positive.
std::vector<Rational> primitive_point(std::vector<Rational> p);

/// Nonzero integer points with coordinates drawn uniformly from [-bound, bound].
std::vector<std::vector<Rational>> random_points(std::size_t nvars, std::size_t count, std::uint64_t seed,
                                                 long bound = 1000);

/// 2r <= N <= 3r - 1 with order = N + 1 and rank = 2r.
bool pencil_bound_holds(std::size_t order, long rank);

/// Sanity check of a certified constant-rank pencil against the order bound.
/// Degenerate pencils are only held to the lower bound, since zero rows and
/// columns can be added freely.
bool check_bound(const SkewPolyMatrix& a, const RankCertificate& cert, bool nondegenerate);

}  // namespace skewrank
