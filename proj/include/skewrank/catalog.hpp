#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewrank/geometry.hpp"
#include "skewrank/skew_matrix.hpp"

namespace skewrank {

struct Expected {
  std::size_t order = 0;
  std::size_t nvars = 0;
  long rank = 0;
  bool constant = true;
  std::optional<std::vector<int>> partition;
  std::optional<std::size_t> padding;
  std::optional<long> tangent_rank;
  std::optional<long> orbit_dim;
  std::optional<long> c2;  // zero-scheme degree (curve degree for four parameters)
  std::optional<std::vector<int>> generic_splitting;
  std::optional<long> gauss_span_dim;
};

struct CatalogEntry {
  std::string name;
  std::string group;   // pencils, blocks, planes, westwick
  std::string source;  // short description of where the matrix comes from
  SkewPolyMatrix matrix;
  Expected expected;
  std::string digest;  // frozen content digest of the transcription
};

/// FNV-1a 64-bit digest of the canonical text of a matrix, as 16 hex digits.
std::string content_digest(const SkewPolyMatrix& a);

const std::vector<std::string>& catalog_names();
CatalogEntry get(const std::string& name);
std::vector<CatalogEntry> all_entries();

/// 3x3 net a, b, c of rank 2.
SkewPolyMatrix primo_block();
/// First row carrying one variable per column: order nvars + 1, rank 2.
SkewPolyMatrix secondo_block(std::size_t nvars);

/// Steiner net [[0, B], [-B^T, 0]] with B the 3x5 matrix built from three
/// rational triples. Throws if the six lines x_0, x_1, x_2 and
/// (lambda_i, mu_i, nu_i) . x = 0 are not in general position.
SkewPolyMatrix dk_steiner(const Point& lambda, const Point& mu, const Point& nu);

/// The six jumping lines of dk_steiner in dual coordinates.
std::vector<Point> dk_jumping_lines(const Point& lambda, const Point& mu, const Point& nu);

struct ReportRow {
  std::string entry;
  std::string field;
  std::string expected;
  std::string observed;
  bool pass = false;
  std::string note;
};

struct ReproductionReport {
  std::vector<ReportRow> rows;
  std::uint64_t seed = 0;
  std::size_t failures() const;
};

struct ReproduceOptions {
  std::optional<std::string> group;
  std::uint64_t seed = 1;
  bool orbits = true;
  bool fingerprints = true;
};

/// Runs every entry through certification, classification, orbit dimension
/// and bundle invariants; rows are ordered by entry name.
ReproductionReport reproduce(std::span<const CatalogEntry> entries, const ReproduceOptions& options = {});
ReproductionReport reproduce_all(const ReproduceOptions& options = {});

std::string render_table(const ReproductionReport& report);

}  // namespace skewrank
