// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "helpers.hpp"
#include "skewrank/geometry.hpp"
#include "skewrank/groebner.hpp"
#include "skewrank/orbit.hpp"
#include "skewrank/pencil.hpp"
#include "skewrank/rankcert.hpp"

using namespace testutil;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void certify_case(Outcome& out, const std::string& name, long rank, CertMethod method, double limit) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = certify_constant_rank(get(name).matrix);
  const double secs = seconds_since(t0);
  out.require(c.constant && c.generic_rank == rank && c.method == method,
              name + " certified " + to_string(c.verdict) + " rank " + std::to_string(c.generic_rank) + " via " +
                  to_string(c.method));
  out.require(secs < limit, name + " took " + std::to_string(secs) + " s");
}

void criterion1(Outcome& out) {
  for (const char* n : {"M7", "M8", "M9"}) certify_case(out, n, 6, CertMethod::BinaryGcd, 1.0);
  for (const char* n : {"pi1", "pi2", "pi3", "pi4", "pi5", "pi6", "schwarzenberger", "dk_steiner"})
    certify_case(out, n, 6, CertMethod::Groebner, 60.0);
  certify_case(out, "westwick", 8, CertMethod::Groebner, 60.0);
  out.require(get("westwick").matrix.nvars() == 4, "westwick has four parameters");
  out.notes << " 12 certificates";
}

void criterion2(Outcome& out) {
  const std::vector<std::pair<std::string, std::vector<int>>> cases{
      {"M7", {3}}, {"M8", {2, 1}}, {"M9", {1, 1, 1}}, {"pencil5", {2}}, {"pencil6", {1, 1}}};
  for (const auto& [name, part] : cases)
    out.require(minimal_indices(get(name).matrix).partition == part, name + " partition");

  std::size_t round_trips = 0;
  for (int r = 1; r <= 5; ++r)
    for (const auto& part : partitions_of(r, r)) {
      const auto canon = canonical_form(part);
      out.require(minimal_indices(canon.matrix) == canon.invariants, "round trip " + partition_to_string(part));
      ++round_trips;
    }

  std::mt19937_64 g(2024);
  for (const auto& [name, part] : cases) {
    const auto a = get(name).matrix;
    for (int k = 0; k < 50; ++k) {
      out.require(equivalent(a, random_congruent(a, g)), name + " congruence " + std::to_string(k));
      out.require(equivalent(a, random_reparametrized(a, g)), name + " parameter change " + std::to_string(k));
    }
  }
  out.notes << " " << round_trips << " round trips, 500 invariance checks";
}

void criterion3(Outcome& out) {
  const std::vector<std::pair<std::string, long>> single{{"M8", 47}, {"M7'", 45}, {"M7''", 52}, {"M8'", 55},
                                                         {"M9", 56}, {"pi3", 58}, {"pi4", 58}, {"pi5", 59},
                                                         {"pi6", 60}};
  const auto t0 = std::chrono::steady_clock::now();
  const auto m7 = orbit_dimension(get("M7").matrix);
  out.require(m7.tangent_rank == 39 && m7.orbit_dim == 38, "M7 tangent rank / orbit dim");
  for (const auto& [name, dim] : single) {
    const long got = orbit_dimension(get(name).matrix).orbit_dim;
    out.require(got == dim, name + " orbit dim " + std::to_string(got));
  }
  const std::vector<std::array<std::string, 2>> pairs{{"pi1", "pi2"}, {"schwarzenberger", "dk_steiner"}};
  const std::vector<std::array<long, 2>> values{{54, 60}, {52, 56}};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const long x = orbit_dimension(get(pairs[k][0]).matrix).orbit_dim;
    const long y = orbit_dimension(get(pairs[k][1]).matrix).orbit_dim;
    if (x == values[k][1] && y == values[k][0]) {
      out.notes << " pairing swapped: " << pairs[k][0] << "=" << x << ", " << pairs[k][1] << "=" << y << ";";
    } else {
      out.require(x == values[k][0], pairs[k][0] + " orbit dim " + std::to_string(x));
      out.require(y == values[k][1], pairs[k][1] + " orbit dim " + std::to_string(y));
    }
  }
  const double secs = seconds_since(t0);
  out.require(secs < 300.0, "runtime " + std::to_string(secs) + " s");
  out.notes << " 15 orbit dimensions";
}

void criterion4(Outcome& out) {
  const std::vector<std::pair<std::string, long>> cases{{"pi1", 0}, {"pi2", 2}, {"pi3", 3}, {"pi6", 3},
                                                        {"pi5", 4}, {"pi4", 5}, {"schwarzenberger", 6}};
  std::mt19937_64 g(4);
  for (const auto& [name, c2] : cases) {
    const auto a = get(name).matrix;
    for (int k = 0; k < 3; ++k) {
      const long got = section_zero_scheme_degree(a, random_point(a.order(), g, 100)).degree;
      out.require(got == c2, name + " draw " + std::to_string(k) + " gave " + std::to_string(got));
    }
  }
  const long w = section_zero_scheme_degree(get("westwick").matrix).degree;
  out.require(w == 6, "westwick curve degree " + std::to_string(w));
  out.notes << " 21 covector draws plus the four-parameter curve";
}

void criterion5(Outcome& out) {
  const auto b = primo_block();
  const auto nine = direct_sum(direct_sum(b, b), b);
  const auto s6 = project(nine, pt({1, 0, 0, 0, 1, 0, 0, 0, 1}));
  out.require(s6.valid && s6.certificate.generic_rank == 6, "nine-order projection re-certifies");
  out.require(s6.result == get("pi6").matrix, "projection equals pi6");
  const auto full = congruence_transform(nine, RationalMatrix(s6.basis_change.transpose()));
  bool same = true;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) same = same && full.entry(i, j) == s6.result.entry(i, j);
  out.require(same, "recorded basis change reproduces the result");

  const auto ten = direct_sum(direct_sum(b, b), secondo_block(3));
  const auto first = project(ten, pt({1, 0, 0, 0, 1, 0, 0, 0, 0, 1}));
  const auto second = project(first.result, pt({0, 0, 1, 1, 0, 0, 0, 1, 0}));
  out.require(first.valid && second.valid, "two-step projection re-certifies");
  out.require(second.result == get("pi5").matrix, "two-step projection equals pi5");

  const auto pi6 = get("pi6").matrix;
  const RationalMatrix m = evaluate_at(pi6, pt({1, 2, 3}));
  Point center;
  for (Eigen::Index i = 0; i < m.rows(); ++i) center.push_back(m(i, 0));
  const auto bad = project(pi6, center);
  out.require(!bad.valid && bad.certificate.witness.has_value(), "center in an image rejected with witness");
  if (bad.certificate.witness)
    out.require(rank_at(bad.result, *bad.certificate.witness) < 6, "witness shows a drop");
}

void criterion6(Outcome& out) {
  const Point lambda = pt({1, 1, 1}), mu = pt({1, 2, 3}), nu = pt({1, 4, 9});
  const auto dk = dk_steiner(lambda, mu, nu);
  const auto dk_generic = generic_splitting(dk).splitting;
  for (const auto& l : dk_jumping_lines(lambda, mu, nu)) out.require(jumping_test(dk, l, dk_generic), "DK line jumps");
  std::size_t negatives = 0;
  for (const auto& l : random_lines_avoiding(50, 6, dk_jumping_lines(lambda, mu, nu))) {
    const bool jumps = jumping_test(dk, l, dk_generic);
    out.require(!jumps, "random line jumps");
    negatives += jumps ? 0 : 1;
  }

  const auto sw = get("schwarzenberger").matrix;
  const auto found = jumping_scan(sw, 200, {}, generic_splitting(sw).splitting);
  out.require(found.size() >= 6, "Schwarzenberger jumping lines found: " + std::to_string(found.size()));
  std::vector<Point> lines;
  for (const auto& j : found) lines.push_back(j.line);
  const auto fit = fit_dual_conic(lines);
  out.require(fit.determined && fit.all_on_conic, "jumping lines on one dual conic");

  for (const char* name : {"pi1", "pi2", "pi6"}) {
    const auto a = get(name).matrix;
    const auto jumps = jumping_scan(a, 200, {}, generic_splitting(a).splitting);
    out.require(jumps.empty(), std::string(name) + " has jumping lines");
  }
  out.notes << " 6 DK lines, " << negatives << " negatives, " << found.size() << " Schwarzenberger lines";
}

void criterion7(Outcome& out) {
  std::mt19937_64 g(7);
  for (std::size_t n = 2; n <= 10; n += 2)
    for (int k = 0; k < 10; ++k) {
      const RationalMatrix a = random_skew(n, g);
      const Rational pf = pfaffian(a);
      out.require(pf * pf == determinant(a), "Pf^2 = det");
      const RationalMatrix p = random_matrix(n, g);
      out.require(pfaffian(RationalMatrix(p.transpose() * a * p)) == determinant(p) * pf, "Pf(P^T A P)");
    }

  for (const char* name : {"M8", "M9", "pi2", "pi6"}) {
    const auto a = get(name).matrix;
    const auto cert = certify_constant_rank(a);
    const long orbit = orbit_dimension(a).orbit_dim;
    const auto moved = random_congruent(a, g);
    const auto c2 = certify_constant_rank(moved);
    out.require(c2.constant == cert.constant && c2.generic_rank == cert.generic_rank, std::string(name) + " cert");
    out.require(orbit_dimension(moved).orbit_dim == orbit, std::string(name) + " orbit dim");
    if (a.nvars() == 2) out.require(minimal_indices(moved) == minimal_indices(a), std::string(name) + " partition");
  }

  for (const char* name : {"pi1", "pi3", "schwarzenberger"}) {
    const auto a = get(name).matrix;
    const auto gb = buchberger(Ideal(a.ring(), sub_pfaffians(a, 6)));
    for (std::size_t i = 0; i < gb.basis.size(); ++i)
      for (std::size_t j = i + 1; j < gb.basis.size(); ++j)
        out.require(normal_form(s_polynomial(gb.basis[i], gb.basis[j]), gb).is_zero(), "S-polynomial reduction");
  }

  const Ring ab = ring_ab();
  for (int k = 0; k < 30; ++k) {
    const Form common = random_binary(ab, 2, g);
    const std::vector<Form> in{common * random_binary(ab, 2, g), common * random_binary(ab, 3, g)};
    const Form d = binary_gcd(in);
    std::vector<Form> quotients;
    for (const auto& f : in) quotients.push_back(divide_exact(f, d));
    out.require(binary_gcd(quotients) == F("1", ab), "gcd quotients coprime");
  }

  for (const char* name : {"M8", "pi1", "pi2", "pi3", "pi4", "pi5", "pi6", "schwarzenberger", "dk_steiner"}) {
    const auto a = get(name).matrix;
    const auto k = kernel_plucker(a);
    for (const auto& p : random_points(a.nvars(), 100, 17)) {
      out.require(rank(plucker_tensor_at(k, a.order(), p)) == 2, std::string(name) + " tensor rank");
      out.require(kernel_matches(a, k, p), std::string(name) + " kernel match");
    }
  }

  const std::vector<std::pair<std::string, long>> spans{{"pi1", 7}, {"pi6", 8}, {"M8", 4}};
  for (const auto& [name, dim] : spans) {
    const long got = gauss_span_dim(get(name).matrix);
    out.require(got == dim, name + " gauss span " + std::to_string(got) + ", expected " + std::to_string(dim));
  }
}

void criterion8(Outcome& out) {
  const Ring abcd = make_ring({"a", "b", "c", "d"});
  const std::vector<std::string> planes{"pi1", "pi2", "pi3", "pi4", "pi5", "pi6", "schwarzenberger", "dk_steiner"};
  std::size_t failed = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 g(seed);
    SkewPolyMatrix a = embed(get(planes[seed % planes.size()]).matrix, abcd);
    const RationalMatrix b = random_skew(8, g, 9);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = i + 1; j < 8; ++j) a.set(i, j, a.entry(i, j) + b(i, j) * Form::variable(abcd, 3));
    const bool constant = certify_constant_rank(a).constant;
    out.require(!constant, "attempt " + std::to_string(seed) + " certified");
    failed += constant ? 0 : 1;
  }
  out.notes << " " << failed << "/20 extensions fail certification (consistency check, not a proof)";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"constant-rank certification", criterion1}, {"pencil classification", criterion2},
      {"orbit dimensions", criterion3},            {"c2 via zero schemes", criterion4},
      {"projection pipeline", criterion5},         {"jumping lines", criterion6},
      {"property suites", criterion7},             {"four-dimensional extensions", criterion8}};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].second(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.notes << " [exception: " << e.what() << "]";
    }
    std::cout << "criterion " << (k + 1) << " " << criteria[k].first << ": " << (out.pass ? "PASS" : "FAIL") << " ("
              << std::fixed << std::setprecision(2) << seconds_since(t0) << " s)" << out.notes.str() << "\n"
              << std::flush;
    failures += out.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass\n";
  return failures == 0 ? 0 : 1;
}
