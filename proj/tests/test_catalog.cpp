#include "doctest.h"
#include "helpers.hpp"

#include <algorithm>
#include <set>

#include "skewrank/json_io.hpp"
#include "skewrank/rankcert.hpp"

using namespace testutil;

TEST_SUITE("catalog") {

TEST_CASE("lookups") {
  const auto m8 = get("M8");
  CHECK(m8.matrix.order() == 8);
  CHECK(m8.matrix.nvars() == 2);
  CHECK(m8.expected.partition == std::vector<int>{2, 1});
  CHECK(m8.expected.orbit_dim == 47);

  const auto w = get("westwick");
  CHECK(w.matrix.order() == 10);
  CHECK(w.matrix.nvars() == 4);
  CHECK(w.expected.rank == 8);
  CHECK(w.expected.constant);
  CHECK(w.expected.c2 == 6);

  const auto pi5 = get("pi5");
  CHECK(pi5.matrix.order() == 8);
  CHECK(pi5.matrix.nvars() == 3);
  CHECK(pi5.expected.c2 == 4);
  CHECK(pi5.expected.orbit_dim == 59);

  CHECK_THROWS_AS(get("pi7"), std::out_of_range);
}

TEST_CASE("every entry matches its recorded shape and digest") {
  const auto entries = all_entries();
  CHECK(entries.size() == catalog_names().size());
  std::set<std::string> names;
  for (const auto& e : entries) {
    CAPTURE(e.name);
    names.insert(e.name);
    CHECK(e.matrix.order() == e.expected.order);
    CHECK(e.matrix.nvars() == e.expected.nvars);
    CHECK(content_digest(e.matrix) == e.digest);
    for (std::size_t i = 0; i < e.matrix.order(); ++i) {
      CHECK(e.matrix.entry(i, i).is_zero());
      for (std::size_t j = i + 1; j < e.matrix.order(); ++j) {
        CHECK(e.matrix.entry(i, j).is_linear());
        CHECK(e.matrix.entry(j, i) == -e.matrix.entry(i, j));
      }
    }
  }
  CHECK(names.size() == entries.size());
}

TEST_CASE("digests change with the transcription") {
  auto m = get("pi4").matrix;
  const auto before = content_digest(m);
  m.set(3, 4, "b");
  CHECK(content_digest(m) != before);
  CHECK(content_digest(get("pi4").matrix) == before);
  CHECK(before.size() == 16);
}

TEST_CASE("general Steiner family") {
  const Point lambda = pt({1, 1, 1}), mu = pt({1, 2, 3}), nu = pt({1, 4, 9});
  const auto a = dk_steiner(lambda, mu, nu);
  CHECK(a.order() == 8);
  CHECK(a.nvars() == 3);
  const auto c = certify_constant_rank(a);
  CHECK(c.constant);
  CHECK(c.generic_rank == 6);
  CHECK(dk_jumping_lines(lambda, mu, nu).size() == 6);
  CHECK_THROWS(dk_steiner(lambda, lambda, nu));
  CHECK_THROWS(dk_steiner(pt({1, 0, 0}), mu, nu));
  const auto other = dk_steiner(pt({1, -1, 2}), pt({2, 1, 1}), pt({1, 3, -1}));
  CHECK(certify_constant_rank(other).constant);
}

TEST_CASE("building blocks") {
  CHECK(generic_rank(primo_block()) == 2);
  CHECK(certify_constant_rank(primo_block()).constant);
  const auto s = secondo_block(4);
  CHECK(s.order() == 5);
  CHECK(s.nvars() == 4);
  CHECK(certify_constant_rank(s).constant);
  CHECK(certify_constant_rank(s).generic_rank == 2);
}

TEST_CASE("a corrupted entry produces exactly one failure row") {
  auto entry = get("M8");
  entry.expected.orbit_dim = 48;
  const std::vector<CatalogEntry> one{entry};
  const auto report = reproduce(one);
  CHECK(report.failures() == 1);
  const auto bad = std::find_if(report.rows.begin(), report.rows.end(), [](const ReportRow& r) { return !r.pass; });
  REQUIRE(bad != report.rows.end());
  CHECK(bad->entry == "M8");
  CHECK(bad->field == "orbit_dim");
  CHECK(bad->expected == "48");
  CHECK(bad->observed == "47");
}

TEST_CASE("group filter runs only the selected entries") {
  ReproduceOptions opt;
  opt.group = "pencils";
  const auto report = reproduce_all(opt);
  CHECK(report.failures() == 0);
  std::set<std::string> seen;
  for (const auto& r : report.rows) seen.insert(r.entry);
  CHECK(seen == std::set<std::string>{"M7", "M7'", "M7''", "M8", "M8'", "M9", "pencil5", "pencil6"});
  CHECK(std::is_sorted(report.rows.begin(), report.rows.end(),
                       [](const ReportRow& x, const ReportRow& y) { return x.entry < y.entry; }));
  const auto table = render_table(report);
  CHECK(table.find("M8") != std::string::npos);
  CHECK(table.find("orbit_dim") != std::string::npos);
}

TEST_CASE("block entries reproduce") {
  ReproduceOptions opt;
  opt.group = "blocks";
  opt.seed = 5;
  const auto report = reproduce_all(opt);
  CHECK(report.seed == 5);
  CHECK(report.failures() == 0);
  CHECK_FALSE(report.rows.empty());
}

TEST_CASE("no extension of a rank 6 plane by a fourth generator keeps constant rank") {
  // consistency check over seeded attempts, not a proof of nonexistence
  const Ring abcd = make_ring({"a", "b", "c", "d"});
  const std::vector<std::string> planes{"pi1", "pi2", "pi3", "pi4", "pi5", "pi6", "schwarzenberger", "dk_steiner"};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 g(seed);
    SkewPolyMatrix a = embed(get(planes[seed % planes.size()]).matrix, abcd);
    const RationalMatrix b = random_skew(8, g, 9);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = i + 1; j < 8; ++j) a.set(i, j, a.entry(i, j) + b(i, j) * Form::variable(abcd, 3));
    const auto c = certify_constant_rank(a);
    CHECK_FALSE(c.constant);
  }
}

TEST_CASE("json round trips") {
  for (const char* name : {"M8", "pi5", "westwick"}) {
    const auto a = get(name).matrix;
    const json j = matrix_to_json(a);
    CHECK(matrix_from_json(json::parse(j.dump())) == a);
  }
  const Ring r = ring_abc();
  const Form f = F("3/4*a^2 - 7*b*c + 100000000000000000000*c^2", r);
  const json jf = form_to_json(f);
  CHECK(jf["terms"][0]["den"] == "4");
  CHECK(form_from_json(jf) == f);

  const json m = json::parse(R"({"order":3,"vars":["a","b","c"],"upper":[
      {"i":0,"j":1,"form":"a"},{"i":0,"j":2,"form":"b"},
      {"i":1,"j":2,"form":{"vars":["a","b","c"],"terms":[{"exp":[0,0,1],"num":"1","den":"1"}]}}]})");
  CHECK(matrix_from_json(m) == primo_block());

  const Ideal id(r, {F("a^2", r), F("b", r)});
  const Ideal back = ideal_from_json(ideal_to_json(id));
  CHECK(back.generators == id.generators);

  CHECK_THROWS(matrix_from_json(json::parse(R"({"order":2,"vars":["a"],"upper":[{"i":1,"j":0,"form":"a"}]})")));
  CHECK_THROWS(matrix_from_json(json::parse(R"({"order":2,"upper":[]})")));
  CHECK_THROWS(matrix_from_json(json::parse(R"({"order":2,"vars":["a"],"upper":[{"i":0,"j":1,"form":"a^2"}]})")));
}

TEST_CASE("json reports") {
  const auto c = to_json(certify_constant_rank(get("M8").matrix));
  CHECK(c["generic_rank"] == 6);
  CHECK(c["constant"] == true);
  CHECK(c["method"] == "binary-gcd");
  CHECK(c["witness"].is_null());
  const auto o = to_json(orbit_dimension(get("M7").matrix));
  CHECK(o["orbit_dim"] == 38);
  CHECK(o["tangent_rank"] == 39);
}

}  // TEST_SUITE
