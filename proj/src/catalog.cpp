#include "skewrank/catalog.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "skewrank/orbit.hpp"
#include "skewrank/pencil.hpp"
#include "skewrank/rankcert.hpp"

namespace skewrank {

std::string content_digest(const SkewPolyMatrix& a) {
  std::ostringstream text;
  text << a.order() << ";" << ring_to_string(a.ring()) << ";";
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = i + 1; j < a.order(); ++j) {
      const Form f = a.entry(i, j);
      if (!f.is_zero()) text << i << "," << j << ":" << f.str() << ";";
    }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text.str()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << h;
  return hex.str();
}

namespace {

Ring abc() {
  static const Ring r = make_ring({"a", "b", "c"});
  return r;
}

struct UpperEntry {
  std::size_t i, j;
  const char* form;
};

SkewPolyMatrix build(std::size_t order, const Ring& ring, std::initializer_list<UpperEntry> entries) {
  SkewPolyMatrix m(order, ring);
  for (const auto& e : entries) m.set(e.i, e.j, std::string_view(e.form));
  return m;
}

SkewPolyMatrix pad(const SkewPolyMatrix& a, std::size_t zeros) {
  return direct_sum(a, zero_matrix(zeros, a.ring()));
}

Point triple(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }

SkewPolyMatrix westwick() {
  return build(10, make_ring({"a", "b", "c", "d"}),
               {{0, 7, "a"}, {0, 8, "b"}, {1, 6, "a"}, {1, 7, "b"}, {1, 9, "c"}, {2, 5, "-a"},
                {2, 6, "b"}, {2, 8, "c"}, {2, 9, "d"}, {3, 4, "a"}, {3, 5, "b"}, {3, 7, "c"},
                {3, 8, "d"}, {4, 6, "c"}, {4, 7, "-d"}, {5, 6, "d"}});
}

struct Recipe {
  const char* name;
  const char* group;
  const char* source;
  std::function<SkewPolyMatrix()> matrix;
  Expected expected;
  const char* digest;
};

Expected pencil_expect(std::size_t order, long rank, std::vector<int> partition, std::size_t padding,
                       std::optional<long> orbit = std::nullopt, std::optional<long> tangent = std::nullopt) {
  Expected e;
  e.order = order;
  e.nvars = 2;
  e.rank = rank;
  e.partition = std::move(partition);
  e.padding = padding;
  e.orbit_dim = orbit;
  e.tangent_rank = tangent;
  return e;
}

Expected net_expect(std::size_t order, long rank, std::optional<long> orbit = std::nullopt,
                    std::optional<long> c2 = std::nullopt) {
  Expected e;
  e.order = order;
  e.nvars = 3;
  e.rank = rank;
  e.orbit_dim = orbit;
  e.c2 = c2;
  return e;
}

const std::vector<Recipe>& recipes() {
  static const std::vector<Recipe> list = [] {
    std::vector<Recipe> r;
    r.push_back({"M7", "pencils", "canonical pencil, one block of size 3",
                 [] { return canonical_form({3}).matrix; }, pencil_expect(7, 6, {3}, 0, 38, 39), "7a3e730a4144859c"});
    r.push_back({"M8", "pencils", "canonical pencil, blocks of sizes 2 and 1",
                 [] { return canonical_form({2, 1}).matrix; }, [] {
                   auto e = pencil_expect(8, 6, {2, 1}, 0, 47);
                   e.gauss_span_dim = 4;
                   return e;
                 }(), "2cf8b46697adbba1"});
    r.push_back({"M9", "pencils", "canonical pencil, three blocks of size 1",
                 [] { return canonical_form({1, 1, 1}).matrix; }, pencil_expect(9, 6, {1, 1, 1}, 0, 56),
                 "03151a0dbd1cf83c"});
    r.push_back({"M7'", "pencils", "M7 with one zero row and column",
                 [] { return pad(canonical_form({3}).matrix, 1); }, pencil_expect(8, 6, {3}, 1, 45),
                 "4e983a1a9565e84f"});
    r.push_back({"M7''", "pencils", "M7 with two zero rows and columns",
                 [] { return pad(canonical_form({3}).matrix, 2); }, pencil_expect(9, 6, {3}, 2, 52),
                 "a3d6ae788b82e8de"});
    r.push_back({"M8'", "pencils", "M8 with one zero row and column",
                 [] { return pad(canonical_form({2, 1}).matrix, 1); }, pencil_expect(9, 6, {2, 1}, 1, 55),
                 "b7dae631dea6d300"});
    r.push_back({"pencil5", "pencils", "rank 4 pencil of order 5",
                 [] { return canonical_form({2}).matrix; }, pencil_expect(5, 4, {2}, 0), "7c93deff0a6df0d6"});
    r.push_back({"pencil6", "pencils", "rank 4 pencil of order 6",
                 [] { return canonical_form({1, 1}).matrix; }, pencil_expect(6, 4, {1, 1}, 0), "e42bdd44205198cb"});

    r.push_back({"primo", "blocks", "rank 2 net: lines in a fixed plane", [] { return primo_block(); },
                 net_expect(3, 2), "95e3efbc323fabb0"});
    r.push_back({"secondo4", "blocks", "rank 2 space: lines through a fixed point, four parameters",
                 [] { return secondo_block(4); }, [] {
                   Expected e;
                   e.order = 5;
                   e.nvars = 4;
                   e.rank = 2;
                   return e;
                 }(), "438b702914629df9"});
    r.push_back({"O2", "blocks", "rank 4 net of order 5",
                 [] {
                   return build(5, abc(), {{0, 3, "a"}, {0, 4, "b"}, {1, 2, "a"}, {1, 3, "b"}, {1, 4, "c"}, {2, 3, "c"}});
                 },
                 net_expect(5, 4), "53a480d167f94d3b"});
    r.push_back({"six_a", "blocks", "rank 4 net of order 6, two plane blocks",
                 [] { return direct_sum(primo_block(), primo_block()); }, net_expect(6, 4, std::nullopt, 1),
                 "3e8919c1c2aad27a"});
    r.push_back({"six_b", "blocks", "rank 4 net of order 6, null-correlation type",
                 [] {
                   return build(6, abc(), {{0, 3, "a"}, {0, 4, "b"}, {0, 5, "c"}, {1, 2, "a"}, {1, 3, "b"}, {2, 3, "c"}});
                 },
                 net_expect(6, 4, std::nullopt, 2), "d96a799a8be74fdc"});
    r.push_back({"six_c", "blocks", "rank 4 net of order 6, Steiner type",
                 [] {
                   return build(6, abc(), {{0, 3, "a"}, {0, 4, "b"}, {0, 5, "c"}, {1, 2, "a"}, {1, 3, "b"}, {1, 4, "c"}});
                 },
                 net_expect(6, 4, std::nullopt, 3), "f14b871d72b796c8"});
    r.push_back({"seven_a", "blocks", "rank 4 net of order 7",
                 [] {
                   return build(7, abc(), {{0, 4, "a"}, {0, 5, "b"}, {0, 6, "c"}, {1, 2, "a"}, {1, 3, "b"}, {2, 3, "c"}});
                 },
                 net_expect(7, 4), "c82fc76de8bf1a04"});
    r.push_back({"eight_b", "blocks", "rank 4 net of order 8",
                 [] {
                   return build(8, abc(), {{0, 5, "a"}, {0, 6, "b"}, {0, 7, "c"}, {1, 2, "a"}, {1, 3, "b"}, {1, 4, "c"}});
                 },
                 net_expect(8, 4), "088a69059ecdadbc"});
    r.push_back({"seven_c", "blocks", "rank 4 net of order 7, second form",
                 [] {
                   return build(7, abc(), {{0, 4, "a"}, {0, 5, "b"}, {0, 6, "c"}, {1, 2, "a"}, {1, 3, "b"}, {1, 4, "c"}});
                 },
                 net_expect(7, 4), "1ac92822247c9db0"});

    r.push_back({"pi1", "planes", "split kernel bundle O + O(3)",
                 [] {
                   return build(8, abc(), {{0, 5, "a"}, {0, 6, "b"}, {1, 4, "a"}, {1, 5, "b"}, {1, 6, "c"},
                                           {2, 3, "a"}, {2, 4, "b"}, {2, 5, "c"}, {3, 4, "c"}});
                 },
                 [] {
                   auto e = net_expect(8, 6, 54, 0);
                   e.generic_splitting = std::vector<int>{3, 0};
                   e.gauss_span_dim = 7;
                   return e;
                 }(), "6d84fe97c2081921"});
    r.push_back({"pi2", "planes", "split kernel bundle O(1) + O(2)",
                 [] {
                   return build(8, abc(), {{0, 3, "a"}, {0, 4, "b"}, {1, 2, "a"}, {1, 3, "b"}, {1, 4, "c"},
                                           {2, 3, "c"}, {5, 6, "a"}, {5, 7, "b"}, {6, 7, "c"}});
                 },
                 [] {
                   auto e = net_expect(8, 6, 60, 2);
                   e.generic_splitting = std::vector<int>{2, 1};
                   return e;
                 }(), "8a6d0afa96c425a5"});
    r.push_back({"schwarzenberger", "planes", "Steiner net with a conic of jumping lines",
                 [] {
                   return build(8, abc(), {{0, 3, "a"}, {0, 4, "b"}, {0, 5, "c"}, {1, 4, "a"}, {1, 5, "b"},
                                           {1, 6, "c"}, {2, 5, "a"}, {2, 6, "b"}, {2, 7, "c"}});
                 },
                 [] {
                   auto e = net_expect(8, 6, 52, 6);
                   e.generic_splitting = std::vector<int>{2, 1};
                   return e;
                 }(), "a7f2362f41fe0cc5"});
    r.push_back({"dk_steiner", "planes", "general Steiner net, Vandermonde parameters",
                 [] { return dk_steiner(triple(1, 1, 1), triple(1, 2, 3), triple(1, 4, 9)); },
                 [] {
                   auto e = net_expect(8, 6, 56, 6);
                   e.generic_splitting = std::vector<int>{2, 1};
                   return e;
                 }(), "8eb1f51d16d00b5d"});
    r.push_back({"pi3", "planes", "unstable kernel bundle",
                 [] {
                   return build(8, abc(), {{0, 5, "a"}, {0, 6, "b"}, {0, 7, "c"}, {1, 4, "a"}, {1, 5, "b"},
                                           {2, 3, "a"}, {2, 4, "b"}, {2, 5, "c"}, {3, 4, "c"}});
                 },
                 net_expect(8, 6, 58, 3), "16993431d5b7ec05"});
    r.push_back({"pi4", "planes", "kernel bundle with c2 = 5",
                 [] {
                   return build(8, abc(), {{0, 5, "a"}, {0, 6, "b"}, {0, 7, "c"}, {1, 4, "a"}, {1, 5, "b"},
                                           {1, 6, "c"}, {2, 3, "a"}, {2, 4, "b"}, {3, 4, "c"}});
                 },
                 net_expect(8, 6, 58, 5), "fa4dbbca923c8d55"});
    r.push_back({"pi5", "planes", "kernel bundle with c2 = 4, two-step projection",
                 [] {
                   return build(8, abc(), {{0, 1, "c"}, {0, 2, "a"}, {0, 7, "a"}, {1, 2, "b"}, {1, 7, "b"},
                                           {2, 3, "c-b"}, {2, 6, "a"}, {3, 6, "b"}, {4, 5, "a"}, {4, 6, "b"},
                                           {4, 7, "c"}});
                 },
                 net_expect(8, 6, 59, 4), "398a0028e373431f"});
    r.push_back({"pi6", "planes", "kernel bundle with c2 = 3, projection of three plane blocks",
                 [] {
                   return build(8, abc(), {{0, 1, "c"}, {0, 3, "a"}, {0, 7, "a"}, {1, 3, "b"}, {1, 7, "b"},
                                           {2, 3, "a"}, {2, 4, "b"}, {3, 4, "c"}, {5, 6, "a"}, {5, 7, "b"},
                                           {6, 7, "c"}});
                 },
                 [] {
                   auto e = net_expect(8, 6, 60, 3);
                   e.gauss_span_dim = 10;
                   return e;
                 }(), "927727aeff36821d"});

    r.push_back({"westwick", "westwick", "four-parameter space of order 10 and rank 8", westwick, [] {
                   Expected e;
                   e.order = 10;
                   e.nvars = 4;
                   e.rank = 8;
                   e.c2 = 6;
                   return e;
                 }(), "ca6d04a8bc92b717"});
    return r;
  }();
  return list;
}

CatalogEntry make_entry(const Recipe& rc) {
  CatalogEntry e;
  e.name = rc.name;
  e.group = rc.group;
  e.source = rc.source;
  e.matrix = rc.matrix();
  e.expected = rc.expected;
  e.digest = rc.digest;
  return e;
}

std::string vec_str(const std::vector<int>& v) { return "(" + partition_to_string(v) + ")"; }

}  // namespace

SkewPolyMatrix primo_block() { return build(3, abc(), {{0, 1, "a"}, {0, 2, "b"}, {1, 2, "c"}}); }

SkewPolyMatrix secondo_block(std::size_t nvars) {
  if (nvars < 1 || nvars > 26) throw std::invalid_argument("secondo_block: 1..26 variables");
  std::vector<std::string> names;
  for (std::size_t k = 0; k < nvars; ++k) names.emplace_back(1, static_cast<char>('a' + k));
  const Ring ring = make_ring(names);
  SkewPolyMatrix m(nvars + 1, ring);
  for (std::size_t k = 0; k < nvars; ++k) m.set(0, k + 1, Form::variable(ring, k));
  return m;
}

std::vector<Point> dk_jumping_lines(const Point& lambda, const Point& mu, const Point& nu) {
  if (lambda.size() != 3 || mu.size() != 3 || nu.size() != 3)
    throw std::invalid_argument("dk_steiner: parameters must be triples");
  std::vector<Point> lines{triple(1, 0, 0), triple(0, 1, 0), triple(0, 0, 1)};
  for (std::size_t i = 0; i < 3; ++i) lines.push_back(primitive_point({lambda[i], mu[i], nu[i]}));
  return lines;
}

SkewPolyMatrix dk_steiner(const Point& lambda, const Point& mu, const Point& nu) {
  const auto lines = dk_jumping_lines(lambda, mu, nu);
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = x + 1; y < 6; ++y)
      for (std::size_t z = y + 1; z < 6; ++z) {
        RationalMatrix m(3, 3);
        for (Eigen::Index c = 0; c < 3; ++c) {
          m(0, c) = lines[x][static_cast<std::size_t>(c)];
          m(1, c) = lines[y][static_cast<std::size_t>(c)];
          m(2, c) = lines[z][static_cast<std::size_t>(c)];
        }
        if (determinant(m).is_zero()) throw std::invalid_argument("dk_steiner: lines are not in general position");
      }
  const Ring ring = abc();
  const Form a = Form::variable(ring, 0), b = Form::variable(ring, 1), c = Form::variable(ring, 2);
  SkewPolyMatrix m(8, ring);
  for (std::size_t i = 0; i < 3; ++i) {
    m.set(i, 3 + i, lambda[i] * a + mu[i] * b + nu[i] * c);
    m.set(i, 6, lambda[i] * a);
    m.set(i, 7, mu[i] * b);
  }
  return m;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& r : recipes()) n.emplace_back(r.name);
    return n;
  }();
  return names;
}

CatalogEntry get(const std::string& name) {
  for (const auto& r : recipes())
    if (name == r.name) return make_entry(r);
  throw std::out_of_range("unknown catalog entry '" + name + "'");
}

std::vector<CatalogEntry> all_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& r : recipes()) out.push_back(make_entry(r));
  return out;
}

std::size_t ReproductionReport::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ReportRow& r) { return !r.pass; }));
}

namespace {

std::vector<ReportRow> reproduce_entry(const CatalogEntry& e, const ReproduceOptions& opt) {
  std::vector<ReportRow> rows;
  auto add = [&](std::string field, std::string expected, std::string observed, std::string note = {}) {
    const bool pass = expected == observed;
    rows.push_back({e.name, std::move(field), std::move(expected), std::move(observed), pass, std::move(note)});
  };
  auto guarded = [&](const std::string& field, const std::string& expected, const std::function<std::string()>& fn) {
    try {
      add(field, expected, fn());
    } catch (const std::exception& ex) {
      add(field, expected, "error", ex.what());
    }
  };
  const Expected& x = e.expected;
  const SkewPolyMatrix& m = e.matrix;
  add("digest", e.digest, content_digest(m));
  add("order", std::to_string(x.order), std::to_string(m.order()));
  add("nvars", std::to_string(x.nvars), std::to_string(m.nvars()));
  guarded("certificate", std::to_string(x.rank) + (x.constant ? " constant" : " non-constant"), [&] {
    const auto c = certify_constant_rank(m);
    return std::to_string(c.generic_rank) + (c.constant ? " constant" : " non-constant");
  });
  if (x.partition) {
    guarded("partition", vec_str(*x.partition) + " padding " + std::to_string(x.padding.value_or(0)), [&] {
      const auto inv = minimal_indices(m);
      return vec_str(inv.partition) + " padding " + std::to_string(inv.padding);
    });
  }
  if (opt.orbits && (x.orbit_dim || x.tangent_rank)) {
    OrbitOptions oo;
    oo.exact = true;
    oo.seed = opt.seed;
    std::optional<OrbitReport> rep;
    std::string err;
    try {
      rep = orbit_dimension(m, oo);
    } catch (const std::exception& ex) {
      err = ex.what();
    }
    const std::string note =
        (e.name == "pi1" || e.name == "pi2" || e.name == "schwarzenberger" || e.name == "dk_steiner")
            ? "pairing of the two listed values follows the natural reading"
            : "";
    if (x.tangent_rank)
      add("tangent_rank", std::to_string(*x.tangent_rank), rep ? std::to_string(rep->tangent_rank) : "error",
          rep ? note : err);
    if (x.orbit_dim)
      add("orbit_dim", std::to_string(*x.orbit_dim), rep ? std::to_string(rep->orbit_dim) : "error", rep ? note : err);
  }
  if (opt.fingerprints) {
    if (x.c2)
      guarded("c2", std::to_string(*x.c2),
              [&] { return std::to_string(section_zero_scheme_degree(m, std::nullopt, opt.seed).degree); });
    if (x.generic_splitting)
      guarded("generic_splitting", vec_str(*x.generic_splitting),
              [&] { return vec_str(generic_splitting(m, opt.seed).splitting); });
    if (x.gauss_span_dim)
      guarded("gauss_span_dim", std::to_string(*x.gauss_span_dim), [&] { return std::to_string(gauss_span_dim(m)); });
  }
  return rows;
}

}  // namespace

ReproductionReport reproduce(std::span<const CatalogEntry> entries, const ReproduceOptions& options) {
  std::vector<const CatalogEntry*> selected;
  for (const auto& e : entries)
    if (!options.group || e.group == *options.group) selected.push_back(&e);
  std::sort(selected.begin(), selected.end(),
            [](const CatalogEntry* x, const CatalogEntry* y) { return x->name < y->name; });
  std::vector<std::future<std::vector<ReportRow>>> jobs;
  for (const auto* e : selected)
    jobs.push_back(std::async(std::launch::async, [e, &options] { return reproduce_entry(*e, options); }));
  ReproductionReport report;
  report.seed = options.seed;
  for (auto& j : jobs) {
    auto rows = j.get();
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

ReproductionReport reproduce_all(const ReproduceOptions& options) {
  const auto entries = all_entries();
  return reproduce(entries, options);
}

std::string render_table(const ReproductionReport& report) {
  std::size_t w[4] = {5, 5, 8, 8};
  for (const auto& r : report.rows) {
    w[0] = std::max(w[0], r.entry.size());
    w[1] = std::max(w[1], r.field.size());
    w[2] = std::max(w[2], r.expected.size());
    w[3] = std::max(w[3], r.observed.size());
  }
  std::ostringstream os;
  auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d,
                  const std::string& s, const std::string& note) {
    os << std::left << std::setw(static_cast<int>(w[0])) << a << "  " << std::setw(static_cast<int>(w[1])) << b
       << "  " << std::setw(static_cast<int>(w[2])) << c << "  " << std::setw(static_cast<int>(w[3])) << d << "  "
       << s;
    if (!note.empty()) os << "  " << note;
    os << "\n";
  };
  line("entry", "field", "expected", "observed", "status", "");
  for (const auto& r : report.rows) line(r.entry, r.field, r.expected, r.observed, r.pass ? "ok" : "FAIL", r.note);
  os << report.rows.size() << " checks, " << report.failures() << " failures, seed " << report.seed << "\n";
  return os.str();
}

}  // namespace skewrank
