// skewrank: command-line front end over the library, speaking the JSON formats
// of json_io. Exit codes: 0 ok, 2 usage or bad input, 3 property refuted,
// 4 unknown or budget exhausted.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "skewrank/catalog.hpp"
#include "skewrank/geometry.hpp"
#include "skewrank/groebner.hpp"
#include "skewrank/json_io.hpp"
#include "skewrank/orbit.hpp"
#include "skewrank/pencil.hpp"
#include "skewrank/rankcert.hpp"

using namespace skewrank;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kRefuted = 3;
constexpr int kUnknown = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

/// A JSON matrix file, a catalog dump (with a "matrix" field), or
/// "catalog:<name>".
SkewPolyMatrix load_matrix(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) {
    try {
      return get(source.substr(8)).matrix;
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
  }
  const json j = read_json(source);
  return matrix_from_json(j.contains("matrix") ? j.at("matrix") : j);
}

Point parse_point(const std::string& text) {
  Point p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) p.push_back(Rational::parse(item));
  if (p.empty()) throw UsageError("empty point: " + text);
  return p;
}

void emit(json j, std::uint64_t seed) {
  j["seed"] = seed;
  std::cout << j.dump(2) << "\n";
}

json expected_json(const Expected& e) {
  json j = {{"order", e.order}, {"nvars", e.nvars}, {"rank", e.rank}, {"constant", e.constant}};
  if (e.partition) j["partition"] = *e.partition;
  if (e.padding) j["padding"] = *e.padding;
  if (e.tangent_rank) j["tangent_rank"] = *e.tangent_rank;
  if (e.orbit_dim) j["orbit_dim"] = *e.orbit_dim;
  if (e.c2) j["c2"] = *e.c2;
  if (e.generic_splitting) j["generic_splitting"] = *e.generic_splitting;
  if (e.gauss_span_dim) j["gauss_span_dim"] = *e.gauss_span_dim;
  return j;
}

int exit_for(const RankCertificate& c) {
  switch (c.verdict) {
    case Verdict::Constant: return kOk;
    case Verdict::NonConstant: return kRefuted;
    case Verdict::Unknown: return kUnknown;
  }
  return kUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-rank spaces of skew-symmetric matrices of linear forms"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "seed for every pseudo-random choice")->capture_default_str();

  std::string input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("matrix", input, "matrix JSON file, '-' for stdin, or catalog:<name>")->required();
  };

  auto* certify = app.add_subcommand("certify", "decide constant rank");
  add_input(certify);
  std::size_t sampled = 0;
  std::string route = "auto";
  certify->add_option("--sampled", sampled, "evaluate at N random points instead (never certifies)");
  certify->add_option("--route", route, "auto, gcd or groebner")
      ->check(CLI::IsMember({"auto", "gcd", "groebner"}))
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "Kronecker invariants of a constant-rank pencil");
  add_input(classify);

  auto* canonical = app.add_subcommand("canonical", "canonical pencil for a partition such as 2,1");
  std::string partition_text;
  std::size_t padding = 0;
  canonical->add_option("partition", partition_text)->required();
  canonical->add_option("--padding", padding, "zero rows and columns to append");

  auto* orbit = app.add_subcommand("orbit-dim", "orbit dimension under congruence");
  add_input(orbit);
  bool exact = false;
  orbit->add_flag("--exact", exact, "also run exact elimination");

  auto* projection = app.add_subcommand("project", "project from a point and re-certify");
  add_input(projection);
  std::string center_text;
  projection->add_option("--center", center_text, "comma-separated rational coordinates")->required();

  auto* center_search = app.add_subcommand("find-center", "project from random valid centers down to an order");
  add_input(center_search);
  std::size_t target = 0;
  std::size_t budget = 20;
  center_search->add_option("--target", target)->required();
  center_search->add_option("--budget", budget, "centers tried per step")->capture_default_str();

  auto* fp = app.add_subcommand("fingerprint", "kernel bundle invariants of a net");
  add_input(fp);
  std::size_t scan = 60;
  fp->add_option("--scan", scan, "grid lines scanned for jumping")->capture_default_str();

  auto* gauss = app.add_subcommand("gauss", "kernel Pluecker coordinates and their span");
  add_input(gauss);

  auto* zero = app.add_subcommand("zero-scheme", "degree of the zero scheme of a section of the dual kernel bundle");
  add_input(zero);
  std::string xi_text;
  zero->add_option("--xi", xi_text, "covector, comma-separated");

  auto* catalog = app.add_subcommand("catalog", "list entries or dump one");
  std::string entry_name;
  catalog->add_option("name", entry_name);

  auto* reproduce_cmd = app.add_subcommand("reproduce", "run the catalog against its expected invariants");
  std::string group;
  bool as_json = false, no_orbits = false, no_fingerprints = false;
  reproduce_cmd->add_option("--group", group, "pencils, blocks, planes or westwick");
  reproduce_cmd->add_flag("--json", as_json, "JSON instead of a table");
  reproduce_cmd->add_flag("--no-orbits", no_orbits);
  reproduce_cmd->add_flag("--no-fingerprints", no_fingerprints);

  auto* ideal_empty = app.add_subcommand("ideal-empty", "projective emptiness of a JSON ideal");
  ideal_empty->add_option("ideal", input)->required();
  auto* ideal_degree = app.add_subcommand("ideal-degree", "degree of the scheme of a JSON ideal");
  ideal_degree->add_option("ideal", input)->required();
  int dim = 0;
  ideal_degree->add_option("--dim", dim, "expected projective dimension")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*certify) {
      const auto a = load_matrix(input);
      RankCertificate c;
      if (sampled > 0) {
        c = sample_rank(a, sampled, seed);
      } else {
        const Route r = route == "gcd" ? Route::BinaryGcd : route == "groebner" ? Route::Groebner : Route::Auto;
        c = certify_constant_rank(a, r);
      }
      emit(to_json(c), seed);
      return exit_for(c);
    }
    if (*classify) {
      const auto a = load_matrix(input);
      if (a.nvars() != 2) throw UsageError("classify needs a pencil (two parameters)");
      const auto c = certify_constant_rank(a);
      if (!c.constant) {
        emit(to_json(c), seed);
        return kRefuted;
      }
      emit(to_json(minimal_indices(a)), seed);
      return kOk;
    }
    if (*canonical) {
      const auto canon = canonical_form(parse_partition(partition_text), padding);
      std::cout << matrix_to_json(canon.matrix).dump(2) << "\n";
      return kOk;
    }
    if (*orbit) {
      emit(to_json(orbit_dimension(load_matrix(input), {.exact = exact, .seed = seed})), seed);
      return kOk;
    }
    if (*projection) {
      const auto step = project(load_matrix(input), parse_point(center_text));
      emit(to_json(step), seed);
      return step.valid ? kOk : kRefuted;
    }
    if (*center_search) {
      try {
        const auto chain = find_valid_center(load_matrix(input), target, seed, budget);
        json steps = json::array();
        for (const auto& s : chain.steps) steps.push_back(to_json(s));
        emit({{"steps", steps},
              {"enforced_bound", chain.enforced_bound},
              {"corollary_bound", chain.corollary_bound},
              {"attempts", chain.attempts}},
             seed);
        return kOk;
      } catch (const BelowBound& e) {
        std::cerr << "skewrank: " << e.what() << "\n";
        return kRefuted;
      } catch (const BudgetExhausted& e) {
        std::cerr << "skewrank: " << e.what() << "\n";
        return kUnknown;
      }
    }
    if (*fp) {
      emit(to_json(fingerprint(load_matrix(input), scan, seed)), seed);
      return kOk;
    }
    if (*gauss) {
      const auto a = load_matrix(input);
      json coords = json::array();
      for (const auto& f : kernel_plucker(a)) coords.push_back(f.str());
      emit({{"gauss_span_dim", gauss_span_dim(a)}, {"kernel_plucker", coords}}, seed);
      return kOk;
    }
    if (*zero) {
      const auto a = load_matrix(input);
      std::optional<Point> xi;
      if (!xi_text.empty()) xi = parse_point(xi_text);
      try {
        const auto z = section_zero_scheme_degree(a, xi, seed);
        emit({{"degree", z.degree}, {"xi", point_to_json(z.xi)}, {"attempts", z.attempts}}, seed);
        return kOk;
      } catch (const WrongDimension& e) {
        std::cerr << "skewrank: " << e.what() << "\n";
        return kUnknown;
      }
    }
    if (*catalog) {
      if (entry_name.empty()) {
        for (const auto& e : all_entries())
          std::cout << e.name << "\t" << e.group << "\t" << e.matrix.order() << "x" << e.matrix.order() << ", "
                    << e.matrix.nvars() << " parameters\t" << e.source << "\n";
        return kOk;
      }
      CatalogEntry e;
      try {
        e = get(entry_name);
      } catch (const std::out_of_range& err) {
        throw UsageError(err.what());
      }
      std::cout << json{{"name", e.name},
                        {"group", e.group},
                        {"source", e.source},
                        {"digest", e.digest},
                        {"expected", expected_json(e.expected)},
                        {"matrix", matrix_to_json(e.matrix)}}
                       .dump(2)
                << "\n";
      return kOk;
    }
    if (*reproduce_cmd) {
      ReproduceOptions opt;
      if (!group.empty()) opt.group = group;
      opt.seed = seed;
      opt.orbits = !no_orbits;
      opt.fingerprints = !no_fingerprints;
      const auto report = reproduce_all(opt);
      if (report.rows.empty()) throw UsageError("no catalog entries in group " + group);
      if (as_json)
        std::cout << to_json(report).dump(2) << "\n";
      else
        std::cout << render_table(report);
      return report.failures() == 0 ? kOk : kRefuted;
    }
    if (*ideal_empty) {
      const auto ideal = ideal_from_json(read_json(input));
      const auto gb = buchberger(ideal);
      emit({{"empty", is_projectively_empty(gb)}, {"groebner_basis", to_json(gb)}}, seed);
      return kOk;
    }
    if (*ideal_degree) {
      const auto ideal = ideal_from_json(read_json(input));
      try {
        emit({{"degree", projective_degree(ideal, dim)}, {"dimension", dim}}, seed);
        return kOk;
      } catch (const WrongDimension& e) {
        std::cerr << "skewrank: " << e.what() << "\n";
        return kRefuted;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "skewrank: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "skewrank: bad JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "skewrank: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "skewrank: " << e.what() << "\n";
    return kUnknown;
  }
  return kUsage;
}
