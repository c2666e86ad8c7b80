#include "skewrank/json_io.hpp"

#include <stdexcept>

namespace skewrank {

namespace {

Ring ring_from(const json& j) {
  if (!j.contains("vars") || !j["vars"].is_array()) throw std::invalid_argument("json: missing \"vars\" array");
  return make_ring(j["vars"].get<std::vector<std::string>>());
}

json ring_json(const Ring& r) { return json(*r); }

std::string rational_field(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw std::invalid_argument("json: rational must be a string or an integer");
}

Form form_in_ring(const json& j, const Ring& ring) {
  if (j.is_string()) return parse_form(j.get<std::string>(), ring);
  if (j.is_object()) {
    Form f = form_from_json(j);
    if (!same_ring(f.ring(), ring)) throw std::invalid_argument("json: form ring differs from matrix ring");
    return embed(f, ring);
  }
  throw std::invalid_argument("json: form must be a string or an object");
}

}  // namespace

json form_to_json(const Form& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms())
    terms.push_back({{"exp", m.exponents()}, {"num", c.numerator().get_str()}, {"den", c.denominator().get_str()}});
  return {{"vars", ring_json(f.ring())}, {"terms", terms}};
}

Form form_from_json(const json& j) {
  const Ring ring = ring_from(j);
  std::vector<Form::Term> terms;
  for (const auto& t : j.value("terms", json::array())) {
    auto exps = t.at("exp").get<std::vector<unsigned>>();
    if (exps.size() != ring->size()) throw std::invalid_argument("json: exponent length mismatch");
    const Rational c(mpz_class(rational_field(t.at("num"))),
                     mpz_class(t.contains("den") ? rational_field(t.at("den")) : std::string("1")));
    terms.emplace_back(Monomial(std::move(exps)), c);
  }
  return Form(ring, std::move(terms));
}

json matrix_to_json(const SkewPolyMatrix& a) {
  json upper = json::array();
  for (std::size_t i = 0; i < a.order(); ++i)
    for (std::size_t j = i + 1; j < a.order(); ++j) {
      const Form f = a.entry(i, j);
      if (!f.is_zero()) upper.push_back({{"i", i}, {"j", j}, {"form", f.str()}});
    }
  return {{"order", a.order()}, {"vars", ring_json(a.ring())}, {"upper", upper}};
}

SkewPolyMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("json: matrix must be an object");
  const auto order = j.at("order").get<std::size_t>();
  SkewPolyMatrix m(order, ring_from(j));
  for (const auto& e : j.value("upper", json::array())) {
    const auto i = e.at("i").get<std::size_t>();
    const auto k = e.at("j").get<std::size_t>();
    if (i >= k) throw std::invalid_argument("json: upper entries need i < j");
    m.set(i, k, form_in_ring(e.at("form"), m.ring()));
  }
  return m;
}

json ideal_to_json(const Ideal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators) gens.push_back(g.str());
  return {{"vars", ring_json(ideal.ring)}, {"generators", gens}};
}

Ideal ideal_from_json(const json& j) {
  const Ring ring = ring_from(j);
  std::vector<Form> gens;
  for (const auto& g : j.at("generators")) gens.push_back(form_in_ring(g, ring));
  return Ideal(ring, std::move(gens));
}

json point_to_json(const std::vector<Rational>& p) {
  json out = json::array();
  for (const auto& x : p) out.push_back(x.str());
  return out;
}

std::vector<Rational> point_from_json(const json& j) {
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(Rational::parse(rational_field(x)));
  return out;
}

json to_json(const RankCertificate& c) {
  json j = {{"generic_rank", c.generic_rank},
            {"constant", c.constant},
            {"verdict", to_string(c.verdict)},
            {"method", to_string(c.method)}};
  j["witness"] = c.witness ? point_to_json(*c.witness) : json(nullptr);
  if (c.method == CertMethod::Sampled) j["sampled_points"] = c.sampled_points;
  return j;
}

json to_json(const KroneckerInvariants& k) {
  return {{"rank", k.rank}, {"partition", k.partition}, {"padding", k.padding}, {"order", k.order}};
}

json to_json(const OrbitReport& r) {
  json j = {{"ambient_grassmannian_dim", r.ambient_grassmannian_dim},
            {"tangent_rank", r.tangent_rank},
            {"orbit_dim", r.orbit_dim},
            {"modular_rank", r.modular_rank},
            {"certified", r.certified},
            {"prime", std::to_string(r.prime)},
            {"seed", r.seed},
            {"rows", r.rows},
            {"nonzero_columns", r.nonzero_columns}};
  j["exact_rank"] = r.exact_rank ? json(*r.exact_rank) : json(nullptr);
  return j;
}

json to_json(const ProjectionStep& s) {
  json basis = json::array();
  for (Eigen::Index i = 0; i < s.basis_change.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < s.basis_change.cols(); ++k) row.push_back(s.basis_change(i, k).str());
    basis.push_back(row);
  }
  return {{"center", point_to_json(s.center)},
          {"basis_change", basis},
          {"result", matrix_to_json(s.result)},
          {"source_rank", s.source_rank},
          {"valid", s.valid},
          {"certificate", to_json(s.certificate)}};
}

json to_json(const BundleFingerprint& f) {
  json lines = json::array();
  for (const auto& l : f.jumping_lines) lines.push_back({{"line", point_to_json(l.line)}, {"splitting", l.splitting}});
  return {{"generic_splitting", f.generic_splitting},
          {"generic_agree", f.generic_agree},
          {"jumping_lines", lines},
          {"lines_scanned", f.lines_scanned},
          {"c2", f.c2},
          {"gauss_span_dim", f.gauss_span_dim},
          {"seed", f.seed}};
}

json to_json(const ReproductionReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"entry", row.entry},
                    {"field", row.field},
                    {"expected", row.expected},
                    {"observed", row.observed},
                    {"pass", row.pass},
                    {"note", row.note}});
  return {{"rows", rows}, {"failures", r.failures()}, {"seed", r.seed}};
}

json to_json(const GroebnerBasis& g) {
  json basis = json::array();
  for (const auto& f : g.basis) basis.push_back(f.str());
  return {{"vars", ring_json(g.ideal.ring)},
          {"order", g.order},
          {"basis", basis},
          {"pairs_considered", g.stats.pairs_considered},
          {"zero_reductions", g.stats.zero_reductions}};
}

}  // namespace skewrank
