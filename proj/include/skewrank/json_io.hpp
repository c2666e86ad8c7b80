#pragma once

#include "json.hpp"

#include "skewrank/catalog.hpp"
#include "skewrank/geometry.hpp"
#include "skewrank/groebner.hpp"
#include "skewrank/orbit.hpp"
#include "skewrank/pencil.hpp"
#include "skewrank/rankcert.hpp"
#include "skewrank/skew_matrix.hpp"

namespace skewrank {

using nlohmann::json;

/// {"vars":[...], "terms":[{"exp":[...], "num":"..", "den":".."}]}
json form_to_json(const Form& f);
Form form_from_json(const json& j);

/// {"order":n, "vars":[...], "upper":[{"i":0, "j":1, "form":"a"}]}; "form"
/// may also be a structured form object.
json matrix_to_json(const SkewPolyMatrix& a);
SkewPolyMatrix matrix_from_json(const json& j);

/// {"vars":[...], "generators":["a^2", ...]}
json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(const json& j);

json point_to_json(const std::vector<Rational>& p);
std::vector<Rational> point_from_json(const json& j);

json to_json(const RankCertificate& c);
json to_json(const KroneckerInvariants& k);
json to_json(const OrbitReport& r);
json to_json(const ProjectionStep& s);
json to_json(const BundleFingerprint& f);
json to_json(const ReproductionReport& r);
json to_json(const GroebnerBasis& g);

}  // namespace skewrank
