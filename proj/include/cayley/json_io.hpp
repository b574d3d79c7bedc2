#pragma once

#include <json.hpp>
#include <string>

#include "cayley/cayley.hpp"
#include "cayley/derivations.hpp"
#include "cayley/hypersurface.hpp"
#include "cayley/metric.hpp"

namespace cayley {

// Insertion-ordered JSON so that every writer below is byte-deterministic
// under dump().
using Json = nlohmann::ordered_json;

// Rationals travel as strings "p" or "p/q"; integers are accepted on input.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json vector_to_json(const RatVector& v);
RatVector vector_from_json(const Json& j);

// Matrices are arrays of row arrays; input must be rectangular.
Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

// {"nvars": n, "terms": [{"exp": [...], "c": "p/q"}, ...]}, terms ascending
// in the polynomial's canonical order.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

// {"dim": n, "products": [{"i": 1, "j": 1, "k": 2, "c": "1"}, ...]} with
// 1-based indices; omitted triples are zero, repeated triples accumulate.
Json lsa_to_json(const Lsa& a);
Lsa lsa_from_json(const Json& j);

// {"dim": n, "matrix": [[...]]}.
Json metric_to_json(const InnerProduct& h);
InnerProduct metric_from_json(const Json& j);

// {"kind": "sDer", "dim": 1, "basis": [[...row-major entries...]]}.
Json derivation_space_to_json(const DerivationSpace& d);

// {"n": ..., "F": ..., "H": ..., "algebra": ...}.
Json model_to_json(const HypersurfaceModel& m);
HypersurfaceModel model_from_json(const Json& j);

// {"linear": [[...]], "translation": [...]}.
Json affine_to_json(const AffineElement& g);
AffineElement affine_from_json(const Json& j);

// {"n": ..., "F": ..., "algebra": ..., "H": ..., "B": ...}.
Json bundle_to_json(const CayleyBundle& b);

// File helpers; all failures (missing file, bad JSON) become ParseError
// mentioning the path. Writers end the file with a newline.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

// Canonical rendering used everywhere JSON is printed or saved: two-space
// indent plus trailing newline.
std::string json_text(const Json& j);

}  // namespace cayley
