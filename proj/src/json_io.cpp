#include "cayley/json_io.hpp"

#include <fstream>

#include "cayley/error.hpp"

namespace cayley {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
    if (!j.is_object())
        throw ParseError(std::string(what) + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
    return *it;
}

int int_field(const Json& j, const char* key, const char* what) {
    const Json& v = field(j, key, what);
    if (!v.is_number_integer())
        throw ParseError(std::string(what) + ": field \"" + key + "\" must be an integer");
    return v.get<int>();
}

}  // namespace

Json rational_to_json(const Rational& q) { return rat_str(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return rat_parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("rational: expected a string \"p/q\" or an integer");
}

Json vector_to_json(const RatVector& v) {
    Json out = Json::array();
    for (const Rational& q : v) out.push_back(rational_to_json(q));
    return out;
}

RatVector vector_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("vector: expected a JSON array");
    RatVector v;
    v.reserve(j.size());
    for (const Json& e : j) v.push_back(rational_from_json(e));
    return v;
}

Json matrix_to_json(const RatMatrix& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
    return out;
}

RatMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
    const int rows = static_cast<int>(j.size());
    std::vector<RatVector> data;
    data.reserve(rows);
    for (const Json& r : j) data.push_back(vector_from_json(r));
    const int cols = rows == 0 ? 0 : static_cast<int>(data[0].size());
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(data[i].size()) != cols)
            throw ParseError("matrix: rows have unequal lengths");
        for (int k = 0; k < cols; ++k) m(i, k) = data[i][k];
    }
    return m;
}

Json poly_to_json(const MultiPoly& p) {
    Json out = Json::object();
    out["nvars"] = p.nvars();
    Json terms = Json::array();
    for (const auto& [exp, c] : p.terms()) {
        Json t = Json::object();
        t["exp"] = exp;
        t["c"] = rational_to_json(c);
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

MultiPoly poly_from_json(const Json& j) {
    const int nvars = int_field(j, "nvars", "polynomial");
    if (nvars < 0) throw ParseError("polynomial: nvars must be nonnegative");
    const Json& terms = field(j, "terms", "polynomial");
    if (!terms.is_array()) throw ParseError("polynomial: \"terms\" must be an array");
    MultiPoly p(nvars);
    for (const Json& t : terms) {
        const Json& je = field(t, "exp", "polynomial term");
        if (!je.is_array() || static_cast<int>(je.size()) != nvars)
            throw ParseError("polynomial term: \"exp\" must list one exponent per variable");
        Exponents exp;
        exp.reserve(nvars);
        for (const Json& e : je) {
            if (!e.is_number_integer() || e.get<int>() < 0)
                throw ParseError("polynomial term: exponents must be nonnegative integers");
            exp.push_back(e.get<int>());
        }
        p.add_term(exp, rational_from_json(field(t, "c", "polynomial term")));
    }
    return p;
}

Json lsa_to_json(const Lsa& a) {
    Json out = Json::object();
    out["dim"] = a.dim();
    Json products = Json::array();
    for (const auto& [ijk, c] : a.constants()) {
        const auto& [i, j, k] = ijk;
        Json t = Json::object();
        t["i"] = i + 1;
        t["j"] = j + 1;
        t["k"] = k + 1;
        t["c"] = rational_to_json(c);
        products.push_back(std::move(t));
    }
    out["products"] = std::move(products);
    return out;
}

Lsa lsa_from_json(const Json& j) {
    const int dim = int_field(j, "dim", "algebra");
    if (dim < 0) throw ParseError("algebra: dim must be nonnegative");
    const Json& products = field(j, "products", "algebra");
    if (!products.is_array()) throw ParseError("algebra: \"products\" must be an array");
    Lsa::Constants c;
    for (const Json& t : products) {
        const int i = int_field(t, "i", "algebra product");
        const int jj = int_field(t, "j", "algebra product");
        const int k = int_field(t, "k", "algebra product");
        if (i < 1 || i > dim || jj < 1 || jj > dim || k < 1 || k > dim)
            throw ParseError("algebra product: indices must lie in 1..dim");
        c[{i - 1, jj - 1, k - 1}] += rational_from_json(field(t, "c", "algebra product"));
    }
    std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
    return Lsa(dim, std::move(c));
}

Json metric_to_json(const InnerProduct& h) {
    Json out = Json::object();
    out["dim"] = h.dim();
    out["matrix"] = matrix_to_json(h.matrix());
    return out;
}

InnerProduct metric_from_json(const Json& j) {
    const int dim = int_field(j, "dim", "metric");
    RatMatrix m = matrix_from_json(field(j, "matrix", "metric"));
    if (m.rows() != dim || m.cols() != dim)
        throw ParseError("metric: \"matrix\" must be dim x dim");
    if (!m.is_symmetric()) throw ParseError("metric: matrix must be symmetric");
    return InnerProduct(std::move(m));
}

Json derivation_space_to_json(const DerivationSpace& d) {
    Json out = Json::object();
    switch (d.kind) {
        case DerivationKind::Der: out["kind"] = "Der"; break;
        case DerivationKind::sDer: out["kind"] = "sDer"; break;
        case DerivationKind::iDer: out["kind"] = "iDer"; break;
    }
    out["dim"] = d.dim();
    Json basis = Json::array();
    for (const RatMatrix& b : d.basis) basis.push_back(vector_to_json(b.vectorize()));
    out["basis"] = std::move(basis);
    return out;
}

Json model_to_json(const HypersurfaceModel& m) {
    Json out = Json::object();
    out["n"] = m.n;
    out["F"] = poly_to_json(m.f);
    out["H"] = metric_to_json(m.h);
    out["algebra"] = lsa_to_json(m.algebra);
    return out;
}

HypersurfaceModel model_from_json(const Json& j) {
    const int n = int_field(j, "n", "model");
    MultiPoly f = poly_from_json(field(j, "F", "model"));
    InnerProduct h = metric_from_json(field(j, "H", "model"));
    Lsa a = lsa_from_json(field(j, "algebra", "model"));
    if (f.nvars() != n || h.dim() != n || a.dim() != n)
        throw ParseError("model: n, F, H and algebra dimensions disagree");
    return HypersurfaceModel{n, std::move(f), std::move(h), std::move(a)};
}

Json affine_to_json(const AffineElement& g) {
    Json out = Json::object();
    out["linear"] = matrix_to_json(g.linear);
    out["translation"] = vector_to_json(g.translation);
    return out;
}

AffineElement affine_from_json(const Json& j) {
    RatMatrix linear = matrix_from_json(field(j, "linear", "affine element"));
    RatVector translation = vector_from_json(field(j, "translation", "affine element"));
    if (linear.rows() != linear.cols() ||
        static_cast<int>(translation.size()) != linear.rows())
        throw ParseError("affine element: linear part must be square and match the translation");
    return AffineElement{std::move(linear), std::move(translation)};
}

Json bundle_to_json(const CayleyBundle& b) {
    Json out = Json::object();
    out["n"] = b.n;
    out["F"] = poly_to_json(b.f);
    out["algebra"] = lsa_to_json(b.algebra);
    out["H"] = metric_to_json(b.h);
    out["B"] = matrix_to_json(b.b);
    return out;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << json_text(j);
    if (!out) throw ParseError("failed writing " + path);
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cayley
