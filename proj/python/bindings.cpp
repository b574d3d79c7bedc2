// Python surface of the exact-arithmetic kernel. Values cross the boundary
// as plain dicts/lists in the same shapes the CLI reads and writes, with
// rationals as "p" or "p/q" strings, so files and in-memory objects coincide.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "cayley/cayley.hpp"
#include "cayley/derivations.hpp"
#include "cayley/error.hpp"
#include "cayley/hypersurface.hpp"
#include "cayley/json_io.hpp"
#include "cayley/lsa.hpp"
#include "cayley/metric.hpp"
#include "cayley/report.hpp"

namespace py = pybind11;
using namespace cayley;

namespace {

py::object to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Json to_json(py::handle obj) {
    const auto text =
        py::module_::import("json").attr("dumps")(obj).cast<std::string>();
    return Json::parse(text);
}

Lsa lsa_arg(py::handle obj) { return lsa_from_json(to_json(obj)); }
InnerProduct metric_arg(py::handle obj) { return metric_from_json(to_json(obj)); }
MultiPoly poly_arg(py::handle obj) { return poly_from_json(to_json(obj)); }

GroupLawMode mode_arg(int n, std::optional<int> samples, std::uint64_t seed) {
    if (!samples) return GroupLawMode::automatic(n);
    if (*samples <= 0) throw ParseError("samples must be positive");
    return GroupLawMode::sampled(*samples, seed);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact-arithmetic kernel for left-symmetric algebras and Cayley "
        "hypersurfaces";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const PreconditionError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    m.def(
        "cayley_polynomial",
        [](int n) { return to_py(poly_to_json(cayley_polynomial(n))); },
        py::arg("n"),
        "Polynomial of the Cayley hypersurface of dimension n, as a term "
        "list in ascending graded reverse lexicographic order.");

    m.def(
        "cayley_polynomial_str",
        [](int n) { return cayley_polynomial(n).str(); }, py::arg("n"),
        "Human-readable form of cayley_polynomial(n).");

    m.def(
        "cayley_bundle",
        [](int n) { return to_py(bundle_to_json(cayley_bundle(n))); },
        py::arg("n"),
        "Cross-checked bundle for dimension n: polynomial F, the algebra and "
        "metric that rebuild it, and the diagonal derivation B.");

    m.def(
        "is_cayley",
        [](py::handle poly) { return is_cayley(poly_arg(poly)); },
        py::arg("poly"),
        "Whether the polynomial literally equals cayley_polynomial(nvars).");

    m.def(
        "poly_str", [](py::handle poly) { return poly_arg(poly).str(); },
        py::arg("poly"), "Render a term-list polynomial as a string.");

    m.def(
        "standard_filiform",
        [](int n) { return to_py(lsa_to_json(Lsa::standard_filiform(n))); },
        py::arg("n"),
        "Structure constants e_i e_j = (i/(n+1)) e_{i+j} for i + j <= n.");

    m.def(
        "canonical_filiform_metric",
        [](int n) {
            return to_py(metric_to_json(canonical_filiform_metric(n)));
        },
        py::arg("n"), "Anti-diagonal inner product <e_i, e_j> = [i + j = n + 1].");

    m.def(
        "build_polynomial",
        [](py::handle algebra, py::handle metric) {
            return to_py(
                model_to_json(build_polynomial(lsa_arg(algebra), metric_arg(metric))));
        },
        py::arg("algebra"), py::arg("metric"),
        "Graph polynomial of the hypersurface attached to a complete abelian "
        "left-symmetric algebra with a Hessian-type metric, with its data.");

    m.def(
        "verify",
        [](py::handle algebra, py::object metric) {
            Lsa a = lsa_arg(algebra);
            if (metric.is_none())
                return to_py(report_to_json(run_verify(a, nullptr, "input")));
            InnerProduct h = metric_arg(metric);
            return to_py(report_to_json(run_verify(a, &h, "input")));
        },
        py::arg("algebra"), py::arg("metric") = py::none(),
        "Axiom checks (left-symmetric, abelian, complete; with a metric also "
        "Hessian-type, nondegenerate, unimodular) as a report dict.");

    m.def(
        "report",
        [](py::handle algebra, py::handle metric) {
            return to_py(report_to_json(
                run_report(lsa_arg(algebra), metric_arg(metric), "input")));
        },
        py::arg("algebra"), py::arg("metric"),
        "Full structural report: dimensions (annihilator, derivation spaces, "
        "descending series) and the filiform / Cayley / extensible verdicts "
        "with their consistency checks.");

    m.def(
        "report_text",
        [](py::handle algebra, py::handle metric) {
            return report_to_text(
                run_report(lsa_arg(algebra), metric_arg(metric), "input"));
        },
        py::arg("algebra"), py::arg("metric"),
        "report(...) rendered as plain text.");

    m.def(
        "recover_lsa",
        [](py::handle poly, py::handle metric) {
            return to_py(lsa_to_json(recover_lsa(poly_arg(poly), metric_arg(metric))));
        },
        py::arg("poly"), py::arg("metric"),
        "Invert build_polynomial: read the structure constants back off the "
        "graph polynomial. Raises ValueError when the input cannot come from "
        "the construction.");

    m.def(
        "canonicalize_filiform_metric",
        [](py::handle algebra, py::handle metric) {
            CanonicalMetricResult r =
                canonicalize_filiform_metric(lsa_arg(algebra), metric_arg(metric));
            Json out;
            out["sign"] = r.sign;
            out["p"] = matrix_to_json(r.p);
            out["canonical"] = metric_to_json(r.canonical);
            return to_py(out);
        },
        py::arg("algebra"), py::arg("metric"),
        "Change of strongly adequate basis taking a Hessian-type metric on a "
        "filiform algebra to sign * anti-diagonal; dict with sign, p, canonical.");

    m.def(
        "derivation_dims",
        [](py::handle algebra, py::object metric) {
            Lsa a = lsa_arg(algebra);
            Json out;
            out["der"] = derivation_space(a).dim();
            if (!metric.is_none()) {
                InnerProduct h = metric_arg(metric);
                out["sder"] = similarity_derivation_space(a, h).dim();
                out["ider"] = isometry_derivation_space(a, h).dim();
            }
            return to_py(out);
        },
        py::arg("algebra"), py::arg("metric") = py::none(),
        "Dimensions of Der, and with a metric also sDer and iDer.");

    m.def(
        "isometry_derivation",
        [](py::handle algebra, py::handle metric) {
            return to_py(matrix_to_json(
                construct_isometry_derivation(lsa_arg(algebra), metric_arg(metric))));
        },
        py::arg("algebra"), py::arg("metric"),
        "A nonzero isometric derivation, available whenever the annihilator "
        "has dimension at least 2.");

    m.def(
        "group_law_holds",
        [](py::handle algebra, py::handle metric, std::optional<int> samples,
           std::uint64_t seed) {
            HypersurfaceModel model =
                build_polynomial(lsa_arg(algebra), metric_arg(metric));
            return verify_group_law(model, mode_arg(model.n, samples, seed));
        },
        py::arg("algebra"), py::arg("metric"), py::arg("samples") = py::none(),
        py::arg("seed") = 0,
        "Check that the translation group acts simply transitively on the "
        "hypersurface: symbolically (samples=None picks symbolic through n = 4, "
        "sampled(20) beyond) or on `samples` random rational points.");

    m.attr("__version__") = "1.0.0";
}
