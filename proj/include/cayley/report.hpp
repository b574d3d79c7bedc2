#pragma once

#include <string>
#include <vector>

#include "cayley/json_io.hpp"

namespace cayley {

struct ReportCheck {
    std::string name;
    bool pass;
    std::string details;  // counterexample or explanation when failing
};

// Aggregated result of a verification pipeline. A verify-level report
// carries checks only; a full report adds the dimension table and the
// three verdict bits.
struct Report {
    std::string subject;
    std::vector<ReportCheck> checks;

    bool has_dims = false;
    struct Dims {
        int ann = 0, der = 0, sder = 0, ider = 0;
        std::vector<int> series;  // descending power ideal dimensions
    } dims;

    bool has_verdicts = false;
    struct Verdicts {
        bool filiform = false, cayley = false, extensible = false;
    } verdicts;

    bool all_pass() const;
};

// Axiom checks: left symmetry, commutativity, completeness, and with a
// metric also the Hessian-type law, nondegeneracy and |det H| = 1. Never
// throws on mathematical failure; the failures live in the checks.
Report run_verify(const Lsa& a, const InnerProduct* h, const std::string& subject);

// Full invariant report for a complete abelian algebra with a nondegenerate
// Hessian-type unimodular metric (PreconditionError otherwise): series and
// annihilator dimensions, the three derivation-space dimensions, the
// filiform/cayley/extensible verdicts, and the internal consistency checks
// tying them together. The cayley verdict asks whether the associated
// hypersurface is the Cayley hypersurface up to affine equivalence: for a
// filiform algebra the metric is rescaled to unit leading pairing (an
// ambient coordinate change), canonicalized, and the rebuilt graph function
// compared literally.
Report run_report(const Lsa& a, const InnerProduct& h, const std::string& subject);

Json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace cayley
