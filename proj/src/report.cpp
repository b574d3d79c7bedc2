#include "cayley/report.hpp"

#include <sstream>

#include "cayley/error.hpp"

namespace cayley {

namespace {

std::string triple(const std::array<int, 3>& w) {
    std::ostringstream os;
    os << "(" << w[0] << ", " << w[1] << ", " << w[2] << ")";
    return os.str();
}

void add(Report& r, std::string name, bool pass, std::string details = "") {
    r.checks.push_back({std::move(name), pass, pass ? "" : std::move(details)});
}

}  // namespace

bool Report::all_pass() const {
    for (const ReportCheck& c : checks)
        if (!c.pass) return false;
    return true;
}

Report run_verify(const Lsa& a, const InnerProduct* h, const std::string& subject) {
    if (h && h->dim() != a.dim())
        throw PreconditionError("metric dimension differs from algebra dimension");
    Report r;
    r.subject = subject;

    auto ls = check_left_symmetric(a);
    add(r, "left_symmetric", ls.ok, "associator asymmetry at basis triple " + triple(ls.witness));

    auto ab = check_abelian(a);
    {
        std::ostringstream os;
        os << "e" << ab.witness[0] << " e" << ab.witness[1] << " != e" << ab.witness[1] << " e"
           << ab.witness[0];
        add(r, "abelian", ab.ok, os.str());
    }

    auto comp = check_complete(a);
    {
        bool nilp_ok = !comp.symbolic_nilpotent || *comp.symbolic_nilpotent;
        std::ostringstream os;
        if (!comp.trace_zero)
            os << "tr rho_{e" << comp.bad_trace_index << "} != 0";
        else if (!nilp_ok)
            os << "lambda_x is not symbolically nilpotent";
        add(r, "complete", comp.trace_zero && nilp_ok, os.str());
    }

    if (h) {
        auto hess = check_hessian_type(a, *h);
        add(r, "hessian_type", hess.ok,
            "compatibility law fails at basis triple " + triple(hess.witness));
        const Rational d = det(h->matrix());
        add(r, "nondegenerate", d != 0, "det H = 0");
        add(r, "unimodular", d == 1 || d == -1, "det H = " + rat_str(d));
    }
    return r;
}

Report run_report(const Lsa& a, const InnerProduct& h, const std::string& subject) {
    Report r = run_verify(a, &h, subject);
    if (!r.all_pass()) {
        for (const ReportCheck& c : r.checks)
            if (!c.pass)
                throw PreconditionError("report requires a valid pair; check '" + c.name +
                                        "' failed: " + c.details);
    }
    const int n = a.dim();

    r.has_dims = true;
    r.dims.series = descending_series(a).dims();
    r.dims.ann = annihilator(a).dim();
    r.dims.der = derivation_space(a).dim();
    r.dims.sder = similarity_derivation_space(a, h).dim();
    r.dims.ider = isometry_derivation_space(a, h).dim();

    r.has_verdicts = true;
    r.verdicts.filiform = is_filiform(a);
    r.verdicts.extensible = r.dims.sder > r.dims.ider;

    // Cayley verdict: the hypersurface class is insensitive to rescaling the
    // normal coordinate, so divide H by the leading pairing <e1, e1^n> of a
    // power basis; the canonical form then exists over Q with sign +1 and
    // the rebuilt graph function must be the Cayley polynomial literally.
    bool cay = false;
    std::string cay_details;
    if (r.verdicts.filiform) {
        RatMatrix p0 = strongly_adequate_basis(a);
        const Rational lead = (p0.transpose() * h.matrix() * p0)(0, n - 1);
        InnerProduct hs(h.matrix() * (Rational(1) / lead));
        auto canon = canonicalize_filiform_metric(a, hs);
        MultiPoly f = build_polynomial(transform_basis(a, canon.p), canon.canonical).f;
        cay = is_cayley(f);
        if (!cay) cay_details = "canonical graph function differs from the Cayley polynomial";
    }
    r.verdicts.cayley = cay;

    add(r, "series_duality", verify_duality(a, h),
        "ascending chain is not the orthogonal complement of the descending chain");

    {
        std::ostringstream os;
        os << "ider=" << r.dims.ider << " sder=" << r.dims.sder << " der=" << r.dims.der;
        bool tower = r.dims.ider <= r.dims.sder && r.dims.sder <= r.dims.der &&
                     r.dims.sder - r.dims.ider <= 1;
        add(r, "derivation_tower", tower, os.str());
    }

    {
        const int deg = build_polynomial(a, h).f.degree();
        std::ostringstream os;
        os << "deg F = " << deg << " with n = " << n;
        bool ok = r.verdicts.filiform ? deg == n + 1 : deg < n + 1;
        add(r, "graph_degree", ok, os.str());
    }

    {
        std::ostringstream os;
        os << "filiform=" << (r.verdicts.filiform ? "true" : "false")
           << " ann=" << r.dims.ann;
        add(r, "equiv_filiform_annihilator", r.verdicts.filiform == (r.dims.ann == 1), os.str());
    }
    add(r, "equiv_filiform_sder", !r.verdicts.filiform || r.dims.sder == 1,
        "filiform algebra with dim sDer != 1");
    add(r, "equiv_extensible_sder",
        !(r.verdicts.extensible && r.dims.sder == 1) || r.verdicts.filiform,
        "extensible pair with dim sDer = 1 but not filiform");
    add(r, "cayley_matches_filiform", cay == r.verdicts.filiform, cay_details);

    return r;
}

Json report_to_json(const Report& r) {
    Json out = Json::object();
    out["subject"] = r.subject;
    Json checks = Json::array();
    for (const ReportCheck& c : r.checks) {
        Json jc = Json::object();
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["details"] = c.details;
        checks.push_back(std::move(jc));
    }
    out["checks"] = std::move(checks);
    if (r.has_dims) {
        Json d = Json::object();
        d["ann"] = r.dims.ann;
        d["der"] = r.dims.der;
        d["sder"] = r.dims.sder;
        d["ider"] = r.dims.ider;
        d["series"] = r.dims.series;
        out["dims"] = std::move(d);
    }
    if (r.has_verdicts) {
        Json v = Json::object();
        v["filiform"] = r.verdicts.filiform;
        v["cayley"] = r.verdicts.cayley;
        v["extensible"] = r.verdicts.extensible;
        out["verdicts"] = std::move(v);
    }
    return out;
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << "subject: " << r.subject << "\n";
    for (const ReportCheck& c : r.checks) {
        os << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL");
        if (!c.pass && !c.details.empty()) os << " (" << c.details << ")";
        os << "\n";
    }
    if (r.has_dims) {
        os << "dims: ann=" << r.dims.ann << " der=" << r.dims.der << " sder=" << r.dims.sder
           << " ider=" << r.dims.ider << " series=[";
        for (std::size_t i = 0; i < r.dims.series.size(); ++i)
            os << (i ? ", " : "") << r.dims.series[i];
        os << "]\n";
    }
    if (r.has_verdicts) {
        os << "verdicts: filiform=" << (r.verdicts.filiform ? "true" : "false")
           << " cayley=" << (r.verdicts.cayley ? "true" : "false")
           << " extensible=" << (r.verdicts.extensible ? "true" : "false") << "\n";
    }
    os << "result: " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace cayley
