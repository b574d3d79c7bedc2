#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "cayley/error.hpp"
#include "cayley/json_io.hpp"
#include "cayley/report.hpp"

namespace fs = std::filesystem;
using namespace cayley;

namespace {

int lsa_max_dim() {
    const char* s = std::getenv("LSA_MAX_DIM");
    if (!s || !*s) return 10;
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != std::string(s).size() || v < 1)
            throw cayley::ParseError("");
        return v;
    } catch (...) {
        throw cayley::ParseError("LSA_MAX_DIM must be a positive integer");
    }
}

void check_dim(int d) {
    const int cap = lsa_max_dim();
    if (d > cap) {
        std::ostringstream os;
        os << "dimension " << d << " exceeds LSA_MAX_DIM=" << cap;
        throw cayley::ParseError(os.str());
    }
}

std::string base_name(const std::string& path) { return fs::path(path).filename().string(); }

std::string subject_of(const std::string& a, const std::string& b = "") {
    return b.empty() ? base_name(a) : base_name(a) + " + " + base_name(b);
}

Lsa load_algebra(const std::string& path) {
    Lsa a = lsa_from_json(load_json_file(path));
    check_dim(a.dim());
    return a;
}

InnerProduct load_metric(const std::string& path) {
    InnerProduct h = metric_from_json(load_json_file(path));
    check_dim(h.dim());
    return h;
}

std::string matrix_text(const RatMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows(); ++i) {
        os << "  [";
        for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << rat_str(m(i, j));
        os << "]\n";
    }
    return os.str();
}

// Every command prints human text followed by its JSON payload; --json
// suppresses the text part. Output is byte-deterministic either way.
void emit(const std::string& text, const Json& payload, bool json_only) {
    if (!json_only) std::cout << text;
    std::cout << json_text(payload);
}

GroupLawMode resolve_group_law(const std::string& spec, int n, std::uint64_t seed) {
    if (spec.empty()) {
        GroupLawMode m = GroupLawMode::automatic(n);
        if (!m.symbolic) m.seed = seed;
        return m;
    }
    if (spec == "symbolic") return GroupLawMode::symbolic_mode();
    if (spec.rfind("sampled:", 0) == 0) {
        try {
            std::size_t used = 0;
            int k = std::stoi(spec.substr(8), &used);
            if (used != spec.substr(8).size() || k < 1)
                throw cayley::ParseError("");
            return GroupLawMode::sampled(k, seed);
        } catch (...) {
            throw cayley::ParseError("--group-law: sample count must be a positive integer");
        }
    }
    throw cayley::ParseError("--group-law must be 'symbolic' or 'sampled:K'");
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw cayley::ParseError("cannot create output directory " + dir);
}

int cmd_verify(const std::string& algebra_file, const std::string& metric_file, bool json_only) {
    Lsa a = load_algebra(algebra_file);
    Report r;
    if (metric_file.empty()) {
        r = run_verify(a, nullptr, subject_of(algebra_file));
    } else {
        InnerProduct h = load_metric(metric_file);
        if (h.dim() != a.dim())
            throw cayley::ParseError("metric dimension differs from algebra dimension");
        r = run_verify(a, &h, subject_of(algebra_file, metric_file));
    }
    emit(report_to_text(r), report_to_json(r), json_only);
    return r.all_pass() ? 0 : 1;
}

int cmd_report(const std::string& algebra_file, const std::string& metric_file, bool json_only) {
    Lsa a = load_algebra(algebra_file);
    InnerProduct h = load_metric(metric_file);
    if (h.dim() != a.dim())
        throw cayley::ParseError("metric dimension differs from algebra dimension");
    Report r = run_report(a, h, subject_of(algebra_file, metric_file));
    emit(report_to_text(r), report_to_json(r), json_only);
    return r.all_pass() ? 0 : 1;
}

int cmd_hypersurface(const std::string& algebra_file, const std::string& metric_file,
                     const std::string& group_law, std::uint64_t seed, const std::string& out_dir,
                     bool json_only) {
    Lsa a = load_algebra(algebra_file);
    InnerProduct h = load_metric(metric_file);
    HypersurfaceModel m = build_polynomial(a, h);
    GroupLawMode mode = resolve_group_law(group_law, m.n, seed);

    Report r;
    r.subject = subject_of(algebra_file, metric_file);
    r.checks.push_back({"gradient_identity", gradient_identity_check(m), ""});
    r.checks.push_back({"group_law", verify_group_law(m, mode),
                        mode.symbolic ? "" : "sampled verification failed"});

    Json payload = Json::object();
    payload["model"] = model_to_json(m);
    payload["report"] = report_to_json(r);
    std::ostringstream text;
    text << report_to_text(r) << "F = " << m.f.str() << "\n";
    emit(text.str(), payload, json_only);

    if (!out_dir.empty()) {
        ensure_dir(out_dir);
        save_json_file((fs::path(out_dir) / "model.json").string(), model_to_json(m));
    }
    return r.all_pass() ? 0 : 1;
}

int cmd_cayley(int n, const std::string& out_dir, bool json_only) {
    if (n < 1) throw cayley::ParseError("n must be at least 1");
    check_dim(n);
    CayleyBundle bundle = cayley_bundle(n);

    std::ostringstream text;
    text << "cayley bundle n=" << n << "\n";
    text << "check series_construction: pass\n";
    text << "check derivation_construction: pass\n";
    text << "F = " << bundle.f.str() << "\n";

    if (!out_dir.empty()) {
        ensure_dir(out_dir);
        fs::path dir(out_dir);
        save_json_file((dir / "polynomial.json").string(), poly_to_json(bundle.f));
        save_json_file((dir / "algebra.json").string(), lsa_to_json(bundle.algebra));
        save_json_file((dir / "metric.json").string(), metric_to_json(bundle.h));
        save_json_file((dir / "b.json").string(), matrix_to_json(bundle.b));
        std::ofstream transcript(dir / "transcript.txt");
        if (!transcript) throw cayley::ParseError("cannot open transcript for writing");
        transcript << text.str();
        if (!transcript) throw cayley::ParseError("failed writing transcript");
    }
    emit(text.str(), bundle_to_json(bundle), json_only);
    return 0;
}

int cmd_recover(const std::string& poly_file, const std::string& metric_file,
                const std::string& out_dir, bool json_only) {
    MultiPoly f = poly_from_json(load_json_file(poly_file));
    InnerProduct h = load_metric(metric_file);
    check_dim(f.nvars());
    if (f.nvars() != h.dim())
        throw cayley::ParseError("polynomial variable count differs from metric dimension");
    if (!f.homogeneous_part(0).is_zero() || !f.homogeneous_part(1).is_zero())
        throw cayley::ParseError("graph function must have zero constant and linear parts");

    Report r;
    r.subject = subject_of(poly_file, metric_file);
    const int n = h.dim();
    const bool ddf0_ok = hessian(f).eval(RatVector(n, Rational(0))) == h.matrix();
    r.checks.push_back({"ddf0_matches_metric", ddf0_ok, ddf0_ok ? "" : "DdF at the origin differs from H"});

    Json payload = Json::object();
    if (ddf0_ok) {
        bool axioms_ok = true;
        std::string why;
        Lsa recovered = Lsa::trivial(n);
        try {
            recovered = recover_lsa(f, h);
        } catch (const cayley::Error& e) {
            axioms_ok = false;
            why = e.what();
        }
        r.checks.push_back({"lsa_axioms", axioms_ok, why});
        if (axioms_ok) {
            const bool round = build_polynomial(recovered, h).f == f;
            r.checks.push_back(
                {"round_trip", round, round ? "" : "rebuilt graph function differs from the input"});
            payload["algebra"] = lsa_to_json(recovered);
            if (!out_dir.empty()) {
                ensure_dir(out_dir);
                save_json_file((fs::path(out_dir) / "algebra.json").string(),
                               lsa_to_json(recovered));
            }
        }
    }
    payload["report"] = report_to_json(r);
    emit(report_to_text(r), payload, json_only);
    return r.all_pass() ? 0 : 1;
}

int cmd_canonicalize(const std::string& algebra_file, const std::string& metric_file,
                     bool json_only) {
    Lsa a = load_algebra(algebra_file);
    InnerProduct h = load_metric(metric_file);
    CanonicalMetricResult res = canonicalize_filiform_metric(a, h);

    Json payload = Json::object();
    payload["sign"] = res.sign;
    payload["p"] = matrix_to_json(res.p);
    payload["canonical"] = metric_to_json(res.canonical);
    std::ostringstream text;
    text << "sign: " << res.sign << "\n" << "basis columns:\n" << matrix_text(res.p);
    emit(text.str(), payload, json_only);
    return 0;
}

int cmd_isoderiv(const std::string& algebra_file, const std::string& metric_file, bool json_only) {
    Lsa a = load_algebra(algebra_file);
    InnerProduct h = load_metric(metric_file);
    RatMatrix b = construct_isometry_derivation(a, h);

    Report r;
    r.subject = subject_of(algebra_file, metric_file);
    r.checks.push_back({"nonzero", !b.is_zero(), ""});
    r.checks.push_back({"derivation_law", satisfies_derivation_law(a, b), ""});
    r.checks.push_back({"isometry_law", satisfies_isometry_law(b, h), ""});
    r.checks.push_back({"isometry_space_membership", isometry_derivation_space(a, h).contains(b), ""});

    Json payload = Json::object();
    payload["b"] = matrix_to_json(b);
    payload["report"] = report_to_json(r);
    emit(report_to_text(r) + "B:\n" + matrix_text(b), payload, json_only);
    return r.all_pass() ? 0 : 1;
}

int cmd_derivations(const std::string& algebra_file, const std::string& metric_file,
                    bool json_only) {
    Lsa a = load_algebra(algebra_file);
    Json payload = Json::object();
    std::ostringstream text;

    DerivationSpace der = derivation_space(a);
    payload["der"] = derivation_space_to_json(der);
    text << "Der: dim=" << der.dim() << "\n";
    if (!metric_file.empty()) {
        InnerProduct h = load_metric(metric_file);
        if (h.dim() != a.dim())
            throw cayley::ParseError("metric dimension differs from algebra dimension");
        DerivationSpace sder = similarity_derivation_space(a, h);
        DerivationSpace ider = isometry_derivation_space(a, h);
        payload["sder"] = derivation_space_to_json(sder);
        payload["ider"] = derivation_space_to_json(ider);
        text << "sDer: dim=" << sder.dim() << "\n";
        text << "iDer: dim=" << ider.dim() << "\n";
    }
    emit(text.str(), payload, json_only);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier and generator for complete abelian left-symmetric algebras, "
                 "Hessian metrics and Cayley hypersurfaces"};
    app.require_subcommand(1);

    struct {
        std::string algebra, metric, poly, group_law, out;
        int n = 0;
        std::uint64_t seed = 0;
        bool json = false;
    } opt;

    auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", opt.json, "print only the JSON payload");
    };

    CLI::App* verify = app.add_subcommand("verify", "check the algebra (and metric) axioms");
    verify->add_option("algebra", opt.algebra, "algebra JSON file")->required();
    verify->add_option("metric", opt.metric, "metric JSON file");
    add_json(verify);

    CLI::App* report = app.add_subcommand("report", "full invariant and verdict report");
    report->add_option("algebra", opt.algebra, "algebra JSON file")->required();
    report->add_option("metric", opt.metric, "metric JSON file")->required();
    add_json(report);

    CLI::App* hyper =
        app.add_subcommand("hypersurface", "build the graph function and verify the group law");
    hyper->add_option("algebra", opt.algebra, "algebra JSON file")->required();
    hyper->add_option("metric", opt.metric, "metric JSON file")->required();
    hyper->add_option("--group-law", opt.group_law, "symbolic or sampled:K");
    hyper->add_option("--seed", opt.seed, "seed for sampled verification");
    hyper->add_option("--out", opt.out, "directory to write model.json");
    add_json(hyper);

    CLI::App* cay = app.add_subcommand("cayley", "generate the Cayley bundle in dimension n");
    cay->add_option("n", opt.n, "dimension")->required();
    cay->add_option("--out", opt.out, "directory for the bundle files");
    add_json(cay);

    CLI::App* recover = app.add_subcommand("recover", "read the algebra back from a graph function");
    recover->add_option("polynomial", opt.poly, "polynomial JSON file")->required();
    recover->add_option("metric", opt.metric, "metric JSON file")->required();
    recover->add_option("--out", opt.out, "directory to write algebra.json");
    add_json(recover);

    CLI::App* canon = app.add_subcommand("canonicalize", "canonical form of a filiform metric");
    canon->add_option("algebra", opt.algebra, "algebra JSON file")->required();
    canon->add_option("metric", opt.metric, "metric JSON file")->required();
    add_json(canon);

    CLI::App* iso = app.add_subcommand(
        "isoderiv", "isometric derivation from a two-dimensional annihilator");
    iso->add_option("algebra", opt.algebra, "algebra JSON file")->required();
    iso->add_option("metric", opt.metric, "metric JSON file")->required();
    add_json(iso);

    CLI::App* ders = app.add_subcommand("derivations", "derivation space bases");
    ders->add_option("algebra", opt.algebra, "algebra JSON file")->required();
    ders->add_option("metric", opt.metric, "metric JSON file");
    add_json(ders);

    try {
        app.parse(argc, argv);
        if (verify->parsed()) return cmd_verify(opt.algebra, opt.metric, opt.json);
        if (report->parsed()) return cmd_report(opt.algebra, opt.metric, opt.json);
        if (hyper->parsed())
            return cmd_hypersurface(opt.algebra, opt.metric, opt.group_law, opt.seed, opt.out,
                                    opt.json);
        if (cay->parsed()) return cmd_cayley(opt.n, opt.out, opt.json);
        if (recover->parsed()) return cmd_recover(opt.poly, opt.metric, opt.out, opt.json);
        if (canon->parsed()) return cmd_canonicalize(opt.algebra, opt.metric, opt.json);
        if (iso->parsed()) return cmd_isoderiv(opt.algebra, opt.metric, opt.json);
        if (ders->parsed()) return cmd_derivations(opt.algebra, opt.metric, opt.json);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cayley::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cayley::PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cayley::Error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
}
