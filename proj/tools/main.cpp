// ratapprox -- command-line front end for the rational-approximation
// workbench.  One subcommand per workflow: approx / report / autocorrect /
// elemfun-check / model / accelerate.  Output is an order-stable key=value
// document (stdout, optionally mirrored to --out) plus an optional
// error-curve data file.
//
// Exit codes: 0 success, 1 usage, 2 construction failure, 3 evaluation
// failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ratapprox/analysis.hpp"
#include "ratapprox/autocorrection.hpp"
#include "ratapprox/elemfun.hpp"
#include "ratapprox/errors.hpp"
#include "ratapprox/function.hpp"
#include "ratapprox/modeling.hpp"
#include "ratapprox/pade.hpp"
#include "ratapprox/pade_chebyshev.hpp"
#include "ratapprox/remez.hpp"
#include "ratapprox/report_doc.hpp"

namespace ra = ratapprox;

namespace {

// Everything a run needs, validated before dispatch.
struct JobSpec {
    std::string subcommand;

    // function source: exactly one of fn / taylor_file / cheb_file /
    // samples_file (the last only for `model`)
    std::string fn;
    std::string taylor_file;
    std::string cheb_file;
    std::string samples_file;
    double k = 0.25;  // scale of the *-scaled catalog entries

    bool has_domain = false;
    double a = -1.0, b = 1.0;

    int m = 0, n = 0;
    std::string method = "pc-linear";
    std::string normalization = "b0";
    bool even = false, odd = false;
    bool relative = false;
    int s = 128;
    int taylor_N = -1;  // -1: pick a default per method

    // autocorrect
    std::string experiment;  // quadrature | truncation | noise | norm-switch
    int s1 = 64, s2 = 128;
    int N1 = 15, N2 = 20;
    double noise = 1e-6;
    unsigned seed = 2;
    std::string norm2 = "bm";

    // elemfun-check
    std::string precision = "both";
    int grid = 4001;
    double at = 0.0;
    bool has_at = false;

    // model
    std::string spline_kind = "cubic";

    std::string out_path;
    std::string curve_path;

    int checkpoints = 2000;
};

int checkpoints_from_env() {
    const char* env = std::getenv("RATAPPROX_CHECKPOINTS");
    if (env == nullptr || *env == '\0') return 2000;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 8 || v > 2000000)
        throw ra::ShapeError(std::string("RATAPPROX_CHECKPOINTS must be an integer in [8, 2e6], got '") +
                             env + "'");
    return static_cast<int>(v);
}

// One value per line; '#' starts a comment; blank lines skipped.
std::vector<double> read_coeff_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ra::ShapeError("cannot open coefficient file: " + path);
    std::vector<double> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double v;
        if (!(ls >> v)) {
            std::string rest;
            if (ls.clear(), ls >> rest)
                throw ra::ShapeError(path + ":" + std::to_string(lineno) +
                                     ": expected one number per line");
            continue;  // blank or comment-only
        }
        std::string rest;
        if (ls >> rest)
            throw ra::ShapeError(path + ":" + std::to_string(lineno) +
                                 ": expected one number per line");
        out.push_back(v);
    }
    if (out.empty()) throw ra::ShapeError("coefficient file is empty: " + path);
    return out;
}

ra::Parity parity_of(const JobSpec& j) {
    if (j.even && j.odd) throw ra::ShapeError("--even and --odd are mutually exclusive");
    if (j.even) return ra::Parity::even;
    if (j.odd) return ra::Parity::odd;
    return ra::Parity::plain;
}

ra::Normalization normalization_of(const std::string& s) {
    if (s == "b0") return ra::Normalization::b0;
    if (s == "bm") return ra::Normalization::bm;
    if (s == "an") return ra::Normalization::an;
    throw ra::ShapeError("unknown normalization: " + s + " (want b0|bm|an)");
}

ra::Weight weight_of(const JobSpec& j) {
    ra::Weight w;
    w.kind = j.relative ? ra::WeightKind::relative : ra::WeightKind::absolute;
    return w;
}

ra::TargetFunction make_target(const JobSpec& j) {
    int sources = int(!j.fn.empty()) + int(!j.taylor_file.empty()) + int(!j.cheb_file.empty());
    if (sources != 1)
        throw ra::ShapeError("need exactly one of --fn / --taylor-file / --cheb-file");
    if (!j.fn.empty()) {
        ra::TargetFunction f = ra::builtin_function(j.fn, j.k);
        if (j.has_domain) f.domain = ra::Domain(j.a, j.b);
        return f;
    }
    ra::Domain d = j.has_domain ? ra::Domain(j.a, j.b) : ra::Domain();
    if (!j.taylor_file.empty())
        return ra::function_from_taylor(read_coeff_file(j.taylor_file), d);
    return ra::function_from_cheb(read_coeff_file(j.cheb_file), d);
}

struct BuildArtifacts {
    ra::RationalApproximant r;
    double condition = 0.0;  // 0.0 when the method has no assembled system
    int cycles = -1;         // remez only
};

BuildArtifacts build_approximant(const JobSpec& j, const ra::TargetFunction& f) {
    ra::Parity form = parity_of(j);
    ra::BuildOptions opts;
    opts.normalization = normalization_of(j.normalization);
    opts.parity_form = form;
    opts.s = j.s;
    opts.checkpoints = j.checkpoints;

    BuildArtifacts art;
    if (j.method == "pade") {
        if (!j.cheb_file.empty())
            throw ra::ShapeError("method pade needs Taylor data (builtin or --taylor-file)");
        ra::TaylorSeries t;
        if (!j.taylor_file.empty()) {
            t = ra::TaylorSeries(read_coeff_file(j.taylor_file));
        } else {
            int N = j.taylor_N >= 0 ? j.taylor_N : j.m + j.n;
            t = ra::builtin_taylor(j.fn, N, j.k);
        }
        art.r = ra::pade_from_taylor(t, j.m, j.n);
    } else if (j.method == "pc-linear") {
        ra::BuildOutcome out = ra::build_linear_integral(f, j.m, j.n, opts);
        art.r = out.approximant;
        art.condition = out.condition;
    } else if (j.method == "pc-cross" || j.method == "pc-nonlinear") {
        bool cross = j.method == "pc-cross";
        int k_need = cross ? j.n + 2 * j.m : j.n + j.m;
        ra::ChebSeries c;
        if (!j.cheb_file.empty()) {
            c = ra::ChebSeries(read_coeff_file(j.cheb_file));
        } else if (!j.taylor_file.empty() || j.taylor_N >= 0) {
            ra::TaylorSeries t = !j.taylor_file.empty()
                                     ? ra::TaylorSeries(read_coeff_file(j.taylor_file))
                                     : ra::builtin_taylor(j.fn, j.taylor_N, j.k);
            int N = j.taylor_N >= 0 ? j.taylor_N : int(t.coeffs.size()) - 1;
            art.r = cross ? ra::build_linear_cross(ra::taylor_to_cheb_form(t, N, k_need, form),
                                                   j.m, j.n, form, f.domain, &art.condition)
                          : ra::build_nonlinear(ra::taylor_to_cheb_form(t, N, k_need, form),
                                                j.m, j.n, form, f.domain, &art.condition);
            return art;
        } else {
            c = ra::cheb_coeffs_for_form(f, form, k_need, j.s);
        }
        art.r = cross ? ra::build_linear_cross(c, j.m, j.n, form, f.domain, &art.condition)
                      : ra::build_nonlinear(c, j.m, j.n, form, f.domain, &art.condition);
    } else if (j.method == "remez") {
        ra::RemezOutcome out = ra::remez_solve(f, j.m, j.n, weight_of(j), nullptr, form);
        art.r = out.approximant;
        art.cycles = out.cycles;
    } else {
        throw ra::ShapeError("unknown method: " + j.method +
                             " (want pade|pc-linear|pc-cross|pc-nonlinear|remez)");
    }
    return art;
}

std::string parity_name(ra::Parity p) {
    switch (p) {
        case ra::Parity::plain: return "plain";
        case ra::Parity::even: return "even";
        case ra::Parity::odd: return "odd";
    }
    return "plain";
}

void add_coeff_block(ra::ReportDoc& doc, const std::string& prefix,
                     const ra::RationalApproximant& r) {
    for (size_t i = 0; i < r.numerator.coeffs.size(); ++i)
        doc.add(prefix + "a" + std::to_string(i), r.numerator.coeffs[i]);
    for (size_t i = 0; i < r.denominator.coeffs.size(); ++i)
        doc.add(prefix + "b" + std::to_string(i), r.denominator.coeffs[i]);
}

// The two printed forms: b0 = 1 where possible, then the trailing
// denominator coefficient scaled to 1 (numerator-leading when the
// denominator is constant-only).
void add_both_normalizations(ra::ReportDoc& doc, const ra::RationalApproximant& r) {
    doc.add("representation", parity_name(r.parity));
    doc.add("domain_a", r.domain.a);
    doc.add("domain_b", r.domain.b);
    double b0 = r.denominator.coeffs.empty() ? 0.0 : r.denominator.coeffs[0];
    if (b0 != 0.0) {
        ra::RationalApproximant rb = r;
        for (double& c : rb.numerator.coeffs) c /= b0;
        for (double& c : rb.denominator.coeffs) c /= b0;
        doc.add("form1", "b0=1");
        add_coeff_block(doc, "", rb);
    } else {
        doc.add_comment("b0 = 0: the b0-normalized form does not exist; printing raw coefficients");
        doc.add("form1", "raw");
        add_coeff_block(doc, "", r);
    }
    bool leading_numerator = r.denominator.degree() < 1;
    ra::RationalApproximant alt = r.renormalized_to_unit_coeff(leading_numerator);
    doc.add("form2", leading_numerator ? "an=1" : "bm=1");
    add_coeff_block(doc, "alt_", alt);
}

void add_report(ra::ReportDoc& doc, const ra::ApproxReport& rep, bool with_extrema) {
    doc.add("abs_error", rep.abs_error);
    doc.add("rel_error", rep.rel_error);
    doc.add("rel_excluded_count", int(rep.rel_excluded.size()));
    doc.add("extrema_count", int(rep.extrema.size()));
    doc.add("alternation", rep.alternation ? 1 : 0);
    doc.add("q", rep.q);
    doc.add("lower_bound", rep.lower_bound);
    if (with_extrema) {
        for (size_t i = 0; i < rep.extrema.size(); ++i) {
            doc.add("extremum_" + std::to_string(i) + "_x", rep.extrema[i].x);
            doc.add("extremum_" + std::to_string(i) + "_value", rep.extrema[i].value);
        }
    }
}

void write_curve_file(const std::string& path, const ra::TargetFunction& f,
                      const ra::RationalApproximant& r, int checkpoints) {
    std::ofstream out(path);
    if (!out) throw ra::ShapeError("cannot open curve file for writing: " + path);
    out << "# x  delta_abs  delta_rel   (delta_rel printed as 0 where |f| < 1e-300)\n";
    int total = checkpoints + 2;
    for (int i = 0; i < total; ++i) {
        double x = f.domain.a + (f.domain.b - f.domain.a) * double(i) / double(total - 1);
        double fx = f(x);
        double rx = r(x);
        double da = fx - rx;
        double dr = std::fabs(fx) < 1e-300 ? 0.0 : 1.0 - rx / fx;
        out << ra::ReportDoc::format_double(x) << ' ' << ra::ReportDoc::format_double(da)
            << ' ' << ra::ReportDoc::format_double(dr) << '\n';
    }
}

void emit(const JobSpec& j, const ra::ReportDoc& doc) {
    std::string text = doc.str();
    std::cout << text;
    if (!j.out_path.empty()) {
        std::ofstream out(j.out_path);
        if (!out) throw ra::ShapeError("cannot open output file for writing: " + j.out_path);
        out << text;
    }
}

void echo_job_header(ra::ReportDoc& doc, const JobSpec& j, const ra::TargetFunction& f) {
    doc.add_comment("ratapprox " + j.subcommand);
    doc.add("subcommand", j.subcommand);
    doc.add("function", f.name);
    doc.add("a", f.domain.a);
    doc.add("b", f.domain.b);
    doc.add("m", j.m);
    doc.add("n", j.n);
    doc.add("method", j.method);
    doc.add("weight", j.relative ? "relative" : "absolute");
    doc.add("checkpoints", j.checkpoints);
}

int run_approx(const JobSpec& j, bool full_report) {
    ra::TargetFunction f = make_target(j);
    BuildArtifacts art = build_approximant(j, f);
    ra::ApproxReport rep = ra::error_report(f, art.r, weight_of(j), j.checkpoints);

    ra::ReportDoc doc;
    echo_job_header(doc, j, f);
    if (art.condition > 0.0) doc.add("condition", art.condition);
    if (art.cycles >= 0) doc.add("cycles", art.cycles);
    add_both_normalizations(doc, art.r);
    add_report(doc, rep, full_report);
    if (!j.curve_path.empty()) {
        write_curve_file(j.curve_path, f, art.r, j.checkpoints);
        doc.add("curve_file", j.curve_path);
    }
    emit(j, doc);
    return 0;
}

int run_autocorrect(const JobSpec& j) {
    ra::TargetFunction f = make_target(j);
    ra::Parity form = parity_of(j);
    ra::BuildOptions opts;
    opts.normalization = normalization_of(j.normalization);
    opts.parity_form = form;
    opts.s = j.s;
    opts.checkpoints = j.checkpoints;

    ra::Method method;
    if (j.method == "pc-linear") method = ra::Method::pc_linear;
    else if (j.method == "pc-cross") method = ra::Method::pc_cross;
    else if (j.method == "pc-nonlinear") method = ra::Method::pc_nonlinear;
    else
        throw ra::ShapeError("autocorrect supports methods pc-linear|pc-cross|pc-nonlinear, got " +
                             j.method);

    ra::Perturbation pert;
    std::string kind = j.experiment;
    if (kind.empty()) kind = (method == ra::Method::pc_linear) ? "quadrature" : "truncation";
    if (kind == "quadrature") pert.kind = ra::Perturbation::Kind::quadrature_nodes;
    else if (kind == "truncation") pert.kind = ra::Perturbation::Kind::taylor_truncation;
    else if (kind == "noise") pert.kind = ra::Perturbation::Kind::coefficient_noise;
    else if (kind == "norm-switch") pert.kind = ra::Perturbation::Kind::normalization_switch;
    else
        throw ra::ShapeError("unknown experiment: " + kind +
                             " (want quadrature|truncation|noise|norm-switch)");
    pert.s1 = j.s1;
    pert.s2 = j.s2;
    pert.N1 = j.N1;
    pert.N2 = j.N2;
    pert.epsilon = j.noise;
    pert.seed = j.seed;
    pert.norm2 = normalization_of(j.norm2);

    ra::ExperimentRecord rec = ra::autocorrection_experiment(f, j.m, j.n, opts, pert, method);

    ra::ReportDoc doc;
    echo_job_header(doc, j, f);
    doc.add("experiment", kind);
    if (kind == "quadrature") { doc.add("s1", j.s1); doc.add("s2", j.s2); }
    if (kind == "truncation") { doc.add("N1", j.N1); doc.add("N2", j.N2); }
    if (kind == "noise") { doc.add("epsilon", j.noise); doc.add("seed", int(j.seed)); }
    if (kind == "norm-switch") { doc.add("norm2", j.norm2); }
    doc.add("coeff_rel_error", rec.coeff_rel_error);
    doc.add("approximant_error_r1", rec.approximant_error_r1);
    doc.add("approximant_error_r2", rec.approximant_error_r2);
    doc.add("error_approximant_error", rec.error_approximant_error);
    doc.add("cond", rec.cond);
    doc.add("norm_row_residual", rec.norm_row_residual);
    doc.add("residual_l1", rec.residual_l1);
    doc.add("residual_bound", rec.residual_bound);
    doc.add("degenerate", rec.degenerate ? 1 : 0);
    emit(j, doc);
    return 0;
}

int run_elemfun_check(const JobSpec& j) {
    if (j.fn.empty()) throw ra::ShapeError("elemfun-check needs --fn");
    ra::elemfun::FunctionId id = ra::elemfun::function_id_from_name(j.fn);
    std::vector<ra::elemfun::PrecisionTag> tags;
    if (j.precision == "ordinary") tags = {ra::elemfun::PrecisionTag::ordinary};
    else if (j.precision == "enhanced") tags = {ra::elemfun::PrecisionTag::enhanced};
    else if (j.precision == "both")
        tags = {ra::elemfun::PrecisionTag::ordinary, ra::elemfun::PrecisionTag::enhanced};
    else
        throw ra::ShapeError("unknown precision: " + j.precision + " (want ordinary|enhanced|both)");

    ra::ReportDoc doc;
    doc.add_comment("ratapprox elemfun-check");
    doc.add("subcommand", j.subcommand);
    doc.add("function", ra::elemfun::function_id_name(id));
    if (j.has_at) {
        // single-point evaluation instead of the harness sweep
        doc.add("x", j.at);
        for (auto tag : tags) {
            std::string p = tag == ra::elemfun::PrecisionTag::ordinary ? "ordinary" : "enhanced";
            doc.add(p + "_value", ra::elemfun::evaluate(id, j.at, tag));
        }
        emit(j, doc);
        return 0;
    }
    auto interval = ra::elemfun::reduction_interval(id);
    doc.add("interval_lo", interval.first);
    doc.add("interval_hi", interval.second);
    doc.add("grid", j.grid);
    for (auto tag : tags) {
        std::string p = tag == ra::elemfun::PrecisionTag::ordinary ? "ordinary" : "enhanced";
        ra::elemfun::HarnessRecord rec = ra::elemfun::accuracy_harness(id, tag, j.grid);
        doc.add(p + "_max_abs", rec.max_abs);
        doc.add(p + "_max_rel", rec.max_rel);
        doc.add(p + "_mean_abs", rec.mean_abs);
        doc.add(p + "_mean_rel", rec.mean_rel);
    }
    emit(j, doc);
    return 0;
}

int run_model(const JobSpec& j) {
    if (j.samples_file.empty()) throw ra::ShapeError("model needs --samples");
    ra::SampleTable table = ra::read_sample_table(j.samples_file);
    ra::SplineKind kind;
    if (j.spline_kind == "linear") kind = ra::SplineKind::linear;
    else if (j.spline_kind == "cubic") kind = ra::SplineKind::cubic;
    else
        throw ra::ShapeError("unknown spline kind: " + j.spline_kind + " (want linear|cubic)");

    ra::BuildOptions opts;
    opts.normalization = normalization_of(j.normalization);
    opts.parity_form = parity_of(j);
    opts.s = j.s;
    opts.checkpoints = j.checkpoints;
    ra::BuildOutcome out = ra::fit_model(table, j.m, j.n, kind, opts);
    ra::TargetFunction spline = ra::spline_fit(table, kind);

    ra::ReportDoc doc;
    doc.add_comment("ratapprox model (spline + rational fit)");
    doc.add("subcommand", j.subcommand);
    doc.add("samples", j.samples_file);
    doc.add("points", int(table.size()));
    doc.add("spline", j.spline_kind);
    doc.add("m", j.m);
    doc.add("n", j.n);
    doc.add("checkpoints", j.checkpoints);
    doc.add("condition", out.condition);
    add_both_normalizations(doc, out.approximant);
    add_report(doc, out.report, false);
    if (!j.curve_path.empty()) {
        write_curve_file(j.curve_path, spline, out.approximant, j.checkpoints);
        doc.add("curve_file", j.curve_path);
    }
    emit(j, doc);
    return 0;
}

int run_accelerate(const JobSpec& j) {
    ra::TargetFunction f = make_target(j);
    ra::AccelerationResult res = ra::acceleration_compare(f, j.m, j.n);
    ra::ReportDoc doc;
    echo_job_header(doc, j, f);
    doc.add("poly_error", res.poly_error);
    doc.add("rational_error", res.rational_error);
    doc.add("gain", res.rational_error > 0.0 ? res.poly_error / res.rational_error : 0.0);
    emit(j, doc);
    return 0;
}

void add_function_flags(CLI::App* cmd, JobSpec& j) {
    cmd->add_option("--fn", j.fn, "builtin function name");
    cmd->add_option("--taylor-file", j.taylor_file, "Taylor coefficients, one per line");
    cmd->add_option("--cheb-file", j.cheb_file, "Chebyshev coefficients, one per line");
    cmd->add_option("--k", j.k, "scale of the *-scaled entries: f(k*pi*x)");
    auto* oa = cmd->add_option("--a", j.a, "domain left endpoint");
    auto* ob = cmd->add_option("--b", j.b, "domain right endpoint");
    oa->needs(ob);
    ob->needs(oa);
}

void add_build_flags(CLI::App* cmd, JobSpec& j, bool with_remez) {
    cmd->add_option("--m", j.m, "denominator degree")->required();
    cmd->add_option("--n", j.n, "numerator degree")->required();
    cmd->add_option("--method", j.method,
                    with_remez ? "pade|pc-linear|pc-cross|pc-nonlinear|remez"
                               : "pc-linear|pc-cross|pc-nonlinear");
    cmd->add_option("--normalization", j.normalization, "b0|bm|an");
    cmd->add_flag("--even", j.even, "even parity form: P(x^2)/Q(x^2)");
    cmd->add_flag("--odd", j.odd, "odd parity form: x*P(x^2)/Q(x^2)");
    cmd->add_flag("--relative", j.relative, "relative error weight");
    cmd->add_option("--s", j.s, "quadrature node count");
    cmd->add_option("--taylor-N", j.taylor_N, "Taylor truncation degree for series-fed methods");
}

}  // namespace

int main(int argc, char** argv) {
    JobSpec j;
    CLI::App app{"rational-approximation workbench"};
    app.require_subcommand(1);

    CLI::App* approx = app.add_subcommand("approx", "construct an approximant, print coefficients");
    CLI::App* report = app.add_subcommand("report", "approx + full error report and curve data");
    CLI::App* autoc = app.add_subcommand("autocorrect", "paired-build perturbation experiment");
    CLI::App* elem = app.add_subcommand("elemfun-check", "elementary-function accuracy harness");
    CLI::App* model = app.add_subcommand("model", "spline + rational fit of sampled data");
    CLI::App* accel = app.add_subcommand("accelerate", "partial sum vs rational, same coefficients");

    for (CLI::App* cmd : {approx, report, accel}) add_function_flags(cmd, j);
    add_function_flags(autoc, j);
    add_build_flags(approx, j, true);
    add_build_flags(report, j, true);
    add_build_flags(autoc, j, false);
    accel->add_option("--m", j.m, "denominator degree")->required();
    accel->add_option("--n", j.n, "numerator degree")->required();

    autoc->add_option("--experiment", j.experiment, "quadrature|truncation|noise|norm-switch");
    autoc->add_option("--s1", j.s1, "coarse quadrature node count");
    autoc->add_option("--s2", j.s2, "reference quadrature node count");
    autoc->add_option("--N1", j.N1, "first Taylor truncation degree");
    autoc->add_option("--N2", j.N2, "second Taylor truncation degree");
    autoc->add_option("--noise", j.noise, "relative perturbation amplitude");
    autoc->add_option("--seed", j.seed, "noise RNG seed");
    autoc->add_option("--norm2", j.norm2, "second normalization for norm-switch");

    elem->add_option("--fn", j.fn, "lg|exp10|ln|exp|sin|cos|tan|atan|asin")->required();
    elem->add_option("--precision", j.precision, "ordinary|enhanced|both");
    elem->add_option("--grid", j.grid, "harness sample count");
    elem->add_option("--at", j.at, "evaluate at this point instead of sweeping the harness");

    model->add_option("--samples", j.samples_file, "two-column sample table")->required();
    model->add_option("--m", j.m, "denominator degree")->required();
    model->add_option("--n", j.n, "numerator degree")->required();
    model->add_option("--kind", j.spline_kind, "linear|cubic");
    model->add_option("--normalization", j.normalization, "b0|bm|an");
    model->add_flag("--even", j.even, "even parity form: P(x^2)/Q(x^2)");
    model->add_flag("--odd", j.odd, "odd parity form: x*P(x^2)/Q(x^2)");
    model->add_option("--s", j.s, "quadrature node count");

    for (CLI::App* cmd : {approx, report, autoc, elem, model, accel}) {
        cmd->add_option("--out", j.out_path, "write the report document here too");
        cmd->add_option("--curve", j.curve_path, "write error-curve data (x, abs, rel)");
    }

    try {
        app.parse(argc, argv);
        j.checkpoints = checkpoints_from_env();
        j.has_domain = approx->count("--a") || report->count("--a") || autoc->count("--a") ||
                       accel->count("--a");
        j.has_at = elem->count("--at") > 0;

        if (approx->parsed()) { j.subcommand = "approx"; return run_approx(j, false); }
        if (report->parsed()) { j.subcommand = "report"; return run_approx(j, true); }
        if (autoc->parsed()) { j.subcommand = "autocorrect"; return run_autocorrect(j); }
        if (elem->parsed()) { j.subcommand = "elemfun-check"; return run_elemfun_check(j); }
        if (model->parsed()) { j.subcommand = "model"; return run_model(j); }
        if (accel->parsed()) { j.subcommand = "accelerate"; return run_accelerate(j); }
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ra::EvaluationError& e) {
        std::cerr << "evaluation error: " << e.what() << '\n';
        return 3;
    } catch (const ra::DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return 3;
    } catch (const ra::ShapeError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const ra::Error& e) {
        std::cerr << "construction error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
