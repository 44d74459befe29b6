#include "ratapprox/autocorrection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ratapprox/analysis.hpp"
#include "ratapprox/cheb.hpp"
#include "ratapprox/dd.hpp"
#include "ratapprox/errors.hpp"

namespace ratapprox {

namespace {

void check_pair(const RationalApproximant& r1, const RationalApproximant& r2) {
    if (r1.parity != r2.parity)
        throw ShapeError("approximant pair: parity forms differ");
    if (r1.numerator.coeffs.size() != r2.numerator.coeffs.size() ||
        r1.denominator.coeffs.size() != r2.denominator.coeffs.size())
        throw ShapeError("approximant pair: degrees differ");
    if (r1.domain.a != r2.domain.a || r1.domain.b != r2.domain.b)
        throw ShapeError("approximant pair: domains differ");
}

std::vector<double> flatten(const RationalApproximant& r) {
    std::vector<double> y = r.numerator.coeffs;
    y.insert(y.end(), r.denominator.coeffs.begin(), r.denominator.coeffs.end());
    return y;
}

// Plain Chebyshev coefficients of a stored polynomial in the scan variable:
// the unit variable t for plain approximants, u = 2t^2 - 1 for the reduced
// forms (whose polynomials live in w = t^2).
ChebSeries scan_cheb(const Polynomial& p, Parity parity) {
    if (parity == Parity::plain) return monomial_to_cheb(p);
    return monomial_to_cheb(poly_compose_affine(p, 0.5, 0.5));
}

std::vector<dd> to_dd(const std::vector<double>& v) {
    std::vector<dd> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = dd(v[i]);
    return out;
}

dd clenshaw_dd(const std::vector<dd>& c, dd x) {
    if (c.empty()) return dd(0.0);
    dd b1, b2;
    for (size_t k = c.size() - 1; k >= 1; --k) {
        dd b = dd(2.0) * x * b1 - b2 + c[k];
        b2 = b1;
        b1 = b;
    }
    return x * b1 - b2 + c[0];
}

std::vector<dd> cheb_mult_dd(const std::vector<dd>& a, const std::vector<dd>& b) {
    if (a.empty() || b.empty()) return {dd(0.0)};
    std::vector<dd> out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            dd t = dd(0.5) * a[i] * b[j];
            out[i + j] += t;
            out[i >= j ? i - j : j - i] += t;
        }
    }
    return out;
}

// Both identities compare expressions in the coefficient differences of a
// pair; this bundles the shared conversion work.
struct PairSeries {
    std::vector<dd> P, Q, Pt, Qt, dP, dQ;
};

PairSeries pair_series(const RationalApproximant& r1, const RationalApproximant& r2) {
    check_pair(r1, r2);
    PairSeries ps;
    ps.P = to_dd(scan_cheb(r1.numerator, r1.parity).coeffs);
    ps.Q = to_dd(scan_cheb(r1.denominator, r1.parity).coeffs);
    ps.Pt = to_dd(scan_cheb(r2.numerator, r2.parity).coeffs);
    ps.Qt = to_dd(scan_cheb(r2.denominator, r2.parity).coeffs);
    ps.dP.resize(ps.P.size());
    ps.dQ.resize(ps.Q.size());
    for (size_t i = 0; i < ps.P.size(); ++i) ps.dP[i] = ps.Pt[i] - ps.P[i];
    for (size_t i = 0; i < ps.Q.size(); ++i) ps.dQ[i] = ps.Qt[i] - ps.Q[i];
    return ps;
}

}  // namespace

RationalApproximant ErrorApproximant::as_approximant() const {
    return RationalApproximant{delta_num, delta_den, parity, domain};
}

ErrorApproximant error_approximant(const RationalApproximant& r1,
                                   const RationalApproximant& r2, int checkpoints) {
    check_pair(r1, r2);
    ErrorApproximant out;
    out.parity = r1.parity;
    out.domain = r1.domain;
    out.y1 = flatten(r1);
    out.y2 = flatten(r2);

    auto diff = [](const Polynomial& a, const Polynomial& b) {
        std::vector<double> d(a.coeffs.size());
        for (size_t i = 0; i < d.size(); ++i) d[i] = b.coeffs[i] - a.coeffs[i];
        return Polynomial{std::move(d)};
    };
    out.delta_num = diff(r1.numerator, r2.numerator);
    out.delta_den = diff(r1.denominator, r2.denominator);

    out.degenerate = true;
    for (double v : out.delta_num.coeffs)
        if (v != 0.0) out.degenerate = false;
    for (double v : out.delta_den.coeffs)
        if (v != 0.0) out.degenerate = false;
    if (out.degenerate) return out;

    // Exclusion zones: where |dQ| dips below 1e-3 of its grid max, widened
    // so that every sign change between neighbouring grid points is covered.
    const Domain d = r1.domain;
    const int npts = checkpoints + 1;
    std::vector<double> xs(static_cast<size_t>(npts)), qv(static_cast<size_t>(npts));
    double qmax = 0.0;
    for (int i = 0; i < npts; ++i) {
        double x = d.a + (d.b - d.a) * double(i) / double(npts - 1);
        double t = d.to_unit(x);
        double w = (r1.parity == Parity::plain) ? t : t * t;
        xs[size_t(i)] = x;
        qv[size_t(i)] = out.delta_den(w);
        qmax = std::max(qmax, std::fabs(qv[size_t(i)]));
    }
    if (qmax == 0.0) {
        // dQ identically zero but dP not: no zones at all.
        return out;
    }
    const double thr = 1e-3 * qmax;
    std::vector<bool> low(size_t(npts), false);
    for (int i = 0; i < npts; ++i) low[size_t(i)] = std::fabs(qv[size_t(i)]) < thr;
    for (int i = 0; i + 1 < npts; ++i) {
        if (qv[size_t(i)] != 0.0 && qv[size_t(i) + 1] != 0.0 &&
            std::signbit(qv[size_t(i)]) != std::signbit(qv[size_t(i) + 1])) {
            low[size_t(i)] = true;
            low[size_t(i) + 1] = true;
        }
    }
    for (int i = 0; i < npts;) {
        if (!low[size_t(i)]) {
            ++i;
            continue;
        }
        int j = i;
        while (j + 1 < npts && low[size_t(j) + 1]) ++j;
        out.excluded_zones.emplace_back(xs[size_t(i)], xs[size_t(j)]);
        i = j + 1;
    }
    return out;
}

double identity29_residual(const RationalApproximant& r1, const RationalApproximant& r2,
                           int checkpoints) {
    PairSeries ps = pair_series(r1, r2);
    // Left side with the numerator dP*Q - P*dQ multiplied out as a series.
    std::vector<dd> num = cheb_mult_dd(ps.dP, ps.Q);
    std::vector<dd> sub = cheb_mult_dd(ps.P, ps.dQ);
    if (num.size() < sub.size()) num.resize(sub.size());
    for (size_t i = 0; i < sub.size(); ++i) num[i] -= sub[i];

    double scale = 0.0;
    std::vector<double> diffs;
    diffs.reserve(size_t(checkpoints));
    for (int i = 0; i < checkpoints; ++i) {
        dd x(-1.0 + 2.0 * double(i) / double(checkpoints - 1));
        dd Qv = clenshaw_dd(ps.Q, x);
        dd Qtv = clenshaw_dd(ps.Qt, x);
        dd dQv = clenshaw_dd(ps.dQ, x);
        if (fabs(Qv) <= 1e-8 || fabs(Qtv) <= 1e-8 || fabs(dQv) <= 1e-8) continue;
        dd Pv = clenshaw_dd(ps.P, x);
        dd dPv = clenshaw_dd(ps.dP, x);
        dd lhs = clenshaw_dd(num, x) / (Qtv * Qv);
        dd rhs = (dQv / Qtv) * (dPv / dQv - Pv / Qv);
        diffs.push_back(double(lhs - rhs));
        scale = std::max(scale, fabs(lhs));
    }
    if (diffs.empty() || scale == 0.0) return 0.0;
    double worst = 0.0;
    for (double e : diffs) worst = std::max(worst, std::fabs(e) / scale);
    return worst;
}

double identity49_residual(const RationalApproximant& r1, const RationalApproximant& r2,
                           int checkpoints) {
    PairSeries ps = pair_series(r1, r2);
    double scale = 0.0;
    std::vector<double> diffs;
    diffs.reserve(size_t(checkpoints));
    for (int i = 0; i < checkpoints; ++i) {
        dd x(-1.0 + 2.0 * double(i) / double(checkpoints - 1));
        dd Qv = clenshaw_dd(ps.Q, x);
        dd Qtv = clenshaw_dd(ps.Qt, x);
        if (fabs(Qv) <= 1e-8 || fabs(Qtv) <= 1e-8) continue;
        dd Pv = clenshaw_dd(ps.P, x);
        dd Ptv = clenshaw_dd(ps.Pt, x);
        dd dPv = clenshaw_dd(ps.dP, x);
        dd dQv = clenshaw_dd(ps.dQ, x);
        dd lhs = Ptv / Qtv - Pv / Qv;
        dd rhs = dPv / Qtv - (dQv / Qtv) * (Pv / Qv);
        diffs.push_back(double(lhs - rhs));
        scale = std::max(scale, fabs(lhs));
    }
    if (diffs.empty() || scale == 0.0) return 0.0;
    double worst = 0.0;
    for (double e : diffs) worst = std::max(worst, std::fabs(e) / scale);
    return worst;
}

namespace {

// Max |f - dP/dQ| (with the parity factor) on the grid, skipping points
// where |dQ| < 1e-3 of its grid max.
double error_approximant_delta(const TargetFunction& f, const ErrorApproximant& delta,
                               int checkpoints) {
    if (delta.degenerate) return 0.0;
    const Domain d = delta.domain;
    const int npts = checkpoints + 1;
    RationalApproximant era = delta.as_approximant();
    std::vector<double> xs(static_cast<size_t>(npts)), qv(static_cast<size_t>(npts));
    double qmax = 0.0;
    for (int i = 0; i < npts; ++i) {
        double x = d.a + (d.b - d.a) * double(i) / double(npts - 1);
        double t = d.to_unit(x);
        double w = (delta.parity == Parity::plain) ? t : t * t;
        xs[size_t(i)] = x;
        qv[size_t(i)] = delta.delta_den(w);
        qmax = std::max(qmax, std::fabs(qv[size_t(i)]));
    }
    if (qmax == 0.0) return 0.0;
    double worst = 0.0;
    for (int i = 0; i < npts; ++i) {
        if (std::fabs(qv[size_t(i)]) < 1e-3 * qmax) continue;
        worst = std::max(worst, std::fabs(f(xs[size_t(i)]) - era(xs[size_t(i)])));
    }
    return worst;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

RationalApproximant from_solution(const std::vector<double>& y, int n,
                                  Parity form, Domain dom) {
    RationalApproximant r;
    r.numerator = Polynomial{std::vector<double>(y.begin(), y.begin() + (n + 1))};
    r.denominator = Polynomial{std::vector<double>(y.begin() + (n + 1), y.end())};
    r.parity = form;
    r.domain = dom;
    return r;
}

int norm_column_index(Normalization norming, int m, int n) {
    switch (norming) {
        case Normalization::b0: return n + 1;
        case Normalization::bm: return n + 1 + m;
        case Normalization::an: return n;
    }
    return n + 1;
}

}  // namespace

ExperimentRecord autocorrection_experiment(const TargetFunction& f, int m, int n,
                                           const BuildOptions& opts, const Perturbation& p,
                                           Method method) {
    using Kind = Perturbation::Kind;
    ExperimentRecord rec;
    RationalApproximant r1, r2;
    bool have_system = false;
    Matrix H(1, 1);

    const bool linear_route = (method == Method::pc_linear);
    const bool series_route = (method == Method::pc_cross || method == Method::pc_nonlinear);
    auto series_build = [&](const ChebSeries& c, double* cond) {
        return method == Method::pc_cross
                   ? build_linear_cross(c, m, n, opts.parity_form, f.domain, cond)
                   : build_nonlinear(c, m, n, opts.parity_form, f.domain, cond);
    };
    const int k_need = (method == Method::pc_cross) ? n + 2 * m : n + m;

    switch (p.kind) {
        case Kind::quadrature_nodes: {
            if (!linear_route)
                throw ShapeError("quadrature_nodes perturbation needs the linear method");
            BuildOptions o1 = opts, o2 = opts;
            o1.s = p.s1;
            o2.s = p.s2;
            BuildOutcome b1 = build_linear_integral(f, m, n, o1);
            BuildOutcome b2 = build_linear_integral(f, m, n, o2);
            r1 = b1.approximant;
            r2 = b2.approximant;
            rec.cond = b2.condition;
            H = linear_integral_system(f, m, n, o2, /*with_normalization_row=*/false);
            have_system = true;
            break;
        }
        case Kind::normalization_switch: {
            if (!linear_route)
                throw ShapeError("normalization_switch perturbation needs the linear method");
            BuildOptions o2 = opts;
            o2.normalization = p.norm2;
            BuildOutcome b1 = build_linear_integral(f, m, n, opts);
            BuildOutcome b2 = build_linear_integral(f, m, n, o2);
            r1 = b1.approximant;
            r2 = b2.approximant;
            rec.cond = b2.condition;
            H = linear_integral_system(f, m, n, opts, false);
            have_system = true;
            break;
        }
        case Kind::coefficient_noise: {
            std::mt19937_64 rng(p.seed);
            std::uniform_real_distribution<double> uni(-1.0, 1.0);
            if (linear_route) {
                BuildOutcome b1 = build_linear_integral(f, m, n, opts);
                r1 = b1.approximant;
                Matrix A = linear_integral_system(f, m, n, opts, true);
                H = Matrix(A.rows - 1, A.cols);
                for (int i = 0; i + 1 < A.rows; ++i)
                    for (int j = 0; j < A.cols; ++j) H.at(i, j) = A.at(i, j);
                have_system = true;
                for (int i = 0; i + 1 < A.rows; ++i)
                    for (int j = 0; j < A.cols; ++j)
                        A.at(i, j) *= 1.0 + p.epsilon * uni(rng);
                std::vector<double> h(size_t(A.rows), 0.0);
                h.back() = 1.0;
                std::vector<double> y2;
                try {
                    y2 = solve(A, h).solution;
                } catch (const SingularMatrixError& e) {
                    throw ConstructionError(std::string("perturbed system: ") + e.what());
                }
                r2 = from_solution(y2, n, opts.parity_form, f.domain);
                rec.cond = condition_number(A);
            } else if (series_route) {
                ChebSeries c = cheb_coeffs_for_form(f, opts.parity_form, k_need, opts.s);
                double cond1 = 0.0, cond2 = 0.0;
                r1 = series_build(c, &cond1);
                ChebSeries c2 = c;
                for (double& v : c2.coeffs) v *= 1.0 + p.epsilon * uni(rng);
                r2 = series_build(c2, &cond2);
                rec.cond = cond2;
            } else {
                throw ShapeError("coefficient_noise: unsupported construction method");
            }
            break;
        }
        case Kind::taylor_truncation: {
            if (!series_route)
                throw ShapeError("taylor_truncation needs the cross or nonlinear method");
            double cond1 = 0.0, cond2 = 0.0;
            TaylorSeries t1 = builtin_taylor(f.name, p.N1);
            TaylorSeries t2 = builtin_taylor(f.name, p.N2);
            r1 = series_build(taylor_to_cheb_form(t1, p.N1, k_need, opts.parity_form), &cond1);
            r2 = series_build(taylor_to_cheb_form(t2, p.N2, k_need, opts.parity_form), &cond2);
            rec.cond = cond2;
            break;
        }
    }

    ErrorApproximant delta = error_approximant(r1, r2, opts.checkpoints);
    rec.degenerate = delta.degenerate;
    std::vector<double> dy(delta.y1.size());
    for (size_t i = 0; i < dy.size(); ++i) dy[i] = delta.y2[i] - delta.y1[i];
    double base = max_abs(delta.y1);
    rec.coeff_rel_error = (base > 0.0) ? max_abs(dy) / base : 0.0;

    Weight abs_w;
    rec.approximant_error_r1 = error_report(f, r1, abs_w, opts.checkpoints).abs_error;
    rec.approximant_error_r2 = error_report(f, r2, abs_w, opts.checkpoints).abs_error;
    rec.error_approximant_error = error_approximant_delta(f, delta, opts.checkpoints);

    if (linear_route) {
        int col = norm_column_index(opts.normalization, m, n);
        rec.norm_row_residual = std::fabs(dy[size_t(col)]);
    }
    if (have_system) {
        double rd = 0.0, rb1 = 0.0, rb2 = 0.0;
        for (int i = 0; i < H.rows; ++i) {
            double sd = 0.0, s1 = 0.0, s2 = 0.0;
            for (int j = 0; j < H.cols; ++j) {
                sd += H.at(i, j) * dy[size_t(j)];
                s1 += H.at(i, j) * delta.y1[size_t(j)];
                s2 += H.at(i, j) * delta.y2[size_t(j)];
            }
            rd += std::fabs(sd);
            rb1 += std::fabs(s1);
            rb2 += std::fabs(s2);
        }
        rec.residual_l1 = rd;
        rec.residual_bound = rb1 + rb2;
    }
    return rec;
}

double residual_check(const ErrorApproximant& delta, const Matrix& system) {
    if (delta.y1.empty() || delta.y1.size() != delta.y2.size())
        throw ShapeError("residual_check: error approximant carries no source vectors");
    if (size_t(system.cols) != delta.y1.size())
        throw ShapeError("residual_check: system column count does not match the pair");
    double rd = 0.0, rb1 = 0.0, rb2 = 0.0;
    for (int i = 0; i < system.rows; ++i) {
        double sd = 0.0, s1 = 0.0, s2 = 0.0;
        for (int j = 0; j < system.cols; ++j) {
            double dyj = delta.y2[size_t(j)] - delta.y1[size_t(j)];
            sd += system.at(i, j) * dyj;
            s1 += system.at(i, j) * delta.y1[size_t(j)];
            s2 += system.at(i, j) * delta.y2[size_t(j)];
        }
        rd += std::fabs(sd);
        rb1 += std::fabs(s1);
        rb2 += std::fabs(s2);
    }
    if (rd > rb1 + rb2)
        throw Error("residual_check: triangle bound violated; not a construction pair");
    return rd;
}

int pade_error_approximant_order(const TaylorSeries& t, const RationalApproximant& r1,
                                 const RationalApproximant& r2) {
    check_pair(r1, r2);
    const int n = r1.numerator.degree();
    const int m = r1.denominator.degree();
    std::vector<double> dP(size_t(n) + 1), dQ(size_t(m) + 1);
    for (int i = 0; i <= n; ++i)
        dP[size_t(i)] = r2.numerator.coeffs[size_t(i)] - r1.numerator.coeffs[size_t(i)];
    for (int j = 0; j <= m; ++j)
        dQ[size_t(j)] = r2.denominator.coeffs[size_t(j)] - r1.denominator.coeffs[size_t(j)];
    double scale = std::max({max_abs(dP), max_abs(dQ), 1e-300});
    for (int k = 0; k <= m + n + 1; ++k) {
        double tk = 0.0;
        for (int j = 0; j <= std::min(k, m); ++j) tk += t.c(k - j) * dQ[size_t(j)];
        if (k <= n) tk -= dP[size_t(k)];
        if (std::fabs(tk) / scale > 1e-3) return k;
    }
    return m + n + 2;
}

double cheb_error_approximant_residual(const ChebSeries& c, const ErrorApproximant& delta,
                                       double* scale_out) {
    if (delta.degenerate) {
        if (scale_out) *scale_out = 0.0;
        return 0.0;
    }
    ChebSeries dP = scan_cheb(delta.delta_num, delta.parity);
    ChebSeries dQ = scan_cheb(delta.delta_den, delta.parity);
    ChebSeries fd = cheb_multiply(c, dQ);
    std::vector<double> g = fd.coeffs;
    if (g.size() < dP.coeffs.size()) g.resize(dP.coeffs.size(), 0.0);
    for (size_t i = 0; i < dP.coeffs.size(); ++i) g[i] -= dP.coeffs[i];

    const int n = delta.delta_num.degree();
    double worst = 0.0;
    for (int i = 0; i <= n; ++i) {
        double gi = (size_t(i) < g.size()) ? g[size_t(i)] : 0.0;
        double weight = (i == 0) ? std::numbers::pi : std::numbers::pi / 2.0;
        worst = std::max(worst, std::fabs(gi) * weight);
    }
    if (scale_out) *scale_out = max_abs(fd.coeffs) * std::numbers::pi / 2.0;
    return worst;
}

}  // namespace ratapprox
