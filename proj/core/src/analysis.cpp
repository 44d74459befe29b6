#include "ratapprox/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ratapprox/errors.hpp"
#include "ratapprox/pade_chebyshev.hpp"

namespace ratapprox {

namespace {

// Uniform grid of `checkpoints` interior points plus both endpoints.
std::vector<double> checkpoint_grid(double a, double b, int checkpoints) {
    int total = checkpoints + 2;
    std::vector<double> g(static_cast<size_t>(total));
    for (int k = 0; k < total; ++k)
        g[size_t(k)] = a + (b - a) * double(k) / double(total - 1);
    g.front() = a;
    g.back() = b;
    return g;
}

double golden_refine(const std::function<double(double)>& e, double lo, double hi,
                     double sign) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    for (int it = 0; it < 60; ++it) {
        double fc = sign * e(c);
        double fd = sign * e(d);
        if (fc > fd)
            hi = d;
        else
            lo = c;
        c = hi - gr * (hi - lo);
        d = lo + gr * (hi - lo);
    }
    return (lo + hi) / 2.0;
}

}  // namespace

std::vector<ErrorExtremum> locate_extrema(const std::function<double(double)>& e,
                                          double a, double b, int grid) {
    std::vector<double> xs(size_t(grid) + 1);
    std::vector<double> ev(size_t(grid) + 1);
    for (int i = 0; i <= grid; ++i) {
        xs[size_t(i)] = a + (b - a) * double(i) / double(grid);
        ev[size_t(i)] = e(xs[size_t(i)]);
    }
    std::vector<size_t> idx{0};
    for (size_t i = 1; i + 1 < xs.size(); ++i)
        if ((ev[i] - ev[i - 1]) * (ev[i + 1] - ev[i]) <= 0.0) idx.push_back(i);
    idx.push_back(xs.size() - 1);

    std::vector<ErrorExtremum> cands;
    cands.reserve(idx.size());
    for (size_t i : idx) {
        double lo = xs[i > 0 ? i - 1 : 0];
        double hi = xs[std::min(i + 1, xs.size() - 1)];
        double sign = ev[i] >= 0.0 ? 1.0 : -1.0;
        double xr = golden_refine(e, lo, hi, sign);
        cands.push_back({xr, e(xr)});
    }
    // collapse same-sign runs, keeping the largest magnitude of each run
    std::vector<ErrorExtremum> merged;
    for (const ErrorExtremum& c : cands) {
        if (c.value == 0.0) continue;
        if (!merged.empty() &&
            std::signbit(c.value) == std::signbit(merged.back().value)) {
            if (std::fabs(c.value) > std::fabs(merged.back().value)) merged.back() = c;
        } else {
            merged.push_back(c);
        }
    }
    return merged;
}

AlternationQuality alternation_quality(const std::vector<double>& values, int needed) {
    if (needed < 0) needed = int(values.size());
    size_t best_lo = 0, best_len = 0;
    size_t lo = 0, len = 0;
    double prev = 0.0;
    for (size_t i = 0; i < values.size(); ++i) {
        double v = values[i];
        if (v == 0.0) {
            len = 0;
            continue;
        }
        if (len > 0 && std::signbit(v) != std::signbit(prev)) {
            ++len;
        } else {
            lo = i;
            len = 1;
        }
        prev = v;
        if (len > best_len) {
            best_len = len;
            best_lo = lo;
        }
    }
    AlternationQuality out;
    out.alternation = best_len >= size_t(needed) && needed >= 1;
    if (best_len >= 1) {
        double vmin = 0.0, vmax = 0.0;
        for (size_t i = best_lo; i < best_lo + best_len; ++i) {
            double m = std::fabs(values[i]);
            vmax = std::max(vmax, m);
            vmin = (i == best_lo) ? m : std::min(vmin, m);
        }
        if (vmax > 0.0) out.q = vmin / vmax;
    }
    return out;
}

ApproxReport error_report(const TargetFunction& f, const RationalApproximant& r,
                          Weight w, int checkpoints) {
    ApproxReport rep;
    rep.weight = w.kind;
    const Domain& d = f.domain;
    std::vector<double> grid = checkpoint_grid(d.a, d.b, checkpoints);

    std::vector<double> poles;
    for (double x : grid) {
        double t = r.domain.to_unit(x);
        RationalApproximant::Parts p = r.parts_at_unit(t);
        double val = p.num / p.den;
        if (p.den == 0.0 || !std::isfinite(val)) {
            poles.push_back(x);
            continue;
        }
        double fx = f(x);
        double ae = std::fabs(fx - val);
        rep.abs_error = std::max(rep.abs_error, ae);
        if (std::fabs(fx) < 1e-300) {
            rep.rel_excluded.push_back(x);
        } else {
            rep.rel_error = std::max(rep.rel_error, std::fabs(1.0 - val / fx));
        }
    }
    if (!poles.empty()) {
        std::ostringstream os;
        os << "denominator vanishes at " << poles.size() << " checkpoint(s):";
        for (size_t i = 0; i < poles.size() && i < 4; ++i) os << ' ' << poles[i];
        throw EvaluationError(os.str());
    }

    auto weighted = [&](double x) -> double {
        double e = f(x) - r(x);
        if (w.kind == WeightKind::relative) {
            double fx = std::fabs(f(x));
            if (fx < 1e-300) return 0.0;
            return e / fx;
        }
        return e;
    };
    rep.extrema = locate_extrema(weighted, d.a, d.b, checkpoints + 1);

    std::vector<double> vals;
    vals.reserve(rep.extrema.size());
    for (const ErrorExtremum& e : rep.extrema) vals.push_back(e.value);
    int needed = r.numerator.degree() + r.denominator.degree() + 2;
    AlternationQuality aq = alternation_quality(vals, needed);
    rep.alternation = aq.alternation;
    if (aq.alternation) {
        rep.q = aq.q;
        rep.lower_bound =
            aq.q * (w.kind == WeightKind::relative ? rep.rel_error : rep.abs_error);
    }
    return rep;
}

AccelerationResult acceleration_compare(const TargetFunction& f, int m, int n) {
    Parity form = Parity::plain;
    if (f.parity == ParityHint::even) form = Parity::even;
    if (f.parity == ParityHint::odd) form = Parity::odd;

    int K = n + 2 * m;
    ChebSeries c = cheb_coeffs_for_form(f, form, K);
    RationalApproximant rat = build_linear_cross(c, m, n, form, f.domain);

    // partial sum of the same series, evaluated through the same parity shape
    auto partial = [&](double x) -> double {
        double t = f.domain.to_unit(x);
        switch (form) {
            case Parity::plain:
                return c(t);
            case Parity::even:
                return c(2.0 * t * t - 1.0);
            case Parity::odd:
                return t * c(2.0 * t * t - 1.0);
        }
        return 0.0;
    };

    AccelerationResult out;
    std::vector<double> grid = checkpoint_grid(f.domain.a, f.domain.b, 2000);
    for (double x : grid) {
        out.poly_error = std::max(out.poly_error, std::fabs(f(x) - partial(x)));
        out.rational_error = std::max(out.rational_error, std::fabs(f(x) - rat(x)));
    }
    return out;
}

}  // namespace ratapprox
