#include "ratapprox/pade_chebyshev.hpp"

#include <cmath>
#include <cstddef>

#include "ratapprox/errors.hpp"

namespace ratapprox {

namespace {

// Unit-interval evaluator for the quadrature: phi(t) = f(x(t)) for plain
// and even assemblies, f(x)/t for the odd reduction (nodes never hit 0).
std::function<double(double)> unit_target(const TargetFunction& f, Parity form) {
    Domain d = f.domain;
    if (form == Parity::odd) {
        return [f, d](double t) {
            double v = f(d.from_unit(t));
            if (!std::isfinite(v)) throw EvaluationError("target not finite at node");
            return v / t;
        };
    }
    return [f, d](double t) {
        double v = f(d.from_unit(t));
        if (!std::isfinite(v)) throw EvaluationError("target not finite at node");
        return v;
    };
}

int norm_column(Normalization nm, int m, int n) {
    switch (nm) {
        case Normalization::b0: return n + 1;
        case Normalization::bm: return n + 1 + m;
        case Normalization::an: return n;
    }
    return n + 1;
}

// primed-convention coefficient vector -> monomial polynomial, with the
// even/odd u = 2w - 1 re-expression when asked.
Polynomial primed_to_poly(const std::vector<double>& primed, Parity form) {
    std::vector<double> plain = primed;
    if (!plain.empty()) plain[0] /= 2.0;
    Polynomial mono = cheb_to_monomial(ChebSeries{std::move(plain)});
    if (form == Parity::plain) return mono;
    return poly_compose_affine(mono, 2.0, -1.0);
}

}  // namespace

Matrix linear_integral_system(const TargetFunction& f, int m, int n,
                              const BuildOptions& opts, bool with_normalization_row) {
    if (m < 0 || n < 0) throw ShapeError("linear_integral_system: negative degree");
    const int cols = m + n + 2;
    const int hrows = m + n + 1;
    const int s = opts.s;
    if (s < hrows) throw ShapeError("linear_integral_system: s below row count");

    std::vector<double> nodes = gauss_cheb_nodes(s);
    std::function<double(double)> phi = unit_target(f, opts.parity_form);
    std::vector<double> fx(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) fx[i] = phi(nodes[i]);

    // powers of the node (step 2 for the parity-reduced forms)
    const bool reduced = opts.parity_form != Parity::plain;
    auto xpow = [&](double t, int i) {
        double base = reduced ? t * t : t;
        double r = 1.0;
        for (int k = 0; k < i; ++k) r *= base;
        return r;
    };

    Matrix A(hrows + (with_normalization_row ? 1 : 0), cols);
    const double w = M_PI / double(s);
    for (int k = 0; k < hrows; ++k) {
        int kk = reduced ? 2 * k : k;
        for (size_t q = 0; q < nodes.size(); ++q) {
            double t = nodes[q];
            double Tk = cheb_eval(kk, t);
            for (int i = 0; i <= n; ++i) A.at(k, i) -= w * xpow(t, i) * Tk;
            for (int j = 0; j <= m; ++j) A.at(k, n + 1 + j) += w * xpow(t, j) * Tk * fx[q];
        }
    }
    if (with_normalization_row)
        A.at(hrows, norm_column(opts.normalization, m, n)) = 1.0;
    return A;
}

BuildOutcome build_linear_integral(const TargetFunction& f, int m, int n,
                                   const BuildOptions& opts) {
    Matrix A = linear_integral_system(f, m, n, opts, true);
    std::vector<double> h(size_t(m + n + 2), 0.0);
    h.back() = 1.0;

    SolveResult sol;
    try {
        sol = solve(A, h);
    } catch (const SingularMatrixError& e) {
        double cond = 0.0;
        throw ConstructionError(std::string("linear Pade-Chebyshev system singular: ") +
                                    e.what(),
                                cond);
    }

    BuildOutcome out;
    out.condition = condition_number(A);
    RationalApproximant& r = out.approximant;
    r.numerator.coeffs.assign(sol.solution.begin(), sol.solution.begin() + n + 1);
    r.denominator.coeffs.assign(sol.solution.begin() + n + 1, sol.solution.end());
    r.parity = opts.parity_form;
    r.domain = f.domain;
    out.report = error_report(f, r, Weight{}, opts.checkpoints);
    return out;
}

RationalApproximant build_linear_cross(const ChebSeries& c, int m, int n,
                                       Parity form, Domain dom, double* condition) {
    if (m < 0 || n < 0) throw ShapeError("build_linear_cross: negative degree");
    if (c.coeffs.size() < size_t(n + 2 * m + 1))
        throw ShapeError("build_linear_cross: need coefficients c_0..c_{n+2m}");

    // primed convention: first coefficient doubled
    std::vector<double> cp = c.coeffs;
    cp[0] *= 2.0;
    auto cv = [&](long i) -> double {
        return (i >= 0 && size_t(i) < cp.size()) ? cp[size_t(i)] : 0.0;
    };

    std::vector<double> b(size_t(m) + 1, 0.0);
    b[0] = 1.0;
    double cond = 1.0;
    if (m > 0) {
        Matrix A(m, m);
        std::vector<double> rhs(size_t(m), 0.0);
        for (int r = 0; r < m; ++r) {
            int i = n + 1 + r;
            rhs[size_t(r)] = -cv(i);
            for (int j = 1; j <= m; ++j) A.at(r, j - 1) = cv(i + j) + cv(std::abs(i - j));
        }
        SolveResult sol;
        try {
            sol = solve(A, rhs);
        } catch (const SingularMatrixError& e) {
            throw ConstructionError(std::string("cross-scheme system singular: ") + e.what());
        }
        for (int j = 1; j <= m; ++j) b[size_t(j)] = sol.solution[size_t(j) - 1];
        cond = condition_number(A);
    }
    if (condition) *condition = cond;

    std::vector<double> a(size_t(n) + 1, 0.0);
    for (int i = 0; i <= n; ++i) {
        double sp = 0.5 * b[0] * (cv(i) + cv(i));
        for (int j = 1; j <= m; ++j) sp += b[size_t(j)] * (cv(i + j) + cv(std::abs(i - j)));
        a[size_t(i)] = 0.5 * sp;
    }

    RationalApproximant r;
    r.numerator = primed_to_poly(a, form);
    r.denominator = primed_to_poly(b, form);
    r.parity = form;
    r.domain = dom;
    return r;
}

RationalApproximant build_nonlinear(const ChebSeries& c, int m, int n,
                                    Parity form, Domain dom, double* condition) {
    if (m < 0 || n < 0) throw ShapeError("build_nonlinear: negative degree");
    if (c.coeffs.size() < size_t(n + m + 1))
        throw ShapeError("build_nonlinear: need coefficients c_0..c_{n+m}");

    std::vector<double> cp = c.coeffs;
    cp[0] *= 2.0;
    auto cv = [&](long i) -> double {
        return (i >= 0 && size_t(i) < cp.size()) ? cp[size_t(i)] : 0.0;
    };

    std::vector<double> g(size_t(m) + 1, 0.0);
    g[0] = 1.0;
    double cond = 1.0;
    if (m > 0) {
        Matrix A(m, m);
        std::vector<double> rhs(size_t(m), 0.0);
        for (int r = 0; r < m; ++r) {
            int k = n + 1 + r;
            rhs[size_t(r)] = -cv(k);
            for (int j = 1; j <= m; ++j) A.at(r, j - 1) = cv(std::abs(k - j));
        }
        SolveResult sol;
        try {
            sol = solve(A, rhs);
        } catch (const SingularMatrixError& e) {
            throw ConstructionError(
                std::string("nonlinear Pade-Chebyshev approximant does not exist: ") +
                e.what());
        }
        for (int j = 1; j <= m; ++j) g[size_t(j)] = sol.solution[size_t(j) - 1];
        cond = condition_number(A);
    }
    if (condition) *condition = cond;

    double ssq = 0.0;
    for (double gi : g) ssq += gi * gi;
    double mu = 2.0 / ssq;

    std::vector<double> b(size_t(m) + 1, 0.0);
    for (int j = 0; j <= m; ++j) {
        double s = 0.0;
        for (int i = 0; i + j <= m; ++i) s += g[size_t(i)] * g[size_t(i + j)];
        b[size_t(j)] = mu * s;
    }

    std::vector<double> a(size_t(n) + 1, 0.0);
    for (int i = 0; i <= n; ++i) {
        double sp = 0.5 * b[0] * (cv(i) + cv(i));
        for (int j = 1; j <= m; ++j) sp += b[size_t(j)] * (cv(i + j) + cv(std::abs(i - j)));
        a[size_t(i)] = 0.5 * sp;
    }

    RationalApproximant r;
    r.numerator = primed_to_poly(a, form);
    r.denominator = primed_to_poly(b, form);
    r.parity = form;
    r.domain = dom;
    return r;
}

ChebSeries taylor_to_cheb_truncated(const TaylorSeries& t, int N, int K) {
    if (N < K) throw ShapeError("taylor_to_cheb_truncated: N < K");
    if (N > kChebDegreeCap)
        throw ShapeError("taylor_to_cheb_truncated: N over the degree cap");
    std::vector<double> mono(t.coeffs.begin(),
                             t.coeffs.begin() + std::min(t.coeffs.size(), size_t(N) + 1));
    ChebSeries c = monomial_to_cheb(Polynomial{std::move(mono)});
    c.coeffs.resize(size_t(K) + 1, 0.0);
    return c;
}

ChebSeries taylor_to_cheb_form(const TaylorSeries& t, int N, int K, Parity form) {
    if (form == Parity::plain) return taylor_to_cheb_truncated(t, N, K);
    // keep the parity core up to degree N, compose with y = (u+1)/2
    std::vector<double> q;
    if (form == Parity::odd) {
        for (int k = 0; 2 * k + 1 <= N; ++k) q.push_back(t.c(2 * k + 1));
    } else {
        for (int k = 0; 2 * k <= N; ++k) q.push_back(t.c(2 * k));
    }
    Polynomial in_u = poly_compose_affine(Polynomial{std::move(q)}, 0.5, 0.5);
    ChebSeries c = monomial_to_cheb(in_u);
    c.coeffs.resize(size_t(K) + 1, 0.0);
    return c;
}

ChebSeries cheb_coeffs_for_form(const TargetFunction& f, Parity form, int k_max, int s) {
    std::function<double(double)> phi = unit_target(f, form);
    if (form == Parity::plain) return fourier_cheb_coeffs(phi, k_max, s);
    auto psi = [phi](double u) {
        double t = std::sqrt((u + 1.0) / 2.0);
        return phi(t);
    };
    return fourier_cheb_coeffs(psi, k_max, s);
}

}  // namespace ratapprox
