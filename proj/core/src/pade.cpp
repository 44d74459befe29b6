#include "ratapprox/pade.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>

#include "ratapprox/errors.hpp"
#include "ratapprox/linalg.hpp"

namespace ratapprox {

RationalApproximant pade_from_taylor(const TaylorSeries& t, int m, int n) {
    if (m < 0 || n < 0) throw ShapeError("pade_from_taylor: negative degree");
    if (t.coeffs.size() < size_t(m + n + 1))
        throw ShapeError("pade_from_taylor: need m+n+1 Taylor coefficients");

    Polynomial q;
    q.coeffs.assign(size_t(m) + 1, 0.0);
    q.coeffs[0] = 1.0;

    if (m > 0) {
        Matrix A(m, m);
        std::vector<double> rhs(size_t(m), 0.0);
        for (int k = 1; k <= m; ++k) {
            for (int j = 1; j <= m; ++j) A.at(k - 1, j - 1) = t.c(n + k - j);
            rhs[size_t(k) - 1] = -t.c(n + k);
        }
        SolveResult sol = solve(A, rhs);
        for (int j = 1; j <= m; ++j) q.coeffs[size_t(j)] = sol.solution[size_t(j) - 1];
    }

    RationalApproximant r;
    r.numerator = pade_numerator(t, q, n);
    r.denominator = q;
    r.parity = Parity::plain;
    r.domain = Domain{-1.0, 1.0};
    return r;
}

Polynomial pade_numerator(const TaylorSeries& t, const Polynomial& denominator, int n) {
    Polynomial p;
    p.coeffs.assign(size_t(n) + 1, 0.0);
    for (int i = 0; i <= n; ++i) {
        double s = 0.0;
        for (size_t k = 0; k < denominator.coeffs.size(); ++k)
            s += denominator.coeffs[k] * t.c(i - long(k));
        p.coeffs[size_t(i)] = s;
    }
    return p;
}

TaylorSeries builtin_taylor(const std::string& name, int degree, double k) {
    if (degree < 0) throw ShapeError("builtin_taylor: negative degree");
    const long double scale = name.ends_with("-scaled")
                                  ? (long double)k * std::numbers::pi_v<long double>
                                  : 1.0L;
    std::vector<long double> t(size_t(degree) + 1, 0.0L);
    const std::string base = name.substr(0, name.find('-'));

    if (base == "exp") {
        long double term = 1.0L;
        for (int i = 0; i <= degree; ++i) {
            t[size_t(i)] = term;
            term = term * scale / (long double)(i + 1);
        }
    } else if (base == "sin" || base == "cos") {
        long double term = (base == "sin") ? scale : 1.0L;
        for (int i = (base == "sin") ? 1 : 0; i <= degree; i += 2) {
            t[size_t(i)] = term;
            term = -term * scale * scale / ((long double)(i + 1) * (long double)(i + 2));
        }
    } else if (base == "tan") {
        // y' = scale*(1 + y^2) term by term.
        for (int i = 0; i + 1 <= degree; ++i) {
            long double conv = (i == 0) ? 1.0L : 0.0L;
            for (int a = 0; a <= i; ++a) conv += t[size_t(a)] * t[size_t(i - a)];
            t[size_t(i) + 1] = scale * conv / (long double)(i + 1);
        }
    } else if (base == "atan") {
        long double spow = scale;
        for (int i = 1; i <= degree; i += 2) {
            t[size_t(i)] = ((i / 2) % 2 == 0 ? 1.0L : -1.0L) * spow / (long double)i;
            spow *= scale * scale;
        }
    } else {
        throw ShapeError("builtin_taylor: no series for \"" + name + "\"");
    }

    TaylorSeries out;
    out.coeffs.reserve(t.size());
    for (long double v : t) out.coeffs.push_back(double(v));
    return out;
}

int pade_residual_order(const TaylorSeries& t, const RationalApproximant& r) {
    // Taylor expansion of Q*f - P, term by term.
    const size_t N = t.coeffs.size();
    const Polynomial& p = r.numerator;
    const Polynomial& q = r.denominator;
    for (size_t i = 0; i < N; ++i) {
        double s = 0.0;
        for (size_t k = 0; k < q.coeffs.size(); ++k)
            s += q.coeffs[k] * t.c(long(i) - long(k));
        if (i < p.coeffs.size()) s -= p.coeffs[i];
        if (std::fabs(s) > 1e-10) return int(i);
    }
    return int(N);
}

}  // namespace ratapprox
