#include "ratapprox/cheb.hpp"

#include <cmath>
#include <numbers>

#include "ratapprox/errors.hpp"

namespace ratapprox {

double horner(const std::vector<double>& coeffs, double x) {
    double r = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

std::vector<double> poly_multiply(const std::vector<double>& p,
                                  const std::vector<double>& q) {
    if (p.empty() || q.empty()) return {};
    std::vector<double> out(p.size() + q.size() - 1, 0.0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        for (size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    }
    return out;
}

double Polynomial::operator()(double x) const { return horner(coeffs, x); }

double ChebSeries::operator()(double x) const { return cheb_series_eval(*this, x); }

Domain::Domain(double lo, double hi) : a(lo), b(hi) {
    if (!(a < b)) throw ShapeError("Domain requires a < b");
}

double cheb_eval(int n, double x) {
    if (n == 0) return 1.0;
    if (n == 1) return x;
    double tm2 = 1.0, tm1 = x;
    for (int k = 2; k <= n; ++k) {
        double t = 2.0 * x * tm1 - tm2;
        tm2 = tm1;
        tm1 = t;
    }
    return tm1;
}

std::vector<double> gauss_cheb_nodes(int s) {
    if (s < 1) throw ShapeError("quadrature needs s >= 1");
    std::vector<double> x(s);
    for (int i = 1; i <= s; ++i)
        x[i - 1] = std::cos((2.0 * i - 1.0) * std::numbers::pi / (2.0 * s));
    return x;
}

double gauss_cheb_quadrature(const std::function<double(double)>& phi, int s) {
    const auto nodes = gauss_cheb_nodes(s);
    double sum = 0.0;
    for (double x : nodes) {
        double v = phi(x);
        if (!std::isfinite(v))
            throw EvaluationError("integrand non-finite at a quadrature node");
        sum += v;
    }
    return std::numbers::pi / s * sum;
}

namespace {

// Chebyshev expansion of x^m: x^m = 2^{1-m} * sum'' C(m,k) T_{m-2k},
// binomials built multiplicatively to stay in floating point.
void add_power_expansion(std::vector<double>& out, double a, int m) {
    if (a == 0.0) return;
    if (m == 0) {
        out[0] += a;
        return;
    }
    double scale = std::ldexp(a, 1 - m);  // a * 2^{1-m}
    double binom = 1.0;
    for (int k = 0; 2 * k <= m; ++k) {
        double c = scale * binom;
        if (2 * k == m) c /= 2.0;
        out[m - 2 * k] += c;
        binom *= double(m - k) / double(k + 1);
    }
}

}  // namespace

ChebSeries monomial_to_cheb(const Polynomial& p) {
    int deg = p.degree();
    if (deg > kChebDegreeCap) throw ShapeError("basis conversion degree over cap");
    if (deg < 0) return ChebSeries{{0.0}};
    std::vector<double> out(deg + 1, 0.0);
    for (int m = 0; m <= deg; ++m) add_power_expansion(out, p.coeffs[m], m);
    return ChebSeries{std::move(out)};
}

Polynomial cheb_to_monomial(const ChebSeries& s) {
    int deg = s.degree();
    if (deg > kChebDegreeCap) throw ShapeError("basis conversion degree over cap");
    if (deg < 0) return Polynomial{{0.0}};
    std::vector<double> out(deg + 1, 0.0);
    // accumulate coeffs[k] * T_k expanded via the recurrence
    std::vector<double> tm2{1.0};      // T_0
    std::vector<double> tm1{0.0, 1.0}; // T_1
    out[0] += s.coeffs[0];
    if (deg >= 1) {
        for (size_t i = 0; i < tm1.size(); ++i) out[i] += s.coeffs[1] * tm1[i];
        for (int k = 2; k <= deg; ++k) {
            std::vector<double> t(k + 1, 0.0);
            for (size_t i = 0; i < tm1.size(); ++i) t[i + 1] = 2.0 * tm1[i];
            for (size_t i = 0; i < tm2.size(); ++i) t[i] -= tm2[i];
            for (size_t i = 0; i < t.size(); ++i) out[i] += s.coeffs[k] * t[i];
            tm2 = std::move(tm1);
            tm1 = std::move(t);
        }
    }
    return Polynomial{std::move(out)};
}

Polynomial economize(const Polynomial& p, int target_degree) {
    int deg = p.degree();
    while (deg > 0 && p.coeffs[deg] == 0.0) --deg;
    if (target_degree >= deg) return p;
    ChebSeries s = monomial_to_cheb(p);
    s.coeffs.resize(target_degree + 1);
    return cheb_to_monomial(s);
}

ChebSeries fourier_cheb_coeffs(const std::function<double(double)>& f, int k_max, int s) {
    const auto nodes = gauss_cheb_nodes(s);
    std::vector<double> fx(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) {
        fx[i] = f(nodes[i]);
        if (!std::isfinite(fx[i]))
            throw EvaluationError("target non-finite at a quadrature node");
    }
    std::vector<double> c(k_max + 1, 0.0);
    for (int k = 0; k <= k_max; ++k) {
        double sum = 0.0;
        for (size_t i = 0; i < nodes.size(); ++i) sum += fx[i] * cheb_eval(k, nodes[i]);
        c[k] = (k == 0 ? 1.0 : 2.0) * sum / s;
    }
    return ChebSeries{std::move(c)};
}

double cheb_series_eval(const ChebSeries& s, double x) {
    const auto& c = s.coeffs;
    if (c.empty()) return 0.0;
    double b1 = 0.0, b2 = 0.0;
    for (size_t k = c.size() - 1; k >= 1; --k) {
        double b = 2.0 * x * b1 - b2 + c[k];
        b2 = b1;
        b1 = b;
    }
    return x * b1 - b2 + c[0];
}

Polynomial poly_compose_affine(const Polynomial& p, double alpha, double beta) {
    // Accumulate p evaluated on the polynomial (alpha*w + beta) power by power.
    std::vector<double> out{0.0};
    std::vector<double> basis{1.0};  // (alpha*w + beta)^k
    const std::vector<double> lin{beta, alpha};
    for (size_t k = 0; k < p.coeffs.size(); ++k) {
        if (k > 0) basis = poly_multiply(basis, lin);
        if (p.coeffs[k] == 0.0) continue;
        if (out.size() < basis.size()) out.resize(basis.size(), 0.0);
        for (size_t i = 0; i < basis.size(); ++i) out[i] += p.coeffs[k] * basis[i];
    }
    return Polynomial{std::move(out)};
}

ChebSeries cheb_multiply(const ChebSeries& s1, const ChebSeries& s2) {
    if (s1.coeffs.empty() || s2.coeffs.empty()) return ChebSeries{{0.0}};
    std::vector<double> out(s1.coeffs.size() + s2.coeffs.size() - 1, 0.0);
    for (size_t i = 0; i < s1.coeffs.size(); ++i) {
        double ai = s1.coeffs[i];
        if (ai == 0.0) continue;
        for (size_t j = 0; j < s2.coeffs.size(); ++j) {
            double t = 0.5 * ai * s2.coeffs[j];
            out[i + j] += t;
            out[i >= j ? i - j : j - i] += t;
        }
    }
    return ChebSeries{std::move(out)};
}

}  // namespace ratapprox
