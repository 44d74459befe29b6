#pragma once

#include <functional>
#include <vector>

namespace ratapprox {

// Dense polynomial in the monomial basis: coeffs[i] multiplies x^i.
// An empty vector is the zero polynomial.
struct Polynomial {
    std::vector<double> coeffs;

    Polynomial() = default;
    explicit Polynomial(std::vector<double> c) : coeffs(std::move(c)) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double operator()(double x) const;  // Horner
};

// Finite Chebyshev sum  sum_{i=0..N} coeffs[i] * T_i(x)  (plain convention:
// the first coefficient is NOT halved).  The primed convention of the
// cross/nonlinear constructors exists only at their adapter boundary.
struct ChebSeries {
    std::vector<double> coeffs;

    ChebSeries() = default;
    explicit ChebSeries(std::vector<double> c) : coeffs(std::move(c)) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double operator()(double x) const;  // Clenshaw
};

// Interval [a, b] with the affine map to/from the reference segment [-1, 1].
struct Domain {
    double a = -1.0;
    double b = 1.0;

    Domain() = default;
    Domain(double lo, double hi);

    double to_unit(double x) const { return (2.0 * x - a - b) / (b - a); }
    double from_unit(double t) const { return ((b - a) * t + a + b) / 2.0; }
    double half_width() const { return (b - a) / 2.0; }
};

// Largest degree the basis conversions accept.
inline constexpr int kChebDegreeCap = 64;

// T_n(x) by the three-term recurrence.
double cheb_eval(int n, double x);

// Node i of the s-point Gauss-Chebyshev rule: cos((2i-1)pi/(2s)), i = 1..s.
std::vector<double> gauss_cheb_nodes(int s);

// (pi/s) * sum phi(node_i); exact for polynomials of degree <= 2s-1.
double gauss_cheb_quadrature(const std::function<double(double)>& phi, int s);

ChebSeries monomial_to_cheb(const Polynomial& p);
Polynomial cheb_to_monomial(const ChebSeries& s);

// Chebyshev economization: drop the top Chebyshev terms down to target_degree.
Polynomial economize(const Polynomial& p, int target_degree);

// c_k = (1/pi or 2/pi) * integral f T_k w, k = 0..k_max, by the s-point rule.
ChebSeries fourier_cheb_coeffs(const std::function<double(double)>& f, int k_max, int s);

double cheb_series_eval(const ChebSeries& s, double x);

// Product series via T_i T_j = (T_{i+j} + T_{|i-j|}) / 2.
ChebSeries cheb_multiply(const ChebSeries& s1, const ChebSeries& s2);

// ---- small polynomial utilities shared by the construction modules ----

double horner(const std::vector<double>& coeffs, double x);

// Coefficient product (convolution).
std::vector<double> poly_multiply(const std::vector<double>& p,
                                  const std::vector<double>& q);

// p(alpha*w + beta) re-expanded in w; exact affine change of variable.
Polynomial poly_compose_affine(const Polynomial& p, double alpha, double beta);

}  // namespace ratapprox
