#pragma once

#include <vector>

#include "ratapprox/analysis.hpp"
#include "ratapprox/approximant.hpp"
#include "ratapprox/function.hpp"
#include "ratapprox/linalg.hpp"
#include "ratapprox/pade.hpp"

namespace ratapprox {

// Which coefficient the appended normalization row pins to 1.
enum class Normalization { b0, bm, an };

enum class Method { pade, pc_linear, pc_cross, pc_nonlinear, remez };

struct BuildOptions {
    Normalization normalization = Normalization::b0;
    Parity parity_form = Parity::plain;
    int s = 128;            // Gauss-Chebyshev node count for the assembly quadrature
    int checkpoints = 2000; // error-curve grid
};

struct BuildOutcome {
    RationalApproximant approximant;
    double condition = 0.0;  // of the assembled square system, normalization row included
    ApproxReport report;
};

// Linear Pade-Chebyshev construction: orthogonality of fQ - P against
// T_0..T_{m+n} by quadrature, plus the normalization row, solved as a square
// system.  parity_form=odd builds the even approximant to f(x)/x and
// multiplies by x.  m is the denominator degree, n the numerator degree.
BuildOutcome build_linear_integral(const TargetFunction& f, int m, int n,
                                   const BuildOptions& opts = {});

// The assembled system itself (m+n+1 orthogonality rows; the normalization
// row appended unless with_normalization_row=false).  Column order:
// a_0..a_n, b_0..b_m.  Exposed for the residual experiments.
Matrix linear_integral_system(const TargetFunction& f, int m, int n,
                              const BuildOptions& opts = {},
                              bool with_normalization_row = true);

// Cross-multiplied scheme: denominator from the linear system in the
// coefficients of f's Chebyshev series (needs c_0..c_{n+2m}), numerator by
// series multiplication.  `form` and `dom` say how the caller's series is to
// be interpreted (even/odd: series in u = 2x^2 - 1); the returned approximant
// is converted to the monomial representation.  *condition (if given)
// receives the 1-norm condition of the denominator system.
RationalApproximant build_linear_cross(const ChebSeries& c, int m, int n,
                                       Parity form = Parity::plain,
                                       Domain dom = {},
                                       double* condition = nullptr);

// Nonlinear (Clenshaw-Lord) scheme: gamma system from c_0..c_{n+m}, then
// denominator b_j = mu * sum gamma_i gamma_{i+j}, numerator as in the cross
// scheme.
RationalApproximant build_nonlinear(const ChebSeries& c, int m, int n,
                                    Parity form = Parity::plain,
                                    Domain dom = {},
                                    double* condition = nullptr);

// Truncate a Taylor series to degree N and economize to a Chebyshev sum of
// K+1 terms (plain convention, on [-1,1]).
ChebSeries taylor_to_cheb_truncated(const TaylorSeries& t, int N, int K);

// Same driver with the parity reduction applied first: even keeps t_{2k},
// odd keeps t_{2k+1} (series of f(x)/x), both composed into the u = 2x^2 - 1
// variable before the basis conversion.  plain falls back to the above.
ChebSeries taylor_to_cheb_form(const TaylorSeries& t, int N, int K, Parity form);

// Chebyshev coefficients c_0..c_{k_max} of f in the working variable of
// `form` (plain: t on [-1,1]; even/odd: u with the parity reduction),
// computed by the s-point quadrature.
ChebSeries cheb_coeffs_for_form(const TargetFunction& f, Parity form, int k_max, int s = 128);

}  // namespace ratapprox
