#pragma once

#include <utility>
#include <vector>

#include "ratapprox/approximant.hpp"
#include "ratapprox/linalg.hpp"
#include "ratapprox/pade.hpp"
#include "ratapprox/pade_chebyshev.hpp"

namespace ratapprox {

// Coefficient-difference object of two like-shaped constructions.  delta_num
// and delta_den live in the same (monomial) basis and variable as the source
// polynomials; excluded_zones are x-intervals where |delta_den| dips under
// 1e-3 of its grid maximum (the error approximant is not evaluated there).
struct ErrorApproximant {
    Polynomial delta_num;  // P2 - P1
    Polynomial delta_den;  // Q2 - Q1
    std::vector<std::pair<double, double>> excluded_zones;
    Parity parity = Parity::plain;
    Domain domain;
    bool degenerate = false;           // r2 == r1 coefficientwise
    std::vector<double> y1, y2;        // flattened [a..., b...] source vectors

    // The ratio delta_num/delta_den packaged for evaluation with the source
    // parity and domain.
    RationalApproximant as_approximant() const;
};

ErrorApproximant error_approximant(const RationalApproximant& r1,
                                   const RationalApproximant& r2,
                                   int checkpoints = 2000);

// Max relative deviation of the exact identity
//   (P+dP)/(Q+dQ) - P/Q = (dQ/Q~)(dP/dQ - P/Q)
// over a checkpoint grid, masked to |Q|, |Q~|, |dQ| > 1e-8; both sides are
// computed in compensated (double-double) arithmetic with the left side's
// numerator multiplied out in the Chebyshev basis.  Normalized by the global
// max of the masked left side.
double identity29_residual(const RationalApproximant& r1,
                           const RationalApproximant& r2,
                           int checkpoints = 2000);

// The rewritten form  P~/Q~ - P/Q = dP/Q~ - (dQ/Q~)(P/Q), also in
// double-double (the lhs taken directly; no dQ mask needed since nothing is
// divided by it), masked to |Q|, |Q~| > 1e-8, same normalization.
double identity49_residual(const RationalApproximant& r1,
                           const RationalApproximant& r2,
                           int checkpoints = 2000);

struct Perturbation {
    enum class Kind {
        quadrature_nodes,     // s1 vs s2 (pc_linear only)
        taylor_truncation,    // N1 vs N2 Taylor terms (pc_cross / pc_nonlinear)
        coefficient_noise,    // multiplicative noise on the assembled rows / input series
        normalization_switch  // opts.normalization vs norm2 (pc_linear only)
    };
    Kind kind = Kind::quadrature_nodes;
    int s1 = 64, s2 = 128;  // r1 = perturbed/coarse build, r2 = reference
    int N1 = 15, N2 = 20;
    double epsilon = 1e-6;
    unsigned seed = 2;
    Normalization norm2 = Normalization::bm;
};

struct ExperimentRecord {
    double coeff_rel_error = 0.0;          // max|y2-y1| / max|y1|
    double approximant_error_r1 = 0.0;     // Delta of the first build
    double approximant_error_r2 = 0.0;
    double error_approximant_error = 0.0;  // Delta of dP/dQ vs f outside zones
    double cond = 0.0;                     // of the second build
    double norm_row_residual = 0.0;        // |norm_row . (y2-y1)| (pc_linear routes)
    double residual_l1 = 0.0;              // ||H (y2-y1)||_1 (pc_linear only)
    double residual_bound = 0.0;           // ||H y1||_1 + ||H y2||_1
    bool degenerate = false;
};

// Builds a pair of approximants under the stated perturbation and measures
// the autocorrection signature.  method decides the construction route;
// quadrature/normalization perturbations require pc_linear, truncation
// requires a Taylor-backed builtin.
ExperimentRecord autocorrection_experiment(const TargetFunction& f, int m, int n,
                                           const BuildOptions& opts,
                                           const Perturbation& p,
                                           Method method = Method::pc_linear);

// ||H . (y2 - y1)||_1 for the homogeneous construction rows; throws if the
// triangle bound ||H y1||_1 + ||H y2||_1 is violated.
double residual_check(const ErrorApproximant& delta, const Matrix& system);

// First Taylor index k with |coeff_k(f dQ - dP)| / max(||dQ||, ||dP||) above
// 1e-3; the series is taken through degree m+n+1, and m+n+2 is returned when
// nothing sticks out.
int pade_error_approximant_order(const TaylorSeries& t, const RationalApproximant& r1,
                                 const RationalApproximant& r2);

// max over i = 0..n of |integral (f dQ - dP) T_i w| from series data alone
// (Chebyshev products); *scale_out receives (pi/2) * max|coef(f dQ)|, the
// same units as the return value, for relative judgement.
double cheb_error_approximant_residual(const ChebSeries& c, const ErrorApproximant& delta,
                                       double* scale_out = nullptr);

}  // namespace ratapprox
