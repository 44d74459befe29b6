#pragma once

#include <string>
#include <vector>

#include "ratapprox/approximant.hpp"

namespace ratapprox {

// Taylor coefficients about 0: f(x) = sum c_i x^i.
struct TaylorSeries {
    std::vector<double> coeffs;

    TaylorSeries() = default;
    explicit TaylorSeries(std::vector<double> c) : coeffs(std::move(c)) {}

    // c_l with the convention c_l = 0 for l < 0 (and beyond the stored tail).
    double c(long l) const {
        if (l < 0 || size_t(l) >= coeffs.size()) return 0.0;
        return coeffs[size_t(l)];
    }
};

// Classical [n/m] Pade approximant: denominator degree m, numerator degree n,
// b_0 = 1, Q*f - P = O(x^{m+n+1}).  The denominator solves the m x m system
// sum_{j=1..m} c_{n+k-j} b_j = -c_{n+k},  k = 1..m; the numerator is the
// convolution a_i = sum_k b_k c_{i-k}.
RationalApproximant pade_from_taylor(const TaylorSeries& t, int m, int n);

// Numerator-from-denominator convolution on its own (the decoupled-numerator
// error experiments need it against clean data).
Polynomial pade_numerator(const TaylorSeries& t, const Polynomial& denominator, int n);

// Index of the first Taylor coefficient of Q*f - P with |coeff| > 1e-10;
// returns the number of supplied coefficients when none exceeds it.
int pade_residual_order(const TaylorSeries& t, const RationalApproximant& r);

// Coefficients through x^degree for the catalog entries that admit them
// (exp, sin, cos, tan, atan and their *-scaled variants with factor k*pi).
// Accumulated in long double; tan comes from the y' = c(1+y^2) recurrence.
TaylorSeries builtin_taylor(const std::string& name, int degree, double k = 0.25);

}  // namespace ratapprox
