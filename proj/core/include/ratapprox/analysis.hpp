#pragma once

#include <functional>
#include <vector>

#include "ratapprox/approximant.hpp"
#include "ratapprox/function.hpp"

namespace ratapprox {

// One located extremum of the weighted error curve: abscissa (in the
// function's own variable) and the signed weighted error there.
struct ErrorExtremum {
    double x;
    double value;
};

struct ApproxReport {
    double abs_error = 0.0;              // max |f - R| over the checkpoint grid
    double rel_error = 0.0;              // max |1 - R/f| where f != 0
    std::vector<double> rel_excluded;    // checkpoints skipped in rel_error (f == 0 there)
    std::vector<ErrorExtremum> extrema;  // one per sign segment of the weighted error
    bool alternation = false;
    double q = 0.0;          // min/max extremum magnitude over the alternating window
    double lower_bound = 0.0;  // q * (abs_error or rel_error per weight)
    WeightKind weight = WeightKind::absolute;
};

// Weighted error curve of r against f on a uniform grid of `checkpoints`
// interior points plus both endpoints.  Throws EvaluationError when the
// denominator vanishes at a checkpoint (message lists the pole locations).
ApproxReport error_report(const TargetFunction& f, const RationalApproximant& r,
                          Weight w = {}, int checkpoints = 2000);

struct AlternationQuality {
    bool alternation = false;
    double q = 0.0;
};

// Longest run of consecutive sign-alternating nonzero values; alternation is
// true when that run has at least `needed` entries (needed < 0 means the full
// sequence length), and q is min|v|/max|v| over the run.
AlternationQuality alternation_quality(const std::vector<double>& values, int needed = -1);

struct AccelerationResult {
    double poly_error = 0.0;      // partial Chebyshev sum through degree n+2m
    double rational_error = 0.0;  // cross-scheme approximant from the same coefficients
};

// Series-acceleration comparison: both approximations consume the same
// n+2m+1 Chebyshev coefficients of f (in the parity-reduced variable when f
// has a parity hint); errors measured over 2000 checkpoints.
AccelerationResult acceleration_compare(const TargetFunction& f, int m, int n);

// Shared extremum locator: signed curve e on [a, b], sampled on a grid of
// `grid` points; one candidate per slope-sign change, golden-section
// refined, then same-sign runs collapsed to their largest member.
std::vector<ErrorExtremum> locate_extrema(const std::function<double(double)>& e,
                                          double a, double b, int grid);

}  // namespace ratapprox
