#pragma once

#include <string>
#include <vector>

#include "ratapprox/function.hpp"
#include "ratapprox/pade_chebyshev.hpp"

namespace ratapprox {

struct SampleTable {
    std::vector<double> x;  // strictly increasing
    std::vector<double> y;

    size_t size() const { return x.size(); }
    void validate() const;  // throws ShapeError on bad shape/ordering
};

enum class SplineKind { linear, cubic };

// Interpolating spline through the table (cubic: not-a-knot end conditions),
// wrapped as a TargetFunction on [x_front, x_back].
TargetFunction spline_fit(const SampleTable& t, SplineKind kind);

// SPLINE-PADE: spline through the data, then the linear Pade-Chebyshev
// construction on the spline over the data interval.
BuildOutcome fit_model(const SampleTable& t, int m, int n, SplineKind kind,
                       const BuildOptions& opts = {});

// Two-column whitespace-separated text ('#' comments skipped).
SampleTable read_sample_table(const std::string& path);

}  // namespace ratapprox
