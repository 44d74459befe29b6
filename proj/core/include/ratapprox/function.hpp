#pragma once

#include <functional>
#include <string>

#include "ratapprox/cheb.hpp"

namespace ratapprox {

enum class ParityHint { none, even, odd };

// A target for approximation: evaluator + domain + optional parity hint.
// Built-in catalog entries carry >= 15 significant digits (they wrap libm
// or long-double evaluation).
struct TargetFunction {
    std::string name;  // catalog name or a description
    Domain domain;
    ParityHint parity = ParityHint::none;
    std::function<double(double)> eval;

    double operator()(double x) const { return eval(x); }
};

// Weighting of the error measure: rho == 1 (absolute) or rho == f
// (relative).
enum class WeightKind { absolute, relative };

struct Weight {
    WeightKind kind = WeightKind::absolute;
};

// Catalog lookup.  Names: sqrt, exp, exp10, ln, lg, sin, cos, tan, atan,
// asin, sin-scaled, cos-scaled, tan-scaled.  The -scaled entries evaluate
// f(k*pi*x) with the parameter k (default 0.25); plain trig names are the
// unscaled libm functions.  Domain defaults: sqrt -> [1/2, 1], everything
// else [-1, 1]; callers may override.
TargetFunction builtin_function(const std::string& name, double k = 0.25);

// Target from Taylor coefficients about 0 (evaluated by Horner).
TargetFunction function_from_taylor(std::vector<double> coeffs, Domain d);

// Target from plain-convention Chebyshev coefficients on d mapped to [-1,1].
TargetFunction function_from_cheb(std::vector<double> coeffs, Domain d);

}  // namespace ratapprox
