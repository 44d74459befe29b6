#include "ratapprox/function.hpp"

#include <cmath>
#include <numbers>

#include "ratapprox/errors.hpp"

namespace ratapprox {

TargetFunction builtin_function(const std::string& name, double k) {
    const double kpi = k * std::numbers::pi;
    if (name == "sqrt")
        return {name, Domain(0.5, 1.0), ParityHint::none,
                [](double x) { return std::sqrt(x); }};
    if (name == "exp")
        return {name, Domain(-1.0, 1.0), ParityHint::none,
                [](double x) { return std::exp(x); }};
    if (name == "exp10")
        return {name, Domain(-1.0, 1.0), ParityHint::none,
                [](double x) { return double(std::pow(10.0L, (long double)x)); }};
    if (name == "ln")
        return {name, Domain(0.5, 1.0), ParityHint::none,
                [](double x) { return std::log(x); }};
    if (name == "lg")
        return {name, Domain(0.5, 1.0), ParityHint::none,
                [](double x) { return std::log10(x); }};
    if (name == "sin")
        return {name, Domain(-1.0, 1.0), ParityHint::odd,
                [](double x) { return std::sin(x); }};
    if (name == "cos")
        return {name, Domain(-1.0, 1.0), ParityHint::even,
                [](double x) { return std::cos(x); }};
    if (name == "tan")
        return {name, Domain(-1.0, 1.0), ParityHint::odd,
                [](double x) { return std::tan(x); }};
    if (name == "atan")
        return {name, Domain(-1.0, 1.0), ParityHint::odd,
                [](double x) { return std::atan(x); }};
    if (name == "asin")
        return {name, Domain(-1.0, 1.0), ParityHint::odd,
                [](double x) { return std::asin(x); }};
    if (name == "sin-scaled")
        return {name, Domain(-1.0, 1.0), ParityHint::odd,
                [kpi](double x) { return std::sin(kpi * x); }};
    if (name == "cos-scaled")
        return {name, Domain(-1.0, 1.0), ParityHint::even,
                [kpi](double x) { return std::cos(kpi * x); }};
    if (name == "tan-scaled")
        return {name, Domain(-1.0, 1.0), ParityHint::odd,
                [kpi](double x) { return std::tan(kpi * x); }};
    throw ShapeError("unknown builtin function: " + name);
}

TargetFunction function_from_taylor(std::vector<double> coeffs, Domain d) {
    return {"taylor", d, ParityHint::none,
            [c = std::move(coeffs)](double x) { return horner(c, x); }};
}

TargetFunction function_from_cheb(std::vector<double> coeffs, Domain d) {
    return {"cheb", d, ParityHint::none,
            [c = ChebSeries{std::move(coeffs)}, d](double x) {
                return cheb_series_eval(c, d.to_unit(x));
            }};
}

}  // namespace ratapprox
