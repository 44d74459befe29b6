#include "ratapprox/approximant.hpp"

#include <cmath>

#include "ratapprox/errors.hpp"

namespace ratapprox {

RationalApproximant RationalApproximant::renormalized_to_unit_coeff(
    bool leading_numerator) const {
    const Polynomial& pin = leading_numerator ? numerator : denominator;
    double pivot = 0.0;
    for (auto it = pin.coeffs.rbegin(); it != pin.coeffs.rend(); ++it)
        if (*it != 0.0) { pivot = *it; break; }
    if (pivot == 0.0)
        throw ConstructionError("cannot renormalize: leading coefficient is zero");
    RationalApproximant r = *this;
    for (double& c : r.numerator.coeffs) c /= pivot;
    for (double& c : r.denominator.coeffs) c /= pivot;
    return r;
}

}  // namespace ratapprox
