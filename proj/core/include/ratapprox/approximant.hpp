#pragma once

#include "ratapprox/cheb.hpp"

namespace ratapprox {

// Shape of the rational expression.
//   plain: P(t)/Q(t)
//   even:  P(u)/Q(u) with u = t^2   (stored polynomials are in t^2)
//   odd:   t * P(u)/Q(u)
// where t is the domain's image in [-1,1].
enum class Parity { plain, even, odd };

struct RationalApproximant {
    Polynomial numerator;
    Polynomial denominator;
    Parity parity = Parity::plain;
    Domain domain;

    // Numerator and denominator values at the mapped point (Horner),
    // including the odd-form factor t in `num`.
    struct Parts { double num; double den; };
    Parts parts_at_unit(double t) const {
        switch (parity) {
            case Parity::plain: return {numerator(t), denominator(t)};
            case Parity::even: {
                double u = t * t;
                return {numerator(u), denominator(u)};
            }
            case Parity::odd: {
                double u = t * t;
                return {t * numerator(u), denominator(u)};
            }
        }
        return {0.0, 1.0};
    }

    double at_unit(double t) const {
        Parts p = parts_at_unit(t);
        return p.num / p.den;
    }

    double operator()(double x) const { return at_unit(domain.to_unit(x)); }

    // All coefficients scaled so that the given coefficient equals 1.
    // Used for printing the second normalization form; evaluation is
    // unchanged (scale invariance).
    RationalApproximant renormalized_to_unit_coeff(bool leading_numerator) const;
};

}  // namespace ratapprox
