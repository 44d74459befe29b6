#include <cmath>
#include <vector>

#include "doctest.h"
#include "ratapprox/errors.hpp"
#include "ratapprox/function.hpp"
#include "ratapprox/pade.hpp"

using namespace ratapprox;

TEST_CASE("builtin catalog: names, domains, parity hints, scale factor") {
    const char* names[] = {"sqrt", "exp",       "exp10",      "ln",        "lg",
                           "sin",  "cos",       "tan",        "atan",      "asin",
                           "sin-scaled", "cos-scaled", "tan-scaled"};
    for (const char* n : names) CHECK_NOTHROW(builtin_function(n));
    CHECK_THROWS_AS(builtin_function("sinh"), ShapeError);

    TargetFunction sq = builtin_function("sqrt");
    CHECK(sq.domain.a == doctest::Approx(0.5));
    CHECK(sq.domain.b == doctest::Approx(1.0));
    CHECK(sq(0.81) == doctest::Approx(0.9));

    CHECK(builtin_function("cos-scaled").parity == ParityHint::even);
    CHECK(builtin_function("sin-scaled").parity == ParityHint::odd);
    CHECK(builtin_function("tan-scaled").parity == ParityHint::odd);

    // f(k pi x) with k = 1/2 at x = 1/2 -> sin(pi/4)
    TargetFunction s2 = builtin_function("sin-scaled", 0.5);
    CHECK(s2(0.5) == doctest::Approx(std::sin(M_PI / 4)).epsilon(1e-15));
    TargetFunction s4 = builtin_function("sin-scaled");
    CHECK(s4(1.0) == doctest::Approx(std::sin(M_PI / 4)).epsilon(1e-15));
}

TEST_CASE("function_from_taylor / function_from_cheb evaluate their data") {
    TargetFunction t = function_from_taylor({1.0, 0.0, -2.0}, Domain(-1, 1));
    CHECK(t(0.5) == doctest::Approx(1.0 - 0.5));
    TargetFunction c = function_from_cheb({0.0, 0.0, 1.0}, Domain(0, 2));
    // T_2 evaluated in the mapped variable u = x - 1
    CHECK(c(2.0) == doctest::Approx(1.0));
    CHECK(c(1.0) == doctest::Approx(-1.0));
}

TEST_CASE("builtin_taylor produces the classical series") {
    TaylorSeries e = builtin_taylor("exp", 6);
    double fact = 1.0;
    for (int i = 0; i <= 6; ++i) {
        if (i > 0) fact *= i;
        CHECK(e.c(i) == doctest::Approx(1.0 / fact).epsilon(1e-15));
    }
    CHECK(e.c(7) == 0.0);
    CHECK(e.c(-1) == 0.0);

    // tan with k*pi = 1: x + x^3/3 + 2 x^5/15 + 17 x^7/315
    TaylorSeries t = builtin_taylor("tan-scaled", 7, 1.0 / M_PI);
    CHECK(t.c(1) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(t.c(3) == doctest::Approx(1.0 / 3).epsilon(1e-13));
    CHECK(t.c(5) == doctest::Approx(2.0 / 15).epsilon(1e-13));
    CHECK(t.c(7) == doctest::Approx(17.0 / 315).epsilon(1e-13));
    CHECK(t.c(4) == doctest::Approx(0.0).epsilon(1e-15));

    TaylorSeries a = builtin_taylor("atan", 5);
    CHECK(a.c(1) == doctest::Approx(1.0));
    CHECK(a.c(3) == doctest::Approx(-1.0 / 3));
    CHECK(a.c(5) == doctest::Approx(1.0 / 5));

    TaylorSeries s = builtin_taylor("sin-scaled", 3, 0.5);
    CHECK(s.c(1) == doctest::Approx(M_PI / 2).epsilon(1e-15));
    CHECK(s.c(3) == doctest::Approx(-std::pow(M_PI / 2, 3) / 6).epsilon(1e-14));

    CHECK_THROWS_AS(builtin_taylor("sqrt", 4), ShapeError);
    CHECK_THROWS_AS(builtin_taylor("exp", -1), ShapeError);
}

TEST_CASE("classical Pade of exp(2,2) has the analytic coefficients") {
    RationalApproximant r = pade_from_taylor(builtin_taylor("exp", 4), 2, 2);
    REQUIRE(r.numerator.degree() == 2);
    REQUIRE(r.denominator.degree() == 2);
    CHECK(r.numerator.coeffs[0] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r.numerator.coeffs[1] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(r.numerator.coeffs[2] == doctest::Approx(1.0 / 12).epsilon(1e-12));
    CHECK(r.denominator.coeffs[0] == doctest::Approx(1.0));
    CHECK(r.denominator.coeffs[1] == doctest::Approx(-0.5).epsilon(1e-13));
    CHECK(r.denominator.coeffs[2] == doctest::Approx(1.0 / 12).epsilon(1e-12));
    // R(1) = 19/7
    CHECK(r(1.0) == doctest::Approx(19.0 / 7).epsilon(1e-12));
    CHECK(std::fabs(std::exp(1.0) - r(1.0)) == doctest::Approx(4.0e-3).epsilon(0.15));
}

TEST_CASE("degenerate Pade blocks are reported as singular") {
    // cos has no [1/1] Pade approximant (the denominator system is 0 * b1 = c2)
    CHECK_THROWS_AS(pade_from_taylor(builtin_taylor("cos", 2, 1.0 / M_PI), 1, 1),
                    SingularMatrixError);
}

TEST_CASE("pade_numerator reproduces the coupled numerator") {
    TaylorSeries t = builtin_taylor("exp", 6);
    RationalApproximant r = pade_from_taylor(t, 3, 3);
    Polynomial p = pade_numerator(t, r.denominator, 3);
    REQUIRE(p.coeffs.size() == r.numerator.coeffs.size());
    for (size_t i = 0; i < p.coeffs.size(); ++i)
        CHECK(p.coeffs[i] == doctest::Approx(r.numerator.coeffs[i]).epsilon(1e-14));
}

TEST_CASE("pade_residual_order flags the defining order") {
    TaylorSeries t = builtin_taylor("exp", 8);
    RationalApproximant r = pade_from_taylor(t, 2, 2);
    CHECK(pade_residual_order(t, r) == 5);  // m + n + 1

    // an exactly rational series: f = (1 + x) / (1 + 2x), c_i = 1, -1, 2, -4, 8...
    TaylorSeries rat{{1.0, -1.0, 2.0, -4.0, 8.0, -16.0, 32.0, -64.0}};
    RationalApproximant rr = pade_from_taylor(rat, 1, 1);
    CHECK(rr.numerator.coeffs[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rr.denominator.coeffs[1] == doctest::Approx(2.0).epsilon(1e-12));
    // the residual never sticks out: order == number of supplied coefficients
    CHECK(pade_residual_order(rat, rr) == int(rat.coeffs.size()));
}

TEST_CASE("pade_from_taylor validates its inputs") {
    CHECK_THROWS_AS(pade_from_taylor(builtin_taylor("exp", 2), 2, 2), ShapeError);
    CHECK_THROWS_AS(pade_from_taylor(builtin_taylor("exp", 4), -1, 2), ShapeError);
}
