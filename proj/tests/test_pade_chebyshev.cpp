#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "ratapprox/errors.hpp"
#include "ratapprox/pade_chebyshev.hpp"

using namespace ratapprox;

namespace {

BuildOutcome build(const std::string& fn, double k, int m, int n, Parity form,
                   Normalization norm = Normalization::b0) {
    TargetFunction f = builtin_function(fn, k);
    BuildOptions opts;
    opts.parity_form = form;
    opts.normalization = norm;
    return build_linear_integral(f, m, n, opts);
}

double max_diff(const TargetFunction& f, const RationalApproximant& r1,
                const RationalApproximant& r2) {
    double md = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        double x = f.domain.a + (f.domain.b - f.domain.a) * i / 2000.0;
        md = std::max(md, std::fabs(r1(x) - r2(x)));
    }
    return md;
}

void check_band(double got, double lo, double hi) {
    CHECK(got >= lo);
    CHECK(got <= hi);
}

}  // namespace

TEST_CASE("linear integral construction: representative accuracy pins") {
    // values measured once on this implementation; bands allow ~50% drift
    struct Row {
        const char* fn;
        double k;
        int m, n;
        Parity form;
        double abs_err;
        double cond;
    };
    const Row rows[] = {
        {"sqrt", 0.25, 2, 2, Parity::plain, 8.021e-07, 4.052e+04},
        {"sqrt", 0.25, 3, 3, Parity::plain, 1.929e-09, 2.607e+07},
        {"cos-scaled", 0.25, 2, 2, Parity::even, 6.872e-11, 1.448e+06},
        {"cos-scaled", 0.25, 2, 3, Parity::even, 4.186e-14, 9.448e+08},
        {"sin-scaled", 0.25, 2, 2, Parity::odd, 3.239e-12, 1.277e+07},
        {"sin-scaled", 0.50, 3, 3, Parity::odd, 6.184e-14, 6.378e+09},
        {"tan-scaled", 0.25, 2, 2, Parity::odd, 2.487e-11, 4.638e+06},
        {"atan", 0.25, 4, 4, Parity::odd, 1.156e-12, 5.046e+10},
    };
    for (const Row& row : rows) {
        CAPTURE(row.fn);
        CAPTURE(row.m);
        CAPTURE(row.n);
        BuildOutcome out = build(row.fn, row.k, row.m, row.n, row.form);
        check_band(out.report.abs_error, row.abs_err / 1.5, row.abs_err * 1.5);
        check_band(out.condition, row.cond / 10.0, row.cond * 10.0);
    }
}

TEST_CASE("cos-scaled even (2,3): the ill-conditioned showcase row") {
    BuildOutcome out = build("cos-scaled", 0.25, 2, 3, Parity::even);
    check_band(out.report.rel_error, 0.2e-13, 1.6e-13);
    check_band(out.condition, 1e8, 1e10);
}

TEST_CASE("exp (3,3): nonlinear beats linear") {
    TargetFunction f = builtin_function("exp");
    BuildOutcome lin = build("exp", 0.25, 3, 3, Parity::plain);
    check_band(lin.report.abs_error, 0.2e-6, 0.5e-6);

    ChebSeries c = cheb_coeffs_for_form(f, Parity::plain, 6, 128);
    double cond = 0.0;
    RationalApproximant r = build_nonlinear(c, 3, 3, Parity::plain, f.domain, &cond);
    ApproxReport rep = error_report(f, r);
    check_band(rep.abs_error, 0.17e-6, 0.40e-6);
    CHECK(rep.abs_error < lin.report.abs_error);
    check_band(cond, 2e3, 2e5);
}

TEST_CASE("cross scheme coincides with the integral scheme") {
    {
        TargetFunction f = builtin_function("exp");
        BuildOutcome bi = build("exp", 0.25, 3, 3, Parity::plain);
        ChebSeries c = cheb_coeffs_for_form(f, Parity::plain, 9, 128);
        RationalApproximant rc = build_linear_cross(c, 3, 3, Parity::plain, f.domain);
        CHECK(max_diff(f, bi.approximant, rc) < 1e-12);
    }
    {
        TargetFunction f = builtin_function("tan-scaled");
        BuildOutcome bi = build("tan-scaled", 0.25, 3, 3, Parity::odd);
        ChebSeries c = cheb_coeffs_for_form(f, Parity::odd, 9, 128);
        RationalApproximant rc = build_linear_cross(c, 3, 3, Parity::odd, f.domain);
        CHECK(max_diff(f, bi.approximant, rc) < 1e-12);
    }
}

TEST_CASE("nonlinear scheme with m = 0 returns the partial Chebyshev sum") {
    TargetFunction f = builtin_function("exp");
    ChebSeries c = cheb_coeffs_for_form(f, Parity::plain, 6, 128);
    RationalApproximant r = build_nonlinear(c, 0, 6, Parity::plain, f.domain);
    for (int i = 0; i <= 200; ++i) {
        double x = -1.0 + 2.0 * i / 200.0;
        CHECK(std::fabs(r(x) - c(x)) < 1e-13);
    }
}

TEST_CASE("normalization choice does not change the function") {
    BuildOutcome b0 = build("cos-scaled", 0.25, 2, 2, Parity::even, Normalization::b0);
    BuildOutcome bm = build("cos-scaled", 0.25, 2, 2, Parity::even, Normalization::bm);
    BuildOutcome an = build("cos-scaled", 0.25, 2, 2, Parity::even, Normalization::an);
    TargetFunction f = builtin_function("cos-scaled");
    CHECK(max_diff(f, b0.approximant, bm.approximant) < 1e-8);
    CHECK(max_diff(f, b0.approximant, an.approximant) < 1e-8);
    // but the coefficient vectors differ by the overall scale
    CHECK(bm.approximant.denominator.coeffs.back() == doctest::Approx(1.0));
    CHECK(an.approximant.numerator.coeffs.back() == doctest::Approx(1.0));
}

TEST_CASE("truncated-series pipeline reproduces the published error ladder") {
    // tan(pi x / 4), odd form, m = n = 3, nonlinear scheme from N Taylor terms
    TargetFunction f = builtin_function("tan-scaled");
    struct Step { int N; double delta; double cond; };
    const Step steps[] = {
        {15, 1.296e-05, 5.769e+05}, {20, 8.105e-07, 7.177e+06},
        {25, 1.271e-08, 2.971e+08}, {35, 1.205e-11, 6.578e+09},
        {40, 7.461e-13, 6.376e+09}, {50, 6.661e-16, 6.361e+09},
    };
    double prev = 1.0;
    for (const Step& st : steps) {
        CAPTURE(st.N);
        TaylorSeries t = builtin_taylor("tan-scaled", st.N);
        ChebSeries c = taylor_to_cheb_form(t, st.N, 6, Parity::odd);
        double cond = 0.0;
        RationalApproximant r = build_nonlinear(c, 3, 3, Parity::odd, f.domain, &cond);
        ApproxReport rep = error_report(f, r);
        check_band(rep.abs_error, st.delta / 8.0, st.delta * 8.0);
        check_band(cond, st.cond / 10.0, st.cond * 10.0);
        CHECK(rep.abs_error < prev);
        prev = rep.abs_error;
    }
}

TEST_CASE("taylor_to_cheb_form keeps the requested length and parity reduction") {
    TaylorSeries t = builtin_taylor("tan-scaled", 15);
    ChebSeries c = taylor_to_cheb_form(t, 15, 6, Parity::odd);
    CHECK(c.degree() == 6);
    ChebSeries cp = taylor_to_cheb_truncated(builtin_taylor("exp", 10), 10, 5);
    CHECK(cp.degree() == 5);
    // economized truncation still approximates exp decently
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
        double x = -1.0 + 2.0 * i / 100.0;
        worst = std::max(worst, std::fabs(std::exp(x) - cp(x)));
    }
    CHECK(worst < 1e-3);
}

TEST_CASE("linear_integral_system shape and normalization row") {
    TargetFunction f = builtin_function("exp");
    BuildOptions opts;
    Matrix with = linear_integral_system(f, 2, 2, opts, true);
    CHECK(with.rows == 6);  // m+n+1 orthogonality rows + the normalization row
    CHECK(with.cols == 6);
    Matrix without = linear_integral_system(f, 2, 2, opts, false);
    CHECK(without.rows == 5);
    CHECK(without.cols == 6);
    // norm row pins b0 (column n+1) for the default normalization
    CHECK(with.at(5, 3) == doctest::Approx(1.0));
    for (int j = 0; j < 6; ++j)
        if (j != 3) CHECK(with.at(5, j) == 0.0);
}

TEST_CASE("construction rejects bad degrees and degenerate targets") {
    TargetFunction f = builtin_function("exp");
    BuildOptions opts;
    CHECK_THROWS_AS(build_linear_integral(f, -1, 2, opts), ShapeError);
    // approximating a constant with m = n = 1 is rank-deficient
    TargetFunction one = function_from_cheb({1.0}, Domain(-1, 1));
    CHECK_THROWS_AS(build_linear_integral(one, 1, 1, opts), Error);
    // cross scheme needs n + 2m + 1 coefficients
    ChebSeries tooShort{{1.0, 0.5}};
    CHECK_THROWS_AS(build_linear_cross(tooShort, 2, 2), ShapeError);
    CHECK_THROWS_AS(build_nonlinear(tooShort, 2, 2), ShapeError);
}
