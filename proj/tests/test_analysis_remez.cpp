#include <cmath>
#include <vector>

#include "doctest.h"
#include "ratapprox/analysis.hpp"
#include "ratapprox/errors.hpp"
#include "ratapprox/pade_chebyshev.hpp"
#include "ratapprox/remez.hpp"

using namespace ratapprox;

TEST_CASE("error_report measures a known curve and excludes f == 0 points") {
    TargetFunction f = builtin_function("sin-scaled");  // odd, f(0) = 0
    BuildOptions opts;
    opts.parity_form = Parity::odd;
    BuildOutcome out = build_linear_integral(f, 2, 2, opts);
    // 99 interior points + endpoints: the grid contains x = 0 exactly
    ApproxReport rep = error_report(f, out.approximant, {}, 99);
    CHECK(rep.abs_error > 1e-13);
    CHECK(rep.abs_error < 1e-11);
    REQUIRE(rep.rel_excluded.size() == 1);
    CHECK(rep.rel_excluded[0] == doctest::Approx(0.0));
    CHECK(rep.weight == WeightKind::absolute);
}

TEST_CASE("error_report throws EvaluationError at approximant poles") {
    TargetFunction f = builtin_function("exp");
    RationalApproximant r;
    r.numerator = Polynomial{{1.0}};
    r.denominator = Polynomial{{0.0, 1.0}};  // vanishes at t = 0
    r.domain = Domain(-1, 1);
    CHECK_THROWS_AS(error_report(f, r, {}, 99), EvaluationError);
    try {
        error_report(f, r, {}, 99);
    } catch (const EvaluationError& e) {
        CHECK(std::string(e.what()).find("vanishes") != std::string::npos);
    }
}

TEST_CASE("alternation_quality") {
    AlternationQuality none = alternation_quality({});
    CHECK_FALSE(none.alternation);

    AlternationQuality full = alternation_quality({1.0, -2.0, 3.0, -4.0});
    CHECK(full.alternation);
    CHECK(full.q == doctest::Approx(0.25));

    // a repeated sign breaks the run
    AlternationQuality broken = alternation_quality({1.0, 1.0, -1.0}, 3);
    CHECK_FALSE(broken.alternation);
    AlternationQuality partial = alternation_quality({1.0, 1.0, -1.0}, 2);
    CHECK(partial.alternation);
    CHECK(partial.q == doctest::Approx(1.0));
}

TEST_CASE("locate_extrema finds the peaks of sin(5x)") {
    auto e = [](double x) { return std::sin(5.0 * x); };
    std::vector<ErrorExtremum> ex = locate_extrema(e, -1.0, 1.0, 500);
    REQUIRE(ex.size() >= 4);
    bool found = false;
    for (const ErrorExtremum& p : ex)
        if (std::fabs(p.x - M_PI / 10) < 1e-6 && std::fabs(p.value - 1.0) < 1e-10) found = true;
    CHECK(found);
    for (size_t i = 1; i < ex.size(); ++i) CHECK(ex[i - 1].x < ex[i].x);
}

TEST_CASE("de la Vallee Poussin data: q and the lower bound") {
    TargetFunction f = builtin_function("sin-scaled", 0.5);
    BuildOptions opts;
    opts.parity_form = Parity::odd;
    BuildOutcome out = build_linear_integral(f, 2, 2, opts);

    Weight rel{WeightKind::relative};
    ApproxReport rrel = error_report(f, out.approximant, rel);
    CHECK(rrel.alternation);
    CHECK(rrel.q == doctest::Approx(0.71).epsilon(0.1));
    CHECK(rrel.lower_bound <= rrel.rel_error);
    CHECK(rrel.lower_bound > 0.0);

    ApproxReport rabs = error_report(f, out.approximant);
    CHECK(rabs.q == doctest::Approx(0.0625).epsilon(0.35));
    CHECK(rabs.lower_bound <= rabs.abs_error);

    // sqrt (2,2), relative weight
    TargetFunction sq = builtin_function("sqrt");
    BuildOutcome sout = build_linear_integral(sq, 2, 2, BuildOptions{});
    ApproxReport srep = error_report(sq, sout.approximant, rel);
    CHECK(srep.lower_bound <= srep.rel_error);
    CHECK(srep.q > 0.2);
}

TEST_CASE("remez: best approximation of x^4 by cubics") {
    TargetFunction f{"x4", Domain(-1, 1), ParityHint::none,
                     [](double x) { return std::pow(x, 4); }};
    RemezOutcome out = remez_solve(f, 0, 3);
    CHECK(std::fabs(out.delta - 0.125) < 1e-10);
    // x^4 - T_4/8 = x^2 - 1/8
    REQUIRE(out.approximant.numerator.degree() <= 3);
    std::vector<double> want = {-0.125, 0.0, 1.0, 0.0};
    for (size_t i = 0; i < out.approximant.numerator.coeffs.size(); ++i)
        CHECK(std::fabs(out.approximant.numerator.coeffs[i] - want[i]) < 1e-9);
    CHECK(out.approximant.denominator.degree() == 0);

    RemezOutcome line = remez_solve(f, 0, 1);
    // even function: the best linear fit is the constant 1/2, level 1/2
    CHECK(std::fabs(line.delta - 0.5) < 1e-9);
}

TEST_CASE("remez: degree-zero distance to exp is sinh(1)") {
    TargetFunction f = builtin_function("exp");
    RemezOutcome out = remez_solve(f, 0, 0);
    CHECK(out.delta == doctest::Approx(std::sinh(1.0)).epsilon(1e-9));
    CHECK(out.state.critical_points.size() == 2);
}

TEST_CASE("remez rational: exp (1,1) reaches the known minimax error") {
    TargetFunction f = builtin_function("exp");
    RemezOutcome out = remez_solve(f, 1, 1);
    CHECK(out.delta == doctest::Approx(2.1023e-2).epsilon(2e-3));
    ApproxReport rep = error_report(f, out.approximant);
    CHECK(rep.abs_error <= out.delta * 1.02);
    CHECK(rep.lower_bound <= rep.abs_error);
}

TEST_CASE("remez parity solve matches the construction-seeded run") {
    TargetFunction f = builtin_function("cos-scaled");
    Weight rel{WeightKind::relative};

    RemezOutcome fresh = remez_solve(f, 2, 3, rel, nullptr, Parity::even);
    CHECK(fresh.delta > 0.2e-13);
    CHECK(fresh.delta < 1.0e-13);
    CHECK(fresh.cycles <= 10);

    BuildOptions opts;
    opts.parity_form = Parity::even;
    BuildOutcome pc = build_linear_integral(f, 2, 3, opts);
    RemezState seed = seed_from_approximant(pc.approximant, f, rel);
    REQUIRE(seed.critical_points.size() == 7);  // m + n + 2
    RemezOutcome seeded = remez_solve(f, 2, 3, rel, &seed, Parity::even);
    CHECK(seeded.cycles <= 10);
    CHECK(std::fabs(seeded.delta - 0.46e-13) <= 0.5 * 0.46e-13);
    CHECK(std::fabs(seeded.delta - fresh.delta) <= 0.2 * fresh.delta);
}

TEST_CASE("seed_from_approximant rejects curves without enough alternation") {
    // the classical Pade error of exp grows one-sidedly away from 0, so its
    // curve cannot alternate m+n+2 = 6 times
    TargetFunction f = builtin_function("exp");
    RationalApproximant pade = pade_from_taylor(builtin_taylor("exp", 4), 2, 2);
    CHECK_THROWS_AS(seed_from_approximant(pade, f), InsufficientAlternationError);

    // a construction-quality approximant seeds itself fine
    BuildOutcome good = build_linear_integral(f, 2, 2, BuildOptions{});
    RemezState st = seed_from_approximant(good.approximant, f);
    CHECK(st.critical_points.size() == 6);
}

TEST_CASE("default_initial_state spans the domain with m+n+2 points") {
    RemezState st = default_initial_state(Domain(0.5, 1.0), 1, 2);
    REQUIRE(st.critical_points.size() == 5);
    CHECK(st.critical_points.front() == doctest::Approx(0.5));
    CHECK(st.critical_points.back() == doctest::Approx(1.0));
    for (size_t i = 1; i < st.critical_points.size(); ++i)
        CHECK(st.critical_points[i - 1] < st.critical_points[i]);
}

TEST_CASE("acceleration: rational reuse of the same coefficients wins decades") {
    TargetFunction f = builtin_function("tan-scaled");
    AccelerationResult res = acceleration_compare(f, 3, 3);
    CHECK(res.poly_error > 1e-12);
    CHECK(res.poly_error < 1e-10);
    CHECK(res.rational_error < res.poly_error / 1e3);
}
