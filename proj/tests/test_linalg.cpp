#include <cmath>
#include <vector>

#include "doctest.h"
#include "ratapprox/errors.hpp"
#include "ratapprox/linalg.hpp"

using namespace ratapprox;

TEST_CASE("solve recovers a known 3x3 solution") {
    Matrix a(3, 3);
    a.at(0, 0) = 2;  a.at(0, 1) = 1;  a.at(0, 2) = -1;
    a.at(1, 0) = -3; a.at(1, 1) = -1; a.at(1, 2) = 2;
    a.at(2, 0) = -2; a.at(2, 1) = 1;  a.at(2, 2) = 2;
    // solution of the classic example: x = 2, y = 3, z = -1
    SolveResult r = solve(a, {8, -11, -3});
    REQUIRE(r.solution.size() == 3);
    CHECK(r.solution[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.solution[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.solution[2] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(r.pivot_growth >= 1.0 - 1e-12);
    CHECK_FALSE(r.condition.has_value());
}

TEST_CASE("solve pivots rows when the leading entry is zero") {
    Matrix a(2, 2);
    a.at(0, 0) = 0; a.at(0, 1) = 1;
    a.at(1, 0) = 1; a.at(1, 1) = 0;
    SolveResult r = solve(a, {3.0, 7.0});
    CHECK(r.solution[0] == doctest::Approx(7.0));
    CHECK(r.solution[1] == doctest::Approx(3.0));
}

TEST_CASE("solve throws SingularMatrixError with the pivot index") {
    Matrix a(2, 2);
    a.at(0, 0) = 1; a.at(0, 1) = 2;
    a.at(1, 0) = 2; a.at(1, 1) = 4;
    try {
        solve(a, {1.0, 2.0});
        FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
        CHECK(e.pivot == 1);
    }
}

TEST_CASE("solve rejects shape mismatches") {
    Matrix a(2, 3);
    CHECK_THROWS_AS(solve(a, {1.0, 2.0}), ShapeError);
    Matrix b(2, 2);
    CHECK_THROWS_AS(solve(b, {1.0, 2.0, 3.0}), ShapeError);
}

TEST_CASE("matrix_norm_1 is the max column sum") {
    Matrix a(2, 2);
    a.at(0, 0) = 1;  a.at(0, 1) = -7;
    a.at(1, 0) = -2; a.at(1, 1) = 3;
    CHECK(matrix_norm_1(a) == doctest::Approx(10.0));
}

TEST_CASE("condition_number: identity, diagonal, Hilbert") {
    Matrix eye(4, 4);
    for (int i = 0; i < 4; ++i) eye.at(i, i) = 1.0;
    CHECK(condition_number(eye) == doctest::Approx(1.0).epsilon(1e-12));

    Matrix diag(3, 3);
    diag.at(0, 0) = 1.0; diag.at(1, 1) = 0.01; diag.at(2, 2) = 1000.0;
    CHECK(condition_number(diag) == doctest::Approx(1e5).epsilon(1e-10));

    // 8x8 Hilbert: kappa_1 ~ 3.39e10
    Matrix h(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) h.at(i, j) = 1.0 / (i + j + 1.0);
    double kappa = condition_number(h);
    CHECK(kappa > 2e10);
    CHECK(kappa < 5e10);
}

TEST_CASE("pivot growth stays modest for a well-behaved system") {
    Matrix a(3, 3);
    a.at(0, 0) = 4; a.at(0, 1) = 1; a.at(0, 2) = 0;
    a.at(1, 0) = 1; a.at(1, 1) = 4; a.at(1, 2) = 1;
    a.at(2, 0) = 0; a.at(2, 1) = 1; a.at(2, 2) = 4;
    SolveResult r = solve(a, {1, 2, 3});
    CHECK(r.pivot_growth <= 2.0);
}
