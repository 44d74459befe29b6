#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "ratapprox/cheb.hpp"
#include "ratapprox/errors.hpp"

using namespace ratapprox;

namespace {

// integral of x^(2j) * w(x) over [-1,1]: pi * (2j-1)!! / (2j)!!
double even_moment(int j) {
    double v = M_PI;
    for (int i = 1; i <= j; ++i) v *= (2.0 * i - 1.0) / (2.0 * i);
    return v;
}

}  // namespace

TEST_CASE("cheb_eval matches explicit low-degree polynomials") {
    for (double x : {-1.0, -0.7, -0.2, 0.0, 0.3, 0.9, 1.0}) {
        CHECK(cheb_eval(0, x) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(cheb_eval(1, x) == doctest::Approx(x).epsilon(1e-15));
        CHECK(cheb_eval(2, x) == doctest::Approx(2 * x * x - 1).epsilon(1e-14));
        CHECK(cheb_eval(3, x) == doctest::Approx(4 * x * x * x - 3 * x).epsilon(1e-14));
        CHECK(cheb_eval(5, x) ==
              doctest::Approx(16 * std::pow(x, 5) - 20 * std::pow(x, 3) + 5 * x).epsilon(1e-13));
    }
}

TEST_CASE("cheb_eval satisfies T_n(cos t) = cos(n t)") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, M_PI);
    for (int trial = 0; trial < 50; ++trial) {
        double t = u(rng);
        int n = trial % 17;
        CHECK(std::fabs(cheb_eval(n, std::cos(t)) - std::cos(n * t)) < 1e-12);
    }
}

TEST_CASE("gauss_cheb_nodes are the Chebyshev roots") {
    for (int s : {1, 2, 5, 16, 128}) {
        std::vector<double> nodes = gauss_cheb_nodes(s);
        REQUIRE(int(nodes.size()) == s);
        for (double x : nodes) {
            CHECK(std::fabs(x) < 1.0);
            CHECK(std::fabs(cheb_eval(s, x)) < 1e-11);
        }
        for (size_t i = 1; i < nodes.size(); ++i) CHECK(nodes[i - 1] != nodes[i]);
    }
}

TEST_CASE("gauss_cheb_quadrature is exact through degree 2s-1 and not beyond") {
    for (int s : {2, 4, 8}) {
        for (int d = 0; d <= 2 * s - 1; ++d) {
            double got = gauss_cheb_quadrature([d](double x) { return std::pow(x, d); }, s);
            double want = (d % 2 == 1) ? 0.0 : even_moment(d / 2);
            CHECK(std::fabs(got - want) < 1e-13);
        }
        // degree 2s misses by a visible margin
        double got = gauss_cheb_quadrature([s](double x) { return std::pow(x, 2 * s); }, s);
        CHECK(std::fabs(got - even_moment(s)) > 1e-4);
    }
}

TEST_CASE("basis conversions: exact identities and random round-trips") {
    // x^3 = (3 T_1 + T_3) / 4
    ChebSeries c3 = monomial_to_cheb(Polynomial{{0, 0, 0, 1}});
    REQUIRE(c3.degree() == 3);
    CHECK(c3.coeffs[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(c3.coeffs[1] == doctest::Approx(0.75));
    CHECK(c3.coeffs[2] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(c3.coeffs[3] == doctest::Approx(0.25));

    // x^4 = (3 T_0 + 4 T_2 + T_4) / 8
    ChebSeries c4 = monomial_to_cheb(Polynomial{{0, 0, 0, 0, 1}});
    CHECK(c4.coeffs[0] == doctest::Approx(3.0 / 8));
    CHECK(c4.coeffs[2] == doctest::Approx(0.5));
    CHECK(c4.coeffs[4] == doctest::Approx(1.0 / 8));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int deg : {1, 4, 9, 12}) {
        std::vector<double> coeffs(size_t(deg) + 1);
        for (double& c : coeffs) c = u(rng);
        Polynomial p{coeffs};
        Polynomial back = cheb_to_monomial(monomial_to_cheb(p));
        REQUIRE(back.coeffs.size() == p.coeffs.size());
        for (size_t i = 0; i < coeffs.size(); ++i)
            CHECK(std::fabs(back.coeffs[i] - p.coeffs[i]) < 1e-10);
    }
}

TEST_CASE("basis conversions reject degrees beyond the cap") {
    std::vector<double> coeffs(size_t(kChebDegreeCap) + 2, 1.0);
    CHECK_THROWS_AS(monomial_to_cheb(Polynomial{coeffs}), ShapeError);
    CHECK_THROWS_AS(cheb_to_monomial(ChebSeries{coeffs}), ShapeError);
}

TEST_CASE("economize x^n drops exactly one Chebyshev octave") {
    for (int n : {4, 6, 8}) {
        std::vector<double> mono(size_t(n) + 1, 0.0);
        mono.back() = 1.0;
        Polynomial econ = economize(Polynomial{mono}, n - 1);
        REQUIRE(econ.degree() <= n - 1);
        double worst = 0.0;
        for (int i = 0; i <= 2000; ++i) {
            double x = -1.0 + 2.0 * i / 2000.0;
            worst = std::max(worst, std::fabs(std::pow(x, n) - econ(x)));
        }
        // the removed term is T_n / 2^(n-1), whose sup norm is 2^(1-n)
        CHECK(std::fabs(worst - std::ldexp(1.0, 1 - n)) < 1e-12);
    }
}

TEST_CASE("fourier_cheb_coeffs recovers basis vectors and exp's known series") {
    ChebSeries got = fourier_cheb_coeffs([](double x) { return cheb_eval(3, x); }, 6, 64);
    for (int i = 0; i <= 6; ++i)
        CHECK(std::fabs(got.coeffs[size_t(i)] - (i == 3 ? 1.0 : 0.0)) < 1e-14);

    // modified-Bessel values: c_0 = I_0(1), c_k = 2 I_k(1)
    ChebSeries ce = fourier_cheb_coeffs([](double x) { return std::exp(x); }, 2, 64);
    CHECK(ce.coeffs[0] == doctest::Approx(1.2660658777520084).epsilon(1e-13));
    CHECK(ce.coeffs[1] == doctest::Approx(1.1303182079849703).epsilon(1e-13));
    CHECK(ce.coeffs[2] == doctest::Approx(0.2714953395340766).epsilon(1e-13));
}

TEST_CASE("cheb_multiply agrees with the product linearization and pointwise") {
    // T_2 * T_3 = (T_5 + T_1) / 2
    ChebSeries t2{{0, 0, 1}};
    ChebSeries t3{{0, 0, 0, 1}};
    ChebSeries prod = cheb_multiply(t2, t3);
    REQUIRE(prod.degree() == 5);
    CHECK(prod.coeffs[1] == doctest::Approx(0.5));
    CHECK(prod.coeffs[5] == doctest::Approx(0.5));
    CHECK(std::fabs(prod.coeffs[0]) + std::fabs(prod.coeffs[2]) + std::fabs(prod.coeffs[3]) +
              std::fabs(prod.coeffs[4]) <
          1e-15);

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ChebSeries a{{u(rng), u(rng), u(rng), u(rng), u(rng)}};
    ChebSeries b{{u(rng), u(rng), u(rng)}};
    ChebSeries ab = cheb_multiply(a, b);
    for (int i = 0; i <= 40; ++i) {
        double x = -1.0 + 2.0 * i / 40.0;
        CHECK(std::fabs(ab(x) - a(x) * b(x)) < 1e-13);
    }
}

TEST_CASE("polynomial helpers") {
    CHECK(horner({}, 0.3) == 0.0);
    CHECK(horner({2.0}, 100.0) == 2.0);
    CHECK(horner({1.0, -2.0, 3.0}, 0.5) == doctest::Approx(1.0 - 1.0 + 0.75));

    std::vector<double> prod = poly_multiply({1.0, 1.0}, {1.0, -1.0});  // (1+x)(1-x)
    REQUIRE(prod.size() == 3);
    CHECK(prod[0] == doctest::Approx(1.0));
    CHECK(prod[1] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(prod[2] == doctest::Approx(-1.0));

    // p(alpha x + beta) with p = x^2
    Polynomial composed = poly_compose_affine(Polynomial{{0, 0, 1}}, 2.0, -1.0);
    for (double x : {-1.0, 0.0, 0.4, 1.0})
        CHECK(composed(x) == doctest::Approx((2 * x - 1) * (2 * x - 1)).epsilon(1e-14));
}

TEST_CASE("Domain maps and validates") {
    Domain d(0.5, 1.0);
    CHECK(d.to_unit(0.5) == doctest::Approx(-1.0));
    CHECK(d.to_unit(1.0) == doctest::Approx(1.0));
    CHECK(d.from_unit(d.to_unit(0.77)) == doctest::Approx(0.77).epsilon(1e-15));
    CHECK(d.half_width() == doctest::Approx(0.25));
    CHECK_THROWS_AS(Domain(1.0, 1.0), ShapeError);
    CHECK_THROWS_AS(Domain(2.0, -1.0), ShapeError);
}

TEST_CASE("ChebSeries Clenshaw evaluation matches the direct sum") {
    ChebSeries s{{0.3, -1.2, 0.5, 0.01, -0.2}};
    for (double x : {-1.0, -0.31, 0.0, 0.62, 1.0}) {
        double direct = 0.0;
        for (int i = 0; i <= s.degree(); ++i) direct += s.coeffs[size_t(i)] * cheb_eval(i, x);
        CHECK(s(x) == doctest::Approx(direct).epsilon(1e-14));
    }
}
