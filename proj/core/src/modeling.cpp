#include "ratapprox/modeling.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

#include "ratapprox/errors.hpp"
#include "ratapprox/linalg.hpp"

namespace ratapprox {

void SampleTable::validate() const {
    if (x.size() != y.size())
        throw ShapeError("sample table: x and y lengths differ");
    if (x.size() < 2)
        throw ShapeError("sample table: need at least two points");
    for (size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
            throw ShapeError("sample table: non-finite entry");
        if (i > 0 && !(x[i] > x[i - 1]))
            throw ShapeError("sample table: x must be strictly increasing");
    }
}

namespace {

// Piecewise polynomials per knot interval; end segments extend beyond the
// data so quadrature nodes that land a hair outside still evaluate.
struct Spline {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> moments;  // cubic: S'' at the knots; empty for linear

    double operator()(double t) const {
        size_t n = x.size();
        size_t i = size_t(std::upper_bound(x.begin(), x.end(), t) - x.begin());
        if (i == 0) i = 1;
        if (i >= n) i = n - 1;
        const double h = x[i] - x[i - 1];
        if (moments.empty()) {
            double slope = (y[i] - y[i - 1]) / h;
            return y[i - 1] + slope * (t - x[i - 1]);
        }
        const double a = (x[i] - t) / h;
        const double b = (t - x[i - 1]) / h;
        return a * y[i - 1] + b * y[i] +
               ((a * a * a - a) * moments[i - 1] + (b * b * b - b) * moments[i]) *
                   (h * h) / 6.0;
    }
};

std::vector<double> cubic_moments(const std::vector<double>& x, const std::vector<double>& y) {
    const int n = int(x.size());
    if (n < 4)
        throw ShapeError("cubic spline needs at least four knots");
    std::vector<double> h(size_t(n) - 1);
    for (int i = 0; i + 1 < n; ++i) h[size_t(i)] = x[size_t(i) + 1] - x[size_t(i)];

    // Moment equations with not-a-knot ends (third derivative continuous
    // across the first and last interior knots).
    Matrix A(n, n);
    std::vector<double> rhs(size_t(n), 0.0);
    A.at(0, 0) = h[1];
    A.at(0, 1) = -(h[0] + h[1]);
    A.at(0, 2) = h[0];
    for (int i = 1; i + 1 < n; ++i) {
        A.at(i, i - 1) = h[size_t(i) - 1] / 6.0;
        A.at(i, i) = (h[size_t(i) - 1] + h[size_t(i)]) / 3.0;
        A.at(i, i + 1) = h[size_t(i)] / 6.0;
        rhs[size_t(i)] = (y[size_t(i) + 1] - y[size_t(i)]) / h[size_t(i)] -
                         (y[size_t(i)] - y[size_t(i) - 1]) / h[size_t(i) - 1];
    }
    A.at(n - 1, n - 3) = h[size_t(n) - 2];
    A.at(n - 1, n - 2) = -(h[size_t(n) - 3] + h[size_t(n) - 2]);
    A.at(n - 1, n - 1) = h[size_t(n) - 3];

    try {
        return solve(A, rhs).solution;
    } catch (const SingularMatrixError& e) {
        throw ConstructionError(std::string("spline moment system: ") + e.what());
    }
}

}  // namespace

TargetFunction spline_fit(const SampleTable& t, SplineKind kind) {
    t.validate();
    auto sp = std::make_shared<Spline>();
    sp->x = t.x;
    sp->y = t.y;
    if (kind == SplineKind::cubic) sp->moments = cubic_moments(t.x, t.y);

    TargetFunction f;
    f.name = (kind == SplineKind::cubic) ? "spline-cubic" : "spline-linear";
    f.domain = Domain{t.x.front(), t.x.back()};
    f.parity = ParityHint::none;
    f.eval = [sp](double v) { return (*sp)(v); };
    return f;
}

BuildOutcome fit_model(const SampleTable& t, int m, int n, SplineKind kind,
                       const BuildOptions& opts) {
    TargetFunction spline = spline_fit(t, kind);
    return build_linear_integral(spline, m, n, opts);
}

SampleTable read_sample_table(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ShapeError("cannot open sample table '" + path + "'");
    SampleTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        double xv, yv;
        if (!(row >> xv)) continue;  // blank / comment-only line
        std::string extra;
        if (!(row >> yv) || (row >> extra))
            throw ShapeError("sample table '" + path + "' line " + std::to_string(lineno) +
                             ": expected exactly two columns");
        t.x.push_back(xv);
        t.y.push_back(yv);
    }
    t.validate();
    return t;
}

}  // namespace ratapprox
