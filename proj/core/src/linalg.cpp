#include "ratapprox/linalg.hpp"

#include <cmath>
#include <limits>

#include "ratapprox/errors.hpp"

namespace ratapprox {

double matrix_norm_1(const Matrix& a) {
    double norm = 0.0;
    for (int j = 0; j < a.cols; ++j) {
        double s = 0.0;
        for (int i = 0; i < a.rows; ++i) s += std::fabs(a.at(i, j));
        if (s > norm) norm = s;
    }
    return norm;
}

namespace {

struct LU {
    Matrix lu;              // combined factors
    std::vector<int> perm;  // row permutation
    double pivot_growth;
};

LU factor(const Matrix& a) {
    if (a.rows != a.cols) throw ShapeError("solve needs a square matrix");
    const int n = a.rows;
    LU f{a, std::vector<int>(n), 0.0};
    for (int i = 0; i < n; ++i) f.perm[i] = i;

    double amax = 0.0;
    for (double v : a.entries) amax = std::max(amax, std::fabs(v));
    const double threshold =
        1e3 * std::numeric_limits<double>::epsilon() * matrix_norm_1(a);

    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::fabs(f.lu.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = std::fabs(f.lu.at(i, k));
            if (v > best) { best = v; p = i; }
        }
        if (best <= threshold)  // <=: a zero matrix has threshold 0
            throw SingularMatrixError("matrix numerically singular", k);
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(f.lu.at(k, j), f.lu.at(p, j));
            std::swap(f.perm[k], f.perm[p]);
        }
        const double piv = f.lu.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            double m = f.lu.at(i, k) / piv;
            f.lu.at(i, k) = m;
            for (int j = k + 1; j < n; ++j) f.lu.at(i, j) -= m * f.lu.at(k, j);
        }
    }
    double umax = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) umax = std::max(umax, std::fabs(f.lu.at(i, j)));
    f.pivot_growth = amax > 0.0 ? umax / amax : 0.0;
    return f;
}

std::vector<double> lu_solve(const LU& f, const std::vector<double>& h) {
    const int n = f.lu.rows;
    if (int(h.size()) != n) throw ShapeError("right-hand side length mismatch");
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = h[f.perm[i]];
    for (int i = 1; i < n; ++i) {
        double s = x[i];
        for (int j = 0; j < i; ++j) s -= f.lu.at(i, j) * x[j];
        x[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = x[i];
        for (int j = i + 1; j < n; ++j) s -= f.lu.at(i, j) * x[j];
        x[i] = s / f.lu.at(i, i);
    }
    return x;
}

}  // namespace

SolveResult solve(const Matrix& a, const std::vector<double>& h) {
    LU f = factor(a);
    SolveResult r;
    r.solution = lu_solve(f, h);
    r.pivot_growth = f.pivot_growth;
    return r;
}

double condition_number(const Matrix& a) {
    LU f = factor(a);
    const int n = a.rows;
    // ||A^-1||_1 = max over columns of the inverse
    double inv_norm = 0.0;
    std::vector<double> e(n, 0.0);
    for (int j = 0; j < n; ++j) {
        e[j] = 1.0;
        std::vector<double> col = lu_solve(f, e);
        e[j] = 0.0;
        double s = 0.0;
        for (double v : col) s += std::fabs(v);
        if (s > inv_norm) inv_norm = s;
    }
    return matrix_norm_1(a) * inv_norm;
}

}  // namespace ratapprox
