#pragma once

#include <optional>
#include <vector>

namespace ratapprox {

// Dense row-major matrix; just enough for the construction systems
// (everything here is <= ~40 unknowns).
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> entries;  // rows*cols, row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), entries(size_t(r) * c, 0.0) {}

    double& at(int i, int j) { return entries[size_t(i) * cols + j]; }
    double at(int i, int j) const { return entries[size_t(i) * cols + j]; }
};

struct SolveResult {
    std::vector<double> solution;
    std::optional<double> condition;  // 1-norm cond, >= 1 when present
    double pivot_growth = 0.0;        // max |U| / max |A|, diagnostic
};

// ell-1 induced norm: max over columns of the column absolute sum.
double matrix_norm_1(const Matrix& a);

// Gaussian elimination with partial pivoting.  Throws SingularMatrixError
// (carrying the pivot index) when a pivot falls below
// 1e3 * eps * ||A||_1.  SolveResult.condition is filled by explicit-inverse
// condition_number(); solve() itself leaves it empty.
SolveResult solve(const Matrix& a, const std::vector<double>& h);

// ||A|| * ||A^-1|| with the inverse from n unit-vector solves.
double condition_number(const Matrix& a);

}  // namespace ratapprox
