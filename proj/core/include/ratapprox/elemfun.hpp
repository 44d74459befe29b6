#pragma once

#include <map>
#include <string>
#include <utility>

namespace ratapprox::elemfun {

enum class FunctionId { lg, exp10, ln, exp, pow, sin, cos, tan, atan, asin };
enum class PrecisionTag { ordinary, enhanced };

// Coefficients of the rational kernel
//   ordinary: y (a + b y^2 + c y^4) / (alpha + beta y^2 + y^4)
//   enhanced: y (a + b y^2 + c y^4 + d y^6) / (alpha + beta y^2 + gamma y^4 + y^6)
struct KernelCoeffs {
    PrecisionTag precision = PrecisionTag::ordinary;
    std::map<std::string, double> values;  // keys: a,b,c[,d],alpha,beta[,gamma]

    double v(const std::string& key) const;
};

// Continued-fraction (Jacobi) form:
//   ordinary: y (c + mu / (z + nu + ae / (z + lambda))),            z = y^2
//   enhanced: y (d + xi / (z + eta + mu / (z + nu + ae / (z + lambda))))
struct JacobiCoeffs {
    PrecisionTag precision = PrecisionTag::ordinary;
    std::map<std::string, double> values;  // keys: c|d, xi, eta, mu, nu, ae, lambda

    double v(const std::string& key) const;
};

double eval_kernel(const KernelCoeffs& k, double y);
double eval_jacobi(const JacobiCoeffs& j, double y);

// Successive polynomial division in z = y^2; throws ConstructionError on a
// zero intermediate leading coefficient.
JacobiCoeffs to_jacobi(const KernelCoeffs& k);

// Full evaluation: argument reduction of the relevant Appendix algorithm,
// then the fixed kernel.  ln/exp/pow ride on lg/exp10.
double evaluate(FunctionId id, double x, PrecisionTag precision);
double evaluate_pow(double x, double y, PrecisionTag precision);

struct HarnessRecord {
    double max_abs = 0.0;   // Delta
    double max_rel = 0.0;   // delta
    double mean_abs = 0.0;
    double mean_rel = 0.0;
};

// Errors of `evaluate` against a long-double reference over the reduction
// interval of the given function, on `grid` sample points.
HarnessRecord accuracy_harness(FunctionId id, PrecisionTag precision, int grid = 4001);

// Kernel-table access (parsed once from the embedded coefficient file).
const KernelCoeffs& kernel_table(FunctionId id, PrecisionTag precision);
const JacobiCoeffs& jacobi_table(FunctionId id, PrecisionTag precision);

// The reduction interval the harness samples for each id.
std::pair<double, double> reduction_interval(FunctionId id);

// Parser for the Fortran-style table format ("0.3187822082024000D 01").
double parse_fortran_double(const std::string& text);

// A parsed coefficient file, keyed "lg ordinary", "sin enhanced", ...
struct KernelTables {
    std::map<std::string, KernelCoeffs> kernels;
    std::map<std::string, JacobiCoeffs> jacobis;
};

// Block-format parser behind kernel_table()/jacobi_table(); works on any
// text in the format of core/data/elemfun_tables.txt.
KernelTables parse_coefficient_tables(const std::string& text);

FunctionId function_id_from_name(const std::string& name);
std::string function_id_name(FunctionId id);

}  // namespace ratapprox::elemfun
