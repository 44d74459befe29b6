#include "ratapprox/elemfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <vector>

#include "ratapprox/errors.hpp"

namespace ratapprox::elemfun {

namespace detail {
const char* embedded_tables_text();  // generated from core/data/elemfun_tables.txt
}

namespace {

constexpr double kSqrt10Inv = 0.31622776601683794;  // 10^(-1/2)
const double kSqrt2M1 = std::sqrt(2.0) - 1.0;
const double kLn10 = std::numbers::ln10;

double map_value(const std::map<std::string, double>& values, const std::string& key,
                 const char* what) {
    auto it = values.find(key);
    if (it == values.end())
        throw ShapeError(std::string(what) + " coefficient '" + key + "' missing");
    return it->second;
}

}  // namespace

double KernelCoeffs::v(const std::string& key) const {
    return map_value(values, key, "kernel");
}

double JacobiCoeffs::v(const std::string& key) const {
    return map_value(values, key, "continued-fraction");
}

double parse_fortran_double(const std::string& text) {
    size_t b = text.find_first_not_of(" \t\r\n");
    size_t e = text.find_last_not_of(" \t\r\n");
    if (b == std::string::npos) throw ShapeError("empty numeric field");
    std::string s = text.substr(b, e - b + 1);

    std::string norm;
    size_t dpos = s.find_first_of("DdEe");
    if (dpos == std::string::npos) {
        norm = s;
    } else {
        // Fortran prints a blank where the exponent '+' would be.
        std::string tail = s.substr(dpos + 1);
        size_t t = tail.find_first_not_of(' ');
        if (t == std::string::npos) throw ShapeError("bad exponent in '" + s + "'");
        norm = s.substr(0, dpos) + "e" + tail.substr(t);
    }
    const char* cs = norm.c_str();
    char* end = nullptr;
    double v = std::strtod(cs, &end);
    if (end == cs || *end != '\0')
        throw ShapeError("unparsable numeric field '" + text + "'");
    return v;
}

KernelTables parse_coefficient_tables(const std::string& text) {
    KernelTables out;
    std::istringstream in(text);
    std::string line, block;
    std::vector<double> poly, jac;
    bool in_jac = false;

    auto flush = [&]() {
        if (block.empty()) return;
        size_t sp = block.find(' ');
        if (sp == std::string::npos)
            throw ShapeError("table block '" + block + "' lacks a precision tag");
        std::string prec_word = block.substr(sp + 1);
        PrecisionTag prec;
        size_t n_kernel, n_jac;
        if (prec_word == "ordinary") {
            prec = PrecisionTag::ordinary;
            n_kernel = 5;
            n_jac = 5;
        } else if (prec_word == "enhanced") {
            prec = PrecisionTag::enhanced;
            n_kernel = 7;
            n_jac = 7;
        } else {
            throw ShapeError("unknown precision tag '" + prec_word + "'");
        }
        if (poly.size() != n_kernel)
            throw ShapeError("block '" + block + "': expected " + std::to_string(n_kernel) +
                             " kernel coefficients, got " + std::to_string(poly.size()));
        if (jac.size() != n_jac)
            throw ShapeError("block '" + block + "': expected " + std::to_string(n_jac) +
                             " continued-fraction coefficients, got " +
                             std::to_string(jac.size()));

        KernelCoeffs k;
        k.precision = prec;
        if (prec == PrecisionTag::ordinary) {
            const char* keys[] = {"a", "b", "c", "alpha", "beta"};
            for (size_t i = 0; i < 5; ++i) k.values[keys[i]] = poly[i];
        } else {
            const char* keys[] = {"a", "b", "c", "d", "alpha", "beta", "gamma"};
            for (size_t i = 0; i < 7; ++i) k.values[keys[i]] = poly[i];
        }
        JacobiCoeffs j;
        j.precision = prec;
        if (prec == PrecisionTag::ordinary) {
            const char* keys[] = {"c", "mu", "lambda", "nu", "ae"};
            for (size_t i = 0; i < 5; ++i) j.values[keys[i]] = jac[i];
        } else {
            const char* keys[] = {"d", "xi", "eta", "mu", "lambda", "nu", "ae"};
            for (size_t i = 0; i < 7; ++i) j.values[keys[i]] = jac[i];
        }
        out.kernels[block] = std::move(k);
        out.jacobis[block] = std::move(j);
        poly.clear();
        jac.clear();
    };

    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (line.front() == '[') {
            if (line.back() != ']') throw ShapeError("unterminated block header: " + line);
            flush();
            block = line.substr(1, line.size() - 2);
            in_jac = false;
        } else if (line == "***") {
            in_jac = true;
        } else if (block.empty()) {
            throw ShapeError("numeric line before any block header: " + line);
        } else {
            (in_jac ? jac : poly).push_back(parse_fortran_double(line));
        }
    }
    flush();
    if (out.kernels.empty()) throw ShapeError("coefficient table text held no blocks");
    return out;
}

namespace {

const KernelTables& embedded_tables() {
    static const KernelTables tables = parse_coefficient_tables(detail::embedded_tables_text());
    return tables;
}

std::string table_key(FunctionId id, PrecisionTag prec) {
    return function_id_name(id) +
           (prec == PrecisionTag::ordinary ? " ordinary" : " enhanced");
}

}  // namespace

const KernelCoeffs& kernel_table(FunctionId id, PrecisionTag prec) {
    const auto& t = embedded_tables().kernels;
    auto it = t.find(table_key(id, prec));
    if (it == t.end())
        throw ShapeError("no kernel table for '" + function_id_name(id) +
                         "'; it reduces to another routine");
    return it->second;
}

const JacobiCoeffs& jacobi_table(FunctionId id, PrecisionTag prec) {
    const auto& t = embedded_tables().jacobis;
    auto it = t.find(table_key(id, prec));
    if (it == t.end())
        throw ShapeError("no continued-fraction table for '" + function_id_name(id) + "'");
    return it->second;
}

double eval_kernel(const KernelCoeffs& k, double y) {
    const double z = y * y;
    if (k.precision == PrecisionTag::ordinary) {
        return y * (k.v("a") + z * (k.v("b") + k.v("c") * z)) /
               (k.v("alpha") + z * (k.v("beta") + z));
    }
    return y * (k.v("a") + z * (k.v("b") + z * (k.v("c") + k.v("d") * z))) /
           (k.v("alpha") + z * (k.v("beta") + z * (k.v("gamma") + z)));
}

double eval_jacobi(const JacobiCoeffs& j, double y) {
    const double z = y * y;
    const double inner = z + j.v("nu") + j.v("ae") / (z + j.v("lambda"));
    if (j.precision == PrecisionTag::ordinary)
        return y * (j.v("c") + j.v("mu") / inner);
    return y * (j.v("d") + j.v("xi") / (z + j.v("eta") + j.v("mu") / inner));
}

JacobiCoeffs to_jacobi(const KernelCoeffs& k) {
    // Successive division in z = y^2; numerator and (monic) denominator have
    // the same degree kd.
    std::vector<double> num, den;
    if (k.precision == PrecisionTag::ordinary) {
        num = {k.v("a"), k.v("b"), k.v("c")};
        den = {k.v("alpha"), k.v("beta"), 1.0};
    } else {
        num = {k.v("a"), k.v("b"), k.v("c"), k.v("d")};
        den = {k.v("alpha"), k.v("beta"), k.v("gamma"), 1.0};
    }
    const size_t kd = den.size() - 1;
    const double leading = num[kd];

    std::vector<double> A(kd), B = den;
    for (size_t i = 0; i < kd; ++i) A[i] = num[i] - leading * den[i];

    std::vector<std::pair<double, double>> stages;  // (g, h) per level
    for (size_t level = 0; level < kd; ++level) {
        const size_t j = B.size() - 1;
        if (A[j - 1] == 0.0)
            throw ConstructionError("continued-fraction breakdown: zero leading coefficient");
        const double g = A[j - 1] / B[j];
        const double h = (g * B[j - 1] - (j >= 2 ? A[j - 2] : 0.0)) / A[j - 1];
        stages.emplace_back(g, h);
        if (j < 2) break;
        // C = g*B - A*(z + h), degree <= j-2; the top two terms cancel.
        std::vector<double> C(j - 1);
        for (size_t i = 0; i + 1 < j; ++i) C[i] = g * B[i];
        for (size_t i = 1; i + 1 < j; ++i) C[i] -= A[i - 1];
        for (size_t i = 0; i + 1 < j; ++i) C[i] -= h * A[i];
        B = std::move(A);
        A = std::move(C);
    }

    JacobiCoeffs out;
    out.precision = k.precision;
    if (k.precision == PrecisionTag::ordinary) {
        if (stages.size() != 2) throw ConstructionError("continued fraction terminated early");
        out.values["c"] = leading;
        out.values["mu"] = stages[0].first;
        out.values["nu"] = stages[0].second;
        out.values["ae"] = stages[1].first;
        out.values["lambda"] = stages[1].second;
    } else {
        if (stages.size() != 3) throw ConstructionError("continued fraction terminated early");
        out.values["d"] = leading;
        out.values["xi"] = stages[0].first;
        out.values["eta"] = stages[0].second;
        out.values["mu"] = stages[1].first;
        out.values["nu"] = stages[1].second;
        out.values["ae"] = stages[2].first;
        out.values["lambda"] = stages[2].second;
    }
    return out;
}

double evaluate(FunctionId id, double x, PrecisionTag precision) {
    using std::numbers::pi;
    switch (id) {
        case FunctionId::lg: {
            if (!std::isfinite(x) || x <= 0.0)
                throw DomainError("lg needs a positive finite argument");
            int p = int(std::floor(std::log10(x))) + 1;
            double x0 = x / std::pow(10.0, p);
            if (x0 >= 1.0) {  // guard the rounding of log10 at powers of ten
                x0 /= 10.0;
                ++p;
            }
            if (x0 < 0.1) {
                x0 *= 10.0;
                --p;
            }
            double y = (x0 - kSqrt10Inv) / (x0 + kSqrt10Inv);
            return (p - 0.5) + eval_kernel(kernel_table(id, precision), y);
        }
        case FunctionId::exp10: {
            double p = std::trunc(x);
            double r = eval_kernel(kernel_table(id, precision), x - p);
            return std::pow(10.0, p) * (1.0 + r) / (1.0 - r);
        }
        case FunctionId::ln:
            return evaluate(FunctionId::lg, x, precision) * kLn10;
        case FunctionId::exp:
            return evaluate(FunctionId::exp10, x / kLn10, precision);
        case FunctionId::pow:
            throw ShapeError("pow takes two arguments; use evaluate_pow");
        case FunctionId::sin: {
            double t = x / (2.0 * pi);
            double y = (t - std::floor(t)) * 2.0 * pi;
            const KernelCoeffs& k = kernel_table(id, precision);
            if (y <= pi / 2.0) return eval_kernel(k, y);
            if (y <= 3.0 * pi / 2.0) return eval_kernel(k, pi - y);
            return eval_kernel(k, y - 2.0 * pi);
        }
        case FunctionId::cos:
            return evaluate(FunctionId::sin, pi / 2.0 - x, precision);
        case FunctionId::tan: {
            double t = x / pi;
            double y = (t - std::floor(t)) * pi;
            const KernelCoeffs& k = kernel_table(id, precision);
            if (y <= pi / 4.0) return eval_kernel(k, y);
            if (y <= 3.0 * pi / 4.0) return 1.0 / eval_kernel(k, pi / 2.0 - y);
            return eval_kernel(k, y - pi);
        }
        case FunctionId::atan: {
            if (x < 0.0) return -evaluate(id, -x, precision);
            const KernelCoeffs& k = kernel_table(id, precision);
            if (x <= kSqrt2M1) return eval_kernel(k, x);
            if (x <= 1.0) return pi / 4.0 + eval_kernel(k, (x - 1.0) / (x + 1.0));
            return pi / 2.0 - evaluate(id, 1.0 / x, precision);
        }
        case FunctionId::asin: {
            if (!(std::fabs(x) <= 1.0)) throw DomainError("asin argument outside [-1, 1]");
            if (x < 0.0) return -evaluate(id, -x, precision);
            const KernelCoeffs& k = kernel_table(id, precision);
            if (x <= 0.5) return eval_kernel(k, x);
            return pi / 2.0 - 2.0 * eval_kernel(k, std::sqrt((1.0 - x) / 2.0));
        }
    }
    throw ShapeError("unknown function id");
}

double evaluate_pow(double x, double y, PrecisionTag precision) {
    if (x == 0.0) {
        if (y > 0.0) return 0.0;
        throw DomainError("0^y needs y > 0");
    }
    if (x < 0.0) throw DomainError("pow needs a non-negative base");
    return evaluate(FunctionId::exp10, y * evaluate(FunctionId::lg, x, precision), precision);
}

std::pair<double, double> reduction_interval(FunctionId id) {
    using std::numbers::pi;
    switch (id) {
        case FunctionId::lg:
        case FunctionId::ln: return {0.1, 1.0};
        case FunctionId::exp10:
        case FunctionId::exp: return {-1.0, 1.0};
        case FunctionId::sin: return {-pi / 2.0, pi / 2.0};
        case FunctionId::cos: return {0.0, pi};
        case FunctionId::tan: return {-pi / 4.0, pi / 4.0};
        case FunctionId::atan: return {-kSqrt2M1, kSqrt2M1};
        case FunctionId::asin: return {-0.5, 0.5};
        case FunctionId::pow: break;
    }
    throw ShapeError("no sampling interval for this function id");
}

namespace {

long double reference_value(FunctionId id, long double x) {
    switch (id) {
        case FunctionId::lg: return std::log10(x);
        case FunctionId::exp10: return std::pow(10.0L, x);
        case FunctionId::ln: return std::log(x);
        case FunctionId::exp: return std::exp(x);
        case FunctionId::sin: return std::sin(x);
        case FunctionId::cos: return std::cos(x);
        case FunctionId::tan: return std::tan(x);
        case FunctionId::atan: return std::atan(x);
        case FunctionId::asin: return std::asin(x);
        case FunctionId::pow: break;
    }
    throw ShapeError("no reference for this function id");
}

}  // namespace

HarnessRecord accuracy_harness(FunctionId id, PrecisionTag precision, int grid) {
    if (grid < 2) throw ShapeError("harness grid needs at least 2 points");
    auto [a, b] = reduction_interval(id);
    HarnessRecord rec;
    double sum_abs = 0.0, sum_rel = 0.0;
    long n_rel = 0;
    for (int i = 0; i < grid; ++i) {
        double x = a + (b - a) * double(i) / double(grid - 1);
        long double ref = reference_value(id, (long double)x);
        double v = evaluate(id, x, precision);
        double err = double(fabsl((long double)v - ref));
        rec.max_abs = std::max(rec.max_abs, err);
        sum_abs += err;
        if (fabsl(ref) > 1e-30L) {
            double rel = double(fabsl((long double)v - ref) / fabsl(ref));
            rec.max_rel = std::max(rec.max_rel, rel);
            sum_rel += rel;
            ++n_rel;
        }
    }
    rec.mean_abs = sum_abs / double(grid);
    if (n_rel > 0) rec.mean_rel = sum_rel / double(n_rel);
    return rec;
}

FunctionId function_id_from_name(const std::string& name) {
    if (name == "lg") return FunctionId::lg;
    if (name == "exp10") return FunctionId::exp10;
    if (name == "ln") return FunctionId::ln;
    if (name == "exp") return FunctionId::exp;
    if (name == "pow") return FunctionId::pow;
    if (name == "sin") return FunctionId::sin;
    if (name == "cos") return FunctionId::cos;
    if (name == "tan") return FunctionId::tan;
    if (name == "atan") return FunctionId::atan;
    if (name == "asin") return FunctionId::asin;
    throw ShapeError("unknown elementary function '" + name + "'");
}

std::string function_id_name(FunctionId id) {
    switch (id) {
        case FunctionId::lg: return "lg";
        case FunctionId::exp10: return "exp10";
        case FunctionId::ln: return "ln";
        case FunctionId::exp: return "exp";
        case FunctionId::pow: return "pow";
        case FunctionId::sin: return "sin";
        case FunctionId::cos: return "cos";
        case FunctionId::tan: return "tan";
        case FunctionId::atan: return "atan";
        case FunctionId::asin: return "asin";
    }
    return "?";
}

}  // namespace ratapprox::elemfun
