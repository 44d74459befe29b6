#pragma once

#include <cmath>

namespace ratapprox {

// Compensated double-double value (hi + lo, |lo| <= ulp(hi)/2).
// Only what the identity checks need: +, -, *, /.  Products use FMA.
struct dd {
    double hi = 0.0;
    double lo = 0.0;

    dd() = default;
    dd(double h) : hi(h), lo(0.0) {}
    dd(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace detail {
inline dd two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}
inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}
}  // namespace detail

inline dd operator+(dd a, dd b) {
    dd s = detail::two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    dd p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - dd(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - dd(q2) * b;
    double q3 = r.hi / b.hi;
    dd q = detail::quick_two_sum(q1, q2);
    return q + dd(q3);
}

inline dd& operator+=(dd& a, dd b) { a = a + b; return a; }
inline dd& operator-=(dd& a, dd b) { a = a - b; return a; }
inline dd& operator*=(dd& a, dd b) { a = a * b; return a; }

inline double fabs(dd a) { return std::fabs(a.hi + a.lo); }

}  // namespace ratapprox
