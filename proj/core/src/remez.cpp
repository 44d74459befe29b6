#include "ratapprox/remez.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <vector>

#include "ratapprox/cheb.hpp"
#include "ratapprox/linalg.hpp"

namespace ratapprox {

namespace {

constexpr int kGridN = 2000;
constexpr int kInnerCap = 20;
constexpr int kOuterCap = 50;
constexpr double kLambdaTol = 1e-3;
constexpr double kExitTol = 1e-2;

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

// Target / weight / interval in the variable the exchange actually runs in.
struct WorkProblem {
    std::function<double(double)> target;
    std::function<double(double)> rho;
    Domain work{-1.0, 1.0};
};

WorkProblem make_work_problem(const TargetFunction& f, Weight w, Parity form) {
    WorkProblem wp;
    const Domain d = f.domain;
    const bool rel = (w.kind == WeightKind::relative);
    if (form == Parity::plain) {
        wp.work = d;
        wp.target = [f](double x) { return f(x); };
        if (rel)
            wp.rho = [f](double x) { return std::fabs(f(x)); };
        else
            wp.rho = [](double) { return 1.0; };
        return wp;
    }
    // Reduced forms run in u = 2t^2 - 1 on [-1,1], t the unit variable.
    if (form == Parity::even) {
        wp.target = [f, d](double u) {
            double t = std::sqrt((u + 1.0) / 2.0);
            return f(d.from_unit(t));
        };
        if (rel) {
            auto tg = wp.target;
            wp.rho = [tg](double u) { return std::fabs(tg(u)); };
        } else {
            wp.rho = [](double) { return 1.0; };
        }
        return wp;
    }
    // Odd: approximate phi(u) = f(x)/t; the clamp keeps u = -1 evaluable
    // (for an odd target the quotient has a finite limit there).
    auto phi = [f, d](double u) {
        double t = std::max(std::sqrt((u + 1.0) / 2.0), 1e-12);
        return f(d.from_unit(t)) / t;
    };
    wp.target = phi;
    if (rel) {
        wp.rho = [phi](double u) { return std::fabs(phi(u)); };
    } else {
        // |f - t*R| = t*|phi - R|, so the absolute problem is the weighted
        // one with rho = 1/t.
        wp.rho = [](double u) {
            return 1.0 / std::max(std::sqrt((u + 1.0) / 2.0), 1e-12);
        };
    }
    return wp;
}

struct Extremum {
    double x;
    double value;
};

// Grid-scan + golden-section refinement + same-sign collapse of the weighted
// error curve.  `refine` is off for seeding (grid nodes are enough there).
std::vector<Extremum> alternating_extrema(const std::function<double(double)>& err,
                                          double a, double b, bool refine) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    std::vector<double> xs(size_t(kGridN) + 1);
    std::vector<double> ev(size_t(kGridN) + 1);
    for (int i = 0; i <= kGridN; ++i) {
        xs[size_t(i)] = a + (b - a) * double(i) / double(kGridN);
        double e = err(xs[size_t(i)]);
        if (!std::isfinite(e))
            throw EvaluationError("weighted error not finite on the scan grid");
        ev[size_t(i)] = e;
    }
    std::vector<size_t> idx{0};
    for (size_t i = 1; i + 1 < xs.size(); ++i)
        if ((ev[i] - ev[i - 1]) * (ev[i + 1] - ev[i]) <= 0.0) idx.push_back(i);
    idx.push_back(xs.size() - 1);

    std::vector<Extremum> merged;
    for (size_t i : idx) {
        double xr = xs[i];
        double er = ev[i];
        if (refine) {
            double lo = xs[i > 0 ? i - 1 : 0];
            double hi = xs[std::min(i + 1, xs.size() - 1)];
            double s = ev[i] >= 0.0 ? 1.0 : -1.0;
            double c = hi - gr * (hi - lo);
            double d = lo + gr * (hi - lo);
            for (int it = 0; it < 60; ++it) {
                if (s * err(c) > s * err(d))
                    hi = d;
                else
                    lo = c;
                c = hi - gr * (hi - lo);
                d = lo + gr * (hi - lo);
            }
            xr = (lo + hi) / 2.0;
            er = err(xr);
        }
        if (!merged.empty() && sgn(er) == sgn(merged.back().value)) {
            if (std::fabs(er) > std::fabs(merged.back().value)) merged.back() = {xr, er};
        } else {
            merged.push_back({xr, er});
        }
    }
    return merged;
}

// Drop surplus extrema down to exactly `K`, keeping the sign alternation:
// the smallest-magnitude one goes alone when it sits at an edge, otherwise
// together with its smaller neighbour (or, if that would undershoot, the
// weaker endpoint goes instead).
void reduce_to(std::vector<Extremum>& merged, size_t K) {
    while (merged.size() > K) {
        size_t i0 = 0;
        for (size_t i = 1; i < merged.size(); ++i)
            if (std::fabs(merged[i].value) < std::fabs(merged[i0].value)) i0 = i;
        if (i0 == 0 || i0 == merged.size() - 1) {
            merged.erase(merged.begin() + long(i0));
        } else if (merged.size() - 2 >= K) {
            size_t j = std::fabs(merged[i0 - 1].value) < std::fabs(merged[i0 + 1].value)
                           ? i0 - 1
                           : i0 + 1;
            merged.erase(merged.begin() + long(std::max(i0, j)));
            merged.erase(merged.begin() + long(std::min(i0, j)));
        } else if (std::fabs(merged.front().value) < std::fabs(merged.back().value)) {
            merged.erase(merged.begin());
        } else {
            merged.pop_back();
        }
    }
}

}  // namespace

RemezState default_initial_state(const Domain& d, int m, int n) {
    if (m < 0 || n < 0) throw ShapeError("default_initial_state: negative degree");
    RemezState st;
    const int K = m + n + 2;
    st.critical_points.resize(size_t(K));
    for (int k = 0; k < K; ++k) {
        double t = -std::cos(double(k) * std::numbers::pi / double(m + n + 1));
        st.critical_points[size_t(k)] = (d.b - d.a) / 2.0 * t + (d.a + d.b) / 2.0;
    }
    return st;
}

RemezState seed_from_approximant(const RationalApproximant& r, const TargetFunction& f,
                                 Weight w) {
    const int m = r.denominator.degree();
    const int n = r.numerator.degree();
    const size_t K = size_t(m + n + 2);
    const bool rel = (w.kind == WeightKind::relative);

    // Weighted error in the same work variable remez_solve will use.  For
    // the reduced forms the pointwise weighted error transfers unchanged.
    double wa = f.domain.a, wb = f.domain.b;
    std::function<double(double)> err;
    if (r.parity == Parity::plain) {
        err = [&](double x) {
            double fx = f(x);
            double e = fx - r(x);
            if (rel) {
                if (std::fabs(fx) < 1e-300)
                    throw EvaluationError("relative weight at a zero of the target");
                e /= std::fabs(fx);
            }
            return e;
        };
    } else {
        wa = -1.0;
        wb = 1.0;
        Domain d = f.domain;
        err = [&, d](double u) {
            double x = d.from_unit(std::sqrt((u + 1.0) / 2.0));
            double fx = f(x);
            double e = fx - r(x);
            if (rel) {
                if (std::fabs(fx) < 1e-300)
                    throw EvaluationError("relative weight at a zero of the target");
                e /= std::fabs(fx);
            }
            return e;
        };
    }

    std::vector<Extremum> merged = alternating_extrema(err, wa, wb, /*refine=*/false);
    if (merged.size() < K) {
        std::ostringstream os;
        os << "seed_from_approximant: " << merged.size() << " alternating extrema, need "
           << K;
        throw InsufficientAlternationError(os.str());
    }
    reduce_to(merged, K);

    RemezState st;
    st.critical_points.reserve(K);
    size_t i0 = 0;
    for (size_t i = 0; i < merged.size(); ++i) {
        st.critical_points.push_back(merged[i].x);
        if (std::fabs(merged[i].value) < std::fabs(merged[i0].value)) i0 = i;
    }
    st.lambda = merged[i0].value;
    return st;
}

RemezOutcome remez_solve(const TargetFunction& f, int m, int n, Weight w,
                         const RemezState* init, Parity form) {
    if (m < 0 || n < 0) throw ShapeError("remez_solve: negative degree");
    if (form != Parity::plain && !(f.domain.a == -f.domain.b))
        throw ShapeError("remez_solve: parity-reduced form needs a symmetric domain");
    const int K = m + n + 2;
    WorkProblem wp = make_work_problem(f, w, form);

    std::vector<double> pts;
    double lam = 0.0;
    if (init) {
        if (init->critical_points.size() != size_t(K))
            throw ShapeError("remez_solve: initial state must carry m+n+2 points");
        for (size_t i = 0; i < init->critical_points.size(); ++i) {
            double x = init->critical_points[i];
            if (x < wp.work.a || x > wp.work.b)
                throw ShapeError("remez_solve: initial point outside the work interval");
            if (i > 0 && !(x > init->critical_points[i - 1]))
                throw InsufficientAlternationError(
                    "remez_solve: initial points must be strictly increasing");
        }
        pts = init->critical_points;
        lam = init->lambda;
    } else {
        pts = default_initial_state(wp.work, m, n).critical_points;
    }

    std::vector<double> ac, bc;
    double delta = 0.0;
    double prev_delta = 0.0;
    bool have_prev = false;
    int grow = 0;
    int cycles = kOuterCap;
    bool converged = false;

    for (int cycle = 0; cycle < kOuterCap; ++cycle) {
        // Inner pass: freeze lambda in the bilinear terms and re-substitute.
        double lam0 = lam;
        std::vector<double> y;
        for (int it = 0; it < kInnerCap; ++it) {
            Matrix A(K, K);
            std::vector<double> h(size_t(K), 0.0);
            for (int k = 0; k < K; ++k) {
                double xk = pts[size_t(k)];
                double sk = (k % 2 == 0) ? 1.0 : -1.0;
                double fk = wp.target(xk);
                double rk = wp.rho(xk);
                for (int i = 0; i <= n; ++i) A.at(k, i) = std::pow(xk, i);
                double mu = sk * rk * lam0 - fk;
                for (int j = 1; j <= m; ++j) A.at(k, n + j) = mu * std::pow(xk, j);
                A.at(k, n + m + 1) = sk * rk;
                h[size_t(k)] = fk;
            }
            try {
                y = solve(A, h).solution;
            } catch (const SingularMatrixError&) {
                throw ConstructionError("remez_solve: linearized system is singular");
            }
            double lam_new = y[size_t(K) - 1];
            bool done =
                std::fabs(lam_new - lam0) <= kLambdaTol * std::max(std::fabs(lam_new), 1e-300);
            lam0 = lam_new;
            if (done) break;
        }
        lam = lam0;
        ac.assign(y.begin(), y.begin() + (n + 1));
        bc.assign(size_t(m) + 1, 0.0);
        bc[0] = 1.0;
        for (int j = 1; j <= m; ++j) bc[size_t(j)] = y[size_t(n + j)];

        auto err = [&](double x) {
            return (wp.target(x) - horner(ac, x) / horner(bc, x)) / wp.rho(x);
        };
        std::vector<Extremum> merged =
            alternating_extrema(err, wp.work.a, wp.work.b, /*refine=*/true);
        reduce_to(merged, size_t(K));
        if (merged.size() < size_t(K)) {
            std::ostringstream os;
            os << "remez_solve: only " << merged.size() << " alternating extrema, need "
               << K;
            throw InsufficientAlternationError(os.str());
        }
        delta = 0.0;
        for (size_t i = 0; i < merged.size(); ++i) {
            pts[i] = merged[i].x;
            delta = std::max(delta, std::fabs(merged[i].value));
        }

        if (std::fabs(delta - std::fabs(lam)) <= kExitTol * std::fabs(lam)) {
            cycles = cycle + 1;
            converged = true;
            break;
        }
        if (have_prev && delta > prev_delta)
            ++grow;
        else
            grow = 0;
        if (grow >= 3) {
            RemezState st{pts, lam, cycle + 1};
            throw RemezDivergenceError("remez_solve: error grew 3 cycles in a row", st);
        }
        prev_delta = delta;
        have_prev = true;
    }
    (void)converged;

    RemezOutcome out;
    Polynomial p{ac}, q{bc};
    if (form == Parity::plain) {
        out.approximant = RationalApproximant{p, q, Parity::plain, f.domain};
    } else {
        // Solved in u = 2w - 1; store as polynomials in w = t^2.
        out.approximant = RationalApproximant{poly_compose_affine(p, 2.0, -1.0),
                                              poly_compose_affine(q, 2.0, -1.0), form,
                                              f.domain};
    }
    out.state = RemezState{pts, lam, cycles};
    out.delta = delta;
    out.cycles = cycles;
    return out;
}

}  // namespace ratapprox
