#pragma once

#include <string>
#include <vector>

#include "ratapprox/analysis.hpp"
#include "ratapprox/approximant.hpp"
#include "ratapprox/errors.hpp"
#include "ratapprox/function.hpp"

namespace ratapprox {

// Critical-point set of the exchange iteration.  Points live in the working
// variable: the user's domain for plain solves, u = 2x^2 - 1 in [-1,1] for
// the parity-reduced solves.
struct RemezState {
    std::vector<double> critical_points;  // strictly increasing, m+n+2 of them
    double lambda = 0.0;                  // levelled signed error
    int iteration = 0;
};

struct RemezOutcome {
    RationalApproximant approximant;
    RemezState state;
    double delta = 0.0;  // max |weighted error| at exit
    int cycles = 0;
};

// Divergence with the last usable state attached, so a caller can inspect
// (or reseed from) where the exchange ended up.
class RemezDivergenceError : public DivergenceError {
public:
    RemezDivergenceError(const std::string& what, RemezState state)
        : DivergenceError(what), last_state(std::move(state)) {}
    RemezState last_state;
};

// Chebyshev-extremum initial points -cos(k*pi/(m+n+1)) mapped to `d`.
RemezState default_initial_state(const Domain& d, int m, int n);

// Critical points (and the signed level of the smallest one) read off the
// weighted error curve of an existing approximant.  Throws
// InsufficientAlternationError when fewer than m+n+2 alternating extrema
// exist.
RemezState seed_from_approximant(const RationalApproximant& r, const TargetFunction& f,
                                 Weight w = {});

// Iterated-linearization Remez exchange.  Inner lambda resubstitution to
// 1e-3 relative (cap 20), outer exchange until max|error| matches |lambda|
// within 1e-2 relative (cap 50); three consecutive error growths raise
// RemezDivergenceError carrying the last state.  form=even/odd solve in the
// reduced variable (odd via f(x)/x).
RemezOutcome remez_solve(const TargetFunction& f, int m, int n, Weight w = {},
                         const RemezState* init = nullptr,
                         Parity form = Parity::plain);

}  // namespace ratapprox
