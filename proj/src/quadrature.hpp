#pragma once

#include <functional>

#include "numeric.hpp"

namespace hzeta {

struct QuadratureOutcome {
    cplx value{0.0, 0.0};
    double err_estimate = 0.0;
    long n_evals = 0;
    double truncation_point = 0.0;
};

using Integrand = std::function<cplx(double)>;

// Tanh-sinh (double-exponential) rule on [lo, hi] with level doubling until
// successive levels differ by less than tol*max(1,|I|). Nodes never touch the
// endpoints, so integrands only need to be finite on the open interval.
// Throws BadIntegrand on a non-finite sample, NoConvergence when the level
// budget is exhausted.
QuadratureOutcome tanh_sinh_finite(const Integrand& f, double lo, double hi, double tol,
                                   int max_levels = 12);

// Semi-infinite integral of an eventually exponentially decaying integrand:
// truncate at T with exp(-decay_rate*T) < tol/100 (extended adaptively while
// the sampled tail bound |f(T)|/decay_rate stays above tol/100, which covers
// polynomially growing prefactors), then tanh-sinh on [0, T].
QuadratureOutcome integrate_half_line(const Integrand& f, double tol, double decay_rate);

}  // namespace hzeta
