#include "quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace hzeta {

namespace {

// Abscissa cap for the tanh-sinh variable; beyond |u| = 4 the transformed
// nodes sit within ~1e-37 of the endpoints.
constexpr double kMaxAbscissa = 4.0;

struct NodeSum {
    double plus_u;   // node parameter
    cplx value{0.0, 0.0};
};

}  // namespace

QuadratureOutcome tanh_sinh_finite(const Integrand& f, double lo, double hi, double tol,
                                   int max_levels) {
    if (!(tol > 0.0)) throw InvalidArgument("tanh_sinh_finite: tol must be positive");
    if (!(hi > lo)) throw InvalidArgument("tanh_sinh_finite: empty interval");

    const double half = 0.5 * (hi - lo);
    QuadratureOutcome out;
    out.truncation_point = hi;

    // Contribution of the node at parameter u; returns false once the node
    // has collapsed onto an endpoint in double precision (its residual weight
    // is far below any supported tolerance).
    auto node_term = [&](double u, cplx& term) -> bool {
        const double y = 0.5 * kPi * std::sinh(u);
        const double dist = half * 2.0 / (1.0 + std::exp(2.0 * std::abs(y)));
        const double x = (y >= 0.0) ? hi - dist : lo + dist;
        if (x <= lo || x >= hi) return false;
        const double weight = half * (0.5 * kPi) * std::cosh(u) /
                              (std::cosh(y) * std::cosh(y));
        const cplx fx = f(x);
        ++out.n_evals;
        if (!is_finite(fx)) throw BadIntegrand("tanh_sinh_finite: non-finite sample");
        term = weight * fx;
        return true;
    };

    cplx total(0.0, 0.0);
    {
        cplx term;
        if (node_term(0.0, term)) total += term;
        for (int k = 1; k <= static_cast<int>(kMaxAbscissa); ++k) {
            bool any = false;
            if (node_term(+static_cast<double>(k), term)) total += term, any = true;
            if (node_term(-static_cast<double>(k), term)) total += term, any = true;
            if (!any) break;
        }
    }

    double h = 1.0;
    cplx prev = h * total;
    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5;
        // New nodes of this level are the odd multiples of h.
        for (int side = 0; side < 2; ++side) {
            const double sgn = side == 0 ? 1.0 : -1.0;
            for (long j = 0;; ++j) {
                const double u = sgn * (2.0 * j + 1.0) * h;
                if (std::abs(u) > kMaxAbscissa) break;
                cplx term;
                if (!node_term(u, term)) break;
                total += term;
            }
        }
        const cplx cur = h * total;
        const double diff = std::abs(cur - prev);
        if (level >= 3 && diff <= tol * std::max(1.0, std::abs(cur))) {
            out.value = cur;
            out.err_estimate = diff;
            return out;
        }
        prev = cur;
    }
    throw NoConvergence("tanh_sinh_finite: level budget exhausted");
}

QuadratureOutcome integrate_half_line(const Integrand& f, double tol, double decay_rate) {
    if (!(tol > 0.0)) throw InvalidArgument("integrate_half_line: tol must be positive");
    if (!(decay_rate > 0.0)) throw InvalidArgument("integrate_half_line: decay_rate must be positive");

    double T = std::log(100.0 / tol) / decay_rate;
    long probe_evals = 0;

    // The nominal truncation assumes |f| ~ e^{-rate t}; polynomially growing
    // prefactors push the crossing point out, so extend until the sampled
    // tail estimate drops below tol/100.
    auto tail_bound = [&](double at) {
        double m = 0.0;
        for (double c : {1.0, 1.03, 1.07}) {
            const cplx v = f(at * c);
            ++probe_evals;
            if (!is_finite(v)) throw BadIntegrand("integrate_half_line: non-finite tail sample");
            m = std::max(m, std::abs(v));
        }
        return m / decay_rate;
    };

    double tail = tail_bound(T);
    for (int i = 0; i < 40 && tail > tol / 100.0; ++i) {
        T *= 1.3;
        tail = tail_bound(T);
    }

    QuadratureOutcome out = tanh_sinh_finite(f, 0.0, T, tol);
    out.n_evals += probe_evals;
    out.err_estimate += tail;
    out.truncation_point = T;
    return out;
}

}  // namespace hzeta
