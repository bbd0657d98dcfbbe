#include "transforms.hpp"

#include <cmath>

#include "errors.hpp"
#include "gamma.hpp"
#include "laguerre.hpp"

namespace hzeta {

namespace {

// 1/(e^w - 1) + 1/2 - 1/w, the regularized bose weight moment. Bernoulli
// series below the cutoff where the direct form starts cancelling.
double bose_bracket(double w) {
    if (w < 0.25) {
        const double w2 = w * w;
        return w * (1.0 / 12.0 +
                    w2 * (-1.0 / 720.0 +
                          w2 * (1.0 / 30240.0 +
                                w2 * (-1.0 / 1209600.0 + w2 * (1.0 / 47900160.0)))));
    }
    return 1.0 / std::expm1(w) + 0.5 - 1.0 / w;
}

// sinh(x) - x without cancellation.
double sinh_minus_arg(double x) {
    if (std::abs(x) < 0.5) {
        const double x2 = x * x;
        return x * x2 *
               (1.0 / 6.0 +
                x2 * (1.0 / 120.0 +
                      x2 * (1.0 / 5040.0 + x2 * (1.0 / 362880.0 + x2 * (1.0 / 39916800.0)))));
    }
    return std::sinh(x) - x;
}

void check_query(const TransformQuery& q) {
    if (!(q.w >= 0.0) || !std::isfinite(q.w)) throw DomainError("transform: w must be >= 0");
    if (q.kernel != KernelKind::Bose && (!(q.beta > 0.0) || !std::isfinite(q.beta)))
        throw DomainError("transform: beta must be positive");
}

}  // namespace

double kernel_sine_transform(const TransformQuery& q) {
    check_query(q);
    const double w = q.w;
    switch (q.kernel) {
        case KernelKind::Bose:
            // Fixed scale 2*pi for this entry.
            return 0.5 * bose_bracket(w);
        case KernelKind::Sinh:
            return (kPi / (2.0 * q.beta)) * std::tanh(kPi * w / (2.0 * q.beta));
        case KernelKind::Fermi: {
            if (w == 0.0) return 0.0;
            const double x = kPi * w / q.beta;
            // 1/(2w) - pi/(2 beta sinh x) = (sinh x - x) / (2 w sinh x).
            return sinh_minus_arg(x) / (2.0 * w * std::sinh(x));
        }
        case KernelKind::Cosh:
            return (kPi / (2.0 * q.beta)) / std::cosh(kPi * w / (2.0 * q.beta));
    }
    throw Error(ErrorCode::Internal, "kernel_sine_transform: unreachable");
}

Integrand transform_defining_integrand(const TransformQuery& q) {
    check_query(q);
    const double w = q.w;
    const double beta = q.beta;
    switch (q.kernel) {
        case KernelKind::Bose:
            return [w](double t) -> cplx {
                if (t == 0.0) return w / kTwoPi;
                return std::sin(w * t) / std::expm1(kTwoPi * t);
            };
        case KernelKind::Sinh:
            return [w, beta](double t) -> cplx {
                if (t == 0.0) return w / beta;
                return std::sin(w * t) / std::sinh(beta * t);
            };
        case KernelKind::Fermi:
            return [w, beta](double t) -> cplx {
                return std::sin(w * t) / (std::exp(beta * t) + 1.0);
            };
        case KernelKind::Cosh:
            return [w, beta](double t) -> cplx {
                return std::cos(w * t) / std::cosh(beta * t);
            };
    }
    throw Error(ErrorCode::Internal, "transform_defining_integrand: unreachable");
}

double transform_decay_rate(const TransformQuery& q) {
    return q.kernel == KernelKind::Bose ? kTwoPi : q.beta;
}

cplx g_sine_transform(int n, const cplx& a, const cplx& s, double w) {
    if (n < 0) throw DomainError("g_sine_transform: n must be non-negative");
    if (!(w > 0.0)) throw DomainError("g_sine_transform: w must be positive");
    if (!(a.real() > 0.0)) throw DomainError("g_sine_transform: Re(a) must be positive");
    if (!(2.0 * n < s.real())) throw DomainError("g_sine_transform: requires 2n < Re(s)");

    const LaguerreResult lag = laguerre_explicit(2 * n, s - (2.0 * n + 1.0), a * w);
    const cplx log_scale = log_gamma(cplx(2.0 * n + 1.0)) - log_gamma(s) - a * w +
                           (s - (2.0 * n + 1.0)) * std::log(w);
    cplx value = 0.5 * kPi * std::exp(log_scale) * lag.value;
    if (n % 2 != 0) value = -value;
    return value;
}

}  // namespace hzeta
