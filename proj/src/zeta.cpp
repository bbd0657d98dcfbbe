#include "zeta.hpp"

#include <array>
#include <cmath>

#include "errors.hpp"
#include "gamma.hpp"

namespace hzeta {

namespace {

// B_{2j}/(2j)! for j = 1..15.
constexpr std::array<double, 15> kBernoulliOverFact = {
    8.3333333333333333333e-02,  -1.3888888888888888889e-03, 3.3068783068783068783e-05,
    -8.2671957671957671958e-07, 2.0876756987868098979e-08,  -5.2841901386874931848e-10,
    1.3382536530684678833e-11,  -3.3896802963225828668e-13, 8.5860620562778445641e-15,
    -2.1748686985580618730e-16, 5.5090028283602295152e-18,  -1.3954464685812523341e-19,
    3.5347070396294674717e-21,  -8.9535174270375468504e-23, 2.2679524523376830603e-24,
};

void check_zeta_domain(const cplx& s, const cplx& a) {
    if (!is_finite(s) || !is_finite(a)) throw DomainError("hurwitz_zeta: non-finite argument");
    if (!(a.real() > 0.0)) throw DomainError("hurwitz_zeta: Re(a) must be positive");
    if (std::abs(s - 1.0) < kPoleGuard) throw PoleProximity("hurwitz_zeta: s within pole guard of 1");
}

int shift_count(const cplx& s, const cplx& a) {
    const int im_part = static_cast<int>(std::ceil(std::abs(s.imag()) / 2.0));
    if (s.real() >= 0.0) return std::max(15, im_part + 15);
    // For Re s < 0 the direct terms grow like (a+k)^{|Re s|}, so a large shift
    // amplifies cancellation against the integral term. Keep N just big
    // enough for the Bernoulli tail to stay an decreasing series.
    const int floor_n =
        static_cast<int>(std::ceil((std::abs(s) + 31.0) / 4.4 - a.real()));
    return std::max({6, floor_n, im_part + 6});
}

}  // namespace

cplx hurwitz_zeta(const cplx& s, const cplx& a) {
    check_zeta_domain(s, a);
    const int n_shift = shift_count(s, a);

    cplx sum(0.0, 0.0);
    for (int k = 0; k < n_shift; ++k) {
        sum += std::exp(-s * std::log(a + static_cast<double>(k)));
    }

    const cplx edge = a + static_cast<double>(n_shift);
    const cplx log_edge = std::log(edge);
    sum += std::exp((1.0 - s) * log_edge) / (s - 1.0);
    sum += 0.5 * std::exp(-s * log_edge);

    // Euler-Maclaurin corrections: B_{2j}/(2j)! * (s)_{2j-1} * edge^{-s-2j+1}.
    cplx rising = s;
    cplx edge_pow = std::exp((-s - 1.0) * log_edge);
    const cplx edge_inv2 = 1.0 / (edge * edge);
    for (std::size_t j = 1; j <= kBernoulliOverFact.size(); ++j) {
        sum += kBernoulliOverFact[j - 1] * rising * edge_pow;
        rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        edge_pow *= edge_inv2;
    }
    return sum;
}

cplx hermite_zeta(const cplx& s, const cplx& a, double tol) {
    check_zeta_domain(s, a);
    const Integrand tail = [s, a](double t) -> cplx {
        if (t == 0.0) return s * cpow(a, -s - 1.0) / kTwoPi;
        return power_sin_factor(a, s, t) / std::expm1(kTwoPi * t);
    };
    const QuadratureOutcome tail_int = integrate_half_line(tail, tol, kTwoPi);
    return 0.5 * cpow(a, -s) + cpow(a, 1.0 - s) / (s - 1.0) + 2.0 * tail_int.value;
}

cplx hurwitz_zeta_ds(const cplx& s, const cplx& a, double tol) {
    check_zeta_domain(s, a);
    const cplx one(1.0, 0.0);
    const double rate = kTwoPi * a.real();

    // After t -> a t the damping weight becomes 1/(e^{2 pi a t} - 1) and the
    // algebraic factors lose their a-dependence.
    auto weight = [a](double t) -> cplx { return 1.0 / cexpm1(kTwoPi * a * t); };

    const Integrand f_sin = [&, s](double t) -> cplx {
        if (t == 0.0) return s / (kTwoPi * a);
        return power_sin_factor(one, s, t) * weight(t);
    };
    const Integrand f_cos_atan = [&, s](double t) -> cplx {
        if (t == 0.0) return 1.0 / (kTwoPi * a);
        return power_cos_factor(one, s, t) * std::atan(t) * weight(t);
    };
    const Integrand f_sin_log = [&, s](double t) -> cplx {
        if (t == 0.0) return cplx(0.0, 0.0);
        return power_sin_factor(one, s, t) * std::log1p(t * t) * weight(t);
    };

    const cplx j_sin = integrate_half_line(f_sin, tol, rate).value;
    const cplx j_cos_atan = integrate_half_line(f_cos_atan, tol, rate).value;
    const cplx j_sin_log = integrate_half_line(f_sin_log, tol, rate).value;

    const cplx log_a = std::log(a);
    const cplx sm1 = s - 1.0;
    const cplx a_pow_1ms = std::exp((1.0 - s) * log_a);
    return -0.5 * std::exp(-s * log_a) * log_a - a_pow_1ms * log_a / sm1 -
           a_pow_1ms / (sm1 * sm1) - 2.0 * a_pow_1ms * log_a * j_sin +
           2.0 * a_pow_1ms * j_cos_atan - a_pow_1ms * j_sin_log;
}

cplx kernel_mellin_base(KernelKind kind, const cplx& s, const cplx& a) {
    if (!is_finite(s) || !is_finite(a)) throw DomainError("kernel_mellin: non-finite argument");
    if (!(s.real() > 1.0)) throw DomainError("kernel_mellin: Re(s) must exceed 1");
    const bool boundary_a = std::abs(a) < kPoleGuard;
    if (kind == KernelKind::Bose || kind == KernelKind::Fermi) {
        if (!(a.real() > 0.0) || boundary_a)
            throw DomainError("kernel_mellin: Re(a) must be positive for this kernel");
    } else if (a.real() < 0.0) {
        throw DomainError("kernel_mellin: Re(a) must be non-negative");
    }

    const cplx g = gamma_fn(s);
    const cplx two_pow = std::exp(-s * std::log(cplx(2.0, 0.0)));
    switch (kind) {
        case KernelKind::Bose:
            return g * hurwitz_zeta(s, a);
        case KernelKind::Fermi:
            return g * (2.0 * two_pow * hurwitz_zeta(s, 0.5 * a) - hurwitz_zeta(s, a));
        case KernelKind::Sinh:
            if (boundary_a) {
                // zeta(s,a) - 2^{-s} zeta(s,a/2) has cancelling a^{-s}
                // singularities as a -> 0; the recurrence-shifted form is the
                // same value without them.
                return g * (hurwitz_zeta(s, a + 1.0) - two_pow * hurwitz_zeta(s, 0.5 * a + 1.0));
            }
            return g * (hurwitz_zeta(s, a) - two_pow * hurwitz_zeta(s, 0.5 * a));
        case KernelKind::Cosh:
            return g * two_pow * two_pow *
                   (hurwitz_zeta(s, 0.25 * (a + 1.0)) - hurwitz_zeta(s, 0.25 * (a + 3.0)));
    }
    throw Error(ErrorCode::Internal, "kernel_mellin: unreachable");
}

Integrand mellin_integrand(KernelKind kind, const cplx& s, const cplx& a) {
    switch (kind) {
        case KernelKind::Bose:
            return [s, a](double t) -> cplx {
                if (t == 0.0) return s.real() == 2.0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
                return std::exp((s - 1.0) * std::log(cplx(t, 0.0)) - a * t) / (-std::expm1(-t));
            };
        case KernelKind::Fermi:
            return [s, a](double t) -> cplx {
                if (t == 0.0) return cplx(0.0, 0.0);
                return std::exp((s - 1.0) * std::log(cplx(t, 0.0)) - a * t) / (1.0 + std::exp(-t));
            };
        case KernelKind::Sinh:
            return [s, a](double t) -> cplx {
                if (t == 0.0) return s.real() == 2.0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
                return std::exp((s - 1.0) * std::log(cplx(t, 0.0)) - a * t) / std::sinh(t);
            };
        case KernelKind::Cosh:
            return [s, a](double t) -> cplx {
                if (t == 0.0) return cplx(0.0, 0.0);
                return std::exp((s - 1.0) * std::log(cplx(t, 0.0)) - a * t) / std::cosh(t);
            };
    }
    throw Error(ErrorCode::Internal, "mellin_integrand: unreachable");
}

double mellin_decay_rate(KernelKind kind, const cplx& a) {
    switch (kind) {
        case KernelKind::Bose:
        case KernelKind::Fermi:
            return a.real();
        case KernelKind::Sinh:
        case KernelKind::Cosh:
            return a.real() + 1.0;
    }
    return 1.0;
}

}  // namespace hzeta
