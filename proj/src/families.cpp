#include "families.hpp"

#include <cmath>

#include "errors.hpp"

namespace hzeta {

const char* to_string(Family f) {
    switch (f) {
        case Family::BoseEven: return "bose-even";
        case Family::SinhEven: return "sinh-even";
        case Family::FermiEven: return "fermi-even";
        case Family::SechEven: return "sech-even";
        case Family::BoseOdd: return "bose-odd";
        case Family::SinhOdd: return "sinh-odd";
        case Family::FermiOdd: return "fermi-odd";
        case Family::SechOdd: return "sech-odd";
        case Family::OpenI: return "open-I";
        case Family::OpenT: return "open-T";
        case Family::OpenL: return "open-L";
    }
    return "?";
}

Family family_from_string(const std::string& name) {
    for (Family f : {Family::BoseEven, Family::SinhEven, Family::FermiEven, Family::SechEven,
                     Family::BoseOdd, Family::SinhOdd, Family::FermiOdd, Family::SechOdd,
                     Family::OpenI, Family::OpenT, Family::OpenL}) {
        if (name == to_string(f)) return f;
    }
    throw InvalidArgument("unknown family: " + name);
}

bool is_open_family(Family f) {
    return f == Family::OpenI || f == Family::OpenT || f == Family::OpenL;
}

bool is_even_family(Family f) {
    return f == Family::BoseEven || f == Family::SinhEven || f == Family::FermiEven ||
           f == Family::SechEven;
}

bool is_odd_family(Family f) {
    return f == Family::BoseOdd || f == Family::SinhOdd || f == Family::FermiOdd ||
           f == Family::SechOdd;
}

KernelKind family_kernel(Family f) {
    switch (f) {
        case Family::BoseEven:
        case Family::BoseOdd: return KernelKind::Bose;
        case Family::SinhEven:
        case Family::SinhOdd: return KernelKind::Sinh;
        case Family::FermiEven:
        case Family::FermiOdd: return KernelKind::Fermi;
        case Family::SechEven:
        case Family::SechOdd: return KernelKind::Cosh;
        default: throw InvalidArgument("open families have no kernel kind");
    }
}

double default_kernel_scale(Family f) {
    switch (family_kernel(f)) {
        case KernelKind::Bose: return kTwoPi;
        case KernelKind::Sinh: return kPi;
        case KernelKind::Fermi: return kPi;
        case KernelKind::Cosh: return 0.5 * kPi;
    }
    return kTwoPi;
}

Trig default_trig(Family f) {
    return is_even_family(f) ? Trig::SinFactor : Trig::CosFactor;
}

void validate(const FamilySpec& spec) {
    if (spec.n < 0) throw DomainError("family spec: n must be non-negative");
    if (spec.kernel_scale < 0.0 || !std::isfinite(spec.kernel_scale))
        throw DomainError("family spec: bad kernel_scale");
    if (is_open_family(spec.family)) {
        if (!(spec.q > 0.0) || !std::isfinite(spec.q)) throw DomainError("family spec: q must be positive");
        return;
    }
    if (!is_finite(spec.a) || !is_finite(spec.s)) throw DomainError("family spec: non-finite a or s");
    if (!(spec.a.real() > 0.0)) throw DomainError("family spec: Re(a) must be positive");
    if (is_even_family(spec.family)) {
        if (!(2.0 * spec.n < spec.s.real()))
            throw DomainError("family spec: even families need 0 <= 2n < Re(s)");
    } else {
        if (!(2.0 * spec.n + 1.0 < spec.s.real()))
            throw DomainError("family spec: odd families need 2n+1 < Re(s)");
    }
}

double effective_kernel_scale(const FamilySpec& spec) {
    if (is_open_family(spec.family)) return kTwoPi * spec.q;
    return spec.kernel_scale > 0.0 ? spec.kernel_scale : default_kernel_scale(spec.family);
}

namespace {

// Power of t by squaring; exact for the small exponents used here.
double tpow(double t, int m) {
    double r = 1.0;
    double b = t;
    for (int e = m; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

double kernel_weight(KernelKind k, double scale, double t) {
    switch (k) {
        case KernelKind::Bose: return 1.0 / std::expm1(scale * t);
        case KernelKind::Fermi: return 1.0 / (std::exp(scale * t) + 1.0);
        case KernelKind::Sinh: return 1.0 / std::sinh(scale * t);
        case KernelKind::Cosh: return 1.0 / std::cosh(scale * t);
    }
    return 0.0;
}

}  // namespace

Integrand family_integrand(const FamilySpec& spec, std::optional<Trig> trig) {
    validate(spec);

    if (is_open_family(spec.family)) {
        const int k = spec.n;
        const double rate = kTwoPi * spec.q;
        switch (spec.family) {
            case Family::OpenI:
                return [k, rate](double t) -> cplx {
                    if (t == 0.0) return 1.0 / rate;
                    return t / (tpow(1.0 + t * t, k + 1) * std::expm1(rate * t));
                };
            case Family::OpenT:
                return [k, rate](double t) -> cplx {
                    if (t == 0.0) return k == 0 ? 1.0 / rate : 0.0;
                    return tpow(t, k) * std::atan(t) / std::expm1(rate * t);
                };
            default:
                return [k, rate](double t) -> cplx {
                    if (t == 0.0) return 0.0;
                    return tpow(t, k) * std::log1p(t * t) / std::expm1(rate * t);
                };
        }
    }

    const KernelKind kern = family_kernel(spec.family);
    const double scale = effective_kernel_scale(spec);
    const Trig tr = trig.value_or(default_trig(spec.family));
    const int power = is_even_family(spec.family) ? 2 * spec.n : 2 * spec.n + 1;
    const cplx a = spec.a;
    const cplx s = spec.s;
    const bool pole_kernel = kern == KernelKind::Bose || kern == KernelKind::Sinh;
    if (pole_kernel && tr == Trig::CosFactor && power == 0)
        throw DomainError("family integrand: cosine factor with power 0 diverges at t = 0");

    return [=](double t) -> cplx {
        if (t == 0.0) {
            // The sine factor vanishes like s*t*a^{-s-1}, the cosine factor
            // tends to a^{-s}; pole kernels contribute 1/(scale*t).
            if (pole_kernel) {
                if (tr == Trig::SinFactor && power == 0) return s * cpow(a, -s - 1.0) / scale;
                if (tr == Trig::CosFactor && power == 1) return cpow(a, -s) / scale;
                return cplx(0.0, 0.0);
            }
            const double k0 = kern == KernelKind::Fermi ? 0.5 : 1.0;
            if (tr == Trig::CosFactor && power == 0) return cpow(a, -s) * k0;
            return cplx(0.0, 0.0);
        }
        const cplx factor =
            tr == Trig::SinFactor ? power_sin_factor(a, s, t) : power_cos_factor(a, s, t);
        return tpow(t, power) * factor * kernel_weight(kern, scale, t);
    };
}

double family_decay_rate(const FamilySpec& spec) { return effective_kernel_scale(spec); }

QuadratureOutcome family_quadrature(const FamilySpec& spec, double tol, std::optional<Trig> trig) {
    return integrate_half_line(family_integrand(spec, trig), tol, family_decay_rate(spec));
}

}  // namespace hzeta
