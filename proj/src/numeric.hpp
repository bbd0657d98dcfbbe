#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace hzeta {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

// Minimum allowed distance to a pole (s = 1, non-positive integers of the
// gamma function, shifted poles inside the binomial sums). Points closer
// than this are rejected rather than extrapolated.
inline constexpr double kPoleGuard = 1e-6;

inline bool is_finite(const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// log(1+z) for complex z without cancellation near z = 0.
inline cplx clog1p(const cplx& z) {
    const double x = z.real();
    const double y = z.imag();
    return {0.5 * std::log1p(2.0 * x + x * x + y * y), std::atan2(y, 1.0 + x)};
}

// exp(z)-1 for complex z without cancellation near z = 0.
inline cplx cexpm1(const cplx& z) {
    if (std::abs(z.real()) + std::abs(z.imag()) > 1e-3) return std::exp(z) - 1.0;
    // Horner form of z(1 + z/2(1 + z/3(...))); the z^8 remainder is ~1e-25
    // relative at the cutoff.
    cplx r = 1.0 + z / 7.0;
    r = 1.0 + z * r / 6.0;
    r = 1.0 + z * r / 5.0;
    r = 1.0 + z * r / 4.0;
    r = 1.0 + z * r / 3.0;
    r = 1.0 + z * r / 2.0;
    return z * r;
}

// Principal-branch b^e = exp(e log b).
inline cplx cpow(const cplx& b, const cplx& e) {
    if (b == cplx(0.0)) return cplx(0.0);
    return std::exp(e * std::log(b));
}

// The two algebraic weight factors shared by all integral families:
//
//   power_sin_factor(a,s,t) = ((a-it)^{-s} - (a+it)^{-s}) / (2i)
//   power_cos_factor(a,s,t) = ((a-it)^{-s} + (a+it)^{-s}) / 2
//
// For real a and s these reduce to sin(s*atan(t/a))/(a^2+t^2)^{s/2} and the
// cosine analogue; the complex-power form keeps principal branches correct
// for complex a (Re a > 0 keeps a∓it off the cut) and stays exact as t -> 0,
// where the direct difference of the two powers would cancel to zero.
inline cplx power_sin_factor(const cplx& a, const cplx& s, double t) {
    const cplx ita = cplx(0.0, t) / a;
    const cplx p = -s * clog1p(-ita);
    const cplx q = -s * clog1p(ita);
    const cplx lead = std::exp(-s * std::log(a) + q);
    return lead * cexpm1(p - q) / cplx(0.0, 2.0);
}

inline cplx power_cos_factor(const cplx& a, const cplx& s, double t) {
    const cplx ita = cplx(0.0, t) / a;
    const cplx p = -s * clog1p(-ita);
    const cplx q = -s * clog1p(ita);
    const cplx lead = std::exp(-s * std::log(a) + q);
    return lead * (cexpm1(p - q) + 2.0) / 2.0;
}

}  // namespace hzeta
