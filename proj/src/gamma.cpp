#include "gamma.hpp"

#include <array>
#include <cmath>

#include "errors.hpp"

namespace hzeta {

namespace {

// Lanczos coefficients for g = 607/128 (Godfrey's set); relative accuracy of
// the resulting Gamma is ~1e-15 over the right half plane.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosC = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

cplx lanczos_log_gamma(const cplx& z) {
    // Valid for Re z >= 0.5.
    const cplx zm1 = z - 1.0;
    cplx acc(kLanczosC[0], 0.0);
    for (std::size_t k = 1; k < kLanczosC.size(); ++k) {
        acc += kLanczosC[k] / (zm1 + static_cast<double>(k));
    }
    const cplx t = zm1 + kLanczosG + 0.5;
    return kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

cplx log_gamma(const cplx& z) {
    if (!is_finite(z)) throw DomainError("log_gamma: non-finite argument");
    if (z.real() < 0.5) {
        // Reject the poles at 0, -1, -2, ...
        const double nearest = std::round(z.real());
        if (nearest <= 0.0 && std::abs(z.real() - nearest) < kPoleGuard &&
            std::abs(z.imag()) < kPoleGuard) {
            throw PoleProximity("log_gamma: argument within pole guard of a non-positive integer");
        }
        // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z).
        const cplx sin_pi_z = std::sin(kPi * z);
        return std::log(cplx(kPi, 0.0)) - std::log(sin_pi_z) - lanczos_log_gamma(1.0 - z);
    }
    return lanczos_log_gamma(z);
}

cplx gamma_fn(const cplx& z) { return std::exp(log_gamma(z)); }

}  // namespace hzeta
