#include "closed_forms.hpp"

#include <cmath>
#include <vector>

#include "errors.hpp"
#include "gamma.hpp"
#include "laguerre.hpp"
#include "transforms.hpp"
#include "zeta.hpp"

namespace hzeta {

namespace {

cplx two_pow(const cplx& e) { return std::exp(e * std::log(cplx(2.0, 0.0))); }

void check_aux_domain(const cplx& a, const cplx& sigma) {
    if (!is_finite(a) || !is_finite(sigma)) throw DomainError("kernel_aux: non-finite argument");
    if (!(a.real() > 0.0)) throw DomainError("kernel_aux: Re(a) must be positive");
    if (std::abs(sigma - 1.0) < kPoleGuard)
        throw PoleProximity("kernel_aux: sigma within pole guard of 1");
}

std::vector<double> binomial_row(int m) {
    std::vector<double> row(m + 1, 1.0);
    for (int j = 1; j <= m; ++j) row[j] = row[j - 1] * (m - j + 1) / j;
    return row;
}

}  // namespace

cplx kernel_aux(int kind, AuxVariant variant, const cplx& a, const cplx& sigma) {
    check_aux_domain(a, sigma);
    switch (kind) {
        case 1:
            return hurwitz_zeta(sigma, a) - 0.5 * cpow(a, -sigma) -
                   cpow(a, 1.0 - sigma) / (sigma - 1.0);
        case 2:
            return 4.0 * two_pow(-sigma) * hurwitz_zeta(sigma, 0.5 * a) -
                   2.0 * hurwitz_zeta(sigma, a) - cpow(a, -sigma);
        case 3:
            if (variant == AuxVariant::Printed) {
                return cpow(a, 1.0 - sigma) / (sigma - 1.0) - hurwitz_zeta(sigma, a) -
                       two_pow(-sigma) * hurwitz_zeta(sigma, 0.5 * a);
            }
            return cpow(a, 1.0 - sigma) / (sigma - 1.0) - 2.0 * hurwitz_zeta(sigma, a) +
                   2.0 * two_pow(-sigma) * hurwitz_zeta(sigma, 0.5 * a);
        case 4: {
            const cplx diff =
                hurwitz_zeta(sigma, 0.25 * (a + 1.0)) - hurwitz_zeta(sigma, 0.25 * (a + 3.0));
            const cplx printed = two_pow(-2.0 * sigma) * diff;
            return variant == AuxVariant::Printed ? printed : 4.0 * printed;
        }
        default:
            throw InvalidArgument("kernel_aux: kind must be 1..4");
    }
}

cplx closed_form_value(const FamilySpec& spec, const Candidate& cand) {
    validate(spec);
    if (is_open_family(spec.family))
        throw DomainError("closed form requested for an open (quadrature-only) family");

    const int m_top = is_even_family(spec.family) ? 2 * spec.n : 2 * spec.n + 1;
    const cplx shift = spec.s - static_cast<double>(m_top);

    // Reject the whole point if any summand lands on the shifted pole.
    for (int m = 0; m <= m_top; ++m) {
        if (std::abs(shift + static_cast<double>(m) - 1.0) < kPoleGuard)
            throw PoleProximity("closed form: a summand hits the sigma = 1 pole");
    }

    const std::vector<double> binom = binomial_row(m_top);
    cplx sum(0.0, 0.0);
    cplx a_pow(1.0, 0.0);
    for (int m = 0; m <= m_top; ++m) {
        cplx term = binom[m] * a_pow * kernel_aux(cand.aux_kind, cand.aux_variant, spec.a,
                                                  shift + static_cast<double>(m));
        if ((m + spec.n) % 2 != 0) term = -term;
        sum += term;
        a_pow *= spec.a;
    }
    return 0.5 * static_cast<double>(cand.sign) * sum;
}

cplx closed_even(Family f, int n, const cplx& a, const cplx& s, const std::string& candidate_id,
                 const ResolutionState* rs) {
    if (!is_even_family(f)) throw InvalidArgument("closed_even: not an even family");
    const Candidate& cand =
        candidate_id == "canonical" ? canonical_candidate(f, rs) : find_candidate(f, candidate_id);
    FamilySpec spec;
    spec.family = f;
    spec.n = n;
    spec.a = a;
    spec.s = s;
    return closed_form_value(spec, cand);
}

cplx closed_odd(Family f, int n, const cplx& a, const cplx& s, const std::string& candidate_id,
                const ResolutionState* rs) {
    if (!is_odd_family(f)) throw InvalidArgument("closed_odd: not an odd family");
    const Candidate& cand =
        candidate_id == "canonical" ? canonical_candidate(f, rs) : find_candidate(f, candidate_id);
    FamilySpec spec;
    spec.family = f;
    spec.n = n;
    spec.a = a;
    spec.s = s;
    return closed_form_value(spec, cand);
}

cplx laguerre_route(int n, const cplx& a, const cplx& s, double tol) {
    if (n < 0) throw DomainError("laguerre_route: n must be non-negative");
    if (!(a.real() > 0.0)) throw DomainError("laguerre_route: Re(a) must be positive");
    if (!(s.real() > 2.0 * n)) throw DomainError("laguerre_route: requires Re(s) > 2n");

    const cplx lag_k = s - (2.0 * n + 1.0);
    const Integrand f = [=](double w) -> cplx {
        if (w == 0.0) return cplx(0.0, 0.0);
        const TransformQuery bose{KernelKind::Bose, w, kTwoPi};
        const cplx bracket = 2.0 * kernel_sine_transform(bose);
        return std::exp(-a * w + lag_k * std::log(w)) *
               laguerre_explicit(2 * n, lag_k, a * w).value * bracket;
    };
    const QuadratureOutcome q = integrate_half_line(f, tol, a.real());
    cplx scale = 0.5 * std::exp(log_gamma(cplx(2.0 * n + 1.0)) - log_gamma(s));
    if (n % 2 != 0) scale = -scale;
    return scale * q.value;
}

cplx kernel_mellin(KernelKind kind, const cplx& s, const cplx& a, const std::string& candidate_id,
                   const ResolutionState* rs) {
    double factor = 0.0;
    if (candidate_id == "canonical") {
        factor = canonical_mellin_factor(kind, rs);
    } else {
        for (const MellinCandidate& mc : mellin_candidates(kind)) {
            if (mc.id == candidate_id) {
                factor = mc.factor;
                break;
            }
        }
        if (factor == 0.0)
            throw InvalidArgument("kernel_mellin: unknown candidate '" + candidate_id + "'");
    }
    return factor * kernel_mellin_base(kind, s, a);
}

}  // namespace hzeta
