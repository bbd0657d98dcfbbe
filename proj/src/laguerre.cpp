#include "laguerre.hpp"

#include <cmath>

#include "errors.hpp"
#include "gamma.hpp"

namespace hzeta {

namespace {

void check_query(int n, const cplx& k) {
    if (n < 0) throw DomainError("laguerre: degree must be non-negative");
    if (n > kMaxLaguerreDegree) throw DomainError("laguerre: degree above supported cap");
    for (int j = 0; j <= n; ++j) {
        const cplx kj = k + static_cast<double>(j);
        const double nearest = std::round(kj.real());
        if (nearest <= -1.0 && std::abs(kj.real() - nearest) < kPoleGuard &&
            std::abs(kj.imag()) < kPoleGuard) {
            throw DomainError("laguerre: k + j within pole guard of a negative integer");
        }
    }
}

}  // namespace

LaguerreResult laguerre_explicit(int n, const cplx& k, const cplx& x) {
    check_query(n, k);
    const cplx lg_top = log_gamma(k + static_cast<double>(n) + 1.0);

    cplx sum(0.0, 0.0);
    double max_term = 0.0;
    cplx x_pow(1.0, 0.0);
    for (int j = 0; j <= n; ++j) {
        const cplx lg_den = log_gamma(cplx(n - j + 1.0)) + log_gamma(k + (j + 1.0)) +
                            log_gamma(cplx(j + 1.0));
        cplx term = std::exp(lg_top - lg_den) * x_pow;
        if (j % 2 != 0) term = -term;
        sum += term;
        max_term = std::max(max_term, std::abs(term));
        x_pow *= x;
    }

    LaguerreResult r;
    r.value = sum;
    const double denom = std::abs(sum);
    r.cond = denom > 0.0 ? max_term / denom : std::numeric_limits<double>::infinity();
    if (n == 0) r.cond = 1.0;
    return r;
}

cplx laguerre_recurrence(int n, const cplx& k, const cplx& x) {
    check_query(n, k);
    cplx prev(1.0, 0.0);
    if (n == 0) return prev;
    cplx cur = k + 1.0 - x;
    for (int m = 1; m < n; ++m) {
        const double md = static_cast<double>(m);
        const cplx next = ((2.0 * md + k + 1.0 - x) * cur - (md + k) * prev) / (md + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace hzeta
