#include "oracles.hpp"

#include <cmath>
#include <vector>

namespace oracle {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

cplx clog1p(cplx z) {
    const double x = z.real(), y = z.imag();
    return {0.5 * std::log1p(2.0 * x + x * x + y * y), std::atan2(y, 1.0 + x)};
}

}  // namespace

cplx log_gamma_product(cplx z, long terms) {
    if (z.real() < 0.5) {
        // Reflection; compare via exp to dodge the 2*pi*i ambiguity.
        return std::log(kPi / std::sin(kPi * z)) - log_gamma_product(1.0 - z, terms);
    }
    cplx sum = -std::log(z);
    cplx comp = 0.0;  // Kahan compensation
    for (long n = terms; n >= 1; --n) {
        const double inv_n = 1.0 / static_cast<double>(n);
        const cplx term = z * std::log1p(inv_n) - clog1p(z * inv_n);
        const cplx y = term - comp;
        const cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    // Tail of sum_{n>N} sum_{k>=2} (-1)^{k+1} (z - z^k)/(k n^k) through k = 4,
    // with sum_{n>N} n^{-k} by Euler-Maclaurin.
    const double N = static_cast<double>(terms);
    const double s2 = 1.0 / N - 1.0 / (2.0 * N * N) + 1.0 / (6.0 * N * N * N);
    const double s3 = 1.0 / (2.0 * N * N) - 1.0 / (2.0 * N * N * N);
    const double s4 = 1.0 / (3.0 * N * N * N);
    const cplx z2 = z * z;
    sum += -(z - z2) / 2.0 * s2 + (z - z2 * z) / 3.0 * s3 - (z - z2 * z2) / 4.0 * s4;
    return sum;
}

cplx zeta_direct_series(cplx s, cplx a, double* tail_bound, long terms) {
    cplx sum = 0.0;
    cplx comp = 0.0;
    for (long k = terms - 1; k >= 0; --k) {
        const cplx term = std::exp(-s * std::log(a + static_cast<double>(k)));
        const cplx y = term - comp;
        const cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    // Midpoint tail: sum_{k>=K} (a+k)^{-s} ~ (a+K-1/2)^{1-s}/(s-1); the
    // midpoint rule's second-order error bounds the rest.
    const cplx edge = a + (static_cast<double>(terms) - 0.5);
    sum += std::exp((1.0 - s) * std::log(edge)) / (s - 1.0);
    if (tail_bound != nullptr) {
        const double sr = s.real();
        const double mag = std::abs(a + static_cast<double>(terms));
        *tail_bound = std::abs(s) * std::abs(s + 1.0) / 24.0 * std::pow(mag, -sr - 1.0) /
                      (sr + 1.0) * 8.0;
    }
    return sum;
}

cplx central_difference(const std::function<cplx(cplx)>& f, cplx at, double h) {
    return (f(at + h) - f(at - h)) / (2.0 * h);
}

cplx rodrigues_laguerre(int n, cplx k, cplx x) {
    // Coefficients c_m of e^{-x} sum_m c_m x^{k+m}, starting from c_n = 1.
    std::vector<cplx> c(n + 1, cplx(0.0));
    c[n] = 1.0;
    for (int d = 0; d < n; ++d) {
        std::vector<cplx> next(n + 1, cplx(0.0));
        for (int m = 0; m <= n; ++m) {
            if (c[m] == cplx(0.0)) continue;
            next[m] -= c[m];                                      // (e^{-x})' factor
            if (m > 0) next[m - 1] += c[m] * (k + static_cast<double>(m));  // monomial derivative
        }
        c.swap(next);
    }
    // L = e^{x} x^{-k}/n! * result: the prefactors cancel the basis.
    cplx value = 0.0;
    cplx x_pow = 1.0;
    double factorial = 1.0;
    for (int m = 1; m <= n; ++m) factorial *= m;
    for (int m = 0; m <= n; ++m) {
        value += c[m] * x_pow;
        x_pow *= x;
    }
    return value / factorial;
}

double sine_transform_panels(const std::function<double(double)>& g, double w, double abs_stop,
                             long max_panels) {
    const double panel_width = kPi / w;
    double sum = 0.0;
    for (long k = 0; k < max_panels; ++k) {
        const double lo = k * panel_width;
        const double hi = lo + panel_width;
        const double panel = simpson([&](double t) { return g(t) * std::sin(w * t); }, lo, hi, 32);
        sum += panel;
        if (k > 8 && std::abs(panel) < abs_stop) break;
    }
    return sum;
}

double simpson(const std::function<double(double)>& f, double lo, double hi, int intervals) {
    if (intervals % 2 != 0) ++intervals;
    const double h = (hi - lo) / intervals;
    double sum = f(lo) + f(hi);
    for (int i = 1; i < intervals; ++i) {
        sum += f(lo + i * h) * (i % 2 == 0 ? 2.0 : 4.0);
    }
    return sum * h / 3.0;
}

double mellin_series_sinh(double s, double a, long terms) {
    double sum = 0.0;
    for (long k = terms - 1; k >= 0; --k) sum += 2.0 * std::pow(a + 2.0 * k + 1.0, -s);
    const double edge = a + 2.0 * (terms - 0.5) + 1.0;
    sum += std::pow(edge, 1.0 - s) / (s - 1.0);  // midpoint tail, step 2
    return sum;
}

double mellin_series_cosh(double s, double a, long terms) {
    double sum = 0.0;
    for (long k = terms - 1; k >= 0; --k) {
        const double term = 2.0 * std::pow(a + 2.0 * k + 1.0, -s);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

double mellin_series_fermi(double s, double a, long terms) {
    double sum = 0.0;
    for (long k = terms - 1; k >= 0; --k) {
        const double term = std::pow(a + static_cast<double>(k), -s);
        sum += (k % 2 == 0) ? term : -term;
    }
    return sum;
}

}  // namespace oracle
