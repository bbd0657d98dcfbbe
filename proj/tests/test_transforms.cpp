#include <cmath>

#include <doctest.h>

#include "errors.hpp"
#include "gamma.hpp"
#include "oracles.hpp"
#include "quadrature.hpp"
#include "reference_values.hpp"
#include "test_util.hpp"
#include "transforms.hpp"

using hzeta::cplx;
using hzeta::KernelKind;
using hzeta::TransformQuery;
using hzeta::kernel_sine_transform;
using testutil::rel_err;

TEST_CASE("closed forms at w = 1") {
    CHECK(rel_err(kernel_sine_transform({KernelKind::Bose, 1.0, 0.0}), ref::kBoseSineW1) < 1e-14);
    CHECK(rel_err(kernel_sine_transform({KernelKind::Sinh, 1.0, hzeta::kPi}), ref::kSinhSineW1) <
          1e-14);
    CHECK(rel_err(kernel_sine_transform({KernelKind::Fermi, 1.0, hzeta::kPi}), ref::kFermiSineW1) <
          1e-14);
    CHECK(rel_err(kernel_sine_transform({KernelKind::Cosh, 1.0, hzeta::kPi}), ref::kCoshCosW1) <
          1e-14);
}

TEST_CASE("small-w behaviour") {
    // bose: w/24 + O(w^3).
    const double w = 1e-8;
    CHECK(rel_err(kernel_sine_transform({KernelKind::Bose, w, 0.0}), w / 24.0) < 1e-12);
    CHECK(kernel_sine_transform({KernelKind::Bose, 0.0, 0.0}) == 0.0);
    CHECK(kernel_sine_transform({KernelKind::Sinh, 0.0, hzeta::kPi}) == 0.0);
    CHECK(kernel_sine_transform({KernelKind::Fermi, 0.0, hzeta::kPi}) == 0.0);
    // cosh cosine transform at w = 0 with beta = pi: 1/2.
    CHECK(kernel_sine_transform({KernelKind::Cosh, 0.0, hzeta::kPi}) == doctest::Approx(0.5));
    // Series branch agrees with the direct formula evaluated at the same w
    // (the direct form keeps ~4e-14 relative accuracy this far from 0).
    for (double wc : {0.1, 0.2, 0.2499}) {
        const double series_side = kernel_sine_transform({KernelKind::Bose, wc, 0.0});
        const double direct_side = 0.5 * (1.0 / std::expm1(wc) + 0.5 - 1.0 / wc);
        CHECK(std::abs(series_side - direct_side) < 4e-14 * std::max(1.0, 1.0 / wc));
    }
}

TEST_CASE("transform sense per kernel") {
    CHECK(hzeta::transform_sense(KernelKind::Cosh) == hzeta::TransformSense::Cosine);
    for (KernelKind k : {KernelKind::Bose, KernelKind::Sinh, KernelKind::Fermi}) {
        CHECK(hzeta::transform_sense(k) == hzeta::TransformSense::Sine);
    }
}

TEST_CASE("defining integrals reproduce every closed form to 1e-10 absolute") {
    for (KernelKind k : {KernelKind::Bose, KernelKind::Sinh, KernelKind::Fermi, KernelKind::Cosh}) {
        std::vector<double> betas = {hzeta::kPi, hzeta::kTwoPi};
        if (k == KernelKind::Cosh) betas.push_back(0.5 * hzeta::kPi);
        for (double beta : betas) {
            for (double w : {0.1, 0.5, 1.0, 2.0, 5.0}) {
                const TransformQuery q{k, w, beta};
                const auto quad = hzeta::integrate_half_line(hzeta::transform_defining_integrand(q),
                                                             1e-12, hzeta::transform_decay_rate(q));
                CAPTURE(static_cast<int>(k));
                CAPTURE(beta);
                CAPTURE(w);
                CHECK(std::abs(quad.value - cplx(kernel_sine_transform(q), 0.0)) < 1e-10);
            }
            if (k == KernelKind::Bose) break;  // fixed-scale entry
        }
    }
}

TEST_CASE("algebraic factor: dual representation for real parameters") {
    for (double a : {0.7, 1.0, 2.3}) {
        for (double s : {1.5, 2.0, 3.7, 6.0}) {
            for (double t : {1e-9, 0.01, 0.5, 1.0, 3.0, 25.0}) {
                const double direct =
                    std::sin(s * std::atan(t / a)) / std::pow(a * a + t * t, s / 2.0);
                const cplx stable = hzeta::power_sin_factor({a, 0.0}, {s, 0.0}, t);
                CAPTURE(a);
                CAPTURE(s);
                CAPTURE(t);
                CHECK(std::abs(stable.imag()) < 1e-15 * std::max(1.0, std::abs(stable.real())));
                if (std::abs(direct) > 1e-280) {
                    CHECK(rel_err(stable.real(), direct) < 1e-12);
                }
                const double direct_cos =
                    std::cos(s * std::atan(t / a)) / std::pow(a * a + t * t, s / 2.0);
                CHECK(rel_err(hzeta::power_cos_factor({a, 0.0}, {s, 0.0}, t).real(), direct_cos) <
                      1e-12);
            }
        }
    }
}

TEST_CASE("g transform: trivial degree-0 shape") {
    // L_0 == 1 collapses the transform to (pi / 2 Gamma(s)) e^{-aw} w^{s-1}.
    CHECK(rel_err(hzeta::g_sine_transform(0, {1, 0}, {2, 0}, 1.0), ref::kGSine0121) < 1e-13);
    const cplx s{3.3, 0.7};
    const cplx a{1.2, -0.3};
    const double w = 1.7;
    const cplx expect = 0.5 * hzeta::kPi * std::exp(-a * w + (s - 1.0) * std::log(w)) /
                        std::exp(hzeta::log_gamma(s));
    CHECK(rel_err(hzeta::g_sine_transform(0, a, s, w), expect) < 1e-12);
}

TEST_CASE("g transform against oscillatory panel quadrature") {
    // n = 0, a = 1, s = 2, w = 1: the defining integral decays like t^{-3}.
    const double got1 = oracle::sine_transform_panels(
        [](double t) { return 2.0 * t / ((1.0 + t * t) * (1.0 + t * t)); }, 1.0, 1e-13);
    CHECK(rel_err(hzeta::g_sine_transform(0, {1, 0}, {2, 0}, 1.0), got1) < 1e-9);

    // n = 1, a = 1, s = 6, w = 2.
    const double got2 = oracle::sine_transform_panels(
        [](double t) {
            return t * t * hzeta::power_sin_factor({1, 0}, {6, 0}, t).real();
        },
        2.0, 1e-13);
    CHECK(rel_err(hzeta::g_sine_transform(1, {1, 0}, {6, 0}, 2.0), got2) < 1e-9);
    CHECK(rel_err(hzeta::g_sine_transform(1, {1, 0}, {6, 0}, 2.0), ref::kGSine1162) < 1e-12);
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(kernel_sine_transform({KernelKind::Bose, -1.0, 0.0}), hzeta::DomainError);
    CHECK_THROWS_AS(kernel_sine_transform({KernelKind::Sinh, 1.0, -2.0}), hzeta::DomainError);
    CHECK_THROWS_AS(hzeta::g_sine_transform(0, {1, 0}, {2, 0}, 0.0), hzeta::DomainError);
    CHECK_THROWS_AS(hzeta::g_sine_transform(1, {1, 0}, {2, 0}, 1.0), hzeta::DomainError);
    CHECK_THROWS_AS(hzeta::g_sine_transform(0, {-1, 0}, {2, 0}, 1.0), hzeta::DomainError);
}
