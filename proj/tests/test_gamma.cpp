#include <cmath>

#include <doctest.h>

#include "gamma.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"
#include "test_util.hpp"

using hzeta::cplx;
using hzeta::log_gamma;
using testutil::rel_err;

TEST_CASE("log_gamma at exact factorial points") {
    CHECK(std::abs(log_gamma(cplx(1.0, 0.0))) < 1e-14);
    CHECK(std::abs(log_gamma(cplx(5.0, 0.0)) - std::log(24.0)) < 1e-14);
    CHECK(std::abs(log_gamma(cplx(0.5, 0.0)) - 0.5 * std::log(hzeta::kPi)) < 1e-14);
}

TEST_CASE("log_gamma matches the frozen high-precision value at 0.5+1i") {
    const cplx got = log_gamma(cplx(0.5, 1.0));
    CHECK(std::abs(got.real() - ref::kLogGammaHalfPlusIRe) < 1e-14);
    CHECK(std::abs(got.imag() - ref::kLogGammaHalfPlusIIm) < 1e-14);
}

TEST_CASE("product oracle is itself trustworthy at exact points") {
    CHECK(std::abs(oracle::log_gamma_product(cplx(1.0, 0.0))) < 5e-14);
    CHECK(std::abs(oracle::log_gamma_product(cplx(5.0, 0.0)) - std::log(24.0)) < 5e-14);
    CHECK(std::abs(oracle::log_gamma_product(cplx(0.5, 0.0)) - 0.5 * std::log(hzeta::kPi)) <
          5e-14);
}

TEST_CASE("exp(log_gamma) within 1e-13 of the product oracle across the band") {
    const cplx points[] = {{2.5, 0.0},  {0.5, 1.0}, {3.0, -2.0}, {10.0, 10.0},
                           {30.0, 0.0}, {1.0, 25.0}, {50.0, 0.0}, {0.7, -40.0}};
    for (const cplx& z : points) {
        const cplx got = std::exp(log_gamma(z));
        const cplx want = std::exp(oracle::log_gamma_product(z));
        CAPTURE(z.real());
        CAPTURE(z.imag());
        CHECK(rel_err(got, want) < 1e-13);
    }
}

TEST_CASE("reflection region agrees with the oracle through exp") {
    const cplx points[] = {{-3.3, 0.0}, {-0.5, 2.0}, {-7.2, -1.5}, {0.2, 0.0}};
    for (const cplx& z : points) {
        const cplx got = std::exp(log_gamma(z));
        const cplx want = std::exp(oracle::log_gamma_product(z));
        CAPTURE(z.real());
        CHECK(rel_err(got, want) < 1e-12);
    }
}

TEST_CASE("reflection identity Gamma(z) Gamma(1-z) = pi/sin(pi z)") {
    for (const cplx z : {cplx(-2.7, 0.4), cplx(0.3, -1.2), cplx(-5.5, 0.0)}) {
        const cplx lhs = std::exp(log_gamma(z) + log_gamma(1.0 - z));
        const cplx rhs = hzeta::kPi / std::sin(hzeta::kPi * z);
        CHECK(rel_err(lhs, rhs) < 1e-12);
    }
}

TEST_CASE("non-positive integers are rejected") {
    CHECK_THROWS_AS(log_gamma(cplx(0.0, 0.0)), hzeta::PoleProximity);
    CHECK_THROWS_AS(log_gamma(cplx(-1.0, 0.0)), hzeta::PoleProximity);
    CHECK_THROWS_AS(log_gamma(cplx(-5.0 + 1e-9, 1e-9)), hzeta::PoleProximity);
    CHECK_NOTHROW(log_gamma(cplx(-5.0, 0.5)));  // off-axis is fine
}
