#include <cmath>

#include <doctest.h>

#include "closed_forms.hpp"
#include "errors.hpp"
#include "quadrature.hpp"
#include "reference_values.hpp"
#include "test_util.hpp"
#include "verification.hpp"
#include "zeta.hpp"

using hzeta::AuxVariant;
using hzeta::cplx;
using hzeta::Family;
using hzeta::FamilySpec;
using hzeta::kernel_aux;
using testutil::rel_err;

namespace {

// One shared resolution pass for the canonical-candidate tests.
const hzeta::ResolutionState& resolved_state() {
    static const hzeta::ResolutionState rs = [] {
        hzeta::ResolutionState state;
        hzeta::resolve_all(state);
        return state;
    }();
    return rs;
}

}  // namespace

TEST_CASE("auxiliary combinations: arithmetic anchors") {
    // bose combination at (1,2): pi^2/6 - 3/2.
    CHECK(rel_err(kernel_aux(1, AuxVariant::Printed, {1, 0}, {2, 0}), ref::kPi2Over6 - 1.5) <
          1e-13);
    // sech combination at (1,2): (zeta(2,1/2) - zeta(2,1))/16 = pi^2/48.
    CHECK(rel_err(kernel_aux(4, AuxVariant::Printed, {1, 0}, {2, 0}), ref::kPi2Over48) < 1e-13);
    CHECK(rel_err(kernel_aux(4, AuxVariant::Corrected, {1, 0}, {2, 0}), 4.0 * ref::kPi2Over48) <
          1e-13);
}

TEST_CASE("bose combination equals twice the continuation tail integral") {
    for (const cplx a : {cplx(0.7, 0.0), cplx(1.9, 0.0)}) {
        for (const cplx s : {cplx(2.5, 0.0), cplx(5.0, 0.0)}) {
            const auto tail = hzeta::integrate_half_line(
                [&](double t) -> cplx {
                    if (t == 0.0) return s * hzeta::cpow(a, -s - 1.0) / hzeta::kTwoPi;
                    return hzeta::power_sin_factor(a, s, t) / std::expm1(hzeta::kTwoPi * t);
                },
                1e-12, hzeta::kTwoPi);
            CHECK(rel_err(kernel_aux(1, AuxVariant::Printed, a, s), 2.0 * tail.value) < 1e-10);
        }
    }
}

TEST_CASE("even closed form collapses to half the auxiliary at n = 0") {
    for (const cplx a : {cplx(1.0, 0.0), cplx(2.3, 0.5)}) {
        for (const cplx s : {cplx(2.0, 0.0), cplx(4.7, -1.0)}) {
            const cplx collapsed = hzeta::closed_even(Family::BoseEven, 0, a, s, "printed");
            const cplx aux = 0.5 * kernel_aux(1, AuxVariant::Printed, a, s);
            CHECK(collapsed == aux);  // same arithmetic path, bit-exact
        }
    }
    CHECK(rel_err(hzeta::closed_even(Family::BoseEven, 0, {1, 0}, {2, 0}, "printed"),
                  ref::kBoseEven0_1_2) < 1e-13);
}

TEST_CASE("odd closed form printed shape at n = 0") {
    const cplx a{1.4, 0.0}, s{4.2, 0.0};
    const cplx got = hzeta::closed_odd(Family::BoseOdd, 0, a, s, "printed");
    const cplx expect = 0.5 * (kernel_aux(1, AuxVariant::Printed, a, s - 1.0) -
                               a * kernel_aux(1, AuxVariant::Printed, a, s));
    CHECK(rel_err(got, expect) < 1e-15);
}

TEST_CASE("binomial sum symmetry: reversing the summation order only reassociates") {
    for (int n : {1, 2, 3}) {
        const cplx a{1.7, 0.0}, s{2.0 * n + 4.7, 0.0};
        const cplx forward = hzeta::closed_even(Family::BoseEven, n, a, s, "printed");
        // Recompute with m -> 2n - m.
        cplx reversed(0.0, 0.0);
        double binom = 1.0;
        std::vector<double> coeffs(2 * n + 1);
        for (int m = 0; m <= 2 * n; ++m) {
            coeffs[m] = binom;
            binom = binom * (2 * n - m) / (m + 1);
        }
        double max_term = 0.0;
        for (int m = 2 * n; m >= 0; --m) {
            cplx term = coeffs[m] * hzeta::cpow(a, cplx(m, 0)) *
                        kernel_aux(1, AuxVariant::Printed, a, s + cplx(m - 2 * n, 0));
            if ((m + n) % 2 != 0) term = -term;
            reversed += term;
            max_term = std::max(max_term, std::abs(term));
        }
        reversed *= 0.5;
        const double cond = max_term / std::max(1e-300, std::abs(forward));
        CHECK(std::abs(forward - reversed) <= 64.0 * 1e-16 * cond * std::abs(forward) + 1e-18);
    }
}

TEST_CASE("canonical candidates reproduce quadrature on frozen anchors") {
    const auto& rs = resolved_state();
    CHECK(rel_err(hzeta::closed_even(Family::BoseEven, 1, {1, 0}, {6, 0}, "canonical", &rs),
                  ref::kBoseEven1_1_6) < 1e-12);
    CHECK(rel_err(hzeta::closed_even(Family::SechEven, 0, {1, 0}, {2, 0}, "canonical", &rs),
                  ref::kSechEvenCos0_1_2) < 1e-12);
    CHECK(rel_err(hzeta::closed_even(Family::FermiEven, 0, {1, 0}, {2, 0}, "canonical", &rs),
                  ref::kFermiEvenPi0_1_2) < 1e-12);
    CHECK(rel_err(hzeta::closed_odd(Family::BoseOdd, 0, {1, 0}, {4, 0}, "canonical", &rs),
                  ref::kBoseOdd0_1_4) < 1e-11);
    CHECK(rel_err(hzeta::closed_odd(Family::SechOdd, 0, {1, 0}, {5, 0}, "canonical", &rs),
                  ref::kSechOddSin0_1_5) < 1e-11);
}

TEST_CASE("canonical candidate requests fail before resolution") {
    CHECK_THROWS_AS(hzeta::closed_even(Family::FermiEven, 0, {1, 0}, {2, 0}, "canonical", nullptr),
                    hzeta::UnresolvedHypothesis);
    hzeta::ResolutionState unresolved;
    CHECK_THROWS_AS(
        hzeta::closed_even(Family::FermiEven, 0, {1, 0}, {2, 0}, "canonical", &unresolved),
        hzeta::UnresolvedHypothesis);
}

TEST_CASE("pole guard inside the binomial sum") {
    // s = 2n + 1 puts the m = 2n summand exactly on sigma = 1.
    CHECK_THROWS_AS(hzeta::closed_even(Family::BoseEven, 1, {1, 0}, {3, 0}, "printed"),
                    hzeta::PoleProximity);
    CHECK_THROWS_AS(hzeta::closed_odd(Family::BoseOdd, 1, {1, 0}, {4, 0}, "printed"),
                    hzeta::PoleProximity);
    CHECK_THROWS_AS(kernel_aux(1, AuxVariant::Printed, {1, 0}, {1.0 + 1e-8, 0}),
                    hzeta::PoleProximity);
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(hzeta::closed_even(Family::BoseOdd, 0, {1, 0}, {4, 0}, "printed"),
                    hzeta::InvalidArgument);
    CHECK_THROWS_AS(hzeta::closed_odd(Family::BoseEven, 0, {1, 0}, {4, 0}, "printed"),
                    hzeta::InvalidArgument);
    CHECK_THROWS_AS(hzeta::closed_even(Family::BoseEven, 2, {1, 0}, {3, 0}, "printed"),
                    hzeta::DomainError);
    CHECK_THROWS_AS(hzeta::closed_even(Family::BoseEven, 0, {1, 0}, {2, 0}, "no-such-candidate"),
                    hzeta::InvalidArgument);
}

TEST_CASE("frequency-domain route triangulates the bose-even family") {
    CHECK(rel_err(hzeta::laguerre_route(0, {1, 0}, {3, 0}),
                  hzeta::closed_even(Family::BoseEven, 0, {1, 0}, {3, 0}, "printed")) < 1e-9);
    CHECK(rel_err(hzeta::laguerre_route(1, {1, 0}, {6, 0}),
                  hzeta::closed_even(Family::BoseEven, 1, {1, 0}, {6, 0}, "printed")) < 1e-8);

    FamilySpec spec;
    spec.family = Family::BoseEven;
    spec.n = 0;
    spec.a = {1, 0};
    spec.s = {2, 0};
    const auto quad = hzeta::family_quadrature(spec, 1e-11);
    CHECK(rel_err(hzeta::laguerre_route(0, {1, 0}, {2, 0}), quad.value) < 1e-9);
    CHECK(rel_err(quad.value, ref::kBoseEven0_1_2) < 1e-11);

    CHECK_THROWS_AS(hzeta::laguerre_route(1, {1, 0}, {1.5, 0}), hzeta::DomainError);
}

TEST_CASE("kernel Mellin candidates and canonical constants") {
    using hzeta::KernelKind;
    const auto& rs = resolved_state();

    // Candidate arithmetic: explicit ids scale the base form.
    const cplx base = hzeta::kernel_mellin_base(KernelKind::Sinh, {2.5, 0}, {1.2, 0});
    CHECK(rel_err(hzeta::kernel_mellin(KernelKind::Sinh, {2.5, 0}, {1.2, 0}, "double"), 2.0 * base) <
          1e-15);
    CHECK(rel_err(hzeta::kernel_mellin(KernelKind::Sinh, {2.5, 0}, {1.2, 0}, "half"), 0.5 * base) <
          1e-15);
    CHECK_THROWS_AS(hzeta::kernel_mellin(KernelKind::Sinh, {2.5, 0}, {1.2, 0}, "canonical"),
                    hzeta::UnresolvedHypothesis);
    CHECK_THROWS_AS(hzeta::kernel_mellin(KernelKind::Bose, {2, 0}, {1, 0}, "double"),
                    hzeta::InvalidArgument);  // the settled kernel has no factor slate

    // Canonical moments against the defining integrals (consistency grid).
    for (KernelKind k : {KernelKind::Bose, KernelKind::Fermi, KernelKind::Sinh, KernelKind::Cosh}) {
        for (const cplx s : {cplx(2, 0), cplx(3.5, 0)}) {
            for (const cplx a : {cplx(0.5, 0), cplx(1, 0), cplx(2, 0)}) {
                const auto q = hzeta::integrate_half_line(hzeta::mellin_integrand(k, s, a), 1e-12,
                                                          hzeta::mellin_decay_rate(k, a));
                const cplx closed = hzeta::kernel_mellin(k, s, a, "canonical", &rs);
                CAPTURE(hzeta::to_string(k));
                CAPTURE(s.real());
                CAPTURE(a.real());
                CHECK(rel_err(closed, q.value) < 1e-10);
            }
        }
    }

    // The certified constants themselves.
    CHECK(rs.mellin_factor.at(KernelKind::Bose) == 1.0);
    CHECK(rs.mellin_factor.at(KernelKind::Fermi) == 1.0);
    CHECK(rs.mellin_factor.at(KernelKind::Sinh) == 2.0);
    CHECK(rs.mellin_factor.at(KernelKind::Cosh) == 2.0);
}
