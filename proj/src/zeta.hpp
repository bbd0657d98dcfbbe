#pragma once

#include "kernels.hpp"
#include "numeric.hpp"
#include "quadrature.hpp"

namespace hzeta {

// Hurwitz zeta by Euler-Maclaurin summation: N leading terms summed directly,
// Bernoulli corrections through B30. Accurate to ~1e-13 relative over the
// supported band (|s| <= 30, Re a in (0, 50]); for Re s < 0 the shift count is
// lowered to limit cancellation between the direct sum and the integral term.
// Throws PoleProximity within kPoleGuard of s = 1, DomainError for Re a <= 0.
cplx hurwitz_zeta(const cplx& s, const cplx& a);

// Hermite's integral representation: a^{-s}/2 + a^{1-s}/(s-1) + 2 * tail,
// the tail integral evaluated on the half line. Valid for every s != 1 with
// Re a > 0; serves as the independent continuation route against
// hurwitz_zeta.
cplx hermite_zeta(const cplx& s, const cplx& a, double tol = 1e-12);

// d zeta / d s by direct differentiation of the Hermite representation
// (three half-line integrals after rescaling t -> a t).
cplx hurwitz_zeta_ds(const cplx& s, const cplx& a, double tol = 1e-12);

// Closed form of the kernel Mellin moment int_0^inf t^{s-1} w_K(t) dt with
// weights w_bose = e^{-at}/(1-e^{-t}), w_fermi = e^{-at}/(1+e^{-t}),
// w_sinh = e^{-at}/sinh t, w_cosh = e^{-at}/cosh t, in the source-table
// normalization. The certified multiplier per kernel lives in the hypothesis
// layer; this function is the unscaled base form. Requires Re s > 1 and
// Re a > 0 (sinh and cosh admit a = 0; the sinh form is evaluated through the
// shifted representation there, where the two zeta singularities cancel).
cplx kernel_mellin_base(KernelKind kind, const cplx& s, const cplx& a);

// The defining integrand of the same moment, for quadrature cross-checks.
// Bounded at t = 0 for Re s >= 2.
Integrand mellin_integrand(KernelKind kind, const cplx& s, const cplx& a);
double mellin_decay_rate(KernelKind kind, const cplx& a);

}  // namespace hzeta
