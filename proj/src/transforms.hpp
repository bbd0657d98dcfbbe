#pragma once

#include "kernels.hpp"
#include "numeric.hpp"
#include "quadrature.hpp"

namespace hzeta {

struct TransformQuery {
    KernelKind kernel = KernelKind::Bose;
    double w = 1.0;     // frequency, >= 0 (the w = 0 limit is supplied)
    double beta = kPi;  // kernel scale; the bose entry is fixed at 2*pi
};

// Closed-form half-line Fourier transform of the kernel weight:
//   bose  (scale 2*pi): int sin(wt)/(e^{2 pi t}-1) dt = (1/(e^w-1) + 1/2 - 1/w)/2
//   sinh:  int sin(wt)/sinh(beta t) dt  = (pi/2beta) tanh(pi w / 2beta)
//   fermi: int sin(wt)/(e^{beta t}+1) dt = 1/(2w) - pi/(2beta sinh(pi w/beta))
//   cosh:  int cos(wt)/cosh(beta t) dt  = (pi/2beta) sech(pi w / 2beta)
// The cosh entry is a cosine transform; transform_sense() reports which
// pairing applies so Parseval-style assembly uses matching senses.
double kernel_sine_transform(const TransformQuery& q);

// The defining integrand (sine or cosine per the kernel's sense) and its
// exponential decay rate, for oracle cross-checks.
Integrand transform_defining_integrand(const TransformQuery& q);
double transform_decay_rate(const TransformQuery& q);

// Half-line sine transform of the algebraic factor
// g(t) = t^{2n} * power_sin_factor(a, s, t):
//   int_0^inf g(t) sin(wt) dt
//     = (-1)^n pi (2n)! / (2 Gamma(s) e^{aw} w^{2n+1-s}) * L_{2n}^{s-2n-1}(a w).
// Requires w > 0, Re a > 0, 0 <= 2n < Re s.
cplx g_sine_transform(int n, const cplx& a, const cplx& s, double w);

}  // namespace hzeta
