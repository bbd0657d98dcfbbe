#pragma once

#include <string>

#include "families.hpp"
#include "hypotheses.hpp"
#include "numeric.hpp"

namespace hzeta {

// Auxiliary Hurwitz-zeta combinations, one per kernel weight
// (kind 1 bose, 2 sinh, 3 fermi, 4 sech):
//   1: zeta(sigma,a) - a^{-sigma}/2 - a^{1-sigma}/(sigma-1)
//   2: 2^{2-sigma} zeta(sigma,a/2) - 2 zeta(sigma,a) - a^{-sigma}
//   3: printed   a^{1-sigma}/(sigma-1) - zeta(sigma,a) - 2^{-sigma} zeta(sigma,a/2)
//      corrected a^{1-sigma}/(sigma-1) - 2 zeta(sigma,a) + 2^{1-sigma} zeta(sigma,a/2)
//   4: printed   2^{-2 sigma} (zeta(sigma,(a+1)/4) - zeta(sigma,(a+3)/4))
//      corrected 4x the printed combination
// Throws PoleProximity within kPoleGuard of sigma = 1.
cplx kernel_aux(int kind, AuxVariant variant, const cplx& a, const cplx& sigma);

// The binomial-sum closed form asserted by a candidate:
//   sign * 1/2 * sum_m (-1)^{m+n} C(M,m) a^m Aux(a, m + s - M)
// with M = 2n for even families and M = 2n+1 for odd ones. Guards every
// summand against the shifted pole at sigma = 1.
cplx closed_form_value(const FamilySpec& spec, const Candidate& cand);

// Candidate lookup wrappers; id "canonical" consults the resolution state.
cplx closed_even(Family f, int n, const cplx& a, const cplx& s, const std::string& candidate_id,
                 const ResolutionState* rs = nullptr);
cplx closed_odd(Family f, int n, const cplx& a, const cplx& s, const std::string& candidate_id,
                const ResolutionState* rs = nullptr);

// Third, independent route for the bose-even family: the frequency-domain
// integral with the Laguerre-polynomial transform under a regularized bose
// weight, evaluated by half-line quadrature. Requires Re(s) > 2n (the
// integral is kept unsplit, which is exactly its convergence condition).
cplx laguerre_route(int n, const cplx& a, const cplx& s, double tol = 1e-11);

// Kernel Mellin moment under a named constant-factor candidate
// ("printed", "half", "double", or "canonical" after resolution).
cplx kernel_mellin(KernelKind kind, const cplx& s, const cplx& a, const std::string& candidate_id,
                   const ResolutionState* rs = nullptr);

}  // namespace hzeta
