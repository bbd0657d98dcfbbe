#pragma once

#include "numeric.hpp"

namespace hzeta {

inline constexpr int kMaxLaguerreDegree = 64;

struct LaguerreResult {
    cplx value{0.0, 0.0};
    // Cancellation signal: max term magnitude over |value| in the explicit
    // alternating sum. Large values mean the digits of `value` are suspect;
    // downstream quadrature-free evaluations use this as a trust signal.
    double cond = 1.0;
};

// Associated Laguerre polynomial L_n^k(x) for integer degree n >= 0 and
// complex upper parameter k, by the explicit binomial-gamma sum. The
// factorials of the classical formula are read as gamma values so that
// non-integer and complex k are covered. Gamma ratios are formed as
// exp(log_gamma differences) to keep coefficients representable.
LaguerreResult laguerre_explicit(int n, const cplx& k, const cplx& x);

// Same polynomial by the standard three-term degree recurrence; the
// numerical-stability cross-check for the explicit sum.
cplx laguerre_recurrence(int n, const cplx& k, const cplx& x);

}  // namespace hzeta
