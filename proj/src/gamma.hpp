#pragma once

#include "numeric.hpp"

namespace hzeta {

// Principal-branch log Gamma via a fixed-coefficient Lanczos approximation
// (g = 607/128, 15 terms), with the reflection formula for Re z < 0.5.
// Throws PoleProximity within kPoleGuard of a non-positive integer.
//
// Branch note: for Re z < 0.5 off the real axis the reflection route can
// differ from the principal branch by a multiple of 2*pi*i; exp(log_gamma(z))
// is exact either way, which is how every caller in this library uses it.
cplx log_gamma(const cplx& z);

// exp(log_gamma(z)).
cplx gamma_fn(const cplx& z);

}  // namespace hzeta
