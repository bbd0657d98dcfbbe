#pragma once

#include <optional>
#include <string>

#include "kernels.hpp"
#include "numeric.hpp"
#include "quadrature.hpp"

namespace hzeta {

// One integral family = kernel x parity x power index. The open-* families
// are evaluated by quadrature only; no closed form is claimed for them.
enum class Family {
    BoseEven,
    SinhEven,
    FermiEven,
    SechEven,
    BoseOdd,
    SinhOdd,
    FermiOdd,
    SechOdd,
    OpenI,
    OpenT,
    OpenL,
};

// Which algebraic factor multiplies the kernel: power_sin_factor or
// power_cos_factor. Even families default to the sine factor and odd families
// to the cosine factor; hypothesis candidates may assert the other reading
// for the sech families, where only one pairing has an elementary transform.
enum class Trig { SinFactor, CosFactor };

const char* to_string(Family f);
Family family_from_string(const std::string& name);

bool is_open_family(Family f);
bool is_even_family(Family f);
bool is_odd_family(Family f);
KernelKind family_kernel(Family f);  // closed families only

// Canonical kernel scales: bose 2*pi, sinh pi, fermi pi, sech pi/2.
double default_kernel_scale(Family f);
Trig default_trig(Family f);

struct FamilySpec {
    Family family = Family::BoseEven;
    int n = 0;                  // power index (the k of the open families)
    cplx a{1.0, 0.0};           // Re(a) > 0
    cplx s{2.0, 0.0};           // unused by the open families
    double kernel_scale = 0.0;  // 0 = family default; overridable for hypothesis testing
    double q = 1.0;             // open families only
};

// Throws DomainError when the parity/power constraints are violated
// (even: 0 <= 2n < Re s, odd: 2n+1 < Re s) or Re(a) <= 0, q <= 0.
void validate(const FamilySpec& spec);

double effective_kernel_scale(const FamilySpec& spec);

// t -> t^{2n} * sin_factor / K(t) (even), t^{2n+1} * cos_factor / K(t) (odd),
// or the fixed open-family integrands; the t = 0 value is the analytic limit.
Integrand family_integrand(const FamilySpec& spec, std::optional<Trig> trig = std::nullopt);

double family_decay_rate(const FamilySpec& spec);

QuadratureOutcome family_quadrature(const FamilySpec& spec, double tol,
                                    std::optional<Trig> trig = std::nullopt);

}  // namespace hzeta
