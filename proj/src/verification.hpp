#pragma once

#include <string>
#include <vector>

#include "closed_forms.hpp"
#include "families.hpp"
#include "hypotheses.hpp"

namespace hzeta {

enum class VerifyStatus { Pass, Fail, SkippedPole, NoConvergence };
const char* to_string(VerifyStatus s);

struct VerificationRecord {
    FamilySpec spec;
    std::string candidate;
    cplx closed{0.0, 0.0};
    cplx quad{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;  // abs_err / max(1, |quad|)
    double tol = 0.0;
    VerifyStatus status = VerifyStatus::Fail;
    long n_evals = 0;
    double runtime_ms = 0.0;
};

struct SweepPoint {
    FamilySpec spec;
    std::string candidate = "canonical";
};

// One closed-form-vs-quadrature comparison. The quadrature side follows the
// candidate's kernel scale and factor reading unless the family spec explicitly
// overrides the scale; its inner tolerance sits three decades under tol.
// Open families are verified quadrature-only: the record carries the value on
// both sides and err_estimate as abs_err. PoleProximity from the closed form
// becomes SKIPPED_POLE, quadrature failure becomes NO_CONVERGENCE.
VerificationRecord verify_point(const FamilySpec& spec, const std::string& candidate, double tol,
                                const ResolutionState* rs = nullptr);

// Order-preserving batch of verify_point; threads > 1 runs points
// concurrently (records are merged in input order and are byte-identical to
// the sequential run apart from runtime_ms).
std::vector<VerificationRecord> sweep(const std::vector<SweepPoint>& points, double tol,
                                      int threads = 1, const ResolutionState* rs = nullptr);

// n in {0..3} x a in {0.7, 1, 2.3} x s in parity base + {1.5, 3.7, 6}.
std::vector<FamilySpec> identity_grid(Family f);
// n in {0..2} x the same a and s offsets: 27 points per family.
std::vector<FamilySpec> default_resolution_grid(Family f);

struct CandidateOutcome {
    std::string id;
    std::string note;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    double worst_rel = 0.0;
};

struct FamilyResolution {
    Family family{};
    std::string canonical_id;
    double tol = 0.0;
    int grid_size = 0;
    std::vector<CandidateOutcome> outcomes;
    std::vector<std::string> discrepancies;  // print-vs-canonical findings
};

// Runs every registered candidate over the grid and certifies the unique
// all-pass survivor. Throws AmbiguousResolution when zero or several survive.
FamilyResolution resolve_hypotheses(Family f, const std::vector<FamilySpec>& grid, double tol);

struct MellinResolution {
    KernelKind kernel{};
    std::string candidate_id;
    double factor = 1.0;
    double tol = 0.0;
    double worst_rel = 0.0;
    std::vector<std::string> rejected;
};

// Certifies the constant factor of one kernel Mellin moment against
// half-line quadrature at (s, a) in {(2,1), (3.5,0.7), (2.5,2)}.
MellinResolution resolve_mellin(KernelKind k, double tol);

struct ErrataReport {
    double family_tol = 0.0;
    double mellin_tol = 0.0;
    std::vector<FamilyResolution> families;
    std::vector<MellinResolution> mellin;
};

// Full resolution pass over the eight closed families and four kernels;
// populates `rs` (single writer) and returns the report.
ErrataReport resolve_all(ResolutionState& rs, double family_tol = 1e-8, double mellin_tol = 1e-10);

// Both sides of the transform-pair identity for the bose-even family:
// direct quadrature of the product against the frequency-domain quadrature
// of the two closed-form transforms.
VerificationRecord parseval_check(int n, const cplx& a, const cplx& s, double tol);

}  // namespace hzeta
