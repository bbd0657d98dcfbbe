#pragma once

#include <map>
#include <string>
#include <vector>

#include "families.hpp"
#include "kernels.hpp"

namespace hzeta {

// Formula variant of the per-kernel auxiliary zeta combination. "Printed"
// is the source-table form; "Corrected" is the re-derived form registered
// where the source form is suspected of a misprint. Which one is canonical is
// decided numerically by resolve_hypotheses, never assumed.
enum class AuxVariant { Printed, Corrected };

// One registered closed-form reading of a family identity. A candidate fixes
// everything needed to evaluate both sides: the auxiliary formula variant,
// the overall sign of the binomial sum, the algebraic factor reading of the
// integrand, and the kernel scale of the defining integral.
struct Candidate {
    std::string id;
    std::string note;  // provenance, for the errata report
    int aux_kind;      // 1 = bose, 2 = sinh, 3 = fermi, 4 = sech combination
    AuxVariant aux_variant;
    int sign;  // +1 keeps the source-table sum orientation, -1 flips it
    Trig trig;
    double kernel_scale;
};

// Candidate slate for a closed-family identity. Families whose printed form
// is uncontested carry a single entry (trivially canonical after a
// resolution run).
const std::vector<Candidate>& candidates_for(Family f);

const Candidate& find_candidate(Family f, const std::string& id);

// Constant-factor hypotheses for the kernel Mellin moments.
struct MellinCandidate {
    std::string id;
    double factor;
};
const std::vector<MellinCandidate>& mellin_candidates(KernelKind k);

// Outcome of a resolution run; the single-writer record consulted whenever a
// caller asks for the "canonical" candidate.
struct ResolutionState {
    bool resolved = false;
    std::map<Family, std::string> canonical;
    std::map<KernelKind, std::string> mellin_id;
    std::map<KernelKind, double> mellin_factor;
};

// Throws UnresolvedHypothesis when no resolution has run (or the family was
// not covered by it).
const Candidate& canonical_candidate(Family f, const ResolutionState* rs);
double canonical_mellin_factor(KernelKind k, const ResolutionState* rs);

}  // namespace hzeta
