#include "hypotheses.hpp"

#include "errors.hpp"

namespace hzeta {

namespace {

const double kHalfPi = 0.5 * kPi;

// The slates cover every reading the source text supports plus the
// re-derived corrections. Each family must end a resolution run with exactly
// one surviving entry.
const std::map<Family, std::vector<Candidate>>& registry() {
    static const std::map<Family, std::vector<Candidate>> reg = {
        {Family::BoseEven,
         {{"printed", "source form: even power, sine factor, kernel exp(2 pi t)-1", 1,
           AuxVariant::Printed, +1, Trig::SinFactor, kTwoPi}}},
        {Family::SinhEven,
         {{"printed", "sinh auxiliary combination read from its own display", 2,
           AuxVariant::Printed, +1, Trig::SinFactor, kPi},
          {"label-p1", "literal reading of the mislabeled display (bose combination)", 1,
           AuxVariant::Printed, +1, Trig::SinFactor, kPi}}},
        {Family::FermiEven,
         {{"printed@2pi", "source form with kernel exp(2 pi t)+1", 3, AuxVariant::Printed, +1,
           Trig::SinFactor, kTwoPi},
          {"printed@pi", "source form with kernel exp(pi t)+1", 3, AuxVariant::Printed, +1,
           Trig::SinFactor, kPi},
          {"corrected@pi",
           "re-derived: qtail - 2 zeta(sigma,a) + 2^{1-sigma} zeta(sigma,a/2), kernel exp(pi t)+1",
           3, AuxVariant::Corrected, +1, Trig::SinFactor, kPi},
          {"corrected@2pi", "re-derived combination tested against kernel exp(2 pi t)+1", 3,
           AuxVariant::Corrected, +1, Trig::SinFactor, kTwoPi}}},
        {Family::SechEven,
         {{"printed", "source form: sine factor, sech auxiliary combination", 4,
           AuxVariant::Printed, +1, Trig::SinFactor, kHalfPi},
          {"sin-4x", "sine factor with quadrupled sech combination", 4, AuxVariant::Corrected, +1,
           Trig::SinFactor, kHalfPi},
          {"cos-printed", "cosine-factor reading with the source combination", 4,
           AuxVariant::Printed, +1, Trig::CosFactor, kHalfPi},
          {"cos-4x", "re-derived: cosine-factor reading, quadrupled sech combination", 4,
           AuxVariant::Corrected, +1, Trig::CosFactor, kHalfPi}}},
        {Family::BoseOdd,
         {{"printed", "source form: odd power, cosine factor, kernel exp(2 pi t)-1", 1,
           AuxVariant::Printed, +1, Trig::CosFactor, kTwoPi},
          {"sign-flipped", "re-derived: source sum with the overall sign reversed", 1,
           AuxVariant::Printed, -1, Trig::CosFactor, kTwoPi}}},
        {Family::SinhOdd,
         {{"printed", "source form: odd power, cosine factor, kernel sinh(pi t)", 2,
           AuxVariant::Printed, +1, Trig::CosFactor, kPi},
          {"sign-flipped", "re-derived: source sum with the overall sign reversed", 2,
           AuxVariant::Printed, -1, Trig::CosFactor, kPi}}},
        {Family::FermiOdd,
         {{"printed", "source form: odd power, cosine factor, kernel exp(pi t)+1", 3,
           AuxVariant::Printed, +1, Trig::CosFactor, kPi},
          {"sign-flipped", "source combination with the overall sign reversed", 3,
           AuxVariant::Printed, -1, Trig::CosFactor, kPi},
          {"corrected", "re-derived fermi combination, source sign", 3, AuxVariant::Corrected, +1,
           Trig::CosFactor, kPi},
          {"sign-flipped-corrected", "re-derived fermi combination with reversed sign", 3,
           AuxVariant::Corrected, -1, Trig::CosFactor, kPi}}},
        {Family::SechOdd,
         {{"printed", "source form: odd power, sine factor, sech combination", 4,
           AuxVariant::Printed, +1, Trig::SinFactor, kHalfPi},
          {"printed-4x", "re-derived: sine-factor reading, quadrupled sech combination", 4,
           AuxVariant::Corrected, +1, Trig::SinFactor, kHalfPi},
          {"cos-reading", "cosine-factor reading matching the sibling families", 4,
           AuxVariant::Printed, +1, Trig::CosFactor, kHalfPi},
          {"cos-reading-4x", "cosine-factor reading, quadrupled combination", 4,
           AuxVariant::Corrected, +1, Trig::CosFactor, kHalfPi}}},
    };
    return reg;
}

}  // namespace

const std::vector<Candidate>& candidates_for(Family f) {
    const auto it = registry().find(f);
    if (it == registry().end())
        throw InvalidArgument(std::string("no candidates registered for family ") + to_string(f));
    return it->second;
}

const Candidate& find_candidate(Family f, const std::string& id) {
    for (const Candidate& c : candidates_for(f)) {
        if (c.id == id) return c;
    }
    throw InvalidArgument(std::string("unknown candidate '") + id + "' for family " + to_string(f));
}

const std::vector<MellinCandidate>& mellin_candidates(KernelKind k) {
    static const std::vector<MellinCandidate> contested = {
        {"half", 0.5}, {"printed", 1.0}, {"double", 2.0}};
    static const std::vector<MellinCandidate> settled = {{"printed", 1.0}};
    // The bose moment is the classical base identity; only the three
    // variations carry constant-factor hypotheses.
    return k == KernelKind::Bose ? settled : contested;
}

const Candidate& canonical_candidate(Family f, const ResolutionState* rs) {
    if (rs == nullptr || !rs->resolved)
        throw UnresolvedHypothesis("canonical candidate requested before hypothesis resolution");
    const auto it = rs->canonical.find(f);
    if (it == rs->canonical.end())
        throw UnresolvedHypothesis(std::string("family ") + to_string(f) +
                                   " was not covered by the resolution run");
    return find_candidate(f, it->second);
}

double canonical_mellin_factor(KernelKind k, const ResolutionState* rs) {
    if (rs == nullptr || !rs->resolved)
        throw UnresolvedHypothesis("canonical Mellin constant requested before resolution");
    const auto it = rs->mellin_factor.find(k);
    if (it == rs->mellin_factor.end())
        throw UnresolvedHypothesis(std::string("kernel ") + to_string(k) +
                                   " was not covered by the resolution run");
    return it->second;
}

}  // namespace hzeta
