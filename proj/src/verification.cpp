#include "verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <future>
#include <sstream>

#include "errors.hpp"
#include "transforms.hpp"
#include "zeta.hpp"

namespace hzeta {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

double inner_tol(double tol) { return std::min(1e-11, 1e-3 * tol); }

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

}  // namespace

const char* to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Pass: return "PASS";
        case VerifyStatus::Fail: return "FAIL";
        case VerifyStatus::SkippedPole: return "SKIPPED_POLE";
        case VerifyStatus::NoConvergence: return "NO_CONVERGENCE";
    }
    return "?";
}

VerificationRecord verify_point(const FamilySpec& spec, const std::string& candidate, double tol,
                                const ResolutionState* rs) {
    VerificationRecord rec;
    rec.spec = spec;
    rec.tol = tol;
    const auto t0 = clock_type::now();

    if (is_open_family(spec.family)) {
        rec.candidate = "quadrature-only";
        try {
            const QuadratureOutcome q = family_quadrature(spec, inner_tol(tol));
            rec.quad = q.value;
            rec.closed = q.value;
            rec.abs_err = q.err_estimate;
            rec.rel_err = q.err_estimate / std::max(1.0, std::abs(q.value));
            rec.n_evals = q.n_evals;
            rec.status = rec.rel_err <= tol ? VerifyStatus::Pass : VerifyStatus::Fail;
        } catch (const NoConvergence&) {
            rec.status = VerifyStatus::NoConvergence;
        }
        rec.runtime_ms = ms_since(t0);
        return rec;
    }

    const Candidate& cand = candidate == "canonical" ? canonical_candidate(spec.family, rs)
                                                     : find_candidate(spec.family, candidate);
    rec.candidate = cand.id;

    try {
        rec.closed = closed_form_value(spec, cand);
    } catch (const PoleProximity&) {
        rec.status = VerifyStatus::SkippedPole;
        rec.runtime_ms = ms_since(t0);
        return rec;
    }

    FamilySpec quad_spec = spec;
    if (quad_spec.kernel_scale <= 0.0) quad_spec.kernel_scale = cand.kernel_scale;
    try {
        const QuadratureOutcome q = family_quadrature(quad_spec, inner_tol(tol), cand.trig);
        rec.quad = q.value;
        rec.n_evals = q.n_evals;
    } catch (const NoConvergence&) {
        rec.status = VerifyStatus::NoConvergence;
        rec.runtime_ms = ms_since(t0);
        return rec;
    }

    rec.abs_err = std::abs(rec.closed - rec.quad);
    rec.rel_err = rec.abs_err / std::max(1.0, std::abs(rec.quad));
    rec.status = rec.rel_err <= tol ? VerifyStatus::Pass : VerifyStatus::Fail;
    rec.runtime_ms = ms_since(t0);
    return rec;
}

std::vector<VerificationRecord> sweep(const std::vector<SweepPoint>& points, double tol,
                                      int threads, const ResolutionState* rs) {
    if (points.empty()) throw InvalidArgument("sweep: empty grid");
    std::vector<VerificationRecord> records(points.size());

    if (threads <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            records[i] = verify_point(points[i].spec, points[i].candidate, tol, rs);
        }
        return records;
    }

    const int workers = std::min<std::size_t>(threads, points.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> futs;
    futs.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        futs.push_back(std::async(std::launch::async, [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= points.size()) return;
                records[i] = verify_point(points[i].spec, points[i].candidate, tol, rs);
            }
        }));
    }
    for (auto& f : futs) f.get();  // rethrows worker exceptions
    return records;
}

namespace {

std::vector<FamilySpec> make_grid(Family f, const std::vector<int>& ns) {
    const double parity_base = is_odd_family(f) ? 1.0 : 0.0;
    std::vector<FamilySpec> grid;
    for (int n : ns) {
        for (double a : {0.7, 1.0, 2.3}) {
            for (double off : {1.5, 3.7, 6.0}) {
                FamilySpec spec;
                spec.family = f;
                spec.n = n;
                spec.a = cplx(a, 0.0);
                spec.s = cplx(2.0 * n + parity_base + off, 0.0);
                grid.push_back(spec);
            }
        }
    }
    return grid;
}

}  // namespace

std::vector<FamilySpec> identity_grid(Family f) { return make_grid(f, {0, 1, 2, 3}); }

std::vector<FamilySpec> default_resolution_grid(Family f) { return make_grid(f, {0, 1, 2}); }

FamilyResolution resolve_hypotheses(Family f, const std::vector<FamilySpec>& grid, double tol) {
    if (grid.empty()) throw InvalidArgument("resolve_hypotheses: empty grid");
    FamilyResolution res;
    res.family = f;
    res.tol = tol;
    res.grid_size = static_cast<int>(grid.size());

    for (const Candidate& cand : candidates_for(f)) {
        CandidateOutcome out;
        out.id = cand.id;
        out.note = cand.note;
        for (const FamilySpec& spec : grid) {
            const VerificationRecord rec = verify_point(spec, cand.id, tol, nullptr);
            switch (rec.status) {
                case VerifyStatus::Pass:
                    ++out.passed;
                    out.worst_rel = std::max(out.worst_rel, rec.rel_err);
                    break;
                case VerifyStatus::SkippedPole:
                    ++out.skipped;
                    break;
                default:
                    ++out.failed;
                    out.worst_rel = std::max(out.worst_rel, rec.rel_err);
                    break;
            }
        }
        res.outcomes.push_back(std::move(out));
    }

    std::vector<const CandidateOutcome*> survivors;
    for (const CandidateOutcome& out : res.outcomes) {
        if (out.failed == 0 && out.passed > 0) survivors.push_back(&out);
    }
    if (survivors.size() != 1) {
        std::ostringstream msg;
        msg << "resolve_hypotheses(" << to_string(f) << "): " << survivors.size()
            << " surviving candidates (need exactly 1) at tol " << tol;
        throw AmbiguousResolution(msg.str());
    }
    res.canonical_id = survivors.front()->id;

    for (const CandidateOutcome& out : res.outcomes) {
        if (out.id == res.canonical_id) continue;
        std::ostringstream line;
        line << "candidate '" << out.id << "' (" << out.note << ") fails " << out.failed << "/"
             << (out.passed + out.failed) << " grid points, worst rel err "
             << fmt_double(out.worst_rel);
        res.discrepancies.push_back(line.str());
    }
    if (res.canonical_id != "printed") {
        const Candidate& canon = find_candidate(f, res.canonical_id);
        res.discrepancies.push_back(std::string("canonical form is '") + res.canonical_id + "' (" +
                                    canon.note + "), not the source reading");
    }
    return res;
}

MellinResolution resolve_mellin(KernelKind k, double tol) {
    MellinResolution res;
    res.kernel = k;
    res.tol = tol;

    struct Point {
        cplx s, a;
    };
    const std::vector<Point> pts = {{cplx(2.0, 0.0), cplx(1.0, 0.0)},
                                    {cplx(3.5, 0.0), cplx(0.7, 0.0)},
                                    {cplx(2.5, 0.0), cplx(2.0, 0.0)}};

    std::vector<std::pair<const MellinCandidate*, double>> survivors;
    std::vector<std::string> rejected;
    for (const MellinCandidate& mc : mellin_candidates(k)) {
        double worst = 0.0;
        bool ok = true;
        for (const Point& p : pts) {
            const cplx closed = mc.factor * kernel_mellin_base(k, p.s, p.a);
            const QuadratureOutcome q =
                integrate_half_line(mellin_integrand(k, p.s, p.a), 1e-12, mellin_decay_rate(k, p.a));
            const double rel = std::abs(closed - q.value) / std::max(1.0, std::abs(q.value));
            worst = std::max(worst, rel);
            if (rel > tol) ok = false;
        }
        if (ok) {
            survivors.push_back({&mc, worst});
        } else {
            rejected.push_back("factor '" + mc.id + "' rejected, worst rel err " +
                               fmt_double(worst));
        }
    }
    if (survivors.size() != 1) {
        std::ostringstream msg;
        msg << "resolve_mellin(" << to_string(k) << "): " << survivors.size()
            << " surviving constants (need exactly 1) at tol " << tol;
        throw AmbiguousResolution(msg.str());
    }
    res.candidate_id = survivors.front().first->id;
    res.factor = survivors.front().first->factor;
    res.worst_rel = survivors.front().second;
    res.rejected = std::move(rejected);
    return res;
}

ErrataReport resolve_all(ResolutionState& rs, double family_tol, double mellin_tol) {
    ErrataReport report;
    report.family_tol = family_tol;
    report.mellin_tol = mellin_tol;

    ResolutionState fresh;
    for (Family f : {Family::BoseEven, Family::SinhEven, Family::FermiEven, Family::SechEven,
                     Family::BoseOdd, Family::SinhOdd, Family::FermiOdd, Family::SechOdd}) {
        FamilyResolution fr = resolve_hypotheses(f, default_resolution_grid(f), family_tol);
        fresh.canonical[f] = fr.canonical_id;
        report.families.push_back(std::move(fr));
    }
    for (KernelKind k :
         {KernelKind::Bose, KernelKind::Fermi, KernelKind::Sinh, KernelKind::Cosh}) {
        MellinResolution mr = resolve_mellin(k, mellin_tol);
        fresh.mellin_id[k] = mr.candidate_id;
        fresh.mellin_factor[k] = mr.factor;
        report.mellin.push_back(std::move(mr));
    }
    fresh.resolved = true;
    rs = std::move(fresh);
    return report;
}

VerificationRecord parseval_check(int n, const cplx& a, const cplx& s, double tol) {
    VerificationRecord rec;
    rec.spec.family = Family::BoseEven;
    rec.spec.n = n;
    rec.spec.a = a;
    rec.spec.s = s;
    rec.candidate = "parseval";
    rec.tol = tol;
    validate(rec.spec);
    const auto t0 = clock_type::now();

    try {
        const QuadratureOutcome lhs = family_quadrature(rec.spec, inner_tol(tol));
        // Frequency side: (2/pi) int F_sin[kernel](w) * F_sin[g](w) dw with
        // both transforms in closed form.
        const Integrand freq = [&](double w) -> cplx {
            if (w == 0.0) return cplx(0.0, 0.0);
            const TransformQuery q{KernelKind::Bose, w, kTwoPi};
            return kernel_sine_transform(q) * g_sine_transform(n, a, s, w);
        };
        const QuadratureOutcome rhs = integrate_half_line(freq, inner_tol(tol), a.real());
        rec.quad = lhs.value;
        rec.closed = (2.0 / kPi) * rhs.value;
        rec.n_evals = lhs.n_evals + rhs.n_evals;
    } catch (const NoConvergence&) {
        rec.status = VerifyStatus::NoConvergence;
        rec.runtime_ms = ms_since(t0);
        return rec;
    }

    rec.abs_err = std::abs(rec.closed - rec.quad);
    rec.rel_err = rec.abs_err / std::max(1.0, std::abs(rec.quad));
    rec.status = rec.rel_err <= tol ? VerifyStatus::Pass : VerifyStatus::Fail;
    rec.runtime_ms = ms_since(t0);
    return rec;
}

}  // namespace hzeta
