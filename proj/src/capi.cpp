#include "hzeta/hzeta.h"

#include <cstdio>
#include <cstring>
#include <functional>
#include <memory>
#include <mutex>
#include <string>

#include "closed_forms.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "gamma.hpp"
#include "hypotheses.hpp"
#include "laguerre.hpp"
#include "report.hpp"
#include "transforms.hpp"
#include "verification.hpp"
#include "zeta.hpp"

// Glue between the public C interface and the C++ core.

struct hz_session {
    std::mutex mu;
    hzeta::ResolutionState state;
    hzeta::ErrataReport report;
    bool has_report = false;
};

struct hz_sweep {
    std::vector<hzeta::VerificationRecord> records;
};

namespace {

thread_local std::string g_last_error;

using hzeta::cplx;

cplx from_c(hz_complex z) { return {z.re, z.im}; }
hz_complex to_c(const cplx& z) { return {z.real(), z.imag()}; }

hz_status run(const std::function<void()>& body) {
    try {
        body();
        g_last_error.clear();
        return HZ_OK;
    } catch (const hzeta::Error& e) {
        g_last_error = e.what();
        return static_cast<hz_status>(static_cast<int>(e.code()));
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HZ_ERR_INTERNAL;
    }
}

hz_status require(bool ok, const char* msg) {
    if (ok) return HZ_OK;
    g_last_error = msg;
    return HZ_ERR_INVALID;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hzeta::FamilySpec spec_from_c(const hz_family_spec& in) {
    hzeta::FamilySpec spec;
    spec.family = hzeta::family_from_string(in.family);
    spec.n = in.n;
    spec.a = from_c(in.a);
    spec.s = from_c(in.s);
    spec.kernel_scale = in.kernel_scale;
    spec.q = in.q > 0.0 ? in.q : 1.0;
    return spec;
}

void spec_to_c(const hzeta::FamilySpec& spec, hz_family_spec& out) {
    std::snprintf(out.family, sizeof(out.family), "%s", hzeta::to_string(spec.family));
    out.n = spec.n;
    out.a = to_c(spec.a);
    out.s = to_c(spec.s);
    out.kernel_scale = spec.kernel_scale;
    out.q = spec.q;
}

void record_to_c(const hzeta::VerificationRecord& rec, hz_record& out) {
    spec_to_c(rec.spec, out.spec);
    std::snprintf(out.candidate, sizeof(out.candidate), "%s", rec.candidate.c_str());
    out.closed = to_c(rec.closed);
    out.quad = to_c(rec.quad);
    out.abs_err = rec.abs_err;
    out.rel_err = rec.rel_err;
    out.tol = rec.tol;
    out.status = static_cast<int>(rec.status);
    out.n_evals = rec.n_evals;
    out.runtime_ms = rec.runtime_ms;
}

void quad_to_c(const hzeta::QuadratureOutcome& q, hz_quad_result& out) {
    out.value = to_c(q.value);
    out.err_estimate = q.err_estimate;
    out.n_evals = q.n_evals;
    out.truncation_point = q.truncation_point;
}

const hzeta::ResolutionState* state_of(const hz_session* s) {
    return s != nullptr ? &s->state : nullptr;
}

}  // namespace

extern "C" {

const char* hz_status_str(hz_status status) {
    switch (status) {
        case HZ_OK: return "ok";
        case HZ_ERR_DOMAIN: return "domain error";
        case HZ_ERR_POLE: return "pole proximity";
        case HZ_ERR_NO_CONVERGENCE: return "no convergence";
        case HZ_ERR_BAD_INTEGRAND: return "bad integrand";
        case HZ_ERR_UNRESOLVED: return "unresolved hypothesis";
        case HZ_ERR_AMBIGUOUS: return "ambiguous resolution";
        case HZ_ERR_INVALID: return "invalid argument";
        case HZ_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* hz_last_error(void) { return g_last_error.c_str(); }

void hz_string_free(char* s) { delete[] s; }

hz_status hz_log_gamma(hz_complex z, hz_complex* out) {
    if (hz_status st = require(out != nullptr, "null out"); st != HZ_OK) return st;
    return run([&] { *out = to_c(hzeta::log_gamma(from_c(z))); });
}

hz_status hz_hurwitz_zeta(hz_complex s, hz_complex a, hz_complex* out) {
    if (hz_status st = require(out != nullptr, "null out"); st != HZ_OK) return st;
    return run([&] { *out = to_c(hzeta::hurwitz_zeta(from_c(s), from_c(a))); });
}

hz_status hz_hermite_zeta(hz_complex s, hz_complex a, hz_complex* out) {
    if (hz_status st = require(out != nullptr, "null out"); st != HZ_OK) return st;
    return run([&] { *out = to_c(hzeta::hermite_zeta(from_c(s), from_c(a))); });
}

hz_status hz_hurwitz_zeta_ds(hz_complex s, hz_complex a, hz_complex* out) {
    if (hz_status st = require(out != nullptr, "null out"); st != HZ_OK) return st;
    return run([&] { *out = to_c(hzeta::hurwitz_zeta_ds(from_c(s), from_c(a))); });
}

hz_status hz_laguerre(int degree, hz_complex k, hz_complex x, hz_complex* value, double* cond) {
    if (hz_status st = require(value != nullptr, "null out"); st != HZ_OK) return st;
    return run([&] {
        const hzeta::LaguerreResult r = hzeta::laguerre_explicit(degree, from_c(k), from_c(x));
        *value = to_c(r.value);
        if (cond != nullptr) *cond = r.cond;
    });
}

hz_status hz_kernel_sine_transform(const char* kernel, double w, double beta, double* out,
                                   int* is_cosine) {
    if (hz_status st = require(out != nullptr && kernel != nullptr, "null argument"); st != HZ_OK)
        return st;
    return run([&] {
        hzeta::TransformQuery q;
        q.kernel = hzeta::kernel_from_string(kernel);
        q.w = w;
        q.beta = beta > 0.0 ? beta : hzeta::kPi;
        *out = hzeta::kernel_sine_transform(q);
        if (is_cosine != nullptr)
            *is_cosine = hzeta::transform_sense(q.kernel) == hzeta::TransformSense::Cosine ? 1 : 0;
    });
}

hz_status hz_g_sine_transform(int n, hz_complex a, hz_complex s, double w, hz_complex* out) {
    if (hz_status st = require(out != nullptr, "null out"); st != HZ_OK) return st;
    return run([&] { *out = to_c(hzeta::g_sine_transform(n, from_c(a), from_c(s), w)); });
}

hz_status hz_kernel_aux(int kind, const char* variant, hz_complex a, hz_complex sigma,
                        hz_complex* out) {
    if (hz_status st = require(out != nullptr && variant != nullptr, "null argument"); st != HZ_OK)
        return st;
    return run([&] {
        const std::string v = variant;
        hzeta::AuxVariant av;
        if (v == "printed") {
            av = hzeta::AuxVariant::Printed;
        } else if (v == "corrected") {
            av = hzeta::AuxVariant::Corrected;
        } else {
            throw hzeta::InvalidArgument("variant must be 'printed' or 'corrected'");
        }
        *out = to_c(hzeta::kernel_aux(kind, av, from_c(a), from_c(sigma)));
    });
}

hz_session* hz_session_new(void) { return new hz_session; }

void hz_session_free(hz_session* session) { delete session; }

hz_status hz_session_resolve(hz_session* session, double family_tol, double mellin_tol) {
    if (hz_status st = require(session != nullptr, "null session"); st != HZ_OK) return st;
    return run([&] {
        const double ftol = family_tol > 0.0 ? family_tol : 1e-8;
        const double mtol = mellin_tol > 0.0 ? mellin_tol : 1e-10;
        std::lock_guard<std::mutex> lock(session->mu);
        session->report = hzeta::resolve_all(session->state, ftol, mtol);
        session->has_report = true;
    });
}

int hz_session_is_resolved(const hz_session* session) {
    return session != nullptr && session->state.resolved ? 1 : 0;
}

hz_status hz_session_canonical(const hz_session* session, const char* family, char* buf,
                               size_t bufsize) {
    if (hz_status st =
            require(session != nullptr && family != nullptr && buf != nullptr && bufsize > 0,
                    "null argument");
        st != HZ_OK)
        return st;
    return run([&] {
        const hzeta::Family f = hzeta::family_from_string(family);
        const hzeta::Candidate& c = hzeta::canonical_candidate(f, &session->state);
        std::snprintf(buf, bufsize, "%s", c.id.c_str());
    });
}

hz_status hz_session_mellin_constant(const hz_session* session, const char* kernel,
                                     double* factor) {
    if (hz_status st = require(session != nullptr && kernel != nullptr && factor != nullptr,
                               "null argument");
        st != HZ_OK)
        return st;
    return run([&] {
        const hzeta::KernelKind k = hzeta::kernel_from_string(kernel);
        *factor = hzeta::canonical_mellin_factor(k, &session->state);
    });
}

hz_status hz_session_errata_json(const hz_session* session, char** out) {
    if (hz_status st = require(session != nullptr && out != nullptr, "null argument"); st != HZ_OK)
        return st;
    return run([&] {
        if (!session->has_report)
            throw hzeta::UnresolvedHypothesis("errata requested before hz_session_resolve");
        *out = dup_string(hzeta::errata_to_json(session->report));
    });
}

hz_status hz_kernel_mellin(const hz_session* session, const char* kernel, hz_complex s,
                           hz_complex a, const char* candidate, hz_complex* out) {
    if (hz_status st = require(kernel != nullptr && candidate != nullptr && out != nullptr,
                               "null argument");
        st != HZ_OK)
        return st;
    return run([&] {
        const hzeta::KernelKind k = hzeta::kernel_from_string(kernel);
        *out = to_c(hzeta::kernel_mellin(k, from_c(s), from_c(a), candidate, state_of(session)));
    });
}

hz_status hz_closed_form(const hz_session* session, const char* family, int n, hz_complex a,
                         hz_complex s, const char* candidate, hz_complex* out) {
    if (hz_status st = require(family != nullptr && candidate != nullptr && out != nullptr,
                               "null argument");
        st != HZ_OK)
        return st;
    return run([&] {
        const hzeta::Family f = hzeta::family_from_string(family);
        const cplx av = from_c(a);
        const cplx sv = from_c(s);
        if (hzeta::is_even_family(f)) {
            *out = to_c(hzeta::closed_even(f, n, av, sv, candidate, state_of(session)));
        } else {
            *out = to_c(hzeta::closed_odd(f, n, av, sv, candidate, state_of(session)));
        }
    });
}

hz_status hz_laguerre_route(int n, hz_complex a, hz_complex s, double tol, hz_complex* out) {
    if (hz_status st = require(out != nullptr, "null out"); st != HZ_OK) return st;
    return run([&] {
        *out = to_c(hzeta::laguerre_route(n, from_c(a), from_c(s), tol > 0.0 ? tol : 1e-11));
    });
}

hz_status hz_family_quadrature(const hz_family_spec* spec, double tol, hz_quad_result* out) {
    if (hz_status st = require(spec != nullptr && out != nullptr, "null argument"); st != HZ_OK)
        return st;
    return run([&] {
        const hzeta::QuadratureOutcome q =
            hzeta::family_quadrature(spec_from_c(*spec), tol > 0.0 ? tol : 1e-11);
        quad_to_c(q, *out);
    });
}

hz_status hz_integrate_half_line(hz_integrand f, void* ctx, double tol, double decay_rate,
                                 hz_quad_result* out) {
    if (hz_status st = require(f != nullptr && out != nullptr, "null argument"); st != HZ_OK)
        return st;
    return run([&] {
        const hzeta::Integrand wrapped = [f, ctx](double t) -> cplx {
            return cplx(f(t, ctx), 0.0);
        };
        quad_to_c(hzeta::integrate_half_line(wrapped, tol, decay_rate), *out);
    });
}

const char* hz_verify_status_str(int verify_status) {
    return hzeta::to_string(static_cast<hzeta::VerifyStatus>(verify_status));
}

hz_status hz_verify_point(const hz_session* session, const hz_family_spec* spec,
                          const char* candidate, double tol, hz_record* out) {
    if (hz_status st =
            require(spec != nullptr && candidate != nullptr && out != nullptr, "null argument");
        st != HZ_OK)
        return st;
    return run([&] {
        const hzeta::VerificationRecord rec =
            hzeta::verify_point(spec_from_c(*spec), candidate, tol, state_of(session));
        record_to_c(rec, *out);
    });
}

hz_status hz_parseval_check(int n, hz_complex a, hz_complex s, double tol, hz_record* out) {
    if (hz_status st = require(out != nullptr, "null out"); st != HZ_OK) return st;
    return run([&] {
        const hzeta::VerificationRecord rec =
            hzeta::parseval_check(n, from_c(a), from_c(s), tol);
        record_to_c(rec, *out);
    });
}

hz_status hz_sweep_run(const hz_session* session, const char* grid_json, double tol, int threads,
                       hz_sweep** out) {
    if (hz_status st = require(grid_json != nullptr && out != nullptr, "null argument");
        st != HZ_OK)
        return st;
    return run([&] {
        const std::vector<hzeta::SweepPoint> points = hzeta::parse_grid_json(grid_json);
        auto sweep = std::make_unique<hz_sweep>();
        sweep->records = hzeta::sweep(points, tol, threads, state_of(session));
        *out = sweep.release();
    });
}

size_t hz_sweep_count(const hz_sweep* sweep) { return sweep != nullptr ? sweep->records.size() : 0; }

hz_status hz_sweep_record(const hz_sweep* sweep, size_t index, hz_record* out) {
    if (hz_status st = require(sweep != nullptr && out != nullptr, "null argument"); st != HZ_OK)
        return st;
    if (hz_status st = require(index < sweep->records.size(), "record index out of range");
        st != HZ_OK)
        return st;
    record_to_c(sweep->records[index], *out);
    return HZ_OK;
}

int hz_sweep_all_pass(const hz_sweep* sweep) {
    if (sweep == nullptr) return 0;
    for (const auto& rec : sweep->records) {
        if (rec.status == hzeta::VerifyStatus::Fail ||
            rec.status == hzeta::VerifyStatus::NoConvergence) {
            return 0;
        }
    }
    return 1;
}

hz_status hz_sweep_json(const hz_sweep* sweep, char** out) {
    if (hz_status st = require(sweep != nullptr && out != nullptr, "null argument"); st != HZ_OK)
        return st;
    return run([&] { *out = dup_string(hzeta::records_to_json(sweep->records)); });
}

hz_status hz_sweep_csv(const hz_sweep* sweep, char** out) {
    if (hz_status st = require(sweep != nullptr && out != nullptr, "null argument"); st != HZ_OK)
        return st;
    return run([&] { *out = dup_string(hzeta::records_to_csv(sweep->records)); });
}

void hz_sweep_free(hz_sweep* sweep) { delete sweep; }

}  // extern "C"
