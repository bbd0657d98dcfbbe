// Command-line front end for the hzeta shared library. Talks to the core
// exclusively through the public C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "hzeta/hzeta.h"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct SessionHandle {
    hz_session* ptr = hz_session_new();
    ~SessionHandle() { hz_session_free(ptr); }
};

struct SweepHandle {
    hz_sweep* ptr = nullptr;
    ~SweepHandle() { hz_sweep_free(ptr); }
};

// Complex flags parse as "RE" or "RE,IM".
bool parse_complex(const std::string& text, hz_complex& out) {
    const auto comma = text.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            out.re = std::stod(text, &used);
            out.im = 0.0;
            return used == text.size();
        }
        out.re = std::stod(text.substr(0, comma), &used);
        if (used != comma) return false;
        const std::string im = text.substr(comma + 1);
        out.im = std::stod(im, &used);
        return used == im.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_complex(hz_complex z) {
    if (z.im == 0.0) return fmt_double(z.re);
    std::string s = fmt_double(z.re);
    s += z.im < 0.0 ? " - " : " + ";
    s += fmt_double(std::abs(z.im));
    s += "i";
    return s;
}

ordered_json complex_json(hz_complex z) { return ordered_json::array({z.re, z.im}); }

int fail_with(hz_status status, const std::string& context) {
    std::cerr << "error: " << context << ": " << hz_status_str(status);
    const std::string detail = hz_last_error();
    if (!detail.empty()) std::cerr << " (" << detail << ")";
    std::cerr << "\n";
    switch (status) {
        case HZ_ERR_INVALID: return kExitUsage;
        default: return kExitFail;
    }
}

bool write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << "\n";
        return true;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return false;
    }
    out << payload;
    return true;
}

ordered_json record_json(const hz_record& rec) {
    ordered_json j;
    j["family"] = rec.spec.family;
    j["n"] = rec.spec.n;
    j["a"] = complex_json(rec.spec.a);
    j["s"] = complex_json(rec.spec.s);
    j["candidate"] = rec.candidate;
    j["closed"] = complex_json(rec.closed);
    j["quad"] = complex_json(rec.quad);
    j["abs_err"] = rec.abs_err;
    j["rel_err"] = rec.rel_err;
    j["tol"] = rec.tol;
    j["status"] = hz_verify_status_str(rec.status);
    j["n_evals"] = rec.n_evals;
    j["runtime_ms"] = rec.runtime_ms;
    return j;
}

int run_zeta(const std::string& s_text, const std::string& a_text, bool deriv, bool use_integral,
             const std::string& format, const std::string& out_path) {
    hz_complex s{}, a{};
    if (!parse_complex(s_text, s) || !parse_complex(a_text, a)) {
        std::cerr << "error: --s/--a expect RE or RE,IM\n";
        return kExitUsage;
    }
    hz_complex value{};
    hz_status st;
    const char* what;
    if (deriv) {
        st = hz_hurwitz_zeta_ds(s, a, &value);
        what = "zeta-derivative";
    } else if (use_integral) {
        st = hz_hermite_zeta(s, a, &value);
        what = "zeta(integral route)";
    } else {
        st = hz_hurwitz_zeta(s, a, &value);
        what = "zeta";
    }
    if (st != HZ_OK) return fail_with(st, what);

    if (format == "json") {
        ordered_json j;
        j["op"] = deriv ? "zeta-deriv" : "zeta";
        j["s"] = complex_json(s);
        j["a"] = complex_json(a);
        j["value"] = complex_json(value);
        return write_output(out_path, j.dump(2)) ? kExitOk : kExitFail;
    }
    std::ostringstream os;
    os << (deriv ? "zeta'(" : "zeta(") << fmt_complex(s) << ", " << fmt_complex(a)
       << ") = " << fmt_complex(value);
    return write_output(out_path, os.str()) ? kExitOk : kExitFail;
}

int run_transform(const std::string& kernel, double w, double beta, const std::string& format,
                  const std::string& out_path) {
    double value = 0.0;
    int is_cosine = 0;
    const hz_status st = hz_kernel_sine_transform(kernel.c_str(), w, beta, &value, &is_cosine);
    if (st != HZ_OK) return fail_with(st, "transform");

    if (format == "json") {
        ordered_json j;
        j["op"] = "transform";
        j["kernel"] = kernel;
        j["w"] = w;
        j["beta"] = beta;
        j["sense"] = is_cosine ? "cosine" : "sine";
        j["value"] = value;
        return write_output(out_path, j.dump(2)) ? kExitOk : kExitFail;
    }
    std::ostringstream os;
    os << (is_cosine ? "cosine" : "sine") << " transform[" << kernel << "](w=" << fmt_double(w)
       << ", beta=" << fmt_double(beta) << ") = " << fmt_double(value);
    return write_output(out_path, os.str()) ? kExitOk : kExitFail;
}

bool ensure_resolved(SessionHandle& session) {
    if (hz_session_is_resolved(session.ptr)) return true;
    const hz_status st = hz_session_resolve(session.ptr, 1e-8, 1e-10);
    if (st != HZ_OK) {
        fail_with(st, "hypothesis resolution");
        return false;
    }
    return true;
}

int run_eval(const std::string& family, int n, const std::string& a_text,
             const std::string& s_text, const std::string& method, const std::string& candidate,
             double scale, double q, double tol, const std::string& format,
             const std::string& out_path) {
    hz_complex a{1.0, 0.0}, s{2.0, 0.0};
    if (!parse_complex(a_text, a) || !parse_complex(s_text, s)) {
        std::cerr << "error: --a/--s expect RE or RE,IM\n";
        return kExitUsage;
    }
    const bool open_family = family.rfind("open-", 0) == 0;
    if (open_family && method != "quad") {
        std::cerr << "error: open families support --method quad only (no closed form is claimed)\n";
        return kExitUsage;
    }

    hz_family_spec spec{};
    std::snprintf(spec.family, sizeof(spec.family), "%s", family.c_str());
    spec.n = n;
    spec.a = a;
    spec.s = s;
    spec.kernel_scale = scale;
    spec.q = q;

    SessionHandle session;
    const bool needs_session = method != "quad" && candidate == "canonical";
    if (needs_session && !ensure_resolved(session)) return kExitFail;

    ordered_json j;
    j["op"] = "eval";
    j["family"] = family;
    j["n"] = n;
    j["a"] = complex_json(a);
    j["s"] = complex_json(s);
    std::ostringstream text;

    if (method == "closed") {
        hz_complex value{};
        const hz_status st =
            hz_closed_form(session.ptr, family.c_str(), n, a, s, candidate.c_str(), &value);
        if (st != HZ_OK) return fail_with(st, "closed form");
        j["candidate"] = candidate;
        j["closed"] = complex_json(value);
        text << family << " closed[" << candidate << "] = " << fmt_complex(value);
    } else if (method == "quad") {
        hz_quad_result q_out{};
        const hz_status st = hz_family_quadrature(&spec, tol > 0 ? tol * 1e-3 : 1e-11, &q_out);
        if (st != HZ_OK) return fail_with(st, "quadrature");
        j["quad"] = complex_json(q_out.value);
        j["err_estimate"] = q_out.err_estimate;
        j["n_evals"] = q_out.n_evals;
        text << family << " quad = " << fmt_complex(q_out.value)
             << "  (err_estimate " << fmt_double(q_out.err_estimate) << ", " << q_out.n_evals
             << " evals)";
    } else if (method == "both") {
        hz_record rec{};
        const hz_status st = hz_verify_point(session.ptr, &spec, candidate.c_str(), tol, &rec);
        if (st != HZ_OK) return fail_with(st, "verification");
        j = record_json(rec);
        text << family << " closed[" << rec.candidate << "] = " << fmt_complex(rec.closed)
             << "\n" << family << " quad = " << fmt_complex(rec.quad)
             << "\nabs_err = " << fmt_double(rec.abs_err)
             << "  rel_err = " << fmt_double(rec.rel_err) << "  ["
             << hz_verify_status_str(rec.status) << "]";
        const std::string payload = format == "json" ? j.dump(2) : text.str();
        if (!write_output(out_path, payload)) return kExitFail;
        return rec.status == HZ_VERIFY_PASS ? kExitOk : kExitFail;
    } else {
        std::cerr << "error: --method must be closed, quad or both\n";
        return kExitUsage;
    }

    const std::string payload = format == "json" ? j.dump(2) : text.str();
    return write_output(out_path, payload) ? kExitOk : kExitFail;
}

int run_sweep(const std::string& grid_path, double tol, int threads, const std::string& format,
              const std::string& out_path) {
    std::ifstream in(grid_path);
    if (!in) {
        std::cerr << "error: cannot read grid file " << grid_path << "\n";
        return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string grid = buf.str();

    SessionHandle session;
    SweepHandle sweep;
    hz_status st = hz_sweep_run(session.ptr, grid.c_str(), tol, threads, &sweep.ptr);
    if (st == HZ_ERR_UNRESOLVED) {
        // Grid asks for canonical candidates: resolve and retry.
        if (!ensure_resolved(session)) return kExitFail;
        st = hz_sweep_run(session.ptr, grid.c_str(), tol, threads, &sweep.ptr);
    }
    if (st != HZ_OK) return fail_with(st, "sweep");

    char* payload = nullptr;
    st = format == "csv" ? hz_sweep_csv(sweep.ptr, &payload) : hz_sweep_json(sweep.ptr, &payload);
    if (st != HZ_OK) return fail_with(st, "sweep serialization");
    const std::string text = payload;
    hz_string_free(payload);
    if (!write_output(out_path, text)) return kExitFail;

    const std::size_t count = hz_sweep_count(sweep.ptr);
    std::cerr << "sweep: " << count << " records, "
              << (hz_sweep_all_pass(sweep.ptr) ? "all pass" : "failures present") << "\n";
    return hz_sweep_all_pass(sweep.ptr) ? kExitOk : kExitFail;
}

int run_errata(double family_tol, double mellin_tol, const std::string& out_path) {
    SessionHandle session;
    hz_status st = hz_session_resolve(session.ptr, family_tol, mellin_tol);
    if (st != HZ_OK) return fail_with(st, "hypothesis resolution");
    char* payload = nullptr;
    st = hz_session_errata_json(session.ptr, &payload);
    if (st != HZ_OK) return fail_with(st, "errata");
    const std::string text = payload;
    hz_string_free(payload);
    return write_output(out_path, text) ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hzeta: closed forms, quadrature oracles and identity verification for a "
                 "family of Hurwitz-zeta-connected integrals"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format: text, json or csv (sweep only)")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // zeta
    auto* zeta_cmd = app.add_subcommand("zeta", "Evaluate the Hurwitz zeta or its s-derivative");
    std::string z_s = "2", z_a = "1";
    bool z_deriv = false, z_integral = false;
    std::string z_out;
    zeta_cmd->add_option("--s", z_s, "s as RE or RE,IM")->required();
    zeta_cmd->add_option("--a", z_a, "a as RE or RE,IM")->required();
    zeta_cmd->add_flag("--deriv", z_deriv, "Evaluate d zeta / d s instead");
    zeta_cmd->add_flag("--integral", z_integral, "Use the integral-representation route");
    zeta_cmd->add_option("--out", z_out, "Write output to a file");

    // transform
    auto* tr_cmd = app.add_subcommand("transform", "Closed-form kernel transform value");
    std::string t_kernel = "bose";
    double t_w = 1.0, t_beta = 3.14159265358979323846;
    std::string t_out;
    tr_cmd->add_option("--kernel", t_kernel, "bose, sinh, fermi or cosh")->required();
    tr_cmd->add_option("--w", t_w, "Frequency (>= 0)")->required();
    tr_cmd->add_option("--beta", t_beta, "Kernel scale (ignored for bose)");
    tr_cmd->add_option("--out", t_out, "Write output to a file");

    // eval
    auto* ev_cmd = app.add_subcommand("eval", "Evaluate one family point");
    std::string e_family;
    int e_n = 0;
    std::string e_a = "1", e_s = "2", e_method = "both", e_candidate = "canonical", e_out;
    double e_scale = 0.0, e_q = 1.0, e_tol = 1e-8;
    ev_cmd->add_option("--family", e_family, "Family name, e.g. bose-even or open-T")->required();
    ev_cmd->add_option("--n", e_n, "Power index (k for open families)");
    ev_cmd->add_option("--a", e_a, "a as RE or RE,IM");
    ev_cmd->add_option("--s", e_s, "s as RE or RE,IM");
    ev_cmd->add_option("--method", e_method, "closed, quad or both");
    ev_cmd->add_option("--candidate", e_candidate, "Closed-form candidate id (default canonical)");
    ev_cmd->add_option("--scale", e_scale, "Kernel scale override (0 = family default)");
    ev_cmd->add_option("--q", e_q, "q for open families");
    ev_cmd->add_option("--tol", e_tol, "Relative tolerance for --method both");
    ev_cmd->add_option("--out", e_out, "Write output to a file");

    // sweep
    auto* sw_cmd = app.add_subcommand("sweep", "Verify a JSON grid of family points");
    std::string s_grid, s_out;
    double s_tol = 1e-8;
    int s_threads = 1;
    sw_cmd->add_option("--grid", s_grid, "Grid file (JSON array of family specs)")->required();
    sw_cmd->add_option("--tol", s_tol, "Relative tolerance per point");
    sw_cmd->add_option("--parallel", s_threads, "Worker threads (1 = sequential)");
    sw_cmd->add_option("--out", s_out, "Write records to a file");

    // errata
    auto* er_cmd = app.add_subcommand("errata", "Run hypothesis resolution, emit the errata report");
    std::string er_out;
    double er_tol = 1e-8, er_mellin_tol = 1e-10;
    er_cmd->add_option("--tol", er_tol, "Family resolution tolerance");
    er_cmd->add_option("--mellin-tol", er_mellin_tol, "Mellin constant tolerance");
    er_cmd->add_option("--out", er_out, "Write the JSON report to a file");

    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (zeta_cmd->parsed()) return run_zeta(z_s, z_a, z_deriv, z_integral, format, z_out);
    if (tr_cmd->parsed()) return run_transform(t_kernel, t_w, t_beta, format, t_out);
    if (ev_cmd->parsed())
        return run_eval(e_family, e_n, e_a, e_s, e_method, e_candidate, e_scale, e_q, e_tol,
                        format, e_out);
    if (sw_cmd->parsed()) return run_sweep(s_grid, s_tol, s_threads, format, s_out);
    if (er_cmd->parsed()) return run_errata(er_tol, er_mellin_tol, er_out);
    return kExitUsage;
}
