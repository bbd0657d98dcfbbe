#include "report.hpp"

#include <json.hpp>
#include <sstream>

#include "errors.hpp"

namespace hzeta {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json complex_to_json(const cplx& z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json record_json(const VerificationRecord& rec) {
    ordered_json j;
    j["family"] = to_string(rec.spec.family);
    j["n"] = rec.spec.n;
    j["a"] = complex_to_json(rec.spec.a);
    j["s"] = complex_to_json(rec.spec.s);
    j["candidate"] = rec.candidate;
    j["closed"] = complex_to_json(rec.closed);
    j["quad"] = complex_to_json(rec.quad);
    j["abs_err"] = rec.abs_err;
    j["rel_err"] = rec.rel_err;
    j["tol"] = rec.tol;
    j["status"] = to_string(rec.status);
    j["n_evals"] = rec.n_evals;
    j["runtime_ms"] = rec.runtime_ms;
    return j;
}

cplx complex_from_json(const ordered_json& j, const char* what) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && (j.size() == 1 || j.size() == 2)) {
        const double re = j[0].get<double>();
        const double im = j.size() == 2 ? j[1].get<double>() : 0.0;
        return cplx(re, im);
    }
    throw InvalidArgument(std::string("grid: field '") + what + "' must be a number or [re, im]");
}

}  // namespace

std::string record_to_json(const VerificationRecord& rec) { return record_json(rec).dump(); }

std::string records_to_json(const std::vector<VerificationRecord>& recs) {
    ordered_json arr = ordered_json::array();
    for (const VerificationRecord& rec : recs) arr.push_back(record_json(rec));
    return arr.dump(2);
}

std::string records_to_csv(const std::vector<VerificationRecord>& recs) {
    std::ostringstream os;
    os.precision(17);
    os << "family,n,a_re,a_im,s_re,s_im,candidate,closed_re,closed_im,quad_re,quad_im,"
          "abs_err,rel_err,tol,status,n_evals,runtime_ms\n";
    for (const VerificationRecord& r : recs) {
        os << to_string(r.spec.family) << ',' << r.spec.n << ',' << r.spec.a.real() << ','
           << r.spec.a.imag() << ',' << r.spec.s.real() << ',' << r.spec.s.imag() << ','
           << r.candidate << ',' << r.closed.real() << ',' << r.closed.imag() << ','
           << r.quad.real() << ',' << r.quad.imag() << ',' << r.abs_err << ',' << r.rel_err << ','
           << r.tol << ',' << to_string(r.status) << ',' << r.n_evals << ',' << r.runtime_ms
           << '\n';
    }
    return os.str();
}

std::vector<SweepPoint> parse_grid_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw InvalidArgument(std::string("grid: invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw InvalidArgument("grid: top level must be a JSON array");

    std::vector<SweepPoint> points;
    points.reserve(doc.size());
    for (const auto& item : doc) {
        if (!item.is_object()) throw InvalidArgument("grid: entries must be objects");
        if (!item.contains("family")) throw InvalidArgument("grid: entry missing 'family'");
        SweepPoint p;
        p.spec.family = family_from_string(item.at("family").get<std::string>());
        if (item.contains("n")) p.spec.n = item.at("n").get<int>();
        if (item.contains("a")) p.spec.a = complex_from_json(item.at("a"), "a");
        if (item.contains("s")) p.spec.s = complex_from_json(item.at("s"), "s");
        if (item.contains("kernel_scale")) p.spec.kernel_scale = item.at("kernel_scale").get<double>();
        if (item.contains("q")) p.spec.q = item.at("q").get<double>();
        if (item.contains("candidate")) p.candidate = item.at("candidate").get<std::string>();
        points.push_back(std::move(p));
    }
    return points;
}

std::string errata_to_json(const ErrataReport& report) {
    ordered_json j;
    j["tolerances"] = {{"family_rel", report.family_tol}, {"mellin_rel", report.mellin_tol}};

    ordered_json fams = ordered_json::array();
    for (const FamilyResolution& fr : report.families) {
        ordered_json f;
        f["family"] = to_string(fr.family);
        f["canonical"] = fr.canonical_id;
        f["grid_points"] = fr.grid_size;
        ordered_json cands = ordered_json::array();
        for (const CandidateOutcome& c : fr.outcomes) {
            cands.push_back({{"id", c.id},
                             {"note", c.note},
                             {"passed", c.passed},
                             {"failed", c.failed},
                             {"skipped", c.skipped},
                             {"worst_rel_err", c.worst_rel}});
        }
        f["candidates"] = std::move(cands);
        f["discrepancies"] = fr.discrepancies;
        fams.push_back(std::move(f));
    }
    j["families"] = std::move(fams);

    ordered_json mell = ordered_json::array();
    for (const MellinResolution& mr : report.mellin) {
        mell.push_back({{"kernel", to_string(mr.kernel)},
                        {"constant", mr.factor},
                        {"candidate", mr.candidate_id},
                        {"worst_rel_err", mr.worst_rel},
                        {"rejected", mr.rejected}});
    }
    j["mellin_constants"] = std::move(mell);
    return j.dump(2);
}

}  // namespace hzeta
