#pragma once

#include <string>
#include <vector>

#include "verification.hpp"

namespace hzeta {

// Record serialization. JSON field names are part of the external contract:
// family, n, a, s, candidate, closed, quad, abs_err, rel_err, tol, status,
// n_evals, runtime_ms, with complex values as [re, im]. CSV flattens complex
// fields into paired _re/_im columns.
std::string record_to_json(const VerificationRecord& rec);
std::string records_to_json(const std::vector<VerificationRecord>& recs);
std::string records_to_csv(const std::vector<VerificationRecord>& recs);

// Grid files are JSON arrays of family-spec objects using the same field
// names; a and s accept either a number or [re, im]; kernel_scale, q and
// candidate are optional.
std::vector<SweepPoint> parse_grid_json(const std::string& text);

std::string errata_to_json(const ErrataReport& report);

}  // namespace hzeta
