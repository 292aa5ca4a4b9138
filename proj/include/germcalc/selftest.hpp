#pragma once

#include <string>
#include <vector>

namespace germcalc {

/// Outcome of one corpus acceptance criterion.
struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first failing assertion, or a short summary
};

/// Run every acceptance criterion against the bundled corpus directory.
/// Throws `error` when the path is empty, missing, or contains no session
/// files (a configuration error, distinct from a criterion failure).
std::vector<CriterionResult> corpus_selftest(const std::string& corpus_dir);

}  // namespace germcalc
