#pragma once

#include <string>
#include <vector>

#include "cliffrank/rank_formulas.hpp"

namespace cliffrank {

// Audit of the specialized bracket-support formula blocks (equal ranks,
// fixed second rank 1..4, small-rank pairs, ranks near n, mixed near-n /
// small pairs) against closed_form_grades over all n up to n_max.
//
// Sub-cases whose printed source is garbled beyond a safe reading are not
// checked; they are listed in `skipped` with the reason.
struct SpecialCaseReport {
    int checks = 0;
    std::vector<std::string> mismatches;
    std::vector<std::string> skipped;

    bool clean() const { return mismatches.empty(); }
};

SpecialCaseReport special_case_audit(int n_max);

} // namespace cliffrank
