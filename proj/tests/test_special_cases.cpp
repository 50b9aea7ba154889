#include <doctest.h>

#include "cliffrank/special_cases.hpp"

using namespace cliffrank;

TEST_CASE("special-case audit is clean up to n = 12") {
    const SpecialCaseReport report = special_case_audit(12);
    for (const auto& m : report.mismatches) MESSAGE(m);
    CHECK(report.mismatches.empty());
    CHECK(report.checks > 500);
    // The two sub-cases whose printed source is unreadable.
    CHECK(report.skipped.size() == 2);
}

TEST_CASE("audit rejects invalid n_max") {
    CHECK_THROWS_AS(special_case_audit(0), std::domain_error);
}

TEST_CASE("equal-rank examples from the encoded block") {
    // k = l = 3 (odd), n >= 6: {2, 6}; matches the generic formulas.
    CHECK(closed_form_grades(6, 3, 3, BracketKind::commutator) == GradeSet{2, 6});
    CHECK(closed_form_grades(8, 3, 3, BracketKind::commutator) == GradeSet{2, 6});
    // [U^2, V^2]: {2} for n >= 3, empty for n = 2.
    CHECK(closed_form_grades(3, 2, 2, BracketKind::commutator) == GradeSet{2});
    CHECK(closed_form_grades(2, 2, 2, BracketKind::commutator).empty());
    // Top ranks commute.
    for (int n = 1; n <= 12; ++n)
        CHECK(closed_form_grades(n, n, n, BracketKind::commutator).empty());
}
