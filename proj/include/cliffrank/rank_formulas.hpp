#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffrank/grade_set.hpp"
#include "cliffrank/signature.hpp"

namespace cliffrank {

enum class BracketKind { commutator, anticommutator };

std::string bracket_kind_name(BracketKind kind);

inline constexpr std::uint64_t kDefaultBladePairBudget = std::uint64_t{1} << 24;

// Grade support of [U^k, V^l] (resp. {U^k, V^l}) from the coincidence-count
// rule: a blade pair with s shared indices lands in grade k+l-2s and
// survives the commutator iff kl-s is odd (anticommutator: even), with
// s ranging over [max(0, k+l-n), min(k, l)].
GradeSet kernel_grades(int n, int k, int l, BracketKind kind);

// The same support from the closed-form case analysis (arithmetic
// progressions stepping by 4, with endpoints split on the parities of n, k
// and l and on whether k+l exceeds n). Transcribed independently of
// kernel_grades; the two are asserted equal in the test suites.
GradeSet closed_form_grades(int n, int k, int l, BracketKind kind);

// Blade-level brute force: union over all grade-k x grade-l blade pairs of
// the bracket's support. Independent of both formula paths. Throws
// resource_error when C(n,k)*C(n,l) exceeds the budget.
GradeSet bruteforce_grades(const Signature& sig, int k, int l, BracketKind kind,
                           std::uint64_t budget = kDefaultBladePairBudget);

// Full (k,l) table of closed-form supports, k,l in [1,n].
struct RankTable {
    int n = 0;
    BracketKind kind = BracketKind::commutator;
    std::vector<GradeSet> cells; // row-major, n*n

    GradeSet& cell(int k, int l) { return cells[(k - 1) * n + (l - 1)]; }
    const GradeSet& cell(int k, int l) const { return cells[(k - 1) * n + (l - 1)]; }

    friend bool operator==(const RankTable& a, const RankTable& b) {
        return a.n == b.n && a.kind == b.kind && a.cells == b.cells;
    }
};

RankTable build_table(int n, BracketKind kind);

} // namespace cliffrank
