#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cliffrank/gaussian.hpp"
#include "cliffrank/grade_set.hpp"
#include "cliffrank/rank_formulas.hpp"
#include "cliffrank/signature.hpp"

namespace cliffrank {

// Coefficient profile a_k of wC(p,q): a_k = i for k = 0,1 (mod 4),
// a_k = 1 for k = 2,3 (mod 4). phase(k) is the exponent of i.
inline int coefficient_phase(int k) {
    const int r = ((k % 4) + 4) % 4;
    return (r == 0 || r == 1) ? 1 : 0;
}

inline Gaussian coefficient_a(int k) {
    return coefficient_phase(k) ? Gaussian::unit_i() : Gaussian(1);
}

enum class SubspaceVariant {
    complex_lie, // direct sum of a_k C_k^R(p,q), phases matter
    plain,       // direct sum of C_k(p,q), coefficients undecorated
};

// Candidate graded Lie subalgebra: a direct sum of full graded components.
struct GradedSubspace {
    enum class Provenance { catalog_item, augmented, enumerated };

    int n = 0;
    GradeSet grades;
    SubspaceVariant variant = SubspaceVariant::complex_lie;
    Provenance provenance = Provenance::enumerated;
    int item = 0; // catalog item number 1..12 when provenance == catalog_item

    // "i u^0", "i u^1 + u^2", ... (plain variant drops the i decorations).
    std::string str() const;
};

// The 12 catalog types applicable at this n, deduplicated by grade set and
// ordered by item number. With `augmented`, also the reducible extensions:
// grade 0 may always be adjoined; grade n for odd n; grade n for even n
// only to all-even-grade entries.
std::vector<GradedSubspace> catalog(int n, SubspaceVariant variant, bool augmented = false);

// Golden listing for n in [1,10], transcribed from the reference tables
// this tool regenerates; the arbiter for the catalog's truncation rules.
std::vector<GradedSubspace> golden_listing(int n, SubspaceVariant variant = SubspaceVariant::complex_lie);

// Closure test via the kernel rule: every predicted bracket grade stays in
// the set, and (complex_lie only) a_k * a_l is a real multiple of a_m.
bool closure_by_prediction(const GradedSubspace& s);

// Closure test at blade level, independent of kernel_grades: brackets of
// decorated basis blades, term by term, via exact multivector arithmetic.
bool closure_by_bruteforce(const Signature& sig, const GradedSubspace& s,
                           std::uint64_t budget = kDefaultBladePairBudget);

// Blade-level closure data for one grade pair, cached so sweeps over many
// candidate subsets do not recompute blade brackets.
class ClosureOracle {
public:
    ClosureOracle(Signature sig, SubspaceVariant variant,
                  std::uint64_t budget = kDefaultBladePairBudget)
        : sig_(sig), variant_(variant), budget_(budget) {}

    bool closed(const GradeSet& grades) const;

private:
    struct PairScan {
        GradeSet grades;        // bracket support over all blade pairs
        bool phase_ok = true;   // every term a real multiple of a_m
    };
    const PairScan& scan(int k, int l) const;

    Signature sig_;
    SubspaceVariant variant_;
    std::uint64_t budget_;
    mutable std::map<std::pair<int, int>, PairScan> cache_;
};

// Every closed subset of {0..n} under closure_by_prediction, in
// lexicographic grade-set order, classified against the catalog.
struct EnumeratedSubspace {
    enum class Origin { trivial, catalog_item, augmented, extra };

    GradeSet grades;
    Origin origin = Origin::extra;
    int item = 0; // when origin == catalog_item

    friend bool operator==(const EnumeratedSubspace&, const EnumeratedSubspace&) = default;
};

std::vector<EnumeratedSubspace> enumerate_closed(int n, SubspaceVariant variant, int cap = 14);

// Three-way comparison of golden listing, catalog and exhaustive
// enumeration for n in [1,10].
struct SubalgebraDiff {
    std::vector<GradeSet> golden_not_closed; // golden entries failing blade-level closure
    std::vector<GradeSet> catalog_only;      // in catalog, missing from golden listing
    std::vector<GradeSet> golden_only;       // in golden listing, missing from catalog
    std::vector<GradeSet> extra_closed;      // enumerated, outside catalog + augmentations

    bool listings_agree() const { return catalog_only.empty() && golden_only.empty(); }
};

SubalgebraDiff diff_report(int n, std::uint64_t budget = kDefaultBladePairBudget);

} // namespace cliffrank
