#include "cliffrank/subalgebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "cliffrank/blade.hpp"
#include "cliffrank/errors.hpp"
#include "cliffrank/multivector.hpp"

namespace cliffrank {

namespace {

GradedSubspace make_item(int n, SubspaceVariant variant, int item, GradeSet grades) {
    GradedSubspace s;
    s.n = n;
    s.grades = std::move(grades);
    s.variant = variant;
    s.provenance = GradedSubspace::Provenance::catalog_item;
    s.item = item;
    return s;
}

GradeSet range_set(int lo, int hi) {
    GradeSet s;
    for (int g = lo; g <= hi; ++g) s.insert(g);
    return s;
}

// Pattern grades of items 9-12, ascending, up to and including top grade k.
GradeSet pattern_23_mod4(int k) { // 2,3,6,7,10,11,...
    GradeSet s;
    for (int g = 2; g <= k; ++g)
        if (g % 4 == 2 || g % 4 == 3) s.insert(g);
    return s;
}
GradeSet pattern_even(int k) { // 2,4,6,...
    GradeSet s;
    for (int g = 2; g <= k; g += 2) s.insert(g);
    return s;
}
GradeSet pattern_12_mod4(int k) { // 1,2,5,6,9,10,...
    GradeSet s;
    for (int g = 1; g <= k; ++g)
        if (g % 4 == 1 || g % 4 == 2) s.insert(g);
    return s;
}
GradeSet pattern_2_mod4(int k) { // 2,6,10,...
    GradeSet s;
    for (int g = 2; g <= k; g += 4) s.insert(g);
    return s;
}

bool all_even(const GradeSet& s) {
    return std::all_of(s.begin(), s.end(), [](int g) { return g % 2 == 0; });
}

} // namespace

std::string GradedSubspace::str() const {
    if (grades.empty()) return "0";
    std::string out;
    for (int k : grades) {
        if (!out.empty()) out += " + ";
        if (variant == SubspaceVariant::complex_lie && coefficient_phase(k)) out += "i ";
        out += "u^" + std::to_string(k);
    }
    return out;
}

std::vector<GradedSubspace> catalog(int n, SubspaceVariant variant, bool augmented) {
    if (n < 1) throw std::domain_error("catalog: n must be >= 1");

    std::vector<GradedSubspace> items;
    auto emit = [&](int item, GradeSet grades) {
        // Coincidence notes in the type list: drop grade-set duplicates.
        for (const auto& prev : items)
            if (prev.grades == grades) return;
        items.push_back(make_item(n, variant, item, std::move(grades)));
    };

    emit(1, {0});
    emit(2, {n});
    if (n >= 2) emit(3, {1, 2});
    if (n >= 3) emit(4, {2});
    if (n >= 4) emit(5, n % 2 == 0 ? range_set(1, n) : range_set(1, n - 1));
    if (n >= 4) emit(6, {2, n - 1});
    if (n >= 5) emit(7, {2, n - 2});
    if (n >= 6) emit(8, n % 2 ? GradeSet{1, 2, n - 2, n - 1} : GradeSet{1, 2, n - 1, n});

    // Items 9-12: the largest pattern prefix whose top grade k satisfies the
    // stated relation to n.
    if (n >= 6) { // top grade k: odd k for n = k+1, k+2; even k for n = k, k+1
        int best = 0;
        for (int k = 2; k <= n; ++k) {
            if (k % 4 != 2 && k % 4 != 3) continue;
            const bool ok = (k % 2) ? (n == k + 1 || n == k + 2) : (n == k || n == k + 1);
            if (ok) best = std::max(best, k);
        }
        if (best) emit(9, pattern_23_mod4(best));
    }
    if (n >= 7) { // even top grade k for n = k+1, k+2
        int best = 0;
        for (int k = 2; k <= n; k += 2)
            if (n == k + 1 || n == k + 2) best = std::max(best, k);
        if (best) emit(10, pattern_even(best));
    }
    if (n >= 8) { // even top grade k for n = k, k+1, k+2, k+3
        int best = 0;
        for (int k = 2; k <= n; ++k) {
            if (k % 2) continue;
            if (k % 4 != 2) continue; // pattern 1,2,5,6,... ends at k = 2 (mod 4)
            if (n >= k && n <= k + 3) best = std::max(best, k);
        }
        if (best) emit(11, pattern_12_mod4(best));
    }
    if (n >= 9) { // top grade k = 2 (mod 4) for n = k+1, ..., k+4
        int best = 0;
        for (int k = 2; k <= n; k += 4)
            if (n >= k + 1 && n <= k + 4) best = std::max(best, k);
        if (best) emit(12, pattern_2_mod4(best));
    }

    if (!augmented) return items;

    std::vector<GradedSubspace> out = items;
    auto emit_aug = [&](GradeSet grades) {
        for (const auto& prev : out)
            if (prev.grades == grades) return;
        GradedSubspace s;
        s.n = n;
        s.grades = std::move(grades);
        s.variant = variant;
        s.provenance = GradedSubspace::Provenance::augmented;
        out.push_back(std::move(s));
    };
    for (const auto& base : items) {
        const bool may_add_top = (n % 2 == 1) || all_even(base.grades);
        GradeSet with0 = base.grades;
        with0.insert(0);
        emit_aug(std::move(with0));
        if (may_add_top) {
            GradeSet with_n = base.grades;
            with_n.insert(n);
            GradeSet with_both = with_n;
            with_both.insert(0);
            emit_aug(std::move(with_n));
            emit_aug(std::move(with_both));
        }
    }
    return out;
}

std::vector<GradedSubspace> golden_listing(int n, SubspaceVariant variant) {
    if (n < 1 || n > 10)
        throw std::domain_error("golden_listing: only n in [1,10] is transcribed");

    static const std::vector<std::vector<GradeSet>> listings = {
        /* n=1 */ {{0}, {1}},
        /* n=2 */ {{0}, {2}, {1, 2}},
        /* n=3 */ {{0}, {3}, {1, 2}, {2}},
        /* n=4 */ {{0}, {4}, {1, 2}, {2}, {1, 2, 3, 4}, {2, 3}},
        /* n=5 */ {{0}, {5}, {1, 2}, {2}, {1, 2, 3, 4}, {2, 4}, {2, 3}},
        /* n=6 */
        {{0}, {6}, {1, 2}, {2}, {1, 2, 3, 4, 5, 6}, {2, 5}, {2, 4}, {1, 2, 5, 6}, {2, 3, 6}},
        /* n=7 */
        {{0}, {7}, {1, 2}, {2}, {1, 2, 3, 4, 5, 6}, {2, 6}, {2, 5}, {1, 2, 5, 6}, {2, 3, 6},
         {2, 4, 6}},
        /* n=8 */
        {{0}, {8}, {1, 2}, {2}, {1, 2, 3, 4, 5, 6, 7, 8}, {2, 7}, {2, 6}, {1, 2, 7, 8},
         {2, 3, 6, 7}, {2, 4, 6}, {1, 2, 5, 6}},
        /* n=9 */
        {{0}, {9}, {1, 2}, {2}, {1, 2, 3, 4, 5, 6, 7, 8}, {2, 8}, {2, 7}, {1, 2, 7, 8},
         {2, 3, 6, 7}, {2, 4, 6, 8}, {1, 2, 5, 6}, {2, 6}},
        /* n=10 */
        {{0}, {10}, {1, 2}, {2}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, {2, 9}, {2, 8},
         {1, 2, 9, 10}, {2, 3, 6, 7, 10}, {2, 4, 6, 8}, {1, 2, 5, 6, 9, 10}, {2, 6}},
    };

    std::vector<GradedSubspace> out;
    int item = 0;
    for (const GradeSet& grades : listings[static_cast<std::size_t>(n) - 1])
        out.push_back(make_item(n, variant, ++item, grades));
    return out;
}

bool closure_by_prediction(const GradedSubspace& s) {
    for (int k : s.grades)
        for (int l : s.grades)
            for (int m : kernel_grades(s.n, k, l, BracketKind::commutator)) {
                if (!s.grades.count(m)) return false;
                if (s.variant == SubspaceVariant::complex_lie &&
                    ((coefficient_phase(k) + coefficient_phase(l) - coefficient_phase(m)) % 2) != 0)
                    return false;
            }
    return true;
}

const ClosureOracle::PairScan& ClosureOracle::scan(int k, int l) const {
    const auto key = std::make_pair(k, l);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    const auto left = blades_of_grade(sig_.n(), k);
    const auto right = blades_of_grade(sig_.n(), l);
    const std::uint64_t pairs =
        static_cast<std::uint64_t>(left.size()) * static_cast<std::uint64_t>(right.size());
    if (pairs > budget_)
        throw resource_error("closure scan: " + std::to_string(pairs) +
                             " blade pairs exceed the budget of " + std::to_string(budget_));

    const Gaussian ca =
        variant_ == SubspaceVariant::complex_lie ? coefficient_a(k) : Gaussian(1);
    const Gaussian cb =
        variant_ == SubspaceVariant::complex_lie ? coefficient_a(l) : Gaussian(1);

    PairScan result;
    for (const BladeBits a : left) {
        const Multivector ma = Multivector::basis_blade(a, ca);
        for (const BladeBits b : right) {
            const Multivector mb = Multivector::basis_blade(b, cb);
            const Multivector br = commutator(sig_, ma, mb);
            for (const auto& [bits, c] : br.terms()) {
                const int m = grade(bits);
                result.grades.insert(m);
                if (variant_ == SubspaceVariant::complex_lie) {
                    const bool real_multiple =
                        coefficient_phase(m) ? c.is_imaginary() : c.is_real();
                    if (!real_multiple) result.phase_ok = false;
                }
            }
        }
    }
    return cache_.emplace(key, std::move(result)).first->second;
}

bool ClosureOracle::closed(const GradeSet& grades) const {
    for (int k : grades)
        for (int l : grades) {
            const PairScan& ps = scan(k, l);
            if (!ps.phase_ok) return false;
            for (int m : ps.grades)
                if (!grades.count(m)) return false;
        }
    return true;
}

bool closure_by_bruteforce(const Signature& sig, const GradedSubspace& s, std::uint64_t budget) {
    if (sig.n() != s.n)
        throw std::domain_error("closure_by_bruteforce: signature does not match subspace");
    ClosureOracle oracle(sig, s.variant, budget);
    return oracle.closed(s.grades);
}

std::vector<EnumeratedSubspace> enumerate_closed(int n, SubspaceVariant variant, int cap) {
    if (n < 1) throw std::domain_error("enumerate_closed: n must be >= 1");
    if (n > cap)
        throw resource_error("enumerate_closed: n = " + std::to_string(n) +
                             " exceeds the enumeration cap of " + std::to_string(cap));

    const auto base = catalog(n, variant, /*augmented=*/false);
    const auto with_aug = catalog(n, variant, /*augmented=*/true);

    std::vector<EnumeratedSubspace> out;
    const std::uint32_t limit = std::uint32_t{1} << (n + 1);
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        GradedSubspace cand;
        cand.n = n;
        cand.variant = variant;
        for (int g = 0; g <= n; ++g)
            if (mask & (std::uint32_t{1} << g)) cand.grades.insert(g);
        if (!closure_by_prediction(cand)) continue;

        EnumeratedSubspace e;
        e.grades = cand.grades;
        if (cand.grades.empty()) {
            e.origin = EnumeratedSubspace::Origin::trivial;
        } else {
            e.origin = EnumeratedSubspace::Origin::extra;
            for (const auto& item : base)
                if (item.grades == cand.grades) {
                    e.origin = EnumeratedSubspace::Origin::catalog_item;
                    e.item = item.item;
                    break;
                }
            if (e.origin == EnumeratedSubspace::Origin::extra)
                for (const auto& item : with_aug)
                    if (item.provenance == GradedSubspace::Provenance::augmented &&
                        item.grades == cand.grades) {
                        e.origin = EnumeratedSubspace::Origin::augmented;
                        break;
                    }
        }
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const EnumeratedSubspace& a, const EnumeratedSubspace& b) {
        return std::lexicographical_compare(a.grades.begin(), a.grades.end(), b.grades.begin(),
                                            b.grades.end());
    });
    return out;
}

SubalgebraDiff diff_report(int n, std::uint64_t budget) {
    if (n < 1 || n > 10) throw std::domain_error("diff_report: n must be in [1,10]");

    SubalgebraDiff diff;
    const auto golden = golden_listing(n);
    const auto cat = catalog(n, SubspaceVariant::complex_lie);

    // (a) golden entries must pass blade-level closure under every split.
    for (const auto& entry : golden) {
        bool ok = true;
        for (int p = 0; p <= n && ok; ++p)
            ok = closure_by_bruteforce(Signature(p, n - p), entry, budget);
        if (!ok) diff.golden_not_closed.push_back(entry.grades);
    }

    // (b) catalog vs golden listing, as grade-set collections.
    auto grades_of = [](const std::vector<GradedSubspace>& v) {
        std::vector<GradeSet> out;
        for (const auto& s : v) out.push_back(s.grades);
        return out;
    };
    const auto golden_sets = grades_of(golden);
    const auto catalog_sets = grades_of(cat);
    for (const auto& g : catalog_sets)
        if (std::find(golden_sets.begin(), golden_sets.end(), g) == golden_sets.end())
            diff.catalog_only.push_back(g);
    for (const auto& g : golden_sets)
        if (std::find(catalog_sets.begin(), catalog_sets.end(), g) == catalog_sets.end())
            diff.golden_only.push_back(g);

    // (c) enumerated closed subsets not explained by the catalog.
    for (const auto& e : enumerate_closed(n, SubspaceVariant::complex_lie))
        if (e.origin == EnumeratedSubspace::Origin::extra) diff.extra_closed.push_back(e.grades);

    return diff;
}

} // namespace cliffrank
